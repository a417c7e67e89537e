#ifndef CONFALG_MANIFEST_HPP
#define CONFALG_MANIFEST_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "confalg/lie.hpp"
#include "confalg/transfer.hpp"
#include "confalg/twocells.hpp"

namespace confalg {

/// On-disk description of modules, maps and named structure bundles.
/// Everything is exact: polynomials are stored as strings in the surface
/// syntax of Poly::parse, so rationals never degrade to floats. Modules
/// and maps are referenced by name; parse_manifest resolves and validates
/// every reference.
struct Manifest {
    std::map<std::string, std::string> metadata;
    std::vector<std::pair<std::string, GradedModule>> modules;
    std::vector<std::pair<std::string, ConfMap>> maps;
    // kind-specific fields kept as JSON; see the manifest_* extractors
    std::vector<std::pair<std::string, nlohmann::json>> structures;
    // module names of each map's endpoints, keyed by map name
    std::map<std::string, std::pair<std::vector<std::string>, std::string>>
        map_endpoints;

    bool has_module(const std::string& name) const;
    bool has_map(const std::string& name) const;
    const GradedModule& module(const std::string& name) const;
    const ConfMap& map(const std::string& name) const;
    const nlohmann::json& structure(const std::string& name) const;
    /// Name of the first structure of the given kind, or "" if none.
    std::string first_of_kind(const std::string& kind) const;

    void add_module(const std::string& name, const GradedModule& m);
    /// Registers the map under `name`; sources and target must already be
    /// present as modules with the given names.
    void add_map(const std::string& name, const ConfMap& f,
                 const std::vector<std::string>& source_names,
                 const std::string& target_name);
    /// Returns the name of a module equal to m, adding it under `hint`
    /// (suffixed if taken) when absent.
    std::string ensure_module(const GradedModule& m, const std::string& hint);
    void add_structure(const std::string& name, nlohmann::json fields);
};

Manifest parse_manifest_text(const std::string& text);
Manifest parse_manifest(const std::string& path);
std::string serialize_manifest(const Manifest& m);
void write_manifest(const Manifest& m, const std::string& path);

// Typed extraction by structure name; throws std::invalid_argument with a
// location message on dangling references or shape mismatches.
AssocConfAlgebra manifest_assoc(const Manifest& m, const std::string& name);
LieConfAlgebra manifest_lie(const Manifest& m, const std::string& name);
AInfStructure manifest_ainf(const Manifest& m, const std::string& name);
LInfStructure manifest_linf(const Manifest& m, const std::string& name);
TwoTermAInf manifest_two_term(const Manifest& m, const std::string& name);
ConfTwoAlgebra manifest_two_algebra(const Manifest& m, const std::string& name);
Contraction manifest_contraction(const Manifest& m, const std::string& name);
ConformalBimodule manifest_bimodule(const Manifest& m, const std::string& name);
/// A "representation" entry with an "actions" table over an ainf base.
AInfRepresentation manifest_representation(const Manifest& m,
                                           const std::string& name);
/// A "representation" entry with a single "action" over a lie base.
ConformalLModule manifest_lmodule(const Manifest& m, const std::string& name);
Cochain manifest_cochain(const Manifest& m, const std::string& name);

// Builders used for --out files.
void manifest_put_ainf(Manifest& m, const std::string& name,
                       const AInfStructure& s);
void manifest_put_linf(Manifest& m, const std::string& name,
                       const LInfStructure& s);
void manifest_put_lie(Manifest& m, const std::string& name,
                      const LieConfAlgebra& l);
void manifest_put_two_term(Manifest& m, const std::string& name,
                           const TwoTermAInf& x);
void manifest_put_two_algebra(Manifest& m, const std::string& name,
                              const ConfTwoAlgebra& c);
void manifest_put_cochain(Manifest& m, const std::string& name,
                          const GradedModule& algebra_module,
                          const GradedModule& coeff_module, const Cochain& c);

}  // namespace confalg

#endif
