#ifndef CONFALG_CONFMAP_HPP
#define CONFALG_CONFMAP_HPP

#include <map>
#include <string>
#include <vector>

#include "confalg/module.hpp"

namespace confalg {

/// Permutation of {1..k}, stored as images: perm[i-1] = sigma(i).
using Permutation = std::vector<int>;

Permutation identity_permutation(int k);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // sigma then tau
int sgn(const Permutation& sigma);
/// Koszul sign of reordering x_1..x_k (degrees given) into
/// x_{sigma(1)}..x_{sigma(k)}.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

/// Conformal sesquilinear k-ary map, stored by structure constants on
/// generator tuples. Values on general elements follow from the
/// evaluation rules, so sesquilinearity can never be violated.
///
/// Each slot may draw from its own module (bimodule actions, transfer
/// data and mixed maps need that); the common case has all slots equal.
struct ConfMap {
    std::vector<GradedModule> sources;  // size = arity
    GradedModule target;
    int degree = 0;
    // key: tuple of source generator names; value: target gen -> Poly in
    // D, L1..L_{k-1}. Zero polynomials and empty values are never stored.
    std::map<std::vector<std::string>, std::map<std::string, Poly>> table;

    int arity() const { return static_cast<int>(sources.size()); }
    bool is_zero() const { return table.empty(); }

    void add_entry(const std::vector<std::string>& key, const std::string& gen,
                   const Poly& p);
    void set_entry(const std::vector<std::string>& key, const std::string& gen,
                   const Poly& p);
    PolyValue value_on(const std::vector<std::string>& key) const;

    /// Checks the degree invariant: every target generator in the table
    /// has degree = sum of key degrees + map degree, and no out-of-range
    /// lambda variable occurs. Throws on violation.
    void validate() const;

    ConfMap& operator+=(const ConfMap& o);
    ConfMap& operator-=(const ConfMap& o);
    friend ConfMap operator+(ConfMap a, const ConfMap& b) { return a += b; }
    friend ConfMap operator-(ConfMap a, const ConfMap& b) { return a -= b; }
    friend ConfMap operator-(const ConfMap& a);
    friend ConfMap operator*(const Rational& c, const ConfMap& f);
    friend bool operator==(const ConfMap&, const ConfMap&) = default;

    static ConfMap zero(std::vector<GradedModule> sources, GradedModule target,
                        int degree);
    /// Arity-1 degree-0 identity on m.
    static ConfMap identity(const GradedModule& m);
};

/// Sesquilinear evaluation on module elements. Arguments must be
/// homogeneous. A coefficient p(D) on slot j < k contributes the scalar
/// p(-L_j); on slot k it multiplies the output by p(D + L1+...+L_{k-1}).
PolyValue evaluate(const ConfMap& f, const std::vector<ModElement>& args);

/// Simultaneous insertion: inners[j] fills slot j+1 of outer, its
/// arguments occupying a consecutive block of the composite's slots.
ConfMap multi_insert(const ConfMap& outer, const std::vector<ConfMap>& inners);

/// Single insertion into slot i (1-based); the composition product
/// underlying every differential and bracket here.
ConfMap insert(const ConfMap& outer, int i, const ConfMap& inner);

/// Sum of insert(f, i, g) over all slots i of f.
ConfMap diamond(const ConfMap& f, const ConfMap& g);

/// Value on (x_1..x_k) equals f on (x_{sigma(1)}..x_{sigma(k)}), with
/// slot j assigned L_j for j < k and slot k assigned -(L1+...+L_{k-1})-D.
/// No sgn or Koszul factors; callers add those.
ConfMap permute(const ConfMap& f, const Permutation& sigma);

/// Rename every generator of a map's endpoints through a prefix table,
/// used to embed algebra or module data into a larger direct-sum module.
ConfMap relabel(const ConfMap& f, const GradedModule& big,
                const std::vector<std::string>& source_prefixes,
                const std::string& target_prefix);

enum class SymMode { sym, skew };

/// Sum over S_k of [sgn]*koszul*permute(f, sigma); sgn only in skew mode.
ConfMap symmetrize(const ConfMap& f, SymMode mode);

bool is_symmetric(const ConfMap& f, SymMode mode);

}  // namespace confalg

#endif
