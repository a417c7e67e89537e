#ifndef CONFALG_AINF_HPP
#define CONFALG_AINF_HPP

#include "confalg/assoc.hpp"

namespace confalg {

/// Homotopy associative conformal structure: mults[k] has arity k and
/// degree k-2. Absent keys mean the zero map.
struct AInfStructure {
    GradedModule module;
    std::map<int, ConfMap> mults;

    ConfMap mult(int k) const;
    friend bool operator==(const AInfStructure&, const AInfStructure&) = default;
};

/// The shifted variant: every structure map has degree -1.
struct AInf1Structure {
    GradedModule module;
    std::map<int, ConfMap> mults;

    ConfMap mult(int k) const;
    friend bool operator==(const AInf1Structure&, const AInf1Structure&) = default;
};

/// Sum of conformal sesquilinear maps of one common map degree, indexed
/// by arity: the general cochain the graded Lie bracket acts on.
struct GradedCochain {
    GradedModule module;
    int degree = 0;
    std::map<int, ConfMap> parts;  // arity -> map, zero parts omitted

    ConfMap part(int k) const;
    void add_part(const ConfMap& f);
    bool is_zero() const;
    friend bool operator==(const GradedCochain&, const GradedCochain&) = default;
};

/// The arity-n signed combination of insertions whose vanishing is the
/// n-th higher associativity identity.
ConfMap ainf_defect(const AInfStructure& s, int n);

CheckReport check_ainf(const AInfStructure& s, int up_to_n);
CheckReport check_ainf1(const AInf1Structure& s, int up_to_n);

AInfStructure from_assoc(const AssocConfAlgebra& a);
/// Differential graded associative conformal algebra: d of degree -1 with
/// d^2 = 0 and the graded Leibniz rule. Verified, witness on failure.
AInfStructure dga_to_ainf(const GradedModule& m, const ConfMap& d,
                          const ConfMap& mult);

AInf1Structure shift(const AInfStructure& s);
AInfStructure unshift(const AInf1Structure& s);

GradedCochain gla_bracket(const GradedCochain& a, const GradedCochain& b);

bool is_maurer_cartan(const AInf1Structure& s, int up_to_n);

/// delta_rho(phi) = (-1)^{n-1} [[rho, phi]] with n the cochain degree,
/// n - 1 = -deg(phi).
GradedCochain cohomology_delta(const AInf1Structure& s, const GradedCochain& phi);

/// Representation: actions[k] holds one map per position of the M slot,
/// actions[k][t-1] : A x ... x M (slot t) x ... x A -> M of degree k-2.
struct AInfRepresentation {
    AInfStructure base;
    GradedModule module;
    std::map<int, std::vector<ConfMap>> actions;

    ConfMap action(int k, int t) const;
};

AInfRepresentation adjoint_representation(const AInfStructure& s);

CheckReport check_representation(const AInfRepresentation& r, int up_to_n);

/// Structure on A + M with generators renamed "a.<gen>" and "m.<gen>".
AInfStructure semidirect(const AInfStructure& s, const AInfRepresentation& r);

/// Differential of C^n(A, M): phi lives over shift(semidirect(s, r)) and
/// must be supported on A-only inputs with M values. Throws otherwise;
/// the result is returned in the same subspace.
GradedCochain restrict_to_coefficients(const AInfStructure& s,
                                       const AInfRepresentation& r,
                                       const GradedCochain& phi);

}  // namespace confalg

#endif
