#ifndef CONFALG_LIE_HPP
#define CONFALG_LIE_HPP

#include "confalg/ainf.hpp"

namespace confalg {

/// Lie conformal algebra: module concentrated in degree 0 with a skew
/// bracket satisfying conformal Jacobi.
struct LieConfAlgebra {
    GradedModule module;
    ConfMap bracket;
};

CheckReport check_lie(const LieConfAlgebra& l);

LieConfAlgebra virasoro();

/// Current Lie conformal algebra over a finite-dimensional Lie algebra
/// given by constant structure coefficients. Throws if the coefficients
/// fail antisymmetry or Jacobi.
LieConfAlgebra cur_lie(
    const GradedModule& m,
    const std::map<std::vector<std::string>, std::map<std::string, Rational>>&
        consts);

/// [a_lambda b] := a_lambda b - b_{-D-lambda} a.
LieConfAlgebra skew_symmetrize_assoc(const AssocConfAlgebra& a);

struct ConformalLModule {
    LieConfAlgebra algebra;
    GradedModule module;
    ConfMap action;  // L (x) M -> M[lambda]
};

CheckReport check_lmodule(const ConformalLModule& m);
ConformalLModule adjoint_lmodule(const LieConfAlgebra& l);

/// Shuffle-sum pre-Lie product on skew cochains and the induced degree -1
/// graded Lie bracket [f, g] = f <> g - (-1)^{(m-1)(n-1)} g <> f.
/// cnr_bracket throws unless both inputs are skew-symmetric.
ConfMap cnr_diamond(const ConfMap& f, const ConfMap& g);
ConfMap cnr_bracket(const ConfMap& f, const ConfMap& g);

/// Differential of the Lie conformal cochain complex with coefficients in
/// a conformal module. Both the bracket-with-the-structure-map route and
/// the explicit term-by-term formula are evaluated; a mismatch throws.
Cochain lie_delta(const ConformalLModule& m, const Cochain& c);

/// Homotopy Lie conformal structure: brackets[k] has arity k, degree k-2
/// and is skew-symmetric.
struct LInfStructure {
    GradedModule module;
    std::map<int, ConfMap> brackets;

    ConfMap bracket(int k) const;
    friend bool operator==(const LInfStructure&, const LInfStructure&) = default;
};

/// Shifted variant: every bracket has degree -1 and is graded symmetric.
struct LInf1Structure {
    GradedModule module;
    std::map<int, ConfMap> brackets;

    ConfMap bracket(int k) const;
    friend bool operator==(const LInf1Structure&, const LInf1Structure&) = default;
};

CheckReport check_linf(const LInfStructure& s, int up_to_n);
CheckReport check_linf1(const LInf1Structure& s, int up_to_n);

LInf1Structure shift_linf(const LInfStructure& s);
LInfStructure unshift_linf(const LInf1Structure& s);

/// Graded Lie bracket on graded symmetric cochains, built from the
/// shuffle-sum insertion product. Throws on non-symmetric parts.
GradedCochain sym_gla_bracket(const GradedCochain& a, const GradedCochain& b);

/// l_k = skew symmetrization of mu_k (no 1/k! normalization), so for an
/// associative input l_2(a, b) = ab - ba.
LInfStructure skew_symmetrize_ainf(const AInfStructure& s);

}  // namespace confalg

#endif
