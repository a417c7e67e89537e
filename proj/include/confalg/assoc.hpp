#ifndef CONFALG_ASSOC_HPP
#define CONFALG_ASSOC_HPP

#include <random>
#include <string>

#include "confalg/confmap.hpp"

namespace confalg {

/// Pass/fail with the first failing generator tuple and the nonzero
/// difference, rendered as text.
struct CheckReport {
    bool pass = true;
    std::string detail;
};

CheckReport report_zero(const ConfMap& difference, const std::string& label);

/// Associative conformal algebra: module concentrated in degree 0 with a
/// binary degree-0 multiplication.
struct AssocConfAlgebra {
    GradedModule module;
    ConfMap mult;
};

/// a_lambda(b_mu c) = (a_lambda b)_(lambda+mu) c on all generator triples.
CheckReport check_associativity(const AssocConfAlgebra& a);

/// Current algebra over a finite-dimensional associative algebra given by
/// constant structure coefficients: a_lambda b := ab, independent of lambda.
/// Throws if the input coefficients are not associative.
AssocConfAlgebra cur_algebra(
    const GradedModule& m,
    const std::map<std::vector<std::string>, std::map<std::string, Rational>>&
        consts);

struct ConformalBimodule {
    AssocConfAlgebra algebra;
    GradedModule module;
    ConfMap left;   // A (x) M -> M[lambda]
    ConfMap right;  // M (x) A -> M[lambda]
};

CheckReport check_bimodule(const ConformalBimodule& b);
ConformalBimodule adjoint_bimodule(const AssocConfAlgebra& a);

/// j-products of a binary map: a_(j) b = j! * (coefficient of L1^j),
/// a table of lambda-constant binary maps indexed by j.
using JProducts = std::map<int, ConfMap>;

JProducts j_products(const ConfMap& f);
ConfMap from_j_products(const JProducts& table, std::vector<GradedModule> sources,
                        GradedModule target, int degree);

/// Independent associativity check in terms of j-products:
/// a_(j)(b_(k) c) = sum_p binom(j,p) (a_(p) b)_(j+k-p) c.
CheckReport check_j_associativity(const AssocConfAlgebra& a);

/// Hochschild cochain: an element of M (read modulo the image of D) when
/// n = 0, a conformal sesquilinear map A^n -> M otherwise.
struct Cochain {
    int n = 0;
    ModElement elem;  // used when n == 0
    ConfMap map;      // used when n >= 1

    friend bool operator==(const Cochain&, const Cochain&) = default;
    bool is_zero() const { return n == 0 ? elem.is_zero() : map.is_zero(); }
};

Cochain hochschild_delta(const ConformalBimodule& b, const Cochain& c);
bool is_cocycle(const ConformalBimodule& b, const Cochain& c);
bool is_coboundary_of(const ConformalBimodule& b, const Cochain& c,
                      const Cochain& d);

/// Ranks of the differential restricted to the cochains whose table
/// entries have D-degree <= dmax and each lambda-degree <= lmax. This is
/// a finite-dimensional slice, not the full cohomology.
struct DeltaRanks {
    long domain_dim = 0;
    long rank = 0;
    long kernel_dim = 0;
};

DeltaRanks truncated_delta_ranks(const ConformalBimodule& b, int n, int dmax,
                                 int lmax);

/// Basis of the kernel of the restricted differential, as cochains.
std::vector<Cochain> truncated_kernel_basis(const ConformalBimodule& b, int n,
                                            int dmax, int lmax);

/// Uniform small-integer coefficients over the truncation basis.
Cochain random_cochain(const GradedModule& algebra_module,
                       const GradedModule& coeff_module, int n, int dmax,
                       int lmax, std::mt19937& rng);

/// Exact rank of a rational matrix given as rows; shared by every rank
/// computation in the project.
long rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace confalg

#endif
