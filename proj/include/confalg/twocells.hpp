#ifndef CONFALG_TWOCELLS_HPP
#define CONFALG_TWOCELLS_HPP

#include "confalg/ainf.hpp"

namespace confalg {

/// Homotopy structure concentrated in degrees 0 and 1, stored over one
/// combined module. The binary product vanishes on two degree-1 inputs
/// and the ternary product is supported on degree-0 triples for degree
/// reasons, so those constraints can never be violated by construction.
struct TwoTermAInf {
    GradedModule module;  // generators of degree 0 and 1 only
    ConfMap beta;         // arity 1, degree -1
    ConfMap mu2;          // arity 2, degree 0
    ConfMap mu3;          // arity 3, degree 1

    friend bool operator==(const TwoTermAInf&, const TwoTermAInf&) = default;
};

/// Labelled per-condition verdicts; detail carries the first failure.
struct ItemizedReport {
    bool pass = true;
    std::vector<std::pair<std::string, CheckReport>> items;
    std::string detail;

    void add(const std::string& label, CheckReport r);
};

AInfStructure to_ainf(const TwoTermAInf& x);
/// Throws unless the structure is concentrated in degrees 0 and 1 with
/// products of arity at most 3.
TwoTermAInf two_term_from_ainf(const AInfStructure& s);

/// The nine defining conditions, each computed as the matching
/// degree-pattern slice of the general higher associativity defect.
ItemizedReport check_two_term(const TwoTermAInf& x);

struct TwoTermMorphism {
    TwoTermAInf src, dst;
    ConfMap f;   // arity 1, degree 0: both components at once
    ConfMap f2;  // arity 2, degree 1
};

ItemizedReport check_morphism(const TwoTermMorphism& m);
TwoTermMorphism identity_morphism(const TwoTermAInf& x);
/// g after f; throws on endpoint mismatch.
TwoTermMorphism compose_morphisms(const TwoTermMorphism& g,
                                  const TwoTermMorphism& f);

/// An algebra, a bimodule over it and a degree-(n+1) cocycle: the data
/// classifying skeletal n-term structures.
struct SkeletalData {
    ConformalBimodule bimodule;
    int n = 2;
    Cochain theta;  // arity n + 1
};

/// Structure on "a."-prefixed algebra generators in degree 0 and
/// "m."-prefixed module generators in degree n - 1, with mu_2 the
/// multiplication and both actions and mu_{n+1} = theta. Throws when
/// theta is not a cocycle.
AInfStructure skeletal_from_cocycle(const SkeletalData& d);
/// Inverse of the above; expects the canonical prefixes and a structure
/// whose only products sit in arities 2 and n + 1.
SkeletalData cocycle_from_skeletal(const AInfStructure& s);

/// Adds the coboundary of sigma (arity n over the combined module, with
/// values in the degree n - 1 part) to the top product.
AInfStructure apply_equivalence(const AInfStructure& skeletal,
                                const ConfMap& sigma);

/// Category internal to the module category, with a sesquilinear product
/// functor and an associator. Cell composition is forced by linearity
/// and the unit laws (g after f equals f + g - iota(t(f))), so it is not
/// stored.
struct ConfTwoAlgebra {
    GradedModule c0, c1;  // all generators in degree 0
    ConfMap s, t, iota;   // arity 1, degree 0
    ConfMap pi0;          // c0 x c0 -> c0
    ConfMap pi1;          // c1 x c1 -> c1
    ConfMap assoc;        // c0 x c0 x c0 -> c1

    friend bool operator==(const ConfTwoAlgebra&, const ConfTwoAlgebra&) = default;
};

/// Unit laws, functoriality of the product, associator endpoints and the
/// pentagon, reported item by item.
ItemizedReport check_two_algebra(const ConfTwoAlgebra& c);

struct TwoAlgMorphism {
    ConfTwoAlgebra src, dst;
    ConfMap f0, f1;  // object and cell components
    ConfMap fnat;    // c0 x c0 -> dst.c1, the structure cells
};

ItemizedReport check_two_alg_morphism(const TwoAlgMorphism& m);
TwoAlgMorphism identity_two_alg_morphism(const ConfTwoAlgebra& c);
TwoAlgMorphism compose_two_alg_morphisms(const TwoAlgMorphism& g,
                                         const TwoAlgMorphism& f);

/// Throws when the input fails any condition other than the last one;
/// that one is equivalent to the pentagon of the image, so corrupted
/// inputs stay constructible for the biconditional tests.
ConfTwoAlgebra functor_s(const TwoTermAInf& x);

/// Splits c1 as iota(c0) + a free complement spanned by the generators
/// killed by s; the basis-change determinant must be a nonzero rational.
/// Inputs that do not split this way are rejected.
TwoTermAInf functor_t(const ConfTwoAlgebra& c);

/// The isomorphism from functor_s(functor_t(c)) back to c: identity on
/// objects, 1_a + m on cells, with identity structure cells.
TwoAlgMorphism upsilon(const ConfTwoAlgebra& c);

}  // namespace confalg

#endif
