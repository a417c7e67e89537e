#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "confalg/confmap.hpp"

using namespace confalg;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

GradedModule vir_module() { return GradedModule{{{"l", 0}}}; }

// Virasoro bracket pi(l,l) = (D + 2 L1) l.
ConfMap vir_bracket() {
    GradedModule m = vir_module();
    ConfMap pi = ConfMap::zero({m, m}, m, 0);
    pi.set_entry({"l", "l"}, "l", P("D + 2*L1"));
    return pi;
}

Poly random_poly(std::mt19937& rng, int lmax, int dmax) {
    std::uniform_int_distribution<int> nterms(0, 3), coef(-4, 4), expo(0, dmax);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Poly term(static_cast<long>(coef(rng)));
        term *= Poly::D().pow(expo(rng));
        for (int i = 1; i <= lmax; ++i) term *= Poly::L(i).pow(expo(rng));
        p += term;
    }
    return p;
}

// Random map of the given arity and degree on a module with generators in
// degrees 0 and 1, respecting the degree invariant on every entry.
ConfMap random_map(std::mt19937& rng, const GradedModule& m, int arity,
                   int degree) {
    std::vector<GradedModule> src(arity, m);
    ConfMap f = ConfMap::zero(src, m, degree);
    size_t r = m.rank();
    std::vector<size_t> idx(arity, 0);
    for (;;) {
        std::vector<std::string> key(arity);
        int dsum = 0;
        for (int j = 0; j < arity; ++j) {
            key[j] = m.generators[idx[j]].first;
            dsum += m.generators[idx[j]].second;
        }
        for (const auto& [g, dg] : m.generators)
            if (dg == dsum + degree) f.set_entry(key, g, random_poly(rng, arity - 1, 2));
        int j = arity - 1;
        while (j >= 0 && ++idx[j] == r) {
            idx[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    f.validate();
    return f;
}

}  // namespace

TEST_CASE("sesquilinear evaluation on Virasoro") {
    ConfMap pi = vir_bracket();
    ModElement l = ModElement::generator("l");
    PolyValue v = evaluate(pi, {l, l});
    CHECK(v.coords.at("l") == P("D + 2*L1"));
    // (pa)_lambda b = -lambda a_lambda b.
    PolyValue w = evaluate(pi, {apply_partial(l), l});
    CHECK(w.coords.at("l") == P("-L1") * P("D + 2*L1"));
    // last-slot rule: a_lambda (pb) = (p + lambda) a_lambda b.
    PolyValue u = evaluate(pi, {l, apply_partial(l)});
    CHECK(u.coords.at("l") == P("(D + L1)*(D + 2*L1)"));
    CHECK(evaluate(pi, {ModElement{}, l}).is_zero());
    CHECK_THROWS(evaluate(pi, {l}));
}

TEST_CASE("module basics") {
    GradedModule m{{{"a", 0}, {"b", 1}}};
    CHECK(degree_shift(m, 1).degree_of("a") == 1);
    CHECK(degree_shift(degree_shift(m, 1), -1) == m);
    ModElement e = ModElement::generator("a");
    CHECK(apply_partial(e).coords.at("a") == Poly::D());
    CHECK(apply_partial(ModElement{}).is_zero());
    ModElement mix = e + ModElement::generator("b");
    CHECK(!mix.homogeneous_degree(m, nullptr));
    CHECK_THROWS(GradedModule({{"a", 0}, {"a", 1}}));
}

TEST_CASE("insertion on Virasoro") {
    ConfMap pi = vir_bracket();
    ConfMap in1 = insert(pi, 1, pi);
    ConfMap in2 = insert(pi, 2, pi);
    CHECK(in1.arity() == 3);
    CHECK(in1.table.at({"l", "l", "l"}).at("l") ==
          P("(L1 - L2)*(D + 2*L1 + 2*L2)"));
    CHECK(in2.table.at({"l", "l", "l"}).at("l") ==
          P("(D + L1 + 2*L2)*(D + 2*L1)"));
    CHECK(in2.table.at({"l", "l", "l"}).at("l") ==
          P("D^2 + 3*L1*D + 2*L2*D + 2*L1^2 + 4*L1*L2"));

    ConfMap z = ConfMap::zero(pi.sources, pi.target, 0);
    CHECK(insert(pi, 1, z).is_zero());
    CHECK(diamond(pi, z).is_zero());

    ConfMap id = ConfMap::identity(vir_module());
    CHECK(insert(pi, 1, id) == pi);
    CHECK(insert(pi, 2, id) == pi);
    CHECK(multi_insert(pi, {id, id}) == pi);
    CHECK(multi_insert(pi, {id, pi}) == insert(pi, 2, pi));
    CHECK(diamond(id, pi) == pi);
}

TEST_CASE("Virasoro Jacobi identity") {
    ConfMap pi = vir_bracket();
    // [a_l1 [b_l2 c]] = [[a_l1 b]_(l1+l2) c] + [b_l2 [a_l1 c]].
    ConfMap lhs = insert(pi, 2, pi);
    ConfMap rhs = insert(pi, 1, pi) + permute(insert(pi, 2, pi), {2, 1, 3});
    CHECK(lhs == rhs);
}

TEST_CASE("permute with the dagger assignment") {
    ConfMap pi = vir_bracket();
    ConfMap swapped = permute(pi, {2, 1});
    CHECK(swapped.table.at({"l", "l"}).at("l") == P("-D - 2*L1"));
    CHECK(swapped == -pi);
    CHECK(is_symmetric(pi, SymMode::skew));
    CHECK(!is_symmetric(pi, SymMode::sym));
    CHECK(permute(pi, {1, 2}) == pi);
    ConfMap z = ConfMap::zero(pi.sources, pi.target, 0);
    CHECK(permute(z, {2, 1}).is_zero());
    CHECK(is_symmetric(z, SymMode::skew));
    CHECK(is_symmetric(z, SymMode::sym));
}

TEST_CASE("symmetrize") {
    ConfMap pi = vir_bracket();
    // pi is already skew, so skew symmetrization gives 2! * pi.
    CHECK(symmetrize(pi, SymMode::skew) == Rational(2) * pi);
    CHECK(symmetrize(pi, SymMode::sym).is_zero());
    std::mt19937 rng(42);
    GradedModule m{{{"a", 0}, {"b", 1}}};
    for (int trial = 0; trial < 10; ++trial) {
        ConfMap f = random_map(rng, m, 2, 0);
        CHECK(is_symmetric(symmetrize(f, SymMode::skew), SymMode::skew));
        CHECK(is_symmetric(symmetrize(f, SymMode::sym), SymMode::sym));
        ConfMap g = random_map(rng, m, 3, 1);
        CHECK(is_symmetric(symmetrize(g, SymMode::skew), SymMode::skew));
        CHECK(is_symmetric(symmetrize(g, SymMode::sym), SymMode::sym));
    }
}

TEST_CASE("permute is a right action") {
    std::mt19937 rng(4242);
    GradedModule m{{{"a", 0}, {"b", 1}}};
    std::vector<Permutation> perms;
    Permutation p = identity_permutation(3);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (int trial = 0; trial < 5; ++trial) {
        ConfMap f = random_map(rng, m, 3, trial % 3 - 1);
        for (const auto& s : perms)
            for (const auto& t : perms)
                CHECK(permute(permute(f, s), t) == permute(f, compose(s, t)));
    }
}

TEST_CASE("operad-like identities") {
    std::mt19937 rng(99);
    GradedModule m{{{"a", 0}, {"b", 1}}};
    std::uniform_int_distribution<int> ar(1, 3), dg(-1, 1);
    for (int trial = 0; trial < 25; ++trial) {
        ConfMap f = random_map(rng, m, ar(rng), dg(rng));
        ConfMap g = random_map(rng, m, ar(rng), dg(rng));
        ConfMap h = random_map(rng, m, ar(rng), dg(rng));
        int k = f.arity(), l = g.arity();
        // Nested: (f <>_i g) <>_{i+j-1} h = f <>_i (g <>_j h).
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= l; ++j)
                CHECK(insert(insert(f, i, g), i + j - 1, h) ==
                      insert(f, i, insert(g, j, h)));
        // Disjoint: (f <>_i g) <>_{j+l-1} h = (-1)^{|g||h|} (f <>_j h) <>_i g.
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                Rational s(g.degree * h.degree % 2 == 0 ? 1 : -1);
                CHECK(insert(insert(f, i, g), j + l - 1, h) ==
                      s * insert(insert(f, j, h), i, g));
            }
    }
}

TEST_CASE("multi insert degree bookkeeping and sign") {
    std::mt19937 rng(7);
    GradedModule m{{{"a", 0}, {"b", 1}}};
    for (int trial = 0; trial < 10; ++trial) {
        ConfMap f = random_map(rng, m, 2, 0);
        ConfMap g = random_map(rng, m, 2, 1);
        ConfMap h = random_map(rng, m, 2, -1);
        ConfMap c = multi_insert(f, {g, h});
        CHECK(c.degree == f.degree + g.degree + h.degree);
        CHECK(c.arity() == 4);
        // Simultaneous insertion agrees with inserting the left block
        // first and the right block into the shifted slot; the opposite
        // order differs by the Koszul sign (-1)^{|g||h|}.
        CHECK(c == insert(insert(f, 1, g), 3, h));
        Rational s(g.degree * h.degree % 2 == 0 ? 1 : -1);
        CHECK(c == s * insert(insert(f, 2, h), 1, g));
    }
}

TEST_CASE("validate catches bad tables") {
    GradedModule m{{{"a", 0}, {"b", 1}}};
    ConfMap f = ConfMap::zero({m, m}, m, 0);
    f.set_entry({"a", "a"}, "b", Poly::one());  // degree 1 target on degree 0 input
    CHECK_THROWS(f.validate());
    ConfMap g = ConfMap::zero({m, m}, m, 0);
    g.set_entry({"a", "a"}, "a", P("L2"));  // out-of-range lambda
    CHECK_THROWS(g.validate());
}
