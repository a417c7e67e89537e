#include "confalg/twocells.hpp"

#include <stdexcept>

namespace confalg {

namespace {

// Copy a table verbatim onto new endpoints; callers pick modules whose
// generator degrees make the result consistent, and validate() guards it.
ConfMap rebuild(const ConfMap& f, std::vector<GradedModule> sources,
                GradedModule target, int degree) {
    ConfMap r = ConfMap::zero(std::move(sources), std::move(target), degree);
    for (const auto& [key, val] : f.table)
        for (const auto& [g, p] : val) r.add_entry(key, g, p);
    r.validate();
    return r;
}

// The part of the table whose key degrees match the pattern.
ConfMap slice(const ConfMap& f, const std::vector<int>& pattern) {
    ConfMap r = ConfMap::zero(f.sources, f.target, f.degree);
    for (const auto& [key, val] : f.table) {
        bool match = true;
        for (size_t i = 0; i < key.size() && match; ++i)
            match = f.sources[i].degree_of(key[i]) == pattern[i];
        if (!match) continue;
        for (const auto& [g, p] : val) r.add_entry(key, g, p);
    }
    return r;
}

bool degrees_within(const GradedModule& m, int lo, int hi) {
    for (const auto& [g, d] : m.generators)
        if (d < lo || d > hi) return false;
    return true;
}

std::string strip_prefix(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0)
        throw std::invalid_argument("expected generator name with prefix '" +
                                    prefix + "', got: " + name);
    return name.substr(prefix.size());
}

// Strip slot-wise prefixes and move the table onto flat modules.
ConfMap unrelabel(const ConfMap& f, std::vector<GradedModule> sources,
                  GradedModule target,
                  const std::vector<std::string>& source_prefixes,
                  const std::string& target_prefix) {
    ConfMap r = ConfMap::zero(std::move(sources), std::move(target), 0);
    for (const auto& [key, val] : f.table) {
        std::vector<std::string> nk(key.size());
        for (size_t i = 0; i < key.size(); ++i)
            nk[i] = strip_prefix(key[i], source_prefixes[i]);
        for (const auto& [g, p] : val)
            r.add_entry(nk, strip_prefix(g, target_prefix), p);
    }
    r.validate();
    return r;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly::one();
    if (n == 1) return m[0][0];
    Poly d;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        Poly term = m[0][j] * poly_det(minor);
        if (j % 2 == 0)
            d += term;
        else
            d -= term;
    }
    return d;
}

std::vector<std::vector<Poly>> poly_adjugate(
    const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Poly>> minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Poly> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Poly cof = poly_det(minor);
            adj[i][j] = (i + j) % 2 == 0 ? cof : -cof;
        }
    return adj;
}

// Composition correction: iota(t(x)), shared by every pasted-cell
// equation below.
ConfMap iota_t(const ConfTwoAlgebra& c, const ConfMap& x) {
    return insert(c.iota, 1, insert(c.t, 1, x));
}

}  // namespace

void ItemizedReport::add(const std::string& label, CheckReport r) {
    if (!r.pass && pass) {
        pass = false;
        detail = "(" + label + ") " + r.detail;
    }
    items.emplace_back(label, std::move(r));
}

AInfStructure to_ainf(const TwoTermAInf& x) {
    AInfStructure s;
    s.module = x.module;
    if (!x.beta.is_zero()) s.mults[1] = x.beta;
    if (!x.mu2.is_zero()) s.mults[2] = x.mu2;
    if (!x.mu3.is_zero()) s.mults[3] = x.mu3;
    return s;
}

TwoTermAInf two_term_from_ainf(const AInfStructure& s) {
    if (!degrees_within(s.module, 0, 1))
        throw std::invalid_argument(
            "two_term_from_ainf: generators outside degrees 0 and 1");
    for (const auto& [k, f] : s.mults)
        if (k > 3 && !f.is_zero())
            throw std::invalid_argument(
                "two_term_from_ainf: nonzero product of arity " +
                std::to_string(k));
    TwoTermAInf x;
    x.module = s.module;
    x.beta = s.mult(1);
    x.mu2 = s.mult(2);
    x.mu3 = s.mult(3);
    return x;
}

ItemizedReport check_two_term(const TwoTermAInf& x) {
    ItemizedReport rep;
    const GradedModule& m = x.module;
    std::vector<GradedModule> one{m}, two{m, m}, three{m, m, m};
    if (!degrees_within(m, 0, 1) || x.beta.sources != one ||
        x.beta.target != m || x.beta.degree != -1 || x.mu2.sources != two ||
        x.mu2.target != m || x.mu2.degree != 0 || x.mu3.sources != three ||
        x.mu3.target != m || x.mu3.degree != 1) {
        rep.pass = false;
        rep.detail = "shape mismatch in the two-term data";
        return rep;
    }
    try {
        x.beta.validate();
        x.mu2.validate();
        x.mu3.validate();
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.detail = e.what();
        return rep;
    }

    AInfStructure s = to_ainf(x);
    ConfMap d2 = ainf_defect(s, 2);
    ConfMap d3 = ainf_defect(s, 3);
    ConfMap d4 = ainf_defect(s, 4);

    rep.add("i", report_zero(slice(x.mu2, {1, 1}), "product of two cells"));
    rep.add("ii", report_zero(slice(d2, {0, 1}), "beta vs left action"));
    rep.add("iii", report_zero(slice(d2, {1, 0}), "beta vs right action"));
    rep.add("iv", report_zero(slice(d2, {1, 1}), "beta balance"));
    rep.add("v", report_zero(slice(d3, {0, 0, 0}), "associator boundary"));
    rep.add("vi", report_zero(slice(d3, {0, 0, 1}), "right cell slot"));
    rep.add("vii", report_zero(slice(d3, {0, 1, 0}), "middle cell slot"));
    rep.add("viii", report_zero(slice(d3, {1, 0, 0}), "left cell slot"));
    rep.add("ix", report_zero(slice(d4, {0, 0, 0, 0}), "ternary coherence"));
    return rep;
}

ItemizedReport check_morphism(const TwoTermMorphism& m) {
    ItemizedReport rep;
    const GradedModule& a = m.src.module;
    const GradedModule& b = m.dst.module;
    if (m.f.sources != std::vector<GradedModule>{a} || m.f.target != b ||
        m.f.degree != 0 || m.f2.sources != std::vector<GradedModule>{a, a} ||
        m.f2.target != b || m.f2.degree != 1) {
        rep.pass = false;
        rep.detail = "shape mismatch in the morphism data";
        return rep;
    }

    // The three unary-companion identities share one combined defect;
    // each lives on its own key-degree pattern.
    ConfMap d123 = insert(m.dst.beta, 1, m.f2) + insert(m.f2, 2, m.src.beta) +
                   insert(m.f2, 1, m.src.beta) - insert(m.f, 1, m.src.mu2) +
                   multi_insert(m.dst.mu2, {m.f, m.f});
    rep.add("i", report_zero(slice(d123, {0, 0}), "boundary of f2"));
    rep.add("ii", report_zero(slice(d123, {0, 1}), "right cell argument"));
    rep.add("iii", report_zero(slice(d123, {1, 0}), "left cell argument"));

    ConfMap d4 = insert(m.f2, 2, m.src.mu2) - insert(m.f2, 1, m.src.mu2) +
                 multi_insert(m.dst.mu2, {m.f2, m.f}) +
                 multi_insert(m.dst.mu2, {m.f, m.f2}) -
                 multi_insert(m.dst.mu3, {m.f, m.f, m.f}) +
                 insert(m.f, 1, m.src.mu3);
    rep.add("iv", report_zero(slice(d4, {0, 0, 0}), "ternary compatibility"));
    return rep;
}

TwoTermMorphism identity_morphism(const TwoTermAInf& x) {
    return {x, x, ConfMap::identity(x.module),
            ConfMap::zero({x.module, x.module}, x.module, 1)};
}

TwoTermMorphism compose_morphisms(const TwoTermMorphism& g,
                                  const TwoTermMorphism& f) {
    if (f.dst != g.src)
        throw std::invalid_argument("compose_morphisms: endpoint mismatch");
    TwoTermMorphism out;
    out.src = f.src;
    out.dst = g.dst;
    out.f = insert(g.f, 1, f.f);
    out.f2 = multi_insert(g.f2, {f.f, f.f}) + insert(g.f, 1, f.f2);
    return out;
}

AInfStructure skeletal_from_cocycle(const SkeletalData& d) {
    if (d.n < 2)
        throw std::invalid_argument("skeletal_from_cocycle: n must be >= 2");
    if (d.theta.n != d.n + 1)
        throw std::invalid_argument(
            "skeletal_from_cocycle: cochain arity must be n + 1");
    if (!is_cocycle(d.bimodule, d.theta))
        throw std::invalid_argument("skeletal_from_cocycle: not a cocycle");

    GradedModule big;
    for (const auto& [g, deg] : d.bimodule.algebra.module.generators)
        big.generators.push_back({"a." + g, 0});
    for (const auto& [g, deg] : d.bimodule.module.generators)
        big.generators.push_back({"m." + g, d.n - 1});

    AInfStructure s;
    s.module = big;
    ConfMap mu2 = relabel(d.bimodule.algebra.mult, big, {"a.", "a."}, "a.");
    mu2 += relabel(d.bimodule.left, big, {"a.", "m."}, "m.");
    mu2 += relabel(d.bimodule.right, big, {"m.", "a."}, "m.");
    mu2.validate();
    if (!mu2.is_zero()) s.mults[2] = mu2;
    if (!d.theta.is_zero()) {
        ConfMap top = relabel(
            d.theta.map, big,
            std::vector<std::string>(d.n + 1, "a."), "m.");
        top.degree = d.n - 1;
        top.validate();
        s.mults[d.n + 1] = top;
    }
    return s;
}

SkeletalData cocycle_from_skeletal(const AInfStructure& s) {
    int top_degree = 0;
    for (const auto& [g, deg] : s.module.generators) {
        if (deg < 0)
            throw std::invalid_argument(
                "cocycle_from_skeletal: negative generator degree");
        top_degree = std::max(top_degree, deg);
    }
    for (const auto& [g, deg] : s.module.generators)
        if (deg != 0 && deg != top_degree)
            throw std::invalid_argument(
                "cocycle_from_skeletal: more than two degrees present");
    int n = top_degree == 0 ? 2 : top_degree + 1;
    for (const auto& [k, f] : s.mults)
        if (k != 2 && k != n + 1 && !f.is_zero())
            throw std::invalid_argument(
                "cocycle_from_skeletal: nonzero product of arity " +
                std::to_string(k));

    GradedModule alg, mod;
    for (const auto& [g, deg] : s.module.generators) {
        if (deg == 0)
            alg.generators.push_back({strip_prefix(g, "a."), 0});
        else
            mod.generators.push_back({strip_prefix(g, "m."), 0});
    }

    ConfMap mu2 = s.mult(2);
    SkeletalData d;
    d.n = n;
    d.bimodule.algebra.module = alg;
    d.bimodule.algebra.mult = unrelabel(slice(mu2, {0, 0}), {alg, alg}, alg,
                                        {"a.", "a."}, "a.");
    d.bimodule.module = mod;
    if (top_degree == 0) {
        d.bimodule.left = ConfMap::zero({alg, mod}, mod, 0);
        d.bimodule.right = ConfMap::zero({mod, alg}, mod, 0);
    } else {
        d.bimodule.left = unrelabel(slice(mu2, {0, top_degree}), {alg, mod},
                                    mod, {"a.", "m."}, "m.");
        d.bimodule.right = unrelabel(slice(mu2, {top_degree, 0}), {mod, alg},
                                     mod, {"m.", "a."}, "m.");
    }
    CheckReport r = check_bimodule(d.bimodule);
    if (!r.pass)
        throw std::invalid_argument("cocycle_from_skeletal: " + r.detail);

    d.theta.n = n + 1;
    d.theta.map =
        unrelabel(s.mult(n + 1), std::vector<GradedModule>(n + 1, alg), mod,
                  std::vector<std::string>(n + 1, "a."), "m.");
    if (!is_cocycle(d.bimodule, d.theta))
        throw std::invalid_argument(
            "cocycle_from_skeletal: top product is not a cocycle");
    return d;
}

AInfStructure apply_equivalence(const AInfStructure& skeletal,
                                const ConfMap& sigma) {
    SkeletalData d = cocycle_from_skeletal(skeletal);
    int n = d.n;
    if (sigma.arity() != n || sigma.degree != n - 1 ||
        sigma.target != skeletal.module ||
        sigma.sources != std::vector<GradedModule>(n, skeletal.module))
        throw std::invalid_argument(
            "apply_equivalence: sigma must be an arity-n map of degree n - 1 "
            "over the skeletal module");
    Cochain sc;
    sc.n = n;
    sc.map = unrelabel(sigma, std::vector<GradedModule>(n, d.bimodule.algebra.module),
                       d.bimodule.module, std::vector<std::string>(n, "a."),
                       "m.");
    Cochain dsig = hochschild_delta(d.bimodule, sc);
    if (!dsig.is_zero()) d.theta.map += dsig.map;
    return skeletal_from_cocycle(d);
}

ItemizedReport check_two_algebra(const ConfTwoAlgebra& c) {
    ItemizedReport rep;
    std::vector<GradedModule> o1{c.c0}, m1{c.c1};
    if (!degrees_within(c.c0, 0, 0) || !degrees_within(c.c1, 0, 0) ||
        c.s.sources != m1 || c.s.target != c.c0 || c.s.degree != 0 ||
        c.t.sources != m1 || c.t.target != c.c0 || c.t.degree != 0 ||
        c.iota.sources != o1 || c.iota.target != c.c1 || c.iota.degree != 0 ||
        c.pi0.sources != std::vector<GradedModule>{c.c0, c.c0} ||
        c.pi0.target != c.c0 || c.pi0.degree != 0 ||
        c.pi1.sources != std::vector<GradedModule>{c.c1, c.c1} ||
        c.pi1.target != c.c1 || c.pi1.degree != 0 ||
        c.assoc.sources != std::vector<GradedModule>{c.c0, c.c0, c.c0} ||
        c.assoc.target != c.c1 || c.assoc.degree != 0) {
        rep.pass = false;
        rep.detail = "shape mismatch in the 2-algebra data";
        return rep;
    }

    ConfMap id0 = ConfMap::identity(c.c0);
    rep.add("source unit", report_zero(insert(c.s, 1, c.iota) - id0, "s iota"));
    rep.add("target unit", report_zero(insert(c.t, 1, c.iota) - id0, "t iota"));
    rep.add("product source",
            report_zero(insert(c.s, 1, c.pi1) - multi_insert(c.pi0, {c.s, c.s}),
                        "s of a product cell"));
    rep.add("product target",
            report_zero(insert(c.t, 1, c.pi1) - multi_insert(c.pi0, {c.t, c.t}),
                        "t of a product cell"));
    rep.add("product unit",
            report_zero(multi_insert(c.pi1, {c.iota, c.iota}) -
                            insert(c.iota, 1, c.pi0),
                        "product of identity cells"));
    rep.add("associator source",
            report_zero(insert(c.s, 1, c.assoc) - insert(c.pi0, 2, c.pi0),
                        "source of the associator"));
    rep.add("associator target",
            report_zero(insert(c.t, 1, c.assoc) - insert(c.pi0, 1, c.pi0),
                        "target of the associator"));

    // Two pastings from a(b(cd)) to ((ab)c)d; each composite is the sum
    // of its cells minus the identity cells at the interior objects.
    ConfMap x1 = insert(c.assoc, 3, c.pi0);
    ConfMap x2 = insert(c.assoc, 1, c.pi0);
    ConfMap lhs = x1 + x2 - iota_t(c, x1);
    ConfMap y1 = multi_insert(c.pi1, {c.iota, c.assoc});
    ConfMap y2 = insert(c.assoc, 2, c.pi0);
    ConfMap y3 = multi_insert(c.pi1, {c.assoc, c.iota});
    ConfMap rhs = y1 + y2 + y3 - iota_t(c, y1) - iota_t(c, y2);
    rep.add("pentagon", report_zero(lhs - rhs, "pentagon"));
    return rep;
}

ConfTwoAlgebra functor_s(const TwoTermAInf& x) {
    ItemizedReport r = check_two_term(x);
    for (const auto& [label, item] : r.items)
        if (!item.pass && label != "ix")
            throw std::invalid_argument("functor_s: input fails (" + label +
                                        "): " + item.detail);
    if (!r.detail.empty() && r.items.empty())
        throw std::invalid_argument("functor_s: " + r.detail);

    ConfTwoAlgebra c;
    for (const auto& [g, deg] : x.module.generators) {
        if (deg == 0) c.c0.generators.push_back({g, 0});
        c.c1.generators.push_back({g, 0});
    }
    c.s = ConfMap::zero({c.c1}, c.c0, 0);
    c.t = ConfMap::zero({c.c1}, c.c0, 0);
    c.iota = ConfMap::zero({c.c0}, c.c1, 0);
    for (const auto& [g, deg] : c.c0.generators) {
        c.s.set_entry({g}, g, Poly::one());
        c.t.set_entry({g}, g, Poly::one());
        c.iota.set_entry({g}, g, Poly::one());
    }
    for (const auto& [key, val] : x.beta.table)
        for (const auto& [g, p] : val) c.t.add_entry(key, g, p);

    c.pi0 = rebuild(slice(x.mu2, {0, 0}), {c.c0, c.c0}, c.c0, 0);
    c.pi1 = rebuild(x.mu2, {c.c1, c.c1}, c.c1, 0) +
            rebuild(slice(insert(x.mu2, 1, x.beta), {1, 1}), {c.c1, c.c1},
                    c.c1, 0);
    c.assoc = rebuild(slice(insert(x.mu2, 2, x.mu2), {0, 0, 0}),
                      {c.c0, c.c0, c.c0}, c.c1, 0) +
              rebuild(x.mu3, {c.c0, c.c0, c.c0}, c.c1, 0);
    return c;
}

TwoTermAInf functor_t(const ConfTwoAlgebra& c) {
    ItemizedReport chk = check_two_algebra(c);
    for (const auto& [label, item] : chk.items)
        if (!item.pass && label != "pentagon")
            throw std::invalid_argument("functor_t: invalid input (" + label +
                                        "): " + item.detail);
    if (!chk.detail.empty() && chk.items.empty())
        throw std::invalid_argument("functor_t: " + chk.detail);

    // Cells killed by s span the candidate complement of iota(c0).
    std::vector<std::string> kernel_gens;
    for (const auto& [g, deg] : c.c1.generators)
        if (!c.s.table.count({g})) kernel_gens.push_back(g);
    size_t rank1 = c.c1.rank();
    if (c.c0.rank() + kernel_gens.size() != rank1)
        throw std::invalid_argument(
            "functor_t: s does not split on the generators");

    std::map<std::string, size_t> row;
    for (size_t i = 0; i < rank1; ++i) row[c.c1.generators[i].first] = i;
    std::vector<std::vector<Poly>> basis(rank1, std::vector<Poly>(rank1));
    size_t col = 0;
    for (const auto& [a, deg] : c.c0.generators) {
        auto it = c.iota.table.find({a});
        if (it != c.iota.table.end())
            for (const auto& [g, p] : it->second) basis[row.at(g)][col] = p;
        ++col;
    }
    for (const auto& g : kernel_gens) basis[row.at(g)][col++] = Poly::one();

    Poly det = poly_det(basis);
    if (!det.is_constant() || det.is_zero())
        throw std::invalid_argument(
            "functor_t: the basis change is not invertible over the "
            "coefficients");
    Rational unit = Rational(1) / det.terms().begin()->second;
    std::vector<std::vector<Poly>> inv = poly_adjugate(basis);

    // Coordinates on the kernel part of the split basis.
    GradedModule a1flat;
    for (const auto& g : kernel_gens) a1flat.generators.push_back({g, 0});
    ConfMap ker_coords = ConfMap::zero({c.c1}, a1flat, 0);
    for (size_t j = 0; j < rank1; ++j)
        for (size_t k = 0; k < kernel_gens.size(); ++k) {
            const Poly& e = inv[c.c0.rank() + k][j];
            if (!e.is_zero())
                ker_coords.add_entry({c.c1.generators[j].first},
                                     kernel_gens[k], unit * e);
        }
    ConfMap emb = ConfMap::zero({a1flat}, c.c1, 0);
    for (const auto& g : kernel_gens) emb.set_entry({g}, g, Poly::one());

    GradedModule combined;
    for (const auto& [g, deg] : c.c0.generators)
        combined.generators.push_back({g, 0});
    for (const auto& g : kernel_gens) combined.generators.push_back({g, 1});

    TwoTermAInf x;
    x.module = combined;
    x.beta = rebuild(insert(c.t, 1, emb), {combined}, combined, -1);
    ConfMap left =
        insert(ker_coords, 1, multi_insert(c.pi1, {c.iota, emb}));
    ConfMap right =
        insert(ker_coords, 1, multi_insert(c.pi1, {emb, c.iota}));
    x.mu2 = rebuild(c.pi0, {combined, combined}, combined, 0) +
            rebuild(left, {combined, combined}, combined, 0) +
            rebuild(right, {combined, combined}, combined, 0);
    x.mu3 = rebuild(insert(ker_coords, 1, c.assoc),
                    {combined, combined, combined}, combined, 1);
    return x;
}

ItemizedReport check_two_alg_morphism(const TwoAlgMorphism& m) {
    ItemizedReport rep;
    const ConfTwoAlgebra& a = m.src;
    const ConfTwoAlgebra& b = m.dst;
    if (m.f0.sources != std::vector<GradedModule>{a.c0} || m.f0.target != b.c0 ||
        m.f0.degree != 0 || m.f1.sources != std::vector<GradedModule>{a.c1} ||
        m.f1.target != b.c1 || m.f1.degree != 0 ||
        m.fnat.sources != std::vector<GradedModule>{a.c0, a.c0} ||
        m.fnat.target != b.c1 || m.fnat.degree != 0) {
        rep.pass = false;
        rep.detail = "shape mismatch in the homomorphism data";
        return rep;
    }

    rep.add("source", report_zero(insert(b.s, 1, m.f1) - insert(m.f0, 1, a.s),
                                  "f vs source maps"));
    rep.add("target", report_zero(insert(b.t, 1, m.f1) - insert(m.f0, 1, a.t),
                                  "f vs target maps"));
    rep.add("unit",
            report_zero(insert(m.f1, 1, a.iota) - insert(b.iota, 1, m.f0),
                        "f vs identity cells"));
    rep.add("cell source",
            report_zero(insert(b.s, 1, m.fnat) -
                            multi_insert(b.pi0, {m.f0, m.f0}),
                        "source of the structure cell"));
    rep.add("cell target",
            report_zero(insert(b.t, 1, m.fnat) - insert(m.f0, 1, a.pi0),
                        "target of the structure cell"));

    ConfMap f0iota = insert(b.iota, 1, m.f0);
    ConfMap x1 = multi_insert(b.assoc, {m.f0, m.f0, m.f0});
    ConfMap x2 = multi_insert(b.pi1, {m.fnat, f0iota});
    ConfMap x3 = insert(m.fnat, 1, a.pi0);
    ConfMap lhs = x1 + x2 + x3 - iota_t(b, x1) - iota_t(b, x2);
    ConfMap y1 = multi_insert(b.pi1, {f0iota, m.fnat});
    ConfMap y2 = insert(m.fnat, 2, a.pi0);
    ConfMap y3 = insert(m.f1, 1, a.assoc);
    ConfMap rhs = y1 + y2 + y3 - iota_t(b, y1) - iota_t(b, y2);
    rep.add("hexagon", report_zero(lhs - rhs, "coherence hexagon"));
    return rep;
}

TwoAlgMorphism identity_two_alg_morphism(const ConfTwoAlgebra& c) {
    return {c, c, ConfMap::identity(c.c0), ConfMap::identity(c.c1),
            insert(c.iota, 1, c.pi0)};
}

TwoAlgMorphism compose_two_alg_morphisms(const TwoAlgMorphism& g,
                                         const TwoAlgMorphism& f) {
    if (f.dst != g.src)
        throw std::invalid_argument(
            "compose_two_alg_morphisms: endpoint mismatch");
    TwoAlgMorphism out;
    out.src = f.src;
    out.dst = g.dst;
    out.f0 = insert(g.f0, 1, f.f0);
    out.f1 = insert(g.f1, 1, f.f1);
    ConfMap first = multi_insert(g.fnat, {f.f0, f.f0});
    out.fnat = first + insert(g.f1, 1, f.fnat) - iota_t(g.dst, first);
    return out;
}

TwoAlgMorphism upsilon(const ConfTwoAlgebra& c) {
    TwoTermAInf x = functor_t(c);
    ConfTwoAlgebra st = functor_s(x);
    TwoAlgMorphism u;
    u.src = st;
    u.dst = c;
    u.f0 = ConfMap::identity(c.c0);
    u.f1 = ConfMap::zero({st.c1}, c.c1, 0);
    for (const auto& [a, deg] : c.c0.generators) {
        auto it = c.iota.table.find({a});
        if (it == c.iota.table.end()) continue;
        for (const auto& [g, p] : it->second) u.f1.add_entry({a}, g, p);
    }
    for (const auto& [g, deg] : x.module.generators)
        if (deg == 1) u.f1.set_entry({g}, g, Poly::one());
    u.fnat = insert(c.iota, 1, c.pi0);
    return u;
}

}  // namespace confalg
