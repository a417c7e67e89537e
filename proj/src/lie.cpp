#include "confalg/lie.hpp"

#include <stdexcept>

namespace confalg {

namespace {

std::vector<int> key_degrees(const ConfMap& f,
                             const std::vector<std::string>& key) {
    std::vector<int> d(key.size());
    for (size_t i = 0; i < key.size(); ++i) d[i] = f.sources[i].degree_of(key[i]);
    return d;
}

// permute with the per-tuple Koszul factor and optionally sgn(sigma).
ConfMap signed_permute(const ConfMap& f, const Permutation& sigma,
                       bool with_sgn) {
    ConfMap g = permute(f, sigma);
    ConfMap r = ConfMap::zero(g.sources, g.target, g.degree);
    int s0 = with_sgn ? sgn(sigma) : 1;
    for (const auto& [key, val] : g.table) {
        Rational s(s0 * koszul_sign(sigma, key_degrees(g, key)));
        for (const auto& [gen, p] : val) r.add_entry(key, gen, s * p);
    }
    return r;
}

// All sigma in S_n with sigma(1) < ... < sigma(q) and
// sigma(q+1) < ... < sigma(n).
std::vector<Permutation> shuffles(int q, int n) {
    std::vector<Permutation> out;
    std::vector<int> comb(q);
    for (int i = 0; i < q; ++i) comb[i] = i + 1;
    for (;;) {
        Permutation p(n);
        std::vector<bool> used(n + 1, false);
        for (int i = 0; i < q; ++i) {
            p[i] = comb[i];
            used[comb[i]] = true;
        }
        int pos = q;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) p[pos++] = v;
        out.push_back(std::move(p));
        int i = q - 1;
        while (i >= 0 && comb[i] == n - q + i + 1) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

void require_skew(const ConfMap& f, const char* who) {
    if (!is_symmetric(f, SymMode::skew))
        throw std::invalid_argument(std::string(who) +
                                    ": skew-symmetric map expected");
}

}  // namespace

CheckReport check_lie(const LieConfAlgebra& l) {
    for (const auto& [g, d] : l.module.generators)
        if (d != 0) return {false, "generator " + g + " has nonzero degree"};
    const ConfMap& b = l.bracket;
    if (b.arity() != 2 || b.degree != 0 || b.target != l.module)
        return {false, "bracket is not a binary degree-0 map on the module"};
    b.validate();
    CheckReport skew = report_zero(b + permute(b, {2, 1}), "skew-symmetry");
    if (!skew.pass) return skew;
    ConfMap defect = insert(b, 2, b) - insert(b, 1, b) -
                     permute(insert(b, 2, b), {2, 1, 3});
    return report_zero(defect, "conformal Jacobi");
}

LieConfAlgebra virasoro() {
    GradedModule m{{{"l", 0}}};
    ConfMap b = ConfMap::zero({m, m}, m, 0);
    b.set_entry({"l", "l"}, "l", Poly::D() + Rational(2) * Poly::L(1));
    return {m, b};
}

LieConfAlgebra cur_lie(
    const GradedModule& m,
    const std::map<std::vector<std::string>, std::map<std::string, Rational>>&
        consts) {
    ConfMap b = ConfMap::zero({m, m}, m, 0);
    for (const auto& [key, val] : consts) {
        if (key.size() != 2)
            throw std::invalid_argument("cur_lie: binary constants expected");
        for (const auto& [g, c] : val) b.add_entry(key, g, Poly(c));
    }
    LieConfAlgebra l{m, b};
    CheckReport r = check_lie(l);
    if (!r.pass)
        throw std::invalid_argument("cur_lie: not a Lie algebra: " + r.detail);
    return l;
}

LieConfAlgebra skew_symmetrize_assoc(const AssocConfAlgebra& a) {
    return {a.module, a.mult - permute(a.mult, {2, 1})};
}

CheckReport check_lmodule(const ConformalLModule& m) {
    CheckReport base = check_lie(m.algebra);
    if (!base.pass) return base;
    const ConfMap& act = m.action;
    if (act.arity() != 2 || act.degree != 0 || act.target != m.module ||
        act.sources != std::vector<GradedModule>{m.algebra.module, m.module})
        return {false, "action is not a map L (x) M -> M"};
    act.validate();
    ConfMap lhs = insert(act, 2, act);
    ConfMap defect = lhs - permute(lhs, {2, 1, 3}) -
                     insert(act, 1, m.algebra.bracket);
    return report_zero(defect, "module condition");
}

ConformalLModule adjoint_lmodule(const LieConfAlgebra& l) {
    return {l, l.module, l.bracket};
}

ConfMap cnr_diamond(const ConfMap& f, const ConfMap& g) {
    int n = f.arity(), m = g.arity();
    ConfMap base = insert(f, 1, g);
    ConfMap r = ConfMap::zero(base.sources, base.target, base.degree);
    for (const auto& sigma : shuffles(m, m + n - 1))
        r += Rational(sgn(sigma)) * permute(base, sigma);
    return r;
}

ConfMap cnr_bracket(const ConfMap& f, const ConfMap& g) {
    require_skew(f, "cnr_bracket");
    require_skew(g, "cnr_bracket");
    int n = f.arity(), m = g.arity();
    int s = (m - 1) * (n - 1) % 2 == 0 ? 1 : -1;
    return cnr_diamond(f, g) - Rational(s) * cnr_diamond(g, f);
}

namespace {

// The term-by-term expansion of the differential: action terms over all
// single-argument pullouts, bracket terms over all argument pairs.
ConfMap lie_delta_explicit(const ConformalLModule& m, const ConfMap& phi) {
    int n = phi.arity();
    ConfMap acted = insert(m.action, 2, phi);
    ConfMap r = ConfMap::zero(acted.sources, acted.target, acted.degree);
    for (const auto& sigma : shuffles(1, n + 1))
        r += Rational(sgn(sigma)) * permute(acted, sigma);
    ConfMap bracketed = insert(phi, 1, m.algebra.bracket);
    for (const auto& sigma : shuffles(2, n + 1))
        r -= Rational(sgn(sigma)) * permute(bracketed, sigma);
    return r;
}

// The same differential computed inside the semidirect product: bracket
// phi against the structure map of L + M and read off the L...L -> M
// component.
ConfMap lie_delta_semidirect(const ConformalLModule& m, const ConfMap& phi) {
    int n = phi.arity();
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& [g, d] : m.algebra.module.generators)
        gens.emplace_back("l." + g, d);
    for (const auto& [g, d] : m.module.generators) gens.emplace_back("m." + g, d);
    GradedModule big{gens};

    ConfMap act = relabel(m.action, big, {"l.", "m."}, "m.");
    ConfMap pi = relabel(m.algebra.bracket, big, {"l.", "l."}, "l.");
    pi += act;
    pi -= permute(act, {2, 1});

    ConfMap phi_big =
        relabel(phi, big, std::vector<std::string>(n, "l."), "m.");
    ConfMap delta_big = cnr_bracket(pi, phi_big);
    if (n % 2 == 0) delta_big = Rational(-1) * delta_big;  // (-1)^{n-1}

    ConfMap r = ConfMap::zero(
        std::vector<GradedModule>(n + 1, m.algebra.module), m.module, 0);
    for (const auto& [key, val] : delta_big.table) {
        std::vector<std::string> nk(key.size());
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i].rfind("l.", 0) != 0)
                throw std::logic_error("lie_delta: output escapes C^*(L, M)");
            nk[i] = key[i].substr(2);
        }
        for (const auto& [g, p] : val) {
            if (g.rfind("m.", 0) != 0)
                throw std::logic_error("lie_delta: output escapes C^*(L, M)");
            r.add_entry(nk, g.substr(2), p);
        }
    }
    return r;
}

}  // namespace

Cochain lie_delta(const ConformalLModule& m, const Cochain& c) {
    if (c.n == 0) {
        ConfMap r = ConfMap::zero({m.algebra.module}, m.module, 0);
        if (!c.elem.is_zero()) {
            for (const auto& [x, dx] : m.algebra.module.generators) {
                PolyValue v = evaluate(
                    m.action, {ModElement::generator(x), c.elem});
                for (const auto& [g, p] : v.coords)
                    r.add_entry({x}, g, p.substitute(Var::L(1), -Poly::D()));
            }
        }
        return {1, {}, r};
    }
    require_skew(c.map, "lie_delta");
    ConfMap a = lie_delta_explicit(m, c.map);
    ConfMap b = lie_delta_semidirect(m, c.map);
    if (!(a == b))
        throw std::logic_error(
            "lie_delta: the two evaluation routes disagree");
    return {c.n + 1, {}, a};
}

ConfMap LInfStructure::bracket(int k) const {
    auto it = brackets.find(k);
    if (it != brackets.end()) return it->second;
    return ConfMap::zero(std::vector<GradedModule>(k, module), module, k - 2);
}

ConfMap LInf1Structure::bracket(int k) const {
    auto it = brackets.find(k);
    if (it != brackets.end()) return it->second;
    return ConfMap::zero(std::vector<GradedModule>(k, module), module, -1);
}

namespace {

template <typename S, typename Term>
CheckReport check_linf_generic(const S& s, int up_to_n, SymMode mode,
                               Term term_sign) {
    for (const auto& [k, f] : s.brackets) {
        if (f.arity() != k) return {false, "bracket arity mismatch"};
        f.validate();
        if (!is_symmetric(f, mode))
            return {false, "bracket of arity " + std::to_string(k) +
                               " has the wrong symmetry"};
    }
    for (int n = 1; n <= up_to_n; ++n) {
        ConfMap total;
        bool seeded = false;
        for (int q = 1; q <= n; ++q) {
            int p = n + 1 - q;
            ConfMap lp = s.bracket(p), lq = s.bracket(q);
            if (!seeded) {
                ConfMap base = insert(lp, 1, lq);
                total = ConfMap::zero(base.sources, base.target, base.degree);
                seeded = true;
            }
            if (lp.is_zero() || lq.is_zero()) continue;
            ConfMap base = insert(lp, 1, lq);
            for (const auto& sigma : shuffles(q, n))
                total += term_sign(p, q) *
                         signed_permute(base, sigma, mode == SymMode::skew);
        }
        CheckReport r =
            report_zero(total, "conformal Jacobi identity, n = " +
                                   std::to_string(n));
        if (!r.pass) return r;
    }
    return {};
}

}  // namespace

CheckReport check_linf(const LInfStructure& s, int up_to_n) {
    return check_linf_generic(s, up_to_n, SymMode::skew, [](int p, int q) {
        return Rational(q * (p - 1) % 2 == 0 ? 1 : -1);
    });
}

CheckReport check_linf1(const LInf1Structure& s, int up_to_n) {
    return check_linf_generic(s, up_to_n, SymMode::sym,
                              [](int, int) { return Rational(1); });
}

LInf1Structure shift_linf(const LInfStructure& s) {
    AInf1Structure sh = shift(AInfStructure{s.module, s.brackets});
    return {sh.module, sh.mults};
}

LInfStructure unshift_linf(const LInf1Structure& s) {
    AInfStructure un = unshift(AInf1Structure{s.module, s.brackets});
    return {un.module, un.mults};
}

namespace {

ConfMap sym_diamond(const ConfMap& f, const ConfMap& g) {
    int k = f.arity(), l = g.arity();
    ConfMap base = insert(f, 1, g);
    ConfMap r = ConfMap::zero(base.sources, base.target, base.degree);
    for (const auto& sigma : shuffles(l, k + l - 1))
        r += signed_permute(base, sigma, false);
    return r;
}

}  // namespace

GradedCochain sym_gla_bracket(const GradedCochain& a, const GradedCochain& b) {
    for (const auto& [k, f] : a.parts)
        if (!is_symmetric(f, SymMode::sym))
            throw std::invalid_argument("sym_gla_bracket: non-symmetric part");
    for (const auto& [l, g] : b.parts)
        if (!is_symmetric(g, SymMode::sym))
            throw std::invalid_argument("sym_gla_bracket: non-symmetric part");
    GradedCochain r;
    r.module = a.module;
    r.degree = a.degree + b.degree;
    Rational s(a.degree * b.degree % 2 == 0 ? -1 : 1);
    for (const auto& [k, f] : a.parts)
        for (const auto& [l, g] : b.parts) {
            r.add_part(sym_diamond(f, g));
            r.add_part(s * sym_diamond(g, f));
        }
    return r;
}

LInfStructure skew_symmetrize_ainf(const AInfStructure& s) {
    LInfStructure out;
    out.module = s.module;
    for (const auto& [k, mu] : s.mults) {
        ConfMap lk = symmetrize(mu, SymMode::skew);
        if (!lk.is_zero()) out.brackets.emplace(k, lk);
    }
    return out;
}

}  // namespace confalg
