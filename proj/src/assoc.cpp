#include "confalg/assoc.hpp"

#include <sstream>

namespace confalg {

CheckReport report_zero(const ConfMap& difference, const std::string& label) {
    CheckReport r;
    if (difference.is_zero()) return r;
    r.pass = false;
    const auto& [key, val] = *difference.table.begin();
    std::ostringstream os;
    os << label << " fails on (";
    for (size_t i = 0; i < key.size(); ++i) os << (i ? ", " : "") << key[i];
    os << "): difference ";
    bool first = true;
    for (const auto& [g, p] : val) {
        if (!first) os << " + ";
        os << "(" << p.to_string() << ")*" << g;
        first = false;
    }
    r.detail = os.str();
    return r;
}

CheckReport check_associativity(const AssocConfAlgebra& a) {
    ConfMap diff = insert(a.mult, 2, a.mult) - insert(a.mult, 1, a.mult);
    return report_zero(diff, "associativity");
}

AssocConfAlgebra cur_algebra(
    const GradedModule& m,
    const std::map<std::vector<std::string>, std::map<std::string, Rational>>&
        consts) {
    for (const auto& [n, d] : m.generators)
        if (d != 0)
            throw std::invalid_argument("cur_algebra: module must sit in degree 0");

    auto coeff = [&](const std::string& g, const std::string& h,
                     const std::string& u) -> Rational {
        auto it = consts.find({g, h});
        if (it == consts.end()) return 0;
        auto jt = it->second.find(u);
        return jt == it->second.end() ? Rational(0) : jt->second;
    };
    for (const auto& [g, dg] : m.generators)
        for (const auto& [h, dh] : m.generators)
            for (const auto& [k, dk] : m.generators)
                for (const auto& [v, dv] : m.generators) {
                    Rational lhs = 0, rhs = 0;
                    for (const auto& [u, du] : m.generators) {
                        lhs += coeff(g, h, u) * coeff(u, k, v);
                        rhs += coeff(h, k, u) * coeff(g, u, v);
                    }
                    if (lhs != rhs)
                        throw std::invalid_argument(
                            "cur_algebra: structure constants not associative");
                }

    AssocConfAlgebra a;
    a.module = m;
    a.mult = ConfMap::zero({m, m}, m, 0);
    for (const auto& [key, val] : consts) {
        if (key.size() != 2)
            throw std::invalid_argument("cur_algebra: binary table expected");
        for (const auto& [u, c] : val) a.mult.add_entry(key, u, Poly(c));
    }
    a.mult.validate();
    return a;
}

CheckReport check_bimodule(const ConformalBimodule& b) {
    CheckReport r = report_zero(insert(b.left, 2, b.left) -
                                    insert(b.left, 1, b.algebra.mult),
                                "left action");
    if (!r.pass) return r;
    r = report_zero(insert(b.left, 2, b.right) - insert(b.right, 1, b.left),
                    "mixed action");
    if (!r.pass) return r;
    return report_zero(insert(b.right, 2, b.algebra.mult) -
                           insert(b.right, 1, b.right),
                       "right action");
}

ConformalBimodule adjoint_bimodule(const AssocConfAlgebra& a) {
    return ConformalBimodule{a, a.module, a.mult, a.mult};
}

JProducts j_products(const ConfMap& f) {
    if (f.arity() != 2)
        throw std::invalid_argument("j_products: binary map expected");
    JProducts out;
    for (const auto& [key, val] : f.table)
        for (const auto& [g, p] : val) {
            int jmax = p.degree_in(Var::L(1));
            Rational fact = 1;
            for (int j = 0; j <= jmax; ++j) {
                if (j > 0) fact *= j;
                Poly c = fact * p.coefficient_of(Var::L(1), j);
                if (c.is_zero()) continue;
                auto it = out.find(j);
                if (it == out.end())
                    it = out.emplace(j, ConfMap::zero(f.sources, f.target, f.degree))
                             .first;
                it->second.add_entry(key, g, c);
            }
        }
    return out;
}

ConfMap from_j_products(const JProducts& table, std::vector<GradedModule> sources,
                        GradedModule target, int degree) {
    ConfMap f = ConfMap::zero(std::move(sources), std::move(target), degree);
    for (const auto& [j, m] : table) {
        Rational fact = 1;
        for (int t = 2; t <= j; ++t) fact *= t;
        Poly lpow = Poly::L(1).pow(j);
        for (const auto& [key, val] : m.table)
            for (const auto& [g, p] : val)
                f.add_entry(key, g, Rational(1) / fact * (lpow * p));
    }
    return f;
}

namespace {

Rational binom(int n, int k) {
    Rational r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
}

ModElement operator*(const Rational& c, const ModElement& e) {
    return Poly(c) * e;
}

// Independent j-product calculus, used to cross-check the lambda-based
// associativity test. Only the defining recursions are used:
//   (Dx)_(j) y = -j x_(j-1) y        x_(j) (Dy) = D(x_(j) y) + j x_(j-1) y
struct JCalc {
    std::map<int, std::map<std::vector<std::string>, ModElement>> tables;

    ModElement gen_gen(int j, const std::string& g, const std::string& h) const {
        auto it = tables.find(j);
        if (it == tables.end()) return {};
        auto jt = it->second.find({g, h});
        return jt == it->second.end() ? ModElement{} : jt->second;
    }

    // g_(j) (D^t h)
    ModElement gen_shift(int j, const std::string& g, int t,
                         const std::string& h) const {
        if (j < 0) return {};
        if (t == 0) return gen_gen(j, g, h);
        ModElement rec = gen_shift(j, g, t - 1, h);
        ModElement out = apply_partial(rec);
        out += Rational(j) * gen_shift(j - 1, g, t - 1, h);
        return out;
    }

    ModElement right(int j, const std::string& g, const ModElement& y) const {
        ModElement out;
        for (const auto& [h, q] : y.coords)
            for (const auto& [mon, c] : q.terms()) {
                if (mon.max_l_index() > 0)
                    throw std::invalid_argument("j-product: L in coordinate");
                out += c * gen_shift(j, g, mon.dpow, h);
            }
        return out;
    }

    // x_(j) y with x carrying D-polynomial coordinates:
    // (D^s g)_(j) = (-1)^s j(j-1)...(j-s+1) g_(j-s)
    ModElement left(int j, const ModElement& x, const ModElement& y) const {
        ModElement out;
        for (const auto& [g, p] : x.coords)
            for (const auto& [mon, c] : p.terms()) {
                int s = mon.dpow;
                if (s > j) continue;
                Rational f = c;
                for (int t = 0; t < s; ++t) f *= -(j - t);
                out += f * right(j - s, g, y);
            }
        return out;
    }
};

}  // namespace

CheckReport check_j_associativity(const AssocConfAlgebra& a) {
    JCalc calc;
    int jmax = 0;
    for (const auto& [j, m] : j_products(a.mult)) {
        jmax = std::max(jmax, j);
        for (const auto& [key, val] : m.table) {
            ModElement e;
            for (const auto& [g, p] : val) e.add(g, p);
            calc.tables[j][key] = e;
        }
    }
    for (const auto& [g, dg] : a.module.generators)
        for (const auto& [h, dh] : a.module.generators)
            for (const auto& [u, du] : a.module.generators)
                for (int j = 0; j <= jmax + 1; ++j)
                    for (int k = 0; k <= jmax + 1; ++k) {
                        ModElement lhs = calc.left(
                            j, ModElement::generator(g),
                            calc.right(k, h, ModElement::generator(u)));
                        ModElement rhs;
                        for (int p = 0; p <= j; ++p)
                            rhs += binom(j, p) *
                                   calc.left(j + k - p, calc.gen_gen(p, g, h),
                                             ModElement::generator(u));
                        if (!(lhs == rhs)) {
                            CheckReport r;
                            r.pass = false;
                            r.detail = "j-associativity fails on (" + g + ", " + h +
                                       ", " + u + ") at j=" + std::to_string(j) +
                                       ", k=" + std::to_string(k);
                            return r;
                        }
                    }
    return {};
}

Cochain hochschild_delta(const ConformalBimodule& b, const Cochain& c) {
    Cochain out;
    out.n = c.n + 1;
    if (c.n == 0) {
        ConfMap d = ConfMap::zero({b.algebra.module}, b.module, 0);
        for (const auto& [a, da] : b.algebra.module.generators) {
            ModElement ag = ModElement::generator(a);
            PolyValue lv = evaluate(b.left, {ag, c.elem});
            PolyValue rv = evaluate(b.right, {c.elem, ag});
            for (const auto& [g, p] : lv.coords)
                d.add_entry({a}, g, p.substitute(Var::L(1), -Poly::D()));
            for (const auto& [g, p] : rv.coords)
                d.add_entry({a}, g, -p.substitute(Var::L(1), Poly::zero()));
        }
        out.map = d;
        return out;
    }
    int n = c.n;
    ConfMap d = insert(b.left, 2, c.map);
    for (int i = 1; i <= n; ++i) {
        ConfMap term = insert(c.map, i, b.algebra.mult);
        if (i % 2 == 0)
            d += term;
        else
            d -= term;
    }
    ConfMap last = insert(b.right, 1, c.map);
    if (n % 2 == 0)
        d -= last;
    else
        d += last;
    out.map = d;
    return out;
}

bool is_cocycle(const ConformalBimodule& b, const Cochain& c) {
    return hochschild_delta(b, c).is_zero();
}

bool is_coboundary_of(const ConformalBimodule& b, const Cochain& c,
                      const Cochain& d) {
    if (c.n != d.n + 1) return false;
    return hochschild_delta(b, d) == c;
}

namespace {

// One basis cochain of the truncation: a generator tuple, a target
// generator and a monomial, together spanning the sliced cochain space.
struct BasisItem {
    std::vector<std::string> key;
    std::string gen;
    Monomial mon;
};

std::vector<BasisItem> truncation_basis(const GradedModule& alg,
                                        const GradedModule& coeff, int n,
                                        int dmax, int lmax) {
    std::vector<BasisItem> basis;
    if (n == 0) {
        for (const auto& [g, d] : coeff.generators)
            basis.push_back({{}, g, Monomial{}});
        return basis;
    }
    std::vector<std::string> names;
    for (const auto& [g, d] : alg.generators) names.push_back(g);
    std::vector<size_t> idx(n, 0);
    for (;;) {
        std::vector<std::string> key(n);
        for (int i = 0; i < n; ++i) key[i] = names[idx[i]];
        // enumerate monomials D^a L1^b1 ... L_{n-1}^b_{n-1}
        std::vector<int> expo(n, 0);  // expo[0] = dpow
        for (;;) {
            Monomial m;
            m.dpow = expo[0];
            m.lpows.assign(expo.begin() + 1, expo.end());
            m.normalize();
            for (const auto& [g, d] : coeff.generators)
                basis.push_back({key, g, m});
            int j = n - 1;
            while (j >= 0 && ++expo[j] > (j == 0 ? dmax : lmax)) {
                expo[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        int j = n - 1;
        while (j >= 0 && ++idx[j] == names.size()) {
            idx[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return basis;
}

Cochain basis_cochain(const ConformalBimodule& b, int n, const BasisItem& item) {
    Cochain c;
    c.n = n;
    if (n == 0) {
        c.elem.add(item.gen, Poly::one());
        return c;
    }
    std::vector<GradedModule> src(n, b.algebra.module);
    c.map = ConfMap::zero(src, b.module, 0);
    Poly mono = Poly::D().pow(item.mon.dpow);
    for (size_t i = 0; i < item.mon.lpows.size(); ++i)
        mono *= Poly::L(static_cast<int>(i) + 1).pow(item.mon.lpows[i]);
    c.map.set_entry(item.key, item.gen, mono);
    return c;
}

// Flatten the image cochain into coordinates over dynamically discovered
// codomain basis elements.
void flatten(const Cochain& c,
             std::map<std::tuple<std::vector<std::string>, std::string, Monomial>,
                      size_t>& cols,
             std::vector<std::pair<size_t, Rational>>& out) {
    auto emit = [&](const std::vector<std::string>& key, const std::string& g,
                    const Monomial& m, const Rational& v) {
        auto [it, inserted] = cols.try_emplace({key, g, m}, cols.size());
        out.push_back({it->second, v});
    };
    if (c.n == 0) {
        for (const auto& [g, p] : c.elem.coords)
            for (const auto& [m, v] : p.terms()) emit({}, g, m, v);
    } else {
        for (const auto& [key, val] : c.map.table)
            for (const auto& [g, p] : val)
                for (const auto& [m, v] : p.terms()) emit(key, g, m, v);
    }
}

// Row-reduce and return both the rank and a basis of the null space of
// the linear map x -> x^T rows (i.e. combinations of rows summing to 0).
long row_nullspace(const std::vector<std::vector<Rational>>& rows_in, size_t width,
                   std::vector<std::vector<Rational>>* kernel) {
    size_t nrows = rows_in.size();
    // Work on the augmented matrix [A | I] so kernel combinations fall out.
    std::vector<std::vector<Rational>> m(nrows);
    for (size_t i = 0; i < nrows; ++i) {
        m[i] = rows_in[i];
        m[i].resize(width, 0);
        if (kernel) {
            m[i].resize(width + nrows, 0);
            m[i][width + i] = 1;
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < width && rank < nrows; ++col) {
        size_t piv = rank;
        while (piv < nrows && m[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = Rational(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    if (kernel) {
        for (size_t r = rank; r < nrows; ++r)
            kernel->emplace_back(m[r].begin() + width, m[r].end());
    }
    return static_cast<long>(rank);
}

}  // namespace

long rational_rank(std::vector<std::vector<Rational>> rows) {
    size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    return row_nullspace(rows, width, nullptr);
}

namespace {

// Shared worker: images of the truncation basis under delta, as rows.
void delta_matrix(const ConformalBimodule& b, int n, int dmax, int lmax,
                  std::vector<BasisItem>* basis,
                  std::vector<std::vector<Rational>>* rows, size_t* width) {
    *basis = truncation_basis(b.algebra.module, b.module, n, dmax, lmax);
    if (basis->empty()) throw std::invalid_argument("empty truncation");
    std::map<std::tuple<std::vector<std::string>, std::string, Monomial>, size_t>
        cols;
    std::vector<std::vector<std::pair<size_t, Rational>>> sparse;
    for (const auto& item : *basis) {
        Cochain c = basis_cochain(b, n, item);
        Cochain dc = hochschild_delta(b, c);
        sparse.emplace_back();
        flatten(dc, cols, sparse.back());
    }
    *width = cols.size();
    rows->assign(sparse.size(), std::vector<Rational>(cols.size(), 0));
    for (size_t i = 0; i < sparse.size(); ++i)
        for (const auto& [j, v] : sparse[i]) (*rows)[i][j] += v;
}

}  // namespace

DeltaRanks truncated_delta_ranks(const ConformalBimodule& b, int n, int dmax,
                                 int lmax) {
    std::vector<BasisItem> basis;
    std::vector<std::vector<Rational>> rows;
    size_t width = 0;
    delta_matrix(b, n, dmax, lmax, &basis, &rows, &width);
    DeltaRanks r;
    r.domain_dim = static_cast<long>(basis.size());
    r.rank = row_nullspace(rows, width, nullptr);
    r.kernel_dim = r.domain_dim - r.rank;
    return r;
}

std::vector<Cochain> truncated_kernel_basis(const ConformalBimodule& b, int n,
                                            int dmax, int lmax) {
    std::vector<BasisItem> basis;
    std::vector<std::vector<Rational>> rows;
    size_t width = 0;
    delta_matrix(b, n, dmax, lmax, &basis, &rows, &width);
    std::vector<std::vector<Rational>> kernel;
    row_nullspace(rows, width, &kernel);
    std::vector<Cochain> out;
    for (const auto& combo : kernel) {
        Cochain c;
        c.n = n;
        bool started = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (combo[i] == 0) continue;
            Cochain part = basis_cochain(b, n, basis[i]);
            if (n == 0) {
                if (!started) c.elem = ModElement{};
                c.elem += Poly(combo[i]) * part.elem;
            } else {
                if (!started)
                    c.map = ConfMap::zero(part.map.sources, part.map.target, 0);
                c.map += combo[i] * part.map;
            }
            started = true;
        }
        if (!started) {
            // zero combination cannot occur, but keep the row count honest
            c = basis_cochain(b, n, basis[0]);
            c.elem = ModElement{};
            c.map.table.clear();
        }
        out.push_back(std::move(c));
    }
    return out;
}

Cochain random_cochain(const GradedModule& algebra_module,
                       const GradedModule& coeff_module, int n, int dmax,
                       int lmax, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Cochain c;
    c.n = n;
    if (n == 0) {
        for (const auto& [g, d] : coeff_module.generators)
            c.elem.add(g, Poly(static_cast<long>(coef(rng))));
        return c;
    }
    auto basis = truncation_basis(algebra_module, coeff_module, n, dmax, lmax);
    std::vector<GradedModule> src(n, algebra_module);
    c.map = ConfMap::zero(src, coeff_module, 0);
    for (const auto& item : basis) {
        Poly mono = Poly::D().pow(item.mon.dpow);
        for (size_t i = 0; i < item.mon.lpows.size(); ++i)
            mono *= Poly::L(static_cast<int>(i) + 1).pow(item.mon.lpows[i]);
        c.map.add_entry(item.key, item.gen,
                        Rational(coef(rng)) * mono);
    }
    return c;
}

}  // namespace confalg
