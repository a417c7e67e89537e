#ifndef CONFALG_POLY_HPP
#define CONFALG_POLY_HPP

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace confalg {

using Rational = boost::multiprecision::cpp_rational;

/// A variable of the polynomial ring: index 0 is D (the formal symbol for
/// the derivative), index i >= 1 is L_i (the i-th lambda variable).
struct Var {
    int index = 0;

    static Var D() { return Var{0}; }
    static Var L(int i) { return Var{i}; }

    bool is_d() const { return index == 0; }
    friend auto operator<=>(const Var&, const Var&) = default;
};

/// Exponent vector of one monomial: D^dpow * L1^lpows[0] * L2^lpows[1] * ...
/// Normalized form drops trailing zero exponents from lpows.
struct Monomial {
    int dpow = 0;
    // Inline storage: lambda indices stay small, and monomials are copied
    // and compared constantly in the map kernels.
    boost::container::small_vector<int, 8> lpows;

    void normalize() {
        while (!lpows.empty() && lpows.back() == 0) lpows.pop_back();
    }
    int total_degree() const {
        int t = dpow;
        for (int e : lpows) t += e;
        return t;
    }
    int exponent(Var v) const {
        if (v.is_d()) return dpow;
        int i = v.index - 1;
        return i < static_cast<int>(lpows.size()) ? lpows[i] : 0;
    }
    int max_l_index() const { return static_cast<int>(lpows.size()); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Graded lexicographic with D < L1 < L2 < ...; fixes serialization order.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int ta = a.total_degree(), tb = b.total_degree();
        if (ta != tb) return ta < tb;
        size_t n = std::max(a.lpows.size(), b.lpows.size());
        for (size_t i = n; i-- > 0;) {
            int ea = i < a.lpows.size() ? a.lpows[i] : 0;
            int eb = i < b.lpows.size() ? b.lpows[i] : 0;
            if (ea != eb) return ea < eb;
        }
        return a.dpow < b.dpow;
    }
};

/// Exact multivariate polynomial over Q in D and L1, L2, ...
/// Fully commutative; no zero coefficients are ever stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly variable(Var v) {
        Poly p;
        Monomial m;
        if (v.is_d()) {
            m.dpow = 1;
        } else {
            m.lpows.assign(v.index, 0);
            m.lpows[v.index - 1] = 1;
        }
        p.terms_[m] = 1;
        return p;
    }
    static Poly D() { return variable(Var::D()); }
    static Poly L(int i) { return variable(Var::L(i)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Monomial{});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
               terms_.begin()->second == 1;
    }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    /// *this += o or *this -= o without building an intermediate copy.
    Poly& add_scaled(const Poly& o, bool negate) {
        for (const auto& [m, c] : o.terms_) add_term(m, negate ? -c : c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.dpow += mb.dpow;
                if (m.lpows.size() < mb.lpows.size())
                    m.lpows.resize(mb.lpows.size(), 0);
                for (size_t i = 0; i < mb.lpows.size(); ++i)
                    m.lpows[i] += mb.lpows[i];
                m.normalize();
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, k] : p.terms_) r.terms_[m] = c * k;
        return r;
    }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(int e) const {
        Poly r = one();
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Replace every occurrence of `v` by `expr`.
    Poly substitute(Var v, const Poly& expr) const {
        return substitute_many({{v.index, expr}});
    }

    /// Simultaneous substitution, keyed by variable index (0 = D).
    Poly substitute_many(const std::map<int, Poly>& subst) const {
        // Powers of the replacement polynomials recur across terms, so
        // they are computed once per call.
        std::map<std::pair<int, int>, Poly> pows;
        auto power = [&](int idx, int e) -> const Poly& {
            auto it = pows.find({idx, e});
            if (it != pows.end()) return it->second;
            auto sit = subst.find(idx);
            Poly base = sit != subst.end() ? sit->second
                                           : (idx == 0 ? D() : L(idx));
            return pows.emplace(std::pair{idx, e}, base.pow(e)).first->second;
        };
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly term(c);
            if (m.dpow > 0) term *= power(0, m.dpow);
            for (size_t i = 0; i < m.lpows.size(); ++i) {
                if (m.lpows[i] == 0) continue;
                int idx = static_cast<int>(i) + 1;
                term *= power(idx, m.lpows[i]);
            }
            r += term;
        }
        return r;
    }

    /// Rename L variables; the mapping must be injective on the L indices
    /// that actually occur.
    Poly rename_lvars(const std::map<int, int>& mapping) const;

    /// Coefficient of L_i^e, as a polynomial in the remaining variables.
    Poly coefficient_of(Var v, int e) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m.exponent(v) != e) continue;
            Monomial m2 = m;
            if (v.is_d())
                m2.dpow = 0;
            else if (v.index <= static_cast<int>(m2.lpows.size()))
                m2.lpows[v.index - 1] = 0;
            m2.normalize();
            r.add_term(m2, c);
        }
        return r;
    }

    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;  // -1 for the zero polynomial
    }
    int max_l_index() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.max_l_index());
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::string to_string() const;
    static Poly parse(const std::string& text);

private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

}  // namespace confalg

#endif
