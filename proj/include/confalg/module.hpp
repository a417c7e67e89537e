#ifndef CONFALG_MODULE_HPP
#define CONFALG_MODULE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "confalg/poly.hpp"

namespace confalg {

/// Free graded module of finite rank over the polynomial ring in D.
/// Generators are kept in a fixed order; that order drives tuple
/// enumeration and serialization. Names must be unique module-wide.
struct GradedModule {
    std::vector<std::pair<std::string, int>> generators;  // (name, degree)

    GradedModule() = default;
    explicit GradedModule(std::vector<std::pair<std::string, int>> gens)
        : generators(std::move(gens)) {
        for (size_t i = 0; i < generators.size(); ++i)
            for (size_t j = i + 1; j < generators.size(); ++j)
                if (generators[i].first == generators[j].first)
                    throw std::invalid_argument("duplicate generator name: " +
                                                generators[i].first);
    }

    size_t rank() const { return generators.size(); }
    bool has(const std::string& name) const {
        return std::any_of(generators.begin(), generators.end(),
                           [&](const auto& g) { return g.first == name; });
    }
    int degree_of(const std::string& name) const {
        for (const auto& [n, d] : generators)
            if (n == name) return d;
        throw std::invalid_argument("unknown generator: " + name);
    }

    friend bool operator==(const GradedModule&, const GradedModule&) = default;
};

inline GradedModule degree_shift(const GradedModule& m, int s) {
    GradedModule r = m;
    for (auto& [n, d] : r.generators) d += s;
    return r;
}

/// Element of a GradedModule: finitely many coordinates, each a polynomial
/// in D alone. Zero coordinates are never stored.
struct ModElement {
    std::map<std::string, Poly> coords;

    ModElement() = default;
    static ModElement generator(const std::string& name) {
        ModElement e;
        e.coords[name] = Poly::one();
        return e;
    }

    bool is_zero() const { return coords.empty(); }
    void add(const std::string& gen, const Poly& p) {
        if (p.is_zero()) return;
        auto it = coords.find(gen);
        if (it == coords.end()) {
            coords.emplace(gen, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) coords.erase(it);
        }
    }
    ModElement& operator+=(const ModElement& o) {
        for (const auto& [g, p] : o.coords) add(g, p);
        return *this;
    }
    friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
    friend ModElement operator*(const Poly& p, const ModElement& e) {
        ModElement r;
        for (const auto& [g, q] : e.coords) r.add(g, p * q);
        return r;
    }
    friend bool operator==(const ModElement&, const ModElement&) = default;

    /// True if all generators with nonzero coordinates share one degree in m;
    /// vacuously true for zero. Sets *deg when nonzero.
    bool homogeneous_degree(const GradedModule& m, int* deg) const {
        bool seen = false;
        int d = 0;
        for (const auto& [g, p] : coords) {
            int dg = m.degree_of(g);
            if (!seen) {
                d = dg;
                seen = true;
            } else if (dg != d) {
                return false;
            }
        }
        if (seen && deg) *deg = d;
        return true;
    }
};

inline ModElement apply_partial(const ModElement& e) {
    ModElement r;
    for (const auto& [g, p] : e.coords) r.add(g, Poly::D() * p);
    return r;
}

/// Module-valued polynomial in D and the lambda slots L1..L_{arity-1}.
struct PolyValue {
    int arity = 1;  // number of lambda slots is arity - 1
    std::map<std::string, Poly> coords;

    bool is_zero() const { return coords.empty(); }
    void add(const std::string& gen, const Poly& p) {
        if (p.is_zero()) return;
        if (p.max_l_index() >= arity)
            throw std::invalid_argument("PolyValue: lambda index out of range");
        auto it = coords.find(gen);
        if (it == coords.end()) {
            coords.emplace(gen, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) coords.erase(it);
        }
    }
    friend bool operator==(const PolyValue&, const PolyValue&) = default;
};

}  // namespace confalg

#endif
