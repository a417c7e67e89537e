#include "confalg/confmap.hpp"

#include <numeric>
#include <stdexcept>

namespace confalg {

Permutation identity_permutation(int k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    // Right action convention: (f.sigma).tau = f.(compose(sigma,tau)),
    // which sends i to tau(sigma(i)).
    Permutation r(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) r[i] = tau[sigma[i] - 1];
    return r;
}

int sgn(const Permutation& sigma) {
    int s = 1;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) s = -s;
    return s;
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    int e = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                e += degrees[sigma[i] - 1] * degrees[sigma[j] - 1];
    return e % 2 == 0 ? 1 : -1;
}

void ConfMap::add_entry(const std::vector<std::string>& key,
                        const std::string& gen, const Poly& p) {
    if (p.is_zero()) return;
    auto& val = table[key];
    auto it = val.find(gen);
    if (it == val.end()) {
        val.emplace(gen, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) val.erase(it);
    }
    if (val.empty()) table.erase(key);
}

void ConfMap::set_entry(const std::vector<std::string>& key,
                        const std::string& gen, const Poly& p) {
    if (p.is_zero()) {
        auto it = table.find(key);
        if (it != table.end()) {
            it->second.erase(gen);
            if (it->second.empty()) table.erase(it);
        }
        return;
    }
    table[key][gen] = p;
}

PolyValue ConfMap::value_on(const std::vector<std::string>& key) const {
    PolyValue v;
    v.arity = arity();
    auto it = table.find(key);
    if (it != table.end())
        for (const auto& [g, p] : it->second) v.add(g, p);
    return v;
}

void ConfMap::validate() const {
    for (const auto& [key, val] : table) {
        if (key.size() != sources.size())
            throw std::invalid_argument("ConfMap: key arity mismatch");
        int dsum = 0;
        for (size_t i = 0; i < key.size(); ++i) dsum += sources[i].degree_of(key[i]);
        for (const auto& [g, p] : val) {
            if (target.degree_of(g) != dsum + degree)
                throw std::invalid_argument(
                    "ConfMap: degree mismatch at target generator " + g);
            if (p.max_l_index() >= arity())
                throw std::invalid_argument("ConfMap: lambda index out of range");
        }
    }
}

namespace {

void check_compatible(const ConfMap& a, const ConfMap& b) {
    if (a.sources != b.sources || a.target != b.target || a.degree != b.degree)
        throw std::invalid_argument("ConfMap: incompatible maps in sum");
}

}  // namespace

ConfMap& ConfMap::operator+=(const ConfMap& o) {
    check_compatible(*this, o);
    for (const auto& [key, val] : o.table)
        for (const auto& [g, p] : val) add_entry(key, g, p);
    return *this;
}

ConfMap& ConfMap::operator-=(const ConfMap& o) {
    check_compatible(*this, o);
    for (const auto& [key, val] : o.table)
        for (const auto& [g, p] : val) add_entry(key, g, -p);
    return *this;
}

ConfMap operator-(const ConfMap& a) {
    ConfMap r = a;
    for (auto& [key, val] : r.table)
        for (auto& [g, p] : val) p = -p;
    return r;
}

ConfMap operator*(const Rational& c, const ConfMap& f) {
    ConfMap r = f;
    if (c == 0) {
        r.table.clear();
        return r;
    }
    for (auto& [key, val] : r.table)
        for (auto& [g, p] : val) p = c * p;
    return r;
}

ConfMap ConfMap::zero(std::vector<GradedModule> sources, GradedModule target,
                      int degree) {
    ConfMap r;
    r.sources = std::move(sources);
    r.target = std::move(target);
    r.degree = degree;
    return r;
}

ConfMap ConfMap::identity(const GradedModule& m) {
    ConfMap r = zero({m}, m, 0);
    for (const auto& [name, deg] : m.generators)
        r.set_entry({name}, name, Poly::one());
    return r;
}

PolyValue evaluate(const ConfMap& f, const std::vector<ModElement>& args) {
    int k = f.arity();
    if (static_cast<int>(args.size()) != k)
        throw std::invalid_argument("evaluate: arity mismatch");
    for (int j = 0; j < k; ++j)
        if (!args[j].homogeneous_degree(f.sources[j], nullptr))
            throw std::invalid_argument("evaluate: inhomogeneous argument");

    PolyValue result;
    result.arity = k;

    // Cartesian product over the nonzero coordinates of each argument.
    std::vector<std::map<std::string, Poly>::const_iterator> its(k), begins(k),
        ends(k);
    for (int j = 0; j < k; ++j) {
        begins[j] = args[j].coords.begin();
        ends[j] = args[j].coords.end();
        if (begins[j] == ends[j]) return result;
        its[j] = begins[j];
    }
    Poly lam_sum;
    for (int j = 1; j < k; ++j) lam_sum += Poly::L(j);

    for (;;) {
        std::vector<std::string> key(k);
        Poly factor = Poly::one();
        for (int j = 0; j < k; ++j) {
            key[j] = its[j]->first;
            const Poly& p = its[j]->second;
            if (p.max_l_index() > 0)
                throw std::invalid_argument("evaluate: argument coordinate uses L");
            if (j < k - 1)
                factor *= p.substitute(Var::D(), -Poly::L(j + 1));
            else
                factor *= p.substitute(Var::D(), Poly::D() + lam_sum);
        }
        auto it = f.table.find(key);
        if (it != f.table.end())
            for (const auto& [g, q] : it->second) result.add(g, factor * q);
        int j = k - 1;
        while (j >= 0 && ++its[j] == ends[j]) {
            its[j] = begins[j];
            --j;
        }
        if (j < 0) break;
    }
    return result;
}

ConfMap multi_insert(const ConfMap& outer, const std::vector<ConfMap>& inners) {
    int k = outer.arity();
    if (static_cast<int>(inners.size()) != k)
        throw std::invalid_argument("multi_insert: need one inner map per slot");
    for (int j = 0; j < k; ++j)
        if (inners[j].target != outer.sources[j])
            throw std::invalid_argument("multi_insert: module mismatch at slot " +
                                        std::to_string(j + 1));

    std::vector<int> offset(k + 1, 0);
    for (int j = 0; j < k; ++j) offset[j + 1] = offset[j] + inners[j].arity();
    int p = offset[k];

    ConfMap result;
    result.target = outer.target;
    result.degree = outer.degree;
    for (int j = 0; j < k; ++j) {
        result.degree += inners[j].degree;
        result.sources.insert(result.sources.end(), inners[j].sources.begin(),
                              inners[j].sources.end());
    }

    // Lambda sum of block j: all slots the block occupies, last included.
    auto block_sum = [&](int j) {
        Poly s;
        for (int t = offset[j] + 1; t <= offset[j + 1]; ++t) s += Poly::L(t);
        return s;
    };
    Poly head_sum;  // L1 + ... + L_{offset[k-1]}, for the last block's D shift
    for (int t = 1; t <= offset[k - 1]; ++t) head_sum += Poly::L(t);

    // The variable substitutions depend only on the slot, not on the entry
    // combination, so transform every inner entry and the outer table once
    // up front and combine plain polynomials inside the loops.
    struct Entry {
        std::vector<std::string> key;
        int key_degree = 0;
        std::vector<std::pair<std::string, Poly>> vals;
    };
    std::vector<std::vector<Entry>> entries(k);
    for (int j = 0; j < k; ++j) {
        std::map<int, Poly> subst;
        for (int m = 1; m < inners[j].arity(); ++m)
            subst[m] = Poly::L(offset[j] + m);
        if (j < k - 1)
            subst[0] = -block_sum(j);
        else
            subst[0] = Poly::D() + head_sum;
        for (const auto& [key, val] : inners[j].table) {
            Entry e;
            e.key = key;
            for (size_t t = 0; t < key.size(); ++t)
                e.key_degree += inners[j].sources[t].degree_of(key[t]);
            for (const auto& [g, q] : val)
                e.vals.emplace_back(g, q.substitute_many(subst));
            entries[j].push_back(std::move(e));
        }
        if (entries[j].empty()) return result;
    }
    std::map<std::vector<std::string>, std::vector<std::pair<std::string, Poly>>>
        outer_sub;
    {
        std::map<int, Poly> osub;
        for (int j = 1; j < k; ++j) osub[j] = block_sum(j - 1);
        for (const auto& [key, val] : outer.table) {
            auto& v = outer_sub[key];
            for (const auto& [g, q] : val)
                v.emplace_back(g, q.substitute_many(osub));
        }
    }

    // Iterate over one table entry per inner, then one target generator of
    // each entry, matching the resulting tuple against the outer table.
    std::vector<size_t> pick(k, 0);
    for (;;) {
        // Koszul sign: inner j of degree m_j crosses the arguments of
        // blocks 1..j-1.
        int sign_exp = 0;
        {
            int earlier = 0;
            for (int j = 0; j < k; ++j) {
                sign_exp += inners[j].degree * earlier;
                earlier += entries[j][pick[j]].key_degree;
            }
        }
        bool negate = sign_exp % 2 != 0;

        std::vector<std::string> big_key;
        big_key.reserve(p);
        for (int j = 0; j < k; ++j)
            big_key.insert(big_key.end(), entries[j][pick[j]].key.begin(),
                           entries[j][pick[j]].key.end());

        bool empty = false;
        for (int j = 0; j < k; ++j)
            if (entries[j][pick[j]].vals.empty()) empty = true;
        std::vector<size_t> vpick(k, 0);
        while (!empty) {
            std::vector<std::string> mid(k);
            for (int j = 0; j < k; ++j)
                mid[j] = entries[j][pick[j]].vals[vpick[j]].first;
            auto oit = outer_sub.find(mid);
            if (oit != outer_sub.end()) {
                // Skip factors equal to one; identity inners contribute
                // nothing but their generator label.
                Poly factor;
                bool have = false;
                for (int j = 0; j < k; ++j) {
                    const Poly& q = entries[j][pick[j]].vals[vpick[j]].second;
                    if (q.is_one()) continue;
                    if (have)
                        factor *= q;
                    else {
                        factor = q;
                        have = true;
                    }
                }
                for (const auto& [g, q] : oit->second) {
                    Poly prod = have ? (q.is_one() ? factor : factor * q) : q;
                    result.add_entry(big_key, g, negate ? -prod : prod);
                }
            }
            int j = k - 1;
            while (j >= 0 && ++vpick[j] == entries[j][pick[j]].vals.size()) {
                vpick[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        int j = k - 1;
        while (j >= 0 && ++pick[j] == entries[j].size()) {
            pick[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return result;
}

ConfMap insert(const ConfMap& outer, int i, const ConfMap& inner) {
    if (i < 1 || i > outer.arity())
        throw std::invalid_argument("insert: slot out of range");
    std::vector<ConfMap> inners;
    inners.reserve(outer.arity());
    for (int j = 1; j <= outer.arity(); ++j)
        inners.push_back(j == i ? inner : ConfMap::identity(outer.sources[j - 1]));
    return multi_insert(outer, inners);
}

ConfMap diamond(const ConfMap& f, const ConfMap& g) {
    ConfMap r;
    bool first = true;
    for (int i = 1; i <= f.arity(); ++i) {
        ConfMap term = insert(f, i, g);
        if (first) {
            r = std::move(term);
            first = false;
        } else {
            r += term;
        }
    }
    return r;
}

ConfMap relabel(const ConfMap& f, const GradedModule& big,
                const std::vector<std::string>& source_prefixes,
                const std::string& target_prefix) {
    if (source_prefixes.size() != static_cast<size_t>(f.arity()))
        throw std::invalid_argument("relabel: one prefix per slot expected");
    ConfMap r;
    r.sources.assign(f.arity(), big);
    r.target = big;
    r.degree = f.degree;
    for (const auto& [key, val] : f.table) {
        std::vector<std::string> nk(key.size());
        for (size_t i = 0; i < key.size(); ++i) nk[i] = source_prefixes[i] + key[i];
        for (const auto& [g, p] : val) r.add_entry(nk, target_prefix + g, p);
    }
    return r;
}

ConfMap permute(const ConfMap& f, const Permutation& sigma) {
    int k = f.arity();
    if (static_cast<int>(sigma.size()) != k)
        throw std::invalid_argument("permute: wrong permutation size");
    Permutation inv(k);
    for (int j = 1; j <= k; ++j) inv[sigma[j - 1] - 1] = j;

    ConfMap r;
    r.target = f.target;
    r.degree = f.degree;
    r.sources.resize(k);
    for (int i = 1; i <= k; ++i) r.sources[i - 1] = f.sources[inv[i - 1] - 1];

    // Formal assignment of position i: L_i for i < k, and
    // -(L1+...+L_{k-1}) - D for the last position.
    Poly last = -Poly::D();
    for (int i = 1; i < k; ++i) last -= Poly::L(i);
    auto assign = [&](int pos) { return pos < k ? Poly::L(pos) : last; };

    std::map<int, Poly> subst;
    for (int j = 1; j < k; ++j) subst[j] = assign(sigma[j - 1]);

    for (const auto& [key, val] : f.table) {
        std::vector<std::string> new_key(k);
        for (int j = 1; j <= k; ++j) new_key[sigma[j - 1] - 1] = key[j - 1];
        for (const auto& [g, p] : val)
            r.add_entry(new_key, g, p.substitute_many(subst));
    }
    return r;
}

namespace {

std::vector<Permutation> all_permutations(int k) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(k);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> key_degrees(const ConfMap& f,
                             const std::vector<std::string>& key) {
    std::vector<int> d(key.size());
    for (size_t i = 0; i < key.size(); ++i) d[i] = f.sources[i].degree_of(key[i]);
    return d;
}

}  // namespace

ConfMap symmetrize(const ConfMap& f, SymMode mode) {
    int k = f.arity();
    ConfMap r = ConfMap::zero(f.sources, f.target, f.degree);
    for (const auto& sigma : all_permutations(k)) {
        ConfMap g = permute(f, sigma);
        if (g.sources != f.sources)
            throw std::invalid_argument("symmetrize: mixed source modules");
        int s0 = mode == SymMode::skew ? sgn(sigma) : 1;
        for (const auto& [key, val] : g.table) {
            Rational s(s0 * koszul_sign(sigma, key_degrees(g, key)));
            for (const auto& [gen, p] : val) r.add_entry(key, gen, s * p);
        }
    }
    return r;
}

bool is_symmetric(const ConfMap& f, SymMode mode) {
    int k = f.arity();
    for (int i = 1; i < k; ++i) {
        Permutation sigma = identity_permutation(k);
        std::swap(sigma[i - 1], sigma[i]);
        ConfMap g = permute(f, sigma);
        // f must equal [sgn]*koszul*g entry by entry.
        ConfMap diff = f;
        int s0 = mode == SymMode::skew ? -1 : 1;
        for (const auto& [key, val] : g.table) {
            auto degs = key_degrees(g, key);
            Rational s(-s0 * (degs[i - 1] * degs[i] % 2 == 0 ? 1 : -1));
            for (const auto& [gen, p] : val) diff.add_entry(key, gen, s * p);
        }
        if (!diff.is_zero()) return false;
    }
    return true;
}

}  // namespace confalg
