#include "confalg/transfer.hpp"

#include <stdexcept>

namespace confalg {

namespace {

CheckReport shape_fail(const std::string& what) { return {false, what}; }

bool has_shape(const ConfMap& f, const std::vector<GradedModule>& sources,
               const GradedModule& target, int degree) {
    return f.sources == sources && f.target == target && f.degree == degree;
}

}  // namespace

CheckReport check_contraction(const Contraction& c) {
    const GradedModule& V = c.big;
    const GradedModule& W = c.small;
    if (!has_shape(c.rho1, {V}, V, -1)) return shape_fail("rho1 shape");
    if (!has_shape(c.theta1, {W}, W, -1)) return shape_fail("theta1 shape");
    if (!has_shape(c.p, {V}, W, 0)) return shape_fail("p shape");
    if (!has_shape(c.i, {W}, V, 0)) return shape_fail("i shape");
    if (!has_shape(c.h, {V}, V, 1)) return shape_fail("h shape");
    c.rho1.validate();
    c.theta1.validate();
    c.p.validate();
    c.i.validate();
    c.h.validate();

    CheckReport r = report_zero(insert(c.rho1, 1, c.rho1), "rho1^2");
    if (!r.pass) return r;
    r = report_zero(insert(c.theta1, 1, c.theta1), "theta1^2");
    if (!r.pass) return r;
    r = report_zero(insert(c.theta1, 1, c.p) - insert(c.p, 1, c.rho1),
                    "p chain map");
    if (!r.pass) return r;
    r = report_zero(insert(c.rho1, 1, c.i) - insert(c.i, 1, c.theta1),
                    "i chain map");
    if (!r.pass) return r;
    r = report_zero(insert(c.p, 1, c.i) - ConfMap::identity(W), "p i = id");
    if (!r.pass) return r;
    return report_zero(ConfMap::identity(V) - insert(c.i, 1, c.p) -
                           insert(c.rho1, 1, c.h) - insert(c.h, 1, c.rho1),
                       "homotopy identity");
}

ConfMap partial_rho1(const ConfMap& rho1, const ConfMap& f) {
    ConfMap out = diamond(rho1, f);
    ConfMap right = diamond(f, rho1);
    if (f.degree % 2 == 0) {
        out -= right;
    } else {
        out += right;
    }
    return out;
}

int PlanarTree::leaves() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
}

std::vector<PlanarTree> enumerate_trees(int k, bool binary) {
    if (k < 1) throw std::invalid_argument("enumerate_trees: k < 1");
    if (k == 1) return {PlanarTree{}};
    std::vector<PlanarTree> out;
    // Compositions k = k_1 + ... + k_l, l >= 2 (l = 2 in binary mode),
    // built left to right.
    struct Frame {
        std::vector<PlanarTree> chosen;
        int remaining;
    };
    std::vector<Frame> stack{{{}, k}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.remaining == 0) {
            if (f.chosen.size() >= 2) out.push_back(PlanarTree{f.chosen});
            continue;
        }
        if (binary && f.chosen.size() >= 2) continue;
        int max_part = binary ? (f.chosen.empty() ? f.remaining - 1 : f.remaining)
                              : f.remaining;
        for (int part = 1; part <= max_part; ++part) {
            if (!binary && f.chosen.empty() && part == f.remaining) continue;
            for (const auto& sub : enumerate_trees(part, binary)) {
                Frame next = f;
                next.chosen.push_back(sub);
                next.remaining -= part;
                stack.push_back(std::move(next));
            }
        }
    }
    return out;
}

ConfMap rho_tree(const PlanarTree& t, const AInf1Structure& s,
                 const ConfMap& h) {
    if (t.is_leaf())
        throw std::invalid_argument("rho_tree: tree must have >= 2 leaves");
    const int l = static_cast<int>(t.children.size());
    std::vector<ConfMap> inners;
    inners.reserve(l);
    for (const auto& child : t.children) {
        if (child.is_leaf()) {
            inners.push_back(ConfMap::identity(s.module));
        } else {
            inners.push_back(insert(h, 1, rho_tree(child, s, h)));
        }
    }
    return multi_insert(s.mult(l), inners);
}

namespace {

int internal_nodes(const PlanarTree& t) {
    if (t.is_leaf()) return 0;
    int n = 1;
    for (const auto& child : t.children) n += internal_nodes(child);
    return n;
}

}  // namespace

AInf1Structure transfer(const Contraction& c, const AInf1Structure& s,
                        int up_to_k, std::optional<TreeMode> mode) {
    if (up_to_k < 2) throw std::invalid_argument("transfer: bound < 2");
    if (s.module != c.big)
        throw std::invalid_argument("transfer: structure module != contraction big module");
    CheckReport r = check_contraction(c);
    if (!r.pass)
        throw std::invalid_argument("transfer: invalid contraction: " + r.detail);

    bool binary = true;
    for (const auto& [k, f] : s.mults)
        if (k > 2 && !f.is_zero()) binary = false;
    if (mode) binary = (*mode == TreeMode::binary);

    AInf1Structure out;
    out.module = c.small;
    if (!c.theta1.is_zero()) out.mults[1] = c.theta1;
    for (int k = 2; k <= up_to_k; ++k) {
        ConfMap rho_k = ConfMap::zero(
            std::vector<GradedModule>(k, c.big), c.big, -1);
        // One factor -1 per internal edge: the homotopy entering the
        // perturbation series is -h under the normalization
        // id - ip = rho1 h + h rho1 used here.
        for (const auto& t : enumerate_trees(k, binary)) {
            ConfMap term = rho_tree(t, s, c.h);
            if (internal_nodes(t) % 2 == 0) term = Rational(-1) * term;
            rho_k += term;
        }
        ConfMap theta_k = multi_insert(insert(c.p, 1, rho_k),
                                       std::vector<ConfMap>(k, c.i));
        if (!theta_k.is_zero()) out.mults[k] = theta_k;
    }
    return out;
}

AInfStructure transfer_ainf(const Contraction& c, const AInfStructure& s,
                            int up_to_k, std::optional<TreeMode> mode) {
    return unshift(transfer(c, shift(s), up_to_k, mode));
}

}  // namespace confalg
