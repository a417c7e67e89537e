#ifndef CONFALG_TRANSFER_HPP
#define CONFALG_TRANSFER_HPP

#include <optional>

#include "confalg/ainf.hpp"

namespace confalg {

/// Deformation retract data between two complexes of C[D]-modules:
/// p, i chain maps of degree 0, h a degree +1 homotopy with
/// id - ip = rho1 h + h rho1 and p i = id.
struct Contraction {
    GradedModule big;
    ConfMap rho1;  // differential on big, degree -1
    GradedModule small;
    ConfMap theta1;  // differential on small, degree -1
    ConfMap p;       // big -> small
    ConfMap i;       // small -> big
    ConfMap h;       // big -> big, degree +1
};

CheckReport check_contraction(const Contraction& c);

/// partial_{rho1}(f) = [[rho1, f]] = rho1 <> f - (-1)^{deg f} f <> rho1.
ConfMap partial_rho1(const ConfMap& rho1, const ConfMap& f);

/// Planar rooted tree; a node with no children is a leaf, every internal
/// node has >= 2 children.
struct PlanarTree {
    std::vector<PlanarTree> children;

    bool is_leaf() const { return children.empty(); }
    int leaves() const;
};

/// All planar trees with k leaves; binary restricts to arity-2 nodes.
std::vector<PlanarTree> enumerate_trees(int k, bool binary);

/// The tree composite rho_T = rho_l((h rho_{T_1}) (x) ... (x) (h rho_{T_l}))
/// with h rho_| = id on leaves. T must have >= 2 leaves.
ConfMap rho_tree(const PlanarTree& t, const AInf1Structure& s, const ConfMap& h);

enum class TreeMode { binary, general };

/// Homotopy transfer: theta_1 from the contraction, theta_k = p rho_k i^{(x)k}
/// with rho_k summed over trees. Mode defaults to binary when the input has
/// no multiplication above arity 2.
AInf1Structure transfer(const Contraction& c, const AInf1Structure& s,
                        int up_to_k,
                        std::optional<TreeMode> mode = std::nullopt);

/// Unshifted variant: the contraction is given on the shifted complexes.
AInfStructure transfer_ainf(const Contraction& c, const AInfStructure& s,
                            int up_to_k,
                            std::optional<TreeMode> mode = std::nullopt);

}  // namespace confalg

#endif
