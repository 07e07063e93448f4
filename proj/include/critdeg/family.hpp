#pragma once

#include <optional>
#include <vector>

#include "critdeg/polytope.hpp"

namespace critdeg {

// Certificate for the essential-family property: dim(sum over J) >= |J| for
// every nonempty J of size at most n.  When the property fails, the first
// violating subset in lexicographic order is recorded.
struct EssentialCertificate {
    bool essential = false;
    std::optional<std::vector<int>> violating_subset;
};

// Ordered family of n+1 lattice polytopes in Z^n.
class PolytopeFamily {
public:
    PolytopeFamily(int n, std::vector<LatticePolytope> members);

    int n() const { return n_; }
    int size() const { return n_ + 1; }
    const LatticePolytope& member(int i) const;
    const std::vector<LatticePolytope>& members() const { return members_; }

private:
    int n_;
    std::vector<LatticePolytope> members_;
};

// Minkowski sum of the selected members; the empty subset yields the origin.
LatticePolytope subfamily_sum(const PolytopeFamily& f, const std::vector<int>& subset);

// Affine dimension of the subfamily sum without building its hull (rank of
// the combined vertex-difference lattice).
int subset_dim(const PolytopeFamily& f, const std::vector<int>& subset);

EssentialCertificate is_essential(const PolytopeFamily& f);

// Subsets of {0,...,limit-1} of the given size, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int limit, int size);

}  // namespace critdeg
