#include "critdeg/family.hpp"

#include <stdexcept>

namespace critdeg {

PolytopeFamily::PolytopeFamily(int n, std::vector<LatticePolytope> members)
    : n_(n), members_(std::move(members)) {
    if (n_ < 1) throw std::invalid_argument("family dimension must be >= 1");
    if (static_cast<int>(members_.size()) != n_ + 1)
        throw std::invalid_argument("family must have exactly n+1 members");
    for (const auto& m : members_)
        if (m.ambient_dim() != n_)
            throw std::invalid_argument("family member has wrong ambient dimension");
}

const LatticePolytope& PolytopeFamily::member(int i) const {
    if (i < 0 || i > n_) throw std::out_of_range("family member index out of range");
    return members_[static_cast<std::size_t>(i)];
}

LatticePolytope subfamily_sum(const PolytopeFamily& f, const std::vector<int>& subset) {
    if (subset.empty()) return LatticePolytope::origin(f.n());
    LatticePolytope acc = f.member(subset[0]);
    for (std::size_t i = 1; i < subset.size(); ++i) acc = minkowski_sum(acc, f.member(subset[i]));
    return acc;
}

int subset_dim(const PolytopeFamily& f, const std::vector<int>& subset) {
    if (subset.empty()) return 0;
    // The affine hull of a Minkowski sum is the sum of the affine hulls, so the
    // stacked difference vectors of all selected members span it.
    std::vector<IntVec> diffs;
    for (int idx : subset) {
        const auto& verts = f.member(idx).vertices();
        for (std::size_t k = 1; k < verts.size(); ++k) diffs.push_back(vec_sub(verts[k], verts[0]));
    }
    if (diffs.empty()) return 0;
    return rank_int(IntMat::from_rows(diffs));
}

EssentialCertificate is_essential(const PolytopeFamily& f) {
    // Subsets are visited by increasing size, then lexicographically, so the
    // reported violator is the smallest one in that order.
    EssentialCertificate cert;
    for (int size = 1; size <= f.n(); ++size)
        for (const auto& subset : subsets_of_size(f.n() + 1, size))
            if (subset_dim(f, subset) < size) {
                cert.essential = false;
                cert.violating_subset = subset;
                return cert;
            }
    cert.essential = true;
    return cert;
}

std::vector<std::vector<int>> subsets_of_size(int limit, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > limit) return out;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (size == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(idx);
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == limit - size + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

}  // namespace critdeg
