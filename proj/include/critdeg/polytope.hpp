#pragma once

#include <vector>

#include "critdeg/ints.hpp"
#include "critdeg/linalg.hpp"

namespace critdeg {

// Inequality <normal, y> >= rhs in chart coordinates.
struct ChartFacet {
    IntVec normal;
    Int rhs;
    bool operator<(const ChartFacet& o) const {
        return normal < o.normal || (normal == o.normal && rhs < o.rhs);
    }
    bool operator==(const ChartFacet& o) const { return normal == o.normal && rhs == o.rhs; }
};

// Inequality <normal, x> >= -offset in ambient coordinates, valid within the
// affine hull of the polytope.
struct AmbientFacet {
    IntVec normal;
    Int offset;
};

// Equation <coeffs, x> = rhs cutting out the affine hull.
struct AffineEquation {
    IntVec coeffs;
    Int rhs;
};

// Convex hull of finitely many points of Z^n, in exact integer arithmetic.
//
// Internally the polytope is stored in a chart: a base point together with a
// basis of the saturated lattice spanned by vertex differences.  Chart
// coordinates identify (affine hull) ∩ Z^n with Z^dim, so facet tests and
// lattice point enumeration run full-dimensionally regardless of how the
// polytope sits in its ambient space.
class LatticePolytope {
public:
    // Normalizes an arbitrary finite point set: deduplicates, keeps extreme
    // points only, derives the facet description.
    static LatticePolytope hull(int ambient_dim, std::vector<IntVec> points);
    static LatticePolytope point(const IntVec& p);
    static LatticePolytope origin(int ambient_dim);

    int ambient_dim() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return verts_; }
    const std::vector<IntVec>& chart_vertices() const { return chart_verts_; }
    const std::vector<ChartFacet>& chart_facets() const { return chart_facets_; }

    // Chart data: ambient(y) = base + sum_k y_k * basis[k].
    const IntVec& chart_base() const { return base_; }
    const std::vector<IntVec>& chart_basis() const { return basis_; }

    std::vector<AmbientFacet> facets_ambient() const;
    std::vector<AffineEquation> affine_hull_equations() const;

    bool contains(const IntVec& x) const;
    std::vector<IntVec> lattice_points() const;
    std::vector<IntVec> relative_interior_points() const;
    long long lstar() const;

    // Support value min over vertices of <x, direction>.
    Wide support_min(const IntVec& direction) const;

    bool operator==(const LatticePolytope& o) const {
        return n_ == o.n_ && verts_ == o.verts_;
    }

private:
    LatticePolytope() = default;

    int n_ = 0;
    int dim_ = 0;
    std::vector<IntVec> verts_;        // extreme points, lex sorted
    IntVec base_;                      // chart base point
    std::vector<IntVec> basis_;        // dim_ basis vectors of the saturated lattice
    std::vector<IntVec> chart_verts_;  // aligned with verts_
    std::vector<ChartFacet> chart_facets_;
    std::vector<AffineEquation> hull_eqs_;
};

int affine_dim(const LatticePolytope& p);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
std::vector<IntVec> lattice_points(const LatticePolytope& p);
long long lstar(const LatticePolytope& p);
long long lstar_k(const LatticePolytope& p, int k);

// Integer points of {m : <normals[j], m> >= rhs[j] for all j}.  The system
// must be pointed (normals of full rank); unbounded systems are rejected.
std::vector<IntVec> lattice_points_of_hrep(const std::vector<IntVec>& normals,
                                           const std::vector<Int>& rhs);

// Rational vertices num/den (den > 0) of the same system; used for bounding
// boxes and for exact polytope reconstruction checks.
struct RationalPoint {
    IntVec num;
    Int den;
};
std::vector<RationalPoint> vertices_of_hrep(const std::vector<IntVec>& normals,
                                            const std::vector<Int>& rhs);

}  // namespace critdeg
