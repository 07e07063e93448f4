#include <doctest.h>

#include <set>

#include "critdeg/polytope.hpp"
#include "critdeg/simplex.hpp"
#include "test_support.hpp"

using namespace critdeg;
using testsup::Rng;

namespace {

LatticePolytope unit_square() {
    return LatticePolytope::hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

// Independent ground truth: scan the vertex bounding box and decide
// membership with the exact LP oracle, never with the facet description.
std::vector<IntVec> scan_box_oracle(const LatticePolytope& p, bool relative_interior) {
    const int n = p.ambient_dim();
    IntVec lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        Int mn = p.vertices()[0][static_cast<std::size_t>(c)], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[static_cast<std::size_t>(c)]);
            mx = std::max(mx, v[static_cast<std::size_t>(c)]);
        }
        lo[static_cast<std::size_t>(c)] = mn;
        hi[static_cast<std::size_t>(c)] = mx;
    }
    std::vector<IntVec> out;
    IntVec x = lo;
    while (true) {
        const bool in = relative_interior ? point_in_relative_interior(x, p.vertices())
                                          : point_in_hull(x, p.vertices());
        if (in) out.push_back(x);
        int c = n - 1;
        while (c >= 0 && x[static_cast<std::size_t>(c)] == hi[static_cast<std::size_t>(c)]) --c;
        if (c < 0) break;
        ++x[static_cast<std::size_t>(c)];
        for (int j = c + 1; j < n; ++j) x[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace

TEST_CASE("affine_dim on basic shapes") {
    CHECK(affine_dim(LatticePolytope::point({5, 7})) == 0);
    CHECK(affine_dim(LatticePolytope::hull(2, {{0, 0}, {2, 0}})) == 1);
    CHECK(affine_dim(unit_square()) == 2);
    CHECK(affine_dim(LatticePolytope::hull(3, {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}})) == 1);
}

TEST_CASE("hull keeps extreme points only") {
    auto p = LatticePolytope::hull(2, {{0, 0}, {2, 0}, {1, 0}, {0, 2}, {1, 1}, {0, 1}});
    CHECK(p.vertices() == std::vector<IntVec>{{0, 0}, {0, 2}, {2, 0}});

    // collinear input in Z^3
    auto seg = LatticePolytope::hull(3, {{0, 0, 0}, {1, 1, 1}, {3, 3, 3}, {2, 2, 2}});
    CHECK(seg.vertices() == std::vector<IntVec>{{0, 0, 0}, {3, 3, 3}});
}

TEST_CASE("minkowski_sum basics") {
    auto p = LatticePolytope::hull(2, {{0, 0}, {2, 0}, {0, 3}});
    auto zero = LatticePolytope::point({0, 0});
    CHECK(minkowski_sum(p, zero) == p);

    auto h = LatticePolytope::hull(2, {{0, 0}, {1, 0}});
    auto v = LatticePolytope::hull(2, {{0, 0}, {0, 1}});
    CHECK(minkowski_sum(h, v) == unit_square());

    // segment + square + square = [0,4] x [0,2]
    auto seg = LatticePolytope::hull(2, {{0, 0}, {2, 0}});
    auto rect = minkowski_sum(minkowski_sum(seg, unit_square()), unit_square());
    CHECK(rect.vertices() == std::vector<IntVec>{{0, 0}, {0, 2}, {4, 0}, {4, 2}});

    CHECK_THROWS_AS(minkowski_sum(p, LatticePolytope::point({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("minkowski_sum is associative and commutative on vertex sets") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(2));
        auto a = testsup::random_polytope(rng, n, 3);
        auto b = testsup::random_polytope(rng, n, 3);
        auto c = testsup::random_polytope(rng, n, 3);
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
        CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    }
}

TEST_CASE("lattice_points on the worked examples") {
    CHECK(unit_square().lattice_points().size() == 4);
    auto seg = LatticePolytope::hull(2, {{0, 0}, {2, 0}});
    CHECK(seg.lattice_points() == std::vector<IntVec>{{0, 0}, {1, 0}, {2, 0}});

    auto rect = LatticePolytope::hull(2, {{0, 0}, {4, 0}, {0, 2}, {4, 2}});
    auto pts = rect.lattice_points();
    CHECK(pts.size() == 15);
    CHECK(testsup::sorted_equal(pts, scan_box_oracle(rect, false)));
}

TEST_CASE("lstar on the worked examples") {
    CHECK(unit_square().lstar() == 0);
    CHECK(LatticePolytope::hull(2, {{0, 0}, {2, 0}}).lstar() == 1);
    CHECK(LatticePolytope::hull(2, {{0, 0}, {3, 0}, {0, 3}}).lstar() == 1);

    auto rect = LatticePolytope::hull(2, {{0, 0}, {4, 0}, {0, 2}, {4, 2}});
    CHECK(rect.lstar() == 3);
    CHECK(rect.relative_interior_points() == std::vector<IntVec>{{1, 1}, {2, 1}, {3, 1}});

    // relative interior of a point is the point
    CHECK(LatticePolytope::point({5, 7}).lstar() == 1);
}

TEST_CASE("lstar_k gates on the affine dimension") {
    auto seg = LatticePolytope::hull(2, {{0, 0}, {2, 0}});
    CHECK(lstar_k(seg, 1) == 1);
    CHECK(lstar_k(seg, 2) == 0);
    CHECK(lstar_k(LatticePolytope::point({0}), 1) == 0);
    CHECK(lstar_k(LatticePolytope::point({0}), 0) == 1);
    CHECK_THROWS_AS(lstar_k(seg, -1), std::invalid_argument);
}

TEST_CASE("hull idempotence (property)") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(4));
        auto p = testsup::random_polytope(rng, n, 4);
        auto q = LatticePolytope::hull(n, p.vertices());
        CHECK(p == q);
        CHECK(p.chart_facets() == q.chart_facets());
    }
}

TEST_CASE("facet soundness against the LP oracle (property)") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(3));
        auto p = testsup::random_polytope(rng, n, 5);
        CHECK(testsup::sorted_equal(p.lattice_points(), scan_box_oracle(p, false)));
        CHECK(testsup::sorted_equal(p.relative_interior_points(), scan_box_oracle(p, true)));
        // every enumerated point satisfies every ambient facet inequality and
        // the affine hull equations
        for (const auto& x : p.lattice_points()) {
            for (const auto& f : p.facets_ambient())
                CHECK(dot_wide(f.normal, x) >= -Wide(f.offset));
            for (const auto& eq : p.affine_hull_equations())
                CHECK(dot_wide(eq.coeffs, x) == Wide(eq.rhs));
            CHECK(p.contains(x));
        }
    }
}

TEST_CASE("facet soundness in dimension 4 (spot check)") {
    Rng rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        auto p = testsup::random_polytope(rng, 4, 2);
        CHECK(testsup::sorted_equal(p.lattice_points(), scan_box_oracle(p, false)));
        CHECK(testsup::sorted_equal(p.relative_interior_points(), scan_box_oracle(p, true)));
    }
}

TEST_CASE("minkowski dimension bounds (property)") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(4));
        auto p = testsup::random_polytope(rng, n, 3);
        auto q = testsup::random_polytope(rng, n, 3);
        auto s = minkowski_sum(p, q);
        CHECK(s.dim() >= std::max(p.dim(), q.dim()));
        CHECK(s.dim() <= std::min(n, p.dim() + q.dim()));
    }
}

TEST_CASE("interior plus relative boundary equals all lattice points (property)") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(3));
        auto p = testsup::random_polytope(rng, n, 5);
        const auto all = p.lattice_points();
        const auto interior = p.relative_interior_points();
        std::set<IntVec> interior_set(interior.begin(), interior.end());
        long long boundary = 0;
        for (const auto& x : all)
            if (!interior_set.count(x)) ++boundary;
        CHECK(p.lstar() + boundary == static_cast<long long>(all.size()));
    }
}

TEST_CASE("vertices of lattice polytopes are lattice points and extreme") {
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(2));
        auto p = testsup::random_polytope(rng, n, 4);
        for (const auto& v : p.vertices()) {
            std::vector<IntVec> others;
            for (const auto& w : p.vertices())
                if (w != v) others.push_back(w);
            if (!others.empty()) CHECK(!point_in_hull(v, others));
        }
    }
}

TEST_CASE("coordinate range validation") {
    CHECK_THROWS_AS(LatticePolytope::hull(4, {{0, 0, 0, 0}, {100000, 0, 0, 0}}),
                    std::invalid_argument);
}
