#include <doctest.h>

#include "critdeg/linalg.hpp"
#include "critdeg/simplex.hpp"
#include "test_support.hpp"

using namespace critdeg;

TEST_CASE("rank of small integer matrices") {
    CHECK(rank_int(IntMat::from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_int(IntMat::from_rows({{2, 4}, {1, 2}})) == 1);
    CHECK(rank_int(IntMat::from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_int(IntMat::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank_int(IntMat::from_rows({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}})) == 3);
}

TEST_CASE("integer kernel spans the right lattice") {
    // kernel of (1 2 3) in Z^3 has rank 2 and every basis vector annihilates the row
    auto k = integer_kernel(IntMat::from_rows({{1, 2, 3}}));
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);

    // saturation: kernel of (2 4) is generated by (2,-1), not (4,-2)
    auto k2 = integer_kernel(IntMat::from_rows({{2, 4}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == IntVec{2, -1});

    auto k3 = integer_kernel(IntMat::from_rows({{1, 0}, {0, 1}}));
    CHECK(k3.empty());
}

TEST_CASE("solve_integer finds integral solutions exactly when they exist") {
    auto s = solve_integer(IntMat::from_rows({{2, 0}, {0, 3}}), {4, 9});
    REQUIRE(s.has_value());
    CHECK(*s == IntVec{2, 3});

    CHECK(!solve_integer(IntMat::from_rows({{2, 0}, {0, 3}}), {3, 9}).has_value());
    CHECK(!solve_integer(IntMat::from_rows({{1, 1}, {1, 1}}), {0, 1}).has_value());

    // underdetermined: any solution of x + y = 5 works
    auto u = solve_integer(IntMat::from_rows({{1, 1}}), {5});
    REQUIRE(u.has_value());
    CHECK((*u)[0] + (*u)[1] == 5);
}

TEST_CASE("solve_integer randomized: A * x_known is always solvable") {
    testsup::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(4));
        const int cols = 1 + static_cast<int>(rng.below(4));
        IntMat a(rows, cols);
        IntVec x(static_cast<std::size_t>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) = rng.below(11) - 5;
        for (int j = 0; j < cols; ++j) x[static_cast<std::size_t>(j)] = rng.below(9) - 4;
        IntVec b(static_cast<std::size_t>(rows), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) b[static_cast<std::size_t>(i)] += a.at(i, j) * x[static_cast<std::size_t>(j)];
        auto s = solve_integer(a, b);
        REQUIRE(s.has_value());
        for (int i = 0; i < rows; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols; ++j) acc += a.at(i, j) * (*s)[static_cast<std::size_t>(j)];
            CHECK(acc == b[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("primitive_vector strips the content") {
    CHECK(primitive_vector({4, 6}) == IntVec{2, 3});
    CHECK(primitive_vector({0, 0}) == IntVec{0, 0});
    CHECK(primitive_vector({-3, 9}) == IntVec{-1, 3});
}

TEST_CASE("exact LP membership oracle") {
    std::vector<IntVec> tri = {{0, 0}, {4, 0}, {0, 4}};
    CHECK(point_in_hull({1, 1}, tri));
    CHECK(point_in_hull({0, 0}, tri));
    CHECK(point_in_hull({2, 2}, tri));
    CHECK(!point_in_hull({3, 3}, tri));
    CHECK(!point_in_hull({-1, 0}, tri));

    CHECK(point_in_relative_interior({1, 1}, tri));
    CHECK(!point_in_relative_interior({0, 0}, tri));
    CHECK(!point_in_relative_interior({2, 2}, tri));

    // on a segment, the relative interior is one-dimensional
    std::vector<IntVec> seg = {{0, 0}, {4, 0}};
    CHECK(point_in_relative_interior({1, 0}, seg));
    CHECK(!point_in_relative_interior({0, 0}, seg));
    CHECK(!point_in_hull({5, 0}, seg));
}
