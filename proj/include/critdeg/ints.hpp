#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace critdeg {

// Lattice coordinates and derived facet data (normals, offsets) are kept in
// 64-bit integers; all products and minors go through Wide (128-bit).
// coordinate_limit() bounds inputs so that every intermediate value provably
// fits: facet normals are (d-1)x(d-1) minors of vertex differences and
// offsets are n-fold dot products against coordinates.
using Int = std::int64_t;
using Wide = __int128;
using IntVec = std::vector<Int>;

inline Int coordinate_limit(int ambient_dim) {
    switch (ambient_dim) {
        case 1: return 1000000000000LL;
        case 2: return 1000000;
        case 3: return 100000;
        case 4: return 5000;
        case 5: return 1000;
        case 6: return 250;
        default: throw std::invalid_argument("ambient dimension must be in [1,6]");
    }
}

inline void check_coordinate_range(const std::vector<IntVec>& points, int ambient_dim) {
    const Int limit = coordinate_limit(ambient_dim);
    for (const auto& p : points)
        for (Int c : p)
            if (c > limit || c < -limit)
                throw std::invalid_argument(
                    "coordinate magnitude " + std::to_string(c) +
                    " exceeds supported range for dimension " + std::to_string(ambient_dim));
}

inline Wide dot_wide(const IntVec& a, const IntVec& b) {
    Wide s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Wide(a[i]) * Wide(b[i]);
    return s;
}

inline Int checked_int(Wide v, const char* what) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + what);
    return static_cast<Int>(v);
}

inline Int gcd_int(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool is_zero_vec(const IntVec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace critdeg
