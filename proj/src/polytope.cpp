#include "critdeg/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "critdeg/simplex.hpp"

namespace critdeg {

namespace {

constexpr std::size_t kMaxHullCandidates = 4000;
constexpr long long kMaxEnumerationCells = 50000000LL;

Wide det_wide(std::vector<Wide> m, int d) {
    // fraction-free elimination; m is d x d row-major
    if (d == 0) return 1;
    Wide prev = 1, det = 1;
    int sign = 1;
    for (int k = 0; k < d; ++k) {
        int pivot = -1;
        for (int i = k; i < d; ++i)
            if (m[static_cast<std::size_t>(i) * d + k] != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = 0; j < d; ++j)
                std::swap(m[static_cast<std::size_t>(pivot) * d + j], m[static_cast<std::size_t>(k) * d + j]);
            sign = -sign;
        }
        const Wide p = m[static_cast<std::size_t>(k) * d + k];
        for (int i = k + 1; i < d; ++i) {
            const Wide f = m[static_cast<std::size_t>(i) * d + k];
            for (int j = k; j < d; ++j)
                m[static_cast<std::size_t>(i) * d + j] =
                    (m[static_cast<std::size_t>(i) * d + j] * p - f * m[static_cast<std::size_t>(k) * d + j]) / prev;
        }
        prev = p;
        det = p;
    }
    return sign > 0 ? det : -det;
}

// Generalized cross product: the integer normal of the hyperplane spanned by
// d-1 vectors in Z^d (cofactor expansion along a virtual first row).
IntVec cross_product(const std::vector<IntVec>& vecs, int d) {
    IntVec normal(d);
    std::vector<Wide> minor(static_cast<std::size_t>(d - 1) * (d - 1));
    for (int i = 0; i < d; ++i) {
        for (int r = 0; r < d - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == i) continue;
                minor[static_cast<std::size_t>(r) * (d - 1) + cc] = vecs[r][c];
                ++cc;
            }
        }
        const Wide dmin = det_wide(minor, d - 1);
        normal[i] = checked_int((i % 2 == 0) ? dmin : -dmin, "facet normal");
    }
    return normal;
}

// Strict betweenness x in (a, b): removes the bulk of non-extreme candidates
// produced by Minkowski sums before the facet search.
bool strictly_between(const IntVec& x, const IntVec& a, const IntVec& b) {
    const std::size_t d = x.size();
    IntVec p(d), q(d);
    bool pz = true, qz = true;
    for (std::size_t i = 0; i < d; ++i) {
        p[i] = x[i] - a[i];
        q[i] = b[i] - x[i];
        pz &= (p[i] == 0);
        qz &= (q[i] == 0);
    }
    if (pz || qz) return false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (Wide(p[i]) * Wide(q[j]) != Wide(p[j]) * Wide(q[i])) return false;
    return dot_wide(p, q) > 0;
}

void prune_candidates(std::vector<IntVec>& pts, int d) {
    if (pts.size() < 3) return;
    std::vector<char> alive(pts.size(), 1);
    for (std::size_t x = 0; x < pts.size(); ++x) {
        for (std::size_t a = 0; a < pts.size() && alive[x]; ++a) {
            if (a == x || !alive[a]) continue;
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                if (b == x || !alive[b]) continue;
                if (strictly_between(pts[x], pts[a], pts[b])) { alive[x] = 0; break; }
            }
        }
    }
    std::vector<IntVec> kept;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (alive[i]) kept.push_back(std::move(pts[i]));
    pts.swap(kept);

    const std::size_t lp_threshold = d <= 2 ? SIZE_MAX : (d == 3 ? 160 : (d == 4 ? 80 : 60));
    if (pts.size() <= lp_threshold) return;
    // Exact LP filter.  Extreme points are never inside the hull of the
    // remaining candidates, so removals cannot cascade incorrectly.
    alive.assign(pts.size(), 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i && alive[j]) others.push_back(pts[j]);
        if (point_in_hull(pts[i], others)) alive[i] = 0;
    }
    kept.clear();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (alive[i]) kept.push_back(std::move(pts[i]));
    pts.swap(kept);
}

long long binom(std::size_t nn, int kk) {
    long long r = 1;
    for (int i = 1; i <= kk; ++i) {
        r = r * static_cast<long long>(nn - static_cast<std::size_t>(kk) + i) / i;
        if (r > kMaxEnumerationCells) return r;
    }
    return r;
}

Int floor_div(Wide a, Wide b) {  // b > 0
    Wide q = a / b;
    if (a % b != 0 && a < 0) --q;
    return checked_int(q, "floor_div");
}

Int ceil_div(Wide a, Wide b) {  // b > 0
    Wide q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return checked_int(q, "ceil_div");
}

}  // namespace

LatticePolytope LatticePolytope::hull(int ambient_dim, std::vector<IntVec> points) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ambient_dim)
            throw std::invalid_argument("point dimension mismatch");
    check_coordinate_range(points, ambient_dim);

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() > kMaxHullCandidates)
        throw std::invalid_argument("too many hull candidate points for desk-scale computation");

    LatticePolytope poly;
    poly.n_ = ambient_dim;

    std::vector<IntVec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    IntMat diff_mat(static_cast<int>(diffs.size()), ambient_dim);
    for (int i = 0; i < diff_mat.rows; ++i)
        for (int j = 0; j < ambient_dim; ++j) diff_mat.at(i, j) = diffs[static_cast<std::size_t>(i)][j];

    const int d = rank_int(diff_mat);
    poly.dim_ = d;

    std::vector<IntVec> chart_pts;
    if (d == ambient_dim) {
        poly.base_ = IntVec(ambient_dim, 0);
        poly.basis_.resize(ambient_dim, IntVec(ambient_dim, 0));
        for (int k = 0; k < ambient_dim; ++k) poly.basis_[static_cast<std::size_t>(k)][k] = 1;
        chart_pts = points;
    } else {
        poly.base_ = points[0];
        const std::vector<IntVec> ortho = integer_kernel(diff_mat);
        IntMat ortho_mat(static_cast<int>(ortho.size()), ambient_dim);
        for (int i = 0; i < ortho_mat.rows; ++i)
            for (int j = 0; j < ambient_dim; ++j) ortho_mat.at(i, j) = ortho[static_cast<std::size_t>(i)][j];
        poly.basis_ = integer_kernel(ortho_mat);  // saturated lattice of the affine hull
        if (static_cast<int>(poly.basis_.size()) != d)
            throw std::logic_error("saturated lattice basis has wrong rank");
        for (const auto& o : ortho)
            poly.hull_eqs_.push_back({o, checked_int(dot_wide(o, poly.base_), "hull equation")});

        IntMat bmat(ambient_dim, d);
        for (int i = 0; i < ambient_dim; ++i)
            for (int k = 0; k < d; ++k) bmat.at(i, k) = poly.basis_[static_cast<std::size_t>(k)][i];
        chart_pts.reserve(points.size());
        for (const auto& p : points) {
            auto y = solve_integer(bmat, vec_sub(p, poly.base_));
            if (!y) throw std::logic_error("affine point not in saturated lattice chart");
            chart_pts.push_back(*y);
        }
        if (d > 0) check_coordinate_range(chart_pts, d);
    }

    if (d == 0) {
        poly.verts_ = {points[0]};
        poly.chart_verts_ = {IntVec{}};
        return poly;
    }

    prune_candidates(chart_pts, d);

    // Brute-force supporting-hyperplane search over all d-subsets.  Every facet
    // contains d affinely independent candidate points, so this finds them all.
    if (binom(chart_pts.size(), d) > kMaxEnumerationCells)
        throw std::invalid_argument("hull facet search too large for desk-scale computation");
    std::set<ChartFacet> facet_set;
    const std::size_t k = chart_pts.size();
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<IntVec> span_vecs(static_cast<std::size_t>(d - 1));
    while (true) {
        for (int i = 1; i < d; ++i)
            span_vecs[static_cast<std::size_t>(i - 1)] =
                vec_sub(chart_pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                        chart_pts[static_cast<std::size_t>(idx[0])]);
        IntVec g = cross_product(span_vecs, d);
        if (!is_zero_vec(g)) {
            const Wide m0 = dot_wide(g, chart_pts[static_cast<std::size_t>(idx[0])]);
            bool has_below = false, has_above = false;
            for (std::size_t j = 0; j < k && !(has_below && has_above); ++j) {
                const Wide s = dot_wide(g, chart_pts[j]);
                has_below |= (s < m0);
                has_above |= (s > m0);
            }
            if (!(has_below && has_above)) {
                Wide m = m0;
                if (has_below) {  // flip so g is the inner normal
                    for (auto& x : g) x = -x;
                    m = -m;
                }
                Int gg = 0;
                for (Int x : g) gg = gcd_int(gg, x);
                for (auto& x : g) x /= gg;
                facet_set.insert({std::move(g), checked_int(m / gg, "facet rhs")});
            }
        }
        int pos = d - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(k) - d + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < d; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    poly.chart_facets_.assign(facet_set.begin(), facet_set.end());
    if (poly.chart_facets_.empty()) throw std::logic_error("full-dimensional polytope without facets");

    // Extreme points: the facets active at a vertex span the chart space.
    std::vector<std::pair<IntVec, IntVec>> vert_pairs;  // (ambient, chart)
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<IntVec> active;
        for (const auto& f : poly.chart_facets_)
            if (dot_wide(f.normal, chart_pts[i]) == Wide(f.rhs)) active.push_back(f.normal);
        if (static_cast<int>(active.size()) < d) continue;
        if (rank_int(IntMat::from_rows(active)) < d) continue;
        IntVec ambient(poly.n_);
        for (int c = 0; c < poly.n_; ++c) {
            Wide s = poly.base_[c];
            for (int t = 0; t < d; ++t)
                s += Wide(poly.basis_[static_cast<std::size_t>(t)][c]) * Wide(chart_pts[i][static_cast<std::size_t>(t)]);
            ambient[c] = checked_int(s, "chart to ambient");
        }
        vert_pairs.emplace_back(std::move(ambient), chart_pts[i]);
    }
    std::sort(vert_pairs.begin(), vert_pairs.end());
    for (auto& [amb, chart] : vert_pairs) {
        poly.verts_.push_back(std::move(amb));
        poly.chart_verts_.push_back(std::move(chart));
    }
    if (poly.verts_.empty()) throw std::logic_error("polytope lost all vertices");
    return poly;
}

LatticePolytope LatticePolytope::point(const IntVec& p) {
    return hull(static_cast<int>(p.size()), {p});
}

LatticePolytope LatticePolytope::origin(int ambient_dim) {
    return point(IntVec(static_cast<std::size_t>(ambient_dim), 0));
}

std::vector<AmbientFacet> LatticePolytope::facets_ambient() const {
    std::vector<AmbientFacet> out;
    if (dim_ == 0) return out;
    if (dim_ == n_) {
        for (const auto& f : chart_facets_) out.push_back({f.normal, -f.rhs});
        return out;
    }
    IntMat bt(dim_, n_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < n_; ++c) bt.at(r, c) = basis_[static_cast<std::size_t>(r)][c];
    for (const auto& f : chart_facets_) {
        auto w = solve_integer(bt, f.normal);
        if (!w) throw std::logic_error("facet normal has no ambient representative");
        const Int offset = checked_int(-(dot_wide(*w, base_) + Wide(f.rhs)), "facet offset");
        out.push_back({std::move(*w), offset});
    }
    return out;
}

std::vector<AffineEquation> LatticePolytope::affine_hull_equations() const { return hull_eqs_; }

bool LatticePolytope::contains(const IntVec& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& eq : hull_eqs_)
        if (dot_wide(eq.coeffs, x) != Wide(eq.rhs)) return false;
    if (dim_ == 0) return x == base_;
    IntVec y;
    if (dim_ == n_) {
        y = x;
    } else {
        IntMat bmat(n_, dim_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < dim_; ++k) bmat.at(i, k) = basis_[static_cast<std::size_t>(k)][i];
        auto sol = solve_integer(bmat, vec_sub(x, base_));
        if (!sol) throw std::logic_error("point on affine hull but outside chart lattice");
        y = *sol;
    }
    for (const auto& f : chart_facets_)
        if (dot_wide(f.normal, y) < Wide(f.rhs)) return false;
    return true;
}

namespace {

std::vector<IntVec> enumerate_chart(const LatticePolytope& p, bool strict) {
    std::vector<IntVec> out;
    const int d = p.dim();
    const auto& cv = p.chart_vertices();
    IntVec lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        Int mn = cv[0][static_cast<std::size_t>(c)], mx = mn;
        for (const auto& v : cv) {
            mn = std::min(mn, v[static_cast<std::size_t>(c)]);
            mx = std::max(mx, v[static_cast<std::size_t>(c)]);
        }
        lo[static_cast<std::size_t>(c)] = mn;
        hi[static_cast<std::size_t>(c)] = mx;
    }
    long long cells = 1;
    for (int c = 0; c < d; ++c) {
        cells *= (hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)] + 1);
        if (cells > kMaxEnumerationCells)
            throw std::invalid_argument("lattice point enumeration too large for desk-scale computation");
    }
    IntVec y = lo;
    while (true) {
        bool ok = true;
        for (const auto& f : p.chart_facets()) {
            const Wide s = dot_wide(f.normal, y);
            if (strict ? (s <= Wide(f.rhs)) : (s < Wide(f.rhs))) { ok = false; break; }
        }
        if (ok) out.push_back(y);
        int c = d - 1;
        while (c >= 0 && y[static_cast<std::size_t>(c)] == hi[static_cast<std::size_t>(c)]) --c;
        if (c < 0) break;
        ++y[static_cast<std::size_t>(c)];
        for (int j = c + 1; j < d; ++j) y[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
    }
    return out;
}

std::vector<IntVec> chart_to_ambient(const LatticePolytope& p, const std::vector<IntVec>& ys) {
    std::vector<IntVec> out;
    out.reserve(ys.size());
    const int n = p.ambient_dim(), d = p.dim();
    for (const auto& y : ys) {
        IntVec x(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            Wide s = p.chart_base()[static_cast<std::size_t>(c)];
            for (int t = 0; t < d; ++t)
                s += Wide(p.chart_basis()[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]) *
                     Wide(y[static_cast<std::size_t>(t)]);
            x[static_cast<std::size_t>(c)] = checked_int(s, "chart to ambient");
        }
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<IntVec> LatticePolytope::lattice_points() const {
    if (dim_ == 0) return {base_};
    return chart_to_ambient(*this, enumerate_chart(*this, false));
}

std::vector<IntVec> LatticePolytope::relative_interior_points() const {
    if (dim_ == 0) return {base_};
    return chart_to_ambient(*this, enumerate_chart(*this, true));
}

long long LatticePolytope::lstar() const {
    if (dim_ == 0) return 1;  // the relative interior of a point is the point
    return static_cast<long long>(enumerate_chart(*this, true).size());
}

Wide LatticePolytope::support_min(const IntVec& direction) const {
    Wide best = dot_wide(verts_[0], direction);
    for (std::size_t i = 1; i < verts_.size(); ++i)
        best = std::min(best, dot_wide(verts_[i], direction));
    return best;
}

int affine_dim(const LatticePolytope& p) { return p.dim(); }

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
    std::vector<IntVec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(vec_add(a, b));
    return LatticePolytope::hull(p.ambient_dim(), std::move(sums));
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) { return p.lattice_points(); }

long long lstar(const LatticePolytope& p) { return p.lstar(); }

long long lstar_k(const LatticePolytope& p, int k) {
    if (k < 0) throw std::invalid_argument("lstar_k: k must be nonnegative");
    return p.dim() == k ? p.lstar() : 0;
}

std::vector<RationalPoint> vertices_of_hrep(const std::vector<IntVec>& normals,
                                            const std::vector<Int>& rhs) {
    if (normals.size() != rhs.size())
        throw std::invalid_argument("vertices_of_hrep: size mismatch");
    if (normals.empty()) throw std::invalid_argument("vertices_of_hrep: empty system");
    const int n = static_cast<int>(normals[0].size());
    if (rank_int(IntMat::from_rows(normals)) < n)
        throw std::invalid_argument("vertices_of_hrep: system is not pointed");

    const int r = static_cast<int>(normals.size());
    std::set<std::pair<IntVec, Int>> found;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<Wide> m(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] = normals[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j)];
        Wide den = det_wide(m, n);
        if (den != 0) {
            IntVec num(static_cast<std::size_t>(n));
            bool fits = true;
            for (int col = 0; col < n && fits; ++col) {
                std::vector<Wide> mc = m;
                for (int i = 0; i < n; ++i)
                    mc[static_cast<std::size_t>(i) * n + col] = rhs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                num[static_cast<std::size_t>(col)] = checked_int(det_wide(mc, n), "hrep vertex");
            }
            Int d = checked_int(den, "hrep vertex denominator");
            if (d < 0) {
                d = -d;
                for (auto& x : num) x = -x;
            }
            bool valid = true;
            for (int j = 0; j < r && valid; ++j)
                valid = dot_wide(normals[static_cast<std::size_t>(j)], num) >= Wide(rhs[static_cast<std::size_t>(j)]) * Wide(d);
            if (valid) {
                Int g = d;
                for (Int x : num) g = gcd_int(g, x);
                if (g > 1) {
                    d /= g;
                    for (auto& x : num) x /= g;
                }
                found.insert({std::move(num), d});
            }
        }
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == r - n + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < n; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    std::vector<RationalPoint> out;
    out.reserve(found.size());
    for (const auto& [num, den] : found) out.push_back({num, den});
    return out;
}

std::vector<IntVec> lattice_points_of_hrep(const std::vector<IntVec>& normals,
                                           const std::vector<Int>& rhs) {
    const auto verts = vertices_of_hrep(normals, rhs);
    if (verts.empty()) return {};
    const int n = static_cast<int>(normals[0].size());
    IntVec lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        Int mn = floor_div(verts[0].num[static_cast<std::size_t>(c)], verts[0].den);
        Int mx = ceil_div(verts[0].num[static_cast<std::size_t>(c)], verts[0].den);
        for (const auto& v : verts) {
            mn = std::min(mn, floor_div(v.num[static_cast<std::size_t>(c)], v.den));
            mx = std::max(mx, ceil_div(v.num[static_cast<std::size_t>(c)], v.den));
        }
        lo[static_cast<std::size_t>(c)] = mn;
        hi[static_cast<std::size_t>(c)] = mx;
    }
    long long cells = 1;
    for (int c = 0; c < n; ++c) {
        cells *= (hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)] + 1);
        if (cells > kMaxEnumerationCells)
            throw std::invalid_argument("hrep lattice enumeration too large for desk-scale computation");
    }
    std::vector<IntVec> out;
    IntVec m = lo;
    while (true) {
        bool ok = true;
        for (std::size_t j = 0; j < normals.size(); ++j)
            if (dot_wide(normals[j], m) < Wide(rhs[j])) { ok = false; break; }
        if (ok) out.push_back(m);
        int c = n - 1;
        while (c >= 0 && m[static_cast<std::size_t>(c)] == hi[static_cast<std::size_t>(c)]) --c;
        if (c < 0) break;
        ++m[static_cast<std::size_t>(c)];
        for (int j = c + 1; j < n; ++j) m[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
    }
    return out;  // odometer order is lexicographic
}

}  // namespace critdeg
