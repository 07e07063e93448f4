#include "critdeg/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "critdeg/rng.hpp"

namespace critdeg {

KoszulSlice koszul_slice(const PolytopeFamily& f, const NormalFan& fan,
                         const std::vector<SparseSection>& sections) {
    if (static_cast<int>(sections.size()) != f.n() + 1)
        throw std::invalid_argument("koszul_slice: expected n+1 sections");
    for (int k = 0; k <= f.n(); ++k) {
        if (sections[static_cast<std::size_t>(k)].polytope_index != k)
            throw std::invalid_argument("koszul_slice: section order must match the family");
        homogenize(sections[static_cast<std::size_t>(k)], fan, f);  // validates support
    }

    KoszulSlice slice;
    const DivisorClass rho = critical_degree(f, fan);
    slice.target = graded_basis(rho);

    int total_cols = 0;
    for (int k = 0; k <= f.n(); ++k) {
        IntVec shifted = rho.coeffs;
        const IntVec a = divisor_coeffs(f.member(k), fan);
        for (std::size_t j = 0; j < shifted.size(); ++j)
            shifted[j] = checked_int(Wide(shifted[j]) - Wide(a[j]), "koszul source degree");
        slice.sources.push_back(graded_basis(make_class(fan, shifted)));
        total_cols += static_cast<int>(slice.sources.back().points.size());
    }

    slice.matrix = BigMat(static_cast<int>(slice.target.points.size()), total_cols);
    int col = 0;
    for (int k = 0; k <= f.n(); ++k) {
        const auto& sec = sections[static_cast<std::size_t>(k)];
        for (const auto& m_src : slice.sources[static_cast<std::size_t>(k)].points) {
            for (const auto& [p, c] : sec.coeffs) {
                if (sgn(c) == 0) continue;
                const IntVec row_point = vec_add(m_src, p);
                const auto it = std::lower_bound(slice.target.points.begin(),
                                                 slice.target.points.end(), row_point);
                if (it == slice.target.points.end() || *it != row_point)
                    throw std::logic_error("koszul_slice: product monomial outside target basis");
                slice.matrix.at(static_cast<int>(it - slice.target.points.begin()), col) = c;
            }
            ++col;
        }
    }
    return slice;
}

namespace {

// Sparse fraction-free elimination with content stripping.  Koszul slices are
// a few percent dense (one entry per support point per column), so pivoting
// for sparsity keeps fill-in confined to a small dense core.  The stripped
// row content always contains the accumulated pivot factor, so entries divide
// minors of the input just as in Bareiss elimination.
struct SparseRow {
    std::vector<std::pair<int, mpz_class>> e;  // (column, value), sorted by column
    mpz_class divisor{1};  // pivot of the last update; candidate exact divisor
};

int sparse_rank(const BigMat& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<SparseRow> r(static_cast<std::size_t>(rows));
    std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (sgn(m.at(i, j)) != 0) {
                r[static_cast<std::size_t>(i)].e.emplace_back(j, m.at(i, j));
                ++col_count[static_cast<std::size_t>(j)];
            }

    std::vector<char> live(static_cast<std::size_t>(rows), 1);
    std::vector<std::vector<int>> rows_in_col(static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : r[static_cast<std::size_t>(i)].e) {
            (void)v;
            rows_in_col[static_cast<std::size_t>(j)].push_back(i);
        }

    int rank = 0;
    mpz_class content, tmp;
    SparseRow merged;
    for (;;) {
        // Markowitz-style pivot: scarcest column, then shortest row in it.
        int pcol = -1;
        for (int j = 0; j < cols; ++j) {
            if (col_count[static_cast<std::size_t>(j)] == 0) continue;
            if (pcol < 0 || col_count[static_cast<std::size_t>(j)] < col_count[static_cast<std::size_t>(pcol)])
                pcol = j;
        }
        if (pcol < 0) break;
        const auto has_col = [&](int i, int j) {
            const auto& es = r[static_cast<std::size_t>(i)].e;
            const auto it = std::lower_bound(es.begin(), es.end(), j,
                                             [](const auto& p, int c) { return p.first < c; });
            return it != es.end() && it->first == j;
        };
        int prow_idx = -1;
        std::size_t best_len = 0;
        for (int i : rows_in_col[static_cast<std::size_t>(pcol)]) {
            if (!live[static_cast<std::size_t>(i)]) continue;
            if (!has_col(i, pcol)) continue;  // stale index entry
            const std::size_t len = r[static_cast<std::size_t>(i)].e.size();
            if (prow_idx < 0 || len < best_len) {
                prow_idx = i;
                best_len = len;
            }
        }
        if (prow_idx < 0) throw std::logic_error("sparse elimination lost a column entry");

        const SparseRow& prow = r[static_cast<std::size_t>(prow_idx)];
        const mpz_class* pval = nullptr;
        for (const auto& [j, v] : prow.e)
            if (j == pcol) pval = &v;

        std::vector<int> victims;
        for (int i : rows_in_col[static_cast<std::size_t>(pcol)])
            if (live[static_cast<std::size_t>(i)] && i != prow_idx) victims.push_back(i);

        for (int i : victims) {
            SparseRow& row = r[static_cast<std::size_t>(i)];
            const mpz_class* f = nullptr;
            for (const auto& [j, v] : row.e)
                if (j == pcol) f = &v;
            if (f == nullptr) continue;

            // merged = pval * row - f * prow, with the pivot column cancelling
            merged.e.clear();
            merged.e.reserve(row.e.size() + prow.e.size());
            std::size_t a = 0, b = 0;
            while (a < row.e.size() || b < prow.e.size()) {
                int ja = a < row.e.size() ? row.e[a].first : cols;
                int jb = b < prow.e.size() ? prow.e[b].first : cols;
                int j = std::min(ja, jb);
                if (j == pcol) {  // cancels exactly
                    if (ja == j) ++a;
                    if (jb == j) ++b;
                    continue;
                }
                if (ja == j && jb == j) {
                    tmp = (*pval) * row.e[a].second - (*f) * prow.e[b].second;
                    ++a;
                    ++b;
                } else if (ja == j) {
                    tmp = (*pval) * row.e[a].second;
                    ++a;
                } else {
                    tmp = -(*f) * prow.e[b].second;
                    ++b;
                }
                if (sgn(tmp) != 0) merged.e.emplace_back(j, tmp);
            }
            // Fast path first: when this row and the pivot row were last
            // updated by the same pivot, the Bareiss one-step division by that
            // pivot is exact; verify divisibility and skip the gcd sweep.
            bool divided = false;
            if (row.divisor == prow.divisor && mpz_cmpabs_ui(row.divisor.get_mpz_t(), 1) > 0) {
                divided = true;
                for (const auto& [j, v] : merged.e) {
                    (void)j;
                    if (!mpz_divisible_p(v.get_mpz_t(), row.divisor.get_mpz_t())) {
                        divided = false;
                        break;
                    }
                }
                if (divided)
                    for (auto& [j, v] : merged.e) {
                        (void)j;
                        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), row.divisor.get_mpz_t());
                    }
            }
            if (!divided) {
                content = 0;
                for (const auto& [j, v] : merged.e) {
                    (void)j;
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
                    if (content == 1) break;
                }
                if (content > 1)
                    for (auto& [j, v] : merged.e) {
                        (void)j;
                        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
                    }
            }
            row.divisor = *pval;

            for (const auto& [j, v] : row.e) {
                (void)v;
                --col_count[static_cast<std::size_t>(j)];
            }
            row.e.swap(merged.e);
            for (const auto& [j, v] : row.e) {
                (void)v;
                ++col_count[static_cast<std::size_t>(j)];
                rows_in_col[static_cast<std::size_t>(j)].push_back(i);
            }
        }

        live[static_cast<std::size_t>(prow_idx)] = 0;
        for (const auto& [j, v] : prow.e) {
            (void)v;
            --col_count[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int exact_rank(const BigMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return sparse_rank(m);
}

int rank_mod_prime(const BigMat& m, std::uint64_t p) {
    const int rows = m.rows, cols = m.cols;
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    auto powmod = [&](std::uint64_t base, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    };

    using Row = std::vector<std::pair<int, std::uint64_t>>;  // sorted by column
    std::vector<Row> r(static_cast<std::size_t>(rows));
    std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const std::uint64_t v = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), static_cast<unsigned long>(p));
            if (v != 0) {
                r[static_cast<std::size_t>(i)].emplace_back(j, v);
                ++col_count[static_cast<std::size_t>(j)];
            }
        }

    std::vector<char> live(static_cast<std::size_t>(rows), 1);
    std::vector<std::vector<int>> rows_in_col(static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : r[static_cast<std::size_t>(i)]) {
            (void)v;
            rows_in_col[static_cast<std::size_t>(j)].push_back(i);
        }

    const auto find_col = [&](int i, int j) -> const std::pair<int, std::uint64_t>* {
        const auto& es = r[static_cast<std::size_t>(i)];
        const auto it = std::lower_bound(es.begin(), es.end(), j,
                                         [](const auto& e, int c) { return e.first < c; });
        return (it != es.end() && it->first == j) ? &*it : nullptr;
    };

    int rank = 0;
    Row merged;
    for (;;) {
        int pcol = -1;
        for (int j = 0; j < cols; ++j) {
            if (col_count[static_cast<std::size_t>(j)] == 0) continue;
            if (pcol < 0 || col_count[static_cast<std::size_t>(j)] < col_count[static_cast<std::size_t>(pcol)])
                pcol = j;
        }
        if (pcol < 0) break;
        int prow_idx = -1;
        std::size_t best_len = 0;
        for (int i : rows_in_col[static_cast<std::size_t>(pcol)]) {
            if (!live[static_cast<std::size_t>(i)] || !find_col(i, pcol)) continue;
            const std::size_t len = r[static_cast<std::size_t>(i)].size();
            if (prow_idx < 0 || len < best_len) {
                prow_idx = i;
                best_len = len;
            }
        }
        if (prow_idx < 0) throw std::logic_error("sparse elimination lost a column entry");

        const Row& prow = r[static_cast<std::size_t>(prow_idx)];
        const std::uint64_t inv = powmod(find_col(prow_idx, pcol)->second, p - 2);

        std::vector<int> victims;
        for (int i : rows_in_col[static_cast<std::size_t>(pcol)])
            if (live[static_cast<std::size_t>(i)] && i != prow_idx) victims.push_back(i);
        for (int i : victims) {
            const auto* fe = find_col(i, pcol);
            if (fe == nullptr) continue;
            const std::uint64_t scale = mulmod(fe->second, inv);
            Row& row = r[static_cast<std::size_t>(i)];
            merged.clear();
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < prow.size()) {
                const int ja = a < row.size() ? row[a].first : cols;
                const int jb = b < prow.size() ? prow[b].first : cols;
                const int j = std::min(ja, jb);
                std::uint64_t x = 0;
                if (ja == j) x = row[a++].second;
                std::uint64_t sub = 0;
                if (jb == j) sub = mulmod(scale, prow[b++].second);
                x = (x >= sub) ? (x - sub) : (x + p - sub);
                if (x != 0 && j != pcol) merged.emplace_back(j, x);
            }
            for (const auto& [j, v] : row) {
                (void)v;
                --col_count[static_cast<std::size_t>(j)];
            }
            row.swap(merged);
            for (const auto& [j, v] : row) {
                (void)v;
                ++col_count[static_cast<std::size_t>(j)];
                rows_in_col[static_cast<std::size_t>(j)].push_back(i);
            }
        }

        live[static_cast<std::size_t>(prow_idx)] = 0;
        for (const auto& [j, v] : prow) {
            (void)v;
            --col_count[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

namespace {

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1 && witness; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint64_t> random_primes(int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        std::uint64_t candidate = (1ULL << 30) + 1 + (rng.next() % ((1ULL << 30) - 2));
        candidate |= 1;
        if (!miller_rabin(candidate)) continue;
        if (std::find(primes.begin(), primes.end(), candidate) != primes.end()) continue;
        primes.push_back(candidate);
    }
    return primes;
}

long long codim_oracle(const PolytopeFamily& f, const NormalFan& fan,
                       const std::vector<SparseSection>& sections) {
    const KoszulSlice slice = koszul_slice(f, fan, sections);
    return static_cast<long long>(slice.target.points.size()) - exact_rank(slice.matrix);
}

}  // namespace critdeg
