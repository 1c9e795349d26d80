#include "flagfold/homology.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagfold {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::vector<std::vector<Simplex>> group_by_dim(std::span<const Simplex> faces) {
    std::vector<std::vector<Simplex>> by_dim;
    for (const Simplex& f : faces) {
        if (!f.is_valid()) throw std::invalid_argument("invalid simplex " + to_string(f));
        auto d = static_cast<std::size_t>(f.dim());
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(f);
    }
    for (auto& fs : by_dim) {
        std::sort(fs.begin(), fs.end());
        if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
            throw std::invalid_argument("duplicate face in complex");
    }
    return by_dim;
}

void check_downward_closed(const std::vector<std::vector<Simplex>>& by_dim) {
    for (std::size_t d = 1; d < by_dim.size(); ++d)
        for (const Simplex& f : by_dim[d])
            for (std::size_t i = 0; i < f.size(); ++i) {
                Simplex sub = f.facet_omitting(i);
                if (d - 1 >= by_dim.size() ||
                    !std::binary_search(by_dim[d - 1].begin(), by_dim[d - 1].end(), sub))
                    throw std::invalid_argument("complex is not downward closed at " +
                                                to_string(f));
            }
}

BoundaryMatrix boundary_from_groups(const std::vector<std::vector<Simplex>>& by_dim, int d) {
    BoundaryMatrix m;
    if (d >= 1 && d < static_cast<int>(by_dim.size())) m.cols = by_dim[static_cast<std::size_t>(d)];
    if (d >= 1 && d - 1 < static_cast<int>(by_dim.size()))
        m.rows = by_dim[static_cast<std::size_t>(d - 1)];
    m.entries.assign(m.rows.size(), std::vector<std::int8_t>(m.cols.size(), 0));
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        const Simplex& f = m.cols[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            Simplex sub = f.facet_omitting(i);
            auto it = std::lower_bound(m.rows.begin(), m.rows.end(), sub);
            if (it == m.rows.end() || *it != sub)
                throw std::invalid_argument("complex is not downward closed at " + to_string(f));
            auto row = static_cast<std::size_t>(it - m.rows.begin());
            m.entries[row][j] = static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

struct overflow_tag {};

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_tag{};
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_tag{};
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_tag{};
    return r;
}

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

template <typename T>
T abs_of(const T& x) {
    return x < 0 ? T(-x) : x;
}

// Diagonalization by row/column reduction with a minimal-pivot rule and the
// classic fix-up (add the offending row to the pivot row) to enforce the
// divisibility chain d1 | d2 | ...
template <typename T>
std::vector<T> snf_diagonal(std::vector<std::vector<T>> m) {
    std::vector<T> diag;
    if (m.empty() || m[0].empty()) return diag;
    const std::size_t R = m.size(), C = m[0].size();
    std::size_t r = 0;
    while (r < R && r < C) {
        // minimal nonzero pivot in the trailing submatrix
        std::size_t pi = R, pj = C;
        for (std::size_t i = r; i < R; ++i)
            for (std::size_t j = r; j < C; ++j)
                if (m[i][j] != 0 &&
                    (pi == R || abs_of(m[i][j]) < abs_of(m[pi][pj])))
                    pi = i, pj = j;
        if (pi == R) break;
        std::swap(m[r], m[pi]);
        for (std::size_t i = 0; i < R; ++i) std::swap(m[i][r], m[i][pj]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (m[i][r] == 0) continue;
                T q = m[i][r] / m[r][r];
                if (q != 0)
                    for (std::size_t j = r; j < C; ++j)
                        m[i][j] = checked_sub(m[i][j], checked_mul(q, m[r][j]));
                if (m[i][r] != 0) {  // remainder becomes the new, smaller pivot
                    std::swap(m[r], m[i]);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = r + 1; j < C; ++j) {
                if (m[r][j] == 0) continue;
                T q = m[r][j] / m[r][r];
                if (q != 0)
                    for (std::size_t i = r; i < R; ++i)
                        m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][r]));
                if (m[r][j] != 0) {
                    for (std::size_t i = 0; i < R; ++i) std::swap(m[i][r], m[i][j]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // pivot row and column are clear; enforce divisibility
            for (std::size_t i = r + 1; i < R && settled; ++i)
                for (std::size_t j = r + 1; j < C && settled; ++j)
                    if (m[i][j] % m[r][r] != 0) {
                        for (std::size_t jj = r; jj < C; ++jj)
                            m[r][jj] = checked_add(m[r][jj], m[i][jj]);
                        settled = false;
                    }
        }
        diag.push_back(abs_of(m[r][r]));
        ++r;
    }
    return diag;
}

}  // namespace

BoundaryMatrix boundary_matrix(std::span<const Simplex> faces, int d) {
    if (d < 1) throw std::invalid_argument("boundary dimension must be at least 1");
    auto by_dim = group_by_dim(faces);
    check_downward_closed(by_dim);
    return boundary_from_groups(by_dim, d);
}

SnfResult smith_normal_form(std::vector<std::vector<long long>> m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i].size() != m[0].size()) throw std::invalid_argument("ragged matrix");
    try {
        auto work = m;
        auto diag = snf_diagonal(std::move(work));
        SnfResult res;
        res.rank = diag.size();
        res.factors = std::move(diag);
        return res;
    } catch (const overflow_tag&) {
        // promote to arbitrary precision and redo
        std::vector<std::vector<BigInt>> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
        auto diag = snf_diagonal(std::move(big));
        SnfResult res;
        res.rank = diag.size();
        res.factors.reserve(diag.size());
        for (const BigInt& f : diag) {
            if (f > std::numeric_limits<long long>::max())
                throw std::overflow_error("invariant factor exceeds 64 bits");
            res.factors.push_back(f.convert_to<long long>());
        }
        return res;
    }
}

namespace {

SnfResult snf_entries(const std::vector<std::vector<std::int8_t>>& entries) {
    std::vector<std::vector<long long>> m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m[i].assign(entries[i].begin(), entries[i].end());
    return smith_normal_form(std::move(m));
}

}  // namespace

HomologyProfile homology_profile(std::span<const Simplex> faces, int max_dim) {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
    auto by_dim = group_by_dim(faces);
    check_downward_closed(by_dim);
    int top = static_cast<int>(by_dim.size()) - 1;
    int upto = max_dim == kUncappedDim ? top : std::min(max_dim, top);

    HomologyProfile prof;
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        prof.euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim[d].size());

    std::vector<SnfResult> snf(static_cast<std::size_t>(std::max(upto + 2, 1)));
    for (int d = 1; d <= upto + 1 && d <= top; ++d)
        snf[static_cast<std::size_t>(d)] = snf_entries(boundary_from_groups(by_dim, d).entries);

    for (int d = 0; d <= upto; ++d) {
        auto f_d = static_cast<long long>(by_dim[static_cast<std::size_t>(d)].size());
        long long rank_d = d >= 1 ? static_cast<long long>(snf[static_cast<std::size_t>(d)].rank) : 0;
        long long rank_up =
            d + 1 <= top ? static_cast<long long>(snf[static_cast<std::size_t>(d + 1)].rank) : 0;
        prof.betti.push_back(f_d - rank_d - rank_up);
        std::vector<long long> tors;
        if (d + 1 <= top)
            for (long long f : snf[static_cast<std::size_t>(d + 1)].factors)
                if (f > 1) tors.push_back(f);
        prof.torsion.push_back(std::move(tors));
    }
    if (max_dim != kUncappedDim) {
        prof.betti.resize(static_cast<std::size_t>(max_dim) + 1, 0);
        prof.torsion.resize(static_cast<std::size_t>(max_dim) + 1);
    }
    return prof;
}

HomologyProfile homology_profile(const CliqueComplex& c, int max_dim) {
    auto faces = c.all_faces();
    return homology_profile(faces, max_dim);
}

long long euler_characteristic(std::span<const Simplex> faces) {
    long long chi = 0;
    for (const Simplex& f : faces) chi += f.dim() % 2 == 0 ? 1 : -1;
    return chi;
}

long long euler_characteristic(const CliqueComplex& c) {
    long long chi = 0;
    auto f = c.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
    return chi;
}

}  // namespace flagfold
