#include "repzeta/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace repzeta {

namespace {

i64 mod_reduce(i64 v, i64 M) {
    i64 r = v % M;
    return r < 0 ? r + M : r;
}

/** Extended-gcd modular inverse; u must be a unit mod M. */
i64 inv_mod(i64 u, i64 M) {
    i64 a = mod_reduce(u, M), b = M;
    i64 x0 = 1, x1 = 0;
    while (b) {
        i64 q = a / b;
        i64 t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1) throw std::domain_error("inv_mod of non-unit");
    return mod_reduce(x0, M);
}

/** q-adic valuation (e nonzero, reduced mod q^a). */
int val_q(i64 e, i64 q) {
    int v = 0;
    while (e % q == 0) { e /= q; ++v; }
    return v;
}

struct Pivot { size_t row, col; int v; };

/**
 * Echelon elimination over Z/q^a with global minimal-valuation pivoting.
 *
 * Each round picks the entry of smallest q-valuation among rows and columns
 * not yet used, normalizes that row so the pivot entry is exactly q^v, and
 * clears the pivot column in the rows that have not served as pivots yet.
 * Pivot valuations are then nondecreasing, and every non-pivot entry of a
 * pivot row has valuation at least that row's pivot valuation.  Those two
 * facts make reverse-order back-substitution with zero free variables exact:
 * it finds a solution whenever one exists, and yields explicit kernel
 * generators (one per free column plus one annihilator per pivot of positive
 * valuation).
 *
 * @param rows  matrix over Z/M; columns >= ncols (e.g. an augmented
 *              right-hand side) are transformed but never pivoted on
 * @returns pivots in the order established
 */
std::vector<Pivot> eliminate(Mat& rows, size_t ncols, i64 q, i64 M) {
    const size_t m = rows.size();
    std::vector<char> row_used(m, 0), col_used(ncols, 0);
    std::vector<Pivot> pivots;
    for (;;) {
        int best_v = -1;
        size_t br = 0, bc = 0;
        for (size_t r = 0; r < m; ++r) {
            if (row_used[r]) continue;
            for (size_t c = 0; c < ncols; ++c) {
                if (col_used[c] || rows[r][c] == 0) continue;
                int v = val_q(rows[r][c], q);
                if (best_v < 0 || v < best_v) { best_v = v; br = r; bc = c; }
            }
        }
        if (best_v < 0) break;
        i64 qv = 1;
        for (int i = 0; i < best_v; ++i) qv *= q;
        i64 ui = inv_mod(rows[br][bc] / qv, M);
        for (auto& e : rows[br]) e = checked_cast(i128(e) * ui % M);
        for (size_t r = 0; r < m; ++r) {
            if (r == br || row_used[r] || rows[r][bc] == 0) continue;
            i64 f = rows[r][bc] / qv;  // exact: valuation >= best_v by minimality
            for (size_t c = 0; c < rows[r].size(); ++c)
                rows[r][c] = mod_reduce(rows[r][c] - checked_cast(i128(f) * rows[br][c] % M), M);
        }
        row_used[br] = 1;
        col_used[bc] = 1;
        pivots.push_back({br, bc, best_v});
    }
    return pivots;
}

/**
 * Reverse-order back-substitution over Z/q^a.  Coordinates of x outside the
 * pivot columns (and the optional skipped pivot) must be preset; pivot
 * coordinates are filled in.  rhs_col < 0 means homogeneous.
 * @returns false iff some pivot equation is unsolvable.
 */
bool backsolve(const Mat& rows, const std::vector<Pivot>& pivots, size_t ncols,
               Vec& x, i64 q, i64 M, int rhs_col, int skip_pivot) {
    for (int t = (int)pivots.size() - 1; t >= 0; --t) {
        if (t == skip_pivot) continue;
        const auto& p = pivots[t];
        i128 s = rhs_col >= 0 ? rows[p.row][rhs_col] : 0;
        for (size_t c = 0; c < ncols; ++c) {
            if (c == p.col || rows[p.row][c] == 0 || x[c] == 0) continue;
            s -= i128(rows[p.row][c]) * x[c];
        }
        i64 rhs = mod_reduce(checked_cast(s % M), M);
        i64 qv = 1;
        for (int i = 0; i < p.v; ++i) qv *= q;
        if (rhs % qv != 0) return false;
        x[p.col] = rhs / qv;
    }
    return true;
}

std::optional<Vec> solve_prime_power(const Mat& A, const Vec& b, i64 q, i64 M) {
    const size_t m = A.size();
    const size_t k = m ? A[0].size() : 0;
    Mat rows(m);
    for (size_t r = 0; r < m; ++r) {
        rows[r].resize(k + 1);
        for (size_t c = 0; c < k; ++c) rows[r][c] = mod_reduce(A[r][c], M);
        rows[r][k] = mod_reduce(b[r], M);
    }
    auto pivots = eliminate(rows, k, q, M);
    std::vector<char> is_pivot_row(m, 0);
    for (auto& p : pivots) is_pivot_row[p.row] = 1;
    for (size_t r = 0; r < m; ++r)
        if (!is_pivot_row[r] && rows[r][k] != 0) return std::nullopt;
    Vec x(k, 0);
    if (!backsolve(rows, pivots, k, x, q, M, (int)k, -1)) return std::nullopt;
    return x;
}

std::vector<Vec> kernel_prime_power(const Mat& A, i64 q, i64 M) {
    const size_t m = A.size();
    const size_t k = m ? A[0].size() : 0;
    Mat rows(m);
    for (size_t r = 0; r < m; ++r) {
        rows[r].resize(k);
        for (size_t c = 0; c < k; ++c) rows[r][c] = mod_reduce(A[r][c], M);
    }
    auto pivots = eliminate(rows, k, q, M);
    std::vector<char> col_pivoted(k, 0);
    for (auto& p : pivots) col_pivoted[p.col] = 1;
    std::vector<Vec> gens;
    // Annihilator of each pivot of positive valuation: q^(a-v) at the pivot
    // column, earlier pivot coordinates back-filled.
    for (size_t t = 0; t < pivots.size(); ++t) {
        if (pivots[t].v == 0) continue;
        i64 qv = 1;
        for (int i = 0; i < pivots[t].v; ++i) qv *= q;
        Vec g(k, 0);
        g[pivots[t].col] = M / qv;
        if (!backsolve(rows, pivots, k, g, q, M, -1, (int)t))
            throw std::logic_error("kernel back-substitution failed");
        gens.push_back(std::move(g));
    }
    // One generator per free column.
    for (size_t c = 0; c < k; ++c) {
        if (col_pivoted[c]) continue;
        Vec g(k, 0);
        g[c] = 1;
        if (!backsolve(rows, pivots, k, g, q, M, -1, -1))
            throw std::logic_error("kernel back-substitution failed");
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace

std::vector<std::pair<i64, i64>> factor_prime_powers(i64 M) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 q = 2; q * q <= M; ++q) {
        if (M % q) continue;
        i64 pw = 1;
        while (M % q == 0) { pw *= q; M /= q; }
        out.push_back({q, pw});
    }
    if (M > 1) out.push_back({M, M});
    return out;
}

std::optional<Vec> solve_mod(const Mat& A, const Vec& b, i64 M) {
    if (A.size() != b.size()) throw std::invalid_argument("solve_mod: size mismatch");
    if (M <= 0) throw std::domain_error("solve_mod: modulus must be positive");
    const size_t k = A.empty() ? 0 : A[0].size();
    if (M == 1) return Vec(k, 0);
    auto factors = factor_prime_powers(M);
    Vec x(k, 0);
    for (auto [q, pw] : factors) {
        auto xq = solve_prime_power(A, b, q, pw);
        if (!xq) return std::nullopt;
        // CRT idempotent for this factor: e = (M/pw) * inv(M/pw mod pw).
        i64 rest = M / pw;
        i64 e = rest == 1 ? 1 : checked_cast(i128(rest) * inv_mod(rest % pw, pw) % M);
        for (size_t c = 0; c < k; ++c)
            x[c] = mod_reduce(x[c] + checked_cast(i128(e) * (*xq)[c] % M), M);
    }
    // Safety: verify against the original system.
    for (size_t r = 0; r < A.size(); ++r) {
        i128 s = -b[r];
        for (size_t c = 0; c < k; ++c) s += i128(A[r][c]) * x[c];
        if (mod_reduce(checked_cast(s % M), M) != 0)
            throw std::logic_error("solve_mod produced an invalid solution");
    }
    return x;
}

std::vector<Vec> kernel_mod(const Mat& A, i64 M) {
    if (M <= 0) throw std::domain_error("kernel_mod: modulus must be positive");
    const size_t k = A.empty() ? 0 : A[0].size();
    std::vector<Vec> gens;
    if (M == 1) return gens;
    for (auto [q, pw] : factor_prime_powers(M)) {
        i64 rest = M / pw;
        i64 e = rest == 1 ? 1 : checked_cast(i128(rest) * inv_mod(rest % pw, pw) % M);
        for (auto& g : kernel_prime_power(A, q, pw)) {
            Vec lifted(k, 0);
            bool nonzero = false;
            for (size_t c = 0; c < k; ++c) {
                lifted[c] = checked_cast(i128(e) * g[c] % M);
                nonzero |= lifted[c] != 0;
            }
            if (nonzero) gens.push_back(std::move(lifted));
        }
    }
    return gens;
}

}  // namespace repzeta
