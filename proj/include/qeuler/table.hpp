#pragma once

#include <vector>

#include "qeuler/qpoly.hpp"
#include "qeuler/wreath.hpp"

namespace qeuler {

// The triangular difference table g[n][m], 0 <= m <= n <= n_max.  Diagonal
// entries come from the closed-form product, rows are filled by the backward
// recurrence g[n][m] = g[n][m+1] - x q^{ell(n-m-1)} g[n-1][m] (x = 1 when
// with_x is false).  Every entry has nonnegative coefficients.
struct EulerTable {
    int ell = 1;
    int n_max = 0;
    bool with_x = false;
    std::vector<std::vector<QXPoly>> g;

    const QXPoly& entry(int n, int m) const {
        return g[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }
};

// Diagonal entry: sum_{k=0}^{n} (prod_{j=k+1}^{n} [j*ell]_q) *
// (x-1)(x-q^ell)...(x-q^{ell(k-1)}), kept division-free.
QXPoly g_diag(int ell, int n);

// Throws std::logic_error (a falsification, never clipped) if a filled
// entry acquires a negative coefficient.
EulerTable euler_table(int ell, int n_max, bool with_x);

// Alternating-sum closed form for g[n][m]; requires 0 <= m <= n.
QXPoly g_explicit(int ell, int n, int m);

// sum_k (-1)^k q^{ell*binom(k,2)} prod_{j=k+1}^{n} [j*ell]_q; equals the
// diagonal entry at x = 0.
QXPoly derangement_poly(int ell, int n);

// Verifies d_{n+1} = [ell(n+1)]_q d_n + (-1)^{n+1} q^{ell*binom(n+1,2)}
// for all n < n_max.
bool derangement_recurrence_check(int ell, int n_max);

enum class MahonianStat { Fmaf, Fmaj };

// Exact generating polynomial sum q^{stat} x^{fix} over the class
// (x dropped when track_fix is false).
QXPoly distribution(int ell, int n, const PermClass& cls, MahonianStat stat,
                    bool track_fix = true, long long budget = kDefaultBudget);

// distribution over the full group equals
// sum_k x^{n-k} [n choose k]_{q^ell} d_{ell,k}(q).
bool fix_sum_identity_check(int ell, int n, long long budget = kDefaultBudget);

// --- generic two-term array --------------------------------------------------
//
// a[0][m] = xs[m];  a[n][m] = zs[m] * a[n-1][m+1] + ys[n-1] * a[n-1][m].
// array_formula evaluates the equivalent elementary-symmetric closed form
// a[n][m] = sum_k xs[m+k] (zs[m]...zs[m+k-1]) e_{n-k}(ys[0..n-1]).

QXPoly array_solve(const std::vector<QXPoly>& xs, const std::vector<QXPoly>& ys,
                   const std::vector<QXPoly>& zs, int n, int m);

QXPoly array_formula(const std::vector<QXPoly>& xs, const std::vector<QXPoly>& ys,
                     const std::vector<QXPoly>& zs, int n, int m);

// e_0..e_k of the given values.
std::vector<QXPoly> elementary_symmetric(const std::vector<QXPoly>& ys);

// Plain-text triangle, one row per n, entries separated by two spaces.
std::string table_to_text(const EulerTable& t);

}  // namespace qeuler
