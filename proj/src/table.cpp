#include "qeuler/table.hpp"

#include <sstream>

namespace qeuler {

QXPoly g_diag(int ell, int n) {
    if (ell < 1 || n < 0) throw std::invalid_argument("g_diag: bad arguments");
    QXPoly sum;
    for (int k = 0; k <= n; ++k) {
        QXPoly term = rising_flag_product(k, n, ell);
        for (int i = 0; i < k; ++i)
            term *= QXPoly::x() - QXPoly::q(ell * i);
        sum += term;
    }
    return sum;
}

EulerTable euler_table(int ell, int n_max, bool with_x) {
    if (ell < 1 || n_max < 0) throw std::invalid_argument("euler_table: bad arguments");
    EulerTable t;
    t.ell = ell;
    t.n_max = n_max;
    t.with_x = with_x;
    t.g.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = t.g[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        QXPoly diag = g_diag(ell, n);
        row[static_cast<std::size_t>(n)] = with_x ? diag : diag.substitute_x(1);
        for (int m = n - 1; m >= 0; --m) {
            QXPoly correction = t.entry(n - 1, m).times_monomial(ell * (n - m - 1), with_x ? 1 : 0);
            row[static_cast<std::size_t>(m)] = row[static_cast<std::size_t>(m + 1)] - correction;
            if (row[static_cast<std::size_t>(m)].has_negative_coeff())
                throw std::logic_error("euler_table: negative coefficient at g[" +
                                       std::to_string(n) + "][" + std::to_string(m) + "] = " +
                                       row[static_cast<std::size_t>(m)].to_string());
        }
    }
    return t;
}

QXPoly g_explicit(int ell, int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("g_explicit: requires 0 <= m <= n");
    QXPoly sum;
    for (int k = 0; k <= n - m; ++k) {
        QXPoly term = q_binomial(n - m, k, ell) * g_diag(ell, n - k);
        term = term.times_monomial(ell * (k * (k - 1) / 2), k, (k % 2 == 0) ? Int(1) : Int(-1));
        sum += term;
    }
    return sum;
}

QXPoly derangement_poly(int ell, int n) {
    if (ell < 1 || n < 0) throw std::invalid_argument("derangement_poly: bad arguments");
    QXPoly sum;
    for (int k = 0; k <= n; ++k) {
        QXPoly term = rising_flag_product(k, n, ell);
        sum += term.times_monomial(ell * (k * (k - 1) / 2), 0, (k % 2 == 0) ? Int(1) : Int(-1));
    }
    return sum;
}

bool derangement_recurrence_check(int ell, int n_max) {
    for (int n = 0; n < n_max; ++n) {
        QXPoly lhs = derangement_poly(ell, n + 1);
        QXPoly rhs = q_integer(n + 1, ell) * derangement_poly(ell, n);
        rhs.add_term(ell * (n + 1) * n / 2, 0, (n % 2 == 0) ? Int(-1) : Int(1));
        if (lhs != rhs) return false;
    }
    return true;
}

QXPoly distribution(int ell, int n, const PermClass& cls, MahonianStat stat, bool track_fix,
                    long long budget) {
    QXPoly sum;
    enumerate(ell, n, cls, budget, [&](const ColoredPermutation& sigma) {
        StatVector s = stat_vector(sigma);
        long long mah = stat == MahonianStat::Fmaf ? s.fmaf : s.fmaj;
        sum.add_term(static_cast<int>(mah), track_fix ? s.fix : 0, 1);
    });
    return sum;
}

bool fix_sum_identity_check(int ell, int n, long long budget) {
    QXPoly lhs = distribution(ell, n, PermClass::all(), MahonianStat::Fmaf, true, budget);
    QXPoly rhs;
    for (int k = 0; k <= n; ++k)
        rhs += (q_binomial(n, k, ell) * derangement_poly(ell, k)).times_monomial(0, n - k);
    return lhs == rhs;
}

namespace {

const QXPoly& seq_at(const std::vector<QXPoly>& seq, int i, const char* who) {
    if (i < 0 || i >= static_cast<int>(seq.size()))
        throw std::invalid_argument(std::string(who) + ": sequence too short (need index " +
                                    std::to_string(i) + ")");
    return seq[static_cast<std::size_t>(i)];
}

}  // namespace

QXPoly array_solve(const std::vector<QXPoly>& xs, const std::vector<QXPoly>& ys,
                   const std::vector<QXPoly>& zs, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("array_solve: n and m must be nonnegative");
    if (n == 0) return seq_at(xs, m, "array_solve");
    return seq_at(zs, m, "array_solve") * array_solve(xs, ys, zs, n - 1, m + 1) +
           seq_at(ys, n - 1, "array_solve") * array_solve(xs, ys, zs, n - 1, m);
}

std::vector<QXPoly> elementary_symmetric(const std::vector<QXPoly>& ys) {
    // coefficients of prod (1 + y_i t) in t
    std::vector<QXPoly> e(ys.size() + 1);
    e[0] = QXPoly(1);
    std::size_t used = 0;
    for (const QXPoly& y : ys) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) {
            QXPoly add = e[k - 1] * y;
            e[k] += add;
        }
    }
    return e;
}

QXPoly array_formula(const std::vector<QXPoly>& xs, const std::vector<QXPoly>& ys,
                     const std::vector<QXPoly>& zs, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("array_formula: n and m must be nonnegative");
    std::vector<QXPoly> prefix(ys.begin(), ys.begin() + n);
    std::vector<QXPoly> e = elementary_symmetric(prefix);
    QXPoly sum;
    for (int k = 0; k <= n; ++k) {
        QXPoly term = seq_at(xs, m + k, "array_formula");
        for (int j = 0; j < k; ++j) term *= seq_at(zs, m + j, "array_formula");
        term *= e[static_cast<std::size_t>(n - k)];
        sum += term;
    }
    return sum;
}

std::string table_to_text(const EulerTable& t) {
    // column widths over the triangle
    std::vector<std::size_t> width;
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 0; m <= n; ++m) {
            if (static_cast<int>(width.size()) <= m) width.push_back(0);
            width[static_cast<std::size_t>(m)] =
                std::max(width[static_cast<std::size_t>(m)], t.entry(n, m).to_string().size());
        }
    std::ostringstream out;
    for (int n = 0; n <= t.n_max; ++n) {
        out << "n=" << n << " |";
        for (int m = 0; m <= n; ++m) {
            std::string cell = t.entry(n, m).to_string();
            out << " " << cell;
            if (m < n) out << std::string(width[static_cast<std::size_t>(m)] - cell.size() + 1, ' ');
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qeuler
