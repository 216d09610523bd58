// Acceptance suite: every release-gating identity and golden value, one
// pass/fail line per criterion.  Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qeuler/insertion.hpp"
#include "qeuler/shuffle.hpp"
#include "qeuler/table.hpp"
#include "qeuler/verify.hpp"

using namespace qeuler;

namespace {

struct Harness {
    int failures = 0;

    void run(int number, const std::string& label, double limit_ms,
             const std::function<void()>& body) {
        using clock = std::chrono::steady_clock;
        bool pass = true;
        std::string why;
        auto start = clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            pass = false;
            why = e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        if (pass && limit_ms > 0 && ms > limit_ms) {
            pass = false;
            why = "took " + std::to_string(ms) + " ms, limit " + std::to_string(limit_ms);
        }
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << " (" << ms
             << " ms): " << label;
        if (!pass) line << " -- " << why;
        std::cout << line.str() << "\n";
        if (!pass) ++failures;
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

void require_report(const VerifyReport& report) {
    for (const CheckResult& c : report.checks)
        if (!c.pass) throw std::runtime_error(c.name + ": " + c.detail);
}

QXPoly P(const std::string& s) { return QXPoly::parse(s); }

void golden_statistics() {
    ColoredPermutation sigma = parse_permutation("1 8:1 3 4 6 2:2 7 5:1 9", 4);
    StatVector s = stat_vector(sigma);
    require(s.maj == 13, "maj");
    require(to_string(der(sigma)) == "4:1 3 1:2 2:1", "derangement part");
    require(s.maf == 11, "maf");
    require(s.col == 4, "col");
    require(s.fmaj == 56, "fmaj");
    require(s.fmaf == 48, "fmaf");
}

void golden_bijection() {
    ColoredPermutation tau = parse_permutation("1 9:1 3 10 5 6 7 4 2 8:2", 3);
    ColoredPermutation image = psi(tau);
    require(to_string(image) == "6:1 8 2 4 5 1 7 3:2 9 10", "colored image");
    require(stat_vector(image).fmaf == 90, "fmaf of the image");

    ColoredPermutation tau2 = parse_permutation("1 5 3 4 2 7 6 8", 1);
    require(to_string(psi(tau2)) == "1 3 2 4 8 6 7 5", "uncolored image");
}

void golden_word_transforms() {
    std::vector<MoveStep> steps;
    require(phi_inv(parse_word("02001430"), &steps) == parse_word("02010403"),
            "relocation image");
    require(steps.size() == 4, "four single-zero steps");
    require(steps[0].case_id == 1 && steps[1].case_id == 1, "first two steps identity case");
    require(steps[2].case_id == 3 && steps[2].k == 5, "third step case 3 at k=5");
    require(steps[3].case_id == 2 && steps[3].k == 7, "fourth step case 2 at k=7");

    std::vector<FRecursionLine> lines;
    require(f_transform(parse_word("02010403"), &lines) == parse_word("02104003"),
            "recursive image");
    require(lines.size() == 7, "seven recursion steps");
    const int expected_cases[7] = {0, 3, 2, 3, 1, 3, 2};
    for (int i = 0; i < 7; ++i)
        require(lines[static_cast<std::size_t>(i)].case_id == expected_cases[i],
                "recursion case " + std::to_string(i));
}

void golden_tables() {
    EulerTable one = euler_table(1, 3, false);
    const char* expected_one[4][4] = {
        {"1", nullptr, nullptr, nullptr},
        {"0", "1", nullptr, nullptr},
        {"q", "q", "1+q", nullptr},
        {"q+q^2", "q+q^2+q^3", "q+2*q^2+q^3", "1+2*q+2*q^2+q^3"},
    };
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= n; ++m)
            require(one.entry(n, m) == P(expected_one[n][m]),
                    "table l=1 entry g[" + std::to_string(n) + "][" + std::to_string(m) + "]");

    EulerTable two = euler_table(2, 3, false);
    std::vector<std::vector<QXPoly>> expected_two = {
        {P("1")},
        {P("q"), q_integer(2)},
        {QXPoly::q() * q_integer(4) + P("q^2"), QXPoly::q() * q_integer(4) + P("q^2") * q_integer(2),
         q_integer(2) * q_integer(4)},
        {P("q+3*q^2+4*q^3+5*q^4+5*q^5+4*q^6+4*q^7+2*q^8+q^9"),
         P("q+3*q^2+4*q^3+5*q^4+6*q^5+6*q^6+5*q^7+3*q^8+q^9"),
         // corrected entry: the recurrence forces these coefficients
         P("q+3*q^2+5*q^3+7*q^4+8*q^5+7*q^6+5*q^7+3*q^8+q^9"),
         q_integer(2) * q_integer(4) * q_integer(6)},
    };
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= n; ++m)
            require(two.entry(n, m) == expected_two[static_cast<std::size_t>(n)]
                                                   [static_cast<std::size_t>(m)],
                    "table l=2 entry g[" + std::to_string(n) + "][" + std::to_string(m) + "]");
}

void property_suites() {
    // bijectivity of the insertion map on every class, derangement order
    // plus inserted points at most 6
    for (int ell = 1; ell <= 3; ++ell)
        for (int total = 1; total <= 6; ++total)
            for (int d = 0; d < total; ++d) {
                const int m = total - d;
                enumerate(ell, d, PermClass::derangements(), [&](const ColoredPermutation& sigma) {
                    std::set<std::string> images;
                    long long count = 0;
                    std::vector<int> seq;
                    auto rec = [&](auto&& self, int depth, int low) -> void {
                        if (depth == m) {
                            ColoredPermutation image = psi(insert_seq({sigma, seq}));
                            require(der(image) == sigma, "image keeps the derangement part");
                            images.insert(to_string(image));
                            ++count;
                            return;
                        }
                        for (int i = low; i <= d; ++i) {
                            seq.push_back(i);
                            self(self, depth + 1, i);
                            seq.pop_back();
                        }
                    };
                    rec(rec, 0, 0);
                    require(static_cast<long long>(images.size()) == count,
                            "insertion map injective on the class");
                });
            }

    // bijectivity of both word transforms on every canonical class up to 7
    for (int n = 0; n <= 7; ++n) {
        std::map<std::vector<int>, std::set<ZWord>> classes;
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        do {
            ZWord w = zder(perm);
            classes[pos_word(w)].insert(w);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& [v, members] : classes) {
            std::set<ZWord> relocated, transformed;
            for (const ZWord& w : members) {
                ZWord a = phi_inv(w);
                require(is_shuffle_of(a, v) && phi(a) == w, "relocation invertible in class");
                relocated.insert(a);
                ZWord b = f_transform(w);
                require(is_shuffle_of(b, v), "recursion stays in class");
                transformed.insert(b);
            }
            require(relocated.size() == members.size(), "relocation bijective on class");
            require(transformed.size() == members.size(), "recursion bijective on class");
        }
    }

    // the six-case table agrees with the descent-comparison coloring
    enumerate(1, 6, PermClass::derangements(), [&](const ColoredPermutation& sigma) {
        std::vector<int> values = sigma.values();
        std::vector<SlotInfo> colored = slot_colors(sigma);
        const int n = sigma.size();
        const int big = 1 << 20;
        for (int i = 0; i <= n; ++i) {
            const int xi = i == 0 ? big : values[static_cast<std::size_t>(i - 1)];
            const int xi1 = i == n ? big : values[static_cast<std::size_t>(i)];
            int green = 0, red = 0;
            if (xi > xi1 && xi1 > i) ++green;
            if (xi < i && i < xi1) ++green;
            if (i > xi && xi > xi1) ++green;
            if (i < xi && xi < xi1) ++red;
            if (xi > i && i >= xi1) ++red;
            if (xi < xi1 && xi1 <= i) ++red;
            require(green + red == 1, "exactly one case fires");
            bool is_green = colored[static_cast<std::size_t>(i)].color == SlotColor::Green;
            require(is_green == (green == 1), "case table color");
        }
    });

    // index predictions over all admissible splits up to length 8
    require_report(verify_index_predictions(VerifyOptions{}));

    // random two-term arrays: recurrence equals closed form
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coin(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<QXPoly> xs, ys, zs;
        for (int i = 0; i < 11; ++i) {
            xs.push_back(QXPoly(coin(rng)));
            ys.push_back(QXPoly(coin(rng)));
            zs.push_back(QXPoly(coin(rng)));
        }
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m + n <= 10; ++m)
                require(array_solve(xs, ys, zs, n, m) == array_formula(xs, ys, zs, n, m),
                        "array recurrence = closed form");
    }

    // binomial symmetry and the Pascal identity up to n = 10
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            require(q_binomial(n, k, 1) == q_binomial(n, n - k, 1), "binomial symmetry");
            if (k >= 1 && k < n)
                require(q_binomial(n, k, 1) ==
                            q_binomial(n - 1, k - 1, 1) +
                                q_binomial(n - 1, k, 1).times_monomial(k, 0),
                        "Pascal identity");
        }
}

}  // namespace

int main() {
    Harness h;
    VerifyOptions defaults;

    h.run(1, "golden statistics of the order-9 example", 1.0, golden_statistics);
    h.run(2, "golden images of the insertion bijection", 1.0, golden_bijection);
    h.run(3, "golden word-transform traces", 1.0, golden_word_transforms);
    h.run(4, "difference tables reproduce the printed triangles", 10.0, golden_tables);
    h.run(5, "flag statistics equidistributed with closed-form marginal (l<=3, n<=5)", 60000.0,
          [&] { require_report(verify_equidistribution(defaults)); });
    h.run(6, "recurrence, closed form and enumeration coincide (0<=m<=n<=5, l<=3)", 120000.0,
          [&] { require_report(verify_table_triple(defaults)); });
    h.run(7, "word factorization equals the insertion bijection on S_n, n<=7", 10000.0, [&] {
        VerifyOptions opts;
        opts.n_max = 7;
        require_report(verify_factorization(opts));
    });
    h.run(8, "flag-major distribution equals the step product (l<=3, n<=5)", 0.0,
          [&] { require_report(verify_flag_major_product(defaults)); });
    h.run(9, "derangement polynomial: enumeration and first-order recurrence (l<=3, n<=5)", 0.0,
          [&] { require_report(verify_derangement_recurrence(defaults)); });
    h.run(10, "insertion shifts maj by the slot value (orders <=5, l<=3)", 0.0,
          [&] { require_report(verify_insertion_major_shift(defaults)); });
    h.run(11, "property suites: bijectivity, case table, index predictions, arrays, binomials",
          0.0, property_suites);
    h.run(12, "a suffix class separating the two flag statistics exists", 10000.0, [&] {
        VerifyReport report = find_non_equidistribution_witness(defaults);
        require_report(report);
        std::cout << "       witness: " << report.checks.front().name << " ("
                  << report.checks.front().detail << ")\n";
    });

    if (h.failures == 0) {
        std::cout << "acceptance: all 12 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << h.failures << " criterion(s) FAILED\n";
    return 1;
}
