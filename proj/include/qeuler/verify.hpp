#pragma once

#include <string>
#include <vector>

#include "qeuler/common.hpp"

namespace qeuler {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample in replayable text form on failure
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const VerifyReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

struct VerifyOptions {
    int l_min = 1;
    int l_max = 3;
    int n_max = -1;  // -1: per-target default
    long long budget = kDefaultBudget;
};

// thm1: the joint distributions of (fmaf, exc, fix) and (fmaj, exc, fix)
// coincide on the full group and their (q, x) marginal equals the
// closed-form diagonal polynomial.
VerifyReport verify_equidistribution(const VerifyOptions& opts);

// thm2: recurrence entry = alternating closed form = enumeration over the
// fixed-points-in-suffix classes, for every 0 <= m <= n.
VerifyReport verify_table_triple(const VerifyOptions& opts);

// thm3: the word-transform factorization agrees pointwise with the
// insertion bijection on all uncolored permutations up to n_max.
VerifyReport verify_factorization(const VerifyOptions& opts);

// haglund: sum of q^{fmaj} over the full group equals [ell]_q...[n*ell]_q.
VerifyReport verify_flag_major_product(const VerifyOptions& opts);

// lemma-clark: inserting into slot i raises maj by exactly the slot value,
// for every colored derangement up to the given order.
VerifyReport verify_insertion_major_shift(const VerifyOptions& opts);

// lemma-F: index-sequence predictions for F(w1 0^r w2) over all admissible
// splits up to the given total length (n_max, default 8) with at most 4 pillars.
VerifyReport verify_index_predictions(const VerifyOptions& opts);

// recurrence-d: derangement polynomial equals the enumerated distribution
// and satisfies the first-order recurrence.
VerifyReport verify_derangement_recurrence(const VerifyOptions& opts);

// fix-sum: the (fmaf, fix) distribution equals the binomial convolution of
// derangement polynomials.
VerifyReport verify_fix_sum(const VerifyOptions& opts);

// witness: finds (ell, n, m) with 0 < m < n where the fmaf and fmaj
// distributions over the suffix class differ; passes when one exists.
VerifyReport find_non_equidistribution_witness(const VerifyOptions& opts);

// Dispatch by CLI target name ("thm1", ..., "witness", "all").
// Throws std::invalid_argument for an unknown target.
VerifyReport run_verify_target(const std::string& target, const VerifyOptions& opts);

std::vector<std::string> verify_target_names();

}  // namespace qeuler
