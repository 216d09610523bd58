#pragma once

#include <string>
#include <vector>

#include "qeuler/common.hpp"

namespace qeuler {

// A word over {0, 1, 2, ...}.  Zeros mark fixed-point positions, nonzero
// letters ("pillars") carry a reduced derangement word.  Membership in a
// shuffle class is validated where needed, not encoded in the type.
using ZWord = std::vector<int>;

int pil(const ZWord& w);
int zero_count(const ZWord& w);
// The pillar subword (zeros deleted).
std::vector<int> pos_word(const ZWord& w);
// 1-based positions of the zeros, increasing.
std::vector<int> zero_positions(const ZWord& w);
// True when deleting the zeros of w yields exactly v.
bool is_shuffle_of(const ZWord& w, const std::vector<int>& v);

enum class LetterKind { Zero, Excedent, Subexcedent };

// Classification of the letter at 1-based position k: a pillar is excedent
// (subexcedent) when it is greater (smaller) than the rank of its position
// among pillar positions; zeros are neither.
LetterKind classify_letter(const ZWord& w, int k);

// --- fixed-point relocation maps --------------------------------------------

// One application of a single-zero map: which zero moved, which case of the
// three-way analysis fired and the chain endpoint (0 when no move happened).
struct MoveStep {
    int l = 0;              // index of the zero acted on (left to right)
    int zero_position = 0;  // its 1-based position before the move
    int case_id = 0;        // 1, 2, 3 per the case analysis; 0 = out of range
    int k = 0;              // chain endpoint position for cases 2 and 3
    ZWord result;
};

// phi_l moves the l-th zero (identity when l exceeds the zero count):
//   case 1: both neighbours non-subexcedent -> unchanged;
//   case 2: zero slides right past a maximal increasing run of subexcedent
//           pillars;
//   case 3: zero slides left past a maximal decreasing run of subexcedent
//           pillars.
// psi_l is the inverse map with the mirrored case analysis.
ZWord phi_l(const ZWord& w, int l, MoveStep* step = nullptr);
ZWord psi_l(const ZWord& w, int l, MoveStep* step = nullptr);

// The full bijections of each shuffle class with a derangement pillar word:
// phi applies phi_n first and phi_1 last; phi_inv applies psi_1 first and
// psi_n last.  Both validate that pos_word(w) is a derangement word.
ZWord phi(const ZWord& w, std::vector<MoveStep>* steps = nullptr);
ZWord phi_inv(const ZWord& w, std::vector<MoveStep>* steps = nullptr);

// --- the recursive class transformation -------------------------------------

struct FRecursionLine {
    ZWord input;
    int case_id = 0;  // 0 = no descent (base), otherwise 1, 2 or 3
    ZWord result;
};

// Rotates the trailing zero of a word to the front.
ZWord gamma_rotate(const ZWord& w);
// Moves each pillar that immediately follows a zero run to the front of
// that run.
ZWord delta_rotate(const ZWord& w);

// The descent-driven recursive bijection of each shuffle class onto itself:
// base case on descent-free words, otherwise recursion on the word minus its
// last letter with case 1 (append), case 2 (gamma), case 3 (delta).
ZWord f_transform(const ZWord& w, std::vector<FRecursionLine>* lines = nullptr);

// --- fixed points <-> zeros --------------------------------------------------

// Replaces fixed points by zeros and every other letter by its rank among
// the non-fixed values.
ZWord zder(const std::vector<int>& perm);
// Inverse; requires pos_word(w) to be a derangement word of [m].
std::vector<int> zder_inv(const ZWord& w);

// zder_inv . f_transform . phi_inv . zder; agrees pointwise with the
// insertion-based bijection on uncolored permutations.
std::vector<int> psi_via_factorization(const std::vector<int>& perm);

// --- index form ---------------------------------------------------------------

// [base, i_1..i_z]: i_k is the number of pillars left of the k-th zero.
struct IndexForm {
    std::vector<int> base;
    std::vector<int> indices;
};

IndexForm index_form(const ZWord& w);
ZWord from_index_form(const IndexForm& f);

// Checks the index-sequence prediction for F(w1 0^r w2) against the direct
// computation.  Requires w1, w2 nonempty, Last(w1) > 0, zero(w2) = 0 and
// distinct boundary letters; throws std::invalid_argument otherwise.
bool lemma_F_check(const ZWord& w1, int r, const ZWord& w2, std::string* detail = nullptr);

// --- text format --------------------------------------------------------------

// Accepts whitespace-separated letters, or a single compact digit string
// ("02001430") when every letter is below 10.
ZWord parse_word(const std::string& text);
std::string word_to_string(const ZWord& w, bool compact = false);

}  // namespace qeuler
