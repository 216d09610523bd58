#pragma once

#include <vector>

#include "qeuler/wreath.hpp"

namespace qeuler {

// A slot of sigma is a gap (position, position+1), 0 <= position <= n, whose
// left letter is not a fixed point (the boundary x_0 counts as +infinity).
// Slots are indexed 0..d where d is the order of the derangement part.
struct Slot {
    int index = 0;
    int position = 0;

    friend bool operator==(const Slot&, const Slot&) = default;
};

enum class SlotColor { Green, Red };

struct SlotInfo {
    Slot slot;
    SlotColor color = SlotColor::Green;
};

// A derangement together with a nondecreasing sequence over [0, d]; applying
// the insertions left to right rebuilds a permutation with |seq| fixed points.
struct InsertionSeq {
    ColoredPermutation base;
    std::vector<int> seq;
};

std::vector<Slot> slots(const ColoredPermutation& sigma);

// Inserts a new fixed point into the given slot: the letter position+1
// appears there and every absolute value above the position shifts up,
// colors preserved.  Throws std::invalid_argument on a bad slot index.
ColoredPermutation insert_fixed(const ColoredPermutation& sigma, int slot_index);

// Mutually inverse: insert_seq folds insert_fixed over the sequence;
// decompose strips the fixed points back off.
ColoredPermutation insert_seq(const InsertionSeq& s);
InsertionSeq decompose(const ColoredPermutation& tau);

// A slot is green when inserting there keeps the descent count, red when it
// raises it by one; any other change indicates a bug and throws.
std::vector<SlotInfo> slot_colors(const ColoredPermutation& sigma);

// Slot values of a derangement of order n: greens take 0..g right to left,
// reds take g+1..n left to right; the result is a permutation of {0..n}.
// Rejects input with fixed points.
std::vector<int> slot_values(const ColoredPermutation& sigma);

struct PsiStep {
    int prefix_len = 0;            // t: step handles the first t insertions
    int slot = 0;                  // i_t
    SlotColor color = SlotColor::Green;
    int run = 0;                   // trailing run length of i_t (red case)
    std::vector<int> result_seq;   // insertion sequence of the image prefix
};

struct PsiTrace {
    ColoredPermutation base;
    std::vector<int> seq;          // canonical sequence of the input
    std::vector<SlotInfo> colors;
    std::vector<int> values;       // slot values g_0..g_d
    std::vector<PsiStep> steps;    // recursion path, shortest prefix first
};

// The statistic-transporting bijection on each class {tau : Der(tau) = sigma,
// fix(tau) = m}; derangements map to themselves.
ColoredPermutation psi(const ColoredPermutation& tau, PsiTrace* trace = nullptr);

// Inverse by exhaustive search within the class of tau.
ColoredPermutation psi_inv(const ColoredPermutation& tau);

}  // namespace qeuler
