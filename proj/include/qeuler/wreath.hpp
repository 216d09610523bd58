#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qeuler/common.hpp"

namespace qeuler {

// One letter of a colored permutation: the value |x| in [1, n] and the
// color exponent in [0, ell-1].  Color 0 is the uncolored (largest) copy.
struct ColoredLetter {
    int value = 0;
    int color = 0;

    friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

// Linear order on colored letters: higher color exponents come first,
// ties broken by value.  Positions compare as uncolored letters.
inline bool letter_less(const ColoredLetter& a, const ColoredLetter& b) {
    if (a.color != b.color) return a.color > b.color;
    return a.value < b.value;
}

std::string to_string(const ColoredLetter& x);

/**
 * A colored permutation: the window x_1 ... x_n where the absolute values
 * form a permutation of [n] and every color exponent is below ell.
 * Immutable after construction; positions are 1-based throughout.
 */
class ColoredPermutation {
public:
    ColoredPermutation() = default;  // the empty permutation, ell = 1

    ColoredPermutation(int ell, std::vector<ColoredLetter> letters);

    static ColoredPermutation identity(int ell, int n);
    // Uncolored values, or values paired with a color word.
    static ColoredPermutation from_values(int ell, const std::vector<int>& values);
    static ColoredPermutation from_values(int ell, const std::vector<int>& values,
                                          const std::vector<int>& colors);

    int ell() const { return ell_; }
    int size() const { return static_cast<int>(letters_.size()); }
    const std::vector<ColoredLetter>& letters() const { return letters_; }
    const ColoredLetter& letter(int pos) const { return letters_[static_cast<std::size_t>(pos - 1)]; }

    bool is_fixed_point(int pos) const {
        const ColoredLetter& x = letter(pos);
        return x.color == 0 && x.value == pos;
    }

    std::vector<int> values() const;

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    int ell_ = 1;
    std::vector<ColoredLetter> letters_;
};

struct DescentStats {
    std::vector<int> places;  // descent places, increasing
    int des = 0;
    long long maj = 0;
};

struct StatVector {
    int fix = 0;
    int des = 0;
    long long maj = 0;
    int exc = 0;
    long long col = 0;
    long long maf = 0;
    long long fmaj = 0;
    long long fmaf = 0;
};

// Positions i with sigma(i) = i, increasing.
std::vector<int> fix_set(const ColoredPermutation& sigma);

DescentStats descent_stats(const ColoredPermutation& sigma);

// Number of positions with x_i > i in the letter order (uncolored and |x_i| > i).
int exc(const ColoredPermutation& sigma);

// Sum of color exponents over all letters.
long long col(const ColoredPermutation& sigma);

// Derangement part: fixed points deleted, surviving absolute values
// reranked onto [m], colors kept.
ColoredPermutation der(const ColoredPermutation& sigma);

// maj of the derangement part plus the displacement sum of the fixed points.
long long maf(const ColoredPermutation& sigma);

StatVector stat_vector(const ColoredPermutation& sigma);

// --- enumeration -----------------------------------------------------------

enum class PermClassKind { All, Derangements, FixInSuffix };

// A subset of the colored permutations of a given order: everything,
// the derangements, or the permutations whose fixed points all lie in
// the last m positions.
struct PermClass {
    PermClassKind kind = PermClassKind::All;
    int m = 0;

    static PermClass all() { return {PermClassKind::All, 0}; }
    static PermClass derangements() { return {PermClassKind::Derangements, 0}; }
    static PermClass fix_in_suffix(int m) { return {PermClassKind::FixInSuffix, m}; }

    bool contains(const ColoredPermutation& sigma) const;
    std::string name() const;
};

// ell^n * n!
Int wreath_order(int ell, int n);

// Visits every member of the class exactly once, in lexicographic order of
// (value sequence, color word).  Throws BudgetExceeded when ell^n * n!
// exceeds the budget.
void enumerate(int ell, int n, const PermClass& cls, long long budget,
               const std::function<void(const ColoredPermutation&)>& fn);

inline void enumerate(int ell, int n, const PermClass& cls,
                      const std::function<void(const ColoredPermutation&)>& fn) {
    enumerate(ell, n, cls, kDefaultBudget, fn);
}

// --- text format ------------------------------------------------------------

// Tokens "v" or "v:c" separated by whitespace, e.g. "1 8:1 3 4 6 2:2 7 5:1 9".
// Rejects out-of-range colors, repeated absolute values and gaps in [n].
ColoredPermutation parse_permutation(const std::string& text, int ell);

std::string to_string(const ColoredPermutation& sigma);

std::string to_string(const std::vector<int>& set_or_word);

}  // namespace qeuler
