#include "qeuler/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qeuler {

std::string to_string(const ColoredLetter& x) {
    std::string s = std::to_string(x.value);
    if (x.color != 0) s += ":" + std::to_string(x.color);
    return s;
}

ColoredPermutation::ColoredPermutation(int ell, std::vector<ColoredLetter> letters)
    : ell_(ell), letters_(std::move(letters)) {
    if (ell_ < 1) throw std::invalid_argument("ColoredPermutation: ell must be positive");
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const ColoredLetter& x : letters_) {
        if (x.value < 1 || x.value > n)
            throw std::invalid_argument("ColoredPermutation: value " + std::to_string(x.value) +
                                        " outside [1," + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(x.value)])
            throw std::invalid_argument("ColoredPermutation: repeated value " +
                                        std::to_string(x.value));
        seen[static_cast<std::size_t>(x.value)] = true;
        if (x.color < 0 || x.color >= ell_)
            throw std::invalid_argument("ColoredPermutation: color " + std::to_string(x.color) +
                                        " outside [0," + std::to_string(ell_ - 1) + "]");
    }
}

ColoredPermutation ColoredPermutation::identity(int ell, int n) {
    std::vector<ColoredLetter> letters(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) letters[static_cast<std::size_t>(i - 1)] = {i, 0};
    return {ell, std::move(letters)};
}

ColoredPermutation ColoredPermutation::from_values(int ell, const std::vector<int>& values) {
    return from_values(ell, values, std::vector<int>(values.size(), 0));
}

ColoredPermutation ColoredPermutation::from_values(int ell, const std::vector<int>& values,
                                                   const std::vector<int>& colors) {
    if (values.size() != colors.size())
        throw std::invalid_argument("ColoredPermutation: values/colors size mismatch");
    std::vector<ColoredLetter> letters(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) letters[i] = {values[i], colors[i]};
    return {ell, std::move(letters)};
}

std::vector<int> ColoredPermutation::values() const {
    std::vector<int> out(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i) out[i] = letters_[i].value;
    return out;
}

std::vector<int> fix_set(const ColoredPermutation& sigma) {
    std::vector<int> out;
    for (int i = 1; i <= sigma.size(); ++i)
        if (sigma.is_fixed_point(i)) out.push_back(i);
    return out;
}

DescentStats descent_stats(const ColoredPermutation& sigma) {
    DescentStats out;
    for (int i = 1; i < sigma.size(); ++i) {
        if (letter_less(sigma.letter(i + 1), sigma.letter(i))) {
            out.places.push_back(i);
            out.maj += i;
        }
    }
    out.des = static_cast<int>(out.places.size());
    return out;
}

int exc(const ColoredPermutation& sigma) {
    int count = 0;
    for (int i = 1; i <= sigma.size(); ++i) {
        const ColoredLetter& x = sigma.letter(i);
        if (x.color == 0 && x.value > i) ++count;
    }
    return count;
}

long long col(const ColoredPermutation& sigma) {
    long long sum = 0;
    for (const ColoredLetter& x : sigma.letters()) sum += x.color;
    return sum;
}

ColoredPermutation der(const ColoredPermutation& sigma) {
    std::vector<ColoredLetter> survivors;
    for (int i = 1; i <= sigma.size(); ++i)
        if (!sigma.is_fixed_point(i)) survivors.push_back(sigma.letter(i));

    std::vector<int> vals;
    vals.reserve(survivors.size());
    for (const ColoredLetter& x : survivors) vals.push_back(x.value);
    std::sort(vals.begin(), vals.end());

    for (ColoredLetter& x : survivors) {
        auto it = std::lower_bound(vals.begin(), vals.end(), x.value);
        x.value = static_cast<int>(it - vals.begin()) + 1;
    }
    return {sigma.ell(), std::move(survivors)};
}

long long maf(const ColoredPermutation& sigma) {
    long long sum = descent_stats(der(sigma)).maj;
    std::vector<int> fixed = fix_set(sigma);
    for (std::size_t j = 0; j < fixed.size(); ++j)
        sum += fixed[j] - static_cast<long long>(j + 1);
    return sum;
}

StatVector stat_vector(const ColoredPermutation& sigma) {
    StatVector s;
    DescentStats d = descent_stats(sigma);
    s.fix = static_cast<int>(fix_set(sigma).size());
    s.des = d.des;
    s.maj = d.maj;
    s.exc = exc(sigma);
    s.col = col(sigma);
    s.maf = maf(sigma);
    s.fmaj = sigma.ell() * s.maj + s.col;
    s.fmaf = sigma.ell() * s.maf + s.col;
    return s;
}

bool PermClass::contains(const ColoredPermutation& sigma) const {
    switch (kind) {
        case PermClassKind::All:
            return true;
        case PermClassKind::Derangements:
            return fix_set(sigma).empty();
        case PermClassKind::FixInSuffix: {
            const int n = sigma.size();
            for (int i = 1; i <= n - m; ++i)
                if (sigma.is_fixed_point(i)) return false;
            return true;
        }
    }
    return false;
}

std::string PermClass::name() const {
    switch (kind) {
        case PermClassKind::All:
            return "all";
        case PermClassKind::Derangements:
            return "derangements";
        case PermClassKind::FixInSuffix:
            return "fix_in_suffix(" + std::to_string(m) + ")";
    }
    return "?";
}

Int wreath_order(int ell, int n) {
    Int r = 1;
    for (int i = 1; i <= n; ++i) r *= i;
    for (int i = 0; i < n; ++i) r *= ell;
    return r;
}

void enumerate(int ell, int n, const PermClass& cls, long long budget,
               const std::function<void(const ColoredPermutation&)>& fn) {
    if (ell < 1 || n < 0) throw std::invalid_argument("enumerate: bad ell or n");
    if (cls.kind == PermClassKind::FixInSuffix && (cls.m < 0 || cls.m > n))
        throw std::invalid_argument("enumerate: fix_in_suffix(m) requires 0 <= m <= n");
    Int order = wreath_order(ell, n);
    if (order > budget) throw BudgetExceeded(order, budget);

    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    do {
        std::fill(colors.begin(), colors.end(), 0);
        while (true) {
            ColoredPermutation sigma = ColoredPermutation::from_values(ell, values, colors);
            if (cls.contains(sigma)) fn(sigma);
            // next color word in lexicographic order
            int pos = n - 1;
            while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == ell - 1) {
                colors[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++colors[static_cast<std::size_t>(pos)];
        }
    } while (std::next_permutation(values.begin(), values.end()));
}

ColoredPermutation parse_permutation(const std::string& text, int ell) {
    if (ell < 1) throw ParseError("permutation: ell must be positive");
    std::istringstream in(text);
    std::vector<ColoredLetter> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t colon = tok.find(':');
        std::string value_part = tok.substr(0, colon);
        std::string color_part = colon == std::string::npos ? "" : tok.substr(colon + 1);
        auto is_number = [](const std::string& s) {
            if (s.empty()) return false;
            return std::all_of(s.begin(), s.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        const std::string where = "token " + std::to_string(letters.size() + 1);
        if (!is_number(value_part) || (colon != std::string::npos && !is_number(color_part)))
            throw ParseError("permutation: malformed " + where + " '" + tok + "'");
        if (value_part.size() > 9 || color_part.size() > 9)
            throw ParseError("permutation: number too large at " + where);
        int value = std::stoi(value_part);
        int color = color_part.empty() ? 0 : std::stoi(color_part);
        if (color >= ell)
            throw ParseError("permutation: color " + std::to_string(color) + " at " + where +
                             " exceeds ell-1=" + std::to_string(ell - 1));
        letters.push_back({value, color});
    }
    try {
        return {ell, std::move(letters)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("permutation: ") + e.what());
    }
}

std::string to_string(const ColoredPermutation& sigma) {
    std::string out;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (i > 1) out += " ";
        out += to_string(sigma.letter(i));
    }
    return out;
}

std::string to_string(const std::vector<int>& set_or_word) {
    std::string out;
    for (std::size_t i = 0; i < set_or_word.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(set_or_word[i]);
    }
    return out;
}

}  // namespace qeuler
