#include "qeuler/shuffle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qeuler {

int pil(const ZWord& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x > 0; }));
}

int zero_count(const ZWord& w) {
    return static_cast<int>(std::count(w.begin(), w.end(), 0));
}

std::vector<int> pos_word(const ZWord& w) {
    std::vector<int> out;
    for (int x : w)
        if (x > 0) out.push_back(x);
    return out;
}

std::vector<int> zero_positions(const ZWord& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

bool is_shuffle_of(const ZWord& w, const std::vector<int>& v) {
    for (int x : w)
        if (x < 0) return false;
    return pos_word(w) == v;
}

namespace {

// rank[t] = number of pillars at positions <= t (1-based); meaningful on pillars.
std::vector<int> rank_table(const ZWord& w) {
    std::vector<int> rank(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        rank[i + 1] = rank[i] + (w[i] > 0 ? 1 : 0);
    return rank;
}

int word_des(const ZWord& w) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++d;
    return d;
}

struct LetterView {
    const ZWord& w;
    std::vector<int> rank;

    explicit LetterView(const ZWord& word) : w(word), rank(rank_table(word)) {}

    int n() const { return static_cast<int>(w.size()); }
    bool pillar(int t) const { return t >= 1 && t <= n() && w[static_cast<std::size_t>(t - 1)] > 0; }
    int val(int t) const { return w[static_cast<std::size_t>(t - 1)]; }
    // Boundary positions 0 and n+1 count as +infinity, hence non-subexcedent.
    bool subexc(int t) const {
        return pillar(t) && val(t) < rank[static_cast<std::size_t>(t)];
    }
};

ZWord move_zero(const ZWord& w, int from, int to) {
    // Removes the zero at 1-based position `from` and reinserts it so that it
    // lands at 1-based position `to` of the result.
    ZWord out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (static_cast<int>(i) + 1 != from) out.push_back(w[i]);
    out.insert(out.begin() + (to - 1), 0);
    return out;
}

}  // namespace

LetterKind classify_letter(const ZWord& w, int k) {
    if (k < 1 || k > static_cast<int>(w.size()))
        throw std::invalid_argument("classify_letter: position out of range");
    LetterView v(w);
    if (!v.pillar(k)) return LetterKind::Zero;
    return v.subexc(k) ? LetterKind::Subexcedent : LetterKind::Excedent;
}

ZWord phi_l(const ZWord& w, int l, MoveStep* step) {
    if (l < 1) throw std::invalid_argument("phi_l: l must be positive");
    if (step) *step = MoveStep{l, 0, 0, 0, w};
    std::vector<int> zeros = zero_positions(w);
    if (l > static_cast<int>(zeros.size())) return w;

    LetterView v(w);
    const int j = zeros[static_cast<std::size_t>(l - 1)];
    const bool lsub = v.subexc(j - 1);
    const bool rsub = v.subexc(j + 1);
    if (step) step->zero_position = j;

    if (!lsub && !rsub) {
        if (step) step->case_id = 1;
        return w;
    }
    if ((!lsub && rsub) || (lsub && rsub && v.val(j - 1) > v.val(j + 1))) {
        // zero slides right past the maximal increasing run of subexcedent pillars
        int k = j + 1;
        while (k + 1 <= v.n() && v.subexc(k + 1) && v.val(k + 1) > v.val(k)) ++k;
        ZWord out = move_zero(w, j, k);
        if (step) *step = MoveStep{l, j, 2, k, out};
        return out;
    }
    // zero slides left past the maximal decreasing run of subexcedent pillars
    int i = j - 1;
    while (i - 1 >= 1 && v.subexc(i - 1) && v.val(i - 1) > v.val(i)) --i;
    ZWord out = move_zero(w, j, i);
    if (step) *step = MoveStep{l, j, 3, i, out};
    return out;
}

ZWord psi_l(const ZWord& w, int l, MoveStep* step) {
    if (l < 1) throw std::invalid_argument("psi_l: l must be positive");
    if (step) *step = MoveStep{l, 0, 0, 0, w};
    std::vector<int> zeros = zero_positions(w);
    if (l > static_cast<int>(zeros.size())) return w;

    LetterView v(w);
    const int j = zeros[static_cast<std::size_t>(l - 1)];
    const bool lsub = v.subexc(j - 1);
    const bool rsub = v.subexc(j + 1);
    if (step) step->zero_position = j;

    if (!lsub && !rsub) {
        if (step) step->case_id = 1;
        return w;
    }
    if ((lsub && !rsub) || (lsub && rsub && v.val(j - 1) > v.val(j + 1))) {
        // zero slides left past the maximal increasing run of subexcedent pillars
        int k = j - 1;
        while (k - 1 >= 1 && v.subexc(k - 1) && v.val(k - 1) < v.val(k)) --k;
        ZWord out = move_zero(w, j, k);
        if (step) *step = MoveStep{l, j, 2, k, out};
        return out;
    }
    // zero slides right past the maximal decreasing run of subexcedent pillars
    int k = j + 1;
    while (k + 1 <= v.n() && v.subexc(k + 1) && v.val(k + 1) < v.val(k)) ++k;
    ZWord out = move_zero(w, j, k);
    if (step) *step = MoveStep{l, j, 3, k, out};
    return out;
}

namespace {

void require_derangement_pillars(const ZWord& w, const char* who) {
    std::vector<int> v = pos_word(w);
    const int m = static_cast<int>(v.size());
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int i = 0; i < m; ++i) {
        if (v[static_cast<std::size_t>(i)] < 1 || v[static_cast<std::size_t>(i)] > m ||
            seen[static_cast<std::size_t>(v[static_cast<std::size_t>(i)])])
            throw std::invalid_argument(std::string(who) +
                                        ": pillar word is not a permutation word");
        seen[static_cast<std::size_t>(v[static_cast<std::size_t>(i)])] = true;
        if (v[static_cast<std::size_t>(i)] == i + 1)
            throw std::invalid_argument(std::string(who) +
                                        ": pillar word has a fixed point under rank");
    }
}

}  // namespace

ZWord phi(const ZWord& w, std::vector<MoveStep>* steps) {
    require_derangement_pillars(w, "phi");
    ZWord cur = w;
    const int nz = zero_count(w);
    for (int l = static_cast<int>(w.size()); l >= 1; --l) {
        if (l > nz) continue;
        MoveStep step;
        cur = phi_l(cur, l, &step);
        if (steps) steps->push_back(step);
    }
    return cur;
}

ZWord phi_inv(const ZWord& w, std::vector<MoveStep>* steps) {
    require_derangement_pillars(w, "phi_inv");
    ZWord cur = w;
    const int nz = zero_count(w);
    for (int l = 1; l <= static_cast<int>(w.size()); ++l) {
        if (l > nz) continue;
        MoveStep step;
        cur = psi_l(cur, l, &step);
        if (steps) steps->push_back(step);
    }
    return cur;
}

ZWord gamma_rotate(const ZWord& w) {
    if (w.empty() || w.back() != 0)
        throw std::invalid_argument("gamma_rotate: word does not end with 0");
    ZWord out;
    out.reserve(w.size());
    out.push_back(0);
    out.insert(out.end(), w.begin(), w.end() - 1);
    return out;
}

ZWord delta_rotate(const ZWord& w) {
    ZWord out;
    out.reserve(w.size());
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t zstart = i;
        while (i < w.size() && w[i] == 0) ++i;
        const std::size_t zlen = i - zstart;
        if (i == w.size()) {
            if (zlen > 0)
                throw std::invalid_argument("delta_rotate: trailing zero run has no pillar");
            break;
        }
        std::size_t pstart = i;
        while (i < w.size() && w[i] != 0) ++i;
        out.push_back(w[pstart]);
        out.insert(out.end(), zlen, 0);
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pstart) + 1,
                   w.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return out;
}

ZWord f_transform(const ZWord& w, std::vector<FRecursionLine>* lines) {
    if (w.size() <= 1 || word_des(w) == 0) {
        if (lines) lines->push_back({w, 0, w});
        return w;
    }
    const int b = w.back();
    ZWord rest(w.begin(), w.end() - 1);
    int apos = -1;
    for (int i = static_cast<int>(rest.size()) - 1; i >= 0; --i) {
        if (rest[static_cast<std::size_t>(i)] > 0) {
            apos = i;
            break;
        }
    }
    if (apos < 0) throw std::logic_error("f_transform: descent without a pillar");
    const int a = rest[static_cast<std::size_t>(apos)];
    const int r = static_cast<int>(rest.size()) - 1 - apos;

    ZWord sub = f_transform(rest, lines);
    ZWord out;
    int case_id;
    if (a <= b) {
        case_id = 1;
        out = sub;
    } else if (r >= 1) {
        case_id = 2;
        if (sub.back() != 0) throw std::logic_error("f_transform: expected trailing zero");
        out = gamma_rotate(sub);
    } else {
        case_id = 3;
        out = delta_rotate(sub);
    }
    out.push_back(b);
    if (lines) lines->push_back({w, case_id, out});
    return out;
}

ZWord zder(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : perm) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("zder: input is not a permutation of [n]");
        seen[static_cast<std::size_t>(x)] = true;
    }
    std::vector<int> moved;
    for (int i = 1; i <= n; ++i)
        if (perm[static_cast<std::size_t>(i - 1)] != i)
            moved.push_back(perm[static_cast<std::size_t>(i - 1)]);
    std::vector<int> sorted_moved = moved;
    std::sort(sorted_moved.begin(), sorted_moved.end());

    ZWord out(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int x = perm[static_cast<std::size_t>(i - 1)];
        if (x == i) continue;
        auto it = std::lower_bound(sorted_moved.begin(), sorted_moved.end(), x);
        out[static_cast<std::size_t>(i - 1)] = static_cast<int>(it - sorted_moved.begin()) + 1;
    }
    return out;
}

std::vector<int> zder_inv(const ZWord& w) {
    require_derangement_pillars(w, "zder_inv");
    const int n = static_cast<int>(w.size());
    // Non-zero positions serve both as the positions and (sorted) as the
    // values of the non-fixed letters.
    std::vector<int> pillar_pos;
    for (int i = 1; i <= n; ++i)
        if (w[static_cast<std::size_t>(i - 1)] != 0) pillar_pos.push_back(i);

    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int x = w[static_cast<std::size_t>(i - 1)];
        out[static_cast<std::size_t>(i - 1)] =
            x == 0 ? i : pillar_pos[static_cast<std::size_t>(x - 1)];
    }
    return out;
}

std::vector<int> psi_via_factorization(const std::vector<int>& perm) {
    return zder_inv(f_transform(phi_inv(zder(perm))));
}

IndexForm index_form(const ZWord& w) {
    IndexForm f;
    f.base = pos_word(w);
    int pillars_seen = 0;
    for (int x : w) {
        if (x == 0)
            f.indices.push_back(pillars_seen);
        else
            ++pillars_seen;
    }
    return f;
}

ZWord from_index_form(const IndexForm& f) {
    const int m = static_cast<int>(f.indices.size());
    const int d = static_cast<int>(f.base.size());
    int prev = 0;
    for (int i : f.indices) {
        if (i < prev || i > d)
            throw std::invalid_argument("from_index_form: indices not nondecreasing in [0,d]");
        prev = i;
    }
    ZWord out(static_cast<std::size_t>(m + d), 0);
    std::vector<bool> is_zero(static_cast<std::size_t>(m + d) + 1, false);
    for (int k = 1; k <= m; ++k)
        is_zero[static_cast<std::size_t>(f.indices[static_cast<std::size_t>(k - 1)] + k)] = true;
    int next_pillar = 0;
    for (int pos = 1; pos <= m + d; ++pos)
        if (!is_zero[static_cast<std::size_t>(pos)])
            out[static_cast<std::size_t>(pos - 1)] = f.base[static_cast<std::size_t>(next_pillar++)];
    return out;
}

bool lemma_F_check(const ZWord& w1, int r, const ZWord& w2, std::string* detail) {
    if (w1.empty() || w2.empty())
        throw std::invalid_argument("lemma_F_check: words must be nonempty");
    if (r < 0) throw std::invalid_argument("lemma_F_check: r must be nonnegative");
    if (w1.back() <= 0)
        throw std::invalid_argument("lemma_F_check: last letter of w1 must be a pillar");
    if (zero_count(w2) != 0)
        throw std::invalid_argument("lemma_F_check: w2 must be zero-free");
    const int a = w1.back();
    const int b = w2.front();
    if (a == b)
        throw std::invalid_argument("lemma_F_check: boundary letters must differ");

    ZWord mu = w1;
    mu.insert(mu.end(), static_cast<std::size_t>(r), 0);
    mu.insert(mu.end(), w2.begin(), w2.end());

    std::vector<int> actual = index_form(f_transform(mu)).indices;

    const int t = word_des(w2);
    const int nu = pil(w1);
    std::vector<int> predicted;
    if (zero_count(w1) != 0) {
        std::vector<int> iw1 = index_form(f_transform(w1)).indices;
        if (a > b) {
            predicted.assign(static_cast<std::size_t>(r), t);
            for (int i : iw1) predicted.push_back(i + t + 1);
        } else if (r == 0) {
            for (int i : iw1) predicted.push_back(i + t);
        } else {
            predicted.assign(static_cast<std::size_t>(r - 1), t);
            for (int i : iw1) predicted.push_back(i + t + 1);
            predicted.push_back(nu + t);
        }
    } else {
        if (r == 0) {
            // no zeros anywhere: empty index sequence
        } else if (a > b) {
            predicted.assign(static_cast<std::size_t>(r), t);
        } else {
            predicted.assign(static_cast<std::size_t>(r - 1), t);
            predicted.push_back(nu + t);
        }
    }
    const bool pass = predicted == actual;
    if (detail) {
        *detail = "mu=" + word_to_string(mu) + " predicted=(" + word_to_string(predicted) +
                  ") actual=(" + word_to_string(actual) + ")";
    }
    return pass;
}

ZWord parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("word: empty input");

    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
    };
    ZWord out;
    if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
        for (char c : tokens[0]) out.push_back(c - '0');
        return out;
    }
    for (const std::string& t : tokens) {
        if (!all_digits(t)) throw ParseError("word: bad letter '" + t + "'");
        if (t.size() > 9) throw ParseError("word: letter too large '" + t + "'");
        out.push_back(std::stoi(t));
    }
    return out;
}

std::string word_to_string(const ZWord& w, bool compact) {
    if (compact && std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; })) {
        std::string out;
        for (int x : w) out += static_cast<char>('0' + x);
        return out;
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace qeuler
