#include "qeuler/insertion.hpp"

#include <algorithm>
#include <optional>

namespace qeuler {

std::vector<Slot> slots(const ColoredPermutation& sigma) {
    std::vector<Slot> out;
    int fixed_before = 0;
    for (int i = 0; i <= sigma.size(); ++i) {
        if (i >= 1 && sigma.is_fixed_point(i)) {
            ++fixed_before;
            continue;
        }
        out.push_back({i - fixed_before, i});
    }
    return out;
}

ColoredPermutation insert_fixed(const ColoredPermutation& sigma, int slot_index) {
    std::vector<Slot> sl = slots(sigma);
    if (slot_index < 0 || slot_index >= static_cast<int>(sl.size()))
        throw std::invalid_argument("insert_fixed: no slot with index " +
                                    std::to_string(slot_index) + " (valid: 0.." +
                                    std::to_string(sl.size() - 1) + ")");
    const int pos = sl[static_cast<std::size_t>(slot_index)].position;

    std::vector<ColoredLetter> letters;
    letters.reserve(static_cast<std::size_t>(sigma.size()) + 1);
    auto shifted = [pos](ColoredLetter x) {
        if (x.value > pos) ++x.value;
        return x;
    };
    for (int i = 1; i <= pos; ++i) letters.push_back(shifted(sigma.letter(i)));
    letters.push_back({pos + 1, 0});
    for (int i = pos + 1; i <= sigma.size(); ++i) letters.push_back(shifted(sigma.letter(i)));
    return {sigma.ell(), std::move(letters)};
}

ColoredPermutation insert_seq(const InsertionSeq& s) {
    if (!fix_set(s.base).empty())
        throw std::invalid_argument("insert_seq: base has fixed points");
    const int d = s.base.size();
    ColoredPermutation tau = s.base;
    int prev = 0;
    for (int i : s.seq) {
        if (i < prev || i > d)
            throw std::invalid_argument("insert_seq: sequence not nondecreasing within [0," +
                                        std::to_string(d) + "]");
        prev = i;
        tau = insert_fixed(tau, i);
    }
    return tau;
}

InsertionSeq decompose(const ColoredPermutation& tau) {
    InsertionSeq s;
    s.base = der(tau);
    std::vector<int> fixed = fix_set(tau);
    s.seq.reserve(fixed.size());
    for (std::size_t k = 0; k < fixed.size(); ++k)
        s.seq.push_back(fixed[k] - static_cast<int>(k) - 1);
    return s;
}

std::vector<SlotInfo> slot_colors(const ColoredPermutation& sigma) {
    const int base_des = descent_stats(sigma).des;
    std::vector<SlotInfo> out;
    for (const Slot& sl : slots(sigma)) {
        const int new_des = descent_stats(insert_fixed(sigma, sl.index)).des;
        if (new_des != base_des && new_des != base_des + 1)
            throw std::logic_error("slot_colors: insertion changed the descent count by " +
                                   std::to_string(new_des - base_des));
        out.push_back({sl, new_des == base_des ? SlotColor::Green : SlotColor::Red});
    }
    return out;
}

std::vector<int> slot_values(const ColoredPermutation& sigma) {
    if (!fix_set(sigma).empty())
        throw std::invalid_argument("slot_values: input has fixed points");
    std::vector<SlotInfo> colored = slot_colors(sigma);
    const int n = sigma.size();
    std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (int j = n; j >= 0; --j)
        if (colored[static_cast<std::size_t>(j)].color == SlotColor::Green)
            values[static_cast<std::size_t>(j)] = next++;
    for (int j = 0; j <= n; ++j)
        if (colored[static_cast<std::size_t>(j)].color == SlotColor::Red)
            values[static_cast<std::size_t>(j)] = next++;
    return values;
}

namespace {

void check_canonical(const std::vector<int>& seq, int d, const char* what) {
    int prev = 0;
    for (int i : seq) {
        if (i < prev || i > d)
            throw std::logic_error(std::string(what) +
                                   ": produced sequence is not nondecreasing within range");
        prev = i;
    }
}

}  // namespace

ColoredPermutation psi(const ColoredPermutation& tau, PsiTrace* trace) {
    InsertionSeq s = decompose(tau);
    const ColoredPermutation& sigma = s.base;
    const int d = sigma.size();
    const int m = static_cast<int>(s.seq.size());

    std::vector<SlotInfo> colors = slot_colors(sigma);
    std::vector<int> values = slot_values(sigma);
    if (trace) {
        trace->base = sigma;
        trace->seq = s.seq;
        trace->colors = colors;
        trace->values = values;
        trace->steps.clear();
    }
    if (m == 0) return tau;

    // res[t] is the insertion sequence of the image of the length-t prefix.
    std::vector<std::vector<int>> res(static_cast<std::size_t>(m) + 1);
    std::vector<int> run(static_cast<std::size_t>(m) + 1, 0);
    for (int t = 1; t <= m; ++t) {
        const int i = s.seq[static_cast<std::size_t>(t - 1)];
        const int g = values[static_cast<std::size_t>(i)];
        std::vector<int>& out = res[static_cast<std::size_t>(t)];
        if (colors[static_cast<std::size_t>(i)].color == SlotColor::Green) {
            run[static_cast<std::size_t>(t)] = 1;
            out.push_back(g);
            const std::vector<int>& prev = res[static_cast<std::size_t>(t - 1)];
            out.insert(out.end(), prev.begin(), prev.end());
        } else {
            int k = 1;
            while (k < t && s.seq[static_cast<std::size_t>(t - 1 - k)] == i) ++k;
            run[static_cast<std::size_t>(t)] = k;
            if (k == t) {
                out.assign(static_cast<std::size_t>(t - 1), g - i);
                out.push_back(g);
            } else {
                out.assign(static_cast<std::size_t>(k - 1), g - i);
                for (int j : res[static_cast<std::size_t>(t - k)]) out.push_back(j + 1);
                out.push_back(g);
            }
        }
        check_canonical(out, d, "psi");
    }

    if (trace) {
        // Record only the prefixes the recursion actually visits.
        std::vector<int> path;
        int t = m;
        while (t >= 1) {
            path.push_back(t);
            const int i = s.seq[static_cast<std::size_t>(t - 1)];
            if (colors[static_cast<std::size_t>(i)].color == SlotColor::Green)
                t -= 1;
            else
                t -= run[static_cast<std::size_t>(t)];
        }
        std::reverse(path.begin(), path.end());
        for (int pt : path) {
            const int i = s.seq[static_cast<std::size_t>(pt - 1)];
            trace->steps.push_back({pt, i, colors[static_cast<std::size_t>(i)].color,
                                    run[static_cast<std::size_t>(pt)],
                                    res[static_cast<std::size_t>(pt)]});
        }
    }
    return insert_seq({sigma, res[static_cast<std::size_t>(m)]});
}

ColoredPermutation psi_inv(const ColoredPermutation& tau) {
    InsertionSeq s = decompose(tau);
    const int d = s.base.size();
    const int m = static_cast<int>(s.seq.size());
    if (m == 0) return tau;

    std::vector<int> seq;
    std::optional<ColoredPermutation> found;
    // All nondecreasing sequences of length m over [0, d].
    auto search = [&](auto&& self, int depth, int low) -> void {
        if (found) return;
        if (depth == m) {
            ColoredPermutation candidate = insert_seq({s.base, seq});
            if (psi(candidate) == tau) found = candidate;
            return;
        }
        for (int i = low; i <= d && !found; ++i) {
            seq.push_back(i);
            self(self, depth + 1, i);
            seq.pop_back();
        }
    };
    search(search, 0, 0);
    if (!found) throw std::logic_error("psi_inv: no preimage found in the class");
    return *found;
}

}  // namespace qeuler
