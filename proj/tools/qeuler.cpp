#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qeuler/insertion.hpp"
#include "qeuler/io_json.hpp"
#include "qeuler/shuffle.hpp"
#include "qeuler/table.hpp"
#include "qeuler/verify.hpp"

namespace {

using namespace qeuler;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

long long resolve_budget(long long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("QEULER_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            throw ParseError("QEULER_BUDGET is not a number: " + std::string(env));
        }
    }
    return kDefaultBudget;
}

std::string set_to_string(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

int run_stats(int ell, const std::string& input, bool as_json) {
    ColoredPermutation sigma = parse_permutation(input, ell);
    StatVector s = stat_vector(sigma);
    std::vector<int> fixed = fix_set(sigma);
    DescentStats d = descent_stats(sigma);
    ColoredPermutation dpart = der(sigma);
    if (as_json) {
        json out = {{"l", ell},
                    {"n", sigma.size()},
                    {"sigma", to_string(sigma)},
                    {"FIX", fixed},
                    {"DES", d.places},
                    {"der", to_string(dpart)},
                    {"fix", s.fix},
                    {"des", s.des},
                    {"maj", s.maj},
                    {"exc", s.exc},
                    {"col", s.col},
                    {"maf", s.maf},
                    {"fmaj", s.fmaj},
                    {"fmaf", s.fmaf}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "sigma: " << to_string(sigma) << "  (l=" << ell << ", n=" << sigma.size()
              << ")\n";
    std::cout << "FIX: " << set_to_string(fixed) << "\n";
    std::cout << "DES: " << set_to_string(d.places) << "\n";
    std::cout << "Der: " << to_string(dpart) << "\n";
    std::cout << "fix=" << s.fix << " des=" << s.des << " maj=" << s.maj << " exc=" << s.exc
              << " col=" << s.col << " maf=" << s.maf << " fmaj=" << s.fmaj
              << " fmaf=" << s.fmaf << "\n";
    return kExitOk;
}

void print_psi_trace(std::ostream& os, const PsiTrace& trace) {
    os << "der: " << (trace.base.size() ? to_string(trace.base) : "(empty)") << "\n";
    os << "seq: " << to_string(trace.seq) << "\n";
    for (std::size_t j = 0; j < trace.values.size(); ++j)
        os << "slot " << j << ": "
           << (trace.colors[j].color == SlotColor::Green ? "green" : "red") << " value "
           << trace.values[j] << "\n";
    for (const PsiStep& st : trace.steps) {
        os << "step t=" << st.prefix_len << ": i=" << st.slot << " ("
           << (st.color == SlotColor::Green ? "green" : "red");
        if (st.color == SlotColor::Red) os << ", run " << st.run;
        os << ") -> " << to_string(st.result_seq) << "\n";
    }
}

int run_psi(int ell, const std::string& input, bool trace_flag, bool as_json) {
    ColoredPermutation tau = parse_permutation(input, ell);
    PsiTrace trace;
    ColoredPermutation image = psi(tau, &trace);
    if (as_json) {
        json out = {{"l", ell},
                    {"input", to_string(tau)},
                    {"result", to_string(image)},
                    {"fmaj_input", stat_vector(tau).fmaj},
                    {"fmaf_result", stat_vector(image).fmaf}};
        if (trace_flag) {
            json steps = json::array();
            for (const PsiStep& st : trace.steps)
                steps.push_back({{"t", st.prefix_len},
                                 {"i", st.slot},
                                 {"color", st.color == SlotColor::Green ? "green" : "red"},
                                 {"seq", st.result_seq}});
            out["trace"] = {{"der", to_string(trace.base)},
                            {"seq", trace.seq},
                            {"values", trace.values},
                            {"steps", steps}};
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (trace_flag) print_psi_trace(std::cout, trace);
    std::cout << to_string(image) << "\n";
    return kExitOk;
}

json move_steps_json(const std::vector<MoveStep>& steps, const char* name) {
    json arr = json::array();
    for (const MoveStep& st : steps) {
        json rec = {{"map", std::string(name) + "_" + std::to_string(st.l)},
                    {"case", st.case_id},
                    {"word", word_to_string(st.result)}};
        if (st.case_id >= 2) rec["k"] = st.k;
        arr.push_back(rec);
    }
    return arr;
}

void print_move_steps(const std::vector<MoveStep>& steps, const char* name, bool primes) {
    for (const MoveStep& st : steps) {
        std::cout << name << "_" << st.l << ": case (" << st.case_id << (primes ? "'" : "")
                  << ")";
        if (st.case_id >= 2) std::cout << " k=" << st.k;
        std::cout << " -> " << word_to_string(st.result) << "\n";
    }
}

void print_f_lines(const std::vector<FRecursionLine>& lines) {
    for (const FRecursionLine& line : lines) {
        std::cout << "F(" << word_to_string(line.input, true)
                  << ") = " << word_to_string(line.result, true);
        if (line.case_id == 0)
            std::cout << "  [no descent]";
        else
            std::cout << "  [case " << line.case_id << "]";
        std::cout << "\n";
    }
}

int run_fh(const std::string& action, const std::string& input, bool trace_flag, bool as_json) {
    const bool compact_in = input.find(' ') == std::string::npos;
    auto render = [&](const ZWord& w) { return word_to_string(w, compact_in); };

    if (action == "factorize") {
        ZWord perm_word = parse_word(input);
        std::vector<int> perm(perm_word.begin(), perm_word.end());
        ZWord w = zder(perm);
        std::vector<MoveStep> psi_steps;
        ZWord shuffled = phi_inv(w, &psi_steps);
        std::vector<FRecursionLine> lines;
        ZWord transformed = f_transform(shuffled, &lines);
        std::vector<int> result = zder_inv(transformed);
        std::vector<int> direct = psi(ColoredPermutation::from_values(1, perm)).values();
        const bool agree = result == direct;
        if (as_json) {
            json out = {{"action", action},
                        {"input", to_string(perm)},
                        {"zder", word_to_string(w)},
                        {"after_phi_inv", word_to_string(shuffled)},
                        {"after_f", word_to_string(transformed)},
                        {"result", to_string(result)},
                        {"agreement", agree}};
            if (trace_flag) {
                out["psi_steps"] = move_steps_json(psi_steps, "psi");
                json frec = json::array();
                for (const FRecursionLine& line : lines)
                    frec.push_back({{"input", word_to_string(line.input)},
                                    {"case", line.case_id},
                                    {"result", word_to_string(line.result)}});
                out["f_steps"] = frec;
            }
            std::cout << out.dump(2) << "\n";
        } else {
            if (trace_flag) {
                std::cout << "zder: " << word_to_string(w) << "\n";
                print_move_steps(psi_steps, "psi", true);
                print_f_lines(lines);
                std::cout << "zder_inv: " << to_string(result) << "\n";
            }
            std::cout << to_string(result) << "\n";
            std::cout << "agreement=" << (agree ? "true" : "false") << "\n";
        }
        return agree ? kExitOk : kExitCounterexample;
    }

    ZWord w = parse_word(input);
    ZWord result;
    std::vector<MoveStep> steps;
    std::vector<FRecursionLine> lines;
    if (action == "phi-inv")
        result = phi_inv(w, &steps);
    else if (action == "phi")
        result = phi(w, &steps);
    else if (action == "f")
        result = f_transform(w, &lines);
    else
        throw CLI::ValidationError("action must be one of phi-inv, phi, f, factorize");

    if (as_json) {
        json out = {{"action", action},
                    {"input", word_to_string(w)},
                    {"result", word_to_string(result)}};
        if (trace_flag) {
            if (action == "f") {
                json frec = json::array();
                for (const FRecursionLine& line : lines)
                    frec.push_back({{"input", word_to_string(line.input)},
                                    {"case", line.case_id},
                                    {"result", word_to_string(line.result)}});
                out["steps"] = frec;
            } else {
                out["steps"] = move_steps_json(steps, action == "phi" ? "phi" : "psi");
            }
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (trace_flag) {
        if (action == "f")
            print_f_lines(lines);
        else
            print_move_steps(steps, action == "phi" ? "phi" : "psi", action != "phi");
    }
    std::cout << render(result) << "\n";
    return kExitOk;
}

int run_table(int ell, int n_max, int m, bool with_x, bool as_json) {
    EulerTable t = euler_table(ell, n_max, with_x);
    if (m >= 0) {
        if (m > n_max)
            throw std::invalid_argument("table: --m must be at most --n");
        const QXPoly& entry = t.entry(n_max, m);
        if (as_json) {
            nlohmann::json out = {{"l", ell},   {"n", n_max},          {"m", m},
                                  {"with_x", with_x}, {"entry", poly_to_json(entry)},
                                  {"text", entry.to_string()}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << entry.to_string() << "\n";
        }
        return kExitOk;
    }
    if (as_json) {
        std::cout << table_to_json(t).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << table_to_text(t);
    return kExitOk;
}

int run_verify(const std::string& target, const VerifyOptions& opts, bool as_json) {
    VerifyReport report = run_verify_target(target, opts);
    if (as_json) {
        json out = report_to_json(report);
        out["target"] = target;
        std::cout << out.dump(2) << "\n";
    } else {
        int passed = 0;
        for (const CheckResult& c : report.checks) {
            std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
            if (c.pass) ++passed;
        }
        std::cout << "summary: " << passed << "/" << report.checks.size() << " checks passed\n";
    }
    return report.all_pass() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact statistics, bijections and difference tables for colored permutations"};
    app.require_subcommand(1);

    int ell = 1;
    int n_max = 3;
    long long budget_flag = 0;
    bool as_json = false;
    bool trace_flag = false;
    bool with_x = false;
    std::string input, action, target;

    CLI::App* stats = app.add_subcommand("stats", "statistics of one colored permutation");
    stats->add_option("--l", ell, "number of colors")->check(CLI::PositiveNumber);
    stats->add_option("input", input, "permutation, tokens v or v:c")->required();
    stats->add_flag("--json", as_json, "JSON output");

    CLI::App* psi_cmd = app.add_subcommand("psi", "apply the insertion bijection");
    psi_cmd->add_option("--l", ell, "number of colors")->check(CLI::PositiveNumber);
    psi_cmd->add_option("input", input, "permutation, tokens v or v:c")->required();
    psi_cmd->add_flag("--trace", trace_flag, "print the recursion steps");
    psi_cmd->add_flag("--json", as_json, "JSON output");

    CLI::App* fh = app.add_subcommand("fh", "word transforms and the factorization");
    fh->add_option("action", action, "phi-inv | phi | f | factorize")
        ->required()
        ->check(CLI::IsMember({"phi-inv", "phi", "f", "factorize"}));
    fh->add_option("input", input, "word (spaced or compact digits) or permutation")->required();
    fh->add_flag("--trace", trace_flag, "print per-step details");
    fh->add_flag("--json", as_json, "JSON output");

    CLI::App* table = app.add_subcommand("table", "print the difference table triangle");
    int entry_m = -1;
    table->add_option("--l", ell, "number of colors")->check(CLI::PositiveNumber);
    table->add_option("--n", n_max, "largest row")->check(CLI::NonNegativeNumber);
    table->add_option("--m", entry_m, "print only the entry g[n][m]")
        ->check(CLI::NonNegativeNumber);
    table->add_flag("--x,!--no-x", with_x, "keep the fix-tracking variable");
    table->add_flag("--json", as_json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "run the verification harness");
    verify->add_option("target", target, "thm1|thm2|thm3|haglund|lemma-clark|lemma-F|recurrence-d|fix-sum|witness|all")
        ->required()
        ->check(CLI::IsMember(verify_target_names()));
    int verify_l = 0;
    int verify_n = -1;
    verify->add_option("--l", verify_l, "restrict to one color count")->check(CLI::PositiveNumber);
    verify->add_option("--n", verify_n, "largest order")->check(CLI::NonNegativeNumber);
    verify->add_option("--budget", budget_flag, "enumeration budget")->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or the requested help text
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (stats->parsed()) return run_stats(ell, input, as_json);
        if (psi_cmd->parsed()) return run_psi(ell, input, trace_flag, as_json);
        if (fh->parsed()) return run_fh(action, input, trace_flag, as_json);
        if (table->parsed()) return run_table(ell, n_max, entry_m, with_x, as_json);
        if (verify->parsed()) {
            VerifyOptions opts;
            if (verify_l > 0) {
                opts.l_min = verify_l;
                opts.l_max = verify_l;
            }
            opts.n_max = verify_n;
            opts.budget = resolve_budget(budget_flag);
            return run_verify(target, opts, as_json);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
