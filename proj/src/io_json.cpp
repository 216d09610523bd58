#include "qeuler/io_json.hpp"

namespace qeuler {

nlohmann::json poly_to_json(const QXPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        arr.push_back({m.q_exp, m.x_exp, c.str()});
    return arr;
}

QXPoly poly_from_json(const nlohmann::json& j) {
    QXPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw ParseError("polynomial json: expected [q_exp, x_exp, coeff]");
        p.add_term(term[0].get<int>(), term[1].get<int>(),
                   parse_int_decimal(term[2].get<std::string>()));
    }
    return p;
}

nlohmann::json table_to_json(const EulerTable& t) {
    nlohmann::json entries = nlohmann::json::object();
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 0; m <= n; ++m)
            entries["g[" + std::to_string(n) + "][" + std::to_string(m) + "]"] =
                poly_to_json(t.entry(n, m));
    return {{"l", t.ell}, {"n_max", t.n_max}, {"with_x", t.with_x}, {"entries", entries}};
}

nlohmann::json report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"pass", report.all_pass()}, {"checks", checks}};
}

}  // namespace qeuler
