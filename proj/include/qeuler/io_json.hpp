#pragma once

#include <json.hpp>

#include "qeuler/qpoly.hpp"
#include "qeuler/table.hpp"
#include "qeuler/verify.hpp"

namespace qeuler {

// Polynomial wire form: array of [q_exp, x_exp, coefficient-as-decimal-string]
// in the canonical (x asc, q asc) term order.
nlohmann::json poly_to_json(const QXPoly& p);
QXPoly poly_from_json(const nlohmann::json& j);

// {"l": ..., "n_max": ..., "with_x": ..., "entries": {"g[n][m]": <poly>}}
nlohmann::json table_to_json(const EulerTable& t);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace qeuler
