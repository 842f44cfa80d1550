#pragma once

#include <json.hpp>

#include "jacobi/pq_series.hpp"
#include "jacobi/qexp.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

/// {"grid": 24, "trunc": "T", "terms": [[e, "num/den"], ...]}; an exact
/// truncation is written as "inf".
nlohmann::json to_json(const QExp& a);
/// {"pgrid": 2, "window": P or null, "trunc": "T", "shear": s,
///  "columns": [[p, QExp], ...]}; P and p are numerators over 2.
nlohmann::json to_json(const PQSeries& a);
/// {"wmin": v, "wtrunc": W or "inf", "qtrunc": "T", "coeffs": [[k, QExp], ...]}.
nlohmann::json to_json(const WLaurent& a);

/// Inverses of to_json; GridError for a foreign grid, DomainError for any
/// other malformed input.
QExp qexp_from_json(const nlohmann::json& j);
PQSeries pq_series_from_json(const nlohmann::json& j);
WLaurent w_laurent_from_json(const nlohmann::json& j);

}  // namespace jacobi
