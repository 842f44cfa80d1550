#include "jacobi/json_io.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

using nlohmann::json;

json trunc_json(GridExp t, long grid) {
  if (t >= kExact) return "inf";
  return Rational(t, grid).str();
}

GridExp trunc_from_json(const json& j, long grid) {
  const std::string s = j.get<std::string>();
  if (s == "inf") return kExact;
  const Rational t = Rational::parse(s) * Rational(grid);
  if (!t.is_integer()) throw GridError("truncation " + s + " is off the grid");
  return t.to_long();
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json to_json(const QExp& a) {
  json terms = json::array();
  for (const auto& [e, c] : a.terms()) terms.push_back(json::array({e, c.str()}));
  return {{"grid", QExp::kGrid}, {"trunc", trunc_json(a.trunc(), QExp::kGrid)}, {"terms", terms}};
}

json to_json(const PQSeries& a) {
  json cols = json::array();
  for (const auto& [p, c] : a.columns()) cols.push_back(json::array({p, to_json(c)}));
  return {{"pgrid", PQSeries::kPGrid},
          {"window", a.window() ? json(*a.window()) : json()},
          {"trunc", trunc_json(a.q_trunc(), QExp::kGrid)},
          {"shear", a.shear()},
          {"columns", cols}};
}

json to_json(const WLaurent& a) {
  json coeffs = json::array();
  for (const auto& [k, c] : a.terms()) coeffs.push_back(json::array({k, to_json(c)}));
  return {{"wmin", a.valuation() >= kExact ? json() : json(a.valuation())},
          {"wtrunc", a.wtrunc() >= kExact ? json("inf") : json(a.wtrunc())},
          {"qtrunc", trunc_json(a.qtrunc(), QExp::kGrid)},
          {"coeffs", coeffs}};
}

QExp qexp_from_json(const json& j) {
  return guarded("QExp", [&] {
    if (j.at("grid").get<long>() != QExp::kGrid) throw GridError("QExp JSON must use grid 24");
    std::vector<QExp::Term> terms;
    for (const json& t : j.at("terms")) terms.emplace_back(t.at(0).get<long>(), Rational::parse(t.at(1).get<std::string>()));
    return QExp::from_terms(std::move(terms), trunc_from_json(j.at("trunc"), QExp::kGrid));
  });
}

PQSeries pq_series_from_json(const json& j) {
  return guarded("PQSeries", [&] {
    if (j.at("pgrid").get<long>() != PQSeries::kPGrid) throw GridError("PQSeries JSON must use p-grid 2");
    std::map<long, QExp> cols;
    for (const json& c : j.at("columns")) cols.emplace(c.at(0).get<long>(), qexp_from_json(c.at(1)));
    std::optional<long> window;
    if (!j.at("window").is_null()) window = j.at("window").get<long>();
    const GridExp shear = j.contains("shear") ? j.at("shear").get<long>() : 0;
    return PQSeries::from_columns(std::move(cols), trunc_from_json(j.at("trunc"), QExp::kGrid), window, shear);
  });
}

WLaurent w_laurent_from_json(const json& j) {
  return guarded("WLaurent", [&] {
    std::map<long, QExp> coeffs;
    for (const json& c : j.at("coeffs")) coeffs.emplace(c.at(0).get<long>(), qexp_from_json(c.at(1)));
    const json& w = j.at("wtrunc");
    const long wtrunc = w.is_string() && w.get<std::string>() == "inf" ? kExact : w.get<long>();
    return WLaurent::from_terms(std::move(coeffs), wtrunc, trunc_from_json(j.at("qtrunc"), QExp::kGrid));
  });
}

}  // namespace jacobi
