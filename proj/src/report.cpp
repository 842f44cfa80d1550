#include "jacobi/report.hpp"

#include <sstream>

#include "jacobi/errors.hpp"

namespace jacobi {

std::string FailureLocation::str() const {
  std::ostringstream os;
  if (n) {
    os << "(n=" << n->str();
    if (r) os << ", r=" << r->str();
    if (w) os << ", w^" << *w;
    os << ")";
  }
  if (!detail.empty()) os << (n ? " " : "") << detail;
  return os.str();
}

void Report::run(const std::string& check, const std::function<std::optional<FailureLocation>()>& body) {
  CheckResult result{check, false, std::nullopt};
  try {
    result.first_failure = body();
    result.passed = !result.first_failure.has_value();
  } catch (const InconsistentSystem& e) {
    FailureLocation loc;
    if (e.q_order()) loc.n = Rational(*e.q_order());
    loc.detail = e.what();
    result.first_failure = loc;
  } catch (const std::exception& e) {
    result.first_failure = FailureLocation{std::nullopt, std::nullopt, std::nullopt, e.what()};
  }
  checks_.push_back(std::move(result));
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const CheckResult* Report::find(const std::string& check) const {
  for (const CheckResult& c : checks_)
    if (c.check == check) return &c;
  return nullptr;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks_) n += c.passed ? 0 : 1;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : checks_) {
    checks.push_back({{"check", c.check},
                      {"status", c.passed ? "pass" : "fail"},
                      {"first_failure", c.first_failure ? nlohmann::json(c.first_failure->str()) : nlohmann::json()}});
  }
  return {{"suite", suite_}, {"passed", passed()}, {"checks", checks}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks_) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.check;
    if (c.first_failure) os << "  first failure " << c.first_failure->str();
    os << "\n";
  }
  os << (suite_.empty() ? "all" : suite_) << ": " << checks_.size() - failures() << "/" << checks_.size()
     << " checks passed\n";
  return os.str();
}

std::optional<FailureLocation> compare(const QExp& a, const QExp& b) {
  if (auto d = first_difference(a, b)) return FailureLocation{Rational(*d, QExp::kGrid), std::nullopt, std::nullopt, {}};
  return std::nullopt;
}

std::optional<FailureLocation> compare(const PQSeries& a, const PQSeries& b) {
  if (auto d = first_difference(a, b)) return FailureLocation{d->n, d->r, std::nullopt, {}};
  return std::nullopt;
}

std::optional<FailureLocation> compare(const WLaurent& a, const WLaurent& b) {
  if (auto d = first_difference(a, b)) return FailureLocation{d->n, std::nullopt, d->w, {}};
  return std::nullopt;
}

std::optional<FailureLocation> fail_with(std::string detail) {
  return FailureLocation{std::nullopt, std::nullopt, std::nullopt, std::move(detail)};
}

}  // namespace jacobi
