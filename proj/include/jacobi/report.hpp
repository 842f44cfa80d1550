#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacobi/pq_series.hpp"
#include "jacobi/qexp.hpp"
#include "jacobi/w_laurent.hpp"

namespace jacobi {

/// Where a check first failed. Identity checks fill n (q-order) and, for
/// two-variable expansions, r or w; errors raised during a check fill detail.
struct FailureLocation {
  std::optional<Rational> n;
  std::optional<Rational> r;
  std::optional<long> w;
  std::string detail;
  std::string str() const;
};

struct CheckResult {
  std::string check;
  bool passed = false;
  std::optional<FailureLocation> first_failure;
};

/// Ordered list of named check outcomes.
class Report {
 public:
  explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

  /// Runs `body`; an empty result passes, a location fails, and any
  /// exception fails with its message (and q-order when it carries one).
  void run(const std::string& check, const std::function<std::optional<FailureLocation>()>& body);

  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void merge(const Report& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& check) const;
  bool passed() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

std::optional<FailureLocation> compare(const QExp& a, const QExp& b);
std::optional<FailureLocation> compare(const PQSeries& a, const PQSeries& b);
std::optional<FailureLocation> compare(const WLaurent& a, const WLaurent& b);
std::optional<FailureLocation> fail_with(std::string detail);

}  // namespace jacobi
