#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace colorsuper {

/// One failed identity, with enough context to reproduce it by hand.
struct Violation {
  std::string lhs;       // what was evaluated
  std::string rhs;       // what it should have equalled
  std::string residual;  // the nonzero difference (or the observed value)
};

/// Outcome of an exhaustive verification sweep. Auditors fill these rather
/// than throwing: the counterexamples are the product.
struct Report {
  std::string check;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string lhs, std::string rhs, std::string residual) {
    violations.push_back({std::move(lhs), std::move(rhs), std::move(residual)});
  }

  void merge(Report&& other) {
    checked += other.checked;
    for (auto& v : other.violations) violations.push_back(std::move(v));
  }
};

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"residual", v.residual}};
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{
      {"check", r.check}, {"checked_count", r.checked}, {"violations", r.violations}};
}

}  // namespace colorsuper
