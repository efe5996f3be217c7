#pragma once

#include <tzhu/check.hpp>
#include <tzhu/linalg.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace tzhu::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json rational_json(const Rational& q);
Json rationals_json(const std::vector<Rational>& xs);
Json matrix_json(const Matrix& m);

// Collects check records for one report section.
class CheckLog {
 public:
  void add(const CheckReport& r, const std::string& scope = "");
  // A check that could not run at all.
  void skip(const std::string& name, const std::string& scope, const std::string& why);

  const Json& records() const { return records_; }
  std::size_t passed() const { return passed_; }
  std::size_t failed() const { return failed_; }
  std::size_t skipped() const { return skipped_; }

 private:
  Json records_ = Json::array();
  std::size_t passed_ = 0, failed_ = 0, skipped_ = 0;
};

// Descriptive anchor for a check name.
std::string anchor_for(const std::string& check_name);

}  // namespace tzhu::cli
