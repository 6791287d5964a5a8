#pragma once

// Canonical machine-readable report: sorted keys, decimal-string integers.

#include <string>

#include <gmpxx.h>

#include "json.hpp"

namespace alcovekit::cli {

using json = nlohmann::json;

std::string dec(const mpz_class& v);
std::string dec(const mpq_class& v);
std::string dec(long long v);
std::string dec(unsigned long long v);
inline std::string dec(int v) { return dec(static_cast<long long>(v)); }
inline std::string dec(long v) { return dec(static_cast<long long>(v)); }
inline std::string dec(unsigned long v) { return dec(static_cast<unsigned long long>(v)); }

template <class Range>
json dec_list(const Range& r) {
  json out = json::array();
  for (const auto& v : r) out.push_back(dec(v));
  return out;
}

class Report {
 public:
  Report(std::string suite, std::string type);

  json& parameters() { return parameters_; }
  json& data() { return data_; }

  void check(const std::string& claim, const std::string& anchor, bool pass, json witness = json::object());
  void skip(const std::string& claim, const std::string& anchor, const std::string& reason);
  bool failed() const { return failed_; }

  json to_json() const;
  // Pretty-printed JSON with a trailing newline; byte-identical for identical input.
  std::string canonical() const;
  // Human-readable table of the checks.
  std::string summary() const;

 private:
  std::string suite_;
  std::string type_;
  json parameters_ = json::object();
  json data_ = json::object();
  json checks_ = json::array();
  bool failed_ = false;
};

}  // namespace alcovekit::cli
