#include "report.hpp"

#include <sstream>

namespace alcovekit::cli {

std::string dec(const mpz_class& v) { return v.get_str(); }
std::string dec(const mpq_class& v) { return v.get_str(); }
std::string dec(long long v) { return std::to_string(v); }
std::string dec(unsigned long long v) { return std::to_string(v); }

Report::Report(std::string suite, std::string type) : suite_(std::move(suite)), type_(std::move(type)) {}

void Report::check(const std::string& claim, const std::string& anchor, bool pass, json witness) {
  checks_.push_back({{"claim", claim}, {"anchor", anchor}, {"status", pass ? "pass" : "fail"}, {"witness", witness}});
  if (!pass) failed_ = true;
}

void Report::skip(const std::string& claim, const std::string& anchor, const std::string& reason) {
  checks_.push_back(
      {{"claim", claim}, {"anchor", anchor}, {"status", "skipped"}, {"witness", {{"reason", reason}}}});
}

json Report::to_json() const {
  json out;
  out["suite"] = suite_;
  out["type"] = type_;
  out["parameters"] = parameters_;
  out["checks"] = checks_;
  if (!data_.empty()) out["data"] = data_;
  out["status"] = failed_ ? "fail" : "pass";
  return out;
}

std::string Report::canonical() const { return to_json().dump(2) + "\n"; }

std::string Report::summary() const {
  std::ostringstream os;
  os << "suite " << suite_;
  if (!type_.empty()) os << "  type " << type_;
  os << "  status " << (failed_ ? "FAIL" : "PASS") << "\n";
  for (const auto& c : checks_) {
    os << "  [" << c["status"].get<std::string>() << "] " << c["claim"].get<std::string>() << " ("
       << c["anchor"].get<std::string>() << ")";
    for (const auto& [k, v] : c["witness"].items()) {
      os << " " << k << "=";
      if (v.is_string())
        os << v.get<std::string>();
      else
        os << v.dump();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace alcovekit::cli
