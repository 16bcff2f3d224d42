#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyglue/version.hpp"

namespace polyglue {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when passing
};

/// Result of one verification suite run; serializes to JSON.  Identical
/// configurations produce identical reports apart from wall_ms.
struct Report {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CaseResult> cases;
  double wall_ms = 0.0;

  void add_case(std::string name, bool pass, std::string counterexample = "") {
    cases.push_back(CaseResult{std::move(name), pass, std::move(counterexample)});
  }

  bool pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["version"] = kVersion;
    j["parameters"] = parameters;
    j["pass"] = pass();
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) {
      nlohmann::json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
      j["cases"].push_back(cj);
    }
    j["wall_ms"] = wall_ms;
    return j;
  }

  void print_text(std::ostream& os) const {
    os << "suite: " << suite << "\n";
    for (const auto& c : cases) {
      os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << "\n";
      if (!c.counterexample.empty()) os << "         " << c.counterexample << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << " (" << cases.size() << " cases, "
       << wall_ms << " ms)\n";
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace polyglue
