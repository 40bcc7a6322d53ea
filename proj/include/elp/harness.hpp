#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "elp/analysis.hpp"
#include "elp/splitting.hpp"

// Random program generation and the differential property battery.

namespace elp {

struct GenConfig {
  int atom_count = 3;  // at most 5
  int rule_count_min = 1, rule_count_max = 4;
  int head_size_min = 1, head_size_max = 2;
  int body_size_min = 0, body_size_max = 2;
  double constraint_prob = 0.1;
  double subjective_prob = 0.5;        // body literal carries K
  std::array<double, 3> neg_weights = {5, 4, 1};  // 0/1/2 leading negations

  bool valid() const {
    return atom_count >= 1 && atom_count <= 5 &&
           rule_count_min >= 0 && rule_count_max >= rule_count_min &&
           head_size_min >= 0 && head_size_max >= head_size_min &&
           body_size_min >= 0 && body_size_max >= body_size_min;
  }
};

// Deterministic in (cfg, seed); atoms named a, b, c, ...
Program random_program(const GenConfig& cfg, std::uint64_t seed);

// As above but guaranteed epistemically stratified / tight: a random layer
// map is drawn first and rules are generated to respect it.
Program random_stratified_program(const GenConfig& cfg, std::uint64_t seed);
Program random_tight_program(const GenConfig& cfg, std::uint64_t seed);

struct PropertyParams {
  Semantics semantics = Semantics::Faeel;
  int u_mask = -1;  // splitting set; -1 = all splitting sets of the program
  int cap = kDefaultEpistemicCap;
};

// Single-program property check. Returns true when the property holds;
// on failure, *detail (if given) describes the violation.
bool check_property_once(const std::string& name, const Program& p,
                         const PropertyParams& params,
                         std::string* detail = nullptr);

const std::vector<std::string>& property_names();

struct PropertyFailure {
  std::uint64_t seed;
  std::string program;  // minimized reproduction
  std::string detail;
};

struct PropertyReport {
  std::string name;
  int trials = 0;
  std::vector<PropertyFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Runs `count` trials on random programs with seeds seed0, seed0+1, ...;
// failing programs are minimized by rule deletion, then literal deletion.
PropertyReport check_property(const std::string& name, const GenConfig& cfg,
                              std::uint64_t seed0, int count,
                              const PropertyParams& params = {});

std::string report_text(const PropertyReport& r);
std::string report_json(const PropertyReport& r);

}  // namespace elp
