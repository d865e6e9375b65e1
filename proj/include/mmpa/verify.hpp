// Verification suites run by the command line tool.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmpa/alphabet.hpp"

namespace mmpa {

struct VerifyRow {
  bool pass = false;
  std::string label;
  std::string detail;
};

/// Compositions with positive parts of every total in [lo, hi], each total in
/// reverse lexicographic order.
std::vector<WeakComposition> compositions_up_to(int lo, int hi, int max_part = 1 << 20);
/// Profiles (a, b) with 1 <= |a|+|b| <= max.
std::vector<std::pair<WeakComposition, WeakComposition>> profiles_up_to(int max, int max_part = 1 << 20);
std::string profile_label(const WeakComposition& a, const WeakComposition& b);

std::vector<std::string> verify_suite_names();
/// Throws std::invalid_argument on an unknown suite.
std::vector<VerifyRow> verify_suite(const std::string& name, int max);

}  // namespace mmpa
