#pragma once

#include <optional>
#include <string>
#include <vector>

#include "samelson/scalars.hpp"

namespace samelson {

/// Structured witness attached to a failed check: the offending basis
/// indices (1-based, matching the input file labels) and, when meaningful,
/// the nonzero residual vector in standard coordinates.
struct Certificate {
  std::vector<int> indices;
  std::vector<GRat> residual;
  std::string detail;
};

struct VerificationItem {
  std::string name;
  bool passed = false;
  std::optional<Certificate> certificate;

  static VerificationItem pass(std::string name) { return {std::move(name), true, std::nullopt}; }
  static VerificationItem fail(std::string name, Certificate cert) {
    return {std::move(name), false, std::move(cert)};
  }
};

struct VerificationReport {
  std::vector<VerificationItem> items;

  void add(VerificationItem item) { items.push_back(std::move(item)); }
  bool overall() const {
    for (const auto& it : items)
      if (!it.passed) return false;
    return true;
  }
};

}  // namespace samelson
