#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octo {

struct SelftestRow {
  std::string id;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// Reproduces the worked examples (linear roots and their multiples, the
/// quadratic with companion x^4 + 3x^2 + 2, the ambivalent fixed point).
std::vector<SelftestRow> run_selftest();

/// Aligned id / expected / got / status table; returns true when all pass.
bool print_selftest(std::ostream& os, const std::vector<SelftestRow>& rows);

}  // namespace octo
