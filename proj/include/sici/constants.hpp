#ifndef SICI_CONSTANTS_HPP
#define SICI_CONSTANTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sici/approx.hpp"

namespace sici {

// One table entry: a literal, the number of trusted decimal digits, and an
// independent recipe that recomputes the value from scratch.
struct ConstantEntry {
  std::string name;
  double value;
  int digits;
  Approx (*recompute)();
};

// Named literals, err = 10^(-digits).  Throws std::out_of_range for an
// unknown name.
Approx constant(std::string_view name);

// Raw literal access for places that want the plain double.
double constant_value(std::string_view name);

const std::vector<ConstantEntry>& constant_table();

struct ConstantCheck {
  std::string name;
  bool pass;
  double discrepancy;  // |recompute - literal|
};

// Re-derives every entry with its recipe and checks it against the literal;
// also checks the zeta'(-1) <-> zeta'(2) functional-equation relation on the
// literals themselves.
std::vector<ConstantCheck> verify_constants();

}  // namespace sici

#endif
