#pragma once
// Finite group presentations: generators g_0..g_{n-1} plus relator words.

#include <optional>
#include <vector>

#include "knotcov/words.hpp"

namespace knotcov {

struct PeripheralData {
  Word x0, y0;                 // words generating the peripheral subgroup image
  std::optional<long> a0, b0;  // longitude expression coefficients, when known
};

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;
  std::optional<PeripheralData> peripheral;

  void validate() const;  // throws on out-of-range generator indices
  size_t total_relator_length() const {
    size_t s = 0;
    for (auto& r : relators) s += r.size();
    return s;
  }
};

}  // namespace knotcov
