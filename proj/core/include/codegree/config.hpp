#pragma once

#include <cstdint>
#include <string>

namespace codegree {

/// Library-wide knobs. Defaults cover the whole shipped corpus
/// (largest instance: PGammaL2(27) with 58968 elements).
struct Config {
  /// Conjugacy classes are found by full element enumeration; groups
  /// larger than this are rejected with CapError.
  uint64_t enumeration_cap = 300000;
  /// Character tables are refused beyond this many classes.
  uint32_t max_classes = 80;
  /// Upper bound for the Dixon prime search.
  uint64_t prime_bound = 100000000;
  /// Which valid Dixon prime to use (0 = smallest). The table is
  /// independent of the choice; exposed for determinism tests.
  uint32_t prime_index = 0;

  static const Config& defaults() {
    static Config c;
    return c;
  }
};

}  // namespace codegree
