#pragma once

#include <cstdint>
#include <cstdlib>

namespace cyclotome {

// Resource limits shared by the search and distance routines.  Defaults are
// sized so every stock pipeline finishes on a laptop; callers can widen or
// narrow them per run.
struct RunConfig {
  // Codes with at most this many codewords get exact minimum distances by
  // enumeration; larger codes fall back to the low-weight search.
  std::uint64_t enumeration_budget = 1ull << 24;
  // Highest codeword weight the low-weight search will certify before it
  // settles for bounds.
  int support_weight_max = 8;
  // Largest modulus accepted by the splitting search.
  long long n_cap = 255;
  // Largest finite field the pipelines will materialize.  Splitting fields
  // grow as q^ord_n(q), so this is the limit that actually binds.
  std::uint64_t field_cap = 1ull << 22;

  static RunConfig from_env() {
    RunConfig cfg;
    if (const char* s = std::getenv("CYCLOTOME_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) cfg.enumeration_budget = v;
    }
    return cfg;
  }
};

}  // namespace cyclotome
