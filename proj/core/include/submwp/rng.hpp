#pragma once

#include <cstdint>
#include <string_view>

namespace submwp {

/// Counter-based 64-bit generator (splitmix64). Chosen over std::mt19937
/// because identical seeds must reproduce identical draws on every platform,
/// and because per-trial streams are derived by key mixing rather than
/// sequential splitting, which keeps Monte Carlo estimates worker-count
/// invariant.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double next_unit();

  /// Exp(1) via inverse CDF on u in (0, 1]; strictly positive.
  double next_exp();

  /// Uniform integer in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Deterministic stream derivation: mixes a root seed with up to two labels
/// (e.g. trial index, component tag). Distinct inputs give independent-looking
/// streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// FNV-1a, used for content digests and label hashing.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace submwp
