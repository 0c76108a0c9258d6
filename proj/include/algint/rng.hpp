#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algint/scalar.hpp"

namespace algint {

// Seed used everywhere a deterministic pseudorandom choice is needed and the
// caller did not pick one (C-matrix search, equivalence sampling).
inline constexpr std::uint64_t kDefaultSeed = 271828;

// Deterministic small-integer stream on top of mt19937_64. The modulo
// mapping is slightly non-uniform; reproducibility across platforms is what
// matters here, not uniformity, and mt19937_64 output is specified by the
// standard bit for bit.
class SmallIntRng {
 public:
  explicit SmallIntRng(std::uint64_t seed) : gen_(seed) {}

  long next(long bound) {
    auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(gen_() % span) - bound;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Scalar with every power-basis coefficient drawn from [-bound, bound].
Scalar random_scalar(SmallIntRng& rng, const FieldDesc& f, long bound);
std::vector<Scalar> random_coeffs(SmallIntRng& rng, const FieldDesc& f, int n,
                                  long bound);

}  // namespace algint
