#include "algint/rng.hpp"

namespace algint {

Scalar random_scalar(SmallIntRng& rng, const FieldDesc& f, long bound) {
  Scalar s = Scalar::zero(f);
  for (int d = 0; d < f.degree(); ++d) {
    long v = rng.next(bound);
    if (v == 0) continue;
    Scalar term = f.kind == FieldKind::rational
                      ? Scalar(f, v)
                      : Scalar(f, v) * Scalar::root_power(f, d);
    s += term;
  }
  return s;
}

std::vector<Scalar> random_coeffs(SmallIntRng& rng, const FieldDesc& f, int n,
                                  long bound) {
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(random_scalar(rng, f, bound));
  return out;
}

}  // namespace algint
