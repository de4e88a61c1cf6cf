#pragma once
#include <optional>

#include "core/mpoly.hpp"

namespace spectral {

// Brown-style modular gcd for integer-primitive multivariate inputs:
// per-prime evaluation/interpolation images, CRT across primes, certified
// by exact trial division, so a returned value is exactly the gcd.
// nullopt means the prime budget ran out; callers fall back to the
// subresultant remainder sequence.
std::optional<MPoly> modular_multivariate_gcd(const MPoly& a, const MPoly& b);

}  // namespace spectral
