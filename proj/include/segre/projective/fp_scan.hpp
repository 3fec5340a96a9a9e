#pragma once

#include <cstdint>
#include <vector>

#include "segre/exact/polynomial.hpp"

namespace segre::projective {

// Dense term list of a polynomial over F_p, the representation used by the enumerator.
struct FpForm {
  std::size_t nvars = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coeffs;
  std::vector<std::vector<std::uint8_t>> exponents;
};

FpForm compile_fp(const exact::Polynomial& f);

using FpPoint = std::vector<std::uint64_t>;

// All points of P^{n-1}(F_p) where every form vanishes, in canonical form (first nonzero
// coordinate 1), sorted lexicographically. Work is split across threads by stratum ranges;
// threads == 0 uses the hardware concurrency.
std::vector<FpPoint> common_projective_zeros(const std::vector<FpForm>& forms, unsigned threads = 0);

// Number of points of P^{n-1}(F_p).
std::uint64_t projective_point_count(std::size_t nvars, std::uint64_t p);

}  // namespace segre::projective
