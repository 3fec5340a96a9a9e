#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "segre/exact/polynomial.hpp"

namespace segre::sections {

using exact::Polynomial;
using exact::Scalar;

// Aronhold invariants of a ternary cubic, contracted symbolically as
// S = (abc)(abd)(acd)(bcd) and T = (abc)(abd)(ace)(bcf)(def)^2 over the symmetric coefficient tensor.
struct AronholdInvariants {
  mpq_class S, T;
};
AronholdInvariants aronhold_invariants(const Polynomial& ternary_cubic);
// Zero exactly for singular cubics; normalised so the nodal cubic y^2 z - x^3 - x^2 z vanishes.
mpq_class aronhold_discriminant(const AronholdInvariants& inv);
// j = 1728 S^3 / (S^3 - 6 T^2); throws for singular cubics.
mpq_class plane_cubic_j(const Polynomial& ternary_cubic);

// Invariants of a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4.
struct BinaryQuarticInvariants {
  mpq_class I, J;
};
BinaryQuarticInvariants binary_quartic_invariants(const Polynomial& binary_quartic);
// j = 6912 I^3 / (4 I^3 - J^2); throws when two roots coincide.
mpq_class binary_quartic_j(const Polynomial& binary_quartic);
// j of the double cover of P^1 branched at 0, 1, infinity, lambda.
mpq_class cross_ratio_j(const mpq_class& lambda);

// True iff the binary form (two variables, rational) has no repeated root over the algebraic closure.
bool binary_form_squarefree(const Polynomial& binary_form);
// Number of distinct roots in P^1(F_p) of a binary form over F_p.
std::size_t binary_form_fp_roots(const Polynomial& binary_form);

// Smoothness of a plane curve over the algebraic closure of Q, certified by reduction modulo a
// large prime: true when certified, std::nullopt when the certificate is inconclusive.
std::optional<bool> plane_curve_smooth_certificate(const Polynomial& ternary_form, std::uint64_t seed = 1);

}  // namespace segre::sections
