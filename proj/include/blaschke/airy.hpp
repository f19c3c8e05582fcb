#pragma once

namespace blaschke {

/// Ai(x) for finite x, absolute error below 1e-12 on [-20, 5].
///
/// Maclaurin series in 192-bit arithmetic on [-9, 6]; beyond, the standard
/// asymptotic series in ζ = (2/3)|x|^{3/2}, truncated at the smallest term.
double airy_ai(double x);

/// Leading oscillatory term x^{-1/4}π^{-1/2} cos((2/3)x^{3/2} - π/4) of
/// Ai(-x), x > 0.
double airy_ai_leading_negative(double x);

}  // namespace blaschke
