#pragma once

#include <complex>

namespace toepspec {

// Jump location L = pi*q/p in [0, pi) for a coprime pair (p, q), together
// with the near-period omega(p, q) of the truncation index:
//
//   omega = 2    if q = 0,
//   omega = p    if p and q are both odd,
//   omega = 2p   if either p or q is even.
//
// In all three cases omega*(pi + L) is an integer multiple of 2*pi, which
// makes k -> exp(i*k*(pi+L)) exactly periodic in k with period omega.
struct RationalAngle {
  int p = 1;
  int q = 0;
  double L = 0.0;  // pi*q/p
  int omega = 2;
};

// Reduces (p, q) to lowest terms (gcd(p, 0) = p, so q = 0 becomes (1, 0))
// and computes L and omega. Rejects p <= 0 and q outside [0, p), i.e. L
// outside [0, pi). Irrational jump locations are not representable.
RationalAngle make_rational_angle(int p, int q);

// Piecewise-constant symbol on [-pi, pi): low_value on [-pi, L), high_value
// on [L, pi). Immutable value type; low_value != high_value always.
struct TwoStepSymbol {
  RationalAngle angle;
  double low_value = -1.0;
  double high_value = 1.0;
};

TwoStepSymbol make_two_step_symbol(const RationalAngle& angle, double low, double high);
TwoStepSymbol preset_pm1(const RationalAngle& angle);       // values (-1, +1)
TwoStepSymbol preset_zero_one(const RationalAngle& angle);  // values (0, 1)

// True when the symbol squares to the constant 1 (both values in {-1, +1}).
bool is_unimodular(const TwoStepSymbol& sym);

// Pointwise evaluation, x in [-pi, pi).
double symbol_value(const TwoStepSymbol& sym, double x);

// k-th Fourier coefficient, normalized as
//   c_k = (1/2pi) \int_{-pi}^{pi} a(x) exp(i k x) dx,
// so that the Toeplitz entry (r, l) is exactly c_{r-l}. For the (-1, +1)
// values this evaluates to
//   c_0 = -L/pi,   c_k = (1/pi) (-1)^k / (ik) (1 - exp(i k (L+pi))),  k != 0,
// and a general two-step symbol is an affine rescaling of that. Satisfies
// c_{-k} = conj(c_k).
std::complex<double> fourier_coefficient_exact(const TwoStepSymbol& sym, int k);

// Independent quadrature route to c_k: composite Simpson over [-pi, L] and
// [L, pi] separately with `panels` panels per piece, so the jump never
// crosses a panel. The integrand is smooth on each piece; the error decays
// like panels^-4.
std::complex<double> fourier_coefficient_quadrature(const TwoStepSymbol& sym, int k,
                                                    int panels);

// (scale, shift) with sym_to(x) = scale*sym_from(x) + shift everywhere.
// Both symbols must share the same jump location. Truncations transform
// accordingly: T_n[sym_to] = scale*T_n[sym_from] + shift*I.
struct AffineMap {
  double scale = 1.0;
  double shift = 0.0;
};

AffineMap affine_map_between_presets(const TwoStepSymbol& sym_from,
                                     const TwoStepSymbol& sym_to);

}  // namespace toepspec
