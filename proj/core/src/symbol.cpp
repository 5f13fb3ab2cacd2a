#include "toepspec/symbol.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace toepspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

RationalAngle make_rational_angle(int p, int q) {
  if (p <= 0) throw std::invalid_argument("rational angle: p must be a positive integer");
  if (q < 0 || q >= p)
    throw std::invalid_argument(
        "rational angle: require 0 <= q < p so that L = pi*q/p lies in [0, pi)");
  const int g = std::gcd(p, q);  // gcd(p, 0) = p, so q = 0 reduces to (1, 0)
  p /= g;
  q /= g;

  RationalAngle a;
  a.p = p;
  a.q = q;
  a.L = kPi * static_cast<double>(q) / static_cast<double>(p);
  if (q == 0)
    a.omega = 2;
  else if (p % 2 != 0 && q % 2 != 0)
    a.omega = p;
  else
    a.omega = 2 * p;

  // omega*(pi+L) must land on a multiple of 2*pi; guards the case split above.
  const double cycles = a.omega * (kPi + a.L) / (2.0 * kPi);
  if (std::abs(cycles - std::round(cycles)) > 1e-12 * std::abs(cycles))
    throw std::logic_error("rational angle: omega*(pi+L) is not a multiple of 2*pi");
  return a;
}

TwoStepSymbol make_two_step_symbol(const RationalAngle& angle, double low, double high) {
  if (!(low != high))
    throw std::invalid_argument("two-step symbol: low_value and high_value must differ");
  if (!std::isfinite(low) || !std::isfinite(high))
    throw std::invalid_argument("two-step symbol: values must be finite");
  return TwoStepSymbol{angle, low, high};
}

TwoStepSymbol preset_pm1(const RationalAngle& angle) {
  return make_two_step_symbol(angle, -1.0, 1.0);
}

TwoStepSymbol preset_zero_one(const RationalAngle& angle) {
  return make_two_step_symbol(angle, 0.0, 1.0);
}

bool is_unimodular(const TwoStepSymbol& sym) {
  return sym.low_value * sym.low_value == 1.0 && sym.high_value * sym.high_value == 1.0;
}

double symbol_value(const TwoStepSymbol& sym, double x) {
  return x < sym.angle.L ? sym.low_value : sym.high_value;
}

std::complex<double> fourier_coefficient_exact(const TwoStepSymbol& sym, int k) {
  // Negative indices by conjugation keeps c_{-k} = conj(c_k) bit-exact.
  if (k < 0) return std::conj(fourier_coefficient_exact(sym, -k));
  // Decompose the symbol as alpha * (-1,+1)-symbol + beta.
  const double alpha = 0.5 * (sym.high_value - sym.low_value);
  const double beta = 0.5 * (sym.high_value + sym.low_value);
  if (k == 0) return {alpha * (-sym.angle.L / kPi) + beta, 0.0};
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const std::complex<double> bracket =
      1.0 - std::polar(1.0, k * (sym.angle.L + kPi));
  // (-1)^k / (i k) = -i (-1)^k / k
  const std::complex<double> c_pm1 =
      std::complex<double>(0.0, -sign / k) * bracket / kPi;
  return alpha * c_pm1;
}

namespace {

// Composite Simpson of value * exp(i k x) over [a, b] with `panels` panels
// (2*panels+1 nodes). The unit phase advances by multiplication and is
// re-synchronized periodically to keep drift far below the target accuracy.
std::complex<double> simpson_piece(double a, double b, double value, int k, int panels) {
  const long m = 2L * panels;
  const double h = (b - a) / static_cast<double>(m);
  const std::complex<double> rot = std::polar(1.0, k * h);
  std::complex<double> cur = std::polar(1.0, k * a);
  std::complex<double> acc = cur;  // weight 1 at the left endpoint
  for (long i = 1; i < m; ++i) {
    if (i % 1024 == 0)
      cur = std::polar(1.0, k * (a + i * h));
    else
      cur *= rot;
    acc += ((i % 2 == 1) ? 4.0 : 2.0) * cur;
  }
  acc += std::polar(1.0, k * b);  // weight 1 at the right endpoint
  return value * acc * (h / 3.0);
}

}  // namespace

std::complex<double> fourier_coefficient_quadrature(const TwoStepSymbol& sym, int k,
                                                    int panels) {
  if (panels < 2) throw std::invalid_argument("quadrature: panels must be at least 2");
  const double L = sym.angle.L;
  const std::complex<double> total = simpson_piece(-kPi, L, sym.low_value, k, panels) +
                                     simpson_piece(L, kPi, sym.high_value, k, panels);
  return total / (2.0 * kPi);
}

AffineMap affine_map_between_presets(const TwoStepSymbol& sym_from,
                                     const TwoStepSymbol& sym_to) {
  if (sym_from.angle.p != sym_to.angle.p || sym_from.angle.q != sym_to.angle.q)
    throw std::invalid_argument("affine map: symbols must share the same jump location");
  const double scale =
      (sym_to.high_value - sym_to.low_value) / (sym_from.high_value - sym_from.low_value);
  const double shift = sym_to.low_value - scale * sym_from.low_value;
  return {scale, shift};
}

}  // namespace toepspec
