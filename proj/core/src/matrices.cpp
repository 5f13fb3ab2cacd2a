#include "toepspec/matrices.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toepspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

HermitianMatrix::HermitianMatrix(int n, std::string label)
    : n_(n), label_(std::move(label)), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {
  if (n <= 0) throw std::invalid_argument("matrix: dimension must be positive");
}

HermitianMatrix identity_matrix(int n, std::string label) {
  HermitianMatrix m(n, std::move(label));
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

HermitianMatrix multiply(const HermitianMatrix& a, const HermitianMatrix& b,
                         std::string label) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const int n = a.dim();
  HermitianMatrix c(n, std::move(label));
  for (int i = 0; i < n; ++i) {
    std::complex<double>* ci = c.row(i);
    const std::complex<double>* ai = a.row(i);
    for (int k = 0; k < n; ++k) {
      const std::complex<double> aik = ai[k];
      const std::complex<double>* bk = b.row(k);
      for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

HermitianMatrix subtract(const HermitianMatrix& a, const HermitianMatrix& b,
                         std::string label) {
  if (a.dim() != b.dim()) throw std::invalid_argument("subtract: dimension mismatch");
  const int n = a.dim();
  HermitianMatrix c(n, std::move(label));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

double hermiticity_defect(const HermitianMatrix& a) {
  const int n = a.dim();
  double worst = 0.0;
  for (int r = 0; r < n; ++r)
    for (int l = 0; l <= r; ++l)
      worst = std::max(worst, std::abs(a.at(r, l) - std::conj(a.at(l, r))));
  return worst;
}

double max_abs_entry(const HermitianMatrix& a) {
  const int n = a.dim();
  double worst = 0.0;
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) worst = std::max(worst, std::abs(a.at(r, l)));
  return worst;
}

bool all_entries_finite(const HermitianMatrix& a) {
  const int n = a.dim();
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) {
      const std::complex<double> z = a.at(r, l);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

CrossLayout make_cross_layout(int n, int omega) {
  if (omega <= 1) throw std::invalid_argument("cross layout: omega must exceed 1");
  if (omega >= n) throw std::invalid_argument("cross layout: omega must be smaller than n");
  CrossLayout cl;
  cl.n = n;
  cl.omega = omega;
  cl.k = (n + 1) / 2;  // ceil(n/2), 1-based
  return cl;
}

HermitianMatrix toeplitz(const TwoStepSymbol& sym, int n) {
  if (n < 1) throw std::invalid_argument("toeplitz: n must be positive");
  std::vector<std::complex<double>> c(n);  // c[k] for k >= 0; c_{-k} = conj(c[k])
  for (int k = 0; k < n; ++k) c[k] = fourier_coefficient_exact(sym, k);
  HermitianMatrix t(n, "T");
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) t.at(r, l) = (r >= l) ? c[r - l] : std::conj(c[l - r]);
  return t;
}

HermitianMatrix squared_toeplitz(const TwoStepSymbol& sym, int n) {
  const HermitianMatrix t = toeplitz(sym, n);
  return multiply(t, t, "M");
}

HermitianMatrix b_exact(const TwoStepSymbol& sym, int n) {
  if (!is_unimodular(sym))
    throw std::invalid_argument("b_exact: requires unimodular symbol (a^2 = 1)");
  HermitianMatrix b = squared_toeplitz(sym, n);
  b.set_label("B_exact");
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) b.at(r, l) = ((r == l) ? 1.0 : 0.0) - b.at(r, l);
  return b;
}

double b_series_tail_bound(int n, long tail) {
  return (16.0 / (kPi * kPi)) / static_cast<double>(tail - n);
}

HermitianMatrix b_series(const TwoStepSymbol& sym, int n, long tail) {
  if (!is_unimodular(sym))
    throw std::invalid_argument("b_series: requires unimodular symbol (a^2 = 1)");
  if (n < 1) throw std::invalid_argument("b_series: n must be positive");
  if (tail < n) throw std::invalid_argument("b_series: tail must be at least n");

  const int omega = sym.angle.omega;
  // E(k) = exp(i k (L+pi)) is exactly omega-periodic; tabulating one period
  // keeps the inner sum free of trigonometric calls and of phase drift.
  std::vector<std::complex<double>> phase(omega);
  for (int t = 0; t < omega; ++t) phase[t] = std::polar(1.0, t * (sym.angle.L + kPi));
  const auto mod = [omega](long k) {
    long m = k % omega;
    return static_cast<int>(m < 0 ? m + omega : m);
  };

  HermitianMatrix b(n, "B_series");
  for (int r = 1; r <= n; ++r) {
    for (int l = 1; l <= r; ++l) {
      const std::complex<double> head = 1.0 + phase[mod(r - l)];
      std::complex<double> sum = 0.0;
      // m = 0, -1, ..., -tail: r-m steps up, m-l steps down.
      {
        int irm = mod(r);
        int iml = mod(-l);
        for (long m = 0; m >= -tail; --m) {
          const double den = static_cast<double>((r - m) * (m - l));
          sum += (head - phase[irm] - phase[iml]) / den;
          irm = (irm + 1 == omega) ? 0 : irm + 1;
          iml = (iml == 0) ? omega - 1 : iml - 1;
        }
      }
      // m = n+1, ..., n+tail.
      {
        int irm = mod(static_cast<long>(r) - (n + 1));
        int iml = mod(static_cast<long>(n) + 1 - l);
        for (long m = n + 1; m <= n + tail; ++m) {
          const double den = static_cast<double>((r - m) * (m - l));
          sum += (head - phase[irm] - phase[iml]) / den;
          irm = (irm == 0) ? omega - 1 : irm - 1;
          iml = (iml + 1 == omega) ? 0 : iml + 1;
        }
      }
      const double pref = ((r - l) % 2 == 0) ? -1.0 : 1.0;  // -(-1)^{r-l}
      const std::complex<double> v = pref / (kPi * kPi) * sum;
      if (r == l) {
        b.at(r - 1, l - 1) = v.real();
      } else {
        b.at(r - 1, l - 1) = v;
        b.at(l - 1, r - 1) = std::conj(v);
      }
    }
  }
  return b;
}

HermitianMatrix cross_matrix(const TwoStepSymbol& sym, int n, int omega) {
  const CrossLayout cl = make_cross_layout(n, omega);
  const HermitianMatrix b = b_exact(sym, n + omega);
  HermitianMatrix d(n + omega, "D");
  for (int r = 1; r <= n + omega; ++r)
    for (int l = 1; l <= n + omega; ++l)
      if (cl.in_cross(r) || cl.in_cross(l)) d.at(r - 1, l - 1) = b.at(r - 1, l - 1);
  return d;
}

HermitianMatrix f_matrix(const TwoStepSymbol& sym, int n, int omega) {
  const CrossLayout cl = make_cross_layout(n, omega);
  const HermitianMatrix b = b_exact(sym, n + omega);
  HermitianMatrix f(n, "F");
  const auto map = [&cl, omega](int r) { return (r <= cl.k - 1) ? r : r + omega; };
  for (int r = 1; r <= n; ++r)
    for (int l = 1; l <= n; ++l) f.at(r - 1, l - 1) = b.at(map(r) - 1, map(l) - 1);
  return f;
}

HermitianMatrix xi_b_xi(const HermitianMatrix& b_npo, const CrossLayout& layout) {
  if (b_npo.dim() != layout.n + layout.omega)
    throw std::invalid_argument("xi_b_xi: matrix dimension must equal n + omega");
  HermitianMatrix x(b_npo.dim(), "XiBXi");
  for (int r = 1; r <= b_npo.dim(); ++r)
    for (int l = 1; l <= b_npo.dim(); ++l)
      if (!layout.in_cross(r) && !layout.in_cross(l))
        x.at(r - 1, l - 1) = b_npo.at(r - 1, l - 1);
  return x;
}

double hs_norm(const HermitianMatrix& a) {
  const int n = a.dim();
  double acc = 0.0;
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) acc += std::norm(a.at(r, l));
  return std::sqrt(acc);
}

void dump_matrix(std::ostream& os, const HermitianMatrix& a) {
  const int n = a.dim();
  os << n << ' ' << a.label() << '\n';
  char buf[80];
  for (int r = 0; r < n; ++r) {
    for (int l = 0; l < n; ++l) {
      const std::complex<double> z = a.at(r, l);
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
      if (l) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

HermitianMatrix load_matrix(std::istream& is) {
  int n = 0;
  std::string label;
  if (!(is >> n >> label) || n <= 0)
    throw std::invalid_argument("load_matrix: bad header (expected \"n label\")");
  std::string line;
  std::getline(is, line);  // rest of header line
  HermitianMatrix a(n, label);
  for (int r = 0; r < n; ++r) {
    if (!std::getline(is, line)) throw std::invalid_argument("load_matrix: missing row");
    const char* s = line.c_str();
    for (int l = 0; l < n; ++l) {
      char* end = nullptr;
      const double re = std::strtod(s, &end);
      if (end == s) throw std::invalid_argument("load_matrix: bad real part");
      s = end;
      const double im = std::strtod(s, &end);
      if (end == s || *end != 'i') throw std::invalid_argument("load_matrix: bad imaginary part");
      s = end + 1;
      if (l + 1 < n) {
        if (*s != ',') throw std::invalid_argument("load_matrix: expected comma");
        ++s;
      }
      a.at(r, l) = {re, im};
    }
  }
  if (!all_entries_finite(a)) throw std::invalid_argument("load_matrix: non-finite entry");
  return a;
}

}  // namespace toepspec
