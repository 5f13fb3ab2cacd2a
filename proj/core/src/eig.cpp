#include "toepspec/eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace toepspec {

namespace {

using cplx = std::complex<double>;

// Householder reduction of a Hermitian matrix to tridiagonal form, values
// only (the unitary factors are not accumulated). On return d holds the real
// diagonal and e the subdiagonal magnitudes; a diagonal unitary similarity
// turns the complex Hermitian tridiagonal into the real symmetric one with
// the same spectrum, so only |subdiagonal| matters.
void tridiagonalize(std::vector<cplx>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  const auto at = [&a, n](int r, int c) -> cplx& {
    return a[static_cast<size_t>(r) * n + c];
  };
  std::vector<cplx> w(n), p(n), q(n);

  for (int l = 0; l + 2 < n; ++l) {
    const int lo = l + 1;
    double scale = 0.0;
    for (int i = lo; i < n; ++i)
      scale += std::abs(at(i, l).real()) + std::abs(at(i, l).imag());
    if (scale == 0.0) {
      e[l] = 0.0;
      continue;
    }
    double ssq = 0.0;
    for (int i = lo; i < n; ++i) {
      at(i, l) /= scale;
      ssq += std::norm(at(i, l));
    }
    const double s = std::sqrt(ssq);
    const cplx x1 = at(lo, l);
    const double ax1 = std::abs(x1);
    const cplx dir = (ax1 == 0.0) ? cplx(1.0) : x1 / ax1;

    // Reflector w = x + s*dir*e1, |w|^2 = 2 s (s + |x1|); U = I - tau w w^H.
    const double wnorm2 = 2.0 * s * (s + ax1);
    if (wnorm2 == 0.0) {
      e[l] = 0.0;
      continue;
    }
    w[lo] = x1 + s * dir;
    for (int i = lo + 1; i < n; ++i) w[i] = at(i, l);
    const double tau = 2.0 / wnorm2;

    // p = A22 w
    for (int i = lo; i < n; ++i) {
      cplx acc = 0.0;
      const cplx* rowi = &at(i, 0);
      for (int j = lo; j < n; ++j) acc += rowi[j] * w[j];
      p[i] = acc;
    }
    // K = w^H p, real for Hermitian A22
    double big_k = 0.0;
    for (int i = lo; i < n; ++i) big_k += std::real(std::conj(w[i]) * p[i]);
    // A22 <- A22 - w q^H - q w^H with q = tau p - (tau^2 K / 2) w
    const double half = 0.5 * tau * tau * big_k;
    for (int i = lo; i < n; ++i) q[i] = tau * p[i] - half * w[i];
    for (int i = lo; i < n; ++i) {
      cplx* rowi = &at(i, 0);
      const cplx wi = w[i];
      const cplx qi = q[i];
      for (int j = lo; j < n; ++j) rowi[j] -= wi * std::conj(q[j]) + qi * std::conj(w[j]);
    }
    e[l] = scale * s;  // |new subdiagonal|
  }
  if (n >= 2) e[n - 2] = std::abs(at(n - 1, n - 2));
  for (int i = 0; i < n; ++i) d[i] = at(i, i).real();
}

// Implicit-shift QL on a real symmetric tridiagonal matrix, values only.
// max_sweeps caps the iterations spent on any single eigenvalue.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n, int max_sweeps) {
  if (n <= 1) return;
  const double eps = std::numeric_limits<double>::epsilon();
  double anorm = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = std::abs(d[i]);
    if (i > 0) r += std::abs(e[i - 1]);
    if (i < n - 1) r += std::abs(e[i]);
    anorm = std::max(anorm, r);
  }
  const double floor = eps * anorm;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor) break;
      }
      if (m != l) {
        if (iter++ == max_sweeps)
          throw SolverError("hermitian eigensolver: tridiagonal QL exceeded " +
                            std::to_string(max_sweeps) + " sweeps for one eigenvalue");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

double Spectrum::lambda(int j) const {
  if (j < 1 || j > n) throw std::out_of_range("spectrum: lambda index out of range");
  return values_asc[static_cast<size_t>(n - j)];
}

double Spectrum::mu(int j) const {
  if (j < 1 || j > n) throw std::out_of_range("spectrum: mu index out of range");
  return values_asc[static_cast<size_t>(j - 1)];
}

Spectrum eigenvalues_hermitian(const HermitianMatrix& h, int max_sweeps) {
  const int n = h.dim();
  const double defect = hermiticity_defect(h);
  if (defect > 1e-12 * std::max(1.0, max_abs_entry(h)))
    throw std::invalid_argument("eigenvalues_hermitian: input is not Hermitian within 1e-12");

  // Symmetrize (H + H*)/2; the diagonal becomes exactly real.
  std::vector<cplx> a(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l)
      a[static_cast<size_t>(r) * n + l] = 0.5 * (h.at(r, l) + std::conj(h.at(l, r)));

  std::vector<double> d(n, 0.0), e(n, 0.0);  // e[n-1] is QL workspace
  tridiagonalize(a, n, d, e);
  ql_implicit(d, e, n, max_sweeps);
  std::sort(d.begin(), d.end());

  Spectrum s;
  s.n = n;
  s.values_asc = std::move(d);
  s.source_label = h.label();
  return s;
}

int counting_above(const Spectrum& spec, double lambda) {
  const auto it = std::upper_bound(spec.values_asc.begin(), spec.values_asc.end(), lambda);
  return static_cast<int>(spec.values_asc.end() - it);
}

double mu_view(const Spectrum& spec, int j) { return spec.mu(j); }

double op_norm(const HermitianMatrix& a) {
  const Spectrum s = eigenvalues_hermitian(a);
  if (s.values_asc.empty()) return 0.0;
  return std::max(std::abs(s.values_asc.front()), std::abs(s.values_asc.back()));
}

}  // namespace toepspec
