#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace oracles {

using toepspec::HermitianMatrix;
using cplx = std::complex<double>;

namespace {

// Gershgorin interval of a Hermitian matrix.
std::pair<double, double> gershgorin(const HermitianMatrix& a) {
  const int n = a.dim();
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    double rad = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) rad += std::abs(a.at(i, j));
    const double c = a.at(i, i).real();
    if (i == 0 || c - rad < lo) lo = c - rad;
    if (i == 0 || c + rad > hi) hi = c + rad;
  }
  return {lo, hi};
}

// Faddeev-LeVerrier: coefficients of det(lambda I - A), c[n] = 1 down to
// c[0]; real for Hermitian A.
std::vector<double> charpoly_coeffs(const HermitianMatrix& a) {
  const int n = a.dim();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  std::vector<cplx> m(static_cast<size_t>(n) * n, 0.0);  // M_0 = 0
  const auto idx = [n](int r, int l) { return static_cast<size_t>(r) * n + l; };
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c[n-k+1] I
    std::vector<cplx> next(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        const cplx ait = a.at(i, t);
        for (int j = 0; j < n; ++j) next[idx(i, j)] += ait * m[idx(t, j)];
      }
    for (int i = 0; i < n; ++i) next[idx(i, i)] += c[n - k + 1];
    // c[n-k] = -tr(A M_k)/k
    cplx tr = 0.0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr += a.at(i, t) * next[idx(t, i)];
    c[n - k] = -tr.real() / k;
    m = std::move(next);
  }
  return c;
}

double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * x + c[k];
  return acc;
}

double bisect_root(const std::vector<double>& c, double lo, double hi) {
  double flo = poly_eval(c, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = poly_eval(c, mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0) != (fmid < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

// All real roots of a polynomial whose roots are known to be real, via
// recursive derivative interlacing.
std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[0] / c[1]};
  std::vector<double> dc(deg);
  for (int k = 1; k <= deg; ++k) dc[k - 1] = c[k] * k;
  const std::vector<double> crit = real_roots(dc, lo, hi);

  std::vector<double> cuts{lo};
  for (double x : crit)
    if (x > lo && x < hi) cuts.push_back(x);
  cuts.push_back(hi);

  std::vector<double> roots;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double fa = poly_eval(c, cuts[i]);
    const double fb = poly_eval(c, cuts[i + 1]);
    if ((fa < 0) != (fb < 0) || fa == 0.0) {
      roots.push_back(bisect_root(c, cuts[i], cuts[i + 1]));
    } else if (i > 0 && std::abs(fa) < 1e-12 * (1.0 + std::abs(fb))) {
      roots.push_back(cuts[i]);  // (near-)multiple root at a critical point
    }
  }
  return roots;
}

}  // namespace

std::vector<double> charpoly_eigenvalues(const HermitianMatrix& a) {
  const auto c = charpoly_coeffs(a);
  auto [lo, hi] = gershgorin(a);
  auto roots = real_roots(c, lo - 1.0, hi + 1.0);
  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) != a.dim())
    throw std::runtime_error("charpoly oracle: did not isolate all roots");
  return roots;
}

namespace {

bool try_count_below(const HermitianMatrix& a, double sigma, double breakdown, int* count) {
  const int n = a.dim();
  std::vector<cplx> w(static_cast<size_t>(n) * n);
  const auto idx = [n](int r, int l) { return static_cast<size_t>(r) * n + l; };
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l)
      w[idx(r, l)] = a.at(r, l) - (r == l ? cplx(sigma) : cplx(0.0));
  int negs = 0;
  for (int k = 0; k < n; ++k) {
    const double d = w[idx(k, k)].real();
    if (std::abs(d) < breakdown) return false;
    if (d < 0.0) ++negs;
    for (int i = k + 1; i < n; ++i) {
      const cplx lik = w[idx(i, k)] / d;
      for (int j = k + 1; j <= i; ++j)
        w[idx(i, j)] -= lik * std::conj(w[idx(j, k)]);
      w[idx(i, i)] = w[idx(i, i)].real();  // keep the pivot real
    }
  }
  *count = negs;
  return true;
}

}  // namespace

int count_below(const HermitianMatrix& a, double sigma) {
  const double scale = std::max(1.0, toepspec::max_abs_entry(a));
  for (int attempt = 0; attempt < 32; ++attempt) {
    int count = 0;
    const double shift = sigma + attempt * 3e-11 * scale;
    if (try_count_below(a, shift, 1e-14 * scale, &count)) return count;
  }
  throw std::runtime_error("inertia oracle: persistent factorization breakdown");
}

std::vector<double> slicing_eigenvalues(const HermitianMatrix& a, double tol) {
  const int n = a.dim();
  auto [glo, ghi] = gershgorin(a);
  glo -= 1e-6;
  ghi += 1e-6;
  std::vector<double> out(n);
  for (int j = 1; j <= n; ++j) {
    double lo = glo, hi = ghi;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(a, mid) >= j)
        hi = mid;
      else
        lo = mid;
    }
    out[j - 1] = 0.5 * (lo + hi);
  }
  return out;
}

HermitianMatrix random_hermitian(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  HermitianMatrix g(n, "random");
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) g.at(r, l) = {dist(rng), dist(rng)};
  HermitianMatrix h(n, "random");
  for (int r = 0; r < n; ++r)
    for (int l = 0; l < n; ++l) h.at(r, l) = 0.5 * (g.at(r, l) + std::conj(g.at(l, r)));
  return h;
}

}  // namespace oracles
