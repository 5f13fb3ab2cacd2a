#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "toepspec/eig.hpp"
#include "toepspec/matrices.hpp"
#include "toepspec/symbol.hpp"

using namespace toepspec;
using doctest::Approx;

TEST_CASE("eigensolver: diagonal and Pauli-type matrices") {
  HermitianMatrix d(3, "diag");
  d.at(0, 0) = 3.0;
  d.at(1, 1) = 1.0;
  d.at(2, 2) = 2.0;
  const auto spec = eigenvalues_hermitian(d);
  CHECK(spec.values_asc == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(spec.lambda(1) == 3.0);
  CHECK(spec.mu(1) == 1.0);

  HermitianMatrix pauli(2, "sigma_y");
  pauli.at(0, 1) = {0.0, 1.0};
  pauli.at(1, 0) = {0.0, -1.0};
  const auto ps = eigenvalues_hermitian(pauli);
  CHECK(ps.values_asc[0] == Approx(-1.0).epsilon(1e-14));
  CHECK(ps.values_asc[1] == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigensolver: rejects non-Hermitian input") {
  HermitianMatrix bad(2, "bad");
  bad.at(0, 1) = 1.0;
  bad.at(1, 0) = 0.5;
  CHECK_THROWS_AS(eigenvalues_hermitian(bad), std::invalid_argument);
}

TEST_CASE("eigensolver: residual matrix at n = 4 matches the characteristic-polynomial oracle") {
  const auto b = b_exact(preset_pm1(make_rational_angle(2, 1)), 4);
  const auto spec = eigenvalues_hermitian(b);
  const auto roots = oracles::charpoly_eigenvalues(b);
  REQUIRE(roots.size() == 4);
  for (int j = 0; j < 4; ++j) CHECK(std::abs(spec.values_asc[j] - roots[j]) <= 1e-10);
}

TEST_CASE("eigensolver: random Hermitian matrices match the inertia-slicing oracle") {
  for (int n : {5, 12, 33}) {
    const auto h = oracles::random_hermitian(n, 7u * n);
    const auto spec = eigenvalues_hermitian(h);
    const auto sliced = oracles::slicing_eigenvalues(h);
    for (int j = 0; j < n; ++j) CHECK(std::abs(spec.values_asc[j] - sliced[j]) <= 1e-10);
  }
}

TEST_CASE("eigensolver: Weyl perturbation inequality on random pairs") {
  for (int n : {8, 64}) {
    const auto h = oracles::random_hermitian(n, 100u + n);
    auto e = oracles::random_hermitian(n, 200u + n);
    // shrink the perturbation
    HermitianMatrix eps(n, "E");
    for (int r = 0; r < n; ++r)
      for (int l = 0; l < n; ++l) eps.at(r, l) = 0.01 * e.at(r, l);
    HermitianMatrix sum(n, "H+E");
    for (int r = 0; r < n; ++r)
      for (int l = 0; l < n; ++l) sum.at(r, l) = h.at(r, l) + eps.at(r, l);

    const auto sh = eigenvalues_hermitian(h);
    const auto ss = eigenvalues_hermitian(sum);
    const double bound = op_norm(eps);
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(ss.values_asc[j] - sh.values_asc[j]) <= bound * (1 + 1e-10) + 1e-12);
  }
}

TEST_CASE("eigensolver: trace identity") {
  for (int n : {6, 40}) {
    const auto h = oracles::random_hermitian(n, 300u + n);
    const auto spec = eigenvalues_hermitian(h);
    double sum = 0.0, tr = 0.0;
    for (double v : spec.values_asc) sum += v;
    for (int i = 0; i < n; ++i) tr += h.at(i, i).real();
    CHECK(std::abs(sum - tr) <= 1e-10 * n * std::max(1.0, max_abs_entry(h)));
  }
}

TEST_CASE("eigensolver: deterministic and never partial") {
  const auto b = b_exact(preset_pm1(make_rational_angle(3, 1)), 24);
  const auto s1 = eigenvalues_hermitian(b);
  const auto s2 = eigenvalues_hermitian(b);
  CHECK(s1.values_asc == s2.values_asc);  // bitwise identical

  // an impossible sweep cap must throw, not return a partial spectrum
  CHECK_THROWS_AS(eigenvalues_hermitian(b, 0), SolverError);
}

TEST_CASE("counting function: strict inequality") {
  Spectrum s;
  s.n = 3;
  s.values_asc = {1.0, 2.0, 3.0};
  s.source_label = "test";
  CHECK(counting_above(s, 2.0) == 1);  // strictly above
  CHECK(counting_above(s, 0.0) == 3);
  CHECK(counting_above(s, 3.0) == 0);
  CHECK(counting_above(s, -1e9) == 3);

  Spectrum ties;
  ties.n = 3;
  ties.values_asc = {1.0, 1.0, 2.0};
  CHECK(counting_above(ties, 1.0) == 1);
}

TEST_CASE("counting function: admissible set of the residual spectrum") {
  const auto b = b_exact(preset_pm1(make_rational_angle(2, 1)), 32);
  const auto spec = eigenvalues_hermitian(b);
  const double eps = 0.1;
  const int count = counting_above(spec, eps);
  // matches a direct scan of the descending view
  int scan = 0;
  for (int j = 1; j <= spec.n; ++j)
    if (spec.lambda(j) > eps) ++scan;
  CHECK(count == scan);
  // raising epsilon can only shrink the admissible set
  CHECK(counting_above(spec, 0.2) <= count);
  CHECK(counting_above(spec, 0.4) <= counting_above(spec, 0.2));
}

TEST_CASE("mu view: ascending access and range checks") {
  Spectrum s;
  s.n = 3;
  s.values_asc = {1.0, 2.0, 3.0};
  CHECK(mu_view(s, 1) == 1.0);
  CHECK(mu_view(s, 3) == 3.0);
  CHECK(s.lambda(1) == 3.0);
  CHECK(s.lambda(3) == 1.0);
  CHECK_THROWS_AS(mu_view(s, 0), std::out_of_range);
  CHECK_THROWS_AS(mu_view(s, 4), std::out_of_range);
}

TEST_CASE("duality: mu_j of the square plus lambda_j of the residual is 1") {
  const auto sym = preset_pm1(make_rational_angle(2, 1));
  const int n = 12;
  const auto sm = eigenvalues_hermitian(squared_toeplitz(sym, n));
  const auto sb = eigenvalues_hermitian(b_exact(sym, n));
  for (int j = 1; j <= n; ++j) CHECK(std::abs(sm.mu(j) + sb.lambda(j) - 1.0) <= 1e-12);
}

TEST_CASE("compression similarity: positive spectra of F and Xi B Xi coincide") {
  const auto sym = preset_pm1(make_rational_angle(2, 1));
  const int n = 12, omega = 4;
  const auto b = b_exact(sym, n + omega);
  const auto f = f_matrix(sym, n, omega);
  const auto sf = eigenvalues_hermitian(f);
  const auto sx = eigenvalues_hermitian(xi_b_xi(b, make_cross_layout(n, omega)));
  for (int j = 1; j <= n; ++j) CHECK(std::abs(sf.lambda(j) - sx.lambda(j)) <= 1e-10);
  for (int j = n + 1; j <= n + omega; ++j) CHECK(std::abs(sx.lambda(j)) <= 1e-10);
}
