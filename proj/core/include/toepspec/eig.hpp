#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "toepspec/matrices.hpp"

namespace toepspec {

// Full real spectrum of a Hermitian matrix, stored ascending. Both labeling
// conventions are exposed: lambda_j descending and mu_j ascending, with
// mu_j = lambda_{n+1-j}.
struct Spectrum {
  int n = 0;
  std::vector<double> values_asc;
  std::string source_label;

  // 1-based descending view.
  double lambda(int j) const;
  // 1-based ascending view.
  double mu(int j) const;
};

// Signaled when the tridiagonal iteration exceeds its sweep cap. A partial
// spectrum is never returned.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense full-spectrum Hermitian solve: unitary Householder reduction to real
// symmetric tridiagonal form, then implicit-shift QL, values only. The input
// must be Hermitian within 1e-12 of its entry scale; it is symmetrized as
// (H + H*)/2 before solving. max_sweeps caps the QL iterations per
// eigenvalue. Deterministic: identical input gives identical output.
Spectrum eigenvalues_hermitian(const HermitianMatrix& h, int max_sweeps = 50);

// #{ j : lambda_j > lambda }, strict.
int counting_above(const Spectrum& spec, double lambda);

// Range-checked ascending view, 1 <= j <= n.
double mu_view(const Spectrum& spec, int j);

}  // namespace toepspec
