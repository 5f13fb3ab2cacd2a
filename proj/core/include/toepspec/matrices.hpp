#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "toepspec/symbol.hpp"

namespace toepspec {

// Dense complex square matrix with a conjugate-symmetry invariant and a
// provenance label (canonically one of T, M, B_exact, B_series, D, F).
// Storage is 0-based row-major; reports and block boundaries use the
// 1-based convention r, l = 1..n throughout.
class HermitianMatrix {
 public:
  HermitianMatrix(int n, std::string label);

  int dim() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::complex<double>& at(int r, int l) { return a_[static_cast<size_t>(r) * n_ + l]; }
  const std::complex<double>& at(int r, int l) const {
    return a_[static_cast<size_t>(r) * n_ + l];
  }
  const std::complex<double>* row(int r) const { return a_.data() + static_cast<size_t>(r) * n_; }
  std::complex<double>* row(int r) { return a_.data() + static_cast<size_t>(r) * n_; }

 private:
  int n_;
  std::string label_;
  std::vector<std::complex<double>> a_;
};

HermitianMatrix identity_matrix(int n, std::string label = "I");
HermitianMatrix multiply(const HermitianMatrix& a, const HermitianMatrix& b,
                         std::string label);
HermitianMatrix subtract(const HermitianMatrix& a, const HermitianMatrix& b,
                         std::string label);

// max over entries of |a_rl - conj(a_lr)|; 0 for an exactly Hermitian matrix.
double hermiticity_defect(const HermitianMatrix& a);
double max_abs_entry(const HermitianMatrix& a);
bool all_entries_finite(const HermitianMatrix& a);

// Central cross of omega rows and columns in an (n+omega)-dimensional
// matrix, starting at the 1-based index k = ceil(n/2).
struct CrossLayout {
  int n = 0;
  int omega = 0;
  int k = 0;
  // 1-based cross membership: k <= r < k + omega
  bool in_cross(int r) const { return r >= k && r < k + omega; }
};

// Validates 1 < omega < n.
CrossLayout make_cross_layout(int n, int omega);

// n x n truncation with entries (r, l) = c_{r-l}.
HermitianMatrix toeplitz(const TwoStepSymbol& sym, int n);

// M_n = T_n * T_n.
HermitianMatrix squared_toeplitz(const TwoStepSymbol& sym, int n);

// B_n = I_n - T_n^2, valid only when the symbol squares to 1; positive
// semi-definite with spectrum inside [0, 1].
HermitianMatrix b_exact(const TwoStepSymbol& sym, int n);

// Independent series route to B_n: the entry
//   b_rl = -(-1)^{r-l}/pi^2 sum_m [1 + E(r-l) - E(r-m) - E(m-l)] / ((r-m)(m-l)),
// with E(k) = exp(i k (L+pi)) (omega-periodic in k), summed over the partial
// range m in [-tail, 0] union [n+1, n+tail]. Requires tail >= n and a symbol
// with values in {-1, +1}. The neglected remainder is bounded entrywise by
// b_series_tail_bound(n, tail).
HermitianMatrix b_series(const TwoStepSymbol& sym, int n, long tail);

// Conservative entrywise bound (16/pi^2) / (tail - n) on the truncation
// error of b_series.
double b_series_tail_bound(int n, long tail);

// Cross matrix D_{n+omega}: equal to b_exact(sym, n+omega) on the cross rows
// and columns, zero elsewhere.
HermitianMatrix cross_matrix(const TwoStepSymbol& sym, int n, int omega);

// Compressed matrix F_n: b_exact(sym, n+omega) with the cross removed and
// the four remaining blocks pulled together; 1-based index map
// r -> r (r <= k-1), r -> r+omega (r >= k).
HermitianMatrix f_matrix(const TwoStepSymbol& sym, int n, int omega);

// Xi B Xi: the (n+omega)-dimensional matrix b with the cross rows and
// columns zeroed. Satisfies b = xi_b_xi(b, layout) + cross part entrywise.
HermitianMatrix xi_b_xi(const HermitianMatrix& b_npo, const CrossLayout& layout);

// sqrt(sum |entries|^2)
double hs_norm(const HermitianMatrix& a);

// max |eigenvalue|, via the Hermitian eigensolver.
double op_norm(const HermitianMatrix& a);

// Plain-text dump: header "n label", then n rows of comma-separated
// "re+imi" entries, 17 significant digits. load_matrix round-trips exactly.
void dump_matrix(std::ostream& os, const HermitianMatrix& a);
HermitianMatrix load_matrix(std::istream& is);

}  // namespace toepspec
