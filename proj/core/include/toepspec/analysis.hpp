#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "toepspec/eig.hpp"
#include "toepspec/matrices.hpp"
#include "toepspec/symbol.hpp"

namespace toepspec {

// One eigenvalue index j followed across the grid n0, n0+step, ... The
// tracked values are mu_j of the squared truncation (equivalently
// 1 - lambda_j of the residual matrix). A grid point is admissible when
// mu_j < 1 - epsilon; when admission fails mid-grid the string is truncated
// there and flagged, never padded.
struct EigenString {
  RationalAngle angle;
  int j = 1;
  double epsilon = 0.1;
  std::vector<int> grid;
  std::vector<double> values;
  std::vector<double> diffs;  // diffs[i] = |values[i+1] - values[i]|
  bool truncated = false;
  std::string truncation_reason;
};

enum class Verdict { Pass, Fail, Vacuous };

struct BoundGridPoint {
  int n = 0;
  double ratio = 0.0;
};

// Observed quantity divided by its theoretical envelope (constant set to 1),
// per grid point, plus the fitted constant and the stability verdict. Extra
// named ratio series (block sums, alternative norms) ride along on the same
// grid.
struct BoundReport {
  std::string bound_id;  // upperb, blr_estimate, fb_norm, th1_rate, sandwich, gap_count
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<BoundGridPoint> grid;
  std::vector<std::pair<std::string, std::vector<double>>> series;
  double fitted_constant = 0.0;
  Verdict verdict = Verdict::Vacuous;

  bool passed() const { return verdict == Verdict::Pass; }
  bool vacuous() const { return verdict == Verdict::Vacuous; }
};

// Fit-then-verify rule shared by all asymptotic-bound reports: the constant
// is the max ratio over the calibration prefix (n <= calibration_cutoff) and
// the verification tail must not exceed it by more than rel_slack (1% by
// default). Returns Vacuous when grid or prefix is empty.
Verdict monotone_tail_verdict(const std::vector<BoundGridPoint>& grid,
                              int calibration_cutoff, double rel_slack, double* fitted);

// mu_j of the squared truncation followed over count+1 grid points starting
// at n0 with the given step (0 = the symbol's omega). Requires a unimodular
// symbol, epsilon in (0,1), n0 >= step+1 and 1 <= j <= n0.
EigenString track_string(const TwoStepSymbol& sym, int j, int n0, int count,
                         double epsilon, int step = 0);

// Near-periodicity rate report: for every consecutive grid pair (n, n+step)
// and every admissible index j (lambda_j of the residual above epsilon), the
// ratio |lambda_j(B_n) - lambda_j(B_{n+step})| * epsilon * n /
// (step * (1 + log^2 n)) is maximized over j and recorded at n.
// calibration_cutoff 0 picks the first quartile of the recorded pairs.
BoundReport verify_periodicity_rate(const TwoStepSymbol& sym, double epsilon,
                            const std::vector<int>& n_grid, int step = 0,
                            int calibration_cutoff = 0);

// Entrywise bounds with explicit constants (no fitting): for 1 <= l <= r <= n,
//   |b_rl| <= (16/pi^2) (1 + log n)/(r - l)      (r != l)        [upperb]
//   |b_rl| <= (8/pi^2) (1/(n+1-r) + 1/l)                         [blr_estimate]
// Ratios are observed/|envelope|; pass requires every ratio <= 1.
std::pair<BoundReport, BoundReport> verify_entry_bounds(const TwoStepSymbol& sym,
                                                        const std::vector<int>& n_grid);

// Norm decay of the compression error: primary ratio
// op_norm(F_n - B_n) * n / (omega (1 + log n)), with the Hilbert-Schmidt
// ratio and the four blockwise squared sums (divided by their envelopes
// omega^2/n^2 and omega^2 (1+log^2 n)/n^2) as extra series. All series must
// satisfy the fit-then-verify rule.
BoundReport verify_fb_norm(const TwoStepSymbol& sym, const std::vector<int>& n_grid,
                           int calibration_cutoff = 0);

// Counting sandwich: with the constant fitted at the smallest grid n, checks
//   n_+(lambda + s, F_n) <= n_+(lambda, B_{n+omega}) <= n_+(lambda - s, F_n),
//   s = C_hat * (omega/lambda) (1 + log^2 n)/n,
// for every lambda in lambda_grid at every larger n. Requires
// n_grid.front() >= khat * omega / min(lambda_grid).
BoundReport verify_sandwich(const TwoStepSymbol& sym, const std::vector<int>& n_grid,
                            const std::vector<double>& lambda_grid, double khat = 4.0);

// Number of eigenvalues of the truncation of the given symbol strictly
// inside (alpha, beta). Requires alpha < beta.
int gap_count(const TwoStepSymbol& sym, int n, double alpha, double beta);

// Gap-filling growth: ratios count/log n over the grid. Report only; the
// verdict is always Pass for a valid configuration.
BoundReport gap_count_report(const TwoStepSymbol& sym, const std::vector<int>& n_grid,
                             double alpha, double beta);

// JSON with fields {bound_id, params, grid: [{n, ratio}], fitted_constant,
// pass} plus "vacuous" and optional "series"; stable key order, UTF-8.
std::string bound_report_to_json(const BoundReport& report, int indent = 2);

// CSV columns n, mu, diff (diff blank on the first row); optional leading
// comment carries j and the truncation flag.
void write_eigen_string_csv(std::ostream& os, const EigenString& s,
                            bool with_comment_header = true);

}  // namespace toepspec
