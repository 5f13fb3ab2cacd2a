// Command-line front end: spectra of the truncation family (T, M, B, F, D),
// near-periodicity and bound reports, gap-filling counts, and plot-ready
// CSV/JSON output. Identical configuration produces byte-identical files.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toepspec/analysis.hpp"
#include "toepspec/eig.hpp"
#include "toepspec/matrices.hpp"
#include "toepspec/symbol.hpp"
#include "toepspec/textio.hpp"

namespace {

using nlohmann::ordered_json;
using namespace toepspec;

constexpr int kExitBadConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitReportFail = 4;
constexpr int kExitVacuous = 5;

struct RunConfig {
  std::string command;
  int p = 2;
  int q = 1;
  std::string preset = "pm1";  // pm1 | zero_one
  int n = 0;
  int n_start = 0;
  int n_stop = 0;
  int n_step = 0;
  double epsilon = 0.1;
  long tail = 100000;
  std::string matrix = "T";  // T | M | B | F | D
  std::string out;           // empty = stdout
  std::string format = "csv";
  double alpha = 0.1;
  double beta = 0.9;
  int calibration = 0;  // 0 = auto (first quartile)
  double khat = 4.0;
  std::vector<std::string> checks = {"entry", "fbnorm", "sandwich"};
  std::vector<double> lambdas = {0.2, 0.4, 0.6, 0.8};
};

TwoStepSymbol symbol_from(const RunConfig& cfg, const RationalAngle& angle) {
  if (cfg.preset == "pm1") return preset_pm1(angle);
  if (cfg.preset == "zero_one") return preset_zero_one(angle);
  throw std::invalid_argument("preset must be pm1 or zero_one");
}

std::vector<int> grid_from(const RunConfig& cfg, int default_step) {
  if (cfg.n_start <= 0 || cfg.n_stop < cfg.n_start)
    throw std::invalid_argument("need a valid range: --n-start <= --n-stop, both positive");
  const int step = cfg.n_step > 0 ? cfg.n_step : default_step;
  std::vector<int> grid;
  for (int n = cfg.n_start; n <= cfg.n_stop; n += step) grid.push_back(n);
  return grid;
}

// Every output embeds the resolved configuration, in a fixed field order.
ordered_json config_json(const RunConfig& cfg, const RationalAngle& angle) {
  ordered_json j;
  j["command"] = cfg.command;
  j["p"] = cfg.p;
  j["q"] = cfg.q;
  j["omega"] = angle.omega;
  j["L"] = angle.L;
  j["preset"] = cfg.preset;
  j["matrix"] = cfg.matrix;
  j["n"] = cfg.n;
  j["n_start"] = cfg.n_start;
  j["n_stop"] = cfg.n_stop;
  j["n_step"] = cfg.n_step;
  j["epsilon"] = cfg.epsilon;
  j["tail"] = cfg.tail;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["calibration"] = cfg.calibration;
  j["khat"] = cfg.khat;
  j["checks"] = cfg.checks;
  j["lambda"] = cfg.lambdas;
  j["format"] = cfg.format;
  return j;
}

ordered_json angle_json(const RationalAngle& a) {
  ordered_json j;
  j["p"] = a.p;
  j["q"] = a.q;
  j["omega"] = a.omega;
  return j;
}

void write_csv_config(std::ostream& os, const ordered_json& cfg) {
  for (const auto& [key, value] : cfg.items()) {
    os << "# " << key << '=';
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << '\n';
  }
}

// Output sink: file when --out is set (binary stream, LF endings), else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::binary | std::ios::trunc);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ordered_json report_json(const BoundReport& rep) {
  // Same shape as bound_report_to_json, built here for embedding.
  ordered_json j;
  j["bound_id"] = rep.bound_id;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : rep.params) params[key] = value;
  j["params"] = params;
  ordered_json grid = ordered_json::array();
  for (const auto& g : rep.grid) {
    ordered_json point;
    point["n"] = g.n;
    point["ratio"] = g.ratio;
    grid.push_back(point);
  }
  j["grid"] = grid;
  j["fitted_constant"] = rep.fitted_constant;
  j["pass"] = rep.passed();
  j["vacuous"] = rep.vacuous();
  if (!rep.series.empty()) {
    ordered_json series = ordered_json::object();
    for (const auto& [name, values] : rep.series) series[name] = values;
    j["series"] = series;
  }
  return j;
}

void write_json(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

int verdict_exit(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return kExitReportFail;
  for (const auto& r : reports)
    if (r.verdict == Verdict::Vacuous) return kExitVacuous;
  return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
  const RationalAngle angle = make_rational_angle(cfg.p, cfg.q);
  const TwoStepSymbol sym = symbol_from(cfg, angle);
  if (cfg.n < 1) throw std::invalid_argument("spectrum: need --n >= 1");

  HermitianMatrix mat = [&]() -> HermitianMatrix {
    if (cfg.matrix == "T") return toeplitz(sym, cfg.n);
    if (cfg.matrix == "M") return squared_toeplitz(sym, cfg.n);
    if (cfg.matrix == "B") return b_exact(sym, cfg.n);
    if (cfg.matrix == "F") return f_matrix(sym, cfg.n, angle.omega);
    if (cfg.matrix == "D") return cross_matrix(sym, cfg.n, angle.omega);
    throw std::invalid_argument("matrix must be one of T, M, B, F, D");
  }();
  const Spectrum spec = eigenvalues_hermitian(mat);

  Sink sink(cfg.out);
  const ordered_json cj = config_json(cfg, angle);
  if (cfg.format == "json") {
    ordered_json j;
    j["config"] = cj;
    j["angle"] = angle_json(angle);
    j["matrix"] = mat.label();
    j["dim"] = spec.n;
    j["eigenvalues"] = spec.values_asc;
    write_json(sink.stream(), j);
  } else {
    write_csv_config(sink.stream(), cj);
    sink.stream() << "j,eigenvalue\n";
    for (int j = 1; j <= spec.n; ++j)
      sink.stream() << j << ',' << format_sig17(spec.mu(j)) << '\n';
  }
  return 0;
}

int cmd_figure1(RunConfig cfg) {
  if (cfg.n_start == 0 && cfg.n_stop == 0) {
    cfg.n_start = 2;
    cfg.n_stop = 60;
  }
  const RationalAngle angle = make_rational_angle(cfg.p, cfg.q);
  if (cfg.preset != "zero_one")
    throw std::invalid_argument("figure1: requires --preset zero_one");
  const TwoStepSymbol sym = symbol_from(cfg, angle);
  const std::vector<int> grid = grid_from(cfg, 1);

  Sink sink(cfg.out);
  const ordered_json cj = config_json(cfg, angle);
  ordered_json rows = ordered_json::array();
  const bool json = cfg.format == "json";
  if (!json) {
    write_csv_config(sink.stream(), cj);
    sink.stream() << "n,parity,eigenvalue\n";
  }
  for (int n : grid) {
    const Spectrum spec = eigenvalues_hermitian(toeplitz(sym, n));
    const char* parity = (n % 2 == 0) ? "even" : "odd";
    for (double x : spec.values_asc) {
      if (!(x > 0.0 && x < 1.0)) continue;  // gap eigenvalues only
      if (json) {
        ordered_json row;
        row["n"] = n;
        row["parity"] = parity;
        row["eigenvalue"] = x;
        rows.push_back(row);
      } else {
        sink.stream() << n << ',' << parity << ',' << format_sig17(x) << '\n';
      }
    }
  }
  if (json) {
    ordered_json j;
    j["config"] = cj;
    j["angle"] = angle_json(angle);
    j["rows"] = rows;
    write_json(sink.stream(), j);
  }
  return 0;
}

int cmd_periodicity(const RunConfig& cfg) {
  const RationalAngle angle = make_rational_angle(cfg.p, cfg.q);
  const TwoStepSymbol sym = symbol_from(cfg, angle);
  const int step = cfg.n_step > 0 ? cfg.n_step : angle.omega;
  const std::vector<int> grid = grid_from(cfg, angle.omega);
  const BoundReport rep =
      verify_periodicity_rate(sym, cfg.epsilon, grid, step, cfg.calibration);

  // One string per admissible index at the first grid point.
  const Spectrum first = eigenvalues_hermitian(b_exact(sym, grid.front()));
  const int admissible = counting_above(first, cfg.epsilon);
  std::vector<EigenString> strings;
  for (int j = 1; j <= admissible; ++j)
    strings.push_back(track_string(sym, j, grid.front(),
                                   static_cast<int>(grid.size()) - 1, cfg.epsilon, step));

  Sink sink(cfg.out);
  const ordered_json cj = config_json(cfg, angle);
  if (cfg.format == "json") {
    ordered_json j;
    j["config"] = cj;
    j["angle"] = angle_json(angle);
    j["report"] = report_json(rep);
    ordered_json js = ordered_json::array();
    for (const auto& s : strings) {
      ordered_json one;
      one["j"] = s.j;
      one["truncated"] = s.truncated;
      one["truncation_reason"] = s.truncation_reason;
      one["grid"] = s.grid;
      one["mu"] = s.values;
      one["diffs"] = s.diffs;
      js.push_back(one);
    }
    j["strings"] = js;
    write_json(sink.stream(), j);
  } else {
    write_csv_config(sink.stream(), cj);
    sink.stream() << "# report " << rep.bound_id
                  << " pass=" << (rep.passed() ? 1 : 0)
                  << " vacuous=" << (rep.vacuous() ? 1 : 0)
                  << " fitted_constant=" << format_sig17(rep.fitted_constant) << '\n';
    for (const auto& s : strings) write_eigen_string_csv(sink.stream(), s);
  }
  return verdict_exit({rep});
}

int cmd_bounds(const RunConfig& cfg) {
  const RationalAngle angle = make_rational_angle(cfg.p, cfg.q);
  const TwoStepSymbol sym = symbol_from(cfg, angle);
  const std::vector<int> grid = grid_from(cfg, 16);

  const auto enabled = [&cfg](const char* name) {
    for (const auto& c : cfg.checks)
      if (c == name) return true;
    return false;
  };

  std::vector<BoundReport> reports;
  if (enabled("entry")) {
    auto [upperb, blr] = verify_entry_bounds(sym, grid);
    reports.push_back(std::move(upperb));
    reports.push_back(std::move(blr));
  }
  if (enabled("fbnorm")) {
    std::vector<int> fb_grid;
    for (int n : grid)
      if (n > angle.omega) fb_grid.push_back(n);
    if (!fb_grid.empty())
      reports.push_back(verify_fb_norm(sym, fb_grid, cfg.calibration));
  }
  if (enabled("sandwich")) {
    double lambda_min = 1.0;
    for (double lam : cfg.lambdas) lambda_min = std::min(lambda_min, lam);
    std::vector<int> sw_grid;
    for (int n : grid)
      if (n > angle.omega && static_cast<double>(n) >= cfg.khat * angle.omega / lambda_min)
        sw_grid.push_back(n);
    if (sw_grid.size() >= 2) {
      reports.push_back(verify_sandwich(sym, sw_grid, cfg.lambdas, cfg.khat));
    } else {
      BoundReport vac;
      vac.bound_id = "sandwich";
      vac.params.emplace_back("note", "grid below admission threshold");
      reports.push_back(std::move(vac));
    }
  }

  Sink sink(cfg.out);
  const ordered_json cj = config_json(cfg, angle);
  if (cfg.format == "json") {
    ordered_json j;
    j["config"] = cj;
    j["angle"] = angle_json(angle);
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    j["reports"] = arr;
    write_json(sink.stream(), j);
  } else {
    write_csv_config(sink.stream(), cj);
    sink.stream() << "bound_id,n,ratio\n";
    for (const auto& r : reports)
      for (const auto& g : r.grid)
        sink.stream() << r.bound_id << ',' << g.n << ',' << format_sig17(g.ratio) << '\n';
    for (const auto& r : reports)
      sink.stream() << "# " << r.bound_id << " pass=" << (r.passed() ? 1 : 0)
                    << " vacuous=" << (r.vacuous() ? 1 : 0)
                    << " fitted_constant=" << format_sig17(r.fitted_constant) << '\n';
  }
  return verdict_exit(reports);
}

int cmd_gapcount(const RunConfig& cfg) {
  const RationalAngle angle = make_rational_angle(cfg.p, cfg.q);
  const TwoStepSymbol sym = symbol_from(cfg, angle);
  if (cfg.n_start < 2) throw std::invalid_argument("gapcount: need --n-start >= 2");
  const std::vector<int> grid = grid_from(cfg, 32);
  const BoundReport rep = gap_count_report(sym, grid, cfg.alpha, cfg.beta);

  Sink sink(cfg.out);
  const ordered_json cj = config_json(cfg, angle);
  if (cfg.format == "json") {
    ordered_json j;
    j["config"] = cj;
    j["angle"] = angle_json(angle);
    j["report"] = report_json(rep);
    write_json(sink.stream(), j);
  } else {
    write_csv_config(sink.stream(), cj);
    sink.stream() << "n,count,count_over_log_n\n";
    const auto& counts = rep.series.front().second;
    for (size_t i = 0; i < rep.grid.size(); ++i)
      sink.stream() << rep.grid[i].n << ',' << static_cast<long>(counts[i]) << ','
                    << format_sig17(rep.grid[i].ratio) << '\n';
  }
  return verdict_exit({rep});
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"truncated Toeplitz spectra laboratory"};
  app.require_subcommand(1);

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "denominator of the jump location L = pi*q/p");
    sub->add_option("--q", cfg.q, "numerator of the jump location");
    sub->add_option("--preset", cfg.preset, "symbol values: pm1 or zero_one")
        ->check(CLI::IsMember({"pm1", "zero_one"}));
    sub->add_option("--n", cfg.n, "single truncation size");
    sub->add_option("--n-start", cfg.n_start, "range start");
    sub->add_option("--n-stop", cfg.n_stop, "range stop (inclusive)");
    sub->add_option("--n-step", cfg.n_step, "range step (default: command-specific)");
    sub->add_option("--epsilon", cfg.epsilon, "admission threshold in (0,1)");
    sub->add_option("--tail", cfg.tail, "series truncation length");
    sub->add_option("--matrix", cfg.matrix, "which matrix: T, M, B, F, D")
        ->check(CLI::IsMember({"T", "M", "B", "F", "D"}));
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--alpha", cfg.alpha, "gap interval lower edge");
    sub->add_option("--beta", cfg.beta, "gap interval upper edge");
    sub->add_option("--calibration", cfg.calibration,
                    "calibration cutoff n for fit-then-verify (0 = first quartile)");
    sub->add_option("--khat", cfg.khat, "admission constant for the counting sandwich");
    sub->add_option("--checks", cfg.checks, "bounds subset: entry, fbnorm, sandwich")
        ->delimiter(',');
    sub->add_option("--lambda", cfg.lambdas, "sandwich thresholds in (0,1)")
        ->delimiter(',');
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of one matrix");
  CLI::App* periodicity =
      app.add_subcommand("periodicity", "eigenvalue strings and the near-periodicity rate");
  CLI::App* bounds = app.add_subcommand("bounds", "entry/norm/counting bound reports");
  CLI::App* figure1 =
      app.add_subcommand("figure1", "gap eigenvalues of the (0,1) symbol vs n");
  CLI::App* gapcount = app.add_subcommand("gapcount", "eigenvalue counts in a gap interval");
  for (CLI::App* sub : {spectrum, periodicity, bounds, figure1, gapcount}) add_common(sub);
  figure1->get_option("--preset")->default_str("zero_one");

  CLI11_PARSE(app, argc, argv);

  if (figure1->parsed() && figure1->get_option("--preset")->count() == 0)
    cfg.preset = "zero_one";

  try {
    if (spectrum->parsed()) {
      cfg.command = "spectrum";
      return cmd_spectrum(cfg);
    }
    if (periodicity->parsed()) {
      cfg.command = "periodicity";
      return cmd_periodicity(cfg);
    }
    if (bounds->parsed()) {
      cfg.command = "bounds";
      return cmd_bounds(cfg);
    }
    if (figure1->parsed()) {
      cfg.command = "figure1";
      return cmd_figure1(cfg);
    }
    if (gapcount->parsed()) {
      cfg.command = "gapcount";
      return cmd_gapcount(cfg);
    }
  } catch (const SolverError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitBadConfig;
  }
  return 0;
}
