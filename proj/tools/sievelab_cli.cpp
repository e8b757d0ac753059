#include <CLI11.hpp>

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sievelab/duality.hpp"
#include "sievelab/enumerate.hpp"
#include "sievelab/errors.hpp"
#include "sievelab/experiments.hpp"
#include "sievelab/report_io.hpp"
#include "sievelab/rng.hpp"
#include "sievelab/spacing.hpp"
#include "sievelab/version.hpp"

namespace {

using namespace sievelab;

// min_spacing is quadratic in the point count; past this the summary
// omits it rather than stalling.
constexpr std::int64_t kSpacingPointCap = 20'000;

struct Options {
  int n = 1;
  std::int64_t X = 4;
  std::int64_t N = 1;
  double Y = 0.25;
  std::string set_kind = "S";
  std::string coeff_kind = "ones";
  std::string coeff_file;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::int64_t cap = EnumLimits{}.max_points;

  bool list_points = false;
  bool counts = false;
  std::int64_t kext = 0;  // 0: default 50 N
  int size = 5;
  int trials = 100;
  double tol = 1e-10;
  std::string quantity = "set_size";
  std::int64_t from = 8;
  std::int64_t to = 64;
  double factor = 2.0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + opt.out);
  f << text;
}

std::string render(const Options& opt, const nlohmann::ordered_json& j,
                   const std::string& csv) {
  if (opt.format == "csv") return csv;
  return j.dump(2) + "\n";
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_i64(const std::string& s, std::int64_t& v) {
  try {
    std::size_t pos = 0;
    v = std::stoll(s, &pos);
    return pos == s.size() && !s.empty();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_f64(const std::string& s, double& v) {
  try {
    std::size_t pos = 0;
    v = std::stod(s, &pos);
    return pos == s.size() && !s.empty();
  } catch (const std::exception&) {
    return false;
  }
}

// CSV rows "alpha_1,...,alpha_n,re,im"; a non-numeric first row is
// treated as a header.  Entries not listed stay zero; a repeated alpha is
// an error.
CoeffBox load_coeff_file(const std::string& path, int n, std::int64_t N) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open coefficient file: " + path);

  CoeffBox box;
  box.n = n;
  box.N = N;
  if (box.size() > kDenseBoxCap)
    throw resource_cap_error("coefficient box exceeds dense cap");
  box.values = Eigen::VectorXcd::Zero(box.size());

  std::vector<bool> seen(static_cast<std::size_t>(box.size()), false);
  std::string line;
  std::int64_t line_no = 0;
  std::int64_t rows = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    std::int64_t first = 0;
    if (line_no == 1 && !parse_i64(fields[0], first)) continue;  // header
    if (static_cast<int>(fields.size()) != n + 2)
      throw std::invalid_argument("coefficient file line " +
                                  std::to_string(line_no) + ": expected " +
                                  std::to_string(n + 2) + " fields");
    std::vector<std::int64_t> alpha(n);
    for (int i = 0; i < n; ++i) {
      if (!parse_i64(fields[i], alpha[i]) || std::abs(alpha[i]) > N)
        throw std::invalid_argument("coefficient file line " +
                                    std::to_string(line_no) +
                                    ": bad index field " + fields[i]);
    }
    double re = 0.0, im = 0.0;
    if (!parse_f64(fields[n], re) || !parse_f64(fields[n + 1], im))
      throw std::invalid_argument("coefficient file line " +
                                  std::to_string(line_no) + ": bad value");
    std::int64_t idx = box.index_of(alpha);
    if (seen[static_cast<std::size_t>(idx)])
      throw std::invalid_argument("coefficient file line " +
                                  std::to_string(line_no) +
                                  ": duplicate index");
    seen[static_cast<std::size_t>(idx)] = true;
    box.values[idx] = std::complex<double>(re, im);
    ++rows;
  }
  if (rows == 0)
    std::cerr << "warning: coefficient file has no data rows; box is zero\n";
  return box;
}

Eigen::VectorXcd random_vector(std::int64_t size, std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0));
  Eigen::VectorXcd b(size);
  for (std::int64_t i = 0; i < size; ++i) {
    double re = rng.uniform_pm1();
    double im = rng.uniform_pm1();
    b[i] = std::complex<double>(re, im);
  }
  return b;
}

int run_enumerate(const Options& opt) {
  SetKind kind = parse_set_kind(opt.set_kind);
  EnumLimits limits{opt.cap};
  PointSet set = enumerate_set(kind, opt.n, opt.X, limits);

  EnumSummary summary;
  summary.set_kind = opt.set_kind;
  summary.n = opt.n;
  summary.X = opt.X;
  summary.count = set.size();
  if (set.size() == 0) std::cerr << "warning: set is empty\n";
  if (set.size() >= 2 && set.size() <= kSpacingPointCap)
    summary.min_spacing = min_spacing(set);
  if (opt.list_points) {
    std::vector<std::string> pts;
    pts.reserve(static_cast<std::size_t>(set.size()));
    for (const auto& p : set.points) pts.push_back(p.str());
    summary.points = std::move(pts);
  }
  emit(opt, render(opt, to_json(summary),
                   csv_header(summary) + "\n" + csv_row(summary) + "\n"));
  return 0;
}

int run_ratio(const Options& opt) {
  ExperimentReport rep;
  if (!opt.coeff_file.empty()) {
    SetKind kind = parse_set_kind(opt.set_kind);
    EnumLimits limits{opt.cap};
    PointSet set = enumerate_set(kind, opt.n, opt.X, limits);
    CoeffBox box = load_coeff_file(opt.coeff_file, opt.n, opt.N);
    rep = run_ratio_experiment(set, box, "file", opt.seed);
  } else {
    rep = run_ratio_experiment(opt.n, opt.X, opt.N,
                               parse_set_kind(opt.set_kind),
                               parse_coeff_kind(opt.coeff_kind), opt.seed,
                               EnumLimits{opt.cap});
  }
  emit(opt,
       render(opt, to_json(rep), csv_header(rep) + "\n" + csv_row(rep) + "\n"));
  return 0;
}

int run_spacing(const Options& opt) {
  SetKind kind = parse_set_kind(opt.set_kind);
  EnumLimits limits{opt.cap};
  PointSet set = enumerate_set(kind, opt.n, opt.X, limits);
  SpacingReport rep = m_of_bucketed(set, opt.Y, opt.counts);
  emit(opt,
       render(opt, to_json(rep), csv_header(rep) + "\n" + csv_row(rep) + "\n"));
  return 0;
}

int run_kernel(const Options& opt) {
  SetKind kind = parse_set_kind(opt.set_kind);
  EnumLimits limits{opt.cap};
  PointSet set = enumerate_set(kind, opt.n, opt.X, limits);
  std::int64_t kext = opt.kext > 0 ? opt.kext : 50 * opt.N;
  Eigen::VectorXcd b = random_vector(set.size(), opt.seed);
  KernelIdentityReport rep = kernel_identity_check(set, b, opt.N, kext);
  emit(opt,
       render(opt, to_json(rep), csv_header(rep) + "\n" + csv_row(rep) + "\n"));
  return 0;
}

int run_duality(const Options& opt) {
  if (opt.size < 1 || opt.trials < 1)
    throw std::invalid_argument("size and trials must be positive");
  double max_gap = 0.0;
  double gap_sum = 0.0;
  double max_constant = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    SplitMix64 rng(mix_seed(opt.seed, static_cast<std::uint64_t>(t)));
    auto rows = static_cast<Eigen::Index>(1 + rng.below(opt.size));
    auto cols = static_cast<Eigen::Index>(1 + rng.below(opt.size));
    ComplexMatrix T(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) {
        double re = rng.uniform_pm1();
        double im = rng.uniform_pm1();
        T(i, j) = std::complex<double>(re, im);
      }
    double gap = duality_gap(T, opt.tol);
    max_gap = std::max(max_gap, gap);
    gap_sum += gap;
    max_constant = std::max(max_constant, forward_constant(T, opt.tol));
  }
  double mean_gap = gap_sum / opt.trials;

  nlohmann::ordered_json j;
  j["experiment"] = "duality";
  {
    nlohmann::ordered_json params;
    params["size"] = opt.size;
    params["trials"] = opt.trials;
    params["tol"] = opt.tol;
    params["seed"] = opt.seed;
    j["params"] = params;
  }
  {
    nlohmann::ordered_json results;
    results["max_gap"] = max_gap;
    results["mean_gap"] = mean_gap;
    results["max_constant"] = max_constant;
    j["results"] = results;
  }
  j["tool_version"] = kToolVersion;

  std::string csv =
      "experiment,size,trials,tol,seed,max_gap,mean_gap,max_constant\n";
  csv += "duality," + std::to_string(opt.size) + "," +
         std::to_string(opt.trials) + "," + format_real(opt.tol) + "," +
         std::to_string(opt.seed) + "," + format_real(max_gap) + "," +
         format_real(mean_gap) + "," + format_real(max_constant) + "\n";
  emit(opt, render(opt, j, csv));
  return 0;
}

int run_counterexample(const Options& opt) {
  ExperimentReport rep =
      run_ratio_experiment(opt.n, opt.X, opt.N, SetKind::prime_line_T,
                           CoeffKind::ones, opt.seed, EnumLimits{opt.cap});
  rep.experiment = "counterexample";
  emit(opt,
       render(opt, to_json(rep), csv_header(rep) + "\n" + csv_row(rep) + "\n"));
  return 0;
}

int run_sweep(const Options& opt) {
  if (opt.from < 1 || opt.to < opt.from)
    throw std::invalid_argument("sweep needs 1 <= from <= to");
  if (opt.factor <= 1.0)
    throw std::invalid_argument("sweep factor must exceed 1");

  std::vector<std::int64_t> grid;
  for (std::int64_t x = opt.from; x <= opt.to;) {
    grid.push_back(x);
    auto next = static_cast<std::int64_t>(std::llround(x * opt.factor));
    x = std::max(x + 1, next);
  }

  SetKind kind = parse_set_kind(opt.set_kind);
  EnumLimits limits{opt.cap};
  SweepReport rep;
  rep.quantity = opt.quantity;
  rep.n = opt.n;
  rep.N = opt.N;
  rep.Y = opt.Y;
  rep.set_kind = opt.set_kind;
  rep.coeff_kind = opt.coeff_kind;
  rep.seed = opt.seed;
  for (std::int64_t x : grid) {
    double y = 0.0;
    if (opt.quantity == "set_size") {
      y = static_cast<double>(enumerate_set(kind, opt.n, x, limits).size());
    } else if (opt.quantity == "m_of") {
      PointSet set = enumerate_set(kind, opt.n, x, limits);
      y = static_cast<double>(m_of_bucketed(set, opt.Y).m_value);
    } else if (opt.quantity == "lemma2_bound") {
      y = lemma2_bound(opt.n, x, opt.Y);
    } else if (opt.quantity == "ratio") {
      y = run_ratio_experiment(opt.n, x, opt.N, kind,
                               parse_coeff_kind(opt.coeff_kind), opt.seed,
                               limits)
              .ratio;
    } else {
      throw std::invalid_argument("unknown sweep quantity: " + opt.quantity);
    }
    rep.xs.push_back(static_cast<double>(x));
    rep.ys.push_back(y);
  }
  rep.slope = slope_fit(rep.xs, rep.ys);
  emit(opt, render(opt, to_json(rep), sweep_csv(rep)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large sieve inequality experiments on rational torus points"};
  app.set_version_flag("--version", sievelab::kToolVersion);
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "Write output to this file");
    cmd->add_option("--cap", opt.cap, "Point budget for enumeration")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "Count a point family; optionally list the points");
  c_enum->add_option("--n", opt.n, "Dimension")->check(CLI::PositiveNumber);
  c_enum->add_option("--X", opt.X, "Order / level bound")
      ->check(CLI::PositiveNumber);
  c_enum->add_option("--set", opt.set_kind,
                     "order_ball | S | prime_line | farey_line");
  c_enum->add_flag("--list", opt.list_points, "Include the full point list");
  add_common(c_enum);

  CLI::App* c_ratio = app.add_subcommand(
      "ratio", "Sieve sum over a point family against the majorants");
  c_ratio->add_option("--n", opt.n, "Dimension")->check(CLI::PositiveNumber);
  c_ratio->add_option("--X", opt.X, "Order / level bound")
      ->check(CLI::PositiveNumber);
  c_ratio->add_option("--N", opt.N, "Coefficient box radius")
      ->check(CLI::PositiveNumber);
  c_ratio->add_option("--set", opt.set_kind, "Point family");
  c_ratio->add_option("--coeff", opt.coeff_kind, "ones | random | delta");
  c_ratio->add_option("--coeff-file", opt.coeff_file,
                      "CSV file alpha_1,...,alpha_n,re,im");
  c_ratio->add_option("--seed", opt.seed, "Random seed");
  add_common(c_ratio);

  CLI::App* c_spacing = app.add_subcommand(
      "spacing", "Max neighbor count within distance Y, with bound");
  c_spacing->add_option("--n", opt.n, "Dimension")->check(CLI::PositiveNumber);
  c_spacing->add_option("--X", opt.X, "Order / level bound")
      ->check(CLI::PositiveNumber);
  c_spacing->add_option("--Y", opt.Y, "Neighborhood radius")
      ->check(CLI::PositiveNumber);
  c_spacing->add_option("--set", opt.set_kind, "Point family");
  c_spacing->add_flag("--counts", opt.counts, "Include per-point counts");
  add_common(c_spacing);

  CLI::App* c_kernel = app.add_subcommand(
      "kernel", "Pair-sum versus alpha-sum kernel identity check");
  c_kernel->add_option("--n", opt.n, "Dimension")->check(CLI::PositiveNumber);
  c_kernel->add_option("--X", opt.X, "Order / level bound")
      ->check(CLI::PositiveNumber);
  c_kernel->add_option("--N", opt.N, "Box radius")->check(CLI::PositiveNumber);
  c_kernel->add_option("--kext", opt.kext,
                       "Extended box radius (default 50 N)");
  c_kernel->add_option("--set", opt.set_kind, "Point family");
  c_kernel->add_option("--seed", opt.seed, "Random seed for the b vector");
  add_common(c_kernel);

  CLI::App* c_duality = app.add_subcommand(
      "duality", "Forward versus dual best constants on random matrices");
  c_duality->add_option("--size", opt.size, "Max matrix dimension")
      ->check(CLI::PositiveNumber);
  c_duality->add_option("--trials", opt.trials, "Number of matrices")
      ->check(CLI::PositiveNumber);
  c_duality->add_option("--tol", opt.tol, "Power iteration tolerance")
      ->check(CLI::PositiveNumber);
  c_duality->add_option("--seed", opt.seed, "Random seed");
  add_common(c_duality);

  CLI::App* c_counter = app.add_subcommand(
      "counterexample", "Exact prime-line sum against the float path");
  c_counter->add_option("--n", opt.n, "Dimension")->check(CLI::PositiveNumber);
  c_counter->add_option("--X", opt.X, "Prime bound")
      ->check(CLI::PositiveNumber);
  c_counter->add_option("--N", opt.N, "Coefficient box radius")
      ->check(CLI::PositiveNumber);
  add_common(c_counter);

  CLI::App* c_sweep = app.add_subcommand(
      "sweep", "Quantity over a geometric X grid with a fitted slope");
  c_sweep->add_option("--quantity", opt.quantity,
                      "set_size | m_of | lemma2_bound | ratio");
  c_sweep->add_option("--n", opt.n, "Dimension")->check(CLI::PositiveNumber);
  c_sweep->add_option("--N", opt.N, "Coefficient box radius")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--Y", opt.Y, "Neighborhood radius")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--set", opt.set_kind, "Point family");
  c_sweep->add_option("--coeff", opt.coeff_kind, "Coefficient kind");
  c_sweep->add_option("--seed", opt.seed, "Random seed");
  c_sweep->add_option("--from", opt.from, "First X")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--to", opt.to, "Last X")->check(CLI::PositiveNumber);
  c_sweep->add_option("--factor", opt.factor, "Grid ratio");
  add_common(c_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_enum)) return run_enumerate(opt);
    if (app.got_subcommand(c_ratio)) return run_ratio(opt);
    if (app.got_subcommand(c_spacing)) return run_spacing(opt);
    if (app.got_subcommand(c_kernel)) return run_kernel(opt);
    if (app.got_subcommand(c_duality)) return run_duality(opt);
    if (app.got_subcommand(c_counter)) return run_counterexample(opt);
    if (app.got_subcommand(c_sweep)) return run_sweep(opt);
  } catch (const sievelab::resource_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sievelab::invariant_violation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sievelab::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
