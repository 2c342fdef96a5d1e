// Command-line front end: sampling, counting, fold/unfold, cost benchmarks,
// limit-law tables and the exhaustive oracle suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdyck/bijection.hpp"
#include "mdyck/enumeration.hpp"
#include "mdyck/limit_law.hpp"
#include "mdyck/sampler.hpp"
#include "mdyck/verify.hpp"

namespace {

using namespace mdyck;

struct Options {
  int precision = 12;

  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t count = 1;
  std::uint64_t seed = 0;
  int grouping = 1;
  bool stats = false;
  bool dyck = false;

  std::string path;
  std::string decoration;
  std::int64_t point = 1;

  std::vector<std::int64_t> bench_n{1000, 10000, 100000};
  std::int64_t samples = 1000;
  unsigned threads = 0;

  double xmax = 8.0;
  double dx = 1e-4;
  double out_step = 0.01;
  std::string out;
  std::int64_t simulate = 0;

  std::int64_t max_n = 14;
};

std::vector<std::int64_t> parse_decoration(const std::string& text) {
  std::vector<std::int64_t> deco;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const long long value = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed decoration entry '" + item + "'");
    deco.push_back(value);
  }
  if (deco.empty()) throw std::invalid_argument("empty decoration");
  return deco;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

int run_sample(const Options& o) {
  CountedBitSource src(o.seed);
  for (std::int64_t k = 0; k < o.count; ++k) {
    const SampleReport rep = o.dyck ? sample_mdyck(o.m, o.n, src, o.grouping)
                                    : sample_mluka(o.m, o.n, src, o.grouping);
    std::cout << rep.path.to_string() << '\n';
    if (o.stats) {
      nlohmann::json j;
      j["bits"] = rep.bits_consumed;
      j["accesses"] = rep.memory_accesses;
      j["unfolds"] = nlohmann::json::array();
      for (const auto& e : rep.unfold_events) j["unfolds"].push_back({{"i", e.iteration}, {"point", e.point}});
      std::cout << j.dump() << '\n';
    }
  }
  return 0;
}

int run_count(const Options& o) {
  std::cout << "L_n=" << luka_count(o.m, o.n) << " P_n(m)=" << prefix_weighted_count(o.m, o.n);
  if (o.n % (o.m + 1) == 0) std::cout << " D_n=" << fuss_catalan(o.m, o.n / (o.m + 1));
  std::cout << '\n';
  return 0;
}

int run_fold(const Options& o) {
  const PointedLuka v = fold({Path::parse(o.path, o.m), parse_decoration(o.decoration)});
  std::cout << v.path.to_string() << ' ' << v.point << '\n';
  return 0;
}

int run_unfold(const Options& o) {
  const DecoratedPrefix w = unfold({Path::parse(o.path, o.m), o.point});
  std::cout << w.path.to_string() << ' ' << join(w.decoration) << '\n';
  return 0;
}

int run_bench(const Options& o) {
  std::cout << "n\tmean_R/n\tmean_M/n\tvar_M/n^2\n";
  for (const std::int64_t n : o.bench_n) {
    const CostTable t = run_cost_experiment({o.m, n, o.samples, o.seed, o.grouping, o.threads});
    std::cout << n << '\t' << t.bits_per_step.mean() << '\t' << t.accesses_per_step.mean() << '\t'
              << t.accesses_per_step.variance() << '\n';
  }
  return 0;
}

int run_limitlaw(const Options& o) {
  const DistributionTable table = solve_F(o.xmax, o.dx);
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot open " + o.out);
    file << std::setprecision(o.precision);
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  const auto points = static_cast<std::int64_t>(std::llround(o.xmax / o.out_step));

  if (o.simulate <= 0) {
    for (std::int64_t k = 0; k <= points; ++k) {
      const double x = static_cast<double>(k) * o.out_step;
      out << x << '\t' << table.cdf(x) << '\n';
    }
    return 0;
  }

  CountedBitSource src(o.seed);
  std::vector<double> draws(static_cast<std::size_t>(o.simulate));
  for (auto& d : draws) d = simulate_X(src);
  const double ks = ks_distance(draws, [&](double x) { return table.cdf(x); });
  std::size_t below = 0;
  for (std::int64_t k = 0; k <= points; ++k) {
    const double x = static_cast<double>(k) * o.out_step;
    while (below < draws.size() && draws[below] <= x) ++below;
    out << x << '\t' << static_cast<double>(below) / static_cast<double>(draws.size()) << '\t'
        << table.cdf(x) << '\n';
  }
  out << "# ks=" << ks << '\n';
  return 0;
}

int run_verify(const Options& o) {
  const VerifyReport report = run_oracle_suite(o.m, o.max_n, &std::cout);
  for (const auto& f : report.failures) std::cerr << "FAIL " << f << '\n';
  std::cout << (report.ok() ? "ok" : "FAILED") << ": " << report.checks << " checks, "
            << report.failures.size() << " failures\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform m-Dyck and m-Lukasiewicz path sampling via the folding bijection"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--precision", o.precision, "Significant digits for numeric output")
      ->check(CLI::Range(1, 17));

  auto* sample = app.add_subcommand("sample", "Draw uniform random paths");
  sample->add_option("--m", o.m, "Down-step size")->required()->check(CLI::PositiveNumber);
  sample->add_option("--n", o.n, "Path length")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--count", o.count, "Number of paths")->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "Random seed");
  sample->add_option("--grouping", o.grouping, "Steps drawn jointly per Knuth-Yao walk")
      ->check(CLI::Range(1, BernoulliGen::kMaxGrouping));
  sample->add_flag("--stats", o.stats, "Emit a JSON cost report after each path");
  sample->add_flag("--dyck", o.dyck, "Sample m-Dyck paths instead of m-Lukasiewicz paths");

  auto* count = app.add_subcommand("count", "Print exact path counts");
  count->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  count->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* fold_cmd = app.add_subcommand("fold", "Fold a decorated m-Dyck prefix");
  fold_cmd->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  fold_cmd->add_option("--path", o.path, "Steps over {U, D}")->required();
  fold_cmd->add_option("--decoration", o.decoration, "Comma-separated a_0,...,a_k")->required();

  auto* unfold_cmd = app.add_subcommand("unfold", "Unfold a pointed m-Lukasiewicz path");
  unfold_cmd->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  unfold_cmd->add_option("--path", o.path, "Steps over {U, D}")->required();
  unfold_cmd->add_option("--point", o.point, "Pointed step, 1-based")->required();

  auto* bench = app.add_subcommand("bench", "Mean bit and memory costs per step");
  bench->add_option("--m", o.m)->check(CLI::PositiveNumber);
  bench->add_option("--n", o.bench_n, "Path lengths")->delimiter(',');
  bench->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed);
  bench->add_option("--grouping", o.grouping)->check(CLI::Range(1, BernoulliGen::kMaxGrouping));
  bench->add_option("--threads", o.threads, "Worker threads, 0 for all cores");

  auto* limitlaw = app.add_subcommand("limitlaw", "Tabulate the limit distribution F");
  limitlaw->add_option("--xmax", o.xmax)->check(CLI::PositiveNumber);
  limitlaw->add_option("--dx", o.dx, "Solver step")->check(CLI::PositiveNumber);
  limitlaw->add_option("--step", o.out_step, "Output spacing")->check(CLI::PositiveNumber);
  limitlaw->add_option("--out", o.out, "Output file (default stdout)");
  limitlaw->add_option("--simulate", o.simulate, "Monte Carlo draws for an ECDF and KS distance");
  limitlaw->add_option("--seed", o.seed);

  auto* verify = app.add_subcommand("verify", "Run the exhaustive oracle suite");
  verify->add_option("--m", o.m)->check(CLI::PositiveNumber);
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(std::int64_t{1}, kMaxEnumerationLength));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::cout << std::setprecision(o.precision);
  try {
    if (*sample) return run_sample(o);
    if (*count) return run_count(o);
    if (*fold_cmd) return run_fold(o);
    if (*unfold_cmd) return run_unfold(o);
    if (*bench) return run_bench(o);
    if (*limitlaw) return run_limitlaw(o);
    if (*verify) return run_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
