#include "mdyck/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "mdyck/bijection.hpp"

namespace mdyck {

LukaSampler::LukaSampler(std::int64_t m, std::int64_t n, CountedBitSource& src, int grouping)
    : n_(n), src_(&src), gen_(m, grouping), path_(m), bits_at_start_(src.bits_consumed()) {
  if (n < 1) throw std::invalid_argument("sample length must be at least 1");
  if (n % (m + 1) == 0)
    throw std::invalid_argument("no m-Lukasiewicz path has a length divisible by m + 1");
  path_.reserve(n);
}

void LukaSampler::step() {
  if (path_.size() >= n_) throw std::logic_error("sampler loop already complete");
  path_.push_back(gen_.draw_step(*src_));
  meter_.touch();
  const std::int64_t h = height(path_);
  if (h < 0) {
    if (h < -path_.m()) throw std::logic_error("sampler invariant broken: height below -m");
    const std::int64_t i = path_.size();
    const std::int64_t point = draw_uniform(*src_, i);
    unfold_in_place(path_, point, meter_);
    if (record_events_) events_.push_back({i, point});
  }
}

SampleReport LukaSampler::finish() {
  while (path_.size() < n_) step();
  const ReducedForm rf = reduced_form(path_);
  SampleReport report;
  report.prefix_height = height(path_);
  const auto decoration = draw_decoration(*src_, path_.m(), rf.h_bar, rf.r);
  fold_in_place(path_, decoration, meter_);
  report.height_final = height(path_);
  report.bits_consumed = src_->bits_consumed() - bits_at_start_;
  report.memory_accesses = meter_.count;
  report.unfold_events = std::move(events_);
  report.path = std::move(path_);
  return report;
}

SampleReport sample_mluka(std::int64_t m, std::int64_t n, CountedBitSource& src, int grouping) {
  LukaSampler sampler(m, n, src, grouping);
  return sampler.finish();
}

SampleReport sample_mdyck(std::int64_t m, std::int64_t n, CountedBitSource& src, int grouping) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (n < 0 || n % (m + 1) != 0)
    throw std::invalid_argument("m-Dyck path length must be a nonnegative multiple of m + 1");
  SampleReport report = sample_mluka(m, n + 1, src, grouping);
  if (report.path[n] != Step::D) throw std::logic_error("m-Lukasiewicz path did not end with D");
  report.path.pop_back();
  report.height_final = height(report.path);
  return report;
}

double branch_probability(std::int64_t m, std::int64_t i) {
  const std::int64_t r = i % (m + 1);
  return static_cast<double>(r) / static_cast<double>(m * i + r);
}

CostTable run_cost_experiment(const CostExperimentConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("cost experiment needs at least one sample");
  // Validates m, n and grouping before any thread starts.
  { CountedBitSource probe(0); LukaSampler check(config.m, config.n, probe, config.grouping); }

  const auto samples = static_cast<std::size_t>(config.samples);
  CostTable table;
  table.n = config.n;
  table.bits.resize(samples);
  table.accesses.resize(samples);
  table.prefix_heights.resize(samples);

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1U, static_cast<unsigned>(std::min<std::size_t>(samples, 256)));
  std::vector<std::vector<std::uint64_t>> branch_parts(
      threads, std::vector<std::uint64_t>(static_cast<std::size_t>(config.n) + 1, 0));

  auto work = [&](unsigned worker) {
    auto& branches = branch_parts[worker];
    for (std::size_t run = worker; run < samples; run += threads) {
      CountedBitSource src(derive_seed(config.seed, run));
      const SampleReport rep = sample_mluka(config.m, config.n, src, config.grouping);
      table.bits[run] = rep.bits_consumed;
      table.accesses[run] = rep.memory_accesses;
      table.prefix_heights[run] = rep.prefix_height;
      for (const auto& e : rep.unfold_events) ++branches[static_cast<std::size_t>(e.iteration)];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  table.branch_counts.assign(static_cast<std::size_t>(config.n) + 1, 0);
  for (const auto& part : branch_parts)
    for (std::size_t i = 0; i < part.size(); ++i) table.branch_counts[i] += part[i];
  const auto n = static_cast<double>(config.n);
  for (std::size_t run = 0; run < samples; ++run) {
    table.bits_per_step.add(static_cast<double>(table.bits[run]) / n);
    table.accesses_per_step.add(static_cast<double>(table.accesses[run]) / n);
    table.prefix_height.add(static_cast<double>(table.prefix_heights[run]));
  }
  return table;
}

}  // namespace mdyck
