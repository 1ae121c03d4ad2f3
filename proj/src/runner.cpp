#include "irvs/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irvs/baselines.hpp"
#include "irvs/channel.hpp"

namespace irvs {

std::vector<SchemeSpec> default_schemes() {
  return {{SchemeKind::kTdma, 0}, {SchemeKind::kNoma, 0}, {SchemeKind::kRps, 0},
          {SchemeKind::kDps, 1},  {SchemeKind::kDps, 2},  {SchemeKind::kCps, 0}};
}

SchemeSpec parse_scheme(const std::string& token, int default_bits) {
  std::string t;
  for (char c : token) t.push_back(static_cast<char>(std::tolower(c)));
  auto bits_suffix = [&](std::size_t prefix_len) {
    const std::string digits = t.substr(prefix_len);
    if (digits.empty()) return default_bits;
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad scheme token: " + token);
    return std::stoi(digits);
  };
  if (t == "tdma") return {SchemeKind::kTdma, 0};
  if (t == "noma") return {SchemeKind::kNoma, 0};
  if (t == "rps") return {SchemeKind::kRps, 0};
  if (t == "cps") return {SchemeKind::kCps, 0};
  if (t.rfind("rpsd", 0) == 0) return {SchemeKind::kRpsDiscrete, bits_suffix(4)};
  if (t.rfind("dps", 0) == 0) return {SchemeKind::kDps, bits_suffix(3)};
  throw std::invalid_argument("unknown scheme token: " + token);
}

std::vector<SchemeSpec> parse_scheme_list(const std::string& csv, int default_bits) {
  std::vector<SchemeSpec> out;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const SchemeSpec s = parse_scheme(item, default_bits);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

namespace {

struct DropContext {
  const SystemConfig& config;
  const ChannelRealization& ch;
  double noise_var;
  int drop_index;
  // continuous AO per user, shared by the CPS and DPS schemes of this drop
  mutable std::vector<std::optional<AoResult>> ao;

  const AoResult& ao_for(int user) const {
    if (!ao[user])
      ao[user] = alternating_optimize(ch.stacked_g[user], ch.stacked_h,
                                      ch.direct[user], config.ao_iterations);
    return *ao[user];
  }
};

std::vector<double> evaluate_scheme(const DropContext& ctx, const SchemeSpec& scheme) {
  const SystemConfig& cfg = ctx.config;
  const int k_users = cfg.n_users;
  std::vector<double> rates;
  switch (scheme.kind) {
    case SchemeKind::kTdma:
      return tdma_rate_no_irs(ctx.ch.direct, cfg.tx_power_watts, ctx.noise_var);
    case SchemeKind::kNoma:
      return noma_rates(ctx.ch.direct, cfg.tx_power_watts, ctx.noise_var);
    case SchemeKind::kRps:
    case SchemeKind::kRpsDiscrete: {
      std::optional<DiscretePhaseSet> set;
      if (scheme.kind == SchemeKind::kRpsDiscrete)
        set = DiscretePhaseSet::from_bits(scheme.bits);
      rates.reserve(k_users);
      for (int k = 0; k < k_users; ++k) {
        Rng rng(derive_seed(cfg.master_seed, ctx.drop_index,
                            random_phase_stream(set ? scheme.bits : 0, k)));
        rates.push_back(rps_rate(ctx.ch.stacked_g[k], ctx.ch.stacked_h,
                                 ctx.ch.direct[k], set, cfg.tx_power_watts,
                                 ctx.noise_var, k_users, rng));
      }
      return rates;
    }
    case SchemeKind::kDps: {
      const DiscretePhaseSet set = DiscretePhaseSet::from_bits(scheme.bits);
      rates.reserve(k_users);
      for (int k = 0; k < k_users; ++k) {
        const PhaseVector quantized = quantize_phases(ctx.ao_for(k).phases, set);
        const arma::cx_rowvec eff =
            effective_channel(ctx.ch.stacked_g[k], quantized, ctx.ch.stacked_h,
                              ctx.ch.direct[k]);
        const Beamformer w = mrt(eff);  // one final MRT on the quantized channel
        rates.push_back(user_rate(eff, w, cfg.tx_power_watts, ctx.noise_var, k_users));
      }
      return rates;
    }
    case SchemeKind::kCps: {
      rates.reserve(k_users);
      for (int k = 0; k < k_users; ++k) {
        const AoResult& ao = ctx.ao_for(k);
        const arma::cx_rowvec eff =
            effective_channel(ctx.ch.stacked_g[k], ao.phases, ctx.ch.stacked_h,
                              ctx.ch.direct[k]);
        rates.push_back(user_rate(eff, ao.w, cfg.tx_power_watts, ctx.noise_var, k_users));
      }
      return rates;
    }
  }
  throw std::logic_error("unreachable scheme kind");
}

void evaluate_drop(const ExperimentSpec& spec, double noise_var, int drop,
                   std::vector<DropResult>& out) {
  const DropGeometry geometry = sample_geometry(spec.config, drop);
  Rng ch_rng(derive_seed(spec.config.master_seed, drop, kChannelStream));
  const ChannelRealization ch = realize_channels(spec.config, geometry, ch_rng);
  DropContext ctx{spec.config, ch, noise_var, drop, {}};
  ctx.ao.resize(spec.config.n_users);

  const std::size_t base = static_cast<std::size_t>(drop) * spec.schemes.size();
  for (std::size_t si = 0; si < spec.schemes.size(); ++si) {
    DropResult r;
    r.drop_index = drop;
    r.scheme = spec.schemes[si];
    r.per_user_rates = evaluate_scheme(ctx, r.scheme);
    r.sum_rate = sum_rate(r.per_user_rates);
    for (double v : r.per_user_rates)
      if (!std::isfinite(v))
        throw std::runtime_error("non-finite rate in drop " + std::to_string(drop) +
                                 ", scheme " + r.scheme.label());
    out[base + si] = std::move(r);
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.config.validate();
  if (spec.schemes.empty())
    throw std::invalid_argument("experiment: at least one scheme is required");
  for (const SchemeSpec& s : spec.schemes)
    if ((s.kind == SchemeKind::kDps || s.kind == SchemeKind::kRpsDiscrete) && s.bits < 1)
      throw std::invalid_argument("experiment: discrete scheme needs bits >= 1");

  const double noise_var = noise_power(spec.config.bandwidth_hz, spec.config.temperature_k,
                                       spec.config.noise_figure_db);
  const int n_drops = spec.config.n_drops;
  ExperimentResult result;
  result.drops.resize(static_cast<std::size_t>(n_drops) * spec.schemes.size());

  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    for (int d = 0; d < n_drops; ++d) evaluate_drop(spec, noise_var, d, result.drops);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int d = w; d < n_drops; d += workers)
            evaluate_drop(spec, noise_var, d, result.drops);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  result.summaries.reserve(spec.schemes.size());
  for (std::size_t si = 0; si < spec.schemes.size(); ++si) {
    std::vector<double> sums;
    sums.reserve(n_drops);
    for (int d = 0; d < n_drops; ++d)
      sums.push_back(result.drops[static_cast<std::size_t>(d) * spec.schemes.size() + si]
                         .sum_rate);
    CdfSummary s;
    s.scheme = spec.schemes[si];
    s.samples = sums.size();
    s.p5 = percentile(sums, 0.05);
    s.p50 = percentile(sums, 0.50);
    result.summaries.push_back(s);
  }
  return result;
}

namespace {

std::ofstream open_or_throw(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

void print_fixed(std::ofstream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out << buf;
}

}  // namespace

void write_results(const std::vector<DropResult>& results,
                   const std::vector<CdfSummary>& summaries,
                   const std::string& output_dir, bool emit_cdf) {
  if (results.empty()) throw std::invalid_argument("write_results: no results");
  const std::filesystem::path dir(output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());

  {
    auto out = open_or_throw(dir / "drops.csv");
    out << "drop,scheme,sum_rate_bpshz\n";
    for (const DropResult& r : results) {
      out << r.drop_index << ',' << r.scheme.label() << ',';
      print_fixed(out, r.sum_rate);
      out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + (dir / "drops.csv").string());
  }
  {
    auto out = open_or_throw(dir / "summary.csv");
    out << "scheme,samples,p5_bpshz,p50_bpshz\n";
    for (const CdfSummary& s : summaries) {
      out << s.scheme.label() << ',' << s.samples << ',';
      print_fixed(out, s.p5);
      out << ',';
      print_fixed(out, s.p50);
      out << '\n';
    }
  }
  if (emit_cdf) {
    for (const CdfSummary& s : summaries) {
      std::vector<double> sums;
      for (const DropResult& r : results)
        if (r.scheme == s.scheme) sums.push_back(r.sum_rate);
      std::sort(sums.begin(), sums.end());
      auto out = open_or_throw(dir / ("cdf_" + s.scheme.label() + ".csv"));
      out << "sum_rate_bpshz,cdf\n";
      for (std::size_t i = 0; i < sums.size(); ++i) {
        print_fixed(out, sums[i]);
        out << ',';
        print_fixed(out, static_cast<double>(i + 1) / static_cast<double>(sums.size()));
        out << '\n';
      }
    }
  }
}

}  // namespace irvs
