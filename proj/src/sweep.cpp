#include "pathideal/sweep.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "pathideal/errors.hpp"

namespace pathideal {

IntRange parse_range(std::string_view text) {
  auto parse_one = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed range '" + std::string(text) + "'");
    }
    return v;
  };
  const std::size_t dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_one(text);
  } else {
    r.lo = parse_one(text.substr(0, dots));
    r.hi = parse_one(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::vector<PathParams> sweep_instances(const SweepConfig& config) {
  std::vector<PathParams> out;
  for (int m = std::max(2, config.m.lo); m <= config.m.hi; ++m) {
    if (config.family == Family::FullPath) {
      for (int n = m; n <= config.n_max; ++n) {
        const PathParams p = PathParams::make(m, m - 1, n - m + 1);
        if (config.k && !config.k->contains(p.k)) continue;
        out.push_back(p);
      }
      continue;
    }
    for (int l = 1; l <= m - 1; ++l) {
      if (config.l && !config.l->contains(l)) continue;
      if (config.residue_only && classify(m, l).branch != Branch::ResidueOverlap) continue;
      for (int k = 1; static_cast<long>(k) * (m - l) + l <= config.n_max; ++k) {
        if (config.k && !config.k->contains(k)) continue;
        out.push_back(PathParams::make(m, l, k));
      }
    }
  }
  return out;
}

namespace {

struct Outcome {
  std::optional<SweepRecord> record;
  std::string skip_reason;
};

Outcome evaluate_instance(const SweepConfig& config, const PathParams& params, ExecPolicy inner) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  BettiOptions options = config.betti;
  options.policy = inner;
  if (config.max_millis) options.deadline = start + std::chrono::milliseconds(*config.max_millis);

  SweepRecord rec;
  rec.params = params;
  rec.regime = classify(params);
  rec.formula = config.family == Family::FullPath ? formula_jm(params.m, params.n) : formula_all(params);

  const MonomialIdeal ideal = make_path_ideal(params);
  BettiTable table;
  try {
    table = compute_betti(ideal, config.method, options);
  } catch (const OracleMismatch& e) {
    rec.match_oracles = false;
    table = e.hochster();
  } catch (const CapExceeded& e) {
    out.skip_reason = e.what();
    return out;
  } catch (const DeadlineExceeded& e) {
    out.skip_reason = e.what();
    return out;
  }
  const Invariants inv = invariants_of(table);
  rec.pd_oracle = inv.pd;
  rec.reg_oracle = inv.reg;
  rec.depth_oracle = depth_of(ideal, table).depth_ideal;
  rec.digest = table.digest();
  rec.match_pd = rec.formula.pd == rec.pd_oracle;
  rec.match_reg = !rec.formula.reg || *rec.formula.reg == rec.reg_oracle;
  rec.match_depth = rec.formula.depth_ideal == rec.depth_oracle;
  if (config.timing) {
    rec.millis = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  }
  out.record = std::move(rec);
  return out;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  if (config.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  SweepReport report;
  report.config = config;
  const std::vector<PathParams> instances = sweep_instances(config);
  std::vector<Outcome> outcomes(instances.size());

  if (config.jobs == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      outcomes[i] = evaluate_instance(config, instances[i], config.betti.policy);
    }
  } else {
    // Instance-level parallelism; kernels run serially inside each worker.
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.jobs)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(instances.size()); ++i) {
      try {
        outcomes[static_cast<std::size_t>(i)] =
            evaluate_instance(config, instances[static_cast<std::size_t>(i)], ExecPolicy::Serial);
      } catch (const std::exception& e) {
        outcomes[static_cast<std::size_t>(i)].skip_reason = std::string("error: ") + e.what();
      }
    }
  }

  report.summary.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (outcomes[i].record) {
      if (!outcomes[i].record->matches()) ++report.summary.mismatches;
      report.records.push_back(std::move(*outcomes[i].record));
    } else {
      report.skipped.push_back({instances[i], outcomes[i].skip_reason});
    }
  }
  report.summary.compared = report.records.size();
  report.summary.skipped = report.skipped.size();
  return report;
}

namespace {

std::string reg_text(const std::optional<int>& reg) { return reg ? std::to_string(*reg) : "UNKNOWN"; }
const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "m,l,k,n,regime,p,d,s,pd_formula,pd_oracle,reg_formula,reg_oracle,depth_formula,depth_oracle,"
         "match_pd,match_reg,match_depth,millis\n";
  for (const SweepRecord& r : report.records) {
    out << r.params.m << ',' << r.params.l << ',' << r.params.k << ',' << r.params.n << ','
        << branch_label(r.regime.branch) << ',' << r.regime.p << ',' << r.regime.d << ',' << r.regime.s << ','
        << r.formula.pd << ',' << r.pd_oracle << ',' << reg_text(r.formula.reg) << ',' << r.reg_oracle << ','
        << r.formula.depth_ideal << ',' << r.depth_oracle << ',' << flag(r.match_pd) << ',' << flag(r.match_reg)
        << ',' << flag(r.match_depth) << ',' << r.millis << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const SweepRecord& r : report.records) {
    records.push_back({
        {"params", to_json(r.params)},
        {"regime",
         {{"branch", branch_label(r.regime.branch)}, {"p", r.regime.p}, {"d", r.regime.d}, {"s", r.regime.s}}},
        {"formula",
         {{"pd", r.formula.pd},
          {"reg", r.formula.reg ? nlohmann::json(*r.formula.reg) : nlohmann::json("UNKNOWN")},
          {"depth_I", r.formula.depth_ideal},
          {"depth_RI", r.formula.depth_quotient}}},
        {"oracle",
         {{"pd", r.pd_oracle}, {"reg", r.reg_oracle}, {"depth_I", r.depth_oracle}, {"depth_RI", r.depth_oracle - 1}}},
        {"betti_digest", r.digest},
        {"match", {{"pd", r.match_pd}, {"reg", r.match_reg}, {"depth", r.match_depth}, {"oracles", r.match_oracles}}},
        {"millis", r.millis},
    });
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const SkippedInstance& s : report.skipped) {
    skipped.push_back({{"params", to_json(s.params)}, {"reason", s.reason}});
  }
  return {
      {"family", report.config.family == Family::FullPath ? "full-path" : "path"},
      {"field", report.config.betti.field.name()},
      {"method", method_label(report.config.method)},
      {"records", records},
      {"skipped", skipped},
      {"summary",
       {{"instances", report.summary.instances},
        {"compared", report.summary.compared},
        {"skipped", report.summary.skipped},
        {"mismatches", report.summary.mismatches}}},
  };
}

std::string to_text(const SweepReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%3s %3s %3s %3s  %-13s %3s %3s %3s  %9s  %15s  %11s  %s\n", "m", "l", "k", "n",
                "regime", "p", "d", "s", "pd f/o", "reg f/o", "depth f/o", "ok");
  out << line;
  for (const SweepRecord& r : report.records) {
    const std::string pd = std::to_string(r.formula.pd) + "/" + std::to_string(r.pd_oracle);
    const std::string reg = reg_text(r.formula.reg) + "/" + std::to_string(r.reg_oracle);
    const std::string depth = std::to_string(r.formula.depth_ideal) + "/" + std::to_string(r.depth_oracle);
    std::snprintf(line, sizeof line, "%3d %3d %3d %3d  %-13s %3d %3d %3d  %9s  %15s  %11s  %s\n", r.params.m,
                  r.params.l, r.params.k, r.params.n, std::string(branch_label(r.regime.branch)).c_str(), r.regime.p,
                  r.regime.d, r.regime.s, pd.c_str(), reg.c_str(), depth.c_str(), r.matches() ? "yes" : "MISMATCH");
    out << line;
  }
  for (const SkippedInstance& s : report.skipped) {
    out << "skipped " << to_string(s.params) << ": " << s.reason << '\n';
  }
  out << "instances=" << report.summary.instances << " compared=" << report.summary.compared
      << " skipped=" << report.summary.skipped << " mismatches=" << report.summary.mismatches << '\n';
  return out.str();
}

namespace {

int small_overlap_reg(const PathParams& p) { return (p.k - 1) * (p.m - p.l - 1) + p.m; }

}  // namespace

std::string open_problem_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "m,l,k,n,s,p,d,pd_oracle,reg_oracle,small_overlap_reg,agrees\n";
  for (const SweepRecord& r : report.records) {
    const int guess = small_overlap_reg(r.params);
    out << r.params.m << ',' << r.params.l << ',' << r.params.k << ',' << r.params.n << ',' << r.regime.s << ','
        << r.regime.p << ',' << r.regime.d << ',' << r.pd_oracle << ',' << r.reg_oracle << ',' << guess << ','
        << flag(guess == r.reg_oracle) << '\n';
  }
  return out.str();
}

nlohmann::json open_problem_json(const SweepReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRecord& r : report.records) {
    const int guess = small_overlap_reg(r.params);
    rows.push_back({{"params", to_json(r.params)},
                    {"s", r.regime.s},
                    {"p", r.regime.p},
                    {"d", r.regime.d},
                    {"pd_oracle", r.pd_oracle},
                    {"reg_oracle", r.reg_oracle},
                    {"small_overlap_reg", guess},
                    {"agrees", guess == r.reg_oracle}});
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const SkippedInstance& s : report.skipped) {
    skipped.push_back({{"params", to_json(s.params)}, {"reason", s.reason}});
  }
  return {{"field", report.config.betti.field.name()}, {"instances", rows}, {"skipped", skipped}};
}

std::string open_problem_text(const SweepReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%3s %3s %3s %3s %3s %3s %3s  %4s %4s %6s\n", "m", "l", "k", "n", "s", "p", "d",
                "pd", "reg", "guess");
  out << line;
  for (const SweepRecord& r : report.records) {
    std::snprintf(line, sizeof line, "%3d %3d %3d %3d %3d %3d %3d  %4d %4d %6d\n", r.params.m, r.params.l, r.params.k,
                  r.params.n, r.regime.s, r.regime.p, r.regime.d, r.pd_oracle, r.reg_oracle,
                  small_overlap_reg(r.params));
    out << line;
  }
  for (const SkippedInstance& s : report.skipped) out << "skipped " << to_string(s.params) << ": " << s.reason << '\n';
  return out.str();
}

}  // namespace pathideal
