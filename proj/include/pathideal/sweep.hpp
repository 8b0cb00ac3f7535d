#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathideal/betti.hpp"
#include "pathideal/path_ideal.hpp"

namespace pathideal {

/// Inclusive integer range; parsed from "3" or "2..5".
struct IntRange {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return lo <= v && v <= hi; }
};
IntRange parse_range(std::string_view text);

enum class Family {
  Path,      ///< I_{m,l,k}, compared against the three-branch closed forms
  FullPath,  ///< J_m(L_n), compared against the J_m(L_n) closed forms
};

struct SweepConfig {
  IntRange m{2, 5};
  std::optional<IntRange> l;  ///< default: every legal overlap 1..m-1
  std::optional<IntRange> k;  ///< default: every k with n <= n_max
  int n_max = 13;
  Family family = Family::Path;
  Method method = Method::Auto;
  BettiOptions betti;
  int jobs = 1;
  bool timing = false;                ///< measure millis (otherwise reported as 0)
  std::optional<long> max_millis;     ///< per-instance deadline; overruns are skipped
  bool residue_only = false;          ///< restrict to the branch without a regularity formula
};

struct SweepRecord {
  PathParams params;
  Regime regime;
  FormulaResult formula;
  int pd_oracle = 0;
  int reg_oracle = 0;
  int depth_oracle = 0;
  std::string digest;
  bool match_pd = false;
  bool match_reg = false;  ///< true when the formula has no regularity value
  bool match_depth = false;
  bool match_oracles = true;  ///< false when Method::Both saw disagreeing tables
  long millis = 0;

  bool matches() const { return match_pd && match_reg && match_depth && match_oracles; }
};

struct SkippedInstance {
  PathParams params;
  std::string reason;
};

struct SweepSummary {
  std::size_t instances = 0;  ///< enumerated
  std::size_t compared = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRecord> records;  ///< ordered by (m, l, k)
  std::vector<SkippedInstance> skipped;
  SweepSummary summary;
};

/// Parameter tuples a config enumerates, in report order.
std::vector<PathParams> sweep_instances(const SweepConfig& config);

SweepReport run_sweep(const SweepConfig& config);

/// Header plus one row per record: m,l,k,n,regime,p,d,s,pd_formula,pd_oracle,
/// reg_formula,reg_oracle,depth_formula,depth_oracle,match_pd,match_reg,match_depth,millis.
std::string to_csv(const SweepReport& report);
nlohmann::json to_json(const SweepReport& report);
std::string to_text(const SweepReport& report);

/// Regularity data for the branch without a closed form, with the
/// small-overlap formula evaluated alongside for comparison.
std::string open_problem_csv(const SweepReport& report);
nlohmann::json open_problem_json(const SweepReport& report);
std::string open_problem_text(const SweepReport& report);

}  // namespace pathideal
