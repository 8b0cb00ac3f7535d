#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pathideal/betti.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/splitting.hpp"
#include "pathideal/sweep.hpp"
#include "pathideal/topology.hpp"

namespace pathideal::cli {

namespace {

/// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  bool json = false;
  bool csv = false;
  std::string out_file;
  std::string field = "gf2";
  std::string method = "auto";
  int jobs = 0;
  int cap_n = 16;
  int cap_k = 18;
};

struct Target {
  std::string ideal;
  std::optional<int> m;
  std::optional<int> l;
  std::optional<int> k;
  std::optional<int> n;
};

void add_target_options(CLI::App* cmd, Target& t) {
  cmd->add_option("--ideal", t.ideal, "Ideal text, e.g. 'n=5; (x1*x2*x3, x3*x4*x5)'");
  cmd->add_option("--m", t.m, "Path length m");
  cmd->add_option("--l", t.l, "Overlap l (with --k)");
  cmd->add_option("--k", t.k, "Generator count k (with --l)");
  cmd->add_option("--n", t.n, "Vertex count n for J_m(L_n) (with --m, without --l/--k)");
}

std::optional<PathParams> target_params(const Target& t) {
  if (!t.ideal.empty()) return std::nullopt;
  if (t.m && t.l && t.k) return PathParams::make(*t.m, *t.l, *t.k);
  if (t.m && t.n && !t.l && !t.k) {
    if (*t.n < *t.m) throw UsageError("J_m(L_n) needs m <= n");
    return PathParams::make(*t.m, *t.m - 1, *t.n - *t.m + 1);
  }
  throw UsageError("give --ideal, or --m --l --k, or --m --n");
}

MonomialIdeal target_ideal(const Target& t) {
  if (!t.ideal.empty()) {
    if (t.m || t.l || t.k || t.n) throw UsageError("--ideal cannot be combined with --m/--l/--k/--n");
    return parse_ideal(t.ideal);
  }
  return make_path_ideal(*target_params(t));
}

BettiOptions betti_options(const Common& c) {
  BettiOptions o;
  o.field = Field::parse(c.field);
  o.cap_n = c.cap_n;
  o.cap_k = c.cap_k;
  return o;
}

class Emitter {
 public:
  Emitter(const Common& c, std::ostream& out) : common_(c), out_(out) {}

  void write(const std::string& text) {
    if (common_.out_file.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(common_.out_file);
    if (!file) throw std::runtime_error("cannot open " + common_.out_file);
    file << text;
  }
  void write(const nlohmann::json& j) { write(j.dump(2) + "\n"); }

 private:
  const Common& common_;
  std::ostream& out_;
};

std::string reg_text(const std::optional<int>& reg) { return reg ? std::to_string(*reg) : "UNKNOWN"; }

std::string human_table(const MonomialIdeal& ideal, const Field& field, const BettiTable& table) {
  std::ostringstream s;
  const Invariants inv = invariants_of(table);
  const Depth depth = depth_of(ideal, table);
  s << "ideal: " << to_string(ideal) << "\nfield: " << field.name() << "\n  i   j  beta\n";
  for (const auto& [key, value] : table.entries()) {
    char line[64];
    std::snprintf(line, sizeof line, "%3d %3d %5llu\n", key.first, key.second, static_cast<unsigned long long>(value));
    s << line;
  }
  s << "pd=" << inv.pd << " reg=" << inv.reg << " depth_I=" << depth.depth_ideal << " depth_RI=" << depth.depth_quotient
    << '\n';
  return s.str();
}

int cmd_gen(const Common& c, const Target& t, std::ostream& out) {
  const MonomialIdeal ideal = target_ideal(t);
  Emitter emit(c, out);
  if (c.json) {
    nlohmann::json gens = nlohmann::json::array();
    for (Monomial g : ideal.generators()) gens.push_back(g.indices());
    nlohmann::json j = {{"ideal", to_string(ideal)}, {"n", ideal.ambient()}, {"generators", gens}};
    if (const auto p = target_params(t)) j["params"] = to_json(*p);
    emit.write(j);
  } else {
    emit.write(to_string(ideal) + "\n");
  }
  return kExitOk;
}

int cmd_betti(const Common& c, const Target& t, bool golden, std::ostream& out) {
  const MonomialIdeal ideal = target_ideal(t);
  const BettiOptions options = betti_options(c);
  Emitter emit(c, out);
  BettiTable table;
  int code = kExitOk;
  try {
    table = compute_betti(ideal, parse_method(c.method), options);
  } catch (const OracleMismatch& e) {
    table = e.hochster();
    code = kExitMismatch;
    if (c.json) {
      nlohmann::json j = betti_report_json(ideal, options.field, e.hochster());
      j["taylor_betti"] = e.taylor().to_json();
      j["oracles_agree"] = false;
      emit.write(j);
      return code;
    }
  }
  if (golden) {
    emit.write(table.to_golden());
  } else if (c.json) {
    emit.write(betti_report_json(ideal, options.field, table));
  } else {
    emit.write(human_table(ideal, options.field, table) + (code == kExitOk ? "" : "MISMATCH between methods\n"));
  }
  return code;
}

int cmd_formula(const Common& c, const Target& t, std::ostream& out) {
  const auto params = target_params(t);
  if (!params) throw UsageError("formula needs parameters, not --ideal");
  const bool full = t.n.has_value();
  const Regime r = classify(*params);
  const FormulaResult f = full ? formula_jm(params->m, params->n) : formula_all(*params);
  Emitter emit(c, out);
  if (c.json) {
    emit.write(nlohmann::json{
        {"params", to_json(*params)},
        {"family", full ? "full-path" : "path"},
        {"regime", {{"branch", branch_label(r.branch)}, {"s", r.s}, {"p", r.p}, {"d", r.d}}},
        {"pd", f.pd},
        {"reg", f.reg ? nlohmann::json(*f.reg) : nlohmann::json("UNKNOWN")},
        {"depth_I", f.depth_ideal},
        {"depth_RI", f.depth_quotient}});
  } else {
    std::ostringstream s;
    s << to_string(*params) << " n=" << params->n << " regime=" << branch_label(r.branch) << " s=" << r.s
      << " p=" << r.p << " d=" << r.d << "\npd=" << f.pd << " reg=" << reg_text(f.reg) << " depth_I=" << f.depth_ideal
      << " depth_RI=" << f.depth_quotient << '\n';
    emit.write(s.str());
  }
  return kExitOk;
}

struct SweepFlags {
  std::string m;
  std::string l;
  std::string k;
  int n_max = 13;
  std::string family = "path";
  bool timing = false;
  std::optional<long> max_millis;
};

SweepConfig sweep_config(const Common& c, const SweepFlags& f, IntRange default_m) {
  SweepConfig cfg;
  cfg.m = f.m.empty() ? default_m : parse_range(f.m);
  if (!f.l.empty()) cfg.l = parse_range(f.l);
  if (!f.k.empty()) cfg.k = parse_range(f.k);
  cfg.n_max = f.n_max;
  if (f.family == "path") cfg.family = Family::Path;
  else if (f.family == "full") cfg.family = Family::FullPath;
  else throw UsageError("--family must be path or full");
  cfg.method = parse_method(c.method);
  cfg.betti = betti_options(c);
  cfg.jobs = c.jobs > 0 ? c.jobs : 1;
  cfg.timing = f.timing;
  cfg.max_millis = f.max_millis;
  return cfg;
}

int cmd_verify(const Common& c, const SweepFlags& f, std::ostream& out, std::ostream& err) {
  const SweepReport report = run_sweep(sweep_config(c, f, IntRange{2, 5}));
  Emitter emit(c, out);
  if (c.json) emit.write(to_json(report));
  else if (c.csv) emit.write(to_csv(report));
  else emit.write(to_text(report));
  for (const SkippedInstance& s : report.skipped) err << "skipped " << to_string(s.params) << ": " << s.reason << '\n';
  return report.summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_open_problem(const Common& c, SweepFlags f, std::ostream& out, std::ostream& err) {
  if (f.family != "path") throw UsageError("open-problem only covers the path family");
  SweepConfig cfg = sweep_config(c, f, IntRange{2, f.n_max});
  cfg.residue_only = true;
  const SweepReport report = run_sweep(cfg);
  Emitter emit(c, out);
  if (c.json) emit.write(open_problem_json(report));
  else if (c.csv) emit.write(open_problem_csv(report));
  else emit.write(open_problem_text(report));
  for (const SkippedInstance& s : report.skipped) err << "skipped " << to_string(s.params) << ": " << s.reason << '\n';
  return report.summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

struct SplitFlags {
  std::string first;
  std::string second;
  std::optional<int> var;
};

int cmd_split(const Common& c, const Target& t, const SplitFlags& f, std::ostream& out) {
  const MonomialIdeal ideal = target_ideal(t);
  SplitComputation how;
  how.method = parse_method(c.method);
  how.betti = betti_options(c);
  Emitter emit(c, out);

  std::optional<SplitCase> split;
  std::optional<bool> fht_applies;
  if (!f.first.empty() || !f.second.empty()) {
    if (f.first.empty() || f.second.empty() || f.var) throw UsageError("give both --first and --second (and no --var)");
    split = is_betti_splitting(ideal, parse_ideal(f.first), parse_ideal(f.second), how);
  } else {
    // Default: split off every generator divisible by the last variable of the support.
    const int var = f.var ? *f.var : 32 - std::countl_zero(ideal.support());
    const FhtResult fht = fht_condition(ideal, var, how);
    fht_applies = fht.applies;
    split = fht.split ? fht.split : is_betti_splitting(ideal, fht.divisible, fht.rest, how);
  }
  const MaxFormulaCheck maxes = check_max_formulas(*split);
  const bool ok = split->verdict && maxes.pd_holds && maxes.reg_holds;

  if (c.json) {
    nlohmann::json j = to_json(*split);
    j["fht_applies"] = fht_applies ? nlohmann::json(*fht_applies) : nlohmann::json(nullptr);
    j["max_formulas"] = {{"pd", maxes.pd_holds}, {"reg", maxes.reg_holds}};
    emit.write(j);
  } else {
    std::ostringstream s;
    s << "I   = " << to_string(split->whole) << "\nJ   = " << to_string(split->first)
      << "\nK   = " << to_string(split->second) << "\nJ∩K = " << to_string(split->intersection) << '\n';
    if (fht_applies) s << "divisible part has a linear resolution: " << (*fht_applies ? "yes" : "no") << '\n';
    s << "Betti splitting: " << (split->verdict ? "yes" : "no");
    if (split->witness) s << " (first failure at i=" << split->witness->first << ", j=" << split->witness->second << ")";
    s << "\nmax formulas: pd " << (maxes.pd_holds ? "hold" : "fail") << ", reg " << (maxes.reg_holds ? "hold" : "fail")
      << '\n';
    emit.write(s.str());
  }
  return ok ? kExitOk : kExitMismatch;
}

struct CertFlags {
  std::string clutter;
  std::string complex;
  int cap_vertices = 12;
  int cap_facets = 12;
  int cap_seq_cm = 10;
};

int cmd_cert(const Common& c, const Target& t, const CertFlags& f, std::ostream& out) {
  const Field field = Field::parse(c.field);
  std::optional<FreeVertexReport> fvp;
  std::optional<std::optional<ShellingOrder>> shelling;
  std::optional<bool> seq_cm;
  SimplicialComplex complex;
  if (!f.complex.empty()) {
    if (!f.clutter.empty() || !t.ideal.empty() || t.m) throw UsageError("--complex stands alone");
    complex = parse_complex(f.complex);
  } else {
    Clutter clutter;
    if (!f.clutter.empty()) {
      if (!t.ideal.empty() || t.m) throw UsageError("--clutter cannot be combined with an ideal");
      clutter = parse_clutter(f.clutter);
    } else {
      clutter = clutter_of(target_ideal(t));
    }
    if (clutter.vertex_count() <= f.cap_vertices) fvp = free_vertex_property(clutter, f.cap_vertices);
    complex = cover_complex(clutter);
  }
  if (static_cast<int>(complex.facets().size()) <= f.cap_facets) shelling = find_shelling(complex, f.cap_facets);
  if (complex.vertex_count() <= f.cap_seq_cm) seq_cm = is_sequentially_cm(complex, field, f.cap_seq_cm);

  // free vertex property => shellable => sequentially CM, wherever both sides were computed.
  bool chain_ok = true;
  if (fvp && fvp->holds && shelling && !*shelling) chain_ok = false;
  if (shelling && *shelling && seq_cm && !*seq_cm) chain_ok = false;
  if (shelling && *shelling && !is_shelling_order(complex, **shelling)) chain_ok = false;

  Emitter emit(c, out);
  if (c.json) {
    nlohmann::json j = certification_json(fvp, shelling, seq_cm);
    j["complex"] = to_string(complex);
    j["implications_hold"] = chain_ok;
    emit.write(j);
  } else {
    std::ostringstream s;
    s << "cover complex: " << to_string(complex) << '\n';
    s << "free vertex property: " << (fvp ? (fvp->holds ? "yes" : "no") : "skipped (cap)");
    if (fvp && fvp->counterexample) s << " (minor without free vertex: " << to_string(*fvp->counterexample) << ")";
    s << "\nshelling: ";
    if (!shelling) {
      s << "skipped (cap)";
    } else if (!*shelling) {
      s << "none";
    } else {
      bool first = true;
      for (std::uint32_t facet : **shelling) {
        s << (first ? "" : " ") << to_compact_string(Monomial::from_mask(facet));
        first = false;
      }
    }
    s << "\nsequentially Cohen-Macaulay over " << field.name() << ": "
      << (seq_cm ? (*seq_cm ? "yes" : "no") : "skipped (cap)") << '\n';
    if (!chain_ok) s << "IMPLICATION CHAIN BROKEN\n";
    emit.write(s.str());
  }
  return chain_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti tables, closed forms and certificates for generalized path ideals of line graphs",
               "pathideal"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.json, "JSON output");
  app.add_flag("--csv", common.csv, "CSV output (verify, open-problem)");
  app.add_option("--out", common.out_file, "Write output to FILE");
  app.add_option("--field", common.field, "gf2, gf<p> or rat")->capture_default_str();
  app.add_option("--method", common.method, "hochster, taylor, auto or both")->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::NonNegativeNumber);
  app.add_option("--cap-n", common.cap_n, "Largest n for Hochster's formula")->capture_default_str();
  app.add_option("--cap-k", common.cap_k, "Largest generator count for Taylor-Tor")->capture_default_str();

  Target target;
  bool golden = false;
  SweepFlags sweep;
  SplitFlags split;
  CertFlags cert;

  CLI::App* gen = app.add_subcommand("gen", "Print I_{m,l,k} or J_m(L_n)");
  add_target_options(gen, target);
  CLI::App* betti = app.add_subcommand("betti", "Graded Betti table of one ideal");
  add_target_options(betti, target);
  betti->add_flag("--golden", golden, "Print 'i j beta' lines only");
  CLI::App* formula = app.add_subcommand("formula", "Closed-form pd, reg and depth");
  add_target_options(formula, target);

  CLI::App* verify = app.add_subcommand("verify", "Sweep parameters and compare closed forms with computed tables");
  CLI::App* open = app.add_subcommand("open-problem", "Computed regularity where no closed form is known");
  for (CLI::App* cmd : {verify, open}) {
    cmd->add_option("--m", sweep.m, "m range, e.g. 2..5");
    cmd->add_option("--l", sweep.l, "l range");
    cmd->add_option("--k", sweep.k, "k range");
    cmd->add_option("--n-max", sweep.n_max, "Largest ambient n")->capture_default_str();
    cmd->add_option("--family", sweep.family, "path or full")->capture_default_str();
    cmd->add_flag("--timing", sweep.timing, "Record per-instance milliseconds");
    cmd->add_option("--max-millis", sweep.max_millis, "Skip instances that run longer");
  }

  CLI::App* split_cmd = app.add_subcommand("split", "Check a Betti splitting I = J + K");
  add_target_options(split_cmd, target);
  split_cmd->add_option("--first", split.first, "J (ideal text)");
  split_cmd->add_option("--second", split.second, "K (ideal text)");
  split_cmd->add_option("--var", split.var, "Split by divisibility by x_VAR");

  CLI::App* cert_cmd = app.add_subcommand("cert", "Free vertex property, shelling and sequential CM");
  add_target_options(cert_cmd, target);
  cert_cmd->add_option("--clutter", cert.clutter, "Clutter text, e.g. 'n=5; {1,2,3},{3,4,5}'");
  cert_cmd->add_option("--complex", cert.complex, "Simplicial complex by facets");
  cert_cmd->add_option("--cap-vertices", cert.cap_vertices, "Largest n for minor enumeration")->capture_default_str();
  cert_cmd->add_option("--cap-facets", cert.cap_facets, "Largest facet count for shelling search")
      ->capture_default_str();
  cert_cmd->add_option("--cap-seq-cm", cert.cap_seq_cm, "Largest n for the sequential CM check")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (common.json && common.csv) throw UsageError("--json and --csv are exclusive");
    if (common.csv && !verify->parsed() && !open->parsed()) throw UsageError("--csv is only for verify and open-problem");
    if (common.jobs > 0 && !verify->parsed() && !open->parsed()) omp_set_num_threads(common.jobs);
    if (gen->parsed()) return cmd_gen(common, target, out);
    if (betti->parsed()) return cmd_betti(common, target, golden, out);
    if (formula->parsed()) return cmd_formula(common, target, out);
    if (verify->parsed()) return cmd_verify(common, sweep, out, err);
    if (open->parsed()) return cmd_open_problem(common, sweep, out, err);
    if (split_cmd->parsed()) return cmd_split(common, target, split, out);
    if (cert_cmd->parsed()) return cmd_cert(common, target, cert, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise the cap flags to continue)\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pathideal::cli
