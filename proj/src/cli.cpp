#include "incompat/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "incompat/fixtures.hpp"
#include "incompat/frame_io.hpp"
#include "incompat/gj_bound.hpp"
#include "incompat/multi.hpp"

namespace incompat {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Options {
  Tolerance tol;
  Budget budget;
  std::uint64_t seed = 1;
  int trials = 200;
  std::string format = "json";  // json | text
  std::string out_path;
  std::vector<std::string> gj_selections;
};

struct Check {
  std::string name;
  json expected;
  json computed;
  bool pass = false;
};

struct Discrepancy {
  std::string claim;
  json paper_value;
  json computed_value;
  std::string engine;
};

json state_json(const CVector& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.push_back({x(i).real(), x(i).imag()});
  }
  return out;
}

json selection_json(const SubsetSelection& sel) {
  return {{"S", sel.S}, {"T", sel.T}};
}

json meta_json(const Options& opt) {
  return {{"version", kVersion},
          {"seed", opt.seed},
          {"trials", opt.trials},
          {"tolerances",
           {{"rel_rank_tol", opt.tol.rel_rank_tol},
            {"support_tol", opt.tol.support_tol}}},
          {"budget",
           {{"max_dim", opt.budget.max_dim},
            {"max_total_vectors", opt.budget.max_total_vectors},
            {"max_subsets", opt.budget.max_subsets},
            {"force", opt.budget.force}}}};
}

json frame_json(const Frame& f, const FrameBounds& b, const Tolerance& tol) {
  json out = {{"label", f.label()},
              {"dim", f.dim()},
              {"size", f.size()},
              {"bounds",
               {{"lower", b.lower},
                {"upper", b.upper},
                {"tight", b.tight},
                {"tight_constant",
                 b.tight_constant ? json(*b.tight_constant) : json(nullptr)}}}};
  if (b.tight) {
    out["povm_residual"] = to_povm(f, tol).identity_residual();
  } else {
    out["povm_residual"] = nullptr;
  }
  return out;
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& c : checks) {
    out.push_back({{"name", c.name},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"pass", c.pass}});
  }
  return out;
}

json discrepancies_json(const std::vector<Discrepancy>& ds) {
  json out = json::array();
  for (const Discrepancy& d : ds) {
    out.push_back({{"claim", d.claim},
                   {"paper_value", d.paper_value},
                   {"computed_value", d.computed_value},
                   {"engine", d.engine}});
  }
  return out;
}

json empty_report(const Options& opt) {
  return {{"meta", meta_json(opt)},    {"frames", json::array()},
          {"pairwise", nullptr},       {"constants", nullptr},
          {"gj", nullptr},             {"multi", nullptr},
          {"checks", json::array()},   {"discrepancies", json::array()}};
}

// "S=1,2;T=3" -> SubsetSelection (1-based indices, empty sides allowed).
SubsetSelection parse_gj_selection(const std::string& text, int m, int n) {
  SubsetSelection sel;
  sel.m = m;
  sel.n = n;
  auto parse_side = [&text](const std::string& part, const char* tag) {
    if (part.rfind(tag, 0) != 0) {
      fail(ErrorCode::InvalidInput,
           "bad --gj value '" + text + "': expected " + tag + "...");
    }
    IndexSet out;
    std::stringstream ss(part.substr(2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) {
        fail(ErrorCode::InvalidInput, "bad index '" + item + "' in --gj value");
      }
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::size_t split = text.find(';');
  if (split == std::string::npos) {
    fail(ErrorCode::InvalidInput,
         "bad --gj value '" + text + "': expected S=...;T=...");
  }
  sel.S = parse_side(text.substr(0, split), "S=");
  sel.T = parse_side(text.substr(split + 1), "T=");
  sel.validate();
  return sel;
}

std::string selection_name(const SubsetSelection& sel) {
  auto join = [](const IndexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out;
  };
  return "S=" + join(sel.S) + ";T=" + join(sel.T);
}

// ---------------------------------------------------------------------------
// Text rendering

void render_checks_text(const json& report, std::ostream& os) {
  for (const json& c : report["checks"]) {
    os << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>()
       << ": expected " << c["expected"].dump() << ", computed "
       << c["computed"].dump() << "\n";
  }
  const json& ds = report["discrepancies"];
  if (!ds.empty()) {
    os << "discrepancies:\n";
    for (const json& d : ds) {
      os << "  " << d["claim"].get<std::string>() << ": published "
         << d["paper_value"].dump() << ", computed " << d["computed_value"].dump()
         << " (" << d["engine"].get<std::string>() << ")\n";
    }
  }
}

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const json& f : report["frames"]) {
    os << "frame " << f["label"].get<std::string>() << ": dim " << f["dim"]
       << ", vectors " << f["size"] << ", bounds [" << f["bounds"]["lower"]
       << ", " << f["bounds"]["upper"] << "]"
       << (f["bounds"]["tight"].get<bool>() ? ", tight" : ", not tight");
    if (!f["povm_residual"].is_null()) {
      os << ", povm residual " << f["povm_residual"];
    }
    os << "\n";
  }
  const json& pw = report["pairwise"];
  if (pw.is_object() && pw.contains("spark")) {
    os << "spark: "
       << (pw["spark"]["finite"].get<bool>() ? pw["spark"]["value"].dump()
                                             : std::string("infinite"))
       << "  dictionary mu: " << pw["coherence"]["dictionary_mu"]
       << "  mutual M: " << pw["coherence"]["mutual_M"] << "\n";
    os << "order s: " << pw["order"]["s"] << " (" << pw["order"]["method"].get<std::string>()
       << "), support minimum: " << pw["support_min"]["s"]
       << ", t_min: " << pw["t_min"]["value"] << "\n";
  }
  if (pw.is_object() && pw.contains("entries")) {
    os << "pairwise orders:";
    for (const json& e : pw["entries"]) {
      os << " s(" << e["i"] << "," << e["j"] << ")=" << e["order"].dump();
    }
    os << "\n";
  }
  const json& constants = report["constants"];
  if (constants.is_object()) {
    os << "constants: alpha " << constants["alpha"] << ", beta " << constants["beta"]
       << ", C_s " << constants["C_s"] << ", C " << constants["C"] << "\n";
  }
  const json& multi = report["multi"];
  if (multi.is_object()) {
    const char* relation = multi["strict"].get<bool>()          ? " (strict)"
                           : multi["bound_holds"].get<bool>()   ? " (equality)"
                                                                : " (exceeds)";
    os << "multi order: " << multi["order"] << " (" << multi["method"].get<std::string>()
       << "), half pairwise sum: " << multi["bound_lhs"] << relation << "\n";
  }
  if (report["gj"].is_array()) {
    for (const json& g : report["gj"]) {
      os << "gj " << g["selection_name"].get<std::string>() << ": ";
      if (!g["admissible"].get<bool>()) {
        os << "inadmissible (threshold " << g["threshold"] << ")\n";
      } else {
        os << "C(S,T) " << g["C_ST"] << ", min ratio " << g["min_ratio"] << ", "
           << (g["pass"].get<bool>() ? "holds" : "violated") << "\n";
      }
    }
  }
  render_checks_text(report, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Subcommand payload builders

void append_gj_sections(const Frame& a, const Frame& b, const Options& opt,
                        json& report, std::vector<Check>& checks,
                        std::vector<Discrepancy>& discrepancies) {
  if (opt.gj_selections.empty()) return;
  report["gj"] = json::array();
  for (const std::string& text : opt.gj_selections) {
    const SubsetSelection sel = parse_gj_selection(text, a.size(), b.size());
    const GJConstants adm = gj_admissible(a, b, sel, opt.tol);
    json entry = {{"selection", selection_json(sel)},
                  {"selection_name", selection_name(sel)},
                  {"admissible", adm.admissible},
                  {"threshold", adm.threshold},
                  {"bounds",
                   {{"alpha1", adm.alpha1},
                    {"beta1", adm.beta1},
                    {"alpha2", adm.alpha2},
                    {"beta2", adm.beta2}}},
                  {"M_dualA_B", adm.M_dualA_B},
                  {"M_dualA_A", adm.M_dualA_A}};
    if (adm.admissible) {
      const GJVerification v = verify_gj(a, b, sel, opt.trials, opt.seed, opt.tol);
      entry["C_ST"] = v.constants.C_ST;
      entry["pass"] = v.pass;
      entry["min_ratio"] = v.min_ratio;
      entry["first_violation"] =
          v.first_violation
              ? json({{"trial", v.first_violation->trial},
                      {"lhs", v.first_violation->lhs},
                      {"rhs", v.first_violation->rhs},
                      {"state", state_json(v.first_violation->state)}})
              : json(nullptr);
      checks.push_back({"gj_inequality:" + selection_name(sel), json(true),
                        json(v.pass), v.pass});
      if (!v.pass) {
        discrepancies.push_back(
            {"gj inequality at " + selection_name(sel), json("holds"),
             json("violated: C|x|=" + std::to_string(v.first_violation->lhs) +
                  " > rhs=" + std::to_string(v.first_violation->rhs)),
             "gj-harness"});
      }
    } else {
      entry["C_ST"] = nullptr;
      entry["pass"] = nullptr;
      entry["min_ratio"] = nullptr;
      entry["first_violation"] = nullptr;
    }
    report["gj"].push_back(std::move(entry));
  }
}

int cmd_validate(const std::string& path, const Options& opt, std::string& out) {
  const Frame f = read_frame_file(path, opt.tol);
  const FrameBounds b = frame_bounds(f, opt.tol);
  json report = empty_report(opt);
  report["frames"].push_back(frame_json(f, b, opt.tol));
  out = opt.format == "text" ? render_text(report) : report.dump(2) + "\n";
  return 0;
}

int cmd_analyze(const std::string& path_a, const std::string& path_b,
                const Options& opt, std::string& out) {
  const Frame a = read_frame_file(path_a, opt.tol);
  const Frame b = read_frame_file(path_b, opt.tol);
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, "frames must share one dimension");
  }
  opt.budget.check_instance(a.dim(), a.size() + b.size());

  const FrameBounds bounds_a = frame_bounds(a, opt.tol);
  const FrameBounds bounds_b = frame_bounds(b, opt.tol);
  const bool both_tight = bounds_a.tight && bounds_b.tight;

  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;
  json report = empty_report(opt);
  report["frames"].push_back(frame_json(a, bounds_a, opt.tol));
  report["frames"].push_back(frame_json(b, bounds_b, opt.tol));

  // Concatenated dictionary (A, B).
  CMatrix concat(a.dim(), a.size() + b.size());
  concat << a.as_columns(), b.as_columns();
  const SparkResult sp = spark(concat, opt.tol, opt.budget);

  CoherenceReport coherence;
  coherence.dictionary_mu = dictionary_coherence(concat);
  coherence.mutual_M = mutual_coherence(a, b);
  try {
    coherence.spark_lower_bound = spark_lower_bound(concat, opt.tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroCoherence) throw;
  }

  const IncompatibilityResult rank_result = annihilation_order(a, b, opt.tol, opt.budget);
  const IncompatibilityResult oracle_result = min_support_sum(a, b, opt.tol, opt.budget);
  const IncompatibilityResult& order_result = both_tight ? rank_result : oracle_result;
  const ReconstructionResult recon =
      minimal_reconstruction_number(a, b, opt.tol, opt.budget);

  json pairwise = {
      {"spark",
       {{"finite", !sp.infinite()},
        {"value", sp.value ? json(*sp.value) : json(nullptr)},
        {"witness", sp.witness ? json(*sp.witness) : json(nullptr)},
        {"columns_checked", sp.columns_checked}}},
      {"coherence",
       {{"dictionary_mu", coherence.dictionary_mu},
        {"mutual_M", coherence.mutual_M},
        {"spark_lower_bound", coherence.spark_lower_bound
                                  ? json(*coherence.spark_lower_bound)
                                  : json(nullptr)}}},
      {"order",
       {{"s", order_result.order},
        {"method", method_name(order_result.method)},
        {"selection", selection_json(order_result.witness_subsets)},
        {"witness", state_json(order_result.witness_state)}}},
      {"order_subset_rank", rank_result.order},
      {"support_min",
       {{"s", oracle_result.order},
        {"selection", selection_json(oracle_result.witness_subsets)},
        {"witness", state_json(oracle_result.witness_state)}}},
      {"t_min",
       {{"value", recon.t_min},
        {"selection", selection_json(recon.max_nonspanning)}}}};
  report["pairwise"] = std::move(pairwise);

  checks.push_back({"engines_agree", json(rank_result.order),
                    json(oracle_result.order),
                    rank_result.order == oracle_result.order});
  checks.push_back({"order_plus_tmin_equals_mn", json(a.size() + b.size()),
                    json(order_result.order + recon.t_min),
                    order_result.order + recon.t_min == a.size() + b.size()});
  if (!sp.infinite()) {
    checks.push_back({"order_ge_spark", json(*sp.value), json(order_result.order),
                      order_result.order >= *sp.value});
    if (coherence.spark_lower_bound) {
      const int ceil_bound = int(std::ceil(*coherence.spark_lower_bound - 1e-12));
      checks.push_back({"spark_ge_coherence_bound", json(ceil_bound),
                        json(*sp.value), *sp.value >= ceil_bound});
    }
  }

  const SupportUncertaintyReport sur = verify_support_uncertainty(
      a, b, order_result, opt.trials, opt.seed, opt.tol);
  checks.push_back({"support_uncertainty_sampling", json(order_result.order),
                    json(sur.min_observed), sur.pass});

  if (both_tight) {
    const UncertaintyConstants uc = uncertainty_constants(a, b, opt.tol, opt.budget);
    const UncertaintyConstantEntry* min_entry = &uc.entries.front();
    for (const UncertaintyConstantEntry& e : uc.entries) {
      if (e.value < min_entry->value) min_entry = &e;
    }
    json entries(nullptr);  // elided above 256 selections to keep reports lean
    if (uc.entries.size() <= 256) {
      entries = json::array();
      for (const UncertaintyConstantEntry& e : uc.entries) {
        entries.push_back({{"selection", selection_json(e.selection)},
                           {"value", e.value}});
      }
    }
    report["constants"] = {{"alpha", uc.alpha},
                           {"beta", uc.beta},
                           {"order", uc.order},
                           {"C_s", uc.C_s},
                           {"C", uc.C},
                           {"entries_count", uc.entries.size()},
                           {"min_entry",
                            {{"selection", selection_json(min_entry->selection)},
                             {"value", min_entry->value}}},
                           {"entries", std::move(entries)}};

    // Sample the norm inequality with the global constant C on every
    // admissible selection, capping the total draw count so large
    // enumerations stay fast.
    std::mt19937_64 rng(opt.seed);
    const long long cap = 200000;
    const long long n_entries = static_cast<long long>(uc.entries.size());
    int trials_per_selection = opt.trials;
    if (n_entries * opt.trials > cap) {
      trials_per_selection = std::max(1, static_cast<int>(cap / n_entries));
    }
    long long violations = 0;
    for (const UncertaintyConstantEntry& e : uc.entries) {
      const IndexSet sc = e.selection.s_complement();
      const IndexSet tc = e.selection.t_complement();
      for (int t = 0; t < trials_per_selection; ++t) {
        const CVector x = random_unit_state(a.dim(), rng);
        double mass = 0.0;
        for (int k : sc) mass += std::norm(a.vector(k - 1).dot(x));
        for (int j : tc) mass += std::norm(b.vector(j - 1).dot(x));
        if (1.0 > uc.C * mass + 1e-9) ++violations;
      }
    }
    checks.push_back({"uncertainty_inequality_sampling", json(0), json(violations),
                      violations == 0});

    for (const Frame* f : {&a, &b}) {
      const double residual = to_povm(*f, opt.tol).identity_residual();
      checks.push_back({"povm_residual:" + f->label(), json(kPovmResidualTol),
                        json(residual), residual < kPovmResidualTol});
    }
  }

  append_gj_sections(a, b, opt, report, checks, discrepancies);

  // Published values for the bundled examples.
  if (const auto claim = fixtures::published_pair_order(a.label(), b.label())) {
    if (*claim != order_result.order) {
      discrepancies.push_back({"order(" + a.label() + ", " + b.label() + ")",
                               json(*claim), json(order_result.order),
                               "subset-rank+support-oracle"});
    }
  }
  if (const auto claim = fixtures::published_pair_spark(a.label(), b.label())) {
    if (sp.infinite() || *claim != *sp.value) {
      discrepancies.push_back({"spark(" + a.label() + ", " + b.label() + ")",
                               json(*claim),
                               sp.value ? json(*sp.value) : json("infinite"),
                               "spark-scan"});
    }
  }

  report["checks"] = checks_json(checks);
  report["discrepancies"] = discrepancies_json(discrepancies);
  out = opt.format == "text" ? render_text(report) : report.dump(2) + "\n";
  for (const Check& c : checks) {
    if (!c.pass) return 4;
  }
  return 0;
}

int cmd_multi(const std::vector<std::string>& paths, const Options& opt,
              std::string& out) {
  if (paths.size() < 3) {
    fail(ErrorCode::TooFewFrames, "multi needs at least three frame files");
  }
  std::vector<Frame> frames;
  frames.reserve(paths.size());
  for (const std::string& p : paths) frames.push_back(read_frame_file(p, opt.tol));
  int total = 0;
  for (const Frame& f : frames) total += f.size();
  opt.budget.check_instance(frames.front().dim(), total);

  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;
  json report = empty_report(opt);
  for (const Frame& f : frames) {
    report["frames"].push_back(frame_json(f, frame_bounds(f, opt.tol), opt.tol));
  }

  const MultiResult result = pairwise_orders(frames, opt.tol, opt.budget);
  const MultiResult rank_engine = multi_annihilation_order(frames, opt.tol, opt.budget);
  const MultiResult oracle_engine = multi_min_support_sum(frames, opt.tol, opt.budget);

  json selections = json::array();
  for (const IndexSet& s : result.selection.subsets) selections.push_back(s);
  report["multi"] = {{"order", result.order},
                     {"method", method_name(result.method)},
                     {"selection", std::move(selections)},
                     {"witness", state_json(result.witness)},
                     {"pairwise_sum", result.pairwise_sum},
                     {"bound_lhs", result.bound_lhs},
                     {"bound_holds", result.bound_holds},
                     {"strict", result.strict},
                     {"general_bound_holds", result.general_bound_holds}};

  json entries = json::array();
  const int n = int(frames.size());
  std::vector<std::vector<int>> table(std::size_t(n), std::vector<int>(std::size_t(n), 0));
  for (const PairwiseEntry& e : result.pairwise) {
    table[std::size_t(e.i - 1)][std::size_t(e.j - 1)] = e.order;
    table[std::size_t(e.j - 1)][std::size_t(e.i - 1)] = e.order;
    entries.push_back({{"i", e.i},
                       {"j", e.j},
                       {"order", e.order},
                       {"order_subset_rank", e.order_subset_rank},
                       {"order_support_oracle", e.order_support_oracle},
                       {"engines_agree", e.engines_agree},
                       {"both_tight", e.both_tight},
                       {"method", method_name(e.method)}});
    checks.push_back({"pair_engines_agree:" + std::to_string(e.i) + "," +
                          std::to_string(e.j),
                      json(e.order_subset_rank), json(e.order_support_oracle),
                      e.engines_agree});
    const auto claim = fixtures::published_pair_order(
        frames[std::size_t(e.i - 1)].label(), frames[std::size_t(e.j - 1)].label());
    if (claim && *claim != e.order) {
      discrepancies.push_back({"order(" + frames[std::size_t(e.i - 1)].label() +
                                   ", " + frames[std::size_t(e.j - 1)].label() + ")",
                               json(*claim), json(e.order),
                               "subset-rank+support-oracle"});
    }
  }
  report["pairwise"] = {{"table", table}, {"entries", std::move(entries)}};

  checks.push_back({"multi_engines_agree", json(rank_engine.order),
                    json(oracle_engine.order),
                    rank_engine.order == oracle_engine.order});
  if (n <= 3) {
    checks.push_back({"pairwise_half_sum_le_order", json(result.bound_lhs),
                      json(result.order), result.bound_holds});
  } else {
    // The half-sum form is published for triples; beyond that the provable
    // bound is pairwise_sum <= (n-1) * order, and a failing half-sum is a
    // property of the published statement, not of this run.
    checks.push_back({"pairwise_sum_le_nminus1_order", json(result.pairwise_sum),
                      json((n - 1) * result.order), result.general_bound_holds});
    if (!result.bound_holds) {
      discrepancies.push_back(
          {"half pairwise sum bound on " + std::to_string(n) + " frames",
           json("(1/2) sum s_ij <= s"),
           json(std::to_string(result.bound_lhs) + " > " +
                std::to_string(result.order)),
           "pairwise-bound"});
    }
  }
  int recount = 0;
  for (const Frame& f : frames) recount += support_count(f, result.witness, opt.tol);
  checks.push_back({"witness_support_recount", json(result.order), json(recount),
                    recount == result.order});

  std::vector<std::string> labels;
  for (const Frame& f : frames) labels.push_back(f.label());
  if (const auto claim = fixtures::published_multi_order(labels)) {
    if (*claim != result.order) {
      discrepancies.push_back({"multi order", json(*claim), json(result.order),
                               method_name(result.method)});
    }
  }

  report["checks"] = checks_json(checks);
  report["discrepancies"] = discrepancies_json(discrepancies);
  out = opt.format == "text" ? render_text(report) : report.dump(2) + "\n";
  for (const Check& c : checks) {
    if (!c.pass) return 4;
  }
  return 0;
}

int cmd_generate(const std::string& kind, int dim, int n, const Options& opt,
                 std::string& out) {
  std::optional<Frame> frame;
  if (fixtures::is_bundled_kind(kind)) {
    frame = fixtures::bundled(kind);
  } else if (kind == "orthonormal") {
    frame = fixtures::orthonormal_basis(dim);
  } else if (kind == "fourier") {
    frame = fixtures::fourier_basis(dim);
  } else if (kind == "parseval") {
    frame = random_parseval_frame(dim, n, opt.seed);
  } else {
    fail(ErrorCode::InvalidInput, "unknown generator kind '" + kind + "'");
  }
  out = frame_to_json(*frame);
  return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"incompatibility structure of frames and rank-one POVMs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("INCOMPAT_BUDGET_OVERRIDE");
      env && std::string(env) == "1") {
    opt.budget.force = true;
  }

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--tol-rank", opt.tol.rel_rank_tol, "relative rank tolerance");
    cmd->add_option("--tol-support", opt.tol.support_tol, "support tolerance");
    cmd->add_option("--seed", opt.seed, "random seed for sampling harnesses");
    cmd->add_option("--trials", opt.trials, "states per sampling check")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--force", opt.budget.force, "override the size budget guard");
    cmd->add_option("--format", opt.format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opt.out_path, "write the output to a file");
  };

  std::string path_a, path_b, gen_kind;
  std::vector<std::string> multi_paths;
  int gen_dim = 2, gen_n = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a frame file");
  validate->add_option("file", path_a, "frame file")->required();
  add_common(validate);

  CLI::App* analyze =
      app.add_subcommand("analyze", "two-frame incompatibility analysis");
  analyze->add_option("fileA", path_a, "first frame file")->required();
  analyze->add_option("fileB", path_b, "second frame file")->required();
  analyze->add_option("--gj", opt.gj_selections,
                      "selection 'S=1,2;T=3' for the coherence bound (repeatable)");
  add_common(analyze);

  CLI::App* multi = app.add_subcommand("multi", "n-frame incompatibility analysis");
  multi->add_option("files", multi_paths, "frame files (>= 3)")->required();
  add_common(multi);

  CLI::App* generate = app.add_subcommand("generate", "emit a frame file");
  generate->add_option("--kind", gen_kind,
                       "parseval | orthonormal | fourier | bundled example kind")
      ->required();
  generate->add_option("--dim", gen_dim, "dimension d");
  generate->add_option("--n", gen_n, "vector count (parseval)");
  add_common(generate);

  CliResult result;
  std::vector<const char*> argv;
  argv.push_back("incompat");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::CallForVersion& e) {
    result.out = std::string(kVersion) + "\n";
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 1;
    return result;
  }

  try {
    std::string out;
    if (validate->parsed()) {
      result.exit_code = cmd_validate(path_a, opt, out);
    } else if (analyze->parsed()) {
      result.exit_code = cmd_analyze(path_a, path_b, opt, out);
    } else if (multi->parsed()) {
      result.exit_code = cmd_multi(multi_paths, opt, out);
    } else if (generate->parsed()) {
      if (gen_n == 0) gen_n = gen_dim;
      result.exit_code = cmd_generate(gen_kind, gen_dim, gen_n, opt, out);
    }
    if (!opt.out_path.empty()) {
      std::ofstream f(opt.out_path, std::ios::binary);
      if (!f) fail(ErrorCode::InvalidInput, "cannot write '" + opt.out_path + "'");
      f << out;
    } else {
      result.out = out;
    }
  } catch (const Error& e) {
    result.err = std::string("error [") + error_code_name(e.code()) + "]: " +
                 e.what() + "\n";
    switch (e.code()) {
      case ErrorCode::InvalidInput:
      case ErrorCode::ParseError:
        result.exit_code = 1;
        break;
      case ErrorCode::BudgetExceeded:
        result.exit_code = 3;
        break;
      default:
        result.exit_code = 2;
        break;
    }
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 1;
  }
  return result;
}

}  // namespace incompat
