// fproot: command-line front end for the spectral, quiver, module and fp
// engines.
//
// Exit codes: 0 success, 2 parse error, 3 budget exhausted (partial output
// written), 4 internal invariant violation.

#include "fproot/fpcore.hpp"
#include "fproot/io.hpp"
#include "fproot/quiver.hpp"
#include "fproot/repmod.hpp"
#include "fproot/spectral.hpp"
#include "fproot/tables.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>

using namespace fproot;

namespace {

constexpr int exit_parse = 2;
constexpr int exit_budget = 3;
constexpr int exit_invariant = 4;

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Job {
  std::string input;
  std::string module_file;
  std::string simple_name;
  std::string surface;
  std::string quiver_command;
  std::string out;
  std::string format = "json";
  std::size_t budget_dim = 4;
  std::size_t budget_set_size = 4;
  std::size_t budget_power = 10;
  std::size_t max_sets = 2'000'000;
  std::size_t depth = 8;
  std::uint64_t seed = 1;
  long range = 6;
  long n = 1;
  long genus = 3;
  bool check = false;
};

void emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(job.out);
  if (!f) throw std::runtime_error("cannot write '" + job.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void require_format(const Job& job, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (job.format == a) return;
  throw ParseError("format '" + job.format + "' is not available for this command");
}

int cmd_spectral(const Job& job) {
  require_format(job, {"json"});
  const ExtendedMatrix m = parse_matrix(read_json_file(job.input));
  Json j = spectral_to_json(rho_extended(m));
  j["size"] = m.size();
  j["version"] = version;
  emit(job, j.dump(2));
  return 0;
}

int cmd_quiver(const Job& job) {
  const Quiver q = parse_quiver(read_json_file(job.input));
  Json j;
  if (job.quiver_command == "dot") {
    require_format(job, {"dot", "json"});
    emit(job, to_dot(q));
    return 0;
  }
  require_format(job, {"json"});
  if (job.quiver_command == "fpdim") {
    j["fpdim"] = spectral_to_json(quiver_fpdim(q));
  } else if (job.quiver_command == "cycles") {
    const CycleNumber c = cycle_number(q);
    j["theta"] = to_string(c.global);
    Json per = Json::object();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) per[q.vertices()[v]] = to_string(c.per_vertex[v]);
    j["per_vertex"] = per;
    const TrichotomyReport t = fpdim_trichotomy_check(q);
    j["fpdim"] = spectral_to_json(t.fpdim);
    j["trichotomy_consistent"] = t.pass;
    if (job.check && !t.pass) throw InvariantViolation("cycle number and fpdim disagree");
  } else if (job.quiver_command == "classify") {
    if (q.vertex_count() == 0) throw ParseError("classify: empty quiver");
    const DynkinType t = classify_underlying_graph(q);
    j["type"] = t.name();
    j["class"] = t.is_dynkin() ? "ADE" : t.is_extended() ? "extended-ADE" : "other";
    j["rank"] = t.rank;
    j["symmetric_fpdim"] = spectral_to_json(rho(symmetric_adjacency(q)));
  } else {
    throw ParseError("unknown quiver subcommand '" + job.quiver_command + "'");
  }
  j["version"] = version;
  emit(job, j.dump(2));
  return 0;
}

AlgebraPtr load_algebra(const Job& job) {
  try {
    return share(parse_algebra(read_json_file(job.input)));
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError(std::string("algebra build failed: ") + e.what());
  }
}

int cmd_fp_scan(const Job& job) {
  require_format(job, {"json", "csv"});
  if (job.budget_dim == 0 || job.budget_set_size == 0 || job.budget_power == 0)
    throw ParseError("budgets must be positive");
  const AlgebraPtr a = load_algebra(job);
  CandidateOptions opts;
  opts.max_dim = job.budget_dim;
  opts.seed = job.seed;
  const auto candidates = brick_candidates(a, opts);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    names.push_back(candidates[i].name().empty() ? "X" + std::to_string(i) : candidates[i].name());
  const auto tables = ext_power_tables(candidates, job.budget_power);
  const FpReport r = fp_report(names, tables[0], ext_assignments(tables), {job.budget_set_size, job.max_sets});

  if (job.check) {
    for (const auto& row : r.grid)
      for (const auto& c : row)
        if (!c.witness.empty() && !std::holds_alternative<BrickSet>(verify_brick_set(c.witness, tables[0])))
          throw InvariantViolation("witness is not a brick set");
  }

  if (job.format == "csv") {
    emit(job, report_grid_csv(r));
  } else {
    Json extra{{"max_dim", job.budget_dim}, {"max_power", job.budget_power}, {"seed", job.seed}};
    Json j = report_to_json(r, extra);
    j["algebra"] = algebra_to_json(*a);
    j["candidate_count"] = candidates.size();
    Json dims = Json::array();
    for (const auto& c : candidates) dims.push_back(module_to_json(c)["dimvec"]);
    j["candidate_dimvecs"] = dims;
    emit(job, j.dump(2));
  }
  return r.exhausted ? exit_budget : 0;
}

int cmd_resolve(const Job& job) {
  require_format(job, {"json"});
  const AlgebraPtr a = load_algebra(job);
  const Quiver& q = a->quiver();
  Representation m;
  if (!job.module_file.empty()) {
    m = parse_module(read_json_file(job.module_file), a);
  } else if (!job.simple_name.empty()) {
    std::string v = job.simple_name;
    if (!q.find_vertex(v) && v.size() > 1 && v[0] == 'S') v = v.substr(1);
    if (!q.find_vertex(v)) throw ParseError("unknown simple module '" + job.simple_name + "'");
    m = simple(a, q.vertex_index(v));
  } else {
    throw ParseError("resolve needs --module or --simple");
  }
  if (m.is_zero()) throw ParseError("resolve: zero module");

  const Resolution res = minimal_resolution(m, job.depth + 1);
  if (job.check && !is_minimal(res)) throw InvariantViolation("resolution is not minimal");
  const auto s = simples(a);
  Json j;
  j["version"] = version;
  j["budgets"] = {{"depth", job.depth}};
  j["module"] = module_to_json(m);
  Json steps = Json::array();
  for (std::size_t i = 0; i < res.steps.size() && i <= job.depth; ++i) {
    Json mult = Json::object();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) mult[q.vertices()[v]] = res.steps[i].multiplicity[v];
    steps.push_back({{"step", i}, {"multiplicity", mult}, {"rank", res.steps[i].generators.size()}});
  }
  j["steps"] = steps;
  j["projective_dimension"] = res.finite ? Json(res.length()) : Json(nullptr);
  j["minimal"] = is_minimal(res);
  Json ext_t = Json::object();
  Json ext_m = Json::array();
  for (std::size_t n = 0; n <= job.depth; ++n) {
    std::size_t total = 0;
    for (const auto& sj : s) total += ext_from_resolution(res, n, sj);
    ext_m.push_back(total);
  }
  j["ext_to_top"] = ext_m;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Resolution ri = minimal_resolution(s[i], job.depth + 1);
    Json row = Json::object();
    for (std::size_t k = 0; k < s.size(); ++k) {
      Json degs = Json::array();
      for (std::size_t n = 0; n <= job.depth; ++n) degs.push_back(ext_from_resolution(ri, n, s[k]));
      row[s[k].name()] = degs;
    }
    ext_t[s[i].name()] = row;
  }
  j["ext_simples"] = ext_t;
  if (job.depth >= 4) {
    const ComplexityReport cx = complexity_estimate(a, job.depth);
    j["complexity"] = {{"ext_dims", cx.ext_dims},
                       {"growth", growth_to_json(cx.growth)},
                       {"cx", cx.cx},
                       {"infinite", cx.infinite},
                       {"agc", {{"holds", cx.agc_holds}, {"C", cx.agc_c}, {"d", cx.agc_d}}}};
  }
  emit(job, j.dump(2));
  return 0;
}

int cmd_tables(const Job& job) {
  require_format(job, {"csv"});
  if (job.surface == "polyring") {
    if (job.genus < 0) throw ParseError("genus must be nonnegative");
    std::string csv = "g";
    for (long i = 0; i <= job.genus; ++i) csv += ",i=" + std::to_string(i);
    csv += "\n" + std::to_string(job.genus);
    for (long i = 0; i <= job.genus; ++i) csv += "," + std::to_string(polyring_surface(job.genus, i));
    emit(job, csv + "\n");
    return 0;
  }
  if (job.range < 0) throw ParseError("range must be nonnegative");
  try {
    emit(job, surface_grid_csv(job.surface, job.range, job.n));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-Perron dimensions of quivers, algebras and module categories"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", job.out, "Write output to this file");
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_flag("--check-invariants", job.check, "Verify internal invariants and exit 4 on violation");
  };

  auto* spectral = app.add_subcommand("spectral", "Extended spectral radius of a matrix file");
  spectral->add_option("matrix", job.input, "Matrix JSON file")->required();
  add_common(spectral);

  auto* quiver = app.add_subcommand("quiver", "Quiver invariants");
  quiver->add_option("command", job.quiver_command, "fpdim | cycles | classify | dot")
      ->required()
      ->check(CLI::IsMember({"fpdim", "cycles", "classify", "dot"}));
  quiver->add_option("quiver", job.input, "Quiver JSON file")->required();
  add_common(quiver);

  auto* scan = app.add_subcommand("fp-scan", "Frobenius-Perron report of an algebra's brick candidates");
  scan->add_option("algebra", job.input, "Algebra JSON file")->required();
  scan->add_option("--budget-dim", job.budget_dim, "Largest candidate module dimension");
  scan->add_option("--budget-set-size", job.budget_set_size, "Largest brick set size");
  scan->add_option("--budget-power", job.budget_power, "Largest power of the Ext functor");
  scan->add_option("--max-sets", job.max_sets, "Brick sets scanned per grid cell (0 = unlimited)");
  scan->add_option("--seed", job.seed, "Seed for random candidates");
  add_common(scan);

  auto* resolve = app.add_subcommand("resolve", "Minimal projective resolution and Ext tables");
  resolve->add_option("algebra", job.input, "Algebra JSON file")->required();
  auto* mod_opt = resolve->add_option("--module", job.module_file, "Module JSON file");
  resolve->add_option("--simple", job.simple_name, "Simple module at a vertex, e.g. S1 or 1")->excludes(mod_opt);
  resolve->add_option("--depth", job.depth, "Resolution depth");
  add_common(resolve);

  auto* tables = app.add_subcommand("tables", "Closed-form fp surfaces as CSV");
  tables->add_option("surface", job.surface, "p1-twist | p1-serre | a2 | polyring")->required();
  tables->add_option("--range", job.range, "Grid covers |a|, |b| <= range");
  tables->add_option("--n", job.n, "Brick set size n");
  tables->add_option("--genus", job.genus, "Number of variables for polyring");
  add_common(tables);
  job.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }
  if (tables->parsed() && job.format == "json") job.format = "csv";
  if (quiver->parsed() && job.quiver_command == "dot" && job.format == "json") job.format = "dot";

  try {
    if (spectral->parsed()) return cmd_spectral(job);
    if (quiver->parsed()) return cmd_quiver(job);
    if (scan->parsed()) return cmd_fp_scan(job);
    if (resolve->parsed()) return cmd_resolve(job);
    if (tables->parsed()) return cmd_tables(job);
  } catch (const ParseError& e) {
    std::cerr << "fproot: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fproot: " << e.what() << '\n';
    return exit_parse;
  } catch (const InvariantViolation& e) {
    std::cerr << "fproot: invariant violated: " << e.what() << '\n';
    return exit_invariant;
  } catch (const std::logic_error& e) {
    std::cerr << "fproot: invariant violated: " << e.what() << '\n';
    return exit_invariant;
  } catch (const std::exception& e) {
    std::cerr << "fproot: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
