#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xorkneser/analysis.hpp"
#include "xorkneser/constructions.hpp"
#include "xorkneser/errors.hpp"
#include "xorkneser/setsystem.hpp"
#include "xorkneser/solver.hpp"

using namespace xorkneser;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string kind;
  int n = 0, k = 0, ell = 0, t = 0, q = 0;
  std::vector<int> sizes, offsets;
  std::string in, out;
  std::string format = "text";
  std::uint64_t budget = kDefaultNodeBudget;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  unsigned threads = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string n_range, k_range, ell_range;
};

std::string read_file(const std::string &path) {
  if (path.empty())
    throw UsageError("--in is required");
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, stdout otherwise.
void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + cfg.out);
  out << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

// "3", "2..8" or "1,3,5".
std::vector<int> parse_range(const std::string &text, const char *name) {
  if (text.empty())
    throw UsageError(std::string("--") + name + " is required");
  std::vector<int> values;
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      if (lo > hi)
        throw UsageError(std::string("empty range for --") + name);
      for (int v = lo; v <= hi; ++v)
        values.push_back(v);
    } else {
      std::stringstream ss(text);
      for (std::string part; std::getline(ss, part, ',');)
        values.push_back(std::stoi(part));
    }
  } catch (const std::logic_error &e) {
    if (dynamic_cast<const UsageError *>(&e))
      throw;
    throw UsageError(std::string("bad range for --") + name + ": " + text);
  }
  return values;
}

CliqueOptions clique_options(const RunConfig &cfg) {
  CliqueOptions o;
  o.node_budget = cfg.budget;
  o.threads = cfg.threads;
  return o;
}

std::string format_family(const RunConfig &cfg, const Family &f) {
  return cfg.format == "json" ? encode_json(f) + "\n" : encode(f);
}

json set_json(const TransversalSet &s) { return s.elements(); }

// --- construct --------------------------------------------------------------

int cmd_construct(const RunConfig &cfg) {
  Family family{Layout(1, 1, 1)};
  std::string witness;
  if (cfg.kind == "f2") {
    family = construct_f2_lower(cfg.n, cfg.k);
    witness = "f_2(" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) +
              ") >= floor(n/k) + " + lower_c2(cfg.k).str();
  } else if (cfg.kind == "core") {
    if (cfg.ell < 3)
      throw UsageError("core needs --ell >= 3");
    std::vector<int> sizes = cfg.sizes;
    if (sizes.empty()) {
      if (cfg.n < 1)
        throw UsageError("core needs --n or --sizes");
      sizes.assign(cfg.ell, cfg.n);
    }
    if (static_cast<int>(sizes.size()) != cfg.ell)
      throw UsageError("--sizes must list ell block sizes");
    family = core_to_family(build_core(cfg.ell), sizes);
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    witness = "omega >= |V| - 2 ell - 1 = " + std::to_string(total - 2 * cfg.ell - 1);
  } else if (cfg.kind == "plane") {
    family = plane_family(cfg.q);
    witness = "omega = |V| - ell + 1 = " + std::to_string(cfg.q * cfg.q);
  } else if (cfg.kind == "matrix") {
    family = matrix_family(cfg.n, cfg.k, cfg.t);
    const int ell = (1 << cfg.t) - 1;
    witness = "f_" + std::to_string(ell) + "(" + std::to_string(cfg.n) + "," +
              std::to_string(cfg.k) + ") >= floor(n/k)^t; upper " +
              power_upper(cfg.n, cfg.k, ell).str();
  } else if (cfg.kind == "extend") {
    const Family base = decode_any(read_file(cfg.in));
    std::vector<int> offsets = cfg.offsets;
    if (offsets.empty()) {
      offsets.resize(base.layout().k());
      std::iota(offsets.begin(), offsets.end(), 0);
    }
    family = extend_power(base, offsets);
    witness = "f_" + std::to_string(family.layout().ell()) + " >= f_" +
              std::to_string(base.layout().ell());
  } else {
    throw UsageError("unknown construction '" + cfg.kind + "' (f2|core|plane|matrix|extend)");
  }

  emit(cfg, format_family(cfg, family));
  std::ostream &note = cfg.out.empty() ? std::cerr : std::cout;
  note << cfg.kind << ": size " << family.size() << " (" << witness << ")\n";
  return kOk;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const RunConfig &cfg) {
  const Family family = decode_any(read_file(cfg.in));
  const VerifyReport report = verify_family(family, cfg.threads);
  if (cfg.format == "json") {
    json j{{"schema", 1}, {"valid", report.valid}, {"size", family.size()}};
    if (report.violation) {
      const Violation &v = *report.violation;
      j["violation"] = {{"kind", v.kind == Violation::Kind::NonUniform ? "non_uniform" : "even_disjoint"},
                        {"first", v.first},
                        {"second", v.second},
                        {"disjoint_blocks", v.disjoint_blocks}};
    }
    emit(cfg, dump(j));
  } else {
    std::ostringstream out;
    if (report.valid) {
      out << "valid size " << family.size() << "\n";
    } else {
      const Violation &v = *report.violation;
      if (v.kind == Violation::Kind::NonUniform)
        out << "invalid: member " << v.first << " does not meet block " << v.disjoint_blocks
            << " in exactly k elements\n";
      else
        out << "invalid: members " << v.first << " and " << v.second << " are disjoint in "
            << v.disjoint_blocks << " blocks (even)\n";
    }
    emit(cfg, out.str());
  }
  return report.valid ? kOk : kViolation;
}

// --- solve ----------------------------------------------------------------------

CliqueGraph graph_from_config(const RunConfig &cfg) {
  if (!cfg.in.empty()) {
    const std::string text = read_file(cfg.in);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == 'p' || text[first] == 'c')) {
      std::istringstream in(text);
      return read_dimacs(in);
    }
    return family_graph(decode_any(text));
  }
  if (cfg.n < 1 || cfg.k < 1 || cfg.ell < 1)
    throw UsageError("give --n, --k and --ell, or --in");
  return build_product_graph(cfg.n, cfg.k, cfg.ell, cfg.vertex_budget);
}

int cmd_solve(const RunConfig &cfg) {
  const CliqueGraph graph = graph_from_config(cfg);
  const CliqueResult r = max_clique(graph, clique_options(cfg));
  const bool exact = r.status == CliqueStatus::Exact;
  if (cfg.format == "json") {
    json j{{"schema", 1},
           {"vertices", graph.vertex_count()},
           {"size", r.size},
           {"exact", exact},
           {"nodes", r.nodes_explored},
           {"witness", r.witness}};
    if (!graph.labels().empty()) {
      json sets = json::array();
      for (auto v : r.witness)
        sets.push_back(set_json(graph.labels()[v]));
      j["witness_sets"] = sets;
    }
    emit(cfg, dump(j));
  } else {
    std::ostringstream out;
    out << r.size << (exact ? " exact" : " lower-bound") << "\n";
    out << "vertices " << graph.vertex_count() << " nodes " << r.nodes_explored << "\n";
    for (auto v : r.witness) {
      if (!graph.labels().empty()) {
        for (auto e : graph.labels()[v].elements())
          out << e << ' ';
        out << '\n';
      } else {
        out << v + 1 << '\n';
      }
    }
    emit(cfg, out.str());
  }
  return exact ? kOk : kBudget;
}

// --- rank -------------------------------------------------------------------------

int cmd_rank(const RunConfig &cfg) {
  const Family family = decode_any(read_file(cfg.in));
  const RankCheck r = check_rank_bound(family);
  const std::size_t universe = family.layout().universe_size();
  const std::size_t bound = universe - static_cast<std::size_t>(family.layout().ell()) + 1;
  if (cfg.format == "json") {
    emit(cfg, dump(json{{"schema", 1},
                        {"size", family.size()},
                        {"rank", r.rank},
                        {"required", r.required},
                        {"holds", r.holds},
                        {"bound", bound}}));
  } else {
    std::ostringstream out;
    out << "rank " << r.rank << " required " << r.required << " holds "
        << (r.holds ? "yes" : "no") << "\n";
    out << "size " << family.size() << " bound " << bound << "\n";
    emit(cfg, out.str());
  }
  return r.holds ? kOk : kViolation;
}

// --- peel -------------------------------------------------------------------------

int cmd_peel(const RunConfig &cfg) {
  const Family family = decode_any(read_file(cfg.in));
  const PeelingTrace trace = peel(family);
  const int k = family.layout().k();
  std::optional<MatchingReport> report;
  std::optional<PermutationTypeEstimate> mc;
  if (trace.q() >= 2 && k >= 2) {
    report = verify_matching(trace.matching(k));
    if (report->valid && cfg.samples > 0)
      mc = permutation_type_mc(trace.matching(k), cfg.samples, cfg.seed);
  }
  bool accounting = trace.partition_ok && trace.residual_b_disjoint;
  for (const auto &r : trace.rounds)
    accounting = accounting && r.accounting_ok;
  const bool ok = accounting && (!report || (report->valid && report->within_bound));

  if (cfg.format == "json") {
    json rounds = json::array();
    for (const auto &r : trace.rounds)
      rounds.push_back({{"pivot", r.pivot},
                        {"containing", r.containing},
                        {"touching", r.touching},
                        {"d", r.d},
                        {"accounting_ok", r.accounting_ok}});
    json j{{"schema", 1},
           {"size", family.size()},
           {"q", trace.q()},
           {"rounds", rounds},
           {"residual", trace.residual},
           {"residual_b_disjoint", trace.residual_b_disjoint},
           {"partition_ok", trace.partition_ok},
           {"degree_exceeds_k", trace.degree_exceeds_k}};
    if (report)
      j["matching"] = {{"valid", report->valid},
                       {"reason", report->reason},
                       {"weight", report->weight},
                       {"bound", to_string(report->bound)},
                       {"within_bound", report->within_bound}};
    if (mc)
      j["permutation_types"] = {{"samples", mc->samples},
                                {"type_counts", mc->type_counts},
                                {"typeless", mc->typeless},
                                {"doubly_typed", mc->doubly_typed}};
    emit(cfg, dump(j));
  } else {
    std::ostringstream out;
    out << "size " << family.size() << " rounds " << trace.q() << " residual "
        << trace.residual.size() << "\n";
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
      const auto &r = trace.rounds[i];
      out << "round " << i + 1 << " pivot " << r.pivot << " d " << r.d << " touching "
          << r.touching.size() << (r.accounting_ok ? "" : " ACCOUNTING-FAILED") << "\n";
    }
    out << "partition " << (trace.partition_ok ? "ok" : "FAILED") << " residual-disjoint "
        << (trace.residual_b_disjoint ? "yes" : "no") << "\n";
    if (report) {
      out << "matching " << (report->valid ? "valid" : "invalid: " + report->reason)
          << " weight " << report->weight << " bound " << to_string(report->bound) << " ("
          << to_double(report->bound) << ")" << (report->within_bound ? "" : " EXCEEDED") << "\n";
    } else {
      out << "matching not formed (needs k >= 2 and at least 2 rounds)\n";
    }
    if (mc) {
      out << "samples " << mc->samples << " typeless " << mc->typeless << " doubly-typed "
          << mc->doubly_typed << "\n";
      for (std::size_t i = 0; i < mc->type_counts.size(); ++i)
        out << "type " << i + 1 << " " << mc->type_counts[i] << "\n";
    }
    emit(cfg, out.str());
  }
  return ok ? kOk : kViolation;
}

// --- table ------------------------------------------------------------------------

int cmd_table(const RunConfig &cfg) {
  const auto ells = parse_range(cfg.ell_range, "ell");
  const auto ks = parse_range(cfg.k_range, "k");
  const auto ns = parse_range(cfg.n_range, "n");
  TableOptions options;
  options.clique = clique_options(cfg);
  options.vertex_budget = cfg.vertex_budget;
  std::vector<TableRow> rows;
  for (int ell : ells)
    for (int k : ks)
      for (int n : ns) {
        if (ell < 1 || k < 1 || n < k)
          continue;
        rows.push_back(table_row(n, k, ell, options));
      }
  bool consistent = true;
  for (const auto &r : rows)
    consistent = consistent && r.consistent();
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto &r : rows) {
      json row{{"ell", r.ell},
               {"n", r.n},
               {"k", r.k},
               {"lower_construction", r.lower_construction},
               {"lower_source", r.lower_source},
               {"upper_formula", r.upper_formula.str()},
               {"upper_source", r.upper_source},
               {"tight", r.tight()},
               {"consistent", r.consistent()}};
      if (r.solved) {
        row["solved"] = r.solved->size;
        row["exact"] = r.solved->status == CliqueStatus::Exact;
      }
      arr.push_back(row);
    }
    emit(cfg, dump(json{{"schema", 1}, {"rows", arr}}));
  } else {
    emit(cfg, table_csv(rows));
  }
  return consistent ? kOk : kViolation;
}

// --- export-dimacs ----------------------------------------------------------------

int cmd_export(const RunConfig &cfg) {
  const CliqueGraph graph = graph_from_config(cfg);
  std::ostringstream out;
  write_dimacs(out, graph);
  emit(cfg, out.str());
  return kOk;
}

std::uint64_t env_budget() {
  const char *env = std::getenv("XORKNESER_BUDGET");
  if (!env || !*env)
    return kDefaultNodeBudget;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw UsageError(std::string("XORKNESER_BUDGET must be a positive integer, got '") + env + "'");
  return v;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Semi-intersecting families and xor-powers of Kneser graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };
  auto solver = [&](CLI::App *sub) {
    sub->add_option("--budget", cfg.budget, "node budget (default XORKNESER_BUDGET or 1e8)");
    sub->add_option("--vertex-budget", cfg.vertex_budget, "largest product graph to build");
    sub->add_option("--threads", cfg.threads, "solver threads")->check(CLI::Range(1u, 256u));
  };
  auto params = [&](CLI::App *sub) {
    sub->add_option("--n", cfg.n, "block size");
    sub->add_option("--k", cfg.k, "uniformity");
    sub->add_option("--ell", cfg.ell, "number of blocks");
  };

  auto *construct = app.add_subcommand("construct", "build a family");
  construct->add_option("kind", cfg.kind, "f2 | core | plane | matrix | extend")->required();
  params(construct);
  construct->add_option("--t", cfg.t, "matrix construction exponent");
  construct->add_option("--q", cfg.q, "plane order (odd prime)");
  construct->add_option("--sizes", cfg.sizes, "block sizes for core")->delimiter(',');
  construct->add_option("--offsets", cfg.offsets, "k offsets in the appended block")
      ->delimiter(',');
  construct->add_option("--in", cfg.in, "family to extend");
  common(construct);

  auto *verify = app.add_subcommand("verify", "check a family file");
  verify->add_option("--in", cfg.in, "family file")->required();
  verify->add_option("--threads", cfg.threads)->check(CLI::Range(1u, 256u));
  common(verify);

  auto *solve = app.add_subcommand("solve", "exact maximum clique");
  params(solve);
  solve->add_option("--in", cfg.in, "DIMACS graph or family file");
  solver(solve);
  common(solve);

  auto *rank = app.add_subcommand("rank", "GF(2) rank check for k = 1 families");
  rank->add_option("--in", cfg.in, "family file")->required();
  common(rank);

  auto *peelc = app.add_subcommand("peel", "peel a two-block family");
  peelc->add_option("--in", cfg.in, "family file")->required();
  peelc->add_option("--samples", cfg.samples, "orderings to sample for permutation types");
  peelc->add_option("--seed", cfg.seed, "sampling seed");
  common(peelc);

  auto *table = app.add_subcommand("table", "constructions vs exact values vs formulas");
  table->add_option("--n", cfg.n_range, "n values: a..b or a,b,c")->required();
  table->add_option("--k", cfg.k_range, "k values")->required();
  table->add_option("--ell", cfg.ell_range, "ell values")->required();
  solver(table);
  common(table);

  auto *dimacs = app.add_subcommand("export-dimacs", "write a product or family graph");
  params(dimacs);
  dimacs->add_option("--in", cfg.in, "family file");
  dimacs->add_option("--vertex-budget", cfg.vertex_budget);
  common(dimacs);

  try {
    cfg.budget = env_budget();
    app.parse(argc, argv);
    if (app.got_subcommand(construct))
      return cmd_construct(cfg);
    if (app.got_subcommand(verify))
      return cmd_verify(cfg);
    if (app.got_subcommand(solve))
      return cmd_solve(cfg);
    if (app.got_subcommand(rank))
      return cmd_rank(cfg);
    if (app.got_subcommand(peelc))
      return cmd_peel(cfg);
    if (app.got_subcommand(table))
      return cmd_table(cfg);
    if (app.got_subcommand(dimacs))
      return cmd_export(cfg);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const BudgetError &e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError &e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
