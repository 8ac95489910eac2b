// Copyright 2026 The dimernet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dimernet/bounds.hpp"
#include "dimernet/cli.hpp"
#include "dimernet/entanglement.hpp"
#include "dimernet/io.hpp"
#include "dimernet/matchings.hpp"

namespace dimernet::cli {
namespace {

using io::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lattice;
  std::string defects = "none";
  std::string mode = "symmetric";
  std::string state_path;
  std::uint64_t seed = 1;
  double tol = kDefaultGmeTolerance;
  std::string out;
  bool full = false;
  int max_nodes = default_node_budget();

  // subcommand specific
  std::string keep;
  std::string pair;
  int trials = 20;
  int triples = 100;
  int max_subset = 3;
  std::string m_list = "4,20,100,inf";
  std::string p3_grid = "0.5:1.0:0.005";
  double p1 = 0.0;
  double p3 = 1.0;
  std::string m = "4";
};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::vector<int> parse_nodes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ContractError("invalid node list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

DefectMode parse_mode(const std::string& mode) {
  if (mode == "symmetric" || mode == "sym") return DefectMode::symmetric;
  if (mode == "fixed") return DefectMode::fixed;
  throw ContractError("unknown --mode '" + mode + "'");
}

json config_echo(const Options& o) {
  return json{{"lattice", o.lattice}, {"defects", o.defects}, {"mode", o.mode},
              {"seed", o.seed},       {"tol", o.tol},         {"max_nodes", o.max_nodes},
              {"state", o.state_path}};
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path + "'");
}

struct Loaded {
  std::optional<LatticeGraph> graph;
  QutritState state;
};

LatticeGraph load_graph(const Options& o) {
  if (o.lattice.empty()) throw ContractError("--lattice is required");
  return io::parse_lattice(o.lattice, o.max_nodes);
}

DefectPattern load_defects(const Options& o) { return io::parse_defects(o.defects, parse_mode(o.mode)); }

Loaded load_state(const Options& o) {
  if (!o.state_path.empty()) {
    std::ifstream in(o.state_path, std::ios::binary);
    if (!in) throw IoError("cannot open state dump '" + o.state_path + "'");
    QutritState s = io::read_state_dump(in);
    std::optional<LatticeGraph> g;
    if (!o.lattice.empty()) g = load_graph(o);
    return {std::move(g), std::move(s)};
  }
  LatticeGraph g = load_graph(o);
  QutritState s = build_state(g, load_defects(o), o.max_nodes);
  return {std::move(g), std::move(s)};
}

void add_state_options(CLI::App* sub, Options& o) {
  sub->add_option("--lattice", o.lattice, "Lattice: JSON file, inline JSON, or chain:L / square:LxW / complete:N");
  sub->add_option("--defects", o.defects, "Defects: sym:P | fixed:i,j,k | none | P");
  sub->add_option("--mode", o.mode, "Defect mode for a bare count: symmetric | fixed");
  sub->add_option("--max-nodes", o.max_nodes, "Node budget (default 12 or DIMERNET_MAX_NODES)")
      ->check(CLI::Range(1, kHardNodeLimit));
  sub->add_option("--seed", o.seed, "Seed for randomized checks");
  sub->add_option("--tol", o.tol, "Mixedness tolerance for the GME certificate");
  sub->add_option("--out", o.out, "Output path (stdout when omitted)");
}

// --- build-state -----------------------------------------------------------

int cmd_build_state(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw ContractError("build-state needs --out <file>");
  const LatticeGraph g = load_graph(o);
  const QutritState s = build_state(g, load_defects(o), o.max_nodes);
  std::ostringstream bytes;
  io::write_state_dump(bytes, s);
  emit(o.out, bytes.str(), out);
  json summary = io::envelope("build-state", s.meta(), config_echo(o));
  summary["node_count"] = s.node_count();
  summary["amplitude_count"] = s.amplitudes().size();
  summary["out"] = o.out;
  out << summary.dump() << '\n';
  return kOk;
}

// --- coverings -------------------------------------------------------------

int cmd_coverings(const Options& o, std::ostream& out) {
  const LatticeGraph g = load_graph(o);
  const DefectPattern p = load_defects(o);
  p.validate(g);
  const int n = g.node_count();

  std::vector<NodeMask> placements;
  if (p.mode == DefectMode::fixed) {
    placements.push_back(nodes_to_mask(p.defect_nodes, n));
  } else {
    for (NodeMask m = 0; m <= full_mask(n); ++m) {
      if (popcount(m) == p.defect_count) placements.push_back(m);
      if (m == full_mask(n)) break;
    }
    std::sort(placements.begin(), placements.end(), [](NodeMask a, NodeMask b) {
      return mask_to_nodes(a) < mask_to_nodes(b);
    });
  }

  std::uint64_t total = 0;
  std::ostringstream lines;
  json per_placement = json::array();
  for (NodeMask d : placements) {
    const NodeMask occupied = full_mask(n) & ~d;
    const std::uint64_t c = count_coverings(g, occupied);
    total += c;
    per_placement.push_back({{"defect_nodes", mask_to_nodes(d)}, {"count", c}});
    if (o.full) {
      for (const DimerCovering& cov : enumerate_coverings(g, occupied).coverings) {
        json pairs = json::array();
        for (auto [a, b] : cov.pairs) pairs.push_back({a, b});
        lines << json{{"defect_nodes", mask_to_nodes(d)}, {"pairs", pairs}}.dump() << '\n';
      }
    }
  }
  json summary = io::envelope("coverings", StateMeta{g.id(), p}, config_echo(o));
  summary["count"] = total;
  summary["placements"] = per_placement;
  summary["admits_covering"] = total > 0;
  emit(o.out, summary.dump() + "\n" + lines.str(), out);
  return kOk;
}

// --- rdm -------------------------------------------------------------------

int cmd_rdm(const Options& o, std::ostream& out) {
  const Loaded l = load_state(o);
  const std::vector<int> keep = parse_nodes(o.keep);
  const DensityMatrix rho = partial_trace(l.state, keep);
  json doc = io::envelope("rdm", l.state.meta(), config_echo(o));
  doc["keep"] = keep;
  doc["rdm"] = io::to_json(rho);
  doc["entropy"] = entropy(rho);
  if (keep.size() == 1) doc["single_node_form"] = io::to_json(fit_single(rho));
  if (keep.size() == 2) {
    doc["two_node_form"] = io::to_json(fit_two(rho));
    doc["ppt"] = io::to_json(ppt_check(rho));
    doc["log_negativity"] = log_negativity(rho);
  }
  emit(o.out, io::dump(doc), out);
  return kOk;
}

// --- entanglement ----------------------------------------------------------

json pair_report(const QutritState& s, const std::optional<LatticeGraph>& g, int a, int b) {
  const DensityMatrix rho = partial_trace(s, {a, b});
  json j{{"a", a},
         {"b", b},
         {"form", io::to_json(fit_two(rho))},
         {"ppt", io::to_json(ppt_check(rho))},
         {"log_negativity", log_negativity(rho)},
         {"entropy", entropy(rho)}};
  j["distance"] = g ? json(g->distance(a, b)) : json(nullptr);
  return j;
}

int cmd_entanglement(const Options& o, std::ostream& out) {
  const Loaded l = load_state(o);
  json doc = io::envelope("entanglement", l.state.meta(), config_echo(o));
  json pairs = json::array();
  if (!o.pair.empty()) {
    const std::vector<int> ab = parse_nodes(o.pair);
    if (ab.size() != 2) throw ContractError("--pair takes exactly two nodes");
    pairs.push_back(pair_report(l.state, l.graph, ab[0], ab[1]));
  } else {
    for (int b = 1; b < l.state.node_count(); ++b) pairs.push_back(pair_report(l.state, l.graph, 0, b));
    if (l.graph) {
      json classes = json::array();
      for (const BoundCheck& c : check_telecloning_bounds(l.state, *l.graph)) {
        json j{{"distance", c.pair_class.distance},
               {"partners", c.pair_class.partners},
               {"m", c.pair_class.partners.size()},
               {"form", io::to_json(c.pair_class.form)},
               {"applicable", c.applicable},
               {"satisfied", c.satisfied},
               {"f_clo", c.f_clo}};
        j["q_max"] = c.applicable ? json(c.q_max) : json(nullptr);
        j["f_tele_lower"] = c.applicable ? json(c.f_tele_lower) : json(nullptr);
        classes.push_back(j);
      }
      doc["telecloning_classes"] = classes;
    }
  }
  doc["pairs"] = pairs;
  emit(o.out, io::dump(doc), out);
  return kOk;
}

// --- gme -------------------------------------------------------------------

int cmd_gme(const Options& o, std::ostream& out) {
  const Loaded l = load_state(o);
  GmeOptions opts;
  opts.tolerance = o.tol;
  opts.record_purities = o.full;
  const GMEReport r = certify_gme(l.state, opts);
  json doc = io::envelope("gme", l.state.meta(), config_echo(o));
  doc["report"] = io::to_json(r);
  emit(o.out, io::dump(doc), out);
  if (!o.out.empty()) {
    out << "certified=" << (r.certified ? "true" : "false")
        << " min_mixedness=" << fmt("%.6e", r.min_mixedness)
        << " bipartitions=" << r.bipartitions_checked << '\n';
  }
  return kOk;
}

// --- bounds ----------------------------------------------------------------

std::vector<CopyCount> parse_m_list(const std::string& text) {
  std::vector<CopyCount> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(CopyCount::parse(item));
  if (out.empty()) throw ContractError("--m needs at least one value");
  return out;
}

int cmd_bounds_fig1(const Options& o, std::ostream& out) {
  const auto rows = figure1_data(parse_m_list(o.m_list), parse_grid(o.p3_grid), o.p1);
  std::ostringstream csv;
  write_figure1_csv(csv, rows);
  emit(o.out, csv.str(), out);
  if (!o.out.empty()) {
    json meta{{"schema_version", io::report_schema_version()},
              {"command", "bounds fig1"},
              {"convention", kCanonicalOrderConvention},
              {"defect_mode", "n/a"},
              {"config", {{"m", o.m_list}, {"p3_grid", o.p3_grid}, {"p1", o.p1}}},
              {"columns", {"one_minus_p3", "m", "q_max", "clamped", "ln_max"}},
              {"rows", rows.size()}};
    emit(o.out + ".meta.json", io::dump(meta), out);
  }
  return kOk;
}

int cmd_bounds_point(const Options& o, std::ostream& out) {
  json doc{{"schema_version", io::report_schema_version()},
           {"command", "bounds point"},
           {"convention", kCanonicalOrderConvention},
           {"defect_mode", "n/a"},
           {"config", {{"m", o.m}, {"p1", o.p1}, {"p3", o.p3}}}};
  doc["report"] = io::to_json(bound_report(o.p1, o.p3, CopyCount::parse(o.m)));
  emit(o.out, io::dump(doc), out);
  return kOk;
}

// --- verify ----------------------------------------------------------------

void subsets_up_to(int n, int max_size, std::vector<std::vector<int>>& out) {
  for (NodeMask m = 1; m <= full_mask(n); ++m) {
    if (popcount(m) <= max_size) out.push_back(mask_to_nodes(m));
    if (m == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LatticeGraph g = load_graph(o);
  const DefectPattern p = load_defects(o);
  const QutritState s = build_state(g, p, o.max_nodes);
  const int n = s.node_count();
  Rng rng(o.seed);
  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail, json data) {
    out << (pass ? "PASS " : "FAIL ") << name << ' ' << detail << '\n';
    data["name"] = name;
    data["pass"] = pass;
    checks.push_back(std::move(data));
    all_pass = all_pass && pass;
  };

  // Reduced-state invariance under (1 (+) u)^{(x) x}.
  std::vector<std::vector<int>> subsets;
  subsets_up_to(n, std::min({o.max_subset, n, kDefaultMaxRdmNodes}), subsets);
  double worst = 0.0;
  for (const auto& subset : subsets) worst = std::max(worst, verify_lemma(s, subset, o.trials, rng));
  record("lemma", worst < 1e-10,
         "max_deviation=" + fmt("%.3e", worst) + " subsets=" + std::to_string(subsets.size()) +
             " trials=" + std::to_string(o.trials),
         {{"max_deviation", worst}, {"subsets", subsets.size()}, {"trials", o.trials}});

  // Whole-state invariance up to a global phase.
  double worst_fid = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    worst_fid = std::max(worst_fid, std::abs(1.0 - fidelity(apply_local_unitary(s, haar_unitary(rng)), s)));
  }
  record("state_invariance", worst_fid < 1e-10, "max_infidelity=" + fmt("%.3e", worst_fid),
         {{"max_infidelity", worst_fid}});

  // Strong subadditivity on random disjoint triples.
  double min_slack = std::numeric_limits<double>::infinity();
  if (n >= 2) {
    for (int t = 0; t < o.triples; ++t) {
      const NodeTriple tr = random_disjoint_triple(n, rng);
      min_slack = std::min(min_slack, ssa_check(s, tr.a, tr.b, tr.c));
    }
  }
  const bool ssa_ok = n < 2 || min_slack >= -1e-9;
  record("ssa", ssa_ok, "min_slack=" + fmt("%.3e", n >= 2 ? min_slack : 0.0) + " triples=" + std::to_string(o.triples),
         {{"min_slack", n >= 2 ? min_slack : 0.0}, {"triples", o.triples}});

  // GME: expected for isotropic placements with at least one spin.
  GmeOptions gopts;
  gopts.tolerance = o.tol;
  const GMEReport gme = certify_gme(s, gopts);
  const bool expect_gme =
      p.mode == DefectMode::symmetric ? p.defect_count < n : p.defect_count == 0;
  record("gme", gme.certified == expect_gme,
         std::string("certified=") + (gme.certified ? "true" : "false") +
             " expected=" + (expect_gme ? "true" : "false") +
             " min_mixedness=" + fmt("%.3e", gme.min_mixedness),
         {{"report", io::to_json(gme)}, {"expected", expect_gme}});

  out << (all_pass ? "PASS" : "FAIL") << '\n';
  if (!o.out.empty()) {
    json doc = io::envelope("verify", s.meta(), config_echo(o));
    doc["checks"] = checks;
    doc["pass"] = all_pass;
    emit(o.out, io::dump(doc), out);
  }
  return all_pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dimernet: exact dimer-network states with defects"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build-state", "Build a state and write a binary dump");
  add_state_options(build, o);

  auto* cov = app.add_subcommand("coverings", "Count (and with --full list) dimer coverings");
  add_state_options(cov, o);
  cov->add_flag("--full", o.full, "Emit every covering as a JSON line");

  auto* rdm = app.add_subcommand("rdm", "Reduced density matrix and fitted form");
  add_state_options(rdm, o);
  rdm->add_option("--keep", o.keep, "Nodes to keep, e.g. 0,1")->required();
  rdm->add_option("--state", o.state_path, "Read the state from a build-state dump");

  auto* ent = app.add_subcommand("entanglement", "PPT, log-negativity and telecloning checks");
  add_state_options(ent, o);
  ent->add_option("--pair", o.pair, "Single pair a,b (default: node 0 against every other node)");
  ent->add_option("--state", o.state_path, "Read the state from a build-state dump");

  auto* gme = app.add_subcommand("gme", "Bipartition purity scan");
  add_state_options(gme, o);
  gme->add_flag("--full", o.full, "Include every bipartition purity");
  gme->add_option("--state", o.state_path, "Read the state from a build-state dump");

  auto* bounds = app.add_subcommand("bounds", "Telecloning bounds");
  bounds->require_subcommand(1);
  auto* fig1 = bounds->add_subcommand("fig1", "Maximum permissible log-negativity curves (CSV)");
  fig1->add_option("--m", o.m_list, "Clone counts, e.g. 4,20,100,inf");
  fig1->add_option("--p3-grid", o.p3_grid, "lo:hi:step grid of p3'");
  fig1->add_option("--p1", o.p1, "p1' held fixed");
  fig1->add_option("--out", o.out, "CSV path (stdout when omitted)");
  auto* point = bounds->add_subcommand("point", "Bound report for one (p1', p3', M)");
  point->add_option("--p1", o.p1, "p1'");
  point->add_option("--p3", o.p3, "p3'");
  point->add_option("--m", o.m, "Clone count or inf");
  point->add_option("--out", o.out, "JSON path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Invariance, SSA and GME suite");
  add_state_options(verify, o);
  verify->add_option("--trials", o.trials, "Haar unitaries per check")->check(CLI::PositiveNumber);
  verify->add_option("--triples", o.triples, "Random SSA triples")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-subset", o.max_subset, "Largest subset for the reduced-state check")
      ->check(CLI::Range(1, kDefaultMaxRdmNodes));

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*build) return cmd_build_state(o, out);
    if (*cov) return cmd_coverings(o, out);
    if (*rdm) return cmd_rdm(o, out);
    if (*ent) return cmd_entanglement(o, out);
    if (*gme) return cmd_gme(o, out);
    if (*fig1) return cmd_bounds_fig1(o, out);
    if (*point) return cmd_bounds_point(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const LatticeSpecError& e) {
    err << "invalid lattice: " << e.what() << '\n';
    return kInvalidLattice;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kContractViolation;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace dimernet::cli
