#include "gqt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gqt/formulas.hpp"
#include "gqt/graph6.hpp"
#include "gqt/kernels.hpp"
#include "gqt/registry.hpp"
#include "gqt/regularity.hpp"
#include "gqt/tvc.hpp"

namespace gqt {

namespace {

using json = nlohmann::json;

struct InputOpts {
  std::string graph6_path;
  std::string construct;
  bool dual = false;
};

struct RunOpts {
  int threads = 0;
  std::optional<double> budget;
  std::string json_out;
  std::ostream* stdout_stream = nullptr;  // target of --json-out -
};

struct Loaded {
  Graph graph;
  std::optional<Construction> construction;
  json input;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_input(CLI::App* sub, InputOpts& in) {
  auto* g6 = sub->add_option("--graph6", in.graph6_path, "graph6 file holding one graph");
  auto* cons = sub->add_option("--construct", in.construct, "built-in quadrangle: w2 w3 q5_2 q5_3 t2star payne");
  g6->excludes(cons);
  sub->add_flag("--dual", in.dual, "use the dual quadrangle");
}

void add_run(CLI::App* sub, RunOpts& run, bool budget) {
  sub->add_option("--threads", run.threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  if (budget) sub->add_option("--budget-seconds", run.budget, "wall-clock budget")->check(CLI::PositiveNumber);
  sub->add_option("--json-out", run.json_out, "write a JSON report to this path ('-' for stdout)");
}

json provenance_json(const Construction& c) {
  json p = json::object();
  for (const auto& [k, v] : c.provenance) p[k] = v;
  return p;
}

Loaded load(const InputOpts& in) {
  Loaded l;
  if (in.graph6_path.empty() == in.construct.empty()) throw UsageError("give exactly one of --graph6 or --construct");
  if (!in.construct.empty()) {
    l.construction = build_construction(in.construct, in.dual);
    l.graph = point_graph(l.construction->gq);
    l.input = {{"source", "construction"}, {"name", in.construct}, {"dual", in.dual},
               {"parameters", provenance_json(*l.construction)}};
  } else {
    if (in.dual) throw UsageError("--dual applies to --construct only");
    std::ifstream f(in.graph6_path);
    if (!f) throw UsageError("cannot read " + in.graph6_path);
    auto graphs = read_graph6(f);
    if (graphs.size() != 1) throw UsageError(in.graph6_path + ": expected exactly one graph");
    l.graph = std::move(graphs[0]);
    l.input = {{"source", "graph6"}, {"path", in.graph6_path}};
  }
  l.input["order"] = l.graph.order();
  return l;
}

Exec exec_of(const RunOpts& r) { return Exec{r.threads}; }

TvcOptions tvc_opts(const RunOpts& r) {
  TvcOptions o;
  o.exec = exec_of(r);
  if (r.budget) o.deadline = Deadline::after(*r.budget);
  return o;
}

json run_json(const RunOpts& r) {
  json j = {{"threads", r.threads}};
  j["budget_seconds"] = r.budget ? json(*r.budget) : json(nullptr);
  return j;
}

json edge_json(Edge e) { return json::array({e.first, e.second}); }

json type_json(const GraphType& ty) {
  json edges = json::array();
  for (int j = 1; j < ty.base.n; ++j)
    for (int i = 0; i < j; ++i)
      if (ty.base.adjacent(i, j)) edges.push_back(json::array({i, j}));
  json out = {{"code", ty.code.to_string()}, {"order", ty.order()}, {"pair_adjacent", ty.pair_adjacent()},
              {"edges", edges}};
  if (!ty.label.empty()) out["label"] = ty.label;
  return out;
}

std::string type_text(const GraphType& ty) {
  std::ostringstream os;
  os << ty.code.to_string() << " {";
  bool first = true;
  for (int j = 1; j < ty.base.n; ++j)
    for (int i = 0; i < j; ++i)
      if (ty.base.adjacent(i, j)) {
        os << (first ? "" : " ") << i << "-" << j;
        first = false;
      }
  os << "}";
  return os.str();
}

json witness_json(const TvcWitness& w) {
  json j = {{"level", w.level}, {"first", edge_json(w.first)}, {"second", edge_json(w.second)},
            {"first_count", w.first_count}, {"second_count", w.second_count}};
  j["type"] = w.type ? type_json(*w.type) : json(nullptr);
  return j;
}

std::string witness_text(const TvcWitness& w) {
  std::ostringstream os;
  os << "level " << w.level << ": ";
  if (w.type)
    os << "type " << type_text(*w.type) << " counts ";
  else
    os << "valencies ";
  os << w.first_count << " at (" << w.first.first << "," << w.first.second << ") vs " << w.second_count << " at ("
     << w.second.first << "," << w.second.second << ")";
  return os.str();
}

int exit_of(TvcStatus s) {
  switch (s) {
    case TvcStatus::kSatisfied: return kExitPass;
    case TvcStatus::kViolated: return kExitFail;
    case TvcStatus::kInconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

void emit_json(const RunOpts& run, const json& doc) {
  const std::string& path = run.json_out;
  if (path.empty()) return;
  if (path == "-") {
    *run.stdout_stream << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << doc.dump(2) << "\n";
}

std::optional<Edge> parse_pair(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::istringstream is(s);
  long long x = -1, y = -1;
  char comma = 0;
  if (!(is >> x >> comma >> y) || comma != ',' || x < 0 || y < 0 || !is.eof())
    throw UsageError("--pair expects x,y");
  return Edge{static_cast<Vertex>(x), static_cast<Vertex>(y)};
}

// ---------------------------------------------------------------------------

int cmd_construct(const InputOpts& in, const RunOpts& run, const std::string& incidence_out,
                  const std::string& graph6_out, std::ostream& out) {
  if (in.construct.empty() || !in.graph6_path.empty()) throw UsageError("construct needs --construct");
  const Construction c = build_construction(in.construct, in.dual);
  const PlsCheck pls = validate_pls(c.gq);
  const auto axiom = pls.ok() ? check_gq_axiom(c.gq) : std::nullopt;
  const bool ok = pls.ok() && !axiom;
  json result = {{"points", c.gq.num_points}, {"lines", c.gq.lines.size()}, {"partial_linear_space", pls.ok()},
                 {"gq_axiom", pls.ok() && !axiom}};
  if (pls.ok()) result["order"] = {{"s", pls.order->s}, {"t", pls.order->t}};
  if (!pls.ok()) result["pls_witness"] = pls.witness->describe();
  if (axiom) result["axiom_witness"] = {{"point", axiom->point}, {"line", axiom->line}, {"collinear", axiom->count}};

  out << "construction " << c.name << (c.dual ? " (dual)" : "") << ": " << c.gq.num_points << " points, "
      << c.gq.lines.size() << " lines\n";
  if (pls.ok()) out << "order (" << pls.order->s << "," << pls.order->t << ")\n";
  else out << "not a partial linear space: " << pls.witness->describe() << "\n";
  if (pls.ok()) out << "GQ axiom: " << (axiom ? "fails" : "holds") << "\n";

  if (!incidence_out.empty()) {
    std::ofstream f(incidence_out);
    if (!f) throw UsageError("cannot write " + incidence_out);
    write_incidence(f, c.gq);
  }
  if (!graph6_out.empty()) {
    std::ofstream f(graph6_out);
    if (!f) throw UsageError("cannot write " + graph6_out);
    write_graph6(f, point_graph(c.gq));
  }
  const int code = ok ? kExitPass : kExitFail;
  json doc = {{"command", "construct"},
              {"input", {{"source", "construction"}, {"name", c.name}, {"dual", c.dual}, {"parameters", provenance_json(c)}}},
              {"config", run_json(run)},
              {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

int cmd_check_srg(const InputOpts& in, const RunOpts& run, std::ostream& out) {
  const Loaded l = load(in);
  const SrgResult r = srg_parameters(l.graph, exec_of(run));
  json result;
  int code = kExitFail;
  switch (r.status) {
    case SrgStatus::kStronglyRegular: {
      const SrgParams& p = *r.params;
      result = {{"status", "srg"},
                {"parameters", {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}}},
                {"feasibility_identity", p.feasible()}};
      out << "strongly regular (" << p.v << "," << p.k << "," << p.lambda << "," << p.mu << ")"
          << ", k(k-lambda-1) = (v-k-1)mu " << (p.feasible() ? "holds" : "FAILS") << "\n";
      code = p.feasible() ? kExitPass : kExitFail;
      break;
    }
    case SrgStatus::kDegenerate:
      result = {{"status", "degenerate"}};
      out << "degenerate (complete or edgeless)\n";
      break;
    case SrgStatus::kNotStronglyRegular: {
      result = {{"status", "not_srg"}};
      const auto k = check_regular(l.graph);
      result["regular"] = k.has_value();
      if (r.witness) result["witness"] = json::array({edge_json((*r.witness)[0]), edge_json((*r.witness)[1])});
      out << "not strongly regular" << (k ? "" : " (not regular)") << "\n";
      break;
    }
  }
  json doc = {{"command", "check-srg"}, {"input", l.input}, {"config", run_json(run)}, {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

int cmd_check_isoregular(const InputOpts& in, const RunOpts& run, int k, std::ostream& out) {
  const Loaded l = load(in);
  const IsoregularityReport rep = check_isoregular(l.graph, k, exec_of(run));
  json table = json::array();
  for (const auto& [code, val] : rep.table) {
    table.push_back({{"code", code.to_string()}, {"size", code.order}, {"edges", code.edges()}, {"valency", val}});
  }
  json result = {{"k", k}, {"passed", rep.passed()}, {"table", table}};
  out << "k=" << k << ": " << (rep.passed() ? "isoregular" : "not isoregular") << "\n";
  for (const auto& [code, val] : rep.table)
    out << "  size " << int(code.order) << ", " << code.edges() << " edges: " << val << "\n";
  if (rep.witness) {
    const auto& w = *rep.witness;
    json a = json::array(), b = json::array();
    for (Vertex v : w.first) a.push_back(v);
    for (Vertex v : w.second) b.push_back(v);
    result["witness"] = {{"code", w.code.to_string()}, {"first", a}, {"second", b},
                         {"first_valency", w.first_valency}, {"second_valency", w.second_valency}};
    out << "  witness " << w.code.to_string() << ": valency " << w.first_valency << " vs " << w.second_valency << "\n";
  }
  const int code = rep.passed() ? kExitPass : kExitFail;
  json doc = {{"command", "check-isoregular"}, {"input", l.input}, {"config", run_json(run)}, {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

// Without --k, reduced runs use the highest level (<= 3) the graph passes.
int auto_k(const Graph& g, std::optional<int> k, const RunOpts& run) {
  if (k) return *k;
  for (int level = 3; level > 1; --level)
    if (check_isoregular(g, level, exec_of(run)).passed()) return level;
  return 1;
}

int cmd_check_tvc(const InputOpts& in, const RunOpts& run, int t, const std::string& mode_name,
                  std::optional<int> k_opt, std::ostream& out) {
  const Loaded l = load(in);
  const int k = mode_name == "reduced" ? auto_k(l.graph, k_opt, run) : 0;
  TvcMode mode;
  if (mode_name == "exhaustive") mode = TvcMode::exhaustive();
  else if (mode_name == "reduced") mode = TvcMode::reduced(k);
  else throw UsageError("--mode must be exhaustive or reduced");
  const TvcVerdict v = check_tvc(l.graph, t, mode, tvc_opts(run));
  json result = {{"t", t}, {"mode", mode.describe()}, {"status", to_string(v.status)},
                 {"verified_level", v.verified_level}, {"types_checked", v.types_checked},
                 {"pairs_scanned", v.pairs_scanned}};
  result["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
  out << t << "-vertex condition (" << mode.describe() << "): " << to_string(v.status)
      << ", verified through level " << v.verified_level << "\n";
  if (v.witness) out << "  witness " << witness_text(*v.witness) << "\n";
  const int code = exit_of(v.status);
  json doc = {{"command", "check-tvc"}, {"input", l.input}, {"config", run_json(run)}, {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

int cmd_find_distinguisher(const InputOpts& in, const RunOpts& run, int t, std::optional<int> k_opt,
                           std::ostream& out) {
  const Loaded l = load(in);
  const int k = auto_k(l.graph, k_opt, run);
  const DistinguisherResult r = find_distinguisher(l.graph, t, k, tvc_opts(run));
  const char* status = r.status == TvcStatus::kViolated    ? "found"
                       : r.status == TvcStatus::kSatisfied ? "absent"
                                                           : "inconclusive";
  json result = {{"t", t}, {"k", k}, {"status", status}, {"types_checked", r.types_checked}};
  result["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
  out << "distinguisher at t=" << t << " (k=" << k << "): " << status << " after " << r.types_checked << " types\n";
  if (r.witness) out << "  " << witness_text(*r.witness) << "\n";
  const int code = exit_of(r.status);
  json doc = {{"command", "find-distinguisher"}, {"input", l.input}, {"config", run_json(run)}, {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

int cmd_count_type(const InputOpts& in, const RunOpts& run, const std::string& type_g6, const std::string& formula,
                   const std::string& pair_text, std::ostream& out) {
  if (type_g6.empty() == formula.empty()) throw UsageError("give exactly one of --type or --formula");
  const Loaded l = load(in);
  std::optional<FormulaId> fid;
  std::optional<GraphType> fixed_type;
  if (!formula.empty()) fid = FormulaId::parse(formula);
  else {
    const Graph tg = from_graph6(type_g6);
    if (tg.order() < 2 || tg.order() > static_cast<std::size_t>(kMaxSmallOrder))
      throw UsageError("--type must have 2..10 vertices");
    fixed_type = GraphType::from_graph(SmallGraph::from_graph(tg));
  }
  auto type_for = [&](bool adjacent) { return fid ? formula_type(*fid, adjacent) : *fixed_type; };

  json result;
  int code = kExitPass;
  if (auto pair = parse_pair(pair_text)) {
    const auto [x, y] = *pair;
    if (x == y || x >= l.graph.order() || y >= l.graph.order()) throw UsageError("--pair out of range");
    const GraphType ty = type_for(l.graph.adjacent(x, y));
    if (ty.pair_adjacent() != l.graph.adjacent(x, y)) throw UsageError("pair adjacency does not match the type");
    const std::uint64_t c = count_type_anchored(l.graph, ty, x, y);
    result = {{"type", type_json(ty)}, {"pair", edge_json(*pair)}, {"count", c}};
    out << "type " << type_text(ty) << " at (" << x << "," << y << "): " << c << "\n";
  } else {
    result = {{"classes", json::object()}};
    bool constant = true;
    for (bool adjacent : {true, false}) {
      if (fixed_type && fixed_type->pair_adjacent() != adjacent) continue;
      const GraphType ty = type_for(adjacent);
      std::vector<Edge> pairs;
      for (Vertex x = 0; x < l.graph.order(); ++x)
        for (Vertex y = x + 1; y < l.graph.order(); ++y)
          if (l.graph.adjacent(x, y) == adjacent) pairs.push_back({x, y});
      const auto counts = anchored_counts(l.graph, EmbedPlan::make(ty.base), pairs, exec_of(run));
      std::map<std::uint64_t, std::uint64_t> hist;
      for (auto c : counts) ++hist[c];
      json h = json::array();
      for (auto [v, n] : hist) h.push_back({{"count", v}, {"pairs", n}});
      result["classes"][adjacent ? "edges" : "non_edges"] = {{"type", type_json(ty)}, {"histogram", h}};
      constant = constant && hist.size() <= 1;
      out << (adjacent ? "edges" : "non-edges") << ", type " << type_text(ty) << ":";
      for (auto [v, n] : hist) out << " " << v << " x" << n;
      out << "\n";
    }
    result["constant"] = constant;
    code = constant ? kExitPass : kExitFail;
  }
  json doc = {{"command", "count-type"}, {"input", l.input}, {"config", run_json(run)}, {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

int cmd_k44(const InputOpts& in, const RunOpts& run, bool full, std::ostream& out) {
  const Loaded l = load(in);
  const K44Census c = count_k44_per_edge(l.graph, !full, tvc_opts(run));
  json hist = json::array();
  for (auto [v, n] : c.histogram) hist.push_back({{"count", v}, {"edges", n}});
  json result = {{"status", to_string(c.status)}, {"edges_scanned", c.counts.size()},
                 {"edges_total", l.graph.edge_count()}, {"complete", c.complete}, {"histogram", hist},
                 {"distinct_values", c.histogram.size()}};
  if (c.differing) {
    json d = json::array();
    for (const auto& [e, v] : *c.differing) d.push_back({{"edge", edge_json(e)}, {"count", v}});
    result["differing"] = d;
  }
  out << "K4,4 per edge: " << c.counts.size() << " of " << l.graph.edge_count() << " edges scanned, "
      << c.histogram.size() << " distinct value(s)\n";
  for (auto [v, n] : c.histogram) out << "  " << v << " x" << n << "\n";
  if (c.differing) {
    const auto& d = *c.differing;
    out << "  (" << d[0].first.first << "," << d[0].first.second << ") -> " << d[0].second << " vs ("
        << d[1].first.first << "," << d[1].first.second << ") -> " << d[1].second << "\n";
  }
  const int code = exit_of(c.status);
  json doc = {{"command", "k44-census"}, {"input", l.input}, {"config", run_json(run)}, {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

int cmd_export(const InputOpts& in, const std::string& path, std::ostream& out) {
  const Loaded l = load(in);
  if (path.empty() || path == "-") {
    write_graph6(out, l.graph);
  } else {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    write_graph6(f, l.graph);
  }
  return kExitPass;
}

int cmd_verify_formula(const std::string& gq_name, bool dual, const std::string& formula, std::size_t sample,
                       const RunOpts& run, std::ostream& out) {
  const Construction c = build_construction(gq_name, dual);
  const FormulaId id = FormulaId::parse(formula);
  VerifyOptions opts;
  opts.exec = exec_of(run);
  opts.max_pairs_per_class = sample;
  const FormulaReport rep = verify_formula(c.gq, id, opts);
  json mism = json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"pair", edge_json(m.pair)}, {"adjacent", m.adjacent}, {"expected", m.expected},
                    {"observed", m.observed}});
  json result = {{"formula", id.name()},
                 {"order", {{"s", rep.order.s}, {"t", rep.order.t}}},
                 {"expected_edge", rep.expected_edge},
                 {"expected_non_edge", rep.expected_non_edge},
                 {"edges_checked", rep.edges_checked},
                 {"non_edges_checked", rep.non_edges_checked},
                 {"mismatch_count", rep.mismatch_count},
                 {"mismatches", mism},
                 {"passed", rep.passed()}};
  out << id.name() << " on " << gq_name << (dual ? " (dual)" : "") << " GQ(" << rep.order.s << "," << rep.order.t
      << "): expected " << rep.expected_edge << " on edges, " << rep.expected_non_edge << " on non-edges; "
      << rep.edges_checked << "+" << rep.non_edges_checked << " pairs checked, " << rep.mismatch_count
      << " mismatches\n";
  const int code = rep.passed() ? kExitPass : kExitFail;
  json doc = {{"command", "verify-formula"},
              {"input", {{"source", "construction"}, {"name", gq_name}, {"dual", dual}, {"parameters", provenance_json(c)}}},
              {"config", run_json(run)},
              {"sample", sample},
              {"result", result},
              {"exit_code", code}};
  emit_json(run, doc);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised quadrangles, strong regularity and the t-vertex condition", "gqt"};
  app.require_subcommand(1);

  InputOpts in;
  RunOpts run;
  int t = 0, iso_k = 1;
  std::optional<int> k;
  std::string mode = "exhaustive", incidence_out, graph6_out, type_g6, formula, pair, export_path, gq_name;
  bool full = false;
  std::size_t sample = 0;

  auto* construct = app.add_subcommand("construct", "build a quadrangle and validate it");
  add_input(construct, in);
  add_run(construct, run, false);
  construct->add_option("--incidence-out", incidence_out, "write the incidence structure");
  construct->add_option("--graph6-out", graph6_out, "write the point graph as graph6");

  auto* srg = app.add_subcommand("check-srg", "strong regularity by brute force");
  add_input(srg, in);
  add_run(srg, run, false);

  auto* iso = app.add_subcommand("check-isoregular", "k-isoregularity for k <= 3");
  add_input(iso, in);
  add_run(iso, run, false);
  iso->add_option("--k", iso_k, "isoregularity level")->check(CLI::Range(1, 3))->required();

  auto* tvc = app.add_subcommand("check-tvc", "the t-vertex condition");
  add_input(tvc, in);
  add_run(tvc, run, true);
  tvc->add_option("--t", t, "level")->check(CLI::Range(2, 8))->required();
  tvc->add_option("--mode", mode, "exhaustive or reduced")->check(CLI::IsMember({"exhaustive", "reduced"}));
  tvc->add_option("--k", k, "isoregularity level for reduced mode (default: highest passing)")->check(CLI::Range(1, 3));

  auto* dist = app.add_subcommand("find-distinguisher", "first type whose anchored counts vary");
  add_input(dist, in);
  add_run(dist, run, true);
  dist->add_option("--t", t, "level")->check(CLI::Range(3, 8))->required();
  dist->add_option("--k", k, "isoregularity level (default: highest passing)")->check(CLI::Range(1, 3));

  auto* count = app.add_subcommand("count-type", "anchored counts of one type");
  add_input(count, in);
  add_run(count, run, false);
  count->add_option("--type", type_g6, "graph6 string of the type; vertices 0 and 1 are the fixed pair");
  count->add_option("--formula", formula, "formula id whose type to count");
  count->add_option("--pair", pair, "count at this pair x,y only");

  auto* k44 = app.add_subcommand("k44-census", "induced K4,4 through each edge");
  add_input(k44, in);
  add_run(k44, run, true);
  k44->add_flag("--full", full, "scan every edge instead of stopping at the first difference");

  auto* exp = app.add_subcommand("export-graph6", "write the graph as graph6");
  add_input(exp, in);
  exp->add_option("--out", export_path, "output path (default stdout)");

  auto* vf = app.add_subcommand("verify-formula", "closed-form counts against brute force");
  vf->add_option("--gq", gq_name, "built-in quadrangle")->required();
  vf->add_flag("--dual", in.dual, "use the dual quadrangle");
  vf->add_option("--formula", formula, "type0 ... type3b, completeS/<dx><dy>[s|d]/<m>, apex/<m>")->required();
  vf->add_option("--sample", sample, "check at most this many pairs per adjacency class (0: all)");
  add_run(vf, run, false);

  std::vector<std::string> argv_store{"gqt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  // With the JSON report on stdout the text report is dropped.
  std::ostringstream discard;
  run.stdout_stream = &out;
  std::ostream& text = run.json_out == "-" ? discard : out;
  try {
    if (construct->parsed()) return cmd_construct(in, run, incidence_out, graph6_out, text);
    if (srg->parsed()) return cmd_check_srg(in, run, text);
    if (iso->parsed()) return cmd_check_isoregular(in, run, iso_k, text);
    if (tvc->parsed()) return cmd_check_tvc(in, run, t, mode, k, text);
    if (dist->parsed()) return cmd_find_distinguisher(in, run, t, k, text);
    if (count->parsed()) return cmd_count_type(in, run, type_g6, formula, pair, text);
    if (k44->parsed()) return cmd_k44(in, run, full, text);
    if (exp->parsed()) return cmd_export(in, export_path, text);
    if (vf->parsed()) return cmd_verify_formula(gq_name, in.dual, formula, sample, run, text);
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gqt
