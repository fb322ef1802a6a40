#include "gicc/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gicc/bounds.hpp"
#include "gicc/codec.hpp"
#include "gicc/cover.hpp"
#include "gicc/digraph.hpp"
#include "gicc/generators.hpp"
#include "gicc/gic_structure.hpp"

namespace gicc::cli {

using nlohmann::json;

json RunReport::to_json() const {
  return json{{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"exit_status", exit_status}};
}

namespace {

/// Bad flags, unreadable files, malformed inputs: exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kExhaustiveVertexLimit = 20;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Digraph load_graph(const std::string& path) { return parse_digraph(read_file(path)); }

VertexSet to_inner(const Digraph& d, const std::vector<Vertex>& list) {
  if (list.empty()) throw InputError("--inner needs at least one vertex");
  VertexSet inner;
  for (Vertex v : list) {
    if (!d.contains(v)) {
      throw InputError("inner vertex " + std::to_string(v) + " is out of range");
    }
    if (!inner.insert(v).second) {
      throw InputError("inner vertex " + std::to_string(v) + " is repeated");
    }
  }
  return inner;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

json violation_json(const ViolationReport& r) {
  json witness = json::array();
  for (const Path& p : r.witness) witness.push_back(p.vertices);
  return json{{"kind", to_string(r.kind)},
              {"witness", witness},
              {"overflow", r.overflow},
              {"detail", r.detail}};
}

/// Validates or fills the report with the violation and exit 1.
std::optional<GicStructure> validate_into(const Digraph& d, const VertexSet& inner,
                                          RunReport& r) {
  auto v = validate_gic(d, inner);
  if (is_valid(v)) return std::get<GicStructure>(std::move(v));
  const auto& report = std::get<ViolationReport>(v);
  r.results["valid"] = false;
  r.results["violation"] = violation_json(report);
  r.exit_status = kCheckFailed;
  r.text = "not a " + std::to_string(inner.size()) + "-GIC\n" +
           render_text(report) + "\n";
  return std::nullopt;
}

json part_json(const CoverPart& p) {
  return json{{"vertices", p.vertices},
              {"inner", p.inner},
              {"k", p.k()},
              {"length", p.length()}};
}

std::size_t as_count(double x) { return static_cast<std::size_t>(x); }

// ---------------------------------------------------------------------------
// Subcommands

struct GraphArgs {
  std::string graph;
  std::vector<Vertex> inner;
};

RunReport cmd_validate(const GraphArgs& a) {
  RunReport r;
  r.command = "validate";
  r.inputs = {{"graph", a.graph}, {"inner", a.inner}};
  const Digraph d = load_graph(a.graph);
  const VertexSet inner = to_inner(d, a.inner);
  auto g = validate_into(d, inner, r);
  if (!g) return r;

  std::ostringstream text;
  text << "valid " << g->inner_count() << "-GIC (N=" << g->vertex_count()
       << ", K=" << g->inner_count() << ", length " << code_length(*g) << ")\n";
  json trees = json::object();
  for (const auto& [root, tree] : g->trees()) {
    json arcs = json::array();
    text << "T_" << root << " height " << tree.height() << ":";
    for (const Arc& arc : tree.arcs()) {
      arcs.push_back({arc.tail, arc.head});
      text << ' ' << arc.tail << "->" << arc.head;
    }
    text << '\n';
    trees[std::to_string(root)] = {{"height", tree.height()}, {"arcs", arcs}};
  }
  r.results = {{"valid", true},
               {"n", g->vertex_count()},
               {"k", g->inner_count()},
               {"length", code_length(*g)},
               {"trees", trees}};
  r.text = text.str();
  return r;
}

struct EncodeArgs : GraphArgs {
  std::string messages;
  bool random = false;
  std::optional<std::size_t> t;
  std::optional<std::uint64_t> seed;
};

RunReport cmd_encode(const EncodeArgs& a) {
  RunReport r;
  r.command = "encode";
  r.inputs = {{"graph", a.graph}, {"inner", a.inner}};
  const Digraph d = load_graph(a.graph);
  const VertexSet inner = to_inner(d, a.inner);

  MessageVector m;
  if (!a.messages.empty()) {
    r.inputs["messages"] = a.messages;
    try {
      m = parse_messages(read_file(a.messages));
    } catch (const CodecError& e) {
      throw InputError(a.messages + ": " + e.what());
    }
    if (m.size() != d.vertex_count()) {
      throw InputError("message file holds " + std::to_string(m.size()) +
                       " messages for " + std::to_string(d.vertex_count()) +
                       " vertices");
    }
  } else if (a.random) {
    if (!a.t || !a.seed) throw InputError("--random needs --t and --seed");
    if (*a.t == 0) throw InputError("--t must be positive");
    r.inputs["random"] = true;
    r.inputs["t"] = *a.t;
    r.inputs["seed"] = *a.seed;
    m = MessageVector::random(d.vertex_count(), *a.t, *a.seed);
  } else {
    throw InputError("encode needs --messages or --random");
  }

  auto g = validate_into(d, inner, r);
  if (!g) return r;

  std::uint64_t xor_ops = 0;
  const IndexCode code = encode(*g, m, &xor_ops);
  json symbols = json::array();
  for (const auto& s : code.symbols) {
    symbols.push_back({{"mask", s.mask}, {"payload", s.payload.to_hex()}});
  }
  r.results = {{"length", code.length()},
               {"t", code.t},
               {"symbols", symbols},
               {"xor_ops", xor_ops},
               {"xor_cost_bound", xor_cost_bound(*g, code.t)}};

  std::ostringstream text;
  if (a.random) {
    json payloads = json::array();
    for (const auto& p : m.payloads) payloads.push_back(p.to_hex());
    r.results["messages"] = payloads;
    text << "# messages\n" << serialize_messages(m) << '\n';
  }
  text << "# code: " << code.length() << " symbols, t=" << code.t << '\n'
       << render_symbols(code) << '\n';
  r.text = text.str();
  return r;
}

struct VerifyArgs : GraphArgs {
  bool exhaustive = false;
  std::optional<std::size_t> trials;
  std::size_t t = 8;
  std::optional<std::uint64_t> seed;
};

RunReport cmd_verify(const VerifyArgs& a) {
  RunReport r;
  r.command = "verify";
  r.inputs = {{"graph", a.graph}, {"inner", a.inner}};
  const Digraph d = load_graph(a.graph);
  const VertexSet inner = to_inner(d, a.inner);
  if (a.exhaustive && a.trials) {
    throw InputError("--exhaustive-t1 and --trials are exclusive");
  }
  if (a.trials && !a.seed) throw InputError("--trials needs --seed");
  if (a.t == 0) throw InputError("--t must be positive");
  if (a.exhaustive && d.vertex_count() > kExhaustiveVertexLimit) {
    throw SizeGateError("--exhaustive-t1 is limited to " +
                        std::to_string(kExhaustiveVertexLimit) + " vertices");
  }

  auto g = validate_into(d, inner, r);
  if (!g) return r;

  const bool symbolic = symbolic_decode_check(*g);
  std::uint64_t vectors = 0;
  std::uint64_t failures = 0;
  if (a.exhaustive) {
    r.inputs["exhaustive_t1"] = true;
    const std::uint64_t total = std::uint64_t{1} << d.vertex_count();
    for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
      ++vectors;
      if (!round_trip(*g, MessageVector::from_pattern(d.vertex_count(), pattern))) {
        ++failures;
      }
    }
  } else if (a.trials) {
    r.inputs["trials"] = *a.trials;
    r.inputs["t"] = a.t;
    r.inputs["seed"] = *a.seed;
    std::mt19937_64 rng(*a.seed);
    for (std::size_t i = 0; i < *a.trials; ++i) {
      ++vectors;
      if (!round_trip(*g, MessageVector::random(d.vertex_count(), a.t, rng()))) {
        ++failures;
      }
    }
  }

  const bool pass = symbolic && failures == 0;
  r.results = {{"symbolic", symbolic},
               {"vectors", vectors},
               {"failures", failures},
               {"pass", pass}};
  r.exit_status = pass ? kPass : kCheckFailed;
  std::ostringstream text;
  text << "symbolic: " << (symbolic ? "pass" : "FAIL") << '\n';
  if (vectors > 0) {
    text << "round-trip: " << (failures == 0 ? "pass" : "FAIL") << " (" << vectors
         << " vectors";
    if (failures > 0) text << ", " << failures << " failed";
    text << ")\n";
  }
  r.text = text.str();
  return r;
}

struct CoverArgs {
  std::string graph;
  bool exact = false;
  std::optional<std::size_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> exact_limit;
  std::optional<std::size_t> baseline_exact_limit;
};

CoverOptions cover_options(const CoverArgs& a, json& inputs) {
  CoverOptions o;
  if (a.exact && a.budget) throw InputError("--exact and --budget are exclusive");
  if (a.exact) {
    o.mode = CoverOptions::Mode::Exact;
    inputs["exact"] = true;
  }
  if (a.budget) {
    if (!a.seed) throw InputError("--budget needs --seed");
    o.mode = CoverOptions::Mode::Heuristic;
    o.budget = *a.budget;
    inputs["budget"] = *a.budget;
  }
  if (a.seed) {
    o.seed = *a.seed;
    inputs["seed"] = *a.seed;
  }
  if (a.exact_limit) {
    o.exact_limit = *a.exact_limit;
    inputs["exact_limit"] = *a.exact_limit;
  }
  if (a.baseline_exact_limit) {
    o.baseline_exact_limit = *a.baseline_exact_limit;
    inputs["baseline_exact_limit"] = *a.baseline_exact_limit;
  }
  return o;
}

RunReport cmd_cover(const CoverArgs& a) {
  RunReport r;
  r.command = "cover";
  r.inputs = {{"graph", a.graph}};
  const CoverOptions o = cover_options(a, r.inputs);
  const Digraph d = load_graph(a.graph);
  const CoverPlan plan = gicc_cover(d, o);
  const bool valid = is_valid_plan(d, plan);

  json parts = json::array();
  std::ostringstream text;
  text << "gicc cover: length " << plan.length() << " (N=" << plan.vertex_count
       << ", savings " << savings(plan) << ", parts " << plan.psi() << ", "
       << (plan.exact ? "exact" : "heuristic") << ")\n";
  for (std::size_t i = 0; i < plan.parts.size(); ++i) {
    const CoverPart& p = plan.parts[i];
    parts.push_back(part_json(p));
    text << "part " << i + 1 << ": K=" << p.k() << " inner " << to_string(p.inner)
         << " vertices " << to_string(p.vertices) << " length " << p.length()
         << '\n';
  }
  text << "uncoded " << to_string(plan.uncoded) << '\n';
  if (!valid) text << "plan check: FAIL\n";
  r.results = {{"n", plan.vertex_count},
               {"length", plan.length()},
               {"savings", savings(plan)},
               {"parts", parts},
               {"uncoded", plan.uncoded},
               {"exact", plan.exact},
               {"valid", valid}};
  r.exit_status = valid ? kPass : kCheckFailed;
  r.text = text.str();
  return r;
}

struct BoundsArgs : CoverArgs {
  bool minrank = false;
  std::vector<Vertex> inner;
};

BoundsReport run_bounds(const BoundsArgs& a, const Digraph& d, RunReport& r) {
  BoundsOptions o;
  o.with_minrank = a.minrank;
  o.cover = cover_options(a, r.inputs);
  if (a.minrank) r.inputs["minrank"] = true;
  if (!a.inner.empty()) {
    o.inner = to_inner(d, a.inner);
    r.inputs["inner"] = a.inner;
  }
  return compute_bounds(d, o);
}

RunReport cmd_bounds(const BoundsArgs& a) {
  RunReport r;
  r.command = "bounds";
  r.inputs = {{"graph", a.graph}};
  const Digraph d = load_graph(a.graph);
  const BoundsReport b = run_bounds(a, d, r);

  json schemes = json::object();
  std::ostringstream text;
  for (const auto& [name, length] : b.scheme_lengths) {
    schemes[name] = as_count(length);
    text << name << ' ' << as_count(length) << '\n';
  }
  text << "mais " << b.mais << '\n';
  r.results = {{"schemes", schemes},
               {"mais", b.mais},
               {"sandwich_ok", b.sandwich_ok},
               {"optimality", to_string(b.optimality)}};
  if (b.minrank) {
    r.results["minrank"] = *b.minrank;
    text << "minrank " << *b.minrank << '\n';
  }
  text << "sandwich " << (b.sandwich_ok ? "ok" : "VIOLATED") << '\n'
       << "optimality " << to_string(b.optimality) << '\n';
  r.exit_status = b.sandwich_ok ? kPass : kCheckFailed;
  r.text = text.str();
  return r;
}

RunReport cmd_compare(const BoundsArgs& a) {
  RunReport r;
  r.command = "compare";
  r.inputs = {{"graph", a.graph}};
  const Digraph d = load_graph(a.graph);
  const BoundsReport b = run_bounds(a, d, r);

  const std::vector<std::pair<std::string, std::size_t>> rows = {
      {"gicc", as_count(b.scheme_lengths.at("gicc"))},
      {"cycle-cover", as_count(b.scheme_lengths.at("cycle-cover"))},
      {"clique-cover", as_count(b.scheme_lengths.at("clique-cover"))},
      {"mais", b.mais},
  };
  json table = json::object();
  std::ostringstream text;
  text << "scheme        length\n";
  for (const auto& [name, value] : rows) {
    table[name] = value;
    text << name << std::string(14 - name.size(), ' ') << value << '\n';
  }
  if (b.minrank) {
    table["minrank"] = *b.minrank;
    text << "minrank       " << *b.minrank << '\n';
  }
  const bool tight = rows[0].second == b.mais;
  text << "verdict       " << to_string(b.optimality) << '\n'
       << "tight         " << (tight ? "yes" : "no") << '\n';
  r.results = {{"table", table},
               {"verdict", to_string(b.optimality)},
               {"tight", tight},
               {"sandwich_ok", b.sandwich_ok}};
  r.exit_status = b.sandwich_ok ? kPass : kCheckFailed;
  r.text = text.str();
  return r;
}

struct GenerateArgs {
  std::string kind;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::size_t max_path = 3;
  std::size_t max_connector = 2;
  std::string out;
  std::string icc_out;
};

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& kind) {
  if (!v) throw InputError(kind + " needs " + flag);
  return *v;
}

RunReport cmd_generate(const GenerateArgs& a) {
  RunReport r;
  r.command = "generate";
  r.inputs = {{"kind", a.kind}};
  if (a.k) r.inputs["k"] = *a.k;
  if (a.n) r.inputs["n"] = *a.n;
  if (a.p) r.inputs["p"] = *a.p;
  if (a.seed) r.inputs["seed"] = *a.seed;

  Digraph d;
  std::optional<VertexSet> inner;
  std::optional<std::string> description;
  if (a.kind == "family-vb") {
    auto inst = gen_family_vb(need(a.k, "--k", a.kind));
    d = inst.graph;
    inner = inst.inner;
  } else if (a.kind == "fig4a") {
    auto inst = gen_fig4a_equivalent();
    d = inst.graph;
    inner = inst.inner;
  } else if (a.kind == "clique") {
    d = gen_clique(need(a.n, "--n", a.kind));
  } else if (a.kind == "cycle") {
    d = gen_cycle(need(a.n, "--n", a.kind));
  } else if (a.kind == "random") {
    d = gen_random(need(a.n, "--n", a.kind), need(a.p, "--p", a.kind),
                   need(a.seed, "--seed", a.kind));
  } else if (a.kind == "icc") {
    r.inputs["max_path"] = a.max_path;
    r.inputs["max_connector"] = a.max_connector;
    const auto desc = gen_icc_random(need(a.k, "--k", a.kind), a.max_path,
                                     a.max_connector, need(a.seed, "--seed", a.kind));
    auto inst = icc_to_gic(desc);
    d = inst.graph;
    inner = inst.inner;
    description = serialize_icc(desc);
  } else {
    throw InputError("unknown generator kind: " + a.kind);
  }

  const std::string graph = serialize_digraph(d) + "\n";
  r.results = {{"n", d.vertex_count()}, {"arcs", d.arc_count()}, {"graph", graph}};
  if (inner) r.results["inner"] = *inner;
  if (description) r.results["description"] = *description + "\n";

  std::ostringstream text;
  if (a.out.empty()) {
    if (description) text << *description << "\n\n";
    if (inner) text << "# inner " << join(*inner) << '\n';
    text << graph;
  } else {
    r.inputs["out"] = a.out;
    write_file(a.out, graph);
    text << "wrote " << a.out << " (N=" << d.vertex_count() << ", " << d.arc_count()
         << " arcs)\n";
    if (description) {
      const std::string path = a.icc_out.empty() ? a.out + ".icc" : a.icc_out;
      r.inputs["icc_out"] = path;
      write_file(path, *description + "\n");
      text << "wrote " << path << '\n';
    }
    if (inner) text << "inner " << join(*inner) << '\n';
  }
  r.text = text.str();
  return r;
}

struct SweepArgs {
  std::size_t max_n = 4;
  std::size_t trials = 0;
  std::size_t max_random_n = 7;
  std::optional<std::uint64_t> seed;
};

RunReport cmd_sweep(const SweepArgs& a) {
  RunReport r;
  r.command = "conjecture-sweep";
  r.inputs = {{"max_n", a.max_n}, {"trials", a.trials}, {"max_random_n", a.max_random_n}};
  if (a.trials > 0 && !a.seed) throw InputError("--trials needs --seed");
  if (a.seed) r.inputs["seed"] = *a.seed;
  if (a.max_n > 5) throw SizeGateError("exhaustive sweep is limited to 5 vertices");
  const auto res = conjecture_sweep(a.max_n, a.trials, a.max_random_n, a.seed.value_or(0));

  json findings = json::array();
  std::ostringstream text;
  text << "digraphs " << res.digraphs << "\nstructures " << res.structures
       << "\nfindings " << res.findings.size() << '\n';
  for (const auto& f : res.findings) {
    findings.push_back({{"graph", serialize_digraph(f.graph) + "\n"},
                        {"inner", f.inner},
                        {"mais", f.mais},
                        {"length", f.gicc_length}});
    text << "finding: inner " << to_string(f.inner) << " mais " << f.mais
         << " length " << f.gicc_length << '\n'
         << serialize_digraph(f.graph) << '\n';
  }
  r.results = {{"digraphs", res.digraphs},
               {"structures", res.structures},
               {"findings", findings}};
  r.text = text.str();
  return r;
}

RunReport error_report(const std::string& command, int status, const std::string& what) {
  RunReport r;
  r.command = command;
  r.exit_status = status;
  r.results = {{"error", what}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index coding on generalized interlinked cycle structures", "gicc"};
  app.require_subcommand(1);
  bool as_json = false;
  bool timings = false;
  app.add_flag("--json", as_json, "Emit one JSON record instead of text");
  app.add_flag("--timings", timings, "Add wall-clock timings to the record");
  std::function<RunReport()> action;
  std::string command;

  auto add_graph = [](CLI::App* sub, std::string& graph) {
    sub->add_option("graph", graph, "Arc-list file")->required();
  };
  auto add_inner = [](CLI::App* sub, std::vector<Vertex>& inner) {
    sub->add_option("--inner", inner, "Inner vertices, comma separated")
        ->delimiter(',')
        ->required();
  };
  auto add_cover_flags = [](CLI::App* sub, CoverArgs& a) {
    sub->add_flag("--exact", a.exact, "Exhaustive cover search");
    sub->add_option("--budget", a.budget, "Greedy restarts (heuristic mode)");
    sub->add_option("--seed", a.seed, "Seed for heuristic mode");
    sub->add_option("--exact-limit", a.exact_limit, "Largest N for exact cover");
    sub->add_option("--baseline-exact-limit", a.baseline_exact_limit,
                    "Largest N for exact cycle/clique baselines");
  };

  GraphArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check the GIC conditions");
  add_graph(validate, validate_args.graph);
  add_inner(validate, validate_args.inner);
  validate->callback([&] { action = [&] { return cmd_validate(validate_args); }; });

  EncodeArgs encode_args;
  auto* enc = app.add_subcommand("encode", "Emit the coded symbols");
  add_graph(enc, encode_args.graph);
  add_inner(enc, encode_args.inner);
  enc->add_option("--messages", encode_args.messages, "Message file");
  enc->add_flag("--random", encode_args.random, "Draw seeded random messages");
  enc->add_option("--t", encode_args.t, "Bits per message");
  enc->add_option("--seed", encode_args.seed, "Seed for --random");
  enc->callback([&] { action = [&] { return cmd_encode(encode_args); }; });

  VerifyArgs verify_args;
  auto* ver = app.add_subcommand("verify", "Round-trip every receiver");
  add_graph(ver, verify_args.graph);
  add_inner(ver, verify_args.inner);
  ver->add_flag("--exhaustive-t1", verify_args.exhaustive,
                "Every message vector at t=1");
  ver->add_option("--trials", verify_args.trials, "Random message vectors");
  ver->add_option("--t", verify_args.t, "Bits per message for --trials");
  ver->add_option("--seed", verify_args.seed, "Seed for --trials");
  ver->callback([&] { action = [&] { return cmd_verify(verify_args); }; });

  CoverArgs cover_args;
  auto* cov = app.add_subcommand("cover", "Disjoint GIC cover of any digraph");
  add_graph(cov, cover_args.graph);
  add_cover_flags(cov, cover_args);
  cov->callback([&] { action = [&] { return cmd_cover(cover_args); }; });

  BoundsArgs bounds_args;
  auto* bnd = app.add_subcommand("bounds", "Scheme lengths and lower bounds");
  add_graph(bnd, bounds_args.graph);
  add_cover_flags(bnd, bounds_args);
  bnd->add_flag("--minrank", bounds_args.minrank, "Exact GF(2) minrank");
  bnd->add_option("--inner", bounds_args.inner, "Inner set to certify")
      ->delimiter(',');
  bnd->callback([&] { action = [&] { return cmd_bounds(bounds_args); }; });

  BoundsArgs compare_args;
  auto* cmp = app.add_subcommand("compare", "Scheme table with optimality verdict");
  add_graph(cmp, compare_args.graph);
  add_cover_flags(cmp, compare_args);
  cmp->add_flag("--minrank", compare_args.minrank, "Add the GF(2) minrank row");
  cmp->add_option("--inner", compare_args.inner, "Inner set to certify")
      ->delimiter(',');
  cmp->callback([&] { action = [&] { return cmd_compare(compare_args); }; });

  GenerateArgs generate_args;
  auto* gen = app.add_subcommand("generate", "Write a generated digraph");
  gen->add_option("kind", generate_args.kind,
                  "family-vb | fig4a | clique | cycle | icc | random")
      ->required();
  gen->add_option("--k", generate_args.k, "Inner vertices / paths");
  gen->add_option("--n", generate_args.n, "Vertices");
  gen->add_option("--p", generate_args.p, "Arc probability");
  gen->add_option("--seed", generate_args.seed, "Seed");
  gen->add_option("--max-path", generate_args.max_path, "icc: longest path");
  gen->add_option("--max-connector", generate_args.max_connector,
                  "icc: longest connector");
  gen->add_option("--out", generate_args.out, "Digraph output file");
  gen->add_option("--icc-out", generate_args.icc_out,
                  "icc: description file (default <out>.icc)");
  gen->callback([&] { action = [&] { return cmd_generate(generate_args); }; });

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("conjecture-sweep",
                                "Search small GICs with mais below the code length");
  sw->add_option("--max-n", sweep_args.max_n, "Exhaustive up to this N");
  sw->add_option("--trials", sweep_args.trials, "Random digraphs");
  sw->add_option("--max-random-n", sweep_args.max_random_n, "Largest random N");
  sw->add_option("--seed", sweep_args.seed, "Seed for --trials");
  sw->callback([&] { action = [&] { return cmd_sweep(sweep_args); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = action();
  } catch (const SizeGateError& e) {
    report = error_report(command, kSizeGate, e.what());
  } catch (const ParseError& e) {
    report = error_report(command, kInputError, e.what());
  } catch (const GraphError& e) {
    report = error_report(command, kInputError, e.what());
  } catch (const InputError& e) {
    report = error_report(command, kInputError, e.what());
  } catch (const std::invalid_argument& e) {
    report = error_report(command, kInputError, e.what());
  } catch (const std::out_of_range& e) {
    report = error_report(command, kInputError, e.what());
  }
  if (timings) {
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report.results["timings"] = {{"total_ms", ms}};
    if (!report.text.empty()) report.text += "time " + std::to_string(ms) + " ms\n";
  }

  if (report.results.contains("error")) {
    err << "error: " << report.results["error"].get<std::string>() << '\n';
  }
  if (as_json) {
    out << report.to_json().dump() << '\n';
  } else {
    out << report.text;
  }
  return report.exit_status;
}

}  // namespace gicc::cli
