// Command-line front end: every subcommand prints a header with its numeric knobs,
// then one artifact in the requested format.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "artin/classifier.hpp"
#include "artin/deligne.hpp"
#include "artin/dihedral.hpp"
#include "artin/error.hpp"
#include "json.hpp"

using namespace artin;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string graph;
  std::string aut;
  std::string format = "text";
  bool strict = false;
  long budget = kDefaultBudget;
  int radius = 4;
  long bound = 8;
  long states = SearchLimits{}.states;
  int m = 0;
  std::string word;
  std::string lhs, rhs;
  std::string vertex;
  std::string labelling = "garside";
  int count = 0;
  unsigned seed = 1;
};

// Exit status and the artifact, assembled before anything is printed.
struct Output {
  Json json;
  std::string text;
  bool limited = false;
  bool failed = false;  // a verification that did not go through
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_graph_text(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  // Inline form: directives separated by ';'.
  if (arg.find("edge") != std::string::npos || arg.find("vertex") != std::string::npos) {
    std::string t = arg;
    for (char& c : t)
      if (c == ';') c = '\n';
    return t;
  }
  throw Error(ErrorCode::PARSE_ERROR, "cannot read graph file '" + arg + "'");
}

DefiningGraph load_graph(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  return validate_graph(read_graph_text(o.graph));
}

SearchLimits limits(const Options& o) {
  SearchLimits lim;
  lim.budget = o.budget;
  lim.states = o.states;
  lim.bound = o.bound;
  return lim;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not available for this subcommand");
}

Json gens_json(const DefiningGraph& g, const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const Word& w : ws) a.push_back(format_word(w, g.names));
  return a;
}

std::string britton_text(const BrittonNF& nf) { return format_word(britton_word(nf), {"x", "t"}); }

Output run_validate(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  DefiningGraph g = load_graph(o);
  Output out;
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({{"u", g.names[i]}, {"v", g.names[j]}, {"m", g.m(i, j)}});
  size_t nauts = graph_automorphisms(g).size();
  out.json["valid"] = true;
  out.json["vertices"] = g.names;
  out.json["edges"] = edges;
  out.json["graph_automorphisms"] = nauts;
  out.json["rank_bound"] = rank_bound(std::max(2, g.size()));
  out.text = o.format == "dot" ? graph_to_dot(g)
                               : "valid: " + std::to_string(g.size()) + " vertices, " +
                                     std::to_string(g.edges().size()) + " edges, " + std::to_string(nauts) +
                                     " graph automorphisms\n" + graph_to_text(g);
  return out;
}

Output run_autgen(const Options& o) {
  require_format(o, {"text", "json"});
  DefiningGraph g = load_graph(o);
  auto sigmas = graph_automorphisms(g);
  std::vector<std::string> lines;
  if (o.count <= 0) {
    // Generating set of Aut_Gamma: inner automorphisms by generators, graph symmetries, inversion.
    for (const auto& n : g.names) lines.push_back("conj " + n);
    for (const auto& s : sigmas)
      if (!s.is_identity()) lines.push_back("graph " + format_graph_map(g, s));
    lines.push_back("invert");
  } else {
    std::mt19937 rng(o.seed);
    for (int i = 0; i < o.count; ++i) {
      Word w;
      int len = static_cast<int>(rng() % 5);
      for (int k = 0; k < len; ++k)
        w.push_back(make_letter(static_cast<int>(rng() % g.size()), rng() % 2 ? 1 : -1));
      ArtinAutomorphism a{free_reduce(w), sigmas[rng() % sigmas.size()], static_cast<int>(rng() % 2)};
      lines.push_back(format_automorphism(g, a));
    }
  }
  Output out;
  out.json["automorphisms"] = lines;
  for (const auto& l : lines) out.text += l + "\n";
  return out;
}

Output run_classify(const Options& o, bool gens_only, bool verify) {
  require_format(o, {"text", "json"});
  DefiningGraph g = load_graph(o);
  ArtinAutomorphism a = normalize_aut(g, o.aut);
  SearchLimits lim = limits(o);
  FixReport r = classify(g, a, lim);
  Output out;
  out.limited = r.confidence == Confidence::BUDGET_LIMITED;
  if (gens_only) {
    out.json["generators"] = gens_json(g, r.generators);
    for (const Word& w : r.generators) out.text += format_word(w, g.names) + "\n";
    return out;
  }
  out.json["automorphism"] = format_automorphism(g, a);
  Json rj = report_to_json(g, r);
  for (auto it = rj.begin(); it != rj.end(); ++it) out.json[it.key()] = it.value();
  out.text = "automorphism: " + format_automorphism(g, a) + "\n" + report_to_text(g, r);
  if (verify) {
    Verification v = verify_report(g, a, r, lim);
    Json checks = Json::array();
    out.text += "verification:\n";
    for (const auto& c : v.checks) {
      checks.push_back({{"kind", c.kind}, {"claim", c.claim}, {"verdict", verdict_name(c.verdict)}});
      out.text += "  [" + std::string(verdict_name(c.verdict)) + "] " + c.kind + ": " + c.claim + "\n";
    }
    for (const auto& f : v.failures) out.text += "  FAILED: " + f + "\n";
    out.text += std::string("verified: ") + (v.ok ? "yes" : "no") + "\n";
    out.json["verification"] = {{"ok", v.ok}, {"checks", checks}, {"failures", v.failures}};
    out.failed = !v.ok;
  }
  return out;
}

Output run_dihedral_nf(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.m < 3) throw UsageError("--m must be at least 3");
  DihedralGroup G(o.m);
  Word w = parse_word(o.word, G.graph().names);
  GarsideNF nf = G.nf(w);
  Output out;
  out.json["m"] = o.m;
  out.json["word"] = format_word(w, G.graph().names);
  out.json["delta_power"] = nf.p;
  out.json["positive_part"] = format_word(nf.P, G.graph().names);
  out.json["normal_form"] = format_word(nf_to_word(o.m, nf), G.graph().names);
  out.json["length"] = nf_length(o.m, nf);
  out.json["central"] = G.is_central(w);
  out.text = "Delta^" + std::to_string(nf.p) + " " + format_word(nf.P, G.graph().names) +
             "\nnormal form: " + format_word(nf_to_word(o.m, nf), G.graph().names) +
             "\nlength: " + std::to_string(nf_length(o.m, nf)) + "\n";
  if (G.even()) {
    BrittonNF b = britton_nf(G.n(), convert(o.m, w, Conversion::ARTIN_TO_BS));
    out.json["britton"] = britton_text(b);
    out.text += "britton (x = ab, t = b): " + britton_text(b) + "\n";
  }
  return out;
}

Output run_dihedral_fix(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.m < 3) throw UsageError("--m must be at least 3");
  DihedralGroup G(o.m);
  ArtinAutomorphism a = normalize_aut(G.graph(), o.aut);
  FixReport r = dihedral_fix(o.m, a, o.budget);
  Output out;
  out.limited = r.confidence == Confidence::BUDGET_LIMITED;
  out.json["m"] = o.m;
  out.json["automorphism"] = format_automorphism(G.graph(), a);
  out.json["finite_order"] = is_finite_order(o.m, a);
  Json rj = report_to_json(G.graph(), r);
  for (auto it = rj.begin(); it != rj.end(); ++it) out.json[it.key()] = it.value();
  out.text = "automorphism: " + format_automorphism(G.graph(), a) + "\n" + report_to_text(G.graph(), r);
  return out;
}

Output run_dihedral_tree(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  if (o.m < 4 || o.m % 2) throw Error(ErrorCode::PARITY_MISMATCH, "the tree is built for even m >= 4");
  DihedralGroup G(o.m);
  ArtinAutomorphism a = normalize_aut(G.graph(), o.aut);
  TreeFixedSet t = tree_fixed_set(o.m, a, o.radius);
  Output out;
  Json vs = Json::array(), mids = Json::array();
  for (const auto& v : t.vertices) vs.push_back(britton_text(v));
  for (const auto& [u, v] : t.midpoints) mids.push_back({britton_text(u), britton_text(v)});
  BSAutClass cls = outer_class(o.m, a);
  out.json["m"] = o.m;
  out.json["automorphism"] = format_automorphism(G.graph(), a);
  out.json["outer_class"] = bs_class_name(cls.cls);
  out.json["ball_vertices"] = t.ball.size();
  out.json["fixed_vertices"] = vs;
  out.json["inverted_edges"] = mids;
  if (o.format == "dot") {
    out.text = tree_to_dot(o.m, t);
  } else {
    out.text = "outer class: " + std::string(bs_class_name(cls.cls)) + "\nball: " + std::to_string(t.ball.size()) +
               " vertices\nfixed vertices:\n";
    for (const auto& v : t.vertices) out.text += "  " + britton_text(v) + " <x>\n";
    for (const auto& [u, v] : t.midpoints) out.text += "  midpoint " + britton_text(u) + " | " + britton_text(v) + "\n";
  }
  return out;
}

Output run_deligne(const Options& o, bool fixed) {
  require_format(o, {"text", "json", "dot"});
  DefiningGraph g = load_graph(o);
  DeligneComplex X(g);
  DeligneBall ball = build_ball(X, o.radius);
  FixedVertices fv;
  ArtinAutomorphism a;
  if (fixed) {
    a = normalize_aut(g, o.aut);
    fv = fixed_vertices(X, a, ball);
  }
  const std::vector<int>* fp = fixed ? &fv.vertices : nullptr;
  Output out;
  if (fixed) out.json["automorphism"] = format_automorphism(g, a);
  if (o.format == "dot") {
    out.text = ball_to_dot(X, ball, fp);
  } else if (o.format == "json") {
    Json bj = ball_to_json(X, ball, fp);
    for (auto it = bj.begin(); it != bj.end(); ++it) out.json[it.key()] = it.value();
    if (fixed) out.json["fixed_lower_bound"] = fv.lower_bound;
  } else {
    out.text = "ball: " + std::to_string(ball.vertices.size()) + " vertices, " + std::to_string(ball.edges.size()) +
               " edges, " + std::to_string(ball.triangles.size()) + " triangles" +
               (ball.degraded ? " (degraded)" : "") + "\n";
    if (fixed) {
      out.text += "fixed vertices (" + std::to_string(fv.vertices.size()) + "):\n";
      for (int i : fv.vertices) out.text += "  " + vertex_text(g, ball.vertices[i]) + "\n";
    }
  }
  return out;
}

EdgeLabelling parse_labelling(const std::string& s) {
  if (s == "trivial") return EdgeLabelling::TRIVIAL;
  if (s == "garside") return EdgeLabelling::GARSIDE;
  if (s == "alternating") return EdgeLabelling::ALTERNATING;
  throw UsageError("unknown labelling '" + s + "'");
}

Output run_graph_emit(const Options& o) {
  require_format(o, {"dot"});
  DefiningGraph g = load_graph(o);
  Output out;
  if (!o.vertex.empty()) {
    int v = g.index_of(o.vertex);
    if (v < 0) throw Error(ErrorCode::UNKNOWN_VERTEX, o.vertex);
    GraphAutomorphism s = o.aut.empty() ? GraphAutomorphism::identity(g.size()) : normalize_aut(g, o.aut).sigma;
    out.text = odd_graph_to_dot(g, gamma_a_odd(g, s, v, parse_labelling(o.labelling)));
  } else if (!o.aut.empty()) {
    out.text = sigma_graph_to_dot(g, normalize_aut(g, o.aut).sigma);
  } else {
    out.text = graph_to_dot(g);
  }
  return out;
}

Output run_oracle_eq(const Options& o) {
  require_format(o, {"text", "json"});
  DefiningGraph g = load_graph(o);
  Word u = parse_word(o.lhs, g.names), v = parse_word(o.rhs, g.names);
  EqualityVerdict r = word_equal(g, u, v, o.budget);
  Output out;
  out.limited = r.verdict == Verdict::UNKNOWN;
  out.json["lhs"] = format_word(u, g.names);
  out.json["rhs"] = format_word(v, g.names);
  out.json["verdict"] = verdict_name(r.verdict);
  if (!r.invariant.empty()) out.json["invariant"] = r.invariant;
  out.json["detail"] = r.detail;
  out.json["spent"] = r.spent;
  Json steps = Json::array();
  for (size_t i = 0; i < r.trace.steps(); ++i)
    steps.push_back({{"kind", std::string(1, r.trace.kinds[i])}, {"word", format_word(r.trace.states[i + 1], g.names)}});
  out.json["trace"] = steps;
  out.text = std::string(verdict_name(r.verdict)) + "\n";
  if (!r.invariant.empty()) out.text += "invariant: " + r.invariant + "\n";
  if (!r.detail.empty()) out.text += "detail: " + r.detail + "\n";
  if (r.trace.steps()) {
    out.text += "derivation:\n  " + format_word(u, g.names) + "\n";
    for (size_t i = 0; i < r.trace.steps(); ++i)
      out.text += "  " + std::string(1, r.trace.kinds[i]) + " " + format_word(r.trace.states[i + 1], g.names) + "\n";
  }
  return out;
}

void print(const Options& o, const std::string& command, const Output& out) {
  if (o.format == "json") {
    Json j;
    j["command"] = command;
    j["settings"] = {{"budget", o.budget}, {"radius", o.radius}, {"bound", o.bound}, {"states", o.states}};
    for (auto it = out.json.begin(); it != out.json.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump(2) << "\n";
  } else {
    const char* c = o.format == "dot" ? "//" : "#";
    std::cout << c << " " << command << " budget=" << o.budget << " radius=" << o.radius << " bound=" << o.bound
              << " states=" << o.states << "\n"
              << out.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Fixed subgroups of automorphisms of large-type Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_flag("--strict", o.strict, "Exit with status 2 when a result is only budget-limited");
  app.add_option("--budget", o.budget, "Oracle budget per equality test")->capture_default_str();
  app.add_option("--radius", o.radius, "Ball radius for tree and complex exports")->capture_default_str();
  app.add_option("--bound", o.bound, "Normal-form length bound for brute-force checks")->capture_default_str();
  app.add_option("--states", o.states, "Twisted-conjugacy states explored by the classifier")->capture_default_str();

  std::string command;
  std::function<Output()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& full,
                 std::function<Output()> f) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->callback([&, full, f] {
      command = full;
      action = f;
    });
    return s;
  };
  auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", o.graph, "Graph file or inline directives")->required(); };
  auto aut_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--aut", o.aut, "Automorphism, e.g. \"conj a b; graph a>b b>a; invert\"");
    if (required) opt->required();
  };

  auto* validate = sub(&app, "validate", "Parse and validate a graph", "validate", [&] { return run_validate(o); });
  graph_opt(validate);

  auto* autgen = sub(&app, "autgen", "List generators of Aut_Gamma, or sample random automorphisms", "autgen",
                     [&] { return run_autgen(o); });
  graph_opt(autgen);
  autgen->add_option("--count", o.count, "Number of random automorphisms (0 lists generators)");
  autgen->add_option("--seed", o.seed, "Random seed");

  auto* cls = sub(&app, "classify", "Classify Fix(gamma)", "classify", [&] { return run_classify(o, false, false); });
  graph_opt(cls);
  aut_opt(cls, true);
  auto* fg = sub(&app, "fix-gens", "Print generators of Fix(gamma)", "fix-gens",
                 [&] { return run_classify(o, true, false); });
  graph_opt(fg);
  aut_opt(fg, true);
  auto* ver = sub(&app, "verify", "Classify and independently verify the report", "verify",
                  [&] { return run_classify(o, false, true); });
  graph_opt(ver);
  aut_opt(ver, true);

  auto* dih = app.add_subcommand("dihedral", "Edge-group tools");
  dih->require_subcommand(1);
  auto* dnf = sub(dih, "nf", "Normal forms of a word", "dihedral nf", [&] { return run_dihedral_nf(o); });
  dnf->add_option("--m", o.m, "Edge label")->required();
  dnf->add_option("word", o.word, "Word in a, b")->required();
  auto* dfix = sub(dih, "fix", "Exact fixed subgroup", "dihedral fix", [&] { return run_dihedral_fix(o); });
  dfix->add_option("--m", o.m, "Edge label")->required();
  aut_opt(dfix, true);
  auto* dtree = sub(dih, "tree", "Fixed set on the Bass-Serre tree", "dihedral tree", [&] { return run_dihedral_tree(o); });
  dtree->add_option("--m", o.m, "Edge label (even)")->required();
  aut_opt(dtree, true);

  auto* del = app.add_subcommand("deligne", "Deligne complex tools");
  del->require_subcommand(1);
  auto* ball = sub(del, "ball", "Truncated ball around the base vertex", "deligne ball", [&] { return run_deligne(o, false); });
  graph_opt(ball);
  auto* dfx = sub(del, "fixed", "Fixed vertices inside the ball", "deligne fixed", [&] { return run_deligne(o, true); });
  graph_opt(dfx);
  aut_opt(dfx, true);

  auto* gr = app.add_subcommand("graph", "Graph exports");
  gr->require_subcommand(1);
  auto* emit = sub(gr, "emit", "DOT export of Gamma, Gamma^sigma, or the odd-component graph of a vertex", "graph emit",
                   [&] { return run_graph_emit(o); });
  graph_opt(emit);
  aut_opt(emit, false);
  emit->add_option("--vertex", o.vertex, "Generator a for the odd-component graph");
  emit->add_option("--labelling", o.labelling, "trivial | garside | alternating")->capture_default_str();

  auto* orc = app.add_subcommand("oracle", "Word problem");
  orc->require_subcommand(1);
  auto* eq = sub(orc, "eq", "Decide whether two words are equal", "oracle eq", [&] { return run_oracle_eq(o); });
  graph_opt(eq);
  eq->add_option("lhs", o.lhs, "First word")->required();
  eq->add_option("rhs", o.rhs, "Second word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (o.format == "dot" && command != "validate" && command != "dihedral tree" && command != "deligne ball" &&
      command != "deligne fixed" && command != "graph emit") {
    std::cerr << "error: --format dot is not available for " << command << "\n";
    return 1;
  }
  if (command == "graph emit") o.format = "dot";
  try {
    Output out = action();
    print(o, command, out);
    if (out.failed) return 1;
    return o.strict && out.limited ? 2 : 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
