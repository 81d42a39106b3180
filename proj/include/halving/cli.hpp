#pragma once

#include <halving/constructions.hpp>
#include <halving/render.hpp>
#include <halving/search.hpp>
#include <halving/verification.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace halving::cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline PointConfig load_points(const std::string& path) {
  if (path == "-") return read_points(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_points(in);
}

inline void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline Direction parse_direction(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == s.size())
    throw std::invalid_argument("direction must be DX,DY");
  const Direction d{parse_scalar(s.substr(0, comma)), parse_scalar(s.substr(comma + 1))};
  if (d.is_zero()) throw std::invalid_argument("direction must be nonzero");
  return d;
}

/// Keeps a user direction when it is already generic, otherwise blends it
/// toward a known-generic one until genericity holds, warning on stderr.
inline Direction resolve_up(const PointConfig& cfg, const std::string& up_arg) {
  if (up_arg.empty()) return generic_up_direction(cfg);
  const Direction d = parse_direction(up_arg);
  if (is_generic_up(cfg, d)) return d.reduced();
  const Direction g = generic_up_direction(cfg);
  Direction use = g;
  for (int k = 8; k < 4096; k += 8) {
    const Scalar s = Scalar(Int(1) << k);
    const Direction cand{d.dx * s + g.dx, d.dy * s + g.dy};
    if (!cand.is_zero() && is_generic_up(cfg, cand)) {
      use = cand.reduced();
      break;
    }
  }
  std::cerr << "notice: up direction " << up_arg << " is degenerate for this input; using "
            << format_scalar(use.dx) << "," << format_scalar(use.dy) << "\n";
  return use;
}

inline Json pair_json(const std::pair<int, int>& p) { return Json::array({p.first, p.second}); }

inline Json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(pair_json(p));
  return a;
}

inline Json direction_json(const Direction& d) {
  return Json::array({format_scalar(d.dx), format_scalar(d.dy)});
}

inline Json point_json(const Point& p) {
  return Json::array({format_scalar(p.x), format_scalar(p.y)});
}

inline std::string points_text(const PointConfig& cfg) {
  std::ostringstream os;
  write_points(os, cfg);
  return os.str();
}

inline Json cert_json(const ConstructionCert& c) {
  Json j;
  j["kind"] = c.kind;
  j["expected_edges"] = c.expected_edges ? Json(*c.expected_edges) : Json(nullptr);
  j["expected_degrees"] = c.expected_degrees ? Json(*c.expected_degrees) : Json(nullptr);
  j["expected_edge_list"] = c.expected_edge_list ? pairs_json(*c.expected_edge_list) : Json(nullptr);
  j["marked"] = c.marked;
  j["marked_shape"] = c.marked_shape;
  j["marked_edges"] = pairs_json(c.marked_edges);
  return j;
}

inline std::vector<std::pair<int, int>> pairs_from_json(const Json& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : a) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

inline ConstructionCert cert_from_json(const Json& j) {
  ConstructionCert c;
  c.kind = j.value("kind", std::string{});
  if (j.contains("expected_edges") && !j["expected_edges"].is_null())
    c.expected_edges = j["expected_edges"].get<int>();
  if (j.contains("expected_degrees") && !j["expected_degrees"].is_null())
    c.expected_degrees = j["expected_degrees"].get<DegreeSequence>();
  if (j.contains("expected_edge_list") && !j["expected_edge_list"].is_null())
    c.expected_edge_list = pairs_from_json(j["expected_edge_list"]);
  if (j.contains("marked")) c.marked = j["marked"].get<std::vector<int>>();
  c.marked_shape = j.value("marked_shape", std::string{});
  if (j.contains("marked_edges")) c.marked_edges = pairs_from_json(j["marked_edges"]);
  return c;
}

inline std::string perturb_name(PerturbKind k) {
  switch (k) {
    case PerturbKind::translate_pos: return "translate+";
    case PerturbKind::translate_neg: return "translate-";
    case PerturbKind::rotate_pos: return "rotate+";
    case PerturbKind::rotate_neg: return "rotate-";
  }
  return "?";
}

inline std::vector<std::pair<int, int>> parse_edge_spec(const std::string& spec) {
  std::vector<std::pair<int, int>> edges;
  if (spec.empty()) return edges;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge must look like A-B");
    edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return edges;
}

struct GenOptions {
  std::string kind;
  int n = 0;
  int k = 0;
  std::vector<std::string> inputs;
  int vertices = 0;
  std::string edges;
  std::string out;
  bool no_cert = false;
  bool four_leaves = false;
};

inline Construction build(const GenOptions& o) {
  auto need_n = [&] {
    if (o.n <= 0) throw std::invalid_argument("gen " + o.kind + " needs --n");
    return o.n;
  };
  auto need_inputs = [&](std::size_t c) {
    if (o.inputs.size() != c)
      throw std::invalid_argument("gen " + o.kind + " needs exactly " + std::to_string(c) +
                                  " --in file(s)");
  };
  if (o.kind == "polygon") return convex_polygon(need_n());
  if (o.kind == "star") return star(need_n());
  if (o.kind == "path") return path_construction(need_n(), o.four_leaves);
  if (o.kind == "four-leaves") return path_construction(need_n(), true);
  if (o.kind == "cycle") return cycle_construction(need_n());
  if (o.kind == "clique") {
    if (o.k <= 0) throw std::invalid_argument("gen clique needs --k");
    return clique_construction(o.k);
  }
  if (o.kind == "cross") {
    need_inputs(2);
    return cross(load_points(o.inputs[0]), load_points(o.inputs[1]));
  }
  if (o.kind == "y") {
    need_inputs(3);
    return y_shape(load_points(o.inputs[0]), load_points(o.inputs[1]), load_points(o.inputs[2]));
  }
  if (o.kind == "pad") {
    need_inputs(1);
    return pad(load_points(o.inputs[0]), need_n());
  }
  if (o.kind == "induced") {
    if (o.vertices <= 0) throw std::invalid_argument("gen induced needs --vertices");
    return induced_embedding(AbstractGraph{o.vertices, parse_edge_spec(o.edges)});
  }
  throw std::invalid_argument("unknown construction kind: " + o.kind);
}

inline int cmd_gen(const GenOptions& o) {
  const Construction c = build(o);
  emit(o.out, points_text(c.config));
  if (!o.out.empty() && o.out != "-" && !o.no_cert)
    emit(o.out + ".cert.json", cert_json(c.cert).dump(2) + "\n");
  return 0;
}

struct AnalyzeOptions {
  std::string file;
  bool json = false;
  std::string method = "sweep";
  int threads = 1;
};

inline int cmd_analyze(const AnalyzeOptions& o) {
  const PointConfig cfg = load_points(o.file);
  const EnumMethod method =
      o.method == "brute" ? EnumMethod::brute_force : EnumMethod::rotational_sweep;
  if (o.method != "brute" && o.method != "sweep")
    throw std::invalid_argument("--method must be sweep or brute");
  const UnderlyingGeograph g = underlying_geograph(cfg, method, o.threads);
  const auto deg = vertex_degrees(g);
  const GraphStats stats = graph_stats(g);

  if (o.json) {
    Json j;
    j["n"] = g.n();
    j["E"] = g.E();
    j["edges"] = pairs_json(g.edges);
    j["degrees"] = deg;
    j["leaves"] = stats.leaves;
    j["components"] = stats.components;
    j["hull"] = stats.hull;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n = " << g.n() << "\n" << "E = " << g.E() << "\n";
  std::cout << "edges:";
  for (auto [a, b] : g.edges) std::cout << " " << a << "-" << b;
  std::cout << "\n" << "degrees:";
  for (int d : deg) std::cout << " " << d;
  std::cout << "\n";
  std::cout << "leaves = " << stats.leaves << "\n";
  std::cout << "components = " << stats.components << "\n";
  std::cout << "hull:";
  for (int h : stats.hull) std::cout << " " << h;
  std::cout << "\n";
  if (stats.max_clique) std::cout << "max clique = " << *stats.max_clique << "\n";
  if (stats.longest_path_vertices)
    std::cout << "longest path = " << *stats.longest_path_vertices << " vertices\n";
  if (stats.longest_cycle_vertices)
    std::cout << "longest cycle = " << *stats.longest_cycle_vertices << " vertices\n";
  return 0;
}

struct ChainsOptions {
  std::string file;
  std::string up;
  bool json = false;
  int extra_orientations = 8;
};

inline int cmd_chains(const ChainsOptions& o) {
  const PointConfig cfg = load_points(o.file);
  const UnderlyingGeograph g = underlying_geograph(cfg, EnumMethod::rotational_sweep);
  const Direction up = resolve_up(cfg, o.up);
  const ChainDecomposition d = decompose_chains(g, up);
  const CrossingSet crossings = geometric_crossings(d);
  const StraddlingSpan sp = straddling_span(g);
  const ChargingReport charge = verify_charging(g, o.extra_orientations);

  if (o.json) {
    Json j;
    j["up"] = direction_json(d.up);
    Json cs = Json::array();
    for (const Chain& c : d.chains) cs.push_back(c.vertices);
    j["chains"] = cs;
    Json xs = Json::array();
    for (const Crossing& c : crossings) {
      Json x;
      x["e1"] = pair_json(c.e1);
      x["e2"] = pair_json(c.e2);
      x["chains"] = Json::array({c.chain1, c.chain2});
      xs.push_back(x);
    }
    j["crossings"] = xs;
    j["span"] = sp.span;
    Json vs = Json::array();
    for (const ChargingViolation& v : charge.violations) {
      Json x;
      x["kind"] = v.kind;
      x["crossing1"] = Json::array({pair_json(v.crossing1_e1), pair_json(v.crossing1_e2)});
      x["crossing2"] = Json::array({pair_json(v.crossing2_e1), pair_json(v.crossing2_e2)});
      x["orientations"] =
          Json::array({direction_json(v.orientation1), direction_json(v.orientation2)});
      vs.push_back(x);
    }
    j["charging_violations"] = vs;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "up = " << format_scalar(d.up.dx) << "," << format_scalar(d.up.dy) << "\n";
  std::cout << "chains (" << d.chains.size() << "):\n";
  for (std::size_t i = 0; i < d.chains.size(); ++i) {
    std::cout << "  " << i << ":";
    for (int v : d.chains[i].vertices) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "crossings = " << crossings.size() << "\n";
  std::cout << "span = " << sp.span << "\n";
  std::cout << "charging violations = " << charge.violations.size() << " (over "
            << charge.orientations_tested << " orientations)\n";
  return charge.ok() ? 0 : 1;
}

struct SpanOptions {
  std::string file;
  bool json = false;
};

inline int cmd_span(const SpanOptions& o) {
  const PointConfig cfg = load_points(o.file);
  const UnderlyingGeograph g = underlying_geograph(cfg, EnumMethod::rotational_sweep);
  const StraddlingSpan sp = straddling_span(g);
  if (o.json) {
    Json j;
    j["span"] = sp.span;
    j["pair"] = Json::array({sp.p, sp.q});
    j["perturbation"] = perturb_name(sp.kind);
    Json line;
    line["through"] = point_json(sp.witness.through);
    line["dir"] = direction_json(sp.witness.dir);
    j["line"] = line;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "span = " << sp.span << "\n";
  std::cout << "witness: perturbation " << perturb_name(sp.kind) << " of the line through points "
            << sp.p << " and " << sp.q << "\n";
  return 0;
}

struct VerifyOptionsCli {
  std::string file;
  bool json = false;
  bool no_chains = false;
  bool no_charging = false;
};

inline int cmd_verify(const VerifyOptionsCli& o) {
  const PointConfig cfg = load_points(o.file);
  VerifyOptions vo;
  vo.chains = !o.no_chains;
  vo.charging = !o.no_charging;
  VerificationReport rep = verify_all(cfg, vo);

  if (o.file != "-") {
    std::ifstream cert_in(o.file + ".cert.json");
    if (cert_in) {
      Json j;
      cert_in >> j;
      const ConstructionCert cert = cert_from_json(j);
      const CertCheck cc = validate_cert(cfg, cert);
      rep.checks.push_back({"certificate", cc.ok, cc.ok ? "" : cc.detail});
      (cc.ok ? rep.passed : rep.failed) += 1;
      std::sort(rep.checks.begin(), rep.checks.end(),
                [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
  }

  if (o.json) {
    Json j;
    Json cs = Json::array();
    for (const CheckResult& c : rep.checks) {
      Json x;
      x["name"] = c.name;
      x["pass"] = c.pass;
      if (!c.witness.empty()) x["witness"] = c.witness;
      cs.push_back(x);
    }
    j["checks"] = cs;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const CheckResult& c : rep.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.witness.empty()) std::cout << ": " << c.witness;
      std::cout << "\n";
    }
    std::cout << rep.passed << " passed, " << rep.failed << " failed\n";
  }
  return rep.all_pass() ? 0 : 1;
}

struct SearchOptions {
  int n = 0;
  int grid = 0;
  bool exhaustive = false;
  unsigned long long random_trials = 0;
  unsigned long long seed = 0;
  int threads = 1;
  bool json = false;
};

inline int cmd_search(const SearchOptions& o) {
  if (o.exhaustive == (o.random_trials > 0))
    throw std::invalid_argument("pick exactly one of --exhaustive and --random T");
  SearchResult res;
  if (o.exhaustive) {
    if (o.grid <= 0) throw std::invalid_argument("--exhaustive needs --grid");
    res = grid_exhaustive(o.n, o.grid, o.threads);
  } else {
    res = random_search(o.n, o.random_trials, o.seed);
  }
  if (o.json) {
    Json j;
    j["mode"] = o.exhaustive ? "exhaustive" : "random";
    j["n"] = res.n;
    if (o.exhaustive)
      j["grid"] = res.grid_size;
    else {
      j["trials"] = res.trials;
      j["seed"] = res.seed;
    }
    j["best"] = res.best;
    j["examined"] = res.examined;
    j["witness"] = points_text(res.witness);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "best = " << res.best << " (examined " << res.examined << ")\n";
  std::cout << "witness:\n" << points_text(res.witness);
  return 0;
}

struct InterpolateOptions {
  std::string file1, file2;
  bool json = false;
};

inline int cmd_interpolate(const InterpolateOptions& o) {
  const PointConfig c1 = load_points(o.file1);
  const PointConfig c2 = load_points(o.file2);
  const std::vector<MotionTrace> traces = interpolate(c1, c2);
  std::set<int> counts;
  for (const MotionTrace& t : traces) {
    counts.insert(t.start_count);
    for (const MotionEvent& e : t.events) counts.insert(e.count_after);
  }
  if (o.json) {
    Json j;
    Json ts = Json::array();
    for (const MotionTrace& t : traces) {
      Json x;
      x["vertex"] = t.vertex;
      x["start_count"] = t.start_count;
      Json es = Json::array();
      for (const MotionEvent& e : t.events) {
        Json ev;
        ev["t"] = format_scalar(e.t);
        ev["aligned"] = pair_json(e.aligned);
        ev["count_after"] = e.count_after;
        es.push_back(ev);
      }
      x["events"] = es;
      ts.push_back(x);
    }
    j["traces"] = ts;
    j["counts_seen"] = std::vector<int>(counts.begin(), counts.end());
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const MotionTrace& t : traces) {
    std::cout << "vertex " << t.vertex << ": start " << t.start_count << ", " << t.events.size()
              << " events";
    if (!t.events.empty()) std::cout << ", final " << t.events.back().count_after;
    std::cout << "\n";
  }
  std::cout << "counts seen:";
  for (int c : counts) std::cout << " " << c;
  std::cout << "\n";
  return 0;
}

struct RenderOptions {
  std::string file;
  std::string out;
  std::string up;
  bool chains = false;
  bool labels = false;
  int canvas = 840;
};

inline int cmd_render(const RenderOptions& o) {
  const PointConfig cfg = load_points(o.file);
  RenderSpec spec;
  spec.canvas = o.canvas;
  spec.label_vertices = o.labels;
  std::string svg;
  if (o.chains) {
    const UnderlyingGeograph g = underlying_geograph(cfg, EnumMethod::rotational_sweep);
    const Direction up = resolve_up(cfg, o.up);
    const ChainDecomposition d = decompose_chains(g, up);
    spec.draw_chains = true;
    svg = render_svg(cfg, &d, spec);
  } else {
    svg = render_svg(cfg, nullptr, spec);
  }
  emit(o.out, svg);
  return 0;
}

}  // namespace detail

/// Dispatches one invocation; argv excludes the program name. Exit codes:
/// 0 success, 1 a verification found failures, 2 invalid input or usage.
inline int run(const std::vector<std::string>& args) {
  CLI::App app{"halving-line toolkit: generate, analyze and verify point configurations"};
  app.require_subcommand(1);

  detail::GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate a configuration with a certificate sidecar");
  g->add_option("kind", gen.kind,
                "polygon|star|path|four-leaves|cycle|clique|cross|y|pad|induced")
      ->required();
  g->add_option("--n", gen.n, "point count (even)");
  g->add_option("--k", gen.k, "clique size");
  g->add_option("--in", gen.inputs, "input points file (repeatable)");
  g->add_option("--vertices", gen.vertices, "abstract vertex count for induced");
  g->add_option("--edges", gen.edges, "abstract edges for induced, e.g. 0-1,2-3");
  g->add_flag("--four-leaves", gen.four_leaves, "path variant with exactly four leaves");
  g->add_option("-o,--out", gen.out, "output points file (default stdout)");
  g->add_flag("--no-cert", gen.no_cert, "skip the .cert.json sidecar");

  detail::AnalyzeOptions an;
  auto* a = app.add_subcommand("analyze", "underlying graph of a configuration");
  a->add_option("file", an.file, "points file, - for stdin")->required();
  a->add_flag("--json", an.json, "machine-readable output");
  a->add_option("--method", an.method, "sweep|brute (default sweep)");
  a->add_option("--threads", an.threads, "worker threads for brute force");

  detail::ChainsOptions ch;
  auto* c = app.add_subcommand("chains", "chain decomposition, crossings, span, charging");
  c->add_option("file", ch.file, "points file, - for stdin")->required();
  c->add_flag("--json", ch.json, "machine-readable output");
  c->add_option("--up", ch.up, "up direction DX,DY (auto-genericized)");
  c->add_option("--orientations", ch.extra_orientations, "extra random charging orientations");

  detail::SpanOptions spn;
  auto* s = app.add_subcommand("span", "maximum halving edges crossed by one line");
  s->add_option("file", spn.file, "points file, - for stdin")->required();
  s->add_flag("--json", spn.json, "machine-readable output");

  detail::VerifyOptionsCli vf;
  auto* v = app.add_subcommand("verify", "run every structural invariant check");
  v->add_option("file", vf.file, "points file, - for stdin")->required();
  v->add_flag("--json", vf.json, "machine-readable output");
  v->add_flag("--no-chains", vf.no_chains, "skip chain-structure checks");
  v->add_flag("--no-charging", vf.no_charging, "skip crossing-charging checks");

  detail::SearchOptions se;
  auto* q = app.add_subcommand("search", "look for configurations with many halving lines");
  q->add_option("--n", se.n, "point count (even)")->required();
  q->add_option("--grid", se.grid, "grid side for exhaustive search");
  q->add_flag("--exhaustive", se.exhaustive, "enumerate all grid subsets");
  q->add_option("--random", se.random_trials, "hill-climb trial count");
  q->add_option("--seed", se.seed, "random seed");
  q->add_option("--threads", se.threads, "worker threads for exhaustive search");
  q->add_flag("--json", se.json, "machine-readable output");

  detail::InterpolateOptions ip;
  auto* i = app.add_subcommand("interpolate", "move one configuration into another");
  i->add_option("file1", ip.file1, "start points file")->required();
  i->add_option("file2", ip.file2, "target points file")->required();
  i->add_flag("--json", ip.json, "machine-readable output");

  detail::RenderOptions re;
  auto* r = app.add_subcommand("render", "draw a configuration as SVG");
  r->add_option("file", re.file, "points file, - for stdin")->required();
  r->add_option("-o,--out", re.out, "output SVG file (default stdout)");
  r->add_flag("--chains", re.chains, "draw the chain decomposition");
  r->add_flag("--labels", re.labels, "label vertices with their indices");
  r->add_option("--canvas", re.canvas, "canvas side in pixels");
  r->add_option("--up", re.up, "up direction DX,DY for chains (auto-genericized)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("halving");
  for (const std::string& arg : args) argv_store.push_back(arg);
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& sarg : argv_store) argv.push_back(sarg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*g) return detail::cmd_gen(gen);
    if (*a) return detail::cmd_analyze(an);
    if (*c) return detail::cmd_chains(ch);
    if (*s) return detail::cmd_span(spn);
    if (*v) return detail::cmd_verify(vf);
    if (*q) return detail::cmd_search(se);
    if (*i) return detail::cmd_interpolate(ip);
    if (*r) return detail::cmd_render(re);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace halving::cli
