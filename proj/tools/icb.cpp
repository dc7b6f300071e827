// Command-line front end: parses instances, runs the exact bounds and the
// approximation logic, and emits reproducible reports (text + optional JSON).
#include "icb/approx.hpp"
#include "icb/bounds.hpp"
#include "icb/classify.hpp"
#include "icb/codec.hpp"
#include "icb/graph.hpp"
#include "icb/ramsey.hpp"
#include "icb/rational.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using icb::Error;
using icb::ErrorKind;
using icb::Limits;
using icb::Rational;
using icb::SideInfoGraph;
using icb::VertexSet;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Invalid:
      return 2;
    case ErrorKind::Limit:
      return 3;
    case ErrorKind::Internal:
      return 4;
  }
  return 4;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string fmt_set(const VertexSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::string fmt_sets(const std::vector<VertexSet>& ss) {
  std::string out;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (i) out += ' ';
    out += fmt_set(ss[i]);
  }
  return out;
}

ordered_json rat_json(const Rational& r) {
  return ordered_json{{"num", boost::multiprecision::numerator(r).str()},
                      {"den", boost::multiprecision::denominator(r).str()}};
}

// The report is built in full before anything is printed, so a thrown limit
// or parse error produces no partial output.
struct Report {
  std::ostringstream text;
  ordered_json doc;

  void line(const std::string& s) { text << s << '\n'; }

  void header(const std::string& command, std::uint64_t seed) {
    doc["tool"] = "icb";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["seed"] = seed;
    line(std::string("icb ") + kVersion);
    line("seed: " + std::to_string(seed));
  }

  void instance(const SideInfoGraph& g) {
    const char* mode = g.mode() == icb::Mode::Directed ? "directed" : "undirected";
    doc["instance"] = {{"n", g.n()}, {"mode", mode}, {"arcs", g.arc_count()}};
    line("instance: n=" + std::to_string(g.n()) + " mode=" + mode +
         " arcs=" + std::to_string(g.arc_count()));
  }

  void emit(const std::string& json_path) const {
    std::cout << text.str();
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw Error(ErrorKind::Parse, "cannot write JSON to " + json_path);
      out << doc.dump(2) << '\n';
    }
  }
};

void fill_classification(Report& r, const icb::ClassLabel& cl) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  r.doc["classification"] = {
      {"undirected", cl.undirected},
      {"unidirected", cl.unidirected},
      {"planar", cl.planar},
      {"complement_planar", cl.complement_planar},
      {"line_graph", cl.line_graph},
      {"fuzzy_asserted", cl.fuzzy_asserted},
      {"bilinear_ramsey", cl.bilinear_ramsey},
      {"factor4_undirected", cl.factor4_undirected},
      {"factor4_directed", cl.factor4_directed},
      {"log_lower_bound", cl.log_lower_bound},
      {"notes", cl.notes},
  };
  r.line("classification:");
  r.line(std::string("  undirected: ") + yn(cl.undirected));
  r.line(std::string("  unidirected: ") + yn(cl.unidirected));
  r.line(std::string("  planar (underlying): ") + yn(cl.planar));
  r.line(std::string("  complement planar (underlying): ") + yn(cl.complement_planar));
  r.line(std::string("  line graph (underlying): ") + yn(cl.line_graph));
  r.line(std::string("  fuzzy circular interval (asserted): ") + yn(cl.fuzzy_asserted));
  r.line("applicable results:");
  r.line(std::string("  bilinear ramsey constants: ") + yn(cl.bilinear_ramsey));
  r.line(std::string("  factor-4 (undirected form): ") + yn(cl.factor4_undirected));
  r.line(std::string("  factor-4 (directed form): ") + yn(cl.factor4_directed));
  r.line(std::string("  log-n lower bound: ") + yn(cl.log_lower_bound));
  for (const auto& n : cl.notes) r.line("note: " + n);
}

void fill_reference_curves(Report& r, int n) {
  if (n <= 1) return;
  double log_n = std::log2(static_cast<double>(n));
  double undir = n / log_n;
  double dir = n * std::log2(log_n) / log_n;
  r.doc["reference_curves"] = {
      {"label", "asymptotic reference, not a guarantee at this n"},
      {"undirected_n_over_log2n", undir},
      {"directed_n_log2log2n_over_log2n", dir},
  };
  r.line("reference curves (asymptotic reference, not a guarantee at this n):");
  r.line("  undirected clique-cover factor n/log2(n) = " + fmt(undir));
  r.line("  directed fractional factor n*log2(log2(n))/log2(n) = " + fmt(dir));
}

void fill_bounds(Report& r, const icb::BoundsReport& b, const SideInfoGraph& g,
                 const Limits& limits) {
  ordered_json jb;
  jb["mais"] = {{"value", b.mais.value}, {"witness", b.mais.witness}};
  jb["alpha_core"] = {{"value", b.alpha_core.value}, {"witness", b.alpha_core.witness}};
  jb["clique_cover"] = {{"value", b.clique_cover.value},
                        {"partition", b.clique_cover.partition}};
  jb["fractional"] = rat_json(b.fractional);
  ordered_json cover = ordered_json::array();
  for (const auto& entry : b.fractional_cover)
    cover.push_back({{"set", entry.set}, {"weight", rat_json(entry.weight)}});
  jb["fractional_cover"] = cover;
  jb["beta_lower"] = rat_json(b.beta_lower);
  jb["beta_upper"] = rat_json(b.beta_upper);
  jb["beta_tight"] = b.beta_tight;
  jb["gap_ratio"] = rat_json(b.gap_ratio);
  jb["undirected"] = b.undirected;
  if (b.undirected) jb["mais_equals_alpha"] = b.mais_equals_alpha;

  r.line("mais: " + std::to_string(b.mais.value) + "  witness: " + fmt_set(b.mais.witness));
  r.line("alpha (bidirectional core): " + std::to_string(b.alpha_core.value) +
         "  witness: " + fmt_set(b.alpha_core.witness));
  r.line("clique cover: " + std::to_string(b.clique_cover.value) +
         "  partition: " + fmt_sets(b.clique_cover.partition));
  std::string cover_text;
  for (std::size_t i = 0; i < b.fractional_cover.size(); ++i) {
    if (i) cover_text += ' ';
    cover_text += fmt_set(b.fractional_cover[i].set) + "=" +
                  icb::to_string(b.fractional_cover[i].weight);
  }
  r.line("fractional clique cover: " + icb::to_string(b.fractional) +
         "  weights: " + cover_text);

  // b-fold rates of the core complement, as far as the exact limit allows
  ordered_json folds = ordered_json::array();
  icb::UndirectedGraph comp = bidirectional_core(g).complement();
  std::string fold_text;
  for (int fold = 1; fold <= limits.b_limit; ++fold) {
    try {
      int chi_b = icb::b_fold_chromatic(comp, fold, limits);
      Rational rate(chi_b, fold);
      folds.push_back({{"b", fold}, {"chi_b", chi_b}, {"rate", rat_json(rate)}});
      if (!fold_text.empty()) fold_text += ' ';
      fold_text += "chi^(" + std::to_string(fold) + ")/" + std::to_string(fold) +
                   "=" + icb::to_string(rate);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Limit) throw;
      break;
    }
  }
  jb["b_fold_rates"] = folds;
  if (!fold_text.empty()) r.line("b-fold rates: " + fold_text);

  if (b.beta_tight)
    r.line("beta: " + icb::to_string(b.beta_lower) + " (tight)");
  else
    r.line("beta: in [" + icb::to_string(b.beta_lower) + ", " +
           icb::to_string(b.beta_upper) + "]");
  r.line("gap ratio (clique cover / mais): " + icb::to_string(b.gap_ratio));
  if (b.undirected)
    r.line(std::string("mais equals alpha: ") + (b.mais_equals_alpha ? "yes" : "no"));
  r.doc["bounds"] = jb;
}

int run_bounds(const std::string& path, const Limits& limits, std::uint64_t seed,
               bool fuzzy, const std::string& json_path) {
  SideInfoGraph g = icb::load_graph(path);
  Report r;
  r.header("bounds", seed);
  r.instance(g);
  fill_classification(r, icb::classify(g, fuzzy, limits));
  icb::BoundsReport b = icb::bounds_report(g, limits);
  fill_bounds(r, b, g, limits);
  fill_reference_curves(r, g.n());
  r.emit(json_path);
  return 0;
}

int run_classify(const std::string& path, const Limits& limits, std::uint64_t seed,
                 bool fuzzy, const std::string& json_path) {
  SideInfoGraph g = icb::load_graph(path);
  Report r;
  r.header("classify", seed);
  r.instance(g);
  fill_classification(r, icb::classify(g, fuzzy, limits));
  r.emit(json_path);
  return 0;
}

int run_ramsey(const std::string& cls_token, int i, int j, int verify_order,
               const Limits& limits, std::uint64_t seed, const std::string& json_path) {
  icb::GraphClass cls = icb::parse_graph_class(cls_token);
  icb::RamseyValue v = icb::class_ramsey({cls, i, j});
  Report r;
  r.header("ramsey", seed);
  r.doc["query"] = {{"class", icb::graph_class_name(cls)}, {"i", i}, {"j", j}};
  r.doc["value"] = v.value;
  r.doc["is_upper_bound"] = v.is_upper_bound;
  r.doc["source"] = v.source;
  r.doc["notes"] = v.notes;
  std::string rel = v.is_upper_bound ? " <= " : " = ";
  r.line("R[" + icb::graph_class_name(cls) + "](" + std::to_string(i) + ", " +
         std::to_string(j) + ")" + rel + std::to_string(v.value) + "  [" + v.source + "]");
  if (v.is_upper_bound) r.line("flag: upper bound, not an exact class value");
  for (const auto& n : v.notes) r.line("note: " + n);

  if (verify_order > 0) {
    icb::VerifyResult vr = icb::verify_class_ramsey(cls, i, j, verify_order, limits);
    ordered_json jv = {{"order", verify_order},
                       {"holds", vr.holds},
                       {"graphs_checked", vr.graphs_checked},
                       {"class_members", vr.class_members}};
    if (vr.counterexample) {
      ordered_json edges = ordered_json::array();
      for (auto [a, b] : vr.counterexample->edges()) edges.push_back({a, b});
      jv["counterexample"] = {{"n", vr.counterexample->n()}, {"edges", edges}};
    }
    r.doc["verification"] = jv;
    std::string verdict = vr.holds ? "holds" : "FAILS";
    r.line("verification at order " + std::to_string(verify_order) + ": " + verdict +
           " (" + std::to_string(vr.class_members) + " class members among " +
           std::to_string(vr.graphs_checked) + " graphs)");
    if (vr.counterexample) {
      std::string edges;
      for (auto [a, b] : vr.counterexample->edges())
        edges += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      r.line("counterexample on " + std::to_string(vr.counterexample->n()) +
             " vertices:" + edges);
    }
  }
  r.emit(json_path);
  return 0;
}

// Largest color class of a proper coloring, as a witness vertex set.
VertexSet largest_color_class(const icb::ColoringResult& col) {
  std::vector<VertexSet> classes(static_cast<std::size_t>(col.value));
  for (std::size_t v = 0; v < col.colors.size(); ++v)
    classes[static_cast<std::size_t>(col.colors[v] - 1)].push_back(static_cast<int>(v) + 1);
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes.size(); ++c)
    if (classes[c].size() > classes[best].size()) best = c;
  return classes[best];
}

std::vector<VertexSet> color_classes(const icb::ColoringResult& col) {
  std::vector<VertexSet> classes(static_cast<std::size_t>(col.value));
  for (std::size_t v = 0; v < col.colors.size(); ++v)
    classes[static_cast<std::size_t>(col.colors[v] - 1)].push_back(static_cast<int>(v) + 1);
  return classes;
}

void fill_factor4(Report& r, const SideInfoGraph& g, const Limits& limits) {
  icb::BoundPair bp;
  try {
    bp = icb::is_undirected(g) ? icb::planar_bounds(g, limits)
                               : icb::directed_planar_bounds(g, limits);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Invalid) {
      r.doc["factor4"] = {{"applies", false}, {"reason", e.what()}};
      r.line(std::string("factor-4 bounds: not applicable (") + e.what() + ")");
      return;
    }
    if (e.kind() == ErrorKind::Limit) {
      r.doc["factor4"] = {{"applies", false}, {"skipped", e.what()}};
      r.line(std::string("factor-4 bounds: skipped (") + e.what() + ")");
      return;
    }
    throw;
  }
  ordered_json jf = {{"applies", true},
                     {"route", bp.route},
                     {"lower", rat_json(bp.lower)},
                     {"upper", rat_json(bp.upper)}};
  r.line("factor-4 route: " + bp.route);
  r.line("factor-4 bounds: " + icb::to_string(bp.lower) + " <= beta <= " +
         icb::to_string(bp.upper));

  // witness: a four-coloring of the route's graph; its classes are the
  // independent sets (graph planar) or the covering cliques (complement planar)
  try {
    bool comp_route = bp.route.find("complement") != std::string::npos;
    icb::UndirectedGraph target = icb::is_undirected(g)
                                       ? icb::bidirectional_core(g)
                                       : icb::underlying_undirected(g);
    if (comp_route)
      target = icb::is_undirected(g)
                   ? icb::bidirectional_core(g).complement()
                   : icb::underlying_undirected(icb::complement(g));
    icb::ColoringResult col = icb::chromatic_number(target, limits);
    if (comp_route) {
      jf["clique_cover_witness"] = color_classes(col);
      r.line("witness clique cover (" + std::to_string(col.value) +
             " cliques): " + fmt_sets(color_classes(col)));
    } else {
      VertexSet big = largest_color_class(col);
      jf["four_coloring_classes"] = color_classes(col);
      jf["independent_set_witness"] = big;
      r.line("witness independent set (size " + std::to_string(big.size()) +
             ", from a " + std::to_string(col.value) +
             "-coloring): " + fmt_set(big));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Limit) throw;
    jf["witness_skipped"] = e.what();
    r.line(std::string("witness coloring skipped (") + e.what() + ")");
  }
  r.doc["factor4"] = jf;
}

void fill_log_lower(Report& r, const SideInfoGraph& g) {
  if (!icb::is_unidirected(g)) return;
  VertexSet acyclic = icb::extract_acyclic(g);
  int lb = icb::unidirected_lower_bound(g);
  int log_floor = g.n() >= 1 ? static_cast<int>(std::floor(std::log2(g.n()))) : 0;
  r.doc["log_lower"] = {{"floor_log2_n", log_floor},
                        {"acyclic_set", acyclic},
                        {"size", acyclic.size()},
                        {"beta_lower_bound", lb}};
  r.line("log-n route (unidirected): floor(log2 " + std::to_string(g.n()) +
         ") = " + std::to_string(log_floor));
  r.line("acyclic induced set (topological order, size " +
         std::to_string(acyclic.size()) + "): " + fmt_set(acyclic));
  r.line("beta lower bound: " + std::to_string(lb));
}

int run_gap(const std::string& path, int synthetic_n, const std::string& cls_token,
            const Limits& limits, std::uint64_t seed, bool fuzzy,
            const std::string& json_path) {
  Report r;
  r.header("gap", seed);

  std::optional<SideInfoGraph> g;
  if (!path.empty()) {
    g = icb::load_graph(path);
    r.instance(*g);
  } else {
    if (synthetic_n < 1)
      throw Error(ErrorKind::Invalid, "gap needs an instance file or --n");
    r.doc["instance"] = {{"n", synthetic_n}, {"synthetic", true}};
    r.line("instance: synthetic n=" + std::to_string(synthetic_n));
  }
  const int n = g ? g->n() : synthetic_n;

  if (g) fill_classification(r, icb::classify(*g, fuzzy, limits));

  icb::ClassConstants cc;
  bool have_constants = false;
  if (!cls_token.empty()) {
    icb::GraphClass cls = icb::parse_graph_class(cls_token);
    if (cls == icb::GraphClass::GeneralUpper)
      throw Error(ErrorKind::Invalid,
                  "general-upper has no polynomial Ramsey constants; "
                  "use planar, line, or fuzzy");
    cc = icb::theorem1_parameters(n, 1, 1, 1);
    have_constants = true;
    r.doc["class_constants"] = {{"class", icb::graph_class_name(cls)},
                                {"a", rat_json(cc.a)},
                                {"b", rat_json(cc.b)},
                                {"c", rat_json(cc.c)},
                                {"n", cc.n},
                                {"k", cc.k},
                                {"gap", cc.gap}};
    r.line("class constants (" + icb::graph_class_name(cls) +
           "): a=" + icb::to_string(cc.a) + " b=" + icb::to_string(cc.b) +
           " c=" + icb::to_string(cc.c));
    r.line("pivot k = " + fmt(cc.k) + "  multiplicative gap = " + fmt(cc.gap));
    if (!g)
      r.line("(factor-4 and certificate routes apply when an instance is supplied)");
  }

  if (g && have_constants) {
    if (icb::is_undirected(*g)) {
      try {
        icb::GapCertificate cert = icb::theorem1_certificate(*g, cc, limits);
        bool case1 = cert.kind == icb::GapCase::CliqueCoverSmall;
        ordered_json jc = {{"case", case1 ? 1 : 2},
                           {"claimed_bound", rat_json(cert.claimed_bound)},
                           {"threshold", cert.threshold},
                           {"class_assertion_ok", cert.class_assertion_ok},
                           {"note", cert.note}};
        if (case1) {
          jc["partition"] = cert.partition;
          r.line("gap certificate: case 1 (clique cover below 2n/k)");
          r.line("  clique cover = " + icb::to_string(cert.claimed_bound) +
                 " < threshold " + fmt(cert.threshold));
          r.line("  partition: " + fmt_sets(cert.partition));
        } else {
          jc["independent_set"] = cert.independent_set;
          r.line("gap certificate: case 2 (independent set certifies the lower bound)");
          r.line("  independent set (size " + icb::to_string(cert.claimed_bound) +
                 "): " + fmt_set(cert.independent_set));
          r.line("  required size: " + fmt(cert.threshold));
          r.line(std::string("  class assertion: ") +
                 (cert.class_assertion_ok ? "holds" : "VIOLATED"));
        }
        if (!cert.note.empty()) r.line("  note: " + cert.note);
        r.doc["certificate"] = jc;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Limit) throw;
        r.doc["certificate"] = {{"skipped", e.what()}};
        r.line(std::string("gap certificate skipped (") + e.what() + ")");
      }
    } else {
      r.doc["certificate"] = {{"skipped", "theorem-1 certificate needs an undirected instance"}};
      r.line("gap certificate skipped (theorem-1 certificate needs an undirected instance)");
    }
  }

  if (g) {
    fill_factor4(r, *g, limits);
    fill_log_lower(r, *g);
    try {
      icb::BoundsReport b = icb::bounds_report(*g, limits);
      fill_bounds(r, b, *g, limits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Limit) throw;
      r.doc["bounds"] = {{"skipped", e.what()}};
      r.line(std::string("exact sandwich skipped (") + e.what() + ")");
    }
  }
  fill_reference_curves(r, n);
  r.emit(json_path);
  return 0;
}

std::string check_json_text(const icb::CodeCheck& chk) {
  return std::string(chk.pass ? "pass" : "FAIL") + " (" +
         (chk.exhaustive ? "exhaustive" : "sampled") + ", " +
         std::to_string(chk.cases) + " cases, seed " + std::to_string(chk.seed) + ")";
}

ordered_json check_json(const icb::CodeCheck& chk) {
  ordered_json j = {{"pass", chk.pass},
                    {"exhaustive", chk.exhaustive},
                    {"cases", chk.cases},
                    {"seed", chk.seed}};
  if (!chk.pass) {
    j["failure"] = chk.failure;
    if (chk.bad_slot > 0) j["bad_slot"] = chk.bad_slot;
  }
  return j;
}

int run_code(const std::string& path, int b, bool verify, int trials,
             std::uint64_t seed, const Limits& limits, const std::string& out_path,
             const std::string& json_path) {
  SideInfoGraph g = icb::load_graph(path);
  icb::IndexCode code = b == 1 ? icb::build_clique_cover_code(g, limits)
                               : icb::build_fractional_code(g, b, limits);
  Rational rate = icb::code_rate(code);
  std::string body = icb::serialize_code(code);

  // stdout itself is a valid code file; metadata rides in comments
  std::ostringstream out;
  out << "# icb " << kVersion << '\n';
  out << "# seed: " << seed << '\n';
  out << "# instance: n=" << g.n() << " arcs=" << g.arc_count() << '\n';
  out << "# rate: " << icb::to_string(rate) << " (" << code.transmissions.size()
      << " slots, t=" << code.t << ")\n";
  out << body;

  ordered_json doc;
  doc["tool"] = "icb";
  doc["version"] = kVersion;
  doc["command"] = "code";
  doc["seed"] = seed;
  doc["instance"] = {{"n", g.n()},
                     {"mode", g.mode() == icb::Mode::Directed ? "directed" : "undirected"},
                     {"arcs", g.arc_count()}};
  doc["b"] = b;
  doc["t"] = code.t;
  doc["slots"] = code.transmissions.size();
  doc["rate"] = rat_json(rate);
  doc["code"] = body;

  bool failed = false;
  if (verify) {
    icb::CodeCheck chk = icb::verify_code(g, code, trials, seed);
    out << "# verification: " << check_json_text(chk) << '\n';
    if (!chk.pass && !chk.failure.empty()) out << "# failure: " << chk.failure << '\n';
    doc["verification"] = check_json(chk);
    failed = !chk.pass;
  }

  std::cout << out.str();
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorKind::Parse, "cannot write code to " + out_path);
    f << body;
  }
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw Error(ErrorKind::Parse, "cannot write JSON to " + json_path);
    f << doc.dump(2) << '\n';
  }
  return failed ? 1 : 0;
}

int run_verify(const std::string& path, const std::string& code_path, int trials,
               std::uint64_t seed, const std::string& json_path) {
  SideInfoGraph g = icb::load_graph(path);
  std::ifstream f(code_path);
  if (!f) throw Error(ErrorKind::Parse, "cannot open code file " + code_path);
  std::stringstream buf;
  buf << f.rdbuf();
  icb::IndexCode code = icb::parse_code(buf.str());

  Report r;
  r.header("verify", seed);
  r.instance(g);
  r.doc["code"] = {{"t", code.t},
                   {"slots", code.transmissions.size()},
                   {"rate", rat_json(icb::code_rate(code))}};
  r.line("code: t=" + std::to_string(code.t) + " slots=" +
         std::to_string(code.transmissions.size()) + " rate=" +
         icb::to_string(icb::code_rate(code)));
  icb::CodeCheck chk = icb::verify_code(g, code, trials, seed);
  r.doc["verification"] = check_json(chk);
  r.line("verdict: " + check_json_text(chk));
  if (!chk.pass && !chk.failure.empty()) r.line("failure: " + chk.failure);
  r.emit(json_path);
  return chk.pass ? 0 : 1;
}

int run_extract(const std::string& path, std::uint64_t seed, const std::string& json_path) {
  SideInfoGraph g = icb::load_graph(path);
  Report r;
  r.header("extract-acyclic", seed);
  r.instance(g);
  VertexSet acyclic = icb::extract_acyclic(g);
  int lb = icb::unidirected_lower_bound(g);
  int log_floor = static_cast<int>(std::floor(std::log2(g.n())));
  r.doc["acyclic_set"] = acyclic;
  r.doc["size"] = acyclic.size();
  r.doc["floor_log2_n"] = log_floor;
  r.doc["beta_lower_bound"] = lb;
  r.line("acyclic induced set (topological order): " + fmt_set(acyclic));
  r.line("size: " + std::to_string(acyclic.size()) + "  floor(log2 n) = " +
         std::to_string(log_floor));
  r.line("beta lower bound: " + std::to_string(lb));
  r.emit(json_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadcast-rate bounds for index coding instances"};
  app.set_version_flag("--version", std::string("icb ") + kVersion);
  app.require_subcommand(1);

  Limits limits;
  std::uint64_t seed = 42;
  int trials = 100;
  std::string json_path;

  app.add_option("--exact-limit", limits.exact_limit,
                 "max n for the exact solvers (default 20)");
  app.add_option("--b-max", limits.b_limit, "max fold count b (default 4)");
  app.add_option("--enum-order", limits.enum_order,
                 "max order for exhaustive enumeration (default 7)");
  app.add_option("--seed", seed, "RNG seed for sampled verification (default 42)");
  app.add_option("--trials", trials, "sampled verification trials (default 100)");
  app.add_option("--json", json_path, "write the structured report to this path");

  std::string bounds_path;
  bool bounds_fuzzy = false;
  auto* cmd_bounds = app.add_subcommand("bounds", "exact broadcast-rate sandwich");
  cmd_bounds->add_option("instance", bounds_path, "instance file")->required();
  cmd_bounds->add_flag("--fuzzy", bounds_fuzzy, "assert fuzzy circular interval membership");

  std::string classify_path;
  bool classify_fuzzy = false;
  auto* cmd_classify = app.add_subcommand("classify", "graph-class recognition");
  cmd_classify->add_option("instance", classify_path, "instance file")->required();
  cmd_classify->add_flag("--fuzzy", classify_fuzzy, "assert fuzzy circular interval membership");

  std::string ramsey_class;
  int ramsey_i = 0, ramsey_j = 0, verify_order = 0;
  auto* cmd_ramsey = app.add_subcommand("ramsey", "class Ramsey numbers");
  cmd_ramsey->add_option("class", ramsey_class, "planar|line|fuzzy|general-upper")
      ->required();
  cmd_ramsey->add_option("i", ramsey_i, "clique target")->required();
  cmd_ramsey->add_option("j", ramsey_j, "independent-set target")->required();
  cmd_ramsey->add_option("--verify-order", verify_order,
                         "exhaustively check the value at this order");

  std::string gap_path, gap_class;
  int gap_n = 0;
  bool gap_fuzzy = false;
  auto* cmd_gap = app.add_subcommand("gap", "approximation guarantees");
  cmd_gap->add_option("instance", gap_path, "instance file");
  cmd_gap->add_option("--n", gap_n, "synthetic instance size");
  cmd_gap->add_option("--class", gap_class, "planar|line|fuzzy");
  cmd_gap->add_flag("--fuzzy", gap_fuzzy, "assert fuzzy circular interval membership");

  std::string code_path, code_out;
  int code_b = 1;
  bool code_verify = false;
  auto* cmd_code = app.add_subcommand("code", "build a clique-cover index code");
  cmd_code->add_option("instance", code_path, "instance file")->required();
  cmd_code->add_option("--b", code_b, "fold count (default 1)");
  cmd_code->add_flag("--verify", code_verify, "verify the built code");
  cmd_code->add_option("--out", code_out, "also write the bare code file here");

  std::string verify_graph, verify_code_path;
  auto* cmd_verify = app.add_subcommand("verify", "verify a code file against an instance");
  cmd_verify->add_option("instance", verify_graph, "instance file")->required();
  cmd_verify->add_option("code", verify_code_path, "code file")->required();

  std::string extract_path;
  auto* cmd_extract =
      app.add_subcommand("extract-acyclic", "acyclic set extraction for unidirected graphs");
  cmd_extract->add_option("instance", extract_path, "instance file")->required();

  for (auto* sc : {cmd_bounds, cmd_classify, cmd_ramsey, cmd_gap, cmd_code,
                   cmd_verify, cmd_extract})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_bounds->parsed())
      return run_bounds(bounds_path, limits, seed, bounds_fuzzy, json_path);
    if (cmd_classify->parsed())
      return run_classify(classify_path, limits, seed, classify_fuzzy, json_path);
    if (cmd_ramsey->parsed())
      return run_ramsey(ramsey_class, ramsey_i, ramsey_j, verify_order, limits, seed,
                        json_path);
    if (cmd_gap->parsed())
      return run_gap(gap_path, gap_n, gap_class, limits, seed, gap_fuzzy, json_path);
    if (cmd_code->parsed())
      return run_code(code_path, code_b, code_verify, trials, seed, limits, code_out,
                      json_path);
    if (cmd_verify->parsed())
      return run_verify(verify_graph, verify_code_path, trials, seed, json_path);
    if (cmd_extract->parsed()) return run_extract(extract_path, seed, json_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}
