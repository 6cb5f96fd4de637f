#include "artinkms/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "artinkms/clique_engine.hpp"
#include "artinkms/error.hpp"
#include "artinkms/kms_analysis.hpp"
#include "artinkms/lambda_tree.hpp"
#include "artinkms/oracle_suite.hpp"
#include "artinkms/presentation.hpp"
#include "artinkms/reversing.hpp"
#include "artinkms/set_algebra.hpp"
#include "artinkms/word_engine.hpp"

namespace artinkms::cli {

namespace {

using Json = nlohmann::ordered_json;
using Row  = std::vector<std::string>;

struct Output {
  Json             json = Json::object();
  std::vector<Row> table;  // header first; empty means "derive from json"
  int              code = kSuccess;
};

// ---------------------------------------------------------------- rendering

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x.str());
}

Json coefficients_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(big(c));
  return a;
}

std::string coefficients_text(const IntPolynomial& p) {
  std::string s;
  for (const auto& c : p.coefficient_strings()) s += (s.empty() ? "" : " ") + c;
  return s;
}

std::string csv_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return shortest_decimal(x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_number_float()) return display_decimal(v.get<double>());
  return v.dump();
}

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return !v.is_structured(); });
}

void render_text(const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      const Json& x = it.value();
      if (!x.is_structured()) {
        out << pad << it.key() << ": " << scalar_text(x) << '\n';
      } else if (x.is_array() && all_scalars(x)) {
        std::string line;
        for (const auto& e : x) line += (line.empty() ? "" : ", ") + scalar_text(e);
        out << pad << it.key() << ": [" << line << "]\n";
      } else {
        out << pad << it.key() << ":\n";
        render_text(x, out, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured() && !(x.is_array() && all_scalars(x))) {
        out << pad << "-\n";
        render_text(x, out, indent + 2);
      } else {
        render_text(Json::object({{"-", x}}), out, indent);
      }
    }
  } else {
    out << pad << scalar_text(v) << '\n';
  }
}

void render(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.json.dump(2) << '\n';
  } else if (format == "text") {
    render_text(o.json, out, 0);
  } else {
    std::vector<Row> table = o.table;
    if (table.empty()) {
      table.push_back({"key", "value"});
      for (auto it = o.json.begin(); it != o.json.end(); ++it) {
        if (it.value().is_structured()) continue;
        table.push_back({it.key(), it.value().is_string() ? it.value().get<std::string>() : it.value().dump()});
      }
    }
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
  }
}

// ------------------------------------------------------------ input helpers

Word word_arg(const MonoidPresentation& P, const std::string& text) {
  if (text == "e" && !P.find_generator("e")) return Word{};
  return parse_word(P, text);
}

// "s1,s1.s2" or "{s1, s1.s2}"; empty for "" or "{}".
std::vector<Word> set_arg(const MonoidPresentation& P, std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' ' || c == '{' || c == '}'; }),
             text.end());
  std::vector<Word> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(word_arg(P, text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json words_json(const MonoidPresentation& P, const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(format_word_or_e(P, w));
  return a;
}

std::string set_text(const MonoidPresentation& P, const std::vector<Word>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : ",") + format_word_or_e(P, w);
  return "{" + s + "}";
}

Json root_json(const RootInterval& r) {
  return Json{{"polynomial", coefficients_json(r.polynomial)},
              {"lo", to_string(r.lo)},
              {"hi", to_string(r.hi)},
              {"exact", r.exact},
              {"approx", r.approx}};
}

Json endpoint_json(const BetaEndpoint& e) {
  Json j{{"beta", e.infinite ? Json(nullptr) : Json(e.beta)}, {"infinite", e.infinite}, {"closed", e.closed}};
  j["t_root"] = e.t_root ? root_json(*e.t_root) : Json(nullptr);
  return j;
}

std::string endpoint_text(const BetaEndpoint& e, bool upper) {
  if (e.infinite) return upper ? "inf" : "-inf";
  return display_decimal(e.beta);
}

std::string components_text(const TemperatureSpace& space) {
  std::string s;
  for (const auto& c : space.components) {
    if (!s.empty()) s += " u ";
    if (c.point) {
      s += "{" + endpoint_text(c.lower, false) + "}";
      continue;
    }
    s += c.lower.closed ? "[" : "(";
    s += endpoint_text(c.lower, false) + ", " + endpoint_text(c.upper, true);
    s += c.upper.closed ? "]" : ")";
  }
  return s.empty() ? "empty" : s;
}

Json cell_json(const MonoidPresentation& P, const Cell& c) {
  return Json{{"prefix", format_word_or_e(P, c.prefix)}, {"blockers", words_json(P, c.blockers)}};
}

Json set_json(const MonoidPresentation& P, const SymbolicSet& s) {
  Json a = Json::array();
  for (const auto& c : s) a.push_back(cell_json(P, c));
  return a;
}

int code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Inconclusive:
    case ErrorKind::CapExceeded:
    case ErrorKind::UnsaturatedPinf:
      return kInconclusive;
    case ErrorKind::Defect:
      return kNegative;
    default:
      return kInputError;
  }
}

// ----------------------------------------------------------------- options

struct Options {
  std::string monoid;
  std::string format = "json";

  std::string w1, w2;
  std::size_t max_steps  = kDefaultStepCap;
  std::size_t radius     = 4;
  bool        elements   = false;
  std::size_t max_iter   = kDefaultPinfIterations;
  std::string list;
  std::size_t max_depth  = kDefaultDepthCap;
  std::size_t max_nodes  = kDefaultNodeCap;
  std::string family     = "atoms";
  bool        force      = false;
  std::size_t max_family = 20;
  std::size_t grid       = 0;
  std::string t;
  std::optional<double> beta;
  std::vector<std::string> Js;
  std::string prefix = "e";
  std::string K;
  std::string target = "atoms";
  std::size_t verify_radius = 0;
  std::size_t samples  = 100;
  std::size_t ball     = 6;
  std::size_t seed     = 1;
  std::size_t max_prefix = 3;
};

KmsOptions kms_options(const Options& o) {
  KmsOptions k;
  k.family          = parse_family(o.family);
  k.force           = o.force;
  k.max_family_size = o.max_family;
  k.pinf_iterations = o.max_iter;
  return k;
}

Output header(const WordEngine& engine, const std::string& command) {
  Output o;
  o.json["command"] = command;
  o.json["monoid"]  = engine.presentation().name();
  return o;
}

// ---------------------------------------------------------------- commands

Output cmd_lcm(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  Word p = word_arg(P, opt.w1), q = word_arg(P, opt.w2);
  LcmResult r = lcm(engine, p, q, opt.max_steps);
  Output o = header(engine, "lcm");
  static const char* tags[] = {"lcm", "no_common_multiple", "inconclusive"};
  o.json["p"]      = format_word_or_e(P, engine.canonical(p));
  o.json["q"]      = format_word_or_e(P, engine.canonical(q));
  o.json["status"] = tags[static_cast<int>(r.tag)];
  if (r.found()) {
    o.json["lcm"]          = format_word_or_e(P, r.lcm);
    o.json["length"]       = r.lcm.size();
    o.json["p_complement"] = format_word_or_e(P, r.comp_left);
    o.json["q_complement"] = format_word_or_e(P, r.comp_right);
  }
  o.json["steps"] = r.steps_used;
  o.table = {{"p", "q", "status", "lcm", "length", "p_complement", "q_complement", "steps"},
             {o.json["p"], o.json["q"], o.json["status"], r.found() ? format_word_or_e(P, r.lcm) : "",
              r.found() ? std::to_string(r.lcm.size()) : "", r.found() ? format_word_or_e(P, r.comp_left) : "",
              r.found() ? format_word_or_e(P, r.comp_right) : "", std::to_string(r.steps_used)}};
  if (r.tag == LcmTag::Inconclusive) o.code = kInconclusive;
  return o;
}

Output cmd_equal(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  Word u = word_arg(P, opt.w1), v = word_arg(P, opt.w2);
  Output o = header(engine, "equal");
  bool eq = engine.equal(u, v);
  o.json["u"]           = format_word_or_e(P, u);
  o.json["v"]           = format_word_or_e(P, v);
  o.json["equal"]       = eq;
  o.json["canonical_u"] = format_word_or_e(P, engine.canonical(u));
  o.json["canonical_v"] = format_word_or_e(P, engine.canonical(v));
  o.code = eq ? kSuccess : kNegative;
  return o;
}

Output cmd_divides(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  Word p = word_arg(P, opt.w1), q = word_arg(P, opt.w2);
  Output o = header(engine, "divides");
  auto quotient = engine.left_quotient(p, q);
  o.json["p"]        = format_word_or_e(P, p);
  o.json["q"]        = format_word_or_e(P, q);
  o.json["divides"]  = quotient.has_value();
  o.json["quotient"] = quotient ? Json(format_word_or_e(P, *quotient)) : Json(nullptr);
  o.code = quotient ? kSuccess : kNegative;
  return o;
}

Output cmd_ball(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  Ball ball(engine, opt.radius);
  Output o = header(engine, "ball");
  o.json["radius"] = opt.radius;
  o.json["size"]   = ball.size();
  Json growth      = Json::array();
  o.table.push_back({"length", "count"});
  const auto& starts = ball.layer_starts();
  for (std::size_t len = 0; len <= opt.radius; ++len) {
    growth.push_back(starts[len + 1] - starts[len]);
    o.table.push_back({std::to_string(len), std::to_string(starts[len + 1] - starts[len])});
  }
  o.json["growth"] = growth;
  if (opt.elements) {
    o.json["elements"] = words_json(P, ball.elements());
    o.table            = {{"length", "element"}};
    for (const auto& w : ball.elements()) o.table.push_back({std::to_string(w.size()), format_word_or_e(P, w)});
  }
  return o;
}

Output cmd_cliques(const WordEngine& engine, const Options&) {
  const auto& P = engine.presentation();
  Output o = header(engine, "cliques");
  Classification c = classify(P);
  Json comps       = Json::array();
  for (const auto& comp : c.components) {
    Json gens = Json::array();
    for (Letter s : comp.generators) gens.push_back(P.generators()[s]);
    comps.push_back(Json{{"generators", gens}, {"type", comp.type}, {"spherical", comp.spherical}});
  }
  o.json["classification"] = Json{{"right_angled", c.right_angled}, {"finite_type", c.finite_type}, {"components", comps}};
  std::vector<Letter> atoms(engine.rank());
  for (std::size_t s = 0; s < atoms.size(); ++s) atoms[s] = static_cast<Letter>(s);
  Json list = Json::array();
  o.table.push_back({"members", "lcm", "length"});
  for (const auto& k : cliques_of(engine, atoms)) {
    list.push_back(Json{{"members", words_json(P, k.members)}, {"lcm", format_word_or_e(P, k.lcm)}, {"length", k.lcm_length}});
    o.table.push_back({set_text(P, k.members), format_word_or_e(P, k.lcm), std::to_string(k.lcm_length)});
  }
  o.json["count"]   = list.size();
  o.json["cliques"] = list;
  return o;
}

Output cmd_clique_poly(const WordEngine& engine, const Options&) {
  IntPolynomial h = clique_polynomial(engine);
  Output o = header(engine, "clique-poly");
  o.json["coefficients"] = coefficients_json(h);
  o.json["polynomial"]   = h.to_string();
  o.json["degree"]       = h.degree();
  o.table.push_back({"degree", "coefficient"});
  auto cs = h.coefficient_strings();
  for (std::size_t k = 0; k < cs.size(); ++k) o.table.push_back({std::to_string(k), cs[k]});
  return o;
}

Output cmd_pinf(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  PinfSet s = pinf(engine, opt.max_iter);
  Output o = header(engine, "pinf");
  o.json["size"]       = s.elements.size();
  o.json["saturated"]  = s.saturated;
  o.json["iterations"] = s.iterations_used;
  o.json["elements"]   = words_json(P, s.elements);
  o.table.push_back({"element", "length"});
  for (const auto& w : s.elements) o.table.push_back({format_word(P, w), std::to_string(w.size())});
  if (!s.saturated) o.code = kInconclusive;
  return o;
}

Output cmd_tree(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  LambdaList list = parse_list(P, opt.list);
  TreeReport r    = build_tree(engine, list, opt.max_depth, opt.max_nodes);
  Output o = header(engine, "tree");
  o.json["list"]           = format_list(P, canonical_list(engine, list));
  o.json["status"]         = r.finite() ? "finite" : "inconclusive";
  o.json["nodes"]          = r.node_count;
  o.json["leaves"]         = r.leaf_count;
  o.json["max_depth"]      = r.max_depth;
  o.json["witness_branch"] = r.finite() ? Json(nullptr) : Json(r.witness_branch);
  if (!r.finite()) o.code = kInconclusive;
  return o;
}

Output cmd_zpoly(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  LambdaList list = parse_list(P, opt.list);
  IntPolynomial z = z_poly(engine, list, opt.max_steps);
  Output o = header(engine, "zpoly");
  o.json["list"]         = format_list(P, canonical_list(engine, list));
  o.json["coefficients"] = coefficients_json(z);
  o.json["polynomial"]   = z.to_string();
  o.table.push_back({"degree", "coefficient"});
  auto cs = z.coefficient_strings();
  for (std::size_t k = 0; k < cs.size(); ++k) o.table.push_back({std::to_string(k), cs[k]});
  return o;
}

Output cmd_kms_temps(const WordEngine& engine, const Options& opt) {
  const auto& P          = engine.presentation();
  TemperatureSpace space = temperature_space(engine, kms_options(opt));
  Output o = header(engine, "kms temps");
  o.json["family"]         = to_string(space.family);
  o.json["family_members"] = words_json(P, space.family_members);
  Json polys               = Json::array();
  for (const auto& g : space.polynomials) {
    polys.push_back(Json{{"J", words_json(P, g.first_J)},
                         {"subsets", g.subsets},
                         {"coefficients", coefficients_json(g.g)},
                         {"polynomial", g.g.to_string()}});
  }
  o.json["polynomials"] = polys;
  o.json["combined"]    = Json{{"coefficients", coefficients_json(space.combined)}, {"polynomial", space.combined.to_string()}};
  Json roots            = Json::array();
  for (const auto& r : space.roots) {
    roots.push_back(Json{{"t", root_json(r.t)},
                         {"beta", r.beta},
                         {"included", r.included},
                         {"witness", r.witness ? words_json(P, space.polynomials[*r.witness].first_J) : Json(nullptr)}});
  }
  o.json["roots"] = roots;
  Json comps      = Json::array();
  for (const auto& c : space.components) {
    comps.push_back(Json{{"lower", endpoint_json(c.lower)}, {"upper", endpoint_json(c.upper)}, {"point", c.point}});
  }
  o.json["components"]             = comps;
  o.json["includes_plus_infinity"] = space.includes_plus_infinity;
  o.json["contains_zero"]          = space.contains_zero;
  o.json["summary"]                = components_text(space);

  if (opt.grid > 0) {
    Row head{"t", "t_approx"};
    for (const auto& g : space.polynomials) head.push_back("g" + set_text(P, g.first_J));
    o.table = {head};
    Json samples = Json::array();
    for (std::size_t k = 0; k <= opt.grid; ++k) {
      Rational t(BigInt(k), BigInt(opt.grid));
      Row row{to_string(t), csv_number(to_double(t))};
      Json values = Json::array();
      for (const auto& g : space.polynomials) {
        row.push_back(to_string(g.g.evaluate(t)));
        values.push_back(row.back());
      }
      samples.push_back(Json{{"t", to_string(t)}, {"values", values}});
      o.table.push_back(std::move(row));
    }
    o.json["samples"] = samples;
    return o;
  }

  o.table.push_back({"record", "index", "beta_lower", "beta_upper", "lower_closed", "upper_closed", "included",
                     "polynomial", "lo_num", "lo_den", "hi_num", "hi_den", "t_approx"});
  for (std::size_t i = 0; i < space.components.size(); ++i) {
    const auto& c = space.components[i];
    o.table.push_back({"component", std::to_string(i), c.lower.infinite ? "-inf" : csv_number(c.lower.beta),
                       c.upper.infinite ? "inf" : csv_number(c.upper.beta), c.lower.closed ? "1" : "0",
                       c.upper.closed ? "1" : "0", "1", "", "", "", "", "", ""});
  }
  for (std::size_t i = 0; i < space.roots.size(); ++i) {
    const auto& r = space.roots[i];
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    o.table.push_back({"root", std::to_string(i), csv_number(r.beta), csv_number(r.beta), "", "",
                       r.included ? "1" : "0", coefficients_text(r.t.polynomial), numerator(r.t.lo).str(),
                       denominator(r.t.lo).str(), numerator(r.t.hi).str(), denominator(r.t.hi).str(),
                       csv_number(r.t.approx)});
  }
  return o;
}

Output cmd_kms_eval(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  EvalPoint point;
  if (opt.beta && !opt.t.empty()) throw Error(ErrorKind::MalformedInput, "give either --t or --beta");
  if (opt.beta) {
    point = *opt.beta;
  } else if (!opt.t.empty()) {
    point = parse_rational(opt.t);
  } else {
    throw Error(ErrorKind::MalformedInput, "kms eval needs --t or --beta");
  }
  std::optional<std::vector<std::vector<Word>>> Js;
  if (!opt.Js.empty()) {
    Js.emplace();
    for (const auto& text : opt.Js) Js->push_back(set_arg(P, text));
  }
  PositivityReport r = evaluate_positivity(engine, point, kms_options(opt), Js);
  Output o = header(engine, "kms eval");
  if (opt.beta) {
    o.json["beta"] = *opt.beta;
  } else {
    o.json["t"] = to_string(std::get<Rational>(point));
  }
  Json entries = Json::array();
  o.table.push_back({"J", "exact", "approx", "nonnegative"});
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"J", words_json(P, e.J)},
                           {"exact", e.exact ? Json(to_string(*e.exact)) : Json(nullptr)},
                           {"approx", e.approx},
                           {"nonnegative", e.nonnegative}});
    o.table.push_back({set_text(P, e.J), e.exact ? to_string(*e.exact) : "", csv_number(e.approx),
                       e.nonnegative ? "1" : "0"});
  }
  o.json["entries"]         = entries;
  o.json["all_nonnegative"] = r.all_nonnegative;
  if (!r.all_nonnegative) o.code = kNegative;
  return o;
}

Output cmd_kms_critical(const WordEngine& engine, const Options&) {
  CriticalBeta c = critical_beta(engine);
  Output o = header(engine, "kms critical");
  o.json["beta"]         = c.beta;
  o.json["t"]            = root_json(c.t);
  o.json["t_description"] = c.t.description();
  return o;
}

Output cmd_kms_gaps(const WordEngine& engine, const Options& opt) {
  const auto& P          = engine.presentation();
  TemperatureSpace space = temperature_space(engine, kms_options(opt));
  GapReport report       = detect_gap(space);
  Output o = header(engine, "kms gaps");
  o.json["family"]  = to_string(space.family);
  o.json["space"]   = components_text(space);
  o.json["has_gap"] = report.has_gap;
  Json gaps         = Json::array();
  o.table.push_back({"gap", "beta_lower", "beta_upper", "J", "sample_t", "value", "value_approx"});
  for (std::size_t i = 0; i < report.gaps.size(); ++i) {
    const auto& g = report.gaps[i];
    Json ws       = Json::array();
    for (const auto& w : g.witnesses) {
      ws.push_back(Json{{"J", words_json(P, w.J)},
                        {"sample_t", to_string(w.sample_t)},
                        {"value", to_string(w.value)},
                        {"value_approx", to_double(w.value)}});
      o.table.push_back({std::to_string(i), endpoint_text(g.lower, false), endpoint_text(g.upper, true),
                         set_text(P, w.J), to_string(w.sample_t), to_string(w.value), csv_number(to_double(w.value))});
    }
    gaps.push_back(Json{{"lower", endpoint_json(g.lower)}, {"upper", endpoint_json(g.upper)}, {"witnesses", ws}});
  }
  o.json["gaps"] = gaps;
  return o;
}

Output cmd_sets_rewrite(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  Cell input{word_arg(P, opt.prefix), set_arg(P, opt.K)};
  RewriteTarget target = parse_target(opt.target);
  std::vector<Word> pinf_set;
  if (target == RewriteTarget::Pinf) {
    PinfSet s = pinf(engine, opt.max_iter);
    if (!s.saturated) throw Error(ErrorKind::UnsaturatedPinf, "P_inf did not saturate");
    pinf_set = s.elements;
  }
  RewriteOptions ro;
  ro.depth_cap = opt.max_depth;
  ro.node_cap  = opt.max_nodes;
  ro.step_cap  = opt.max_steps;
  RewriteResult r = rewrite_blockers(engine, target, input, pinf_set, ro);
  Output o = header(engine, "sets rewrite");
  o.json["input"]      = cell_json(P, normalize(engine, input));
  o.json["target"]     = to_string(target);
  o.json["conclusive"] = r.conclusive;
  o.json["nodes"]      = r.nodes;
  o.json["max_depth"]  = r.max_depth;
  o.json["cells"]      = r.conclusive ? set_json(P, r.cells) : Json(nullptr);
  o.table.push_back({"prefix", "blockers"});
  for (const auto& c : r.cells) o.table.push_back({format_word_or_e(P, c.prefix), set_text(P, c.blockers)});
  if (!r.conclusive) {
    o.code = kInconclusive;
    return o;
  }
  if (opt.verify_radius > 0) {
    VerifyReport v = verify_equal(engine, SymbolicSet{input}, r.cells, opt.verify_radius);
    o.json["verification"] = Json{{"radius", opt.verify_radius},
                                  {"checked", v.checked},
                                  {"ok", v.ok()},
                                  {"reason", v.ok() ? Json(nullptr) : Json(v.reason)},
                                  {"counterexample", v.counterexample ? Json(format_word_or_e(P, *v.counterexample))
                                                                      : Json(nullptr)}};
    if (!v.ok()) o.code = kNegative;
  }
  return o;
}

Output cmd_sets_check(const WordEngine& engine, const Options& opt) {
  const auto& P = engine.presentation();
  std::mt19937_64 rng(opt.seed);
  RewriteOptions ro;
  ro.depth_cap = opt.max_depth;
  ro.node_cap  = std::min(opt.max_nodes, RewriteOptions{}.node_cap);
  ro.step_cap  = opt.max_steps;
  ClosureReport r = algebra_closure_check(engine, opt.samples, opt.ball, rng, opt.max_prefix, ro);
  Output o = header(engine, "sets check-algebra");
  o.json["samples"]         = r.samples.size();
  o.json["ball"]            = opt.ball;
  o.json["seed"]            = opt.seed;
  o.json["successes"]       = r.successes;
  o.json["inconclusive"]    = r.inconclusive;
  o.json["counterexamples"] = r.counterexamples;
  static const char* outcomes[] = {"success", "inconclusive", "counterexample"};
  Json list = Json::array();
  o.table.push_back({"s", "target", "intersection", "cells", "outcome", "counterexample"});
  for (const auto& s : r.samples) {
    Json j{{"s", P.generators()[s.s]},
           {"target", format_cell(P, s.target)},
           {"intersection", s.empty ? Json(nullptr) : Json(format_cell(P, s.intersection))},
           {"cells", set_json(P, s.rewritten)},
           {"outcome", outcomes[static_cast<int>(s.outcome)]}};
    if (s.counterexample) j["counterexample"] = format_word_or_e(P, *s.counterexample);
    list.push_back(j);
    o.table.push_back({P.generators()[s.s], format_cell(P, s.target), s.empty ? "" : format_cell(P, s.intersection),
                       std::to_string(s.rewritten.size()), outcomes[static_cast<int>(s.outcome)],
                       s.counterexample ? format_word_or_e(P, *s.counterexample) : ""});
  }
  o.json["details"] = list;
  if (r.counterexamples > 0) {
    o.code = kNegative;
  } else if (r.inconclusive > 0) {
    o.code = kInconclusive;
  }
  return o;
}

Json checks_json(const std::vector<SuiteCheck>& checks, std::vector<Row>& table, const std::string& monoid,
                 bool& passed) {
  Json a = Json::array();
  for (const auto& c : checks) {
    a.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"detail", c.detail}});
    table.push_back({monoid, c.name, c.passed ? "1" : "0", std::to_string(c.checked), c.detail});
    passed = passed && c.passed;
  }
  return a;
}

Output cmd_verify(const WordEngine& engine, const Options& opt) {
  Output o = header(engine, "verify");
  bool passed = true;
  o.table.push_back({"monoid", "check", "passed", "checked", "detail"});
  o.json["radius"] = opt.radius;
  o.json["checks"] = checks_json(oracle_suite(engine, opt.radius), o.table, engine.presentation().name(), passed);
  o.json["passed"] = passed;
  if (!passed) o.code = kNegative;
  return o;
}

Output cmd_selftest() {
  Output o;
  o.json["command"] = "selftest";
  o.table.push_back({"monoid", "check", "passed", "checked", "detail"});
  bool passed = true;
  auto known  = [&](const std::string& monoid, const std::string& name, bool ok, const std::string& detail) {
    o.table.push_back({monoid, name, ok ? "1" : "0", "1", detail});
    passed = passed && ok;
    return Json{{"monoid", monoid}, {"name", name}, {"passed", ok}, {"checked", 1}, {"detail", detail}};
  };
  Json checks = Json::array();

  WordEngine b3(MonoidPresentation::from_rows("b3", {{1, 3}, {3, 1}}));
  IntPolynomial h = clique_polynomial(b3);
  checks.push_back(known("b3", "clique_polynomial", h == IntPolynomial({1, -2, 0, 1}), h.to_string()));
  PinfSet s = pinf(b3);
  checks.push_back(known("b3", "pinf", s.saturated && s.elements.size() == 4,
                         std::to_string(s.elements.size()) + " elements"));
  CriticalBeta c = critical_beta(b3);
  checks.push_back(known("b3", "critical_beta", std::abs(c.beta + std::log((std::sqrt(5.0) - 1) / 2)) < 1e-9,
                         display_decimal(c.beta)));

  const std::vector<std::pair<std::string, std::vector<std::vector<unsigned>>>> suites = {
      {"b3", {{1, 3}, {3, 1}}}, {"i2_5", {{1, 5}, {5, 1}}}, {"free2", {{1, 0}, {0, 1}}}};
  for (const auto& [name, rows] : suites) {
    WordEngine engine(MonoidPresentation::from_rows(name, rows));
    for (auto& check : oracle_suite(engine, 5)) {
      o.table.push_back({name, check.name, check.passed ? "1" : "0", std::to_string(check.checked), check.detail});
      passed = passed && check.passed;
      checks.push_back(Json{{"monoid", name},
                            {"name", check.name},
                            {"passed", check.passed},
                            {"checked", check.checked},
                            {"detail", check.detail}});
    }
  }
  o.json["checks"] = checks;
  o.json["passed"] = passed;
  if (!passed) o.code = kNegative;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin monoids: word problem, LCMs, cliques and KMS inverse temperatures", "artinkms"};
  Options opt;
  app.add_option("-m,--monoid", opt.monoid, "Monoid definition file (JSON)");
  app.add_option("-f,--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.require_subcommand(1);

  auto steps = [&](CLI::App* sub) { sub->add_option("--max-steps", opt.max_steps, "Reversing step cap"); };
  auto two_words = [&](CLI::App* sub) {
    sub->add_option("w1", opt.w1, "First word ('e' or '' for the identity)")->required();
    sub->add_option("w2", opt.w2, "Second word")->required();
  };

  auto* lcm_cmd = app.add_subcommand("lcm", "Right LCM by subword reversing");
  two_words(lcm_cmd);
  steps(lcm_cmd);
  auto* equal_cmd = app.add_subcommand("equal", "Decide equality of two words");
  two_words(equal_cmd);
  auto* divides_cmd = app.add_subcommand("divides", "Decide left divisibility w1 <= w2");
  two_words(divides_cmd);
  auto* ball_cmd = app.add_subcommand("ball", "Elements of length <= L");
  ball_cmd->add_option("L", opt.radius, "Radius")->required();
  ball_cmd->add_flag("--elements", opt.elements, "List the elements");
  auto* cliques_cmd = app.add_subcommand("cliques", "Cliques of generators and their LCMs");
  auto* poly_cmd    = app.add_subcommand("clique-poly", "Clique polynomial");
  auto* pinf_cmd    = app.add_subcommand("pinf", "The closure P_inf");
  pinf_cmd->add_option("--max-iter", opt.max_iter, "Closure round cap");
  auto* tree_cmd = app.add_subcommand("tree", "Grow the splitting tree of a list");
  tree_cmd->add_option("--list", opt.list, "Comma-separated entries, 'inf' allowed")->required();
  tree_cmd->add_option("--max-depth", opt.max_depth, "Depth cap");
  tree_cmd->add_option("--max-nodes", opt.max_nodes, "Node cap");
  auto* zpoly_cmd = app.add_subcommand("zpoly", "Z-polynomial of a list");
  zpoly_cmd->add_option("--list", opt.list, "Comma-separated entries, 'inf' allowed")->required();
  steps(zpoly_cmd);

  auto* kms = app.add_subcommand("kms", "KMS inverse temperatures");
  kms->require_subcommand(1);
  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "Governing family")->check(CLI::IsMember({"atoms", "pinf"}));
    sub->add_flag("--force", opt.force, "Use the atoms family without a reduction theorem");
    sub->add_option("--max-family", opt.max_family, "Refuse larger families");
    sub->add_option("--max-iter", opt.max_iter, "P_inf round cap");
  };
  auto* temps = kms->add_subcommand("temps", "The set of admissible beta");
  family(temps);
  temps->add_option("--sample-grid", opt.grid, "Tabulate every g_J at t = k/N, k = 0..N");
  auto* eval = kms->add_subcommand("eval", "g_J at one point");
  family(eval);
  eval->add_option("--t", opt.t, "Exact t = e^-beta, e.g. 2/3");
  eval->add_option("--beta", opt.beta, "Inverse temperature");
  eval->add_option("--J", opt.Js, "A set such as 's1,s2'; repeatable")->allow_extra_args(false);
  auto* critical = kms->add_subcommand("critical", "Critical inverse temperature");
  auto* gaps     = kms->add_subcommand("gaps", "Gaps of the temperature space");
  family(gaps);

  auto* sets = app.add_subcommand("sets", "Cells p Omega_K");
  sets->require_subcommand(1);
  auto* rewrite = sets->add_subcommand("rewrite", "Rewrite blockers into the target set");
  rewrite->add_option("--K", opt.K, "Blockers, e.g. 's1.s2,s2'")->required();
  rewrite->add_option("--prefix", opt.prefix, "Prefix p");
  rewrite->add_option("--target", opt.target, "Target set")->check(CLI::IsMember({"atoms", "pinf"}));
  rewrite->add_option("--verify", opt.verify_radius, "Check the result on the ball of this radius");
  rewrite->add_option("--max-depth", opt.max_depth, "Recursion depth cap");
  rewrite->add_option("--max-nodes", opt.max_nodes, "Recursion node cap");
  rewrite->add_option("--max-iter", opt.max_iter, "P_inf round cap");
  steps(rewrite);
  auto* check = sets->add_subcommand("check-algebra", "Sample closure of the atom-generated algebra");
  check->add_option("--samples", opt.samples, "Number of samples");
  check->add_option("--ball", opt.ball, "Verification radius");
  check->add_option("--seed", opt.seed, "Random seed");
  check->add_option("--max-prefix", opt.max_prefix, "Longest sampled prefix q");
  check->add_option("--max-depth", opt.max_depth, "Recursion depth cap");
  check->add_option("--max-nodes", opt.max_nodes, "Recursion node cap");
  steps(check);

  auto* verify = app.add_subcommand("verify", "Cross-check fast routines against the oracles");
  verify->add_option("--ball", opt.radius, "Radius")->required();
  auto* selftest = app.add_subcommand("selftest", "Built-in checks on small monoids");

  std::vector<const char*> argv{"artinkms"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    Output o;
    if (selftest->parsed()) {
      o = cmd_selftest();
    } else {
      if (opt.monoid.empty()) throw Error(ErrorKind::MalformedInput, "--monoid is required");
      WordEngine engine(load_presentation(opt.monoid));
      if (lcm_cmd->parsed()) o = cmd_lcm(engine, opt);
      else if (equal_cmd->parsed()) o = cmd_equal(engine, opt);
      else if (divides_cmd->parsed()) o = cmd_divides(engine, opt);
      else if (ball_cmd->parsed()) o = cmd_ball(engine, opt);
      else if (cliques_cmd->parsed()) o = cmd_cliques(engine, opt);
      else if (poly_cmd->parsed()) o = cmd_clique_poly(engine, opt);
      else if (pinf_cmd->parsed()) o = cmd_pinf(engine, opt);
      else if (tree_cmd->parsed()) o = cmd_tree(engine, opt);
      else if (zpoly_cmd->parsed()) o = cmd_zpoly(engine, opt);
      else if (temps->parsed()) o = cmd_kms_temps(engine, opt);
      else if (eval->parsed()) o = cmd_kms_eval(engine, opt);
      else if (critical->parsed()) o = cmd_kms_critical(engine, opt);
      else if (gaps->parsed()) o = cmd_kms_gaps(engine, opt);
      else if (rewrite->parsed()) o = cmd_sets_rewrite(engine, opt);
      else if (check->parsed()) o = cmd_sets_check(engine, opt);
      else if (verify->parsed()) o = cmd_verify(engine, opt);
    }
    render(o, opt.format, out);
    return o.code;
  } catch (const Error& e) {
    if (opt.format == "json") {
      out << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return code_for(e.kind());
  }
}

}  // namespace artinkms::cli
