#include "pizza/io/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pizza/error.hpp"

namespace pizza {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational rational_at(const Json& j, const char* key) { return exact::parse_rational(text(j, key)); }

Exponent exponent_of(const Json& v, const std::string& where) {
  if (!v.is_string()) bad(where + " must be a string");
  return Exponent::parse(v.get<std::string>());
}

std::string sign_text(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

int sign_of(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  if (s == "0") return 0;
  bad("sign must be \"+\", \"-\" or \"0\", got '" + s + "'");
}

Json number(double d) {
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  if (std::isnan(d)) return nullptr;
  return d;
}

}  // namespace

Json pizza_to_json(const AbstractPizza& h) {
  Json slices = Json::array();
  for (const auto& s : h.slices) {
    Json mu = s.mu.is_linear() ? Json{{"m", exact::to_string(s.mu.m)}, {"c", exact::to_string(s.mu.c)}}
                               : Json{{"value", s.mu.value.str()}};
    slices.push_back({{"beta", s.beta.str()},
                      {"Q", {s.Q.a.str(), s.Q.b.str()}},
                      {"sign", sign_text(s.sign)},
                      {"mu", mu}});
  }
  return {{"slices", slices}};
}

AbstractPizza pizza_from_json(const Json& j) {
  const Json& arr = field(j, "slices");
  if (!arr.is_array()) bad("'slices' must be an array");
  AbstractPizza h;
  for (const auto& s : arr) {
    Slice sl;
    sl.beta = exponent_of(field(s, "beta"), "beta");
    const Json& q = field(s, "Q");
    if (!q.is_array() || q.size() != 2) bad("'Q' must be a pair");
    sl.Q = {exponent_of(q[0], "Q[0]"), exponent_of(q[1], "Q[1]")};
    sl.sign = sign_of(text(s, "sign"));
    const Json& mu = field(s, "mu");
    if (mu.is_object() && mu.contains("value"))
      sl.mu = AffineWidth::const_at_infinity(exponent_of(mu.at("value"), "mu.value"));
    else
      sl.mu = AffineWidth::linear(rational_at(mu, "m"), rational_at(mu, "c"));
    h.slices.push_back(sl);
  }
  return h;
}

Json arc_to_json(const Arc& a) {
  Json series = Json::array();
  for (const auto& t : a.eta.terms()) {
    if (!t.coeff.is_rational())
      throw Error(ErrorCode::InvalidArgument, "arc " + to_string(a) + " has an irrational coefficient");
    series.push_back({exact::to_string(t.coeff.rational_value()), exact::to_string(t.exp)});
  }
  return {{"dir", frame_dir(a.frame)}, {"series", series}};
}

Arc arc_from_json(const Json& j) {
  Arc a;
  std::string dir = text(j, "dir");
  if (dir != "+x" && dir != "-x" && dir != "+y" && dir != "-y") bad("unknown direction '" + dir + "'");
  a.frame = parse_frame_dir(dir);
  const Json& series = field(j, "series");
  if (!series.is_array()) bad("'series' must be an array");
  std::vector<exact::PTerm> terms;
  for (const auto& t : series) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
      bad("series terms must be [coefficient, exponent] string pairs");
    terms.push_back({AlgebraicReal(exact::parse_rational(t[0].get<std::string>())),
                     exact::parse_rational(t[1].get<std::string>())});
  }
  a.eta = PuiseuxPoly::from_terms(std::move(terms));
  validate_arc(a);
  return a;
}

Json germ_to_json(const GermSpec& g) {
  Arc axis{Frame::S1, PuiseuxPoly()};
  if (g.pieces.size() == 1 && g.pieces[0].from == axis && g.pieces[0].to == axis)
    return {{"kind", "polynomial"}, {"expr", print_expression(g.pieces[0].expr)}};
  Json pieces = Json::array();
  for (const auto& p : g.pieces)
    pieces.push_back({{"from", arc_to_json(p.from)}, {"to", arc_to_json(p.to)}, {"expr", print_expression(p.expr)}});
  return {{"kind", "piecewise"}, {"pieces", pieces}};
}

GermSpec germ_from_json(const Json& j) {
  std::string kind = text(j, "kind");
  if (kind == "polynomial") return polynomial_germ(parse_expression(text(j, "expr")));
  if (kind != "piecewise") bad("germ kind must be \"polynomial\" or \"piecewise\", got '" + kind + "'");
  const Json& arr = field(j, "pieces");
  if (!arr.is_array()) bad("'pieces' must be an array");
  GermSpec g;
  for (const auto& p : arr)
    g.pieces.push_back({arc_from_json(field(p, "from")), arc_from_json(field(p, "to")), parse_expression(text(p, "expr"))});
  return g;
}

Json realized_to_json(const RealizedGerm& r) {
  Json out = germ_to_json(r.germ);
  Json prov = Json::array();
  for (const auto& p : r.provenance) {
    const SliceFormula& f = p.formula;
    prov.push_back({{"slice", p.slice},
                    {"frame", frame_dir(p.frame)},
                    {"kind", f.kind},
                    {"lambda", exact::to_string(f.lambda)},
                    {"r", exact::to_string(f.r)},
                    {"beta_tilde", f.beta_tilde.str()},
                    {"deep_at_lower", f.deep_at_lower},
                    {"glued", p.glued},
                    {"formula", f.expr ? print_expression(f.expr) : ""}});
  }
  out["provenance"] = prov;
  return out;
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back({{"index", x.index}, {"axiom", x.axiom}, {"detail", x.detail}});
  return {{"valid", v.empty()}, {"violations", arr}};
}

Json witness_to_json(const std::optional<EquivalenceWitness>& w) {
  Json out{{"equivalent", w.has_value()}};
  if (w) out["witness"] = {{"rotation", w->rotation}, {"reverse", w->reverse}, {"sign_flip", w->sign_flip}};
  return out;
}

Json fit_to_json(const FitReport& f) {
  return {{"slope", number(f.slope)},   {"intercept", number(f.intercept)}, {"max_residual", number(f.max_residual)},
          {"t_min", number(f.t_min)},   {"t_max", number(f.t_max)},         {"count", f.count},
          {"half_gap", number(f.half_gap)}, {"converged", f.converged},     {"sign", f.sign}};
}

Json crosscheck_to_json(const CrosscheckReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items)
    items.push_back({{"slice", it.slice},
                     {"check", it.check},
                     {"arc", it.arc},
                     {"expected", number(it.expected)},
                     {"measured", number(it.measured)},
                     {"deviation", number(it.deviation)},
                     {"residual", number(it.residual)},
                     {"pass", it.pass},
                     {"skipped", it.skipped}});
  return {{"pass", r.pass()},
          {"aligned", r.aligned},
          {"reversed", r.reversed},
          {"first_zone", r.first_zone},
          {"items", items}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::IOError, "cannot write '" + path + "'");
}

}  // namespace pizza
