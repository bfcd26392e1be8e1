// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pizza/cli/cli.hpp"
#include "pizza/error.hpp"
#include "pizza/germ/builder.hpp"
#include "pizza/io/json_io.hpp"
#include "pizza/oracle/oracle.hpp"
#include "pizza/realize/realization.hpp"

using namespace pizza;
using exact::make_rational;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fixture(const std::string& name) { return std::string(PIZZA_FIXTURE_DIR) + "/" + name; }

AbstractPizza golden_pizza(const std::string& name) { return pizza_from_json(read_json_file(fixture(name + ".pizza.json"))); }
GermSpec golden_germ(const std::string& name) { return germ_from_json(read_json_file(fixture(name + ".germ.json"))); }

// compute --minimal through the command line front end.
AbstractPizza cli_minimal(const std::string& germ) {
  std::ostringstream out, err;
  int code = run_command({"compute", "--minimal", fixture(germ + ".germ.json")}, out, err);
  if (code != 0) throw Error(ErrorCode::InvalidArgument, "compute failed: " + err.str());
  return pizza_from_json(Json::parse(out.str()));
}

bool is_half_q(const AffineWidth& w) { return w.is_linear() && w.m == make_rational(1, 2) && w.c == 0; }

std::vector<std::pair<std::string, GermSpec>> golden_germs() {
  std::vector<std::pair<std::string, GermSpec>> out;
  for (const char* n : {"example1", "example2", "example3", "example4", "x4y2", "zero"})
    out.push_back({n, golden_germ(n)});
  out.push_back({"cusp", polynomial_germ(parse_expression("y^2-x^3"))});
  return out;
}

PuiseuxPoly mono(const Rational& c, const Rational& e) { return PuiseuxPoly::monomial(AlgebraicReal(c), e); }

// Arcs strictly inside a zone: the boundary closer to the center plus u^κ toward the other one,
// with κ = β + j/2 above the tangency order β of the two boundaries.
std::vector<Arc> zone_probes(const Zone& z, int first, int last, const Rational& reach) {
  bool from_lower = z.lower.contact >= z.upper.contact;
  const ZoneBoundary& base = from_lower ? z.lower : z.upper;
  PuiseuxPoly eta = base.branch ? base.branch->expansion(reach) : base.eta;
  std::vector<Arc> out;
  for (int j = first; j <= last; ++j) {
    if (j == 0) {
      out.push_back(Arc{z.frame, eta});
      continue;
    }
    Rational kappa = z.beta + make_rational(j, 2);
    out.push_back(Arc{z.frame, eta + mono(Rational(from_lower ? 1 : -1), kappa)});
  }
  return out;
}

Outcome criterion1() {
  AbstractPizza h = cli_minimal("example1");
  if (h.size() != 2) return {false, "got " + std::to_string(h.size()) + " slices: " + to_string(h)};
  const Slice &a = h.slices[0], &b = h.slices[1];
  bool ok = is_half_q(a.mu) && is_half_q(b.mu) && b.Q == a.Q.reversed() && !a.Q.is_point() &&
            a.beta == Exponent(1) && b.beta == Exponent(1) && equivalent(h, golden_pizza("example1")).has_value();
  return {ok, to_string(h)};
}

Outcome criterion2() {
  AbstractPizza h = cli_minimal("example2");
  bool ok = h.size() == 3 && equivalent(h, golden_pizza("example2")).has_value();
  return {ok, to_string(h)};
}

Outcome criterion3() {
  AbstractPizza h = cli_minimal("example3"), want = golden_pizza("example3");
  bool ok = h.size() == 6 && equivalent(h, want).has_value() && canonical_form(h) == canonical_form(want);
  return {ok, to_string(h)};
}

Outcome criterion4() {
  std::ostringstream out, err;
  int code = run_command({"equiv-germ", fixture("example1.germ.json"), fixture("example4.germ.json")}, out, err);
  AbstractPizza g = pizza_from_json(Json::parse(out.str())["minimal_second"]);
  bool widths = g.size() == 2;
  for (const auto& s : g.slices) widths = widths && s.mu.is_linear() && s.mu.m == make_rational(-1, 2) && s.mu.c == 3;
  return {code == 3 && widths, "exit " + std::to_string(code) + ", minimal pizza of g " + to_string(g)};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  int instances = 0, with_moves = 0, failures = 0;
  for (std::uint64_t seed = 1; instances < 500; ++seed) {
    AbstractPizza h = random_refinement(generate_random_pizza(seed, 1 + seed % 5), seed + 7);
    if (h.size() > 10) continue;
    ++instances;
    with_moves += !find_simplifications(h).empty();
    std::string first;
    for (int t = 0; t < 10; ++t) {
      AbstractPizza cur = h;
      for (auto ops = find_simplifications(cur); !ops.empty(); ops = find_simplifications(cur))
        cur = apply_simplification(cur, ops[rng() % ops.size()]);
      std::string c = canonical_form(cur);
      if (t == 0) first = c;
      if (c != first) ++failures;
    }
  }
  return {failures == 0, std::to_string(instances) + " pizzas (" + std::to_string(with_moves) +
                             " with simplifications) x 10 orders, " + std::to_string(failures) + " disagreements"};
}

Outcome criterion6() {
  int failures = 0;
  std::string first_failure;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AbstractPizza h = generate_random_pizza(seed, 1 + seed % 8);
    bool ok = false;
    try {
      ok = equivalent(minimal_pizza(compute_pizza(realize(h).germ)), minimal_pizza(h)).has_value();
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = "; seed " + std::to_string(seed) + ": " + e.what();
    }
    if (!ok) ++failures;
    if (!ok && first_failure.empty()) first_failure = "; seed " + std::to_string(seed) + ": " + to_string(h);
  }
  return {failures == 0, "100 pizzas, " + std::to_string(failures) + " failures" + first_failure};
}

Outcome criterion7() {
  int compared = 0, infinite = 0, skipped = 0, failures = 0;
  double worst = 0;
  std::string first_failure;
  for (const auto& [name, g] : golden_germs()) {
    for (const auto& az : assemble_zones(g)) {
      for (const Arc& probe : zone_probes(az.zone, 0, 4, Rational(24))) {
        Exponent exact = ord_along_arc(g, probe);
        std::string got;
        bool ok = true;
        if (exact.is_infinite()) {
          ++infinite;
          try {
            FitReport f = estimate_ord(g, probe);
            ok = false;
            got = "slope " + std::to_string(f.slope);
          } catch (const Error& e) {
            ok = e.code() == ErrorCode::AllSamplesZero;
            got = e.what();
          }
        } else if (exact >= Exponent(12)) {
          ++skipped;
          continue;
        } else {
          ++compared;
          FitReport f = estimate_ord(g, probe);
          double dev = std::fabs(f.slope - exact::to_double(exact.value()));
          worst = std::max(worst, dev);
          ok = dev < 0.05;
          got = "slope " + std::to_string(f.slope);
        }
        if (!ok && ++failures == 1)
          first_failure = "; " + name + " along " + to_string(probe) + ": exact " + exact.str() + ", " + got;
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return {failures == 0, std::to_string(compared) + " finite orders (max deviation " + buf + "), " +
                             std::to_string(infinite) + " infinite, " + std::to_string(skipped) + " >= 12 skipped, " +
                             std::to_string(failures) + " failures" + first_failure};
}

Arc random_arc(std::mt19937_64& rng) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  Frame f = frame_from_index(static_cast<int>(pick(0, 1)));
  // A shared leading part makes high contact orders likely.
  std::vector<exact::PTerm> terms{{AlgebraicReal(make_rational(pick(-1, 1), 2)), Rational(1)},
                                  {AlgebraicReal(1), make_rational(3, 2)}};
  for (long i = pick(0, 3); i > 0; --i) {
    long c = pick(-2, 2);
    if (c != 0) terms.push_back({AlgebraicReal(c), make_rational(pick(4, 12), pick(2, 3))});
  }
  return Arc{f, PuiseuxPoly::from_terms(terms)};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::ostringstream detail;
  bool pass = true;

  int ultra_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    Arc a = random_arc(rng), b = random_arc(rng), c = random_arc(rng);
    Exponent ab = tord(a, b), bc = tord(b, c), ac = tord(a, c);
    if (ac < std::min(ab, bc) || (ab != bc && ac != std::min(ab, bc))) ++ultra_fail;
  }
  detail << "ultrametric 1000 triples/" << ultra_fail << " fail";
  pass = pass && ultra_fail == 0;

  const char* pool[] = {"y^2-x^3", "x^4+y^2", "y-x^2", "x^2+y^2", "y^3+x^5", "x*y+x^3", "(y-x^2)^2-x^5", "x-y"};
  int mult_fail = 0;
  for (int i = 0; i < 500; ++i) {
    std::string f = pool[pick(0, 7)], g = pool[pick(0, 7)];
    Arc gamma{Frame::S1, mono(make_rational(pick(-3, 3), 4), Rational(1)) + mono(Rational(pick(1, 3)), make_rational(pick(5, 12), 4))};
    Exponent of = ord_along_arc(polynomial_germ(parse_expression(f)), gamma);
    Exponent og = ord_along_arc(polynomial_germ(parse_expression(g)), gamma);
    Exponent fg = ord_along_arc(polynomial_germ(parse_expression("(" + f + ")*(" + g + ")")), gamma);
    if (fg != of + og) ++mult_fail;
  }
  detail << "; multiplicativity 500 pairs/" << mult_fail << " fail";
  pass = pass && mult_fail == 0;

  int zones = 0, law_checks = 0, law_fail = 0;
  for (const auto& [name, g] : golden_germs())
    for (const auto& az : assemble_zones(g)) {
      if (az.zero_piece) continue;
      ++zones;
      const Zone& z = az.zone;
      PuiseuxPoly center = z.center_branch ? z.center_branch->expansion(Rational(40)) : z.center;
      for (const Arc& probe : zone_probes(z, 1, 5, Rational(40))) {
        ++law_checks;
        if (ord_along_arc(g, probe) != z.ord_at(tord(probe, Arc{z.frame, center}))) ++law_fail;
      }
    }
  detail << "; zone law " << zones << " zones x 5 probes/" << law_fail << " fail";
  pass = pass && law_fail == 0 && law_checks == 5 * zones;

  // One mutation per axiom, each applied to random valid pizzas.
  using Mutation = std::function<bool(AbstractPizza&, std::size_t)>;
  auto finite_joint = [](const AbstractPizza& h) {
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h.slices[i].Q.b.is_finite() && h.size() > 1) return static_cast<long>(i);
    return -1L;
  };
  std::vector<std::pair<std::string, Mutation>> mutations{
      {"nonempty", [](AbstractPizza& h, std::size_t) { return h.slices.clear(), true; }},
      {"beta-range", [](AbstractPizza& h, std::size_t i) { return h.slices[i].beta = Exponent(make_rational(1, 2)), true; }},
      {"segment-positive", [](AbstractPizza& h, std::size_t i) { return h.slices[i].Q.a = Exponent(0), true; }},
      {"width-kind",
       [](AbstractPizza& h, std::size_t i) {
         if (h.slices[i].Q.a.is_infinite() && h.slices[i].Q.b.is_infinite()) return false;
         h.slices[i].mu = AffineWidth::const_at_infinity(h.slices[i].beta);
         return true;
       }},
      {"width-domain",
       [](AbstractPizza& h, std::size_t i) { return h.slices[i].mu = AffineWidth::linear(Rational(-1), Rational(0)), true; }},
      {"min-equals-beta", [](AbstractPizza& h, std::size_t i) { return h.slices[i].beta = h.slices[i].beta + Exponent(1), true; }},
      {"sign-range", [](AbstractPizza& h, std::size_t i) { return h.slices[i].sign = 2, true; }},
      {"zero-sign",
       [](AbstractPizza& h, std::size_t i) {
         if (h.slices[i].Q.a.is_infinite() && h.slices[i].Q.b.is_infinite()) return false;
         h.slices[i].sign = 0;
         return true;
       }},
      {"continuity",
       [](AbstractPizza& h, std::size_t i) {
         Exponent& b = h.slices[i].Q.b;
         b = b.is_infinite() ? Exponent(make_rational(97, 3)) : b + Exponent(make_rational(1, 7));
         return true;
       }},
      {"sign-continuity",
       [&](AbstractPizza& h, std::size_t) {
         long j = finite_joint(h);
         if (j < 0) return false;
         Slice& next = h.slices[(static_cast<std::size_t>(j) + 1) % h.size()];
         next.sign = -h.slices[static_cast<std::size_t>(j)].sign;
         return true;
       }},
      {"beta-one",
       [](AbstractPizza& h, std::size_t) {
         for (auto& s : h.slices) s.beta = s.beta + Exponent(1);
         return true;
       }},
  };
  int axiom_fail = 0;
  detail << "; axiom mutations";
  for (const auto& [axiom, mutate] : mutations) {
    int applied = 0, detected = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      AbstractPizza h = generate_random_pizza(seed, 1 + seed % 8);
      if (!mutate(h, static_cast<std::size_t>(seed) % h.size())) continue;
      ++applied;
      for (const auto& v : validate_pizza(h))
        if (v.axiom == axiom) {
          ++detected;
          break;
        }
    }
    if (applied == 0 || detected != applied) ++axiom_fail;
    detail << " " << axiom << " " << detected << "/" << applied;
  }
  pass = pass && axiom_fail == 0;
  return {pass, detail.str()};
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  auto entry = [&] { return make_rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1); };
  int checks = 0, failures = 0;
  std::string first_failure;
  for (const auto& [name, g] : golden_germs())
    for (int i = 0; i < 10; ++i) {
      Rational a, b, c, d;
      do {
        a = entry(), b = entry(), c = entry(), d = entry();
      } while (a * d - b * c == 0);
      ++checks;
      if (!decide_contact_equivalence(g, compose_linear(g, a, b, c, d)).equivalent && ++failures == 1)
        first_failure = "; " + name + " with L = [[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
                        d.get_str() + "]]";
    }
  return {failures == 0, std::to_string(checks) + " germ/map pairs, " + std::to_string(failures) + " not equivalent" +
                             first_failure};
}

Outcome criterion10() {
  AbstractPizza h = cli_minimal("x4y2");
  bool ok = h.size() == 4;
  for (const auto& s : h.slices) ok = ok && is_half_q(s.mu) && s.beta == Exponent(1) && s.sign == 1;
  // Hand-derived in the README: Q runs [4,2], [2,4], [4,2], [2,4] counterclockwise from +x.
  ok = ok && equivalent(h, golden_pizza("x4y2")).has_value();
  return {ok, to_string(h)};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Example 1 golden pizza", criterion1},
      {"Example 2 golden pizza", criterion2},
      {"Example 3 golden pizza", criterion3},
      {"Example 4 is not equivalent to Example 1", criterion4},
      {"confluence of simplification orders", criterion5},
      {"realization round trip", criterion6},
      {"symbolic and numeric orders agree", criterion7},
      {"property suites", criterion8},
      {"invariance under linear maps", criterion9},
      {"x^4+y^2 hand-derived pizza", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    char time[32];
    std::snprintf(time, sizeof time, "%.1fs", secs);
    std::cout << "criterion " << i + 1 << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << " ("
              << time << "): " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
