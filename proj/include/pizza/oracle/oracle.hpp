#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pizza/core/pizza.hpp"
#include "pizza/germ/germ_spec.hpp"

namespace pizza {

struct OracleConfig {
  double t0 = 1e-2;
  double ratio = 0.8;
  int count = 24;
  double floor = 1e-300;     // |f| below this counts as zero
  double tolerance = 0.05;   // allowed |slope − expected|
  double residual_gate = 0.1;
  double max_ord = 12;       // expected orders at or above this are not compared
  int refinements = 6;       // times the samples may move toward 0
  double deepen = 1e-6;      // factor applied to t0 per move
  int precision_bits = 512;  // floating working precision
  int max_precision_bits = 4096;  // limit when a sample range loses digits
};

// Least-squares line through (log t, log |f(γ(t))|).
struct FitReport {
  double slope = 0, intercept = 0, max_residual = 0;
  double t_min = 0, t_max = 0;
  int count = 0;  // samples used in the fit
  double half_gap = 0;  // |slope of the first half − slope of the second half|
  bool converged = false;  // residual below the gate and half_gap below tolerance/2
  int sign = 0;            // sign of f at the smallest t that does not vanish
};

// Floating evaluation of an expression; unit(e) evaluates as e.
double eval_expr(const Expr& e, double x, double y);

// Value of the germ at a point, using the first piece whose sector holds it. Throws OutsideAllSectors.
double eval_germ(const GermSpec& g, double x, double y);

// Samples t_j = t0·ratio^j of f along γ (the piece is located exactly). Samples that vanish up to
// rounding are dropped; throws AllSamplesZero when all do. The range then moves toward 0, up to
// cfg.refinements times, while every sample keeps at least six digits above its rounding error.
FitReport estimate_ord(const GermSpec& g, const Arc& gamma, const OracleConfig& cfg = {});

// One numeric check of a claimed pizza. `expected` and `measured` use +inf for order ∞.
struct CrosscheckItem {
  std::size_t slice = 0;  // index in the claimed pizza
  std::string check;      // "alignment", "ord-start", "ord-end", "ord-probe", "sign"
  std::string arc;
  double expected = 0, measured = 0, deviation = 0, residual = 0;
  bool pass = false;
  bool skipped = false;  // expected order beyond max_ord; counts as passing
};

struct CrosscheckReport {
  bool aligned = false;
  bool reversed = false;      // the claimed pizza was read clockwise
  std::size_t first_zone = 0; // zone where slice 0 starts
  std::vector<CrosscheckItem> items;

  bool pass() const;
};

// Aligns the claimed pizza with the zones of f by segment endpoints, then checks boundary orders
// against Q, three interior probe orders against μ and the sign on the middle probe.
CrosscheckReport crosscheck_pizza(const GermSpec& g, const AbstractPizza& h, const OracleConfig& cfg = {});

}  // namespace pizza
