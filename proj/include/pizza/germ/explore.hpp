#pragma once

#include <memory>
#include <vector>

#include "pizza/germ/frame_form.hpp"

namespace pizza {

// Real root branch v = θ(u) of one factor, known through a truncation and the factor
// shifted to it: θ = truncation + z where z is the unique small root of `shifted`.
struct Branch {
  PuiseuxPoly truncation;
  Rational alpha;     // exponent of the last truncation term
  GenPoly2 shifted;   // factor(u, truncation + z)
  int side = 0;       // sign of θ − truncation's parent, used for ordering only

  // θ up to exponent `max_exp` (exact terms from Newton steps).
  PuiseuxPoly expansion(const Rational& max_exp) const;
};

struct ZoneBoundary {
  PuiseuxPoly eta;                      // the arc, or the branch truncation
  std::shared_ptr<const Branch> branch; // set for non-polynomial branch arcs
  int forced = -1;                      // id of the forced arc it coincides with
  Exponent contact;                     // tord with the zone center; ∞ if it is the center
};

// Region between two arcs of a frame where ord_γ(f) = lambda·tord(γ, center) + r.
struct Zone {
  Frame frame = Frame::S1;
  PuiseuxPoly center;
  std::shared_ptr<const Branch> center_branch;
  int side = 0;  // +1 above the center, -1 below
  ZoneBoundary lower, upper;  // in increasing v
  Rational beta;
  Rational lambda, r;
  int sign = 1;
  PuiseuxPoly sample;  // an arc strictly inside
  // Problems that only matter if the zone is kept.
  bool denominator_vanishes = false;
  bool positivity_unverified = false;

  Exponent ord_at(const Exponent& contact) const;
  Exponent ord_lower() const { return ord_at(lower.contact); }
  Exponent ord_upper() const { return ord_at(upper.contact); }
};

struct ForcedArc {
  int id;
  PuiseuxPoly eta;
};

struct ExploreOptions {
  int max_depth = 64;
};

// Zones of the frame in increasing v, from the start to the end seam (or the reverse for
// frames of negative orientation). Every forced arc is a zone boundary.
std::vector<Zone> explore_frame(const FrameForm& form, Frame f, const std::vector<ForcedArc>& forced,
                                const ExploreOptions& opt = {});

}  // namespace pizza
