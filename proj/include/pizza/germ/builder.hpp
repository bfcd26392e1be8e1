#pragma once

#include <optional>
#include <vector>

#include "pizza/core/pizza.hpp"
#include "pizza/germ/explore.hpp"
#include "pizza/germ/germ_spec.hpp"

namespace pizza {

struct ComputeOptions {
  bool minimal = false;
  int max_depth = 64;
};

// A kept zone together with the piece it came from, in counterclockwise order.
struct AssembledZone {
  std::size_t piece;
  Zone zone;
  bool zero_piece = false;  // identically zero interval; `zone` only holds the frame and arcs
};

// Zones of all frames and pieces in counterclockwise order, starting at the start seam of S1.
std::vector<AssembledZone> assemble_zones(const GermSpec& g, const ComputeOptions& opt = {});

AbstractPizza compute_pizza(const GermSpec& g, const ComputeOptions& opt = {});

// Index of a piece whose closed sector contains the arc. Throws SectorMismatch.
std::size_t piece_of_arc(const GermSpec& g, const Arc& gamma);

// Order of f along an arc; ∞ iff f vanishes identically on it.
Exponent ord_along_arc(const GermSpec& g, const Arc& gamma);

// Width μ*(γ): (q − r)/λ of the containing zone, or for constant zones the least β of the
// maximal run of adjacent constant zones with the same order.
Exponent width_of_arc(const GermSpec& g, const Arc& gamma);

// Sign of f on the interior of the zone.
int sign_on_zone(const Zone& z);

struct ContactVerdict {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
  AbstractPizza minimal_f, minimal_g;
};

ContactVerdict decide_contact_equivalence(const GermSpec& f, const GermSpec& g, const ComputeOptions& opt = {});

// Sign of γ minus the boundary in the v coordinate of frame f (branches are expanded).
int compare_with_boundary(const Arc& gamma, const ZoneBoundary& b, Frame f);

}  // namespace pizza
