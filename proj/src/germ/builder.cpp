#include "pizza/germ/builder.hpp"

#include <algorithm>
#include <map>

#include "pizza/error.hpp"

namespace pizza {

namespace {

std::vector<ForcedArc> forced_arcs(const FrameLayout& l) {
  std::vector<ForcedArc> out{{0, start_seam(l.frame)}, {1, end_seam(l.frame)}};
  for (std::size_t i = 0; i < l.boundaries.size(); ++i) out.push_back({2 + static_cast<int>(i), l.boundaries[i].eta});
  return out;
}

const ZoneBoundary& ccw_start(const Zone& z) { return orientation(z.frame) > 0 ? z.lower : z.upper; }
const ZoneBoundary& ccw_end(const Zone& z) { return orientation(z.frame) > 0 ? z.upper : z.lower; }

// Position of a within frame f, counterclockwise.
int pos_cmp(Frame f, const PuiseuxPoly& a, const PuiseuxPoly& b) { return orientation(f) * exact::germ_compare(a, b); }

struct Located {
  const FrameLayout* layout;
  const FrameInterval* interval;
  Arc arc;  // γ in the layout's frame
};

Located locate(const std::vector<FrameLayout>& layouts, const Arc& gamma) {
  validate_arc(gamma);
  Arc c = canonical_arc(gamma);
  for (const auto& l : layouts) {
    if (l.frame != c.frame) continue;
    for (const auto& iv : l.intervals) {
      Arc lo = layout_arc(l, iv.lo_id), hi = layout_arc(l, iv.hi_id);
      if (pos_cmp(l.frame, lo.eta, c.eta) <= 0 && pos_cmp(l.frame, c.eta, hi.eta) <= 0) return {&l, &iv, c};
    }
  }
  throw Error(ErrorCode::SectorMismatch, "arc " + to_string(gamma) + " lies in no piece");
}

AffineWidth width_of_zone(const Zone& z) {
  if (z.lambda == 0) return AffineWidth::linear(Rational(0), z.beta);
  return AffineWidth::linear(1 / z.lambda, -z.r / z.lambda);
}

}  // namespace

int compare_with_boundary(const Arc& gamma, const ZoneBoundary& b, Frame f) {
  Arc g = gamma.frame == f ? gamma : canonical_arc(gamma);
  if (g.frame != f) {
    // γ on this frame's end seam, canonicalized away.
    g = Arc{f, end_seam(f)};
  }
  if (!b.branch) return exact::germ_compare(g.eta, b.eta);
  Rational n = b.branch->alpha + 1;
  for (const auto& t : g.eta.terms()) n = std::max(n, Rational(t.exp + 1));
  for (int i = 0; i < 5; ++i, n *= 2) {
    PuiseuxPoly d = g.eta - b.branch->expansion(n);
    if (!d.is_zero() && d.leading().exp <= n) return d.leading().coeff.sign();
  }
  return 0;
}

std::vector<AssembledZone> assemble_zones(const GermSpec& g, const ComputeOptions& opt) {
  validate_germ(g);
  ExploreOptions eo;
  eo.max_depth = opt.max_depth;
  std::vector<AssembledZone> out;
  for (const auto& l : frame_layouts(g)) {
    auto forced = forced_arcs(l);
    std::map<std::size_t, std::vector<Zone>> cache;
    for (const auto& iv : l.intervals) {
      FrameForm form = to_frame_form(g.pieces[iv.piece].expr, l.frame);
      if (form.zero) {
        AssembledZone az{iv.piece, Zone{}, true};
        az.zone.frame = l.frame;
        Arc lo = layout_arc(l, iv.lo_id), hi = layout_arc(l, iv.hi_id);
        az.zone.lower.eta = orientation(l.frame) > 0 ? lo.eta : hi.eta;
        az.zone.upper.eta = orientation(l.frame) > 0 ? hi.eta : lo.eta;
        az.zone.beta = tord(lo, hi).value();
        az.zone.sign = 0;
        out.push_back(az);
        continue;
      }
      auto it = cache.find(iv.piece);
      if (it == cache.end()) {
        auto zones = explore_frame(form, l.frame, forced, eo);
        if (orientation(l.frame) < 0) std::reverse(zones.begin(), zones.end());
        it = cache.emplace(iv.piece, std::move(zones)).first;
      }
      const auto& zones = it->second;
      std::size_t i0 = zones.size(), i1 = zones.size();
      for (std::size_t i = 0; i < zones.size(); ++i)
        if (ccw_start(zones[i]).forced == iv.lo_id) {
          i0 = i;
          break;
        }
      for (std::size_t i = i0; i < zones.size(); ++i)
        if (ccw_end(zones[i]).forced == iv.hi_id) {
          i1 = i;
          break;
        }
      if (i0 == zones.size() || i1 == zones.size())
        throw Error(ErrorCode::InvalidArgument, "piece boundary missing from the zone decomposition");
      for (std::size_t i = i0; i <= i1; ++i) out.push_back({iv.piece, zones[i], false});
    }
  }
  return out;
}

AbstractPizza compute_pizza(const GermSpec& g, const ComputeOptions& opt) {
  AbstractPizza h;
  std::optional<Exponent> least;
  for (const auto& az : assemble_zones(g, opt)) {
    const Zone& z = az.zone;
    if (az.zero_piece) {
      Exponent b(z.beta);
      h.slices.push_back({b, {Exponent::infinity(), Exponent::infinity()}, 0, AffineWidth::const_at_infinity(b)});
      continue;
    }
    if (z.denominator_vanishes)
      throw Error(ErrorCode::DenominatorVanishes, "a denominator vanishes along " + z.center.str() + " in " +
                                                      frame_dir(z.frame));
    if (z.positivity_unverified)
      throw Error(ErrorCode::PositivityUnverifiable, "negative base under a fractional power near " + z.sample.str() +
                                                         " in " + frame_dir(z.frame));
    Exponent a = z.ord_at(ccw_start(z).contact), b = z.ord_at(ccw_end(z).contact);
    for (const auto& q : {a, b})
      if (!least || q < *least) least = q;
    h.slices.push_back({Exponent(z.beta), {a, b}, z.sign, width_of_zone(z)});
  }
  if (least && *least <= Exponent(0))
    throw Error(ErrorCode::NonVanishingAtOrigin, "order " + least->str() + " along some arc");
  require_valid(h);
  return opt.minimal ? minimal_pizza(h) : h;
}

std::size_t piece_of_arc(const GermSpec& g, const Arc& gamma) {
  auto layouts = frame_layouts(g);
  return locate(layouts, gamma).interval->piece;
}

Exponent ord_along_arc(const GermSpec& g, const Arc& gamma) {
  auto layouts = frame_layouts(g);
  Located loc = locate(layouts, gamma);
  FrameForm form = to_frame_form(g.pieces[loc.interval->piece].expr, loc.layout->frame);
  return ord_of_form(form, loc.arc.eta);
}

Exponent width_of_arc(const GermSpec& g, const Arc& gamma) {
  auto layouts = frame_layouts(g);
  Located loc = locate(layouts, gamma);
  Frame f = loc.layout->frame;
  FrameForm form = to_frame_form(g.pieces[loc.interval->piece].expr, f);
  Exponent q = ord_of_form(form, loc.arc.eta);
  if (form.zero) return tord(layout_arc(*loc.layout, loc.interval->lo_id), layout_arc(*loc.layout, loc.interval->hi_id));
  auto zones = explore_frame(form, f, forced_arcs(*loc.layout));
  for (std::size_t i = 0; i < zones.size(); ++i) {
    const Zone& z = zones[i];
    if (compare_with_boundary(loc.arc, z.lower, f) < 0 || compare_with_boundary(loc.arc, z.upper, f) > 0) continue;
    if (z.lambda != 0) {
      if (q.is_infinite()) return z.lambda > 0 ? Exponent::infinity() : Exponent(0);
      return Exponent((q.value() - z.r) / z.lambda);
    }
    Rational beta = z.beta;
    for (std::size_t j = i; j-- > 0 && zones[j].lambda == 0 && zones[j].r == z.r;) beta = std::min(beta, zones[j].beta);
    for (std::size_t j = i + 1; j < zones.size() && zones[j].lambda == 0 && zones[j].r == z.r; ++j)
      beta = std::min(beta, zones[j].beta);
    return Exponent(beta);
  }
  throw Error(ErrorCode::SectorMismatch, "arc " + to_string(gamma) + " lies in no zone");
}

int sign_on_zone(const Zone& z) { return z.sign; }

ContactVerdict decide_contact_equivalence(const GermSpec& f, const GermSpec& g, const ComputeOptions& opt) {
  ComputeOptions o = opt;
  o.minimal = true;
  ContactVerdict v;
  v.minimal_f = compute_pizza(f, o);
  v.minimal_g = compute_pizza(g, o);
  v.witness = equivalent(v.minimal_f, v.minimal_g);
  v.equivalent = v.witness.has_value();
  return v;
}

}  // namespace pizza
