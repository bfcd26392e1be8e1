#include "pizza/core/pizza.hpp"

#include <algorithm>
#include <sstream>

#include "pizza/error.hpp"

namespace pizza {

namespace {

const char* sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

// μ evaluated where it is defined, or nullopt (m < 0 at ∞, or wrong width kind).
std::optional<Exponent> try_eval(const AffineWidth& mu, const Exponent& q) {
  try {
    return mu.eval(q);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool increasing_through(const Slice& l, const Slice& r) {
  return l.Q.a < l.Q.b && r.Q.a < r.Q.b;
}

bool decreasing_through(const Slice& l, const Slice& r) {
  return l.Q.a > l.Q.b && r.Q.a > r.Q.b;
}

}  // namespace

Exponent AffineWidth::eval(const Exponent& q) const {
  if (kind == Kind::ConstAtInfinity) {
    if (q.is_finite()) throw Error(ErrorCode::InvalidSlice, "constant-at-infinity width evaluated at " + q.str());
    return value;
  }
  if (q.is_finite()) return Exponent(Rational(m * q.value() + c));
  if (m > 0) return Exponent::infinity();
  if (m == 0) return Exponent(c);
  throw Error(ErrorCode::InvalidSlice, "decreasing width evaluated at inf");
}

std::string AffineWidth::str() const {
  if (kind == Kind::ConstAtInfinity) return "mu(inf)=" + value.str();
  std::string out;
  if (m != 0) out = (m == 1 ? "" : (m == -1 ? "-" : exact::to_string(m) + "*")) + std::string("q");
  if (c != 0 || out.empty()) {
    if (out.empty()) out = exact::to_string(c);
    else out += (c > 0 ? "+" : "-") + exact::to_string(Rational(abs(c)));
  }
  return out;
}

std::vector<Violation> validate_pizza(const AbstractPizza& h) {
  std::vector<Violation> out;
  const std::size_t k = h.size();
  if (k == 0) {
    out.push_back({0, "nonempty", "pizza has no slices"});
    return out;
  }
  bool has_beta_one = false;
  for (std::size_t i = 0; i < k; ++i) {
    const Slice& s = h.slices[i];
    if (s.beta.is_infinite() || s.beta.value() < 1)
      out.push_back({i, "beta-range", "beta must be finite and >= 1, got " + s.beta.str()});
    if (s.beta == Exponent(1)) has_beta_one = true;
    if (!(s.Q.a > Exponent(0)) || !(s.Q.b > Exponent(0)))
      out.push_back({i, "segment-positive", "segment endpoints must be positive"});
    bool inf_point = s.Q.a.is_infinite() && s.Q.b.is_infinite();
    if (!s.mu.is_linear() && !inf_point)
      out.push_back({i, "width-kind", "constant-at-infinity width on a segment other than [inf,inf]"});
    auto ma = try_eval(s.mu, s.Q.a), mb = try_eval(s.mu, s.Q.b);
    if (!ma || !mb) {
      out.push_back({i, "width-domain", "width undefined at a segment endpoint"});
    } else {
      if (*ma < Exponent(1) || *mb < Exponent(1))
        out.push_back({i, "width-domain", "width below 1 on the segment"});
      if (exact::min(*ma, *mb) != s.beta)
        out.push_back({i, "min-equals-beta",
                       "min(mu(a),mu(b)) = " + exact::min(*ma, *mb).str() + " but beta = " + s.beta.str()});
    }
    if (s.sign < -1 || s.sign > 1) out.push_back({i, "sign-range", "sign must be -1, 0 or +1"});
    if (s.sign == 0 && !inf_point) out.push_back({i, "zero-sign", "sign 0 on a segment other than [inf,inf]"});
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Slice& l = h.slices[i];
    const Slice& r = h.at(i + 1);
    if (l.Q.b != r.Q.a)
      out.push_back({i, "continuity", "b_" + std::to_string(i) + " = " + l.Q.b.str() + " differs from next a = " + r.Q.a.str()});
    else if (l.sign != r.sign && l.Q.b.is_finite())
      out.push_back({i, "sign-continuity", "sign changes across the finite joint " + l.Q.b.str()});
  }
  if (!has_beta_one) out.push_back({0, "beta-one", "no slice has beta = 1"});
  return out;
}

bool is_valid(const AbstractPizza& h) { return validate_pizza(h).empty(); }

void require_valid(const AbstractPizza& h) {
  auto v = validate_pizza(h);
  if (v.empty()) return;
  std::string detail;
  for (const auto& x : v) {
    if (!detail.empty()) detail += "; ";
    detail += x.axiom + " at " + std::to_string(x.index) + ": " + x.detail;
  }
  throw Error(ErrorCode::InvalidPizza, detail);
}

const char* kind_name(SimplificationKind k) {
  switch (k) {
    case SimplificationKind::Op1: return "op1";
    case SimplificationKind::Op2LeftPoint: return "op2_left_point";
    case SimplificationKind::Op2RightPoint: return "op2_right_point";
  }
  return "?";
}

bool op1_applies(const Slice& l, const Slice& r) {
  if (l.Q.is_point() || r.Q.is_point() || l.sign != r.sign) return false;
  if (!increasing_through(l, r) && !decreasing_through(l, r)) return false;
  return l.mu.is_linear() && r.mu.is_linear() && l.mu.m == r.mu.m && l.mu.c == r.mu.c;
}

bool op2_left_applies(const Slice& l, const Slice& r) {
  if (!l.Q.is_point() || l.sign != r.sign) return false;
  auto w = try_eval(r.mu, l.Q.a);
  return w && l.beta >= *w;
}

bool op2_right_applies(const Slice& l, const Slice& r) {
  if (!r.Q.is_point() || l.sign != r.sign) return false;
  auto w = try_eval(l.mu, r.Q.a);
  return w && r.beta >= *w;
}

std::vector<Simplification> find_simplifications(const AbstractPizza& h) {
  require_valid(h);
  std::vector<Simplification> out;
  const std::size_t k = h.size();
  if (k < 2) return out;
  for (std::size_t i = 0; i < k; ++i) {
    const Slice& l = h.slices[i];
    const Slice& r = h.at(i + 1);
    if (op1_applies(l, r)) out.push_back({i, SimplificationKind::Op1});
    if (op2_left_applies(l, r)) out.push_back({i, SimplificationKind::Op2LeftPoint});
    if (op2_right_applies(l, r)) out.push_back({i, SimplificationKind::Op2RightPoint});
  }
  return out;
}

AbstractPizza apply_simplification(const AbstractPizza& h, const Simplification& s) {
  const std::size_t k = h.size();
  if (k < 2 || s.index >= k) throw Error(ErrorCode::NotApplicable, "no joint at index " + std::to_string(s.index));
  const std::size_t j = (s.index + 1) % k;
  const Slice& l = h.slices[s.index];
  const Slice& r = h.slices[j];
  Slice merged;
  switch (s.kind) {
    case SimplificationKind::Op1:
      if (!op1_applies(l, r)) throw Error(ErrorCode::NotApplicable, "op1 at " + std::to_string(s.index));
      merged = l;
      merged.Q = {l.Q.a, r.Q.b};
      merged.beta = exact::min(l.beta, r.beta);
      break;
    case SimplificationKind::Op2LeftPoint:
      if (!op2_left_applies(l, r)) throw Error(ErrorCode::NotApplicable, "op2_left_point at " + std::to_string(s.index));
      merged = r;
      break;
    case SimplificationKind::Op2RightPoint:
      if (!op2_right_applies(l, r)) throw Error(ErrorCode::NotApplicable, "op2_right_point at " + std::to_string(s.index));
      merged = l;
      break;
  }
  AbstractPizza out;
  if (j == 0) {
    // Merged slice takes the place of slice 0; the last slice disappears.
    out.slices.push_back(merged);
    for (std::size_t i = 1; i + 1 < k; ++i) out.slices.push_back(h.slices[i]);
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      if (i == s.index) out.slices.push_back(merged);
      else if (i != j) out.slices.push_back(h.slices[i]);
    }
  }
  return out;
}

AbstractPizza minimal_pizza(const AbstractPizza& h) {
  AbstractPizza cur = h;
  for (;;) {
    auto ops = find_simplifications(cur);
    if (ops.empty()) return cur;
    cur = apply_simplification(cur, ops.front());
  }
}

bool same_slice(const Slice& a, const Slice& b) {
  if (a.beta != b.beta || a.Q != b.Q || a.sign != b.sign) return false;
  if (a.Q.is_point()) return true;
  return a.mu == b.mu;
}

std::string encode_slice(const Slice& s) {
  std::string out = s.beta.str() + ";" + s.Q.a.str() + ";" + s.Q.b.str() + ";" + sign_char(s.sign) + ";";
  if (s.Q.is_point()) out += "pt";
  else out += exact::to_string(s.mu.m) + "," + exact::to_string(s.mu.c);
  return out;
}

AbstractPizza reversed(const AbstractPizza& h) {
  AbstractPizza out;
  for (auto it = h.slices.rbegin(); it != h.slices.rend(); ++it) {
    Slice s = *it;
    s.Q = s.Q.reversed();
    out.slices.push_back(s);
  }
  return out;
}

AbstractPizza rotated(const AbstractPizza& h, std::size_t offset) {
  AbstractPizza out;
  for (std::size_t i = 0; i < h.size(); ++i) out.slices.push_back(h.at(i + offset));
  return out;
}

AbstractPizza sign_flipped(const AbstractPizza& h) {
  AbstractPizza out = h;
  for (auto& s : out.slices) s.sign = -s.sign;
  return out;
}

AbstractPizza apply_witness(const AbstractPizza& h, const EquivalenceWitness& w) {
  AbstractPizza out = w.reverse ? reversed(h) : h;
  out = rotated(out, w.rotation);
  return w.sign_flip ? sign_flipped(out) : out;
}

std::string canonical_form(const AbstractPizza& h) {
  require_valid(h);
  std::vector<std::string> enc;
  for (const auto& s : h.slices) enc.push_back(encode_slice(s));
  std::string best;
  bool first = true;
  for (int rev = 0; rev < 2; ++rev) {
    for (int flip = 0; flip < 2; ++flip) {
      AbstractPizza base = h;
      if (rev) base = reversed(base);
      if (flip) base = sign_flipped(base);
      std::vector<std::string> e;
      for (const auto& s : base.slices) e.push_back(encode_slice(s));
      for (std::size_t r = 0; r < e.size(); ++r) {
        std::string joined;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i) joined += "|";
          joined += e[(i + r) % e.size()];
        }
        if (first || joined < best) {
          best = joined;
          first = false;
        }
      }
    }
  }
  return best;
}

std::optional<EquivalenceWitness> equivalent(const AbstractPizza& h1, const AbstractPizza& h2) {
  require_valid(h1);
  require_valid(h2);
  if (h1.size() != h2.size()) return std::nullopt;
  for (int rev = 0; rev < 2; ++rev)
    for (int flip = 0; flip < 2; ++flip)
      for (std::size_t r = 0; r < h1.size(); ++r) {
        EquivalenceWitness w{r, rev == 1, flip == 1};
        AbstractPizza img = apply_witness(h1, w);
        bool match = true;
        for (std::size_t i = 0; i < img.size() && match; ++i) match = same_slice(img.slices[i], h2.slices[i]);
        if (match) return w;
      }
  return std::nullopt;
}

std::string to_string(const Slice& s) {
  std::ostringstream os;
  os << "(beta=" << s.beta.str() << ", [" << s.Q.a.str() << "," << s.Q.b.str() << "], " << sign_char(s.sign)
     << ", mu=" << s.mu.str() << ")";
  return os.str();
}

std::string to_string(const AbstractPizza& h) {
  std::string out;
  for (const auto& s : h.slices) {
    if (!out.empty()) out += " ";
    out += to_string(s);
  }
  return out;
}

}  // namespace pizza
