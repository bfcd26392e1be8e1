#pragma once

#include <string>
#include <utility>

#include "pizza/exact/puiseux.hpp"

namespace pizza {

using exact::AlgebraicReal;
using exact::Exponent;
using exact::PuiseuxPoly;

// Sector frames, counterclockwise. Each maps (x, y) to (u, v) with the sector |v| <= u:
// S1 (x, y), S2 (y, x), S3 (-x, y), S4 (-y, x).
enum class Frame { S1 = 0, S2 = 1, S3 = 2, S4 = 3 };

Frame frame_from_index(int i);  // index mod 4
int frame_index(Frame f);
// +1 when increasing v turns counterclockwise (S1, S4), -1 otherwise (S2, S3).
int orientation(Frame f);
const char* frame_dir(Frame f);  // "+x", "+y", "-x", "-y"
Frame parse_frame_dir(const std::string& dir);
// Plane point of the frame point (u, v).
std::pair<double, double> frame_to_plane(Frame f, double u, double v);

// Seam where the frame starts (counterclockwise), v = -orientation·u, and where it ends.
PuiseuxPoly start_seam(Frame f);
PuiseuxPoly end_seam(Frame f);

// Graph arc v = eta(u) in a frame.
struct Arc {
  Frame frame = Frame::S1;
  PuiseuxPoly eta;
};

bool operator==(const Arc& a, const Arc& b);

// Throws InvalidArgument unless exponents are >= 1 and |eta(u)| <= u near 0.
void validate_arc(const Arc& a);
// An arc lying exactly on the end seam of its frame is moved to the next frame's start seam.
Arc canonical_arc(const Arc& a);

// Order of tangency. Arcs in adjacent frames are separated by the shared seam, so their
// tord is the smaller of the tords to that seam; otherwise directions differ and tord is 1.
Exponent tord(const Arc& a, const Arc& b);

// Counterclockwise position comparison, starting at the start seam of S1 (angle -45°).
int ccw_compare(const Arc& a, const Arc& b);

// Plane point at parameter t > 0.
std::pair<double, double> arc_point(const Arc& a, double t);

std::string to_string(const Arc& a);

}  // namespace pizza
