#pragma once

#include <string>

#include "pizza/core/pizza.hpp"

namespace pizza {

// Schematic diagram: slice i gets an angle proportional to 1/β_i, starting at -45° and running
// counterclockwise. Slices with β > 1 carry a cusp. Each slice is annotated with β, Q (arrow
// in reading direction), its sign and μ. Output is byte-identical for equal input.
// Throws InvalidPizza for an invalid pizza.
std::string render_svg(const AbstractPizza& h);

}  // namespace pizza
