#include "doctest.h"

#include "fixtures.hpp"
#include "pizza/error.hpp"
#include "pizza/render/svg.hpp"

using namespace pizza;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = 0; (p = text.find(needle, p)) != std::string::npos; p += needle.size()) ++n;
  return n;
}

}  // namespace

TEST_CASE("rendered pizzas have one annotated sector per slice") {
  std::string svg = render_svg(fixtures::example3_pizza());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "class=\"slice\"") == 6);
  CHECK(count(svg, "s=−") == 2);
  CHECK(count(svg, "s=+") == 4);
  CHECK(count(svg, "β=3/2") == 4);
  CHECK(count(svg, "class=\"cusp\"") == 4);
  CHECK(count(svg, "Q=[3 → ∞]") == 2);
  CHECK(count(svg, "μ=q-3/2") == 4);
  CHECK(count(svg, "marker-end") == 6);
}

TEST_CASE("zero pizza renders as a full disk") {
  AbstractPizza z{{fixtures::slice(fixtures::q(1), fixtures::inf(), fixtures::inf(), 0,
                                   AffineWidth::const_at_infinity(fixtures::q(1)))}};
  std::string svg = render_svg(z);
  CHECK(count(svg, "class=\"slice\"") == 1);
  CHECK(count(svg, "s=0") == 1);
  CHECK(count(svg, "μ(∞)=1") == 1);
  CHECK(count(svg, " 0 1 0 ") == 2);  // two half-circle arcs
}

TEST_CASE("point slices show their single width value") {
  std::string svg = render_svg(fixtures::example2_pizza());
  CHECK(count(svg, "μ(4)=1") == 1);
  CHECK(count(svg, "μ=1/2·q") == 2);
}

TEST_CASE("rendering is deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AbstractPizza h = generate_random_pizza(seed, 1 + seed % 8);
    CHECK(render_svg(h) == render_svg(h));
  }
  CHECK(render_svg(fixtures::example1_pizza()) == render_svg(fixtures::example1_pizza()));
}

TEST_CASE("rendering rejects invalid pizzas") {
  AbstractPizza h = fixtures::example1_pizza();
  h.slices[0].beta = fixtures::q(2);
  CHECK_THROWS_AS(render_svg(h), Error);
}
