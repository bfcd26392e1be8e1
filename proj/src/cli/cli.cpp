#include "pizza/cli/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "pizza/error.hpp"
#include "pizza/io/json_io.hpp"
#include "pizza/render/svg.hpp"

namespace pizza {

void Config::validate() const {
  if (precision_bits <= 0 || max_depth <= 0 || count <= 0 || !(t0 > 0) || !(tolerance > 0))
    throw Error(ErrorCode::InvalidArgument, "precision bits, depth, count, t0 and tolerance must be positive");
  if (!(ratio > 0 && ratio < 1)) throw Error(ErrorCode::InvalidArgument, "ratio must lie in (0, 1)");
}

ComputeOptions Config::compute_options(bool minimal) const {
  ComputeOptions o;
  o.minimal = minimal;
  o.max_depth = max_depth;
  return o;
}

OracleConfig Config::oracle_config() const {
  OracleConfig c;
  c.t0 = t0;
  c.ratio = ratio;
  c.count = count;
  c.tolerance = tolerance;
  c.max_precision_bits = precision_bits;
  c.precision_bits = std::min(c.precision_bits, precision_bits);
  return c;
}

namespace {

void emit(const std::string& text, const Config& cfg, std::ostream& out) {
  if (cfg.output.empty())
    out << text;
  else
    write_text_file(cfg.output, text);
}

void emit(const Json& j, const Config& cfg, std::ostream& out) { emit(j.dump(2) + "\n", cfg, out); }

int fail(std::ostream& err, const std::string& code, const std::string& detail) {
  err << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
  return kExitError;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Pizza invariants of plane function germs", "pizza"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--precision-bits", cfg.precision_bits, "Algebraic refinement budget and oracle precision cap")
      ->envname("PIZZA_PRECISION_BITS");
  app.add_option("--max-depth", cfg.max_depth, "Newton exploration depth limit");
  app.add_option("--t0", cfg.t0, "Oracle: largest sample parameter");
  app.add_option("--ratio", cfg.ratio, "Oracle: ratio between consecutive samples");
  app.add_option("--count", cfg.count, "Oracle: samples per range");
  app.add_option("--tolerance", cfg.tolerance, "Oracle: allowed slope deviation");
  app.add_option("-o,--output", cfg.output, "Write the result to this file instead of standard output");

  std::string a, b;
  bool minimal = false;
  auto* validate = app.add_subcommand("validate", "Check the pizza axioms");
  validate->add_option("pizza", a, "Pizza JSON")->required();
  auto* compute = app.add_subcommand("compute", "Pizza of a germ");
  compute->add_option("germ", a, "Germ JSON")->required();
  compute->add_flag("--minimal", minimal, "Simplify to the minimal pizza");
  auto* simplify = app.add_subcommand("simplify", "Minimal pizza");
  simplify->add_option("pizza", a, "Pizza JSON")->required();
  auto* equiv_pizza = app.add_subcommand("equiv-pizza", "Combinatorial equivalence of two pizzas");
  equiv_pizza->add_option("first", a, "Pizza JSON")->required();
  equiv_pizza->add_option("second", b, "Pizza JSON")->required();
  auto* equiv_germ = app.add_subcommand("equiv-germ", "Contact equivalence of two germs");
  equiv_germ->add_option("first", a, "Germ JSON")->required();
  equiv_germ->add_option("second", b, "Germ JSON")->required();
  auto* realize_cmd = app.add_subcommand("realize", "Germ with a given pizza");
  realize_cmd->add_option("pizza", a, "Pizza JSON")->required();
  auto* check = app.add_subcommand("check", "Numeric audit of a claimed pizza of a germ");
  check->add_option("germ", a, "Germ JSON")->required();
  check->add_option("pizza", b, "Pizza JSON")->required();
  auto* render = app.add_subcommand("render", "SVG diagram of a pizza");
  render->add_option("pizza", a, "Pizza JSON")->required();

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, code_name(ErrorCode::InvalidArgument), e.what());
  }

  try {
    cfg.validate();
    exact::set_precision_bits(static_cast<unsigned>(cfg.precision_bits));
    if (validate->parsed()) {
      emit(violations_to_json(validate_pizza(pizza_from_json(read_json_file(a)))), cfg, out);
    } else if (compute->parsed()) {
      emit(pizza_to_json(compute_pizza(germ_from_json(read_json_file(a)), cfg.compute_options(minimal))), cfg, out);
    } else if (simplify->parsed()) {
      AbstractPizza h = pizza_from_json(read_json_file(a));
      require_valid(h);
      emit(pizza_to_json(minimal_pizza(h)), cfg, out);
    } else if (equiv_pizza->parsed()) {
      AbstractPizza h1 = pizza_from_json(read_json_file(a)), h2 = pizza_from_json(read_json_file(b));
      require_valid(h1);
      require_valid(h2);
      auto w = equivalent(minimal_pizza(h1), minimal_pizza(h2));
      emit(witness_to_json(w), cfg, out);
      return w ? kExitOk : kExitNotEquivalent;
    } else if (equiv_germ->parsed()) {
      ContactVerdict v = decide_contact_equivalence(germ_from_json(read_json_file(a)),
                                                    germ_from_json(read_json_file(b)), cfg.compute_options(true));
      Json j = witness_to_json(v.witness);
      j["minimal_first"] = pizza_to_json(v.minimal_f);
      j["minimal_second"] = pizza_to_json(v.minimal_g);
      emit(j, cfg, out);
      return v.equivalent ? kExitOk : kExitNotEquivalent;
    } else if (realize_cmd->parsed()) {
      emit(realized_to_json(realize(pizza_from_json(read_json_file(a)))), cfg, out);
    } else if (check->parsed()) {
      CrosscheckReport r =
          crosscheck_pizza(germ_from_json(read_json_file(a)), pizza_from_json(read_json_file(b)), cfg.oracle_config());
      emit(crosscheck_to_json(r), cfg, out);
      return r.pass() ? kExitOk : kExitCheckFailed;
    } else if (render->parsed()) {
      emit(render_svg(pizza_from_json(read_json_file(a))), cfg, out);
    }
    return kExitOk;
  } catch (const Error& e) {
    return fail(err, code_name(e.code()), e.detail());
  } catch (const nlohmann::json::exception& e) {
    return fail(err, code_name(ErrorCode::ParseError), e.what());
  } catch (const std::exception& e) {
    return fail(err, "InternalError", e.what());
  }
}

}  // namespace pizza
