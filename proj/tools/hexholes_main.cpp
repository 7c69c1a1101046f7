#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hexholes/specio.hpp"
#include "hexholes/svg.hpp"
#include "hexholes/theorem.hpp"

namespace {

using namespace hexholes;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadSpec = 2;
constexpr int kExitInternal = 3;

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <typename F>
  auto run(const std::string& label, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    const auto t1 = std::chrono::steady_clock::now();
    if (enabled_) {
      const auto ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::cerr << "timing: " << label << " " << ms << " ms\n";
    }
    return result;
  }

 private:
  bool enabled_;
};

bool lgv_applicable(const ParsedSpec& spec) {
  if (std::holds_alternative<SnowflakeSpec>(spec) || std::holds_alternative<LSpec>(spec))
    return true;
  if (const auto* h = std::get_if<HexagonSpec>(&spec)) {
    const auto& s = h->sides;
    return s[0] > 0 && s[0] == s[1] && s[1] == s[2] && s[2] == s[3] && s[3] == s[4] &&
           s[4] == s[5];
  }
  return false;
}

Count count_lgv(const ParsedSpec& spec) {
  if (const auto* s = std::get_if<SnowflakeSpec>(&spec)) return count_H_via_decomposition(*s);
  if (const auto* l = std::get_if<LSpec>(&spec)) return count_L_lgv(*l);
  const auto& h = std::get<HexagonSpec>(spec);
  SnowflakeSpec plain;
  plain.n = h.sides[0];
  plain.x = 0;
  return count_H_via_decomposition(plain);
}

std::vector<VerifyRoute> parse_routes(const std::vector<std::string>& names) {
  std::vector<VerifyRoute> routes;
  for (const std::string& name : names) {
    const auto route = route_from_name(name);
    if (!route) throw SpecError("unknown method '" + name + "'");
    routes.push_back(*route);
  }
  return routes;
}

int cmd_count(const std::string& file, const std::string& method, bool timing) {
  const ParsedSpec spec = load_spec_file(file);
  std::vector<std::string> methods;
  if (method == "all") {
    methods = {"enum", "det"};
    if (lgv_applicable(spec)) methods.push_back("lgv");
  } else {
    methods = {method};
  }
  Timer timer(timing);
  std::vector<Count> values;
  for (const std::string& m : methods) {
    Count value;
    if (m == "enum") {
      const Region region = region_of(spec);
      value = timer.run("enumeration", [&] { return count_enumeration(region); });
      std::cout << "enumeration: " << count_str(value) << "\n";
    } else if (m == "det") {
      const Region region = region_of(spec);
      value = timer.run("determinant", [&] { return count_determinant(region); });
      std::cout << "determinant: " << count_str(value) << "\n";
    } else if (m == "lgv") {
      if (!lgv_applicable(spec))
        throw SpecError("method 'lgv' applies to snowflake, H, l_region and regular hexagon specs");
      value = timer.run("lgv", [&] { return count_lgv(spec); });
      std::cout << "lgv: " << count_str(value) << "\n";
    } else {
      throw SpecError("unknown method '" + m + "' (expected enum, det, lgv or all)");
    }
    values.push_back(value);
  }
  for (const Count& v : values) {
    if (v != values.front()) {
      std::cout << "DISAGREEMENT\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

// Rebuilds the spec with every hole one step further from the center, the
// classic off-by-one in anchoring hole positions along the arms.  Labels must
// stay within [n], so the fixture spec may not use label n itself.
SnowflakeSpec displace_holes(const SnowflakeSpec& s) {
  SnowflakeSpec bad = s;
  bool moved = false;
  auto shift = [&](LabelSet& set) {
    std::vector<int> out;
    for (int t : set) {
      if (t + 1 > s.n)
        throw SpecError("negative control shifts labels by +1; label " + std::to_string(t) +
                        " has no room with n=" + std::to_string(s.n));
      out.push_back(t + 1);
      moved = true;
    }
    set = make_labels(std::move(out));
  };
  for (std::size_t i = 0; i < 6; ++i) {
    shift(bad.A[i]);
    shift(bad.B[i]);
  }
  if (!moved) throw SpecError("negative control needs at least one hole label to displace");
  return bad;
}

int cmd_verify(const std::string& file, const std::vector<std::string>& methods, bool json,
               bool timing, bool negative_control) {
  const ParsedSpec parsed = load_spec_file(file);
  const auto* s = std::get_if<SnowflakeSpec>(&parsed);
  if (!s) throw SpecError("verify needs a snowflake or H spec");
  const std::vector<VerifyRoute> routes = parse_routes(methods);
  Timer timer(timing);
  VerificationReport rep;
  if (negative_control) {
    const SnowflakeSpec bad = displace_holes(*s);
    try {
      rep = timer.run("verify", [&] { return verify_with_counts_from(*s, bad, routes); });
    } catch (const std::invalid_argument& e) {
      // The displaced holes can make the counted region outright invalid;
      // that still demonstrates the corruption is caught.
      std::cout << "negative control: corrupted spec rejected (" << e.what() << ")\n";
      return kExitMismatch;
    }
  } else {
    rep = timer.run("verify", [&] { return verify(*s, routes); });
  }
  if (json) std::cout << report_json(rep) << "\n";
  else print_report(rep, std::cout);
  return rep.pass ? kExitOk : kExitMismatch;
}

std::vector<std::pair<TriCell, std::string>> hole_labels(const ParsedSpec& parsed) {
  std::vector<std::pair<TriCell, std::string>> labels;
  if (const auto* s = std::get_if<SnowflakeSpec>(&parsed)) {
    for (int i = 1; i <= 6; ++i) {
      for (int t : s->A[static_cast<std::size_t>(i - 1)])
        labels.emplace_back(hole_cell_A(*s, i, t), "A" + std::to_string(i));
      for (int t : s->B[static_cast<std::size_t>(i - 1)])
        labels.emplace_back(hole_cell_B(*s, i, t), "B" + std::to_string(i));
    }
  }
  return labels;
}

std::vector<TriCell> hole_cells(const ParsedSpec& parsed) {
  std::vector<TriCell> holes;
  if (const auto* s = std::get_if<SnowflakeSpec>(&parsed)) {
    const SnowflakeGeometry geo = snowflake_geometry(*s);
    holes = geo.central;
    for (const auto& arm : geo.a_holes) holes.insert(holes.end(), arm.begin(), arm.end());
    for (const auto& arm : geo.b_holes) holes.insert(holes.end(), arm.begin(), arm.end());
  }
  return holes;
}

int cmd_render(const std::string& file, const std::string& out_path, int tiling_index,
               bool labels) {
  const ParsedSpec parsed = load_spec_file(file);
  RenderModel model;
  model.region = region_of(parsed);
  model.holes = hole_cells(parsed);
  if (labels) model.labels = hole_labels(parsed);
  if (tiling_index >= 0) {
    const std::size_t want = static_cast<std::size_t>(tiling_index) + 1;
    const std::vector<Tiling> tilings = enumerate_tilings(model.region, want);
    if (tilings.size() < want)
      throw SpecError("region has only " + std::to_string(tilings.size()) +
                      " tilings; index " + std::to_string(tiling_index) + " is out of range");
    model.tiling = tilings.back();
  }
  RenderOptions opt;
  opt.draw_labels = labels;
  const std::string svg = render_svg(model, opt);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw SpecError("cannot write output file: " + out_path);
  out << svg;
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opt, bool json) {
  const SweepOutcome outcome = run_sweep(opt, std::cout, json);
  return outcome.failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lozenge-tiling counts and identity checks for hexagons with holes"};
  app.require_subcommand(1);

  std::string file, method = "det", out_path;
  std::vector<std::string> methods;
  bool json = false, timing = false, negative_control = false, labels = false;
  int tiling_index = -1;

  CLI::App* count = app.add_subcommand("count", "Count the tilings of a region spec");
  count->add_option("--file", file, "JSON spec file")->required();
  count->add_option("--method", method, "enum, det, lgv or all")->default_val("det");
  count->add_flag("--timing", timing, "report wall time per method on stderr");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check the count identities for a spec");
  verify_cmd->add_option("--file", file, "JSON spec file")->required();
  verify_cmd->add_option("--method", methods, "count route (repeatable): enum, det, lgv");
  verify_cmd->add_flag("--json", json, "emit a JSON report");
  verify_cmd->add_flag("--timing", timing, "report wall time on stderr");
  verify_cmd->add_flag("--negative-control", negative_control,
                       "verify against deliberately displaced hole labels; expected to fail");

  CLI::App* render = app.add_subcommand("render", "Render a region spec to SVG");
  render->add_option("--file", file, "JSON spec file")->required();
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_option("--tiling", tiling_index, "draw the tiling with this index (0-based)");
  render->add_flag("--labels", labels, "draw hole labels");

  CLI::App* mac = app.add_subcommand("macmahon", "Boxed plane-partition count");
  int ma = 0, mb = 0, mc = 0;
  mac->add_option("a", ma, "side a")->required();
  mac->add_option("b", mb, "side b")->required();
  mac->add_option("c", mc, "side c")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Verify randomly drawn specs");
  SweepOptions sweep_opt;
  std::string shape;
  bool allow_vacuous = false;
  sweep->add_option("--trials", sweep_opt.trials, "number of specs")->default_val(100);
  sweep->add_option("--seed", sweep_opt.seed, "RNG seed")->default_val(0);
  sweep->add_option("--n-max", sweep_opt.n_max, "max arm length")->default_val(3);
  sweep->add_option("--x-max", sweep_opt.x_max, "max core size")->default_val(2);
  sweep->add_option("--shape", shape, "plain, r, v or rv")->default_val("plain");
  sweep->add_option("--method", methods, "count route (repeatable): enum, det, lgv");
  sweep->add_flag("--json", json, "emit a JSON report");
  sweep->add_flag("--allow-vacuous", allow_vacuous, "keep specs whose regions have no tilings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version are clean exits; anything else is a usage error
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadSpec;
  }

  try {
    if (*count) return cmd_count(file, method, timing);
    if (*verify_cmd) return cmd_verify(file, methods, json, timing, negative_control);
    if (*render) return cmd_render(file, out_path, tiling_index, labels);
    if (*mac) {
      if (ma < 0 || mb < 0 || mc < 0) throw SpecError("sides must be nonnegative");
      std::cout << count_str(macmahon(ma, mb, mc)) << "\n";
      return kExitOk;
    }
    if (*sweep) {
      if (shape == "plain") sweep_opt.shape = std::nullopt;
      else if (shape == "r") sweep_opt.shape = SymTag::r;
      else if (shape == "v") sweep_opt.shape = SymTag::v;
      else if (shape == "rv") sweep_opt.shape = SymTag::rv;
      else throw SpecError("unknown shape '" + shape + "'");
      sweep_opt.routes = parse_routes(methods);
      sweep_opt.require_nonvacuous = !allow_vacuous;
      return cmd_sweep(sweep_opt, json);
    }
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
