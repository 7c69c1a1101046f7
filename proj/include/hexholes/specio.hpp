#pragma once

#include "hexholes/regions.hpp"
#include "hexholes/theorem.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hexholes {

// Invalid input: malformed JSON, unknown fields, labels out of range, ...
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HexagonSpec {
  std::array<int, 6> sides{};  // clockwise from the top side
};

struct ExplicitSpec {
  Region region;
};

using ParsedSpec = std::variant<HexagonSpec, SnowflakeSpec, LSpec, ExplicitSpec>;

// JSON spec documents: an object with a "type" of "hexagon", "H",
// "snowflake", "l_region" or "explicit" plus that type's fields; unknown
// fields are rejected. "H" parses to a snowflake spec with empty label sets.
ParsedSpec parse_spec_json(const std::string& text);
ParsedSpec load_spec_file(const std::string& path);

Region region_of(const ParsedSpec& spec);
std::string describe(const ParsedSpec& spec);

std::string route_name(VerifyRoute route);
std::optional<VerifyRoute> route_from_name(const std::string& name);

std::string count_str(const Count& c);
std::string ratio_str(const Ratio& r);
std::string spec_line(const SnowflakeSpec& s);  // single-line description

void print_report(const VerificationReport& rep, std::ostream& out);
std::string report_json(const VerificationReport& rep);  // serialized object

// Deterministic pseudo-random source. The bounded draw uses rejection
// sampling on the raw 64-bit stream, so results are identical across
// platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t bound);
  int int_in(int lo, int hi);  // inclusive
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 gen_;
};

LabelSet random_labels(Rng& rng, int n);
// Random spec honoring the label-1 hypothesis; `shape` imposes the set
// equalities of a symmetry class.
SnowflakeSpec random_snowflake(Rng& rng, int n_max, int x_max, std::optional<SymTag> shape);
LSpec random_lspec(Rng& rng, int n_max, int x_max);
// Grown connected patch with random knockouts; may end up unbalanced,
// holed or disconnected.
Region random_region(Rng& rng, std::size_t max_cells);

struct SweepOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  int n_max = 3;
  int x_max = 2;
  std::optional<SymTag> shape;      // unconstrained when empty
  std::vector<VerifyRoute> routes;  // determinant when empty
  bool require_nonvacuous = true;   // resample until the unflipped count is positive
};

struct SweepOutcome {
  int passed = 0;
  int failed = 0;
};

SweepOutcome run_sweep(const SweepOptions& opt, std::ostream& out, bool json);

}  // namespace hexholes
