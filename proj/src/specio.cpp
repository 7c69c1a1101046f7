#include "hexholes/specio.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hexholes {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SpecError(msg); }

void check_fields(const json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (item.key() == name) known = true;
    if (!known) fail("unknown field '" + item.key() + "' in spec");
  }
}

int get_int(const json& obj, const char* key) {
  if (!obj.contains(key)) fail(std::string("missing field '") + key + "'");
  if (!obj.at(key).is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return obj.at(key).get<int>();
}

bool get_flag(const json& obj, const char* key) {
  if (!obj.contains(key)) return false;
  if (!obj.at(key).is_boolean()) fail(std::string("field '") + key + "' must be a boolean");
  return obj.at(key).get<bool>();
}

LabelSet get_labels(const json& v, const std::string& what) {
  if (!v.is_array()) fail("field '" + what + "' must be an array of integers");
  std::vector<int> vals;
  for (const auto& e : v) {
    if (!e.is_number_integer()) fail("field '" + what + "' must contain integers only");
    vals.push_back(e.get<int>());
  }
  try {
    return make_labels(std::move(vals));
  } catch (const std::invalid_argument& e) {
    fail("field '" + what + "': " + e.what());
  }
}

std::array<LabelSet, 6> get_label_sets(const json& obj, const char* key) {
  if (!obj.contains(key)) fail(std::string("missing field '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_array() || v.size() != 6)
    fail(std::string("field '") + key + "' must be an array of 6 label arrays");
  std::array<LabelSet, 6> out;
  for (std::size_t i = 0; i < 6; ++i)
    out[i] = get_labels(v.at(i), std::string(key) + std::to_string(i + 1));
  return out;
}

std::string label_str(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string sym_name(SymTag tag) {
  switch (tag) {
    case SymTag::r: return "r";
    case SymTag::v: return "v";
    case SymTag::rv: return "rv";
  }
  return "?";
}

ordered_json snowflake_json(const SnowflakeSpec& s) {
  ordered_json a = ordered_json::array(), b = ordered_json::array();
  for (int i = 0; i < 6; ++i) {
    a.push_back(s.A[static_cast<std::size_t>(i)]);
    b.push_back(s.B[static_cast<std::size_t>(i)]);
  }
  return ordered_json{{"type", "snowflake"}, {"n", s.n}, {"x", s.x},
                      {"A", a},              {"B", b},   {"flipped", s.flipped}};
}

}  // namespace

ParsedSpec parse_spec_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("spec must be a JSON object");
  if (!doc.contains("type") || !doc.at("type").is_string()) fail("spec needs a string 'type'");
  const std::string type = doc.at("type").get<std::string>();

  try {
    if (type == "hexagon") {
      check_fields(doc, {"type", "a", "b", "c", "sides"});
      HexagonSpec h;
      if (doc.contains("sides")) {
        if (doc.contains("a") || doc.contains("b") || doc.contains("c"))
          fail("hexagon spec takes either 'sides' or 'a'/'b'/'c', not both");
        const auto& v = doc.at("sides");
        if (!v.is_array() || v.size() != 6) fail("'sides' must be an array of 6 integers");
        for (std::size_t i = 0; i < 6; ++i) {
          if (!v.at(i).is_number_integer()) fail("'sides' must contain integers only");
          h.sides[i] = v.at(i).get<int>();
        }
      } else {
        const int a = get_int(doc, "a"), b = get_int(doc, "b"), c = get_int(doc, "c");
        h.sides = {a, b, c, a, b, c};
      }
      build_hexagon(h.sides);  // validate now
      return h;
    }
    if (type == "H") {
      check_fields(doc, {"type", "n", "x", "flipped"});
      SnowflakeSpec s;
      s.n = get_int(doc, "n");
      s.x = get_int(doc, "x");
      s.flipped = get_flag(doc, "flipped");
      validate_spec(s);
      return s;
    }
    if (type == "snowflake") {
      check_fields(doc, {"type", "n", "x", "A", "B", "flipped"});
      SnowflakeSpec s;
      s.n = get_int(doc, "n");
      s.x = get_int(doc, "x");
      s.A = get_label_sets(doc, "A");
      s.B = get_label_sets(doc, "B");
      s.flipped = get_flag(doc, "flipped");
      validate_spec(s);
      if (s.flipped && !flip_hypothesis_ok(s))
        fail("label 1 on both sides of an arm; the flipped region does not exist");
      return s;
    }
    if (type == "l_region") {
      check_fields(doc, {"type", "n", "x", "P", "Q", "R", "S", "barred"});
      LSpec s;
      s.n = get_int(doc, "n");
      s.x = get_int(doc, "x");
      const auto field = [&](const char* key) {
        if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
        return get_labels(doc.at(key), key);
      };
      s.P = field("P");
      s.Q = field("Q");
      s.R = field("R");
      s.S = field("S");
      s.barred = get_flag(doc, "barred");
      validate_lspec(s);
      return s;
    }
    if (type == "explicit") {
      check_fields(doc, {"type", "cells"});
      if (!doc.contains("cells") || !doc.at("cells").is_array())
        fail("explicit spec needs a 'cells' array");
      std::vector<TriCell> cells;
      for (const auto& e : doc.at("cells")) {
        if (!e.is_array() || e.size() != 3 || !e.at(0).is_number_integer() ||
            !e.at(1).is_number_integer() || !e.at(2).is_string())
          fail("each cell must be [row, col, \"up\"|\"down\"]");
        const std::string o = e.at(2).get<std::string>();
        if (o != "up" && o != "down") fail("cell orientation must be \"up\" or \"down\"");
        cells.push_back(TriCell{e.at(0).get<int>(), e.at(1).get<int>(),
                                o == "up" ? Orient::up : Orient::down});
      }
      return ExplicitSpec{Region(std::move(cells))};
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  fail("unknown spec type '" + type + "'");
}

ParsedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

Region region_of(const ParsedSpec& spec) {
  try {
    if (const auto* h = std::get_if<HexagonSpec>(&spec)) return build_hexagon(h->sides);
    if (const auto* s = std::get_if<SnowflakeSpec>(&spec)) return build_snowflake(*s);
    if (const auto* l = std::get_if<LSpec>(&spec)) return build_L(*l);
    return std::get<ExplicitSpec>(spec).region;
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string describe(const ParsedSpec& spec) {
  if (const auto* h = std::get_if<HexagonSpec>(&spec)) {
    std::string out = "hexagon sides=(";
    for (int i = 0; i < 6; ++i) {
      if (i) out += ",";
      out += std::to_string(h->sides[static_cast<std::size_t>(i)]);
    }
    return out + ")";
  }
  if (const auto* s = std::get_if<SnowflakeSpec>(&spec)) return spec_line(*s);
  if (const auto* l = std::get_if<LSpec>(&spec)) {
    return std::string(l->barred ? "l_region barred" : "l_region") + " n=" + std::to_string(l->n) +
           " x=" + std::to_string(l->x) + " P=" + label_str(l->P) + " Q=" + label_str(l->Q) +
           " R=" + label_str(l->R) + " S=" + label_str(l->S);
  }
  return "explicit cells=" + std::to_string(std::get<ExplicitSpec>(spec).region.size());
}

std::string route_name(VerifyRoute route) {
  switch (route) {
    case VerifyRoute::enumeration: return "enumeration";
    case VerifyRoute::determinant: return "determinant";
    case VerifyRoute::lgv: return "lgv";
  }
  return "?";
}

std::optional<VerifyRoute> route_from_name(const std::string& name) {
  if (name == "enum" || name == "enumeration") return VerifyRoute::enumeration;
  if (name == "det" || name == "determinant") return VerifyRoute::determinant;
  if (name == "lgv") return VerifyRoute::lgv;
  return std::nullopt;
}

std::string count_str(const Count& c) { return c.str(); }

std::string ratio_str(const Ratio& r) {
  const Count num = boost::multiprecision::numerator(r);
  const Count den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string spec_line(const SnowflakeSpec& s) {
  std::string out = "snowflake n=" + std::to_string(s.n) + " x=" + std::to_string(s.x) +
                    " flipped=" + (s.flipped ? "yes" : "no");
  for (int i = 0; i < 6; ++i)
    out += " A" + std::to_string(i + 1) + "=" + label_str(s.A[static_cast<std::size_t>(i)]);
  for (int i = 0; i < 6; ++i)
    out += " B" + std::to_string(i + 1) + "=" + label_str(s.B[static_cast<std::size_t>(i)]);
  return out;
}

void print_report(const VerificationReport& rep, std::ostream& out) {
  out << "spec H:    " << spec_line(rep.spec_h) << "\n";
  out << "spec Hbar: " << spec_line(rep.spec_hbar) << "\n";
  for (std::size_t i = 0; i < rep.counts_h.size(); ++i) {
    out << "count[" << route_name(rep.counts_h[i].route) << "] H=" << count_str(rep.counts_h[i].value)
        << " Hbar=" << count_str(rep.counts_hbar[i].value) << "\n";
  }
  out << "routes agree: " << (rep.routes_agree ? "yes" : "NO") << "\n";
  if (rep.measured) out << "ratio measured:  " << ratio_str(*rep.measured) << "\n";
  else out << "ratio measured:  vacuous (no tilings of H)\n";
  out << "ratio formula:   " << ratio_str(rep.formula) << "\n";
  out << "ratio geometric: " << ratio_str(rep.geometric) << "\n";
  out << "check ratio:     " << (rep.ratio_pass ? "PASS" : "FAIL") << "\n";
  out << "check geometric: " << (rep.geometric_pass ? "PASS" : "FAIL") << "\n";
  for (const SymmetryCheck& chk : rep.symmetry) {
    out << "symmetry " << sym_name(chk.tag) << ": ";
    if (!chk.checked) {
      out << "applies, not evaluated (" << chk.note << ")\n";
      continue;
    }
    out << "fixed H=" << count_str(chk.fixed_h) << " Hbar=" << count_str(chk.fixed_hbar)
        << " formula=" << (chk.formula ? ratio_str(*chk.formula) : "n/a") << " "
        << (chk.pass ? "PASS" : "FAIL");
    if (!chk.note.empty()) out << " (" << chk.note << ")";
    out << "\n";
  }
  out << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

std::string report_json(const VerificationReport& rep) {
  ordered_json j;
  j["spec_h"] = snowflake_json(rep.spec_h);
  j["spec_hbar"] = snowflake_json(rep.spec_hbar);
  ordered_json ch = ordered_json::array(), cb = ordered_json::array();
  for (const auto& rc : rep.counts_h)
    ch.push_back({{"route", route_name(rc.route)}, {"value", count_str(rc.value)}});
  for (const auto& rc : rep.counts_hbar)
    cb.push_back({{"route", route_name(rc.route)}, {"value", count_str(rc.value)}});
  j["counts_h"] = ch;
  j["counts_hbar"] = cb;
  j["routes_agree"] = rep.routes_agree;
  j["m_h"] = count_str(rep.m_h);
  j["m_hbar"] = count_str(rep.m_hbar);
  j["vacuous"] = rep.vacuous;
  if (rep.measured) j["measured"] = ratio_str(*rep.measured);
  else j["measured"] = nullptr;
  j["formula"] = ratio_str(rep.formula);
  j["geometric"] = ratio_str(rep.geometric);
  j["ratio_pass"] = rep.ratio_pass;
  j["geometric_pass"] = rep.geometric_pass;
  ordered_json syms = ordered_json::array();
  for (const SymmetryCheck& chk : rep.symmetry) {
    ordered_json sj;
    sj["class"] = sym_name(chk.tag);
    sj["checked"] = chk.checked;
    if (chk.checked) {
      sj["fixed_h"] = count_str(chk.fixed_h);
      sj["fixed_hbar"] = count_str(chk.fixed_hbar);
      if (chk.formula) sj["formula"] = ratio_str(*chk.formula);
      else sj["formula"] = nullptr;
      sj["vacuous"] = chk.vacuous;
      sj["pass"] = chk.pass;
    }
    if (!chk.note.empty()) sj["note"] = chk.note;
    syms.push_back(sj);
  }
  j["symmetry"] = syms;
  j["pass"] = rep.pass;
  return j.dump(2);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t r = gen_();
  while (r < threshold) r = gen_();
  return r % bound;
}

int Rng::int_in(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::int_in: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

LabelSet random_labels(Rng& rng, int n) {
  LabelSet out;
  for (int v = 1; v <= n; ++v)
    if (rng.coin()) out.push_back(v);
  return out;
}

namespace {

void drop_label_1(LabelSet& s) {
  if (!s.empty() && s.front() == 1) s.erase(s.begin());
}

}  // namespace

SnowflakeSpec random_snowflake(Rng& rng, int n_max, int x_max, std::optional<SymTag> shape) {
  SnowflakeSpec s;
  s.n = rng.int_in(0, n_max);
  s.x = rng.int_in(0, x_max);
  if (!shape) {
    for (std::size_t i = 0; i < 6; ++i) s.A[i] = random_labels(rng, s.n);
    for (std::size_t i = 0; i < 6; ++i) s.B[i] = random_labels(rng, s.n);
    for (std::size_t i = 0; i < 6; ++i)
      if (labels_contain(s.A[i], 1)) drop_label_1(s.B[i]);
    return s;
  }
  switch (*shape) {
    case SymTag::r: {
      LabelSet a1 = random_labels(rng, s.n), a2 = random_labels(rng, s.n);
      LabelSet b1 = random_labels(rng, s.n), b2 = random_labels(rng, s.n);
      if (labels_contain(a1, 1)) drop_label_1(b1);
      if (labels_contain(a2, 1)) drop_label_1(b2);
      s.A = {a1, a2, a1, a2, a1, a2};
      s.B = {b1, b2, b1, b2, b1, b2};
      break;
    }
    case SymTag::v: {
      std::array<LabelSet, 6> a;
      for (std::size_t i = 0; i < 6; ++i) a[i] = random_labels(rng, s.n);
      drop_label_1(a[0]);  // paired with itself across the mirror
      drop_label_1(a[3]);
      if (labels_contain(a[1], 1)) drop_label_1(a[5]);
      if (labels_contain(a[2], 1)) drop_label_1(a[4]);
      s.A = a;
      s.B = {a[0], a[5], a[4], a[3], a[2], a[1]};
      break;
    }
    case SymTag::rv: {
      LabelSet a1 = random_labels(rng, s.n), a2 = random_labels(rng, s.n);
      drop_label_1(a1);
      drop_label_1(a2);
      s.A = {a1, a2, a1, a2, a1, a2};
      s.B = {a1, a2, a1, a2, a1, a2};
      break;
    }
  }
  return s;
}

LSpec random_lspec(Rng& rng, int n_max, int x_max) {
  LSpec s;
  s.n = rng.int_in(0, n_max);
  s.x = rng.int_in(0, x_max);
  s.P = random_labels(rng, s.n);
  s.Q = random_labels(rng, s.n);
  s.R = random_labels(rng, s.n);
  s.S = random_labels(rng, s.n);
  if (labels_contain(s.P, 1)) drop_label_1(s.Q);
  if (labels_contain(s.R, 1)) drop_label_1(s.S);
  s.barred = rng.coin();
  return s;
}

Region random_region(Rng& rng, std::size_t max_cells) {
  if (max_cells == 0) return Region();
  const std::size_t target = 1 + static_cast<std::size_t>(rng.below(max_cells));
  std::vector<TriCell> chosen = {up_cell(0, 0)};
  while (chosen.size() < target) {
    std::vector<TriCell> candidates;
    for (const TriCell& t : chosen)
      for (const TriCell& nb : neighbors(t))
        if (!std::binary_search(chosen.begin(), chosen.end(), nb)) candidates.push_back(nb);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    const TriCell pick = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), pick), pick);
  }
  const std::size_t kmax = chosen.size() / 4;
  const std::size_t knock = kmax ? static_cast<std::size_t>(rng.below(kmax + 1)) : 0;
  for (std::size_t i = 0; i < knock && !chosen.empty(); ++i)
    chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(rng.below(chosen.size())));
  return Region(std::move(chosen));
}

SweepOutcome run_sweep(const SweepOptions& opt, std::ostream& out, bool json) {
  Rng rng(opt.seed);
  SweepOutcome res;
  ordered_json jtrials = ordered_json::array();
  for (int trial = 0; trial < opt.trials; ++trial) {
    SnowflakeSpec spec = random_snowflake(rng, opt.n_max, opt.x_max, opt.shape);
    if (opt.require_nonvacuous) {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        if (count_determinant(build_snowflake(spec)) > 0) break;
        spec = random_snowflake(rng, opt.n_max, opt.x_max, opt.shape);
      }
    }
    const VerificationReport rep = verify(spec, opt.routes);
    if (rep.pass) ++res.passed;
    else ++res.failed;
    if (json) {
      jtrials.push_back({{"trial", trial},
                         {"spec", snowflake_json(spec)},
                         {"m_h", count_str(rep.m_h)},
                         {"m_hbar", count_str(rep.m_hbar)},
                         {"pass", rep.pass}});
    } else {
      out << "trial " << trial << ": " << spec_line(spec) << " | M(H)=" << count_str(rep.m_h)
          << " M(Hbar)=" << count_str(rep.m_hbar) << " | " << (rep.pass ? "PASS" : "FAIL")
          << "\n";
    }
  }
  if (json) {
    ordered_json j{{"trials", opt.trials},
                   {"seed", opt.seed},
                   {"passed", res.passed},
                   {"failed", res.failed},
                   {"results", jtrials}};
    out << j.dump(2) << "\n";
  } else {
    out << res.passed << "/" << opt.trials << " passed\n";
  }
  return res;
}

}  // namespace hexholes
