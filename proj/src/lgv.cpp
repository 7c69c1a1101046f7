#include "hexholes/lgv.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexholes {

Count pochhammer(long long a, long long k) {
  if (a < 1 || k < 0) throw std::invalid_argument("pochhammer: requires a >= 1, k >= 0");
  Count r = 1;
  for (long long i = 0; i < k; ++i) r *= a + i;
  return r;
}

Count path_count(const LatticePoint& from, const LatticePoint& to) {
  const long long dx = to.x - from.x;
  const long long dy = from.y - to.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

Count lgv_determinant(const std::vector<LatticePoint>& starts,
                      const std::vector<LatticePoint>& ends) {
  if (starts.size() != ends.size())
    throw std::invalid_argument("lgv_determinant: start/end count mismatch");
  Matrix m(starts.size(), std::vector<Count>(starts.size()));
  for (std::size_t i = 0; i < starts.size(); ++i)
    for (std::size_t j = 0; j < ends.size(); ++j) m[i][j] = path_count(starts[i], ends[j]);
  return det_exact(std::move(m));
}

namespace {

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet full_range(int n) {
  LabelSet out;
  for (int v = 1; v <= n; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::vector<UClass> u_classes(const LSpec& s) {
  validate_lspec(s);
  const LabelSet all = full_range(s.n);
  const LabelSet mid1_fixed = set_difference(set_intersection(s.R, all), s.Q);  // R \ Q
  const LabelSet mid2_fixed = set_difference(s.Q, s.R);                         // Q \ R
  const long long usize = static_cast<long long>(s.P.size()) -
                          static_cast<long long>(mid1_fixed.size());
  std::vector<UClass> out;
  if (usize < 0) return out;
  if (mid2_fixed.size() + static_cast<std::size_t>(usize) != s.S.size()) return out;

  LabelSet base = set_difference(set_difference(all, s.Q), s.R);
  if (static_cast<std::size_t>(usize) > base.size()) return out;

  // lexicographic enumeration of usize-subsets of base
  std::vector<std::size_t> idx(static_cast<std::size_t>(usize));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  while (true) {
    UClass cls;
    for (std::size_t i : idx) cls.u.push_back(base[i]);
    cls.mid_first = labels_union(mid1_fixed, cls.u);
    cls.mid_second = labels_union(mid2_fixed, cls.u);
    out.push_back(std::move(cls));
    // next combination
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == base.size() - idx.size() + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::pair<PathSystem, PathSystem> l_path_systems(const LSpec& s, const UClass& cls) {
  const long long x = s.x;
  PathSystem first, second;
  for (int p : s.P)
    first.starts.push_back(s.barred ? LatticePoint{1, x + p} : LatticePoint{x + 1, x + p});
  for (int m : cls.mid_first) first.ends.push_back(LatticePoint{x + m, x + m});
  for (int m : cls.mid_second) second.starts.push_back(LatticePoint{x + m, x + m});
  for (int t : s.S)
    second.ends.push_back(s.barred ? LatticePoint{x + t, x + 1} : LatticePoint{x + t, 1});
  return {first, second};
}

std::vector<USummand> count_L_lgv_terms(const LSpec& s) {
  std::vector<USummand> out;
  for (const UClass& cls : u_classes(s)) {
    const auto [first, second] = l_path_systems(s, cls);
    USummand summand;
    summand.cls = cls;
    summand.first = lgv_determinant(first.starts, first.ends);
    summand.second = lgv_determinant(second.starts, second.ends);
    if (summand.first < 0 || summand.second < 0)
      throw std::logic_error("count_L_lgv_terms: negative stage determinant");
    summand.term = summand.first * summand.second;
    out.push_back(std::move(summand));
  }
  return out;
}

Count count_L_lgv(const LSpec& s) {
  Count total = 0;
  for (const USummand& summand : count_L_lgv_terms(s)) total += summand.term;
  return total;
}

Ratio ratio_rhs_L(const LSpec& s) {
  validate_lspec(s);
  Ratio out = 1;
  for (int p : s.P) out *= Ratio(pochhammer(p, s.x));
  for (int q : s.Q) out *= Ratio(pochhammer(q, s.x));
  for (int r : s.R) out /= Ratio(pochhammer(r, s.x));
  for (int t : s.S) out /= Ratio(pochhammer(t, s.x));
  return out;
}

bool factorization_check(const std::vector<int>& p, const std::vector<int>& r, int x) {
  if (p.size() != r.size()) throw std::invalid_argument("factorization_check: size mismatch");
  if (x < 0) throw std::invalid_argument("factorization_check: x must be nonnegative");
  const auto check_sorted = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1) throw std::invalid_argument("factorization_check: labels must be positive");
      if (i > 0 && v[i] <= v[i - 1])
        throw std::invalid_argument("factorization_check: labels must strictly increase");
    }
  };
  check_sorted(p);
  check_sorted(r);

  const std::size_t k = p.size();
  Matrix shifted(k, std::vector<Count>(k)), plain(k, std::vector<Count>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      shifted[i][j] = binomial(x + p[i] - 1, x + r[j] - 1);
      plain[i][j] = binomial(p[i] - 1, r[j] - 1);
    }
  Count lhs = det_exact(std::move(shifted));
  Count rhs = det_exact(std::move(plain));
  for (std::size_t i = 0; i < k; ++i) {
    lhs *= pochhammer(r[i], x);
    rhs *= pochhammer(p[i], x);
  }
  return lhs == rhs;
}

}  // namespace hexholes
