#include "hcob/equivariant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hcob/errors.hpp"

namespace hcob {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

using TowerSet = std::set<std::pair<int, int>>;  // (a, b)

void toggle(TowerSet& s, std::pair<int, int> e) {
  if (!s.insert(e).second) s.erase(e);
}

class TowerMap {
 public:
  explicit TowerMap(const PinModel& m) : images_(m.finite_size()) {
    for (const auto& e : m.to_tower) toggle(images_[e.from], {e.a, e.b});
  }

  TowerSet apply(const BitVector& x) const {
    TowerSet out;
    for (auto i : x.support())
      for (const auto& e : images_[i]) toggle(out, e);
    return out;
  }

 private:
  std::vector<TowerSet> images_;
};

TowerSet tower_q(const TowerSet& s) {
  TowerSet out;
  for (auto [a, b] : s)
    if (a > 0) toggle(out, {a - 1, b});
  return out;
}

TowerSet tower_v(const TowerSet& s) {
  TowerSet out;
  for (auto [a, b] : s)
    if (b > 0) toggle(out, {a, b - 1});
  return out;
}

bool homogeneous(const F2Matrix& op, const std::vector<int>& deg, int shift) {
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (auto c : op.row(r).support())
      if (deg[r] != deg[c] + shift) return false;
  return true;
}

void check_shape(const F2Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n)
    throw InputError(std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) throw InputError("one label per finite generator is required");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw InputError("duplicate generator label '" + l + "'");
}

std::pair<int, int> finite_range(const std::vector<int>& deg, std::optional<int> n) {
  int lo = n.value_or(0), hi = n.value_or(0);
  if (!n && !deg.empty()) lo = hi = deg.front();
  for (int d : deg) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

BitVector sum_of(const std::vector<BitVector>& reps, const BitVector& coords, std::size_t ambient) {
  BitVector z(ambient);
  for (auto i : coords.support()) z ^= reps[i];
  return z;
}

}  // namespace

PinValidation validate(const PinModel& m) {
  const std::size_t n = m.finite_size();
  check_labels(m.labels, n);
  check_shape(m.q, n, "q");
  check_shape(m.v, n, "v");
  check_shape(m.d_fin, n, "d_fin");
  std::set<TowerEdge, bool (*)(const TowerEdge&, const TowerEdge&)> edges(
      [](const TowerEdge& x, const TowerEdge& y) {
        return std::tie(x.from, x.a, x.b) < std::tie(y.from, y.a, y.b);
      });
  for (const auto& e : m.to_tower) {
    if (e.from >= n) throw InputError("tower edge from an unknown generator");
    if (e.a < 0 || e.a > 2) throw InputError("tower edge q-exponent must be 0, 1 or 2");
    if (e.b < 0) throw InputError("tower edge v-exponent must be nonnegative");
    if (!edges.insert(e).second) throw InputError("duplicate tower edge");
  }
  if (!m.to_tower.empty() && !m.reducible_degree) throw InputError("tower edges given but no reducible degree");

  PinValidation out;
  auto structural = [&](bool ok, const std::string& what) {
    if (!ok) {
      out.structural = false;
      out.problems.push_back(what);
    }
  };
  structural(homogeneous(m.q, m.degrees, -1), "q is not homogeneous of degree -1");
  structural(homogeneous(m.v, m.degrees, -4), "v is not homogeneous of degree -4");
  structural(homogeneous(m.d_fin, m.degrees, -1), "d_fin is not homogeneous of degree -1");
  for (const auto& e : m.to_tower)
    structural(m.degrees[e.from] - 1 == *m.reducible_degree + e.a + 4 * e.b,
               "tower edge from '" + m.labels[e.from] + "' does not lower degree by one");
  structural((m.q * m.q * m.q).is_zero(), "q^3 != 0");
  structural(m.q * m.v == m.v * m.q, "qv != vq");
  structural((m.d_fin * m.d_fin).is_zero(), "D^2 != 0 on the finite part");

  const TowerMap t(m);
  bool tower_d2 = true, q_ok = m.d_fin * m.q == m.q * m.d_fin, v_ok = m.d_fin * m.v == m.v * m.d_fin;
  for (std::size_t j = 0; j < n; ++j) {
    const BitVector ej = BitVector::unit(n, j);
    if (!t.apply(m.d_fin * ej).empty()) tower_d2 = false;
    const TowerSet image = t.apply(ej);
    if (t.apply(m.q * ej) != tower_q(image)) q_ok = false;
    if (t.apply(m.v * ej) != tower_v(image)) v_ok = false;
  }
  structural(tower_d2, "D^2 != 0 through the towers");
  if (!q_ok) {
    out.q_commutes = false;
    out.problems.push_back("D does not commute with q");
  }
  if (!v_ok) {
    out.v_commutes = false;
    out.problems.push_back("D does not commute with v");
  }
  return out;
}

Window default_window(const PinModel& m, int margin) {
  auto [lo, hi] = finite_range(m.degrees, m.reducible_degree);
  return {lo - 4, hi + 4 * (margin + 2)};
}

Materialized materialize(const PinModel& m, Window w, int margin) {
  const PinValidation val = validate(m);
  if (!val.structural) throw ModelInvalid("model is not a chain complex: " + val.problems.front());
  if (margin < 2) throw InputError("margin must be at least 2");
  const Window need = default_window(m, margin);
  if (w.lo > need.lo || w.hi < need.hi)
    throw InputError("window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "] too small; need lo <= " +
                     std::to_string(need.lo) + " and hi >= " + std::to_string(need.hi));

  Materialized out;
  out.window = w;
  out.margin = margin;
  out.reducible_degree = m.reducible_degree;
  const std::size_t f = m.finite_size();
  std::map<std::pair<int, int>, std::size_t> tower_index;
  std::vector<int> degree = m.degrees;
  out.labels = m.labels;
  if (m.reducible_degree) {
    const int n = *m.reducible_degree;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; n + a + 4 * b <= w.hi; ++b) {
        tower_index[{a, b}] = degree.size();
        degree.push_back(n + a + 4 * b);
        out.labels.push_back("q" + std::to_string(a) + "v" + std::to_string(b));
      }
  }
  const std::size_t total = degree.size();
  F2Matrix d(total, total), q(total, total), v(total, total);
  for (std::size_t r = 0; r < f; ++r)
    for (std::size_t c = 0; c < f; ++c) {
      if (m.d_fin.get(r, c)) d.set(r, c);
      if (m.q.get(r, c)) q.set(r, c);
      if (m.v.get(r, c)) v.set(r, c);
    }
  for (const auto& e : m.to_tower) {
    auto it = tower_index.find({e.a, e.b});
    check_internal(it != tower_index.end(), "tower edge lands above the window");
    d.flip(it->second, e.from);
  }
  for (const auto& [ab, idx] : tower_index) {
    auto [a, b] = ab;
    if (a > 0) q.set(tower_index.at({a - 1, b}), idx);
    if (b > 0) v.set(tower_index.at({a, b - 1}), idx);
  }
  check_internal((d * d).is_zero(), "materialized D^2 != 0");
  if (val.q_commutes) check_internal(d * q == q * d, "materialized Dq != qD");
  if (val.v_commutes) check_internal(d * v == v * d, "materialized Dv != vD");

  out.complex = GradedComplex{std::move(degree), std::move(d)};
  out.q = GradedOperator{std::move(q), -1};
  out.v = GradedOperator{std::move(v), -4};
  return out;
}

std::size_t BorelHomology::v_power_rank(int k, int d) const { return homology.power_rank(chains.v, k, d + 4 * k); }

BorelHomology borel_homology(const PinModel& m, const PinOptions& opts) {
  const Window w = opts.window.value_or(default_window(m, opts.margin));
  Materialized chains = materialize(m, w, opts.margin);
  GradedHomology h(chains.complex);
  return BorelHomology{std::move(chains), std::move(h), validate(m)};
}

TowerBottoms tower_bottoms(const BorelHomology& h) {
  if (!h.chains.reducible_degree) throw ModelInvalid("model has no reducible tower");
  if (!h.validation.v_commutes) throw ModelInvalid("D does not commute with v; towers are undefined");
  const int n = *h.chains.reducible_degree;
  const int top = h.stable_top();
  std::array<int, 3> bottoms{};
  for (int r = 0; r < 3; ++r) {
    std::optional<int> found;
    for (int d = h.chains.window.lo; d + 4 <= top && !found; ++d) {
      if (mod(d - n - r, 4) != 0) continue;
      if (h.v_power_rank((top - d) / 4, d) > 0) found = d;
    }
    if (!found) throw ModelInvalid("v-tower in degrees n+" + std::to_string(r) + " mod 4 does not survive");
    bottoms[r] = *found;
  }
  return TowerBottoms{bottoms[0], bottoms[1], bottoms[2], h.chains.window, h.chains.margin};
}

TowerBottoms tower_bottoms(const PinModel& m, const PinOptions& opts) {
  const Window w = opts.window.value_or(default_window(m, opts.margin));
  const TowerBottoms first = tower_bottoms(borel_homology(m, {w, opts.margin}));
  const TowerBottoms second = tower_bottoms(borel_homology(m, {Window{w.lo, w.hi + 8}, opts.margin + 2}));
  check_internal(first.A == second.A && first.B == second.B && first.C == second.C,
                 "tower bottoms depend on the window");
  return first;
}

AbcReport abc(const PinModel& m, const PinOptions& opts) {
  const PinValidation val = validate(m);
  if (!val.module_compatible()) throw ModelInvalid("model is not an F[q,v]-module complex: " + val.problems.front());
  const TowerBottoms t = tower_bottoms(m, opts);
  if (mod(t.A, 2) != 0) throw ModelInvalid("reducible degree must be even");
  AbcReport r;
  r.A = t.A;
  r.B = t.B;
  r.C = t.C;
  r.alpha = t.A / 2;
  r.beta = (t.B - 1) / 2;
  r.gamma = (t.C - 2) / 2;
  r.mu = mod(r.alpha, 2);
  r.window = t.window;
  r.margin = t.margin;
  check_internal(mod(r.A, 4) == 2 * r.mu && mod(r.B, 4) == 2 * r.mu + 1 && mod(r.C - 2, 4) == 2 * r.mu,
                 "tower bottoms have inconsistent residues");
  check_internal(r.alpha >= r.beta && r.beta >= r.gamma, "alpha >= beta >= gamma fails on a module complex");
  return r;
}

Triple abc_of_reverse(const Triple& t) { return {-t.gamma, -t.beta, -t.alpha}; }

Triple abc_of_reverse(const PinModel& m, const PinOptions& opts) {
  const AbcReport r = abc(m, opts);
  return abc_of_reverse(Triple{r.alpha, r.beta, r.gamma});
}

TowerTops coborel_tower_tops(const PinModel& m, const PinOptions& opts) {
  const PinValidation val = validate(m);
  if (!val.structural || !val.v_commutes) throw ModelInvalid("dual towers need D^2 = 0 and Dv = vD");
  if (!m.reducible_degree) throw ModelInvalid("model has no reducible tower");
  const Window w = opts.window.value_or(default_window(m, opts.margin));
  const Materialized chains = materialize(m, w, opts.margin);

  GradedComplex dual;
  for (int d : chains.complex.degree) dual.degree.push_back(-d);
  dual.differential = chains.complex.differential.transpose();
  const GradedOperator vt{chains.v.matrix.transpose(), -4};
  const GradedHomology h(dual);

  const int n = *m.reducible_degree;
  const int floor = -w.hi + 4 * opts.margin;
  std::array<int, 3> tops{};
  for (int r = 0; r < 3; ++r) {
    std::optional<int> found;
    for (int d = -w.lo; d - 4 >= floor && !found; --d) {
      if (mod(d + n + r, 4) != 0) continue;
      if (h.power_rank(vt, (d - floor) / 4, d) > 0) found = d;
    }
    if (!found) throw ModelInvalid("dual v-tower missing");
    tops[r] = *found;
  }
  return TowerTops{tops[0], tops[1], tops[2]};
}

Triple reverse_from_tops(const TowerTops& t) {
  const int a = t.C + 2, b = t.B + 2, c = t.A + 2;
  return {a / 2, (b - 1) / 2, (c - 2) / 2};
}

LocalizationReport localization_check(const PinModel& m, const PinOptions& opts) {
  const PinValidation val = validate(m);
  if (!val.module_compatible()) throw ModelInvalid("model is not an F[q,v]-module complex: " + val.problems.front());
  Window w = opts.window.value_or(default_window(m, opts.margin));
  w.hi += 8;
  const BorelHomology h = borel_homology(m, {w, opts.margin});
  const int top = h.stable_top();

  LocalizationReport out;
  out.has_reducible = m.reducible_degree.has_value();
  const int anchor = m.reducible_degree.value_or(0);
  int s = top - 7;
  s -= mod(s - anchor, 4);
  out.block_start = s;

  std::array<std::vector<BitVector>, 4> localized;
  for (int i = 0; i < 4; ++i) {
    const int d = s + i;
    localized[i] = h.homology.power_image(h.chains.v, (top - d) / 4, d);
    out.stable[i] = localized[i].size();
  }
  if (!out.has_reducible) {
    out.q_iso = true;
    out.pass = std::all_of(out.stable.begin(), out.stable.end(), [](std::size_t x) { return x == 0; });
    return out;
  }

  const std::size_t ambient = h.chains.complex.size();
  out.q_iso = out.stable[0] == 1 && out.stable[1] == 1 && out.stable[2] == 1;
  for (int i = 2; i >= 1 && out.q_iso; --i) {
    const int d = s + i;
    const BitVector z = sum_of(h.homology.representatives(d), localized[i][0], ambient);
    const BitVector image = h.homology.coordinates(h.chains.q.matrix * z, d - 1);
    Echelon target(image.size());
    for (const auto& x : localized[i - 1]) target.insert(x);
    if (image.none() || !target.contains(image)) out.q_iso = false;
  }
  out.pass = out.q_iso && out.stable[3] == 0;
  return out;
}

int rokhlin_check(const AbcReport& r) {
  if (mod(r.alpha - r.beta, 2) != 0 || mod(r.beta - r.gamma, 2) != 0)
    throw ModelInvalid("alpha, beta, gamma disagree mod 2");
  return mod(r.beta, 2);
}

// --- S^1 ---------------------------------------------------------------------

std::vector<std::string> validate(const SOneModel& m) {
  const std::size_t n = m.finite_size();
  check_labels(m.labels, n);
  check_shape(m.u, n, "U");
  check_shape(m.d_fin, n, "d_fin");
  std::set<std::pair<std::size_t, int>> seen;
  for (const auto& [from, b] : m.to_tower) {
    if (from >= n) throw InputError("tower edge from an unknown generator");
    if (b < 0) throw InputError("tower edge U-exponent must be nonnegative");
    if (!seen.insert({from, b}).second) throw InputError("duplicate tower edge");
  }

  std::vector<std::string> problems;
  if (!homogeneous(m.u, m.degrees, -2)) problems.push_back("U is not homogeneous of degree -2");
  if (!homogeneous(m.d_fin, m.degrees, -1)) problems.push_back("d_fin is not homogeneous of degree -1");
  for (const auto& [from, b] : m.to_tower)
    if (m.degrees[from] - 1 != m.reducible_degree + 2 * b)
      problems.push_back("tower edge from '" + m.labels[from] + "' does not lower degree by one");
  if (!(m.d_fin * m.d_fin).is_zero()) problems.push_back("D^2 != 0 on the finite part");

  std::vector<std::set<int>> image(n);
  for (const auto& [from, b] : m.to_tower) image[from].insert(b);
  auto apply = [&](const BitVector& x) {
    std::set<int> out;
    for (auto i : x.support())
      for (int b : image[i])
        if (!out.insert(b).second) out.erase(b);
    return out;
  };
  bool d2 = true, u_ok = m.d_fin * m.u == m.u * m.d_fin;
  for (std::size_t j = 0; j < n; ++j) {
    const BitVector ej = BitVector::unit(n, j);
    if (!apply(m.d_fin * ej).empty()) d2 = false;
    std::set<int> lowered;
    for (int b : image[j])
      if (b > 0) lowered.insert(b - 1);
    if (apply(m.u * ej) != lowered) u_ok = false;
  }
  if (!d2) problems.push_back("D^2 != 0 through the tower");
  if (!u_ok) problems.push_back("D does not commute with U");
  return problems;
}

namespace {

int s1_bottom(const SOneModel& m, Window w, int margin) {
  const int n = m.reducible_degree;
  const std::size_t f = m.finite_size();
  std::vector<int> degree = m.degrees;
  std::map<int, std::size_t> tower_index;
  for (int b = 0; n + 2 * b <= w.hi; ++b) {
    tower_index[b] = degree.size();
    degree.push_back(n + 2 * b);
  }
  const std::size_t total = degree.size();
  F2Matrix d(total, total), u(total, total);
  for (std::size_t r = 0; r < f; ++r)
    for (std::size_t c = 0; c < f; ++c) {
      if (m.d_fin.get(r, c)) d.set(r, c);
      if (m.u.get(r, c)) u.set(r, c);
    }
  for (const auto& [from, b] : m.to_tower) d.flip(tower_index.at(b), from);
  for (const auto& [b, idx] : tower_index)
    if (b > 0) u.set(tower_index.at(b - 1), idx);
  check_internal((d * d).is_zero(), "materialized D^2 != 0");
  check_internal(d * u == u * d, "materialized DU != UD");

  const GradedHomology h(GradedComplex{degree, d});
  const GradedOperator op{u, -2};
  const int top = w.hi - 2 * margin;
  std::optional<int> bottom;
  for (int x = w.lo; x + 2 <= top; ++x) {
    const int k = (top - x) / 2;
    if (h.power_rank(op, k, x + 2 * k) == 0) continue;
    if (mod(x - n, 2) != 0) throw ModelInvalid("U-tower in the wrong parity");
    if (!bottom) bottom = x;
  }
  if (!bottom) throw ModelInvalid("no U-tower survives");
  return *bottom;
}

}  // namespace

DeltaReport delta_invariant(const SOneModel& m, std::optional<Window> window, int margin) {
  const auto problems = validate(m);
  if (!problems.empty()) throw ModelInvalid("S1 model invalid: " + problems.front());
  if (margin < 2) throw InputError("margin must be at least 2");
  auto [lo, hi] = finite_range(m.degrees, m.reducible_degree);
  const Window need{lo - 2, hi + 2 * (margin + 2)};
  const Window w = window.value_or(need);
  if (w.lo > need.lo || w.hi < need.hi) throw InputError("window too small for the S1 model");

  const int bottom = s1_bottom(m, w, margin);
  check_internal(bottom == s1_bottom(m, Window{w.lo, w.hi + 4}, margin + 2), "U-tower bottom depends on the window");
  return DeltaReport{bottom, Rational(bottom, 2), w, margin};
}

}  // namespace hcob
