#include "hcob/involutive.hpp"

#include <algorithm>
#include <set>

#include "hcob/errors.hpp"

namespace hcob {

namespace {

int mod2(int a) { return ((a % 2) + 2) % 2; }

BitVector flatten(const F2Matrix& m) {
  const std::size_t n = m.cols();
  BitVector out(m.rows() * n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto c : m.row(r).support()) out.set(r * n + c);
  return out;
}

}  // namespace

int UComplex::min_degree() const { return degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end()); }
int UComplex::max_degree() const { return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end()); }

std::optional<int> u_power(const UComplex& c, std::size_t from, std::size_t to, int shift) {
  const int diff = c.degrees[to] - c.degrees[from] - shift;
  if (diff < 0 || diff % 2 != 0) return std::nullopt;
  return diff / 2;
}

void check_map(const UComplex& c, const F2Matrix& m, int shift, const std::string& name) {
  const std::size_t n = c.size();
  if (m.rows() != n || m.cols() != n) throw InputError(name + " must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t y = 0; y < n; ++y)
    for (auto x : m.row(y).support())
      if (!u_power(c, x, y, shift))
        throw InputError(name + " entry " + c.labels[x] + " -> " + c.labels[y] + " has no valid U-power");
}

void validate(const UComplex& c) {
  if (c.labels.size() != c.size()) throw InputError("one label per generator is required");
  std::set<std::string> seen;
  for (const auto& l : c.labels)
    if (!seen.insert(l).second) throw InputError("duplicate generator label '" + l + "'");
  check_map(c, c.differential, -1, "differential");
  if (!(c.differential * c.differential).is_zero()) throw ModelInvalid("differential does not square to zero");
}

Window plus_default_window(const UComplex& c, int margin) {
  return {c.min_degree(), c.max_degree() + 2 * (margin + 1)};
}

PlusWindow plus_window(const UComplex& c, Window w, int margin) {
  if (margin < 2) throw InputError("margin must be at least 2");
  const Window need = plus_default_window(c, margin);
  if (w.lo > need.lo || w.hi < need.hi)
    throw InputError("window [" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "] too small; need lo <= " +
                     std::to_string(need.lo) + " and hi >= " + std::to_string(need.hi));
  PlusWindow p;
  p.window = w;
  p.margin = margin;
  std::vector<int> degree;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (int k = 0; c.degrees[x] + 2 * k <= w.hi; ++k) {
      p.basis.push_back({x, k});
      degree.push_back(c.degrees[x] + 2 * k);
    }
  F2Matrix u(degree.size(), degree.size());
  for (std::size_t i = 0; i < p.basis.size(); ++i)
    if (p.basis[i].second > 0) u.set(i - 1, i);  // (x, k-1) is stored just before (x, k)
  p.complex.degree = std::move(degree);
  p.u = GradedOperator{std::move(u), -2};
  p.complex.differential = lift_to_plus(c, p, c.differential, -1);
  check_internal((p.complex.differential * p.complex.differential).is_zero(), "plus differential squares to nonzero");
  check_internal(p.complex.differential * p.u.matrix == p.u.matrix * p.complex.differential, "U is not a chain map");
  return p;
}

F2Matrix lift_to_plus(const UComplex& c, const PlusWindow& p, const F2Matrix& map, int shift) {
  check_internal(shift <= 0, "only maps of nonpositive degree lift to the window");
  // Index of (x, 0); the rows for x follow it in order of k.
  std::vector<std::size_t> start(c.size());
  for (std::size_t i = 0; i < p.basis.size(); ++i)
    if (p.basis[i].second == 0) start[p.basis[i].first] = i;

  F2Matrix out(p.basis.size(), p.basis.size());
  const F2Matrix t = map.transpose();
  for (std::size_t i = 0; i < p.basis.size(); ++i) {
    const auto [x, k] = p.basis[i];
    for (auto y : t.row(x).support()) {
      const auto m = u_power(c, x, y, shift);
      check_internal(m.has_value(), "map entry without a U-power");
      if (*m > k) continue;
      out.flip(start[y] + static_cast<std::size_t>(k - *m), i);
    }
  }
  return out;
}

std::vector<UTower> plus_towers(const UComplex& c, Window w, int margin) {
  const PlusWindow p = plus_window(c, w, margin);
  const GradedHomology h(p.complex);
  const int top = w.hi - 2 * margin;
  auto loc = [&](int d) {
    const int k = (top - d) / 2;
    return h.power_rank(p.u, k, d + 2 * k);
  };
  std::vector<UTower> out;
  for (int parity = 0; parity < 2; ++parity) {
    const int probe = mod2(top - 2 - parity) == 0 ? top - 2 : top - 3;
    const std::size_t rank = loc(probe);
    if (rank == 0) continue;
    UTower t{parity, probe, rank};
    for (int d = w.lo; d <= probe; ++d)
      if (mod2(d) == parity && loc(d) > 0) {
        t.bottom = d;
        break;
      }
    out.push_back(t);
  }
  return out;
}

namespace {

int single_tower_bottom(const UComplex& c, Window w, int margin) {
  const auto towers = plus_towers(c, w, margin);
  if (towers.size() != 1 || towers[0].rank != 1)
    throw ModelInvalid("plus homology must have exactly one U-tower, found " + std::to_string(towers.size()));
  return towers[0].bottom;
}

}  // namespace

DReport d_invariant(const UComplex& c, const UOptions& opts) {
  validate(c);
  const Window w = opts.window.value_or(plus_default_window(c, opts.margin));
  const int d = single_tower_bottom(c, w, opts.margin);
  check_internal(d == single_tower_bottom(c, Window{w.lo, w.hi + 4}, opts.margin + 2), "d depends on the window");
  return DReport{d, w, opts.margin};
}

IotaCheck check_iota(const UComplex& c, const F2Matrix& iota) {
  check_map(c, iota, 0, "iota");
  IotaCheck out;
  const F2Matrix& d = c.differential;
  out.chain_map = iota * d == d * iota;

  const std::size_t n = c.size();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (y, x): H x contains U^k y
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (u_power(c, x, y, 1)) unknowns.push_back({y, x});

  std::vector<BitVector> columns;
  for (const auto& [y, x] : unknowns) {
    F2Matrix e(n, n);
    e.set(y, x);
    columns.push_back(flatten(d * e + e * d));
  }
  const F2Matrix system = F2Matrix::from_columns(n * n, columns);
  const BitVector target = flatten(iota * iota + F2Matrix::identity(n));
  if (auto sol = solve_f2(system, target)) {
    out.squares_to_identity = true;
    F2Matrix hmat(n, n);
    for (auto i : sol->support()) hmat.set(unknowns[i].first, unknowns[i].second);
    check_internal(d * hmat + hmat * d == iota * iota + F2Matrix::identity(n), "homotopy solution does not check");
    out.homotopy = std::move(hmat);
  }
  return out;
}

void validate_iota(const UComplex& c, const F2Matrix& iota) {
  const IotaCheck r = check_iota(c, iota);
  if (!r.chain_map) throw InputError("iota is not a chain map");
  if (!r.squares_to_identity) throw InputError("iota^2 is not homotopic to the identity");
}

ConeComplex cone_iota(const UComplex& c, const F2Matrix& iota) {
  validate(c);
  validate_iota(c, iota);
  const std::size_t n = c.size();
  ConeComplex k;
  k.base = c;
  k.iota = iota;
  k.complex.degrees.resize(2 * n);
  k.complex.labels.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    k.complex.degrees[i] = c.degrees[i] + 1;
    k.complex.degrees[n + i] = c.degrees[i];
    k.complex.labels[i] = c.labels[i];
    k.complex.labels[n + i] = "Q." + c.labels[i];
  }
  F2Matrix d(2 * n, 2 * n), q(2 * n, 2 * n);
  const F2Matrix one_plus = iota + F2Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto col : c.differential.row(r).support()) {
      d.set(r, col);
      d.set(n + r, n + col);
    }
    for (auto col : one_plus.row(r).support()) d.set(n + r, col);
    q.set(n + r, r);
  }
  k.complex.differential = std::move(d);
  k.q = std::move(q);
  validate(k.complex);
  check_map(k.complex, k.q, -1, "Q");
  check_internal((k.q * k.q).is_zero(), "Q^2 != 0 on the cone");
  check_internal(k.q * k.complex.differential == k.complex.differential * k.q, "Q is not a chain map");
  return k;
}

namespace {

std::pair<int, int> cone_bottoms(const ConeComplex& k, Window w, int margin, int d) {
  const auto towers = plus_towers(k.complex, w, margin);
  if (towers.size() != 2 || towers[0].rank != 1 || towers[1].rank != 1)
    throw ModelInvalid("HFI+ must have one U-tower in each parity");
  const UTower& same = towers[0].parity == mod2(d) ? towers[0] : towers[1];
  const UTower& other = towers[0].parity == mod2(d) ? towers[1] : towers[0];
  return {same.bottom, other.bottom - 1};
}

}  // namespace

InvolutiveReport involutive_correction_terms(const ConeComplex& k, const UOptions& opts) {
  const Window w = opts.window.value_or(plus_default_window(k.complex, opts.margin));
  const int d = d_invariant(k.base, {w, opts.margin}).d;
  const auto [bar, under] = cone_bottoms(k, w, opts.margin, d);
  const auto again = cone_bottoms(k, Window{w.lo, w.hi + 4}, opts.margin + 2, d);
  check_internal(again.first == bar && again.second == under, "involutive correction terms depend on the window");

  InvolutiveReport r;
  r.d = d;
  r.d_bar = bar;
  r.d_under = under;
  r.ordered = under <= d && d <= bar;
  r.congruent = mod2(d - bar) == 0 && mod2(d - under) == 0;
  check_internal(r.congruent, "tower parities are inconsistent");
  r.window = w;
  r.margin = opts.margin;
  return r;
}

bool iota_is_identity_on_tower(const UComplex& c, const F2Matrix& iota, const UOptions& opts) {
  check_map(c, iota, 0, "iota");
  const Window w = opts.window.value_or(plus_default_window(c, opts.margin));
  const PlusWindow p = plus_window(c, w, opts.margin);
  const GradedHomology h(p.complex);
  const F2Matrix lifted = lift_to_plus(c, p, iota, 0);
  const int top = w.hi - 2 * opts.margin;
  for (int s : {top - 2, top - 3}) {
    const int k = (top - s) / 2;
    for (const auto& coords : h.power_image(p.u, k, s)) {
      BitVector z(p.complex.size());
      for (auto i : coords.support()) z ^= h.representatives(s)[i];
      const BitVector image = lifted * z;
      check_internal(h.is_cycle(image), "iota does not preserve cycles");
      if (h.coordinates(image, s) != coords) return false;
    }
  }
  return true;
}

V0Triple v0_triple(long long p, const Rational& d, const Rational& d_bar, const Rational& d_under) {
  if (p <= 0) throw InputError("surgery coefficient p must be positive");
  const Rational base(p - 1, 8);
  return {base - d / 2, base - d_bar / 2, base - d_under / 2};
}

V0Triple v0_triple(long long p, const InvolutiveReport& r) { return v0_triple(p, r.d, r.d_bar, r.d_under); }

DTriple d_from_v0(long long p, const V0Triple& v) {
  if (p <= 0) throw InputError("surgery coefficient p must be positive");
  const Rational base(p - 1, 8);
  return {2 * (base - v.v0), 2 * (base - v.v0_bar), 2 * (base - v.v0_under)};
}

}  // namespace hcob
