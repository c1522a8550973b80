#include "hcob/knot.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

#include "hcob/errors.hpp"

namespace hcob {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

IntMatrix minus_t_transpose(const IntMatrix& v, const Integer& t) {
  IntMatrix m(v.rows(), v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) m(i, j) = v(i, j) - t * v(j, i);
  return m;
}

// Coefficients (constant term first) of the polynomial of degree < xs.size()
// through the points (xs[i], ys[i]). Newton form, expanded.
std::vector<Rational> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
  std::vector<Rational> poly(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (t - xs[k]) + dd[k]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rational(xs[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs.push_back(c);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  if (exponent < low || exponent > high()) return 0;
  return coeffs[static_cast<std::size_t>(exponent - low)];
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

Integer LaurentPoly::at_minus_one() const {
  Integer s = 0;
  for (int e = low; e <= high(); ++e) s += (e % 2 == 0) ? coefficient(e) : Integer(-coefficient(e));
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (int e = low; e <= high(); ++e)
    if (coefficient(e) != coefficient(-e)) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high(); e >= low; --e) {
    const Integer c = coefficient(e);
    if (c == 0) continue;
    const Integer a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1 || e == 0) out += a.str();
    if (e != 0) out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

void validate_seifert(const IntMatrix& v) {
  if (v.rows() != v.cols()) throw InputError("Seifert matrix must be square");
  if (v.rows() % 2 != 0) throw InputError("Seifert matrix must have even size");
  const Integer det = determinant(v - v.transpose());
  if (abs(det) != 1) throw InputError("V - V^T must be unimodular, det = " + det.str());
}

int signature(const IntMatrix& v) {
  validate_seifert(v);
  const std::size_t n = v.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(v(i, j) + v(j, i));

  auto add = [&](std::size_t dst, std::size_t src, const Rational& k) {  // row and column op
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += k * a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += k * a[i][src];
  };
  auto swap = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: make one from an off-diagonal pair.
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (a[r][c] != 0) {
            i = r;
            j = c;
            break;
          }
      if (i == n) break;  // remaining block is zero
      add(i, j, Rational(1));
      p = i;
    }
    swap(k, p);
    for (std::size_t r = k + 1; r < n; ++r)
      if (a[r][k] != 0) add(r, k, -a[r][k] / a[k][k]);
    sig += a[k][k] > 0 ? 1 : -1;
  }
  check_internal(sig % 2 == 0, "odd signature from a valid Seifert matrix");
  return sig;
}

LaurentPoly alexander(const IntMatrix& v) {
  validate_seifert(v);
  const std::size_t n = v.rows();
  std::vector<Integer> xs, ys;
  for (std::size_t i = 0; i <= n; ++i) {
    xs.push_back(Integer(i));
    ys.push_back(determinant(minus_t_transpose(v, Integer(i))));
  }
  LaurentPoly p;
  for (const auto& c : interpolate(xs, ys)) {
    check_internal(denominator(c) == 1, "Alexander polynomial has a non-integer coefficient");
    p.coeffs.push_back(numerator(c));
  }
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < p.coeffs.size() && p.coeffs[lead] == 0) ++lead;
  p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  check_internal(!p.is_zero(), "det(V - tV^T) vanished");
  check_internal(p.coeffs.size() % 2 == 1, "det(V - tV^T) has odd span");
  p.low = -static_cast<int>(p.coeffs.size() / 2);
  const Integer one = p.at_one();
  check_internal(abs(one) == 1, "Delta(1) is not +-1");
  if (one < 0)
    for (auto& c : p.coeffs) c = -c;
  check_internal(p.is_symmetric(), "Alexander polynomial is not symmetric");
  return p;
}

int arf(const LaurentPoly& delta) {
  const Integer d = abs(delta.at_minus_one());
  if (d % 2 == 0) throw InputError("Delta(-1) is even; not the polynomial of a knot");
  const int r = static_cast<int>(d % 8);
  return (r == 1 || r == 7) ? 0 : 1;
}

int arf(const IntMatrix& v) { return arf(alexander(v)); }

const char* to_string(Sliceness s) { return s == Sliceness::obstructed ? "obstructed" : "unknown"; }

Sliceness fox_milnor_obstruction(const LaurentPoly& delta) {
  const Integer d = abs(delta.at_minus_one());
  const Integer r = boost::multiprecision::sqrt(d);
  return r * r == d ? Sliceness::unknown : Sliceness::obstructed;
}

bool corollary_predicate(int sigma, int arf) { return ((sigma - 4 * arf - 4) % 8 + 8) % 8 == 0; }

KnotReport knot_report(const IntMatrix& v) {
  KnotReport r;
  r.genus_bound = static_cast<int>(v.rows() / 2);
  r.sigma = signature(v);
  r.delta = alexander(v);
  r.determinant = abs(r.delta.at_minus_one());
  r.arf = arf(r.delta);
  r.fox_milnor = fox_milnor_obstruction(r.delta);
  r.predicate = corollary_predicate(r.sigma, r.arf);
  return r;
}

}  // namespace hcob
