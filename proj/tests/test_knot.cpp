#include <random>

#include "doctest.h"
#include "hcob/errors.hpp"
#include "hcob/knot.hpp"

using namespace hcob;

namespace {

IntMatrix trefoil() { return IntMatrix::from_rows({{-1, 1}, {0, -1}}); }
IntMatrix figure_eight() { return IntMatrix::from_rows({{1, 1}, {0, -1}}); }

LaurentPoly poly(int low, std::vector<long long> c) {
  LaurentPoly p;
  p.low = low;
  for (auto x : c) p.coeffs.push_back(x);
  return p;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Product of random elementary matrices; determinant +-1.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix s = IntMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) {
      s.negate_row(i);
      continue;
    }
    s.add_row(i, j, Integer(static_cast<int>(rng() % 5) - 2));
  }
  return s;
}

}  // namespace

TEST_CASE("unknot") {
  const IntMatrix u;
  CHECK(signature(u) == 0);
  CHECK(alexander(u) == LaurentPoly::constant(1));
  CHECK(arf(u) == 0);
  CHECK(fox_milnor_obstruction(alexander(u)) == Sliceness::unknown);
  CHECK_FALSE(corollary_predicate(0, 0));
}

TEST_CASE("trefoil") {
  CHECK(signature(trefoil()) == -2);
  const LaurentPoly d = alexander(trefoil());
  CHECK(d == poly(-1, {1, -1, 1}));
  CHECK(d.to_string() == "t - 1 + t^-1");
  CHECK(d.at_minus_one() == -3);
  CHECK(arf(d) == 1);
  CHECK(fox_milnor_obstruction(d) == Sliceness::obstructed);
  CHECK_FALSE(corollary_predicate(-2, 1));
}

TEST_CASE("figure-eight") {
  const auto r = knot_report(figure_eight());
  CHECK(r.sigma == 0);
  CHECK(r.delta == poly(-1, {-1, 3, -1}));
  CHECK(r.delta.to_string() == "-t + 3 - t^-1");
  CHECK(r.determinant == 5);
  CHECK(r.arf == 1);
  CHECK(r.fox_milnor == Sliceness::obstructed);
  CHECK(r.predicate);
}

TEST_CASE("square knot has a square determinant") {
  const LaurentPoly d = alexander(block_sum(trefoil(), IntMatrix::from_rows({{1, -1}, {0, 1}})));
  CHECK(d == poly(-2, {1, -2, 3, -2, 1}));
  CHECK(abs(d.at_minus_one()) == 9);
  CHECK(fox_milnor_obstruction(d) == Sliceness::unknown);
  CHECK(arf(d) == 0);
}

TEST_CASE("invalid Seifert matrices") {
  CHECK_THROWS_AS(signature(IntMatrix::from_rows({{1}})), InputError);
  CHECK_THROWS_AS(alexander(IntMatrix::from_rows({{1, 2}, {0, 1}})), InputError);
  CHECK_THROWS_AS(signature(IntMatrix(2, 3)), InputError);
  CHECK_THROWS_AS(arf(poly(-1, {1, 0, 1})), InputError);
}

TEST_CASE("degenerate V + V^T") {
  // V + V^T = 0 block: signature of the nondegenerate part.
  CHECK(signature(IntMatrix::from_rows({{0, 1}, {0, 0}})) == 0);
  CHECK(signature(IntMatrix::from_rows({{0, 0}, {1, 0}})) == 0);
}

TEST_CASE("predicate arithmetic") {
  CHECK(corollary_predicate(0, 1));
  CHECK(corollary_predicate(4, 0));
  CHECK(corollary_predicate(-4, 0));
  CHECK(corollary_predicate(8, 1));
  CHECK_FALSE(corollary_predicate(2, 1));
}

TEST_CASE("congruent Seifert matrices give the same invariants") {
  std::mt19937 rng(5);
  const std::vector<IntMatrix> pieces = {trefoil(), figure_eight(), IntMatrix::from_rows({{1, -1}, {0, 1}})};
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix v = pieces[rng() % 3];
    const int extra = static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) v = block_sum(v, pieces[rng() % 3]);
    const auto base = knot_report(v);
    CHECK(base.sigma % 2 == 0);
    CHECK(base.delta.is_symmetric());
    CHECK(base.delta.at_one() == 1);

    const IntMatrix s = random_unimodular(rng, v.rows());
    const auto moved = knot_report(s * v * s.transpose());
    CHECK(moved.sigma == base.sigma);
    CHECK(moved.delta == base.delta);
    CHECK(moved.arf == base.arf);
  }
}
