#include "doctest.h"
#include "hcob/coset.hpp"
#include "hcob/errors.hpp"

using namespace hcob;

namespace {

GroupPresentation binary_icosahedral() {
  // s^3 = t^5 = (st)^2, written as s^3 t^-5 and t^5 (st)^-2.
  return {2, {{1, 1, 1, -2, -2, -2, -2, -2}, {2, 2, 2, 2, 2, -2, -1, -2, -1}}};
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(reduce_word({1, -1, 2}, false) == std::vector<int>{2});
  CHECK(reduce_word({1, 2, -1}, true) == std::vector<int>{2});
  CHECK(reduce_word({1, 2, -2, -1}, false).empty());
  CHECK_THROWS_AS(reduce_word({0}, false), InputError);
}

TEST_CASE("small orders") {
  CHECK(coset_enumeration({1, {{1, 1}}}, 10).order == std::size_t{2});
  CHECK(coset_enumeration({0, {}}, 1).order == std::size_t{1});
  CHECK(coset_enumeration({2, {{1, 1, 1}, {2, 2}, {1, 2, 1, 2}}}, 50).order == std::size_t{6});
  // Quaternion group.
  CHECK(coset_enumeration({2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}}, 50).order == std::size_t{8});
}

TEST_CASE("infinite groups hit the cap") {
  const auto r = coset_enumeration({2, {{1, 2, -1, -2}}}, 100);
  CHECK_FALSE(r.order.has_value());
  CHECK(r.max_live <= 100);
  CHECK_FALSE(coset_enumeration({1, {}}, 20).order.has_value());
}

TEST_CASE("binary icosahedral group has order 120") {
  const auto r = coset_enumeration(binary_icosahedral(), 500);
  REQUIRE(r.order.has_value());
  CHECK(*r.order == 120);
  CHECK(r.max_live <= 500);
  // Perfect group.
  CHECK(abelianization(binary_icosahedral()) == Abelianization{0, {}});
}

TEST_CASE("bad presentations") {
  CHECK_THROWS_AS(coset_enumeration({1, {{2}}}, 10), InputError);
  CHECK_THROWS_AS(coset_enumeration({1, {{1}}}, 0), InputError);
  CHECK_THROWS_AS(abelianization({1, {{-3}}}), InputError);
}

TEST_CASE("abelianization") {
  CHECK(abelianization({2, {{1, 2, -1, -2}}}) == Abelianization{2, {}});
  CHECK(abelianization({1, {{1, 1, 1, 1, 1, 1}}}) == Abelianization{0, {Integer(6)}});
}
