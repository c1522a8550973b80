#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "hcob/equivariant.hpp"
#include "hcob/errors.hpp"

using namespace hcob;
using testdata::empty_pin;
using testdata::pin_sphere;

namespace {

// x in degree 3 with D x = q^2 g on the n = 0 towers.
PinModel corner_kill() {
  PinModel m = empty_pin(0, {3});
  m.to_tower.push_back({0, 2, 0});
  return m;
}

// Also kills q^2 v g, through a generator in degree 7 with v x7 = x3.
PinModel corner_kill_twice() {
  PinModel m = empty_pin(0, {3, 7});
  m.v.set(0, 1);
  m.to_tower.push_back({0, 2, 0});
  m.to_tower.push_back({1, 2, 1});
  return m;
}

// Block s(a, b), a <= 2, b <= 1 mapping onto t(a, b): the bottom two layers
// of every tower die.
PinModel full_block(int n) {
  std::vector<int> deg;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b) deg.push_back(n + 1 + a + 4 * b);
  PinModel m = empty_pin(n, deg);
  auto idx = [](int a, int b) { return static_cast<std::size_t>(2 * a + b); };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b) {
      if (a > 0) m.q.set(idx(a - 1, b), idx(a, b));
      if (b > 0) m.v.set(idx(a, b - 1), idx(a, b));
      m.to_tower.push_back({idx(a, b), a, b});
    }
  return m;
}

SOneModel s1_sphere(int n) {
  SOneModel m;
  m.reducible_degree = n;
  return m;
}

}  // namespace

TEST_CASE("materialized S0 has the 1,1,1,0 pattern") {
  const auto h = borel_homology(pin_sphere(0), {Window{-4, 20}, 2});
  for (int d = -4; d < 0; ++d) CHECK(h.dim(d) == 0);
  for (int d = 0; d <= 20; ++d) CHECK(h.dim(d) == (d % 4 == 3 ? 0u : 1u));

  const auto h2 = borel_homology(pin_sphere(2), {Window{-4, 24}, 2});
  CHECK(h2.dim(1) == 0);
  for (int d = 2; d <= 24; ++d) CHECK(h2.dim(d) == ((d - 2) % 4 == 3 ? 0u : 1u));
}

TEST_CASE("window checks") {
  CHECK_THROWS_AS(materialize(pin_sphere(0), {-4, 10}, 2), InputError);
  CHECK_THROWS_AS(materialize(pin_sphere(0), {0, 30}, 2), InputError);
  CHECK_THROWS_AS(materialize(pin_sphere(0), {-4, 30}, 1), InputError);
  CHECK(default_window(pin_sphere(0), 2) == Window{-4, 16});
}

TEST_CASE("a lone q^2 corner kill") {
  const PinModel m = corner_kill();
  const auto val = validate(m);
  CHECK(val.structural);
  CHECK(val.v_commutes);
  CHECK_FALSE(val.q_commutes);

  const auto mat = materialize(m, default_window(m, 2), 2);
  CHECK((mat.complex.differential * mat.complex.differential).is_zero());

  const auto h = borel_homology(m);
  CHECK(h.dim(2) == 0);
  CHECK(h.dim(3) == 0);
  CHECK(h.dim(6) == 1);

  const auto t = tower_bottoms(m);
  CHECK(t.A == 0);
  CHECK(t.B == 1);
  CHECK(t.C == 6);
  // Not a module complex, and gamma > beta would follow.
  CHECK_THROWS_AS(abc(m), ModelInvalid);

  CHECK(tower_bottoms(corner_kill_twice()).C == 10);
}

TEST_CASE("acyclic pair leaves homology alone") {
  const PinModel m = testdata::with_acyclic_pair(pin_sphere(0), 5);
  const Window w = default_window(m, 2);
  const auto base = borel_homology(pin_sphere(0), {w, 2});
  const auto withpair = borel_homology(m, {w, 2});
  for (int d = w.lo; d <= w.hi; ++d) CHECK(base.dim(d) == withpair.dim(d));
}

TEST_CASE("alpha beta gamma on the spheres") {
  auto r = abc(pin_sphere(0));
  CHECK(r.A == 0);
  CHECK(r.B == 1);
  CHECK(r.C == 2);
  CHECK(r.alpha == 0);
  CHECK(r.beta == 0);
  CHECK(r.gamma == 0);
  CHECK(r.mu == 0);
  CHECK(rokhlin_check(r) == 0);

  r = abc(pin_sphere(2), {Window{-8, 24}, 2});
  CHECK(r.A == 2);
  CHECK(r.B == 3);
  CHECK(r.C == 4);
  CHECK(r.alpha == 1);
  CHECK(r.beta == 1);
  CHECK(r.gamma == 1);
  CHECK(r.mu == 1);
  CHECK(rokhlin_check(r) == 1);

  r = abc(pin_sphere(-2));
  CHECK(r.alpha == -1);
  CHECK(r.beta == -1);
  CHECK(r.gamma == -1);
  CHECK(rokhlin_check(r) == 1);

  r = abc(full_block(0));
  CHECK(r.A == 8);
  CHECK(r.B == 9);
  CHECK(r.C == 10);
  CHECK(r.alpha == 4);

  CHECK_THROWS_AS(abc(pin_sphere(1)), ModelInvalid);
}

TEST_CASE("rokhlin check rejects parity mismatch") {
  AbcReport r;
  r.alpha = 1;
  r.beta = 0;
  r.gamma = 0;
  CHECK_THROWS_AS(rokhlin_check(r), ModelInvalid);
}

TEST_CASE("duality") {
  CHECK(abc_of_reverse(pin_sphere(2)) == Triple{-1, -1, -1});
  CHECK(abc_of_reverse(pin_sphere(0)) == Triple{0, 0, 0});
  CHECK(abc_of_reverse(abc_of_reverse(Triple{3, 1, -1})) == Triple{3, 1, -1});

  auto tops = coborel_tower_tops(pin_sphere(0));
  CHECK(tops.A == 0);
  CHECK(tops.B == -1);
  CHECK(tops.C == -2);
  tops = coborel_tower_tops(pin_sphere(2));
  CHECK(tops.A == -2);
  CHECK(tops.B == -3);
  CHECK(tops.C == -4);
  CHECK(reverse_from_tops(tops) == abc_of_reverse(pin_sphere(2)));

  const auto withpair = testdata::with_acyclic_pair(pin_sphere(2), 6);
  const auto t2 = coborel_tower_tops(withpair);
  CHECK(t2.A == -2);
  CHECK(t2.C == -4);
}

TEST_CASE("localization") {
  auto l = localization_check(pin_sphere(0));
  CHECK(l.pass);
  CHECK(l.block_start % 4 == 0);
  CHECK(l.stable == std::array<std::size_t, 4>{1, 1, 1, 0});

  // Finite part only: a free orbit localizes to zero.
  PinModel free = empty_pin(std::nullopt, {0, 1, 4, 5});
  free.v.set(0, 2);
  free.v.set(1, 3);
  free.q.set(0, 1);
  free.q.set(2, 3);
  l = localization_check(free);
  CHECK_FALSE(l.has_reducible);
  CHECK(l.pass);
  CHECK(l.stable == std::array<std::size_t, 4>{0, 0, 0, 0});
  CHECK_THROWS_AS(abc(free), ModelInvalid);

  CHECK(localization_check(full_block(2)).pass);
}

TEST_CASE("bad model data") {
  PinModel m = empty_pin(0, {3});
  m.q = F2Matrix(2, 2);
  CHECK_THROWS_AS(validate(m), InputError);

  m = empty_pin(0, {3});
  m.to_tower.push_back({0, 3, 0});
  CHECK_THROWS_AS(validate(m), InputError);

  m = empty_pin(0, {3, 2, 1, 0});
  m.q.set(1, 0);
  m.q.set(2, 1);
  m.q.set(3, 2);
  const auto val = validate(m);
  CHECK_FALSE(val.structural);
  CHECK_THROWS_AS(abc(m), ModelInvalid);

  m = empty_pin(0, {3});
  m.to_tower.push_back({0, 1, 0});
  CHECK_FALSE(validate(m).structural);
}

TEST_CASE("random models: window independence, ordering, localization, duality") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const PinModel m = testdata::random_pin_model(rng);
    CAPTURE(trial);
    const auto val = validate(m);
    REQUIRE(val.module_compatible());

    const auto r = abc(m);
    CHECK(r.alpha >= r.beta);
    CHECK(r.beta >= r.gamma);
    CHECK(rokhlin_check(r) == r.mu);

    const Window w = default_window(m, 2);
    const auto wide = tower_bottoms(m, {Window{w.lo, w.hi + 8}, 4});
    CHECK(wide.A == r.A);
    CHECK(wide.B == r.B);
    CHECK(wide.C == r.C);

    CHECK(localization_check(m).pass);

    const auto tops = coborel_tower_tops(m);
    CHECK(tops.A == -r.A);
    CHECK(tops.B == -r.B);
    CHECK(tops.C == -r.C);
    CHECK(reverse_from_tops(tops) == abc_of_reverse(Triple{r.alpha, r.beta, r.gamma}));

    const auto shifted = abc(testdata::with_acyclic_pair(m, 3));
    CHECK(shifted.alpha == r.alpha);
    CHECK(shifted.beta == r.beta);
    CHECK(shifted.gamma == r.gamma);
  }
}

TEST_CASE("random finite-only models localize to zero") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const PinModel m = testdata::random_pin_model(rng, {6, true});
    const auto l = localization_check(m);
    CHECK(l.pass);
    for (auto x : l.stable) CHECK(x == 0);
  }
}

TEST_CASE("delta invariant") {
  CHECK(delta_invariant(s1_sphere(0)).delta == 0);
  CHECK(delta_invariant(s1_sphere(2)).delta == 1);

  SOneModel m = s1_sphere(0);
  m.labels = {"x"};
  m.degrees = {1};
  m.u = m.d_fin = F2Matrix(1, 1);
  m.to_tower = {{0, 0}};
  const auto r = delta_invariant(m);
  CHECK(r.bottom == 2);
  CHECK(r.delta == 1);

  m.degrees = {2};
  CHECK_THROWS_AS(delta_invariant(m), ModelInvalid);
}
