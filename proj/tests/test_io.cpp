#include "doctest.h"
#include "hcob/errors.hpp"
#include "hcob/io.hpp"

using namespace hcob;

TEST_CASE("every bundled fixture round-trips") {
  std::size_t parsed = 0;
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    if (f.kind == "placeholder") {
      CHECK_THROWS_AS(parse_input(f.text), ModelInvalid);
      continue;
    }
    const InputValue v = parse_input(f.text);
    CHECK(kind_of(v) == f.kind);
    const std::string once = serialize(v);
    const InputValue again = parse_input(once);
    CHECK(again == v);
    CHECK(serialize(again) == once);
    ++parsed;
  }
  CHECK(parsed >= 15);
}

TEST_CASE("example complex parses to nine simplices") {
  const auto in = load_input("fixtures:example_complex");
  const auto& k = std::get<AbstractComplex>(in.value);
  CHECK(k.size() == 9);
  CHECK(in.ref == "fixtures:example_complex");
}

TEST_CASE("empty facet list is an empty complex") {
  const auto v = parse_input(R"({"kind":"simplicial","vertices":[],"facets":[]})");
  CHECK(std::get<AbstractComplex>(v).empty());
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_input("{"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"facets":[]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"nope"})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"simplicial","facets":[[1,"a"]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"simplicial","vertices":[1],"facets":[[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"seifert","matrix":[[1,2],[3]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"pin_model","reducible_degree":0,"finite":[{"label":"x","degree":1}],
                                  "q":[[2]],"v":[[0]],"d_fin":[[0]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"pin_model","finite":[{"label":"x","degree":1}],
                                  "d_to_tower":[{"from":"y","a":0,"b":0}]})"),
                  InputError);
  // upower that disagrees with the degrees.
  CHECK_THROWS_AS(parse_input(R"({"kind":"u_complex","generators":[{"label":"x","degree":-1},{"label":"y","degree":0}],
                                  "differential":[{"from":"x","to":"y","upower":0}]})"),
                  InputError);
  // Same entry twice.
  CHECK_THROWS_AS(parse_input(R"({"kind":"u_complex","generators":[{"label":"x","degree":-1},{"label":"y","degree":0}],
                                  "differential":[{"from":"x","to":"y"},{"from":"x","to":"y"}]})"),
                  InputError);
  CHECK_THROWS_AS(load_input("fixtures:missing"), InputError);
  CHECK_THROWS_AS(load_input("/nonexistent/file.json"), InputError);
}

TEST_CASE("q cubed nonzero is schema-valid but fails validation") {
  const auto v = parse_input(R"({"kind":"pin_model","reducible_degree":0,
    "finite":[{"label":"a","degree":3},{"label":"b","degree":2},{"label":"c","degree":1},{"label":"d","degree":0}],
    "q":[[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0]],
    "v":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],
    "d_fin":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})");
  const auto val = validate(std::get<PinModel>(v));
  CHECK_FALSE(val.structural);
}

TEST_CASE("upower may be omitted") {
  const auto v = parse_input(R"({"kind":"u_complex","generators":[{"label":"x","degree":-1},{"label":"y","degree":0}],
                                 "differential":[{"from":"x","to":"y"}]})");
  const auto& u = std::get<InvolutiveInput>(v);
  CHECK(u.complex.differential.get(1, 0));
  CHECK_FALSE(u.iota.has_value());
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("d is twice delta on the bundled fixtures") {
  const auto u = std::get<InvolutiveInput>(load_input("fixtures:sigma237").value);
  const auto s = std::get<SOneModel>(load_input("fixtures:s1_sigma237").value);
  CHECK(Rational(d_invariant(u.complex).d) == 2 * delta_invariant(s).delta);
  const auto u3 = std::get<InvolutiveInput>(load_input("fixtures:u_s3").value);
  const auto s3 = std::get<SOneModel>(load_input("fixtures:s1_s3").value);
  CHECK(Rational(d_invariant(u3.complex).d) == 2 * delta_invariant(s3).delta);
}
