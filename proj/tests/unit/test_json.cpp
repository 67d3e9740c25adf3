#include <doctest.h>

#include "bv/errors.hpp"
#include "bv/json_io.hpp"

using namespace bv;

namespace {

template <typename T>
T round_trip(const T& v) {
  json j = v;
  return parse_json(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("round trips") {
  CHECK(round_trip(FixedLocusN2{false, 3, 7}) == FixedLocusN2{false, 3, 7});
  CHECK(round_trip(FixedLocusN2::empty()) == FixedLocusN2::empty());
  CHECK(round_trip(FixedLocusN3{4, 2, 3}) == FixedLocusN3{4, 2, 3});
  const auto c = n4_complete(N4Case::DSecondType, 2, 0, 5, 4);
  CHECK(round_trip(c.locus) == c.locus);
  CHECK(round_trip(c.dims) == c.dims);
  FixedLocusN6 s;
  s.l = 1;
  s.N = 2;
  s.k = 2;
  s.p34 = 12;
  s.gB = 5;
  s.gF1 = 10;
  CHECK(round_trip(s) == s);
  CHECK(round_trip(HodgeDiamond{55, 1}) == HodgeDiamond{55, 1});
  CHECK(round_trip(FamilyFlags{true, true, 4}) == FamilyFlags{true, true, 4});
  CHECK(round_trip(elliptic_profile(Order::six())) == elliptic_profile(Order::six()));
  CHECK(round_trip(ChiConstraint{2, -6}).chi == -6);
  const auto f4 = BaseSurface::hirzebruch(4);
  CHECK(round_trip(f4) == f4);
  CHECK(round_trip(DivisorClass::on(f4, 12, 3)) == DivisorClass::on(f4, 12, 3));
  CHECK(round_trip(DivisorClass::plane(6)) == DivisorClass::plane(6));
  CHECK(round_trip(MultiplicityProfile::parse("4,3,3,2")) == MultiplicityProfile::parse("4,3,3,2"));
}

TEST_CASE("dims omit absent classes") {
  json j = EigenspaceDims::from_r(Order::two(), 11);
  CHECK_FALSE(j.contains("d2"));
  json k = EigenspaceDims::make(Order::six(), 11, 2, 2, 3);
  CHECK(k["d3"] == 3);
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(parse_json("{"), Error);
  CHECK_THROWS_AS(parse_json(R"({"N": 1, "Nprime": 2, "extra": 0})").get<FixedLocusN2>(), Error);
  CHECK_THROWS_AS(parse_json(R"({"N": "x", "Nprime": 2})").get<FixedLocusN2>(), Error);
  CHECK_THROWS_AS(parse_json(R"({"order": 5, "r": 1, "m": 1})").get<EigenspaceDims>(), Error);
}

TEST_CASE("Kodaira names") {
  for (const char* name : {"I0", "I3", "II", "III", "IV", "I0*", "I2*", "IV*", "III*", "II*"})
    CHECK(to_string(parse_kodaira(name)) == name);
  CHECK_THROWS_AS(parse_kodaira("V"), Error);
}

TEST_CASE("model serialization") {
  json j = build_preset("order6-F12");
  CHECK(j["base"] == json("F12"));
  CHECK(j.dump().find("X+pZ") != std::string::npos);
}
