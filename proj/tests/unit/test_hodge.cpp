#include <doctest.h>

#include "bv/errors.hpp"
#include "bv/hodge.hpp"

using namespace bv;

TEST_CASE("invariant_part") {
  CHECK(invariant_part(Order::three(), 2, 10) == std::pair{3, 9});
  CHECK(invariant_part(Order::two(), 10, 12) == std::pair{11, 12});
  CHECK(invariant_part(Order::six(), 2, 10) == std::pair{3, 9});
}

TEST_CASE("hodge_x2 examples") {
  auto x2 = [](int r, int a) { return hodge_x2(n2_from_lattice(r, a), EigenspaceDims::from_r(Order::two(), r)); };
  CHECK(x2(10, 8) == HodgeDiamond{19, 19});
  CHECK(x2(1, 1) == HodgeDiamond{6, 60});
  CHECK(x2(18, 4) == HodgeDiamond{51, 3});
  CHECK(hodge_x2(FixedLocusN2::empty(), EigenspaceDims::from_r(Order::two(), 10)) == HodgeDiamond{11, 11});
}

TEST_CASE("hodge_x2 rejects an inconsistent pair") {
  try {
    hodge_x2(n2_from_lattice(10, 8), EigenspaceDims::from_r(Order::two(), 12));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InternalInconsistency);
  }
}

TEST_CASE("order 2: all three forms agree on the admissible grid") {
  for (int r = 1; r <= 20; ++r)
    for (int a = 0; a <= 20; ++a) {
      if ((r - a) % 2 || r - a + 2 < 0 || 22 - r - a < 0 || (r == 10 && a == 10)) continue;
      const auto s = n2_from_lattice(r, a);
      const auto d = hodge_x2(s, EigenspaceDims::from_r(Order::two(), r));
      CHECK(d.h11 == 1 + r + 4 * s.N);
      CHECK(d.h11 == 11 + 5 * s.N - s.Nprime);
      CHECK(d.h11 == 5 + 3 * r - 2 * a);
      CHECK(d.h21 == 21 - r + 4 * s.Nprime);
      CHECK(d.h21 == 11 + 5 * s.Nprime - s.N);
      CHECK(d.h21 == 65 - 3 * r - 2 * a);
    }
}

TEST_CASE("hodge_x3 examples") {
  auto x3 = [](int r, int a) { return hodge_x3(n3_from_lattice(r, a), EigenspaceDims::from_r(Order::three(), r)); };
  CHECK(x3(2, 2) == HodgeDiamond{9, 33});
  CHECK(x3(2, 2).euler() == -48);
  CHECK(x3(2, 0) == HodgeDiamond{15, 39});
  CHECK(x3(16, 3) == HodgeDiamond{62, 2});
  const auto flags = family_flags(Order::three(), x3(16, 3), EigenspaceDims::from_r(Order::three(), 16));
  CHECK(flags.no_mum);
}

TEST_CASE("order 3: closed forms and Euler characteristic on the admissible grid") {
  int seen = 0;
  for (int r = 2; r <= 20; r += 2)
    for (int a = 0; a <= 11; ++a) {
      FixedLocusN3 s;
      try {
        s = n3_from_lattice(r, a);
      } catch (const Error&) {
        continue;
      }
      ++seen;
      const auto d = hodge_x3(s, EigenspaceDims::from_r(Order::three(), r));
      CHECK(d.h11 == 7 + 4 * r - 3 * a);
      CHECK(d.h21 == 43 - 2 * r - 3 * a);
      CHECK(d.euler() == -72 + 12 * r);
    }
  CHECK(seen > 10);
}

TEST_CASE("hodge_x4 examples") {
  auto x4 = [](N4Case c, int k, int a, int gD, int n2 = 0) {
    auto done = n4_complete(c, k, a, gD, n2);
    return hodge_x4(done.locus, done.dims);
  };
  CHECK(x4(N4Case::TwoEllipticCurves, 0, 0, 0) == HodgeDiamond{25, 13});
  CHECK(x4(N4Case::DFirstType, 1, 0, 1) == HodgeDiamond{29, 11});
  CHECK(x4(N4Case::DFirstType, 2, 0, 1) == HodgeDiamond{46, 10});
  CHECK(x4(N4Case::DSecondType, 0, 0, 10, 2) == HodgeDiamond{17, 29});
  CHECK(x4(N4Case::DSecondType, 0, 4, 0, 2) == HodgeDiamond{42, 0});
}

TEST_CASE("order 4: direct, closed and Euler forms are consistent on the grid") {
  int seen = 0;
  for (auto c : {N4Case::DFirstType, N4Case::DSecondType})
    for (int k = 0; k <= 10; ++k)
      for (int a = 0; a <= 10; ++a)
        for (int gD = 0; gD <= 10; ++gD)
          for (int n2 = 0; n2 <= (c == N4Case::DSecondType ? 2 * k + 4 : 0); n2 += 2) {
            N4Completion done;
            try {
              done = n4_complete(c, k, a, gD, n2);
            } catch (const Error&) {
              continue;
            }
            ++seen;
            const auto d = hodge_x4(done.locus, done.dims);
            if (c == N4Case::DFirstType) {
              CHECK(d.euler() == 36 + 36 * k - 36 * gD + 12 * a);
            } else {
              CHECK(d.euler() == 42 - 3 * n2 - 6 * gD + 36 * k + 12 * a);
            }
          }
  CHECK(seen > 100);
}

TEST_CASE("hodge_x6 examples") {
  FixedLocusN6 line1;
  line1.l = 1;
  line1.N = 2;
  line1.k = 2;
  line1.p34 = 12;
  line1.gB = 5;
  line1.gF1 = 10;
  CHECK(hodge_x6(line1, EigenspaceDims::make(Order::six(), 2, 10, 0, 0)) == HodgeDiamond{29, 29});

  FixedLocusN6 line18;
  line18.l = 3;
  line18.N = 10;
  line18.k = 6;
  line18.p25 = 9;
  line18.p34 = 6;
  line18.gF1 = 1;
  CHECK(hodge_x6(line18, EigenspaceDims::make(Order::six(), 19, 1, 0, 1)) == HodgeDiamond{103, 1});

  FixedLocusN6 line19;
  line19.l = 1;
  line19.N = 5;
  line19.k = 3;
  line19.nprime = 1;
  line19.p25 = 4;
  line19.p34 = 4;
  CHECK(hodge_x6(line19, EigenspaceDims::make(Order::six(), 11, 2, 2, 3)) == HodgeDiamond{55, 1});
}

TEST_CASE("family flags") {
  auto f = family_flags(Order::four(), {90, 0}, EigenspaceDims::make(Order::four(), 19, 1, 1));
  CHECK(f.bv_maximal);
  CHECK(f.no_mum);
  CHECK(f.alpha_X_order == 4);
  f = family_flags(Order::six(), {55, 1}, EigenspaceDims::make(Order::six(), 11, 2, 2, 3));
  CHECK(f.no_mum);
  f = family_flags(Order::two(), {19, 19}, EigenspaceDims::from_r(Order::two(), 10));
  CHECK_FALSE(f.bv_maximal);
  CHECK_FALSE(f.no_mum);
  f = family_flags(Order::two(), {51, 4}, EigenspaceDims::from_r(Order::two(), 18));
  CHECK(f.bv_maximal);
  CHECK_FALSE(f.no_mum);
}

TEST_CASE("mirror pairs") {
  CHECK(mirror_pairs({{1, 2}, {3, 4}}).empty());
  const auto pairs = mirror_pairs({{19, 19}, {29, 17}, {17, 29}});
  CHECK(pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 2}});
}
