#include "bv/hodge.hpp"

#include <string>

#include "bv/errors.hpp"

namespace bv {

namespace {

void agree(int lhs, int rhs, const std::string& what) {
  if (lhs != rhs)
    throw Error(ErrorKind::InternalInconsistency,
                what + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
}

void expect_order(const EigenspaceDims& dims, Order order) {
  if (dims.order != order)
    throw Error(ErrorKind::InvalidInvariants, "dimensions are for order " + std::to_string(dims.order.value()) +
                                                  ", expected " + std::to_string(order.value()));
  validate(dims);
}

}  // namespace

std::pair<int, int> invariant_part(Order order, int r, int m) {
  if (order == Order::two()) return {1 + r, m};
  return {1 + r, m - 1};
}

HodgeDiamond hodge_x2(const FixedLocusN2& s, const EigenspaceDims& dims) {
  expect_order(dims, Order::two());
  validate(s);
  const int r = dims.r, m = dims.m;
  HodgeDiamond d{1 + r + 4 * s.N, m - 1 + 4 * s.Nprime};
  agree(d.h11, 11 + 5 * s.N - s.Nprime, "h11 = 11 + 5N - N'");
  agree(d.h21, 11 + 5 * s.Nprime - s.N, "h21 = 11 + 5N' - N");
  if (!s.empty_fixed_locus) {
    const auto lat = lattice_of(s);
    agree(r, lat.r, "r = N - N' + 10");
    agree(d.h11, 5 + 3 * r - 2 * lat.a, "h11 = 5 + 3r - 2a");
    agree(d.h21, 65 - 3 * r - 2 * lat.a, "h21 = 65 - 3r - 2a");
  }
  return d;
}

HodgeDiamond hodge_x3(const FixedLocusN3& s, const EigenspaceDims& dims) {
  expect_order(dims, Order::three());
  validate(s);
  const int r = dims.r, m = dims.m;
  agree(s.n_points, r / 2 - 1, "n = r/2 - 1");
  const int twice_a = 6 + r - 4 * s.k_curves;
  agree(4 * s.gC, 22 - r - twice_a, "4 gC = 22 - r - 2a");
  if (twice_a % 2 != 0 || twice_a < 0)
    throw Error(ErrorKind::InternalInconsistency, "a = (6 + r - 4k)/2 is not a nonnegative integer");
  const int a = twice_a / 2;
  HodgeDiamond d{r + 1 + 3 * s.n_points + 6 * s.k_curves, m - 1 + 6 * s.gC};
  agree(d.h11, 7 + 4 * r - 3 * a, "h11 = 7 + 4r - 3a");
  agree(d.h21, 43 - 2 * r - 3 * a, "h21 = 43 - 2r - 3a");
  agree(d.euler(), -72 + 12 * r, "euler = -72 + 12r");
  return d;
}

HodgeDiamond hodge_x4(const FixedLocusN4& s, const EigenspaceDims& dims) {
  expect_order(dims, Order::four());
  if (!(dims_of(s) == dims)) throw Error(ErrorKind::InternalInconsistency, "dimensions do not match the fixed locus");
  if (s.fixed_case == N4Case::TwoEllipticCurves) {
    agree(dims.r + 19, 25, "h11 = 19 + r");
    return {25, 13};
  }
  const int r = dims.r, m = dims.m, k = s.k, a = s.a, gD = s.gD, n2 = s.n2;
  HodgeDiamond d;
  d.h11 = 1 + r + 7 * k + 3 * s.b + 2 * (s.n1 + n2) + 4 * a;
  if (s.fixed_case == N4Case::DFirstType) {
    d.h21 = m - 1 + 7 * gD;
    agree(d.h11, 22 + 17 * k + 5 * a - 10 * gD, "h11 = 22 + 17k + 5a - 10gD");
    agree(d.h21, 4 - k - a + 8 * gD, "h21 = 4 - k - a + 8gD");
    agree(d.euler(), 36 + 36 * k - 36 * gD + 12 * a, "euler = 36 + 36k - 36gD + 12a");
  } else {
    d.h21 = m + 2 * gD - n2 / 2;
    agree(4 * d.h11, 102 - 7 * n2 - 2 * gD + 4 * (17 * k + 5 * a), "h11 = (102 - 7n2 - 2gD)/4 + 17k + 5a");
    agree(4 * d.h21, 18 - n2 + 10 * gD - 4 * (k + a), "h21 = (18 - n2 + 10gD)/4 - k - a");
    agree(d.euler(), 42 - 3 * n2 - 6 * gD + 36 * k + 12 * a, "euler = 42 - 3n2 - 6gD + 36k + 12a");
  }
  return d;
}

HodgeDiamond hodge_x6(const FixedLocusN6& s, const EigenspaceDims& dims) {
  expect_order(dims, Order::six());
  validate(s);
  HodgeDiamond d;
  d.h11 = dims.r + 1 + 2 * s.l + 2 * s.N - 2 * s.b + 4 * s.k - 2 * s.a + 3 * s.nprime + 3 * s.p25 + s.p34;
  d.h21 = dims.m - 1 + 2 * s.gD + 2 * (s.gBq + s.gB) + s.gF1q + s.gF1 + s.gF2q + s.gF2;
  return d;
}

FamilyFlags family_flags(Order order, const HodgeDiamond& diamond, const EigenspaceDims& dims) {
  FamilyFlags f;
  f.bv_maximal = diamond.h21 == invariant_part(order, dims.r, dims.m).second;
  f.no_mum = f.bv_maximal && order != Order::two();
  f.alpha_X_order = f.bv_maximal ? order.value() : 0;
  return f;
}

std::vector<std::pair<std::size_t, std::size_t>> mirror_pairs(const std::vector<HodgeDiamond>& rows) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      if (rows[i].h11 == rows[j].h21 && rows[i].h21 == rows[j].h11) out.emplace_back(i, j);
  return out;
}

}  // namespace bv
