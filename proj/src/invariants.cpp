#include "bv/invariants.hpp"

#include <string>

#include "bv/errors.hpp"

namespace bv {

namespace {

void require(bool ok, const std::string& relation) {
  if (!ok) throw Error(ErrorKind::InvalidInvariants, relation);
}

int exact_div(int num, int den, const std::string& relation) {
  require(num % den == 0, relation + " is not integral");
  require(num >= 0, relation + " is negative");
  return num / den;
}

}  // namespace

Order Order::of(int value) {
  switch (value) {
    case 2: return two();
    case 3: return three();
    case 4: return four();
    case 6: return six();
  }
  throw Error(ErrorKind::InvalidInvariants, "order must be one of 2, 3, 4, 6, got " + std::to_string(value));
}

std::string_view to_string(JInvariant j) {
  switch (j) {
    case JInvariant::Any: return "Any";
    case JInvariant::Zero: return "Zero";
    case JInvariant::J1728: return "J1728";
  }
  return "?";
}

EllipticAutomorphismProfile elliptic_profile(Order order) {
  switch (order.value()) {
    case 2: return {order, JInvariant::Any, {{1, 4}}};
    case 3: return {order, JInvariant::Zero, {{1, 3}, {2, 3}}};
    case 4: return {order, JInvariant::J1728, {{1, 2}, {2, 4}, {3, 2}}};
    default: return {order, JInvariant::Zero, {{1, 1}, {2, 3}, {3, 4}, {4, 3}, {5, 1}}};
  }
}

int branch_point_count(const EllipticAutomorphismProfile& profile) {
  const int n = profile.order.value();
  // exact[d]: points whose stabilizer is generated by alpha^d; their orbits have d points
  std::map<int, int> exact;
  int orbits = 0;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto it = profile.fixed_point_counts.find(d);
    int count = it == profile.fixed_point_counts.end() ? 0 : it->second;
    for (auto& [e, c] : exact)
      if (d % e == 0) count -= c;
    exact[d] = count;
    orbits += count / d;
  }
  return orbits;
}

std::string_view to_string(N4Case c) {
  switch (c) {
    case N4Case::TwoEllipticCurves: return "TwoEllipticCurves";
    case N4Case::DFirstType: return "DFirstType";
    case N4Case::DSecondType: return "DSecondType";
  }
  return "?";
}

N4Case parse_n4_case(std::string_view text) {
  if (text == "TwoEllipticCurves") return N4Case::TwoEllipticCurves;
  if (text == "DFirstType") return N4Case::DFirstType;
  if (text == "DSecondType") return N4Case::DSecondType;
  throw Error(ErrorKind::ParseError, "unknown order-4 case '" + std::string(text) + "'");
}

std::array<int, 4> class_weights(Order order) {
  switch (order.value()) {
    case 2: return {1, 1, 0, 0};
    case 3: return {1, 2, 0, 0};
    case 4: return {1, 2, 1, 0};
    default: return {1, 2, 2, 1};
  }
}

int EigenspaceDims::weighted_sum() const {
  auto w = class_weights(order);
  return w[0] * r + w[1] * m + w[2] * d2 + w[3] * d3;
}

void validate(const EigenspaceDims& dims) {
  auto w = class_weights(dims.order);
  require(dims.r >= 1, "r >= 1");
  require(dims.m >= 1, "m >= 1");
  require(dims.d2 >= 0 && dims.d3 >= 0, "eigenspace dimensions nonnegative");
  require(w[2] != 0 || dims.d2 == 0, "d2 = 0 for order " + std::to_string(dims.order.value()));
  require(w[3] != 0 || dims.d3 == 0, "d3 = 0 for order " + std::to_string(dims.order.value()));
  require(dims.weighted_sum() == 22, "weighted eigenspace dimension sum = 22");
}

EigenspaceDims EigenspaceDims::make(Order order, int r, int m, int d2, int d3) {
  EigenspaceDims dims{order, r, m, d2, d3};
  validate(dims);
  return dims;
}

EigenspaceDims EigenspaceDims::from_r(Order order, int r) {
  switch (order.value()) {
    case 2: return make(order, r, 22 - r);
    case 3: return make(order, r, exact_div(22 - r, 2, "m = (22 - r)/2"));
  }
  throw Error(ErrorKind::InvalidInvariants, "r alone determines the eigenspaces only for orders 2 and 3");
}

void validate(const FixedLocusN2& locus) {
  require(locus.N >= 0 && locus.Nprime >= 0, "N, N' nonnegative");
  if (locus.empty_fixed_locus) require(locus.N == 0 && locus.Nprime == 0, "empty fixed locus has N = N' = 0");
}

void validate(const FixedLocusN3& locus) {
  require(locus.n_points >= 0 && locus.k_curves >= 0 && locus.gC >= 0, "order-3 counts nonnegative");
}

void validate(const FixedLocusN4& locus) {
  require(locus.k >= 0 && locus.b >= 0 && locus.a >= 0 && locus.n1 >= 0 && locus.n2 >= 0 && locus.gD >= 0,
          "order-4 counts nonnegative");
  require(locus.N == locus.k + locus.b + 2 * locus.a, "N = k + b + 2a");
  switch (locus.fixed_case) {
    case N4Case::TwoEllipticCurves:
      require(locus.gD == 1 && locus.N == 2 && locus.a == 0 && locus.n2 == 0, "two elliptic curves: gD = 1, N = 2");
      break;
    case N4Case::DFirstType:
      require(locus.n2 == 0, "n2 = 0 for D of first type");
      require(locus.n1 == 2 * (locus.k - locus.gD) + 4, "n1 = 2(k - gD) + 4");
      require(2 * locus.b == locus.n1, "b = n1/2");
      break;
    case N4Case::DSecondType:
      require(locus.n2 % 2 == 0, "n2 even");
      require(locus.n1 + locus.n2 == 2 * locus.k + 4, "n1 + n2 = 2k + 4");
      require(2 * (locus.b - 1) == locus.n1, "b = n1/2 + 1");
      break;
  }
}

void validate(const FixedLocusN6& s) {
  for (int v : {s.l, s.N, s.k, s.a, s.b, s.nprime, s.p25, s.p34, s.gD, s.gB, s.gBq, s.gF1, s.gF1q, s.gF2, s.gF2q})
    require(v >= 0, "order-6 counts nonnegative");
  require(s.gBq <= s.gB, "g(B/beta) <= g(B)");
  require(s.gF1q <= s.gF1, "g(F1/beta) <= g(F1)");
  require(s.gF2q <= s.gF2, "g(F2/beta) <= g(F2)");
}

FixedLocusN2 n2_from_lattice(int r, int a) {
  require(r >= 1 && r <= 20, "1 <= r <= 20");
  require(a >= 0, "a >= 0");
  require(!(r == 10 && a == 10), "(r, a) = (10, 10) has empty fixed locus; use FixedLocusN2::empty()");
  FixedLocusN2 out;
  out.N = exact_div(r - a + 2, 2, "N = (r - a + 2)/2");
  out.Nprime = exact_div(22 - r - a, 2, "N' = (22 - r - a)/2");
  return out;
}

Lattice2 lattice_of(const FixedLocusN2& locus) {
  validate(locus);
  if (locus.empty_fixed_locus) return {10, 10};
  return {locus.N - locus.Nprime + 10, 12 - locus.N - locus.Nprime};
}

FixedLocusN3 n3_from_lattice(int r, int a) {
  require(r >= 2 && r <= 20 && r % 2 == 0, "r even and 2 <= r <= 20");
  require(a >= 0, "a >= 0");
  FixedLocusN3 out;
  out.gC = exact_div(22 - r - 2 * a, 4, "gC = (22 - r - 2a)/4");
  out.k_curves = exact_div(6 + r - 2 * a, 4, "k = (6 + r - 2a)/4");
  out.n_points = r / 2 - 1;
  return out;
}

EigenspaceDims dims_of(const FixedLocusN4& s) {
  validate(s);
  if (s.fixed_case == N4Case::TwoEllipticCurves) return EigenspaceDims::make(Order::four(), 6, 6, 4);
  const int h = s.fixed_case == N4Case::DFirstType ? s.k - s.gD : s.k;
  const int r = exact_div(12 + s.k + 2 * s.a + s.b - s.gD + 4 * h, 2, "r = (12 + k + 2a + b - gD + 4h)/2");
  const int m = exact_div(12 - s.k - 2 * s.a - s.b + s.gD, 2, "m = (12 - k - 2a - b + gD)/2");
  require(22 - r - 2 * m >= 0, "d2 = 22 - r - 2m >= 0");
  return EigenspaceDims::make(Order::four(), r, m, 22 - r - 2 * m);
}

N4Completion n4_complete(N4Case fixed_case, int k, int a, int gD, int n2) {
  require(k >= 0 && a >= 0 && gD >= 0 && n2 >= 0, "order-4 inputs nonnegative");
  FixedLocusN4 s;
  s.fixed_case = fixed_case;
  switch (fixed_case) {
    case N4Case::TwoEllipticCurves:
      s.k = 1;
      s.b = 1;
      s.n1 = 4;
      s.gD = 1;
      break;
    case N4Case::DFirstType:
      require(n2 == 0, "n2 is only supplied for D of second type");
      s.k = k;
      s.a = a;
      s.gD = gD;
      s.n1 = 2 * (k - gD) + 4;
      require(s.n1 >= 0, "n1 = 2(k - gD) + 4 >= 0");
      s.b = s.n1 / 2;
      break;
    case N4Case::DSecondType:
      require(n2 % 2 == 0 && n2 <= 2 * k + 4, "n2 even and 0 <= n2 <= 2k + 4");
      s.k = k;
      s.a = a;
      s.gD = gD;
      s.n2 = n2;
      s.n1 = 2 * k + 4 - n2;
      s.b = s.n1 / 2 + 1;
      break;
  }
  s.N = s.k + s.b + 2 * s.a;
  return {s, dims_of(s)};
}

int euler_fix(int g, int k, int n) {
  require(g >= 0 && k >= 0 && n >= 0, "g, k, n nonnegative");
  require(g == 0 || k >= 1, "k >= 1 when g > 0");
  return n + 2 * k - 2 * g;
}

}  // namespace bv
