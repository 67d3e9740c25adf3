#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "bv/errors.hpp"
#include "bv/lefschetz.hpp"

using namespace bv;

namespace {

// Class index of an eigenvalue whose multiplicative order is root_order.
int class_index(int n, int root_order) {
  if (root_order == 1) return 0;
  if (root_order == n) return 1;
  if (n == 4 && root_order == 2) return 2;
  if (n == 6 && root_order == 3) return 2;
  if (n == 6 && root_order == 2) return 3;
  return -1;
}

std::size_t class_count(int n) { return n == 2 || n == 3 ? 2 : n == 4 ? 3 : 4; }

// Sum of lambda^power per class, from floating-point roots of unity.
std::vector<int> oracle_coeffs(int n, int power) {
  const double pi = std::acos(-1.0);
  std::vector<std::complex<double>> sums(class_count(n));
  for (int k = 0; k < n; ++k) {
    const int root_order = n / std::gcd(k, n);
    const int idx = class_index(n, root_order);
    REQUIRE(idx >= 0);
    sums[idx] += std::polar(1.0, 2 * pi * k * power / n);
  }
  std::vector<int> out;
  for (auto s : sums) {
    CHECK(std::abs(s.imag()) < 1e-9);
    out.push_back(static_cast<int>(std::lround(s.real())));
  }
  return out;
}

std::vector<int> dims_vector(const EigenspaceDims& d) {
  std::vector<int> v{d.r, d.m, d.d2, d.d3};
  v.resize(class_count(d.order.value()));
  return v;
}

// Every dimension vector with weighted sum 22, r >= 1, m >= 1.
std::vector<EigenspaceDims> all_dims(Order order) {
  std::vector<EigenspaceDims> out;
  for (int r = 1; r <= 22; ++r)
    for (int m = 1; m <= 22; ++m)
      for (int d2 = 0; d2 <= 22; ++d2)
        for (int d3 = 0; d3 <= 22; ++d3) {
          EigenspaceDims d{order, r, m, d2, d3};
          if (class_count(order.value()) < 3 && d2) continue;
          if (class_count(order.value()) < 4 && d3) continue;
          if (d.weighted_sum() == 22) out.push_back(d);
        }
  return out;
}

ChiConstraint chi_of(const EigenspaceDims& d, int power) {
  const auto c = oracle_coeffs(d.order.value(), power);
  const auto v = dims_vector(d);
  return {power, 2 + std::inner_product(c.begin(), c.end(), v.begin(), 0)};
}

}  // namespace

TEST_CASE("trace coefficients, spelled out") {
  CHECK(trace_coeffs(Order::six(), 1) == std::vector<int>{1, 1, -1, -1});
  CHECK(trace_coeffs(Order::six(), 2) == std::vector<int>{1, -1, -1, 1});
  CHECK(trace_coeffs(Order::six(), 3) == std::vector<int>{1, -2, 2, -1});
  CHECK(trace_coeffs(Order::three(), 1) == std::vector<int>{1, -1});
  CHECK(trace_coeffs(Order::two(), 1) == std::vector<int>{1, -1});
  CHECK(trace_coeffs(Order::four(), 2) == std::vector<int>{1, -2, 1});
}

TEST_CASE("trace coefficients agree with complex roots of unity") {
  for (auto order : kAllOrders)
    for (int j = 1; j < order.value(); ++j) CHECK(trace_coeffs(order, j) == oracle_coeffs(order.value(), j));
}

TEST_CASE("power out of range") {
  for (auto order : kAllOrders)
    for (int j : {0, -1, order.value(), order.value() + 1}) {
      CHECK_THROWS_AS(trace_coeffs(order, j), Error);
      try {
        solve(order, {{j, 0}});
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPower);
      }
    }
}

TEST_CASE("solve examples") {
  auto two = solve(Order::six(), {{1, 6}, {2, -6}});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == EigenspaceDims{Order::six(), 1, 7, 3, 1});
  CHECK(two[1] == EigenspaceDims{Order::six(), 2, 6, 4, 0});

  auto unique = solve(Order::six(), {{1, 10}, {2, 12}, {3, 10}});
  REQUIRE(unique.size() == 1);
  CHECK(unique[0] == EigenspaceDims{Order::six(), 11, 2, 2, 3});

  CHECK(solve(Order::six(), {{1, 8}, {2, 12}, {3, 10}}).empty());

  auto order3 = solve(Order::three(), {{1, -6}});
  REQUIRE(order3.size() == 1);
  CHECK(order3[0] == EigenspaceDims{Order::three(), 2, 10, 0, 0});

  auto line1 = solve(Order::six(), {{1, 14}, {2, -6}, {3, -16}});
  REQUIRE(line1.size() == 1);
  CHECK(line1[0] == EigenspaceDims{Order::six(), 2, 10, 0, 0});
}

TEST_CASE("order-6 coefficient matrix has determinant -36") {
  std::vector<std::vector<long long>> a = {{1, 2, 2, 1}};
  for (int j = 1; j <= 3; ++j) {
    auto c = trace_coeffs(Order::six(), j);
    a.push_back({c[0], c[1], c[2], c[3]});
  }
  auto det3 = [](long long m00, long long m01, long long m02, long long m10, long long m11, long long m12,
                 long long m20, long long m21, long long m22) {
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) + m02 * (m10 * m21 - m11 * m20);
  };
  long long det = 0;
  for (int c = 0; c < 4; ++c) {
    std::vector<long long> minor;
    for (int r = 1; r < 4; ++r)
      for (int k = 0; k < 4; ++k)
        if (k != c) minor.push_back(a[r][k]);
    const long long sign = c % 2 ? -1 : 1;
    det += sign * a[0][c] *
           det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5], minor[6], minor[7], minor[8]);
  }
  CHECK((det == -36 || det == 36));
}

TEST_CASE("brute-force oracle: every dimension vector is recovered from its chi vector") {
  for (auto order : kAllOrders) {
    const auto dims = all_dims(order);
    CHECK(!dims.empty());
    for (const auto& d : dims) {
      std::vector<ChiConstraint> cs;
      for (int j = 1; j < order.value(); ++j) cs.push_back(chi_of(d, j));
      const auto sols = solve(order, cs);
      CHECK(std::find(sols.begin(), sols.end(), d) != sols.end());
      if (order == Order::six()) CHECK(sols.size() == 1);
      for (const auto& s : sols) {
        CHECK(s.weighted_sum() == 22);
        for (const auto& c : cs) CHECK(lefschetz_chi(s, c.power) == c.chi);
      }
      CHECK(std::is_sorted(sols.begin(), sols.end(), [](const auto& x, const auto& y) {
        return dims_vector(x) < dims_vector(y);
      }));
    }
  }
}

TEST_CASE("adding a constraint never enlarges the solution set") {
  for (const auto& d : all_dims(Order::six())) {
    if ((d.r + d.m + d.d2) % 3 != 0) continue;
    const auto c1 = chi_of(d, 1), c2 = chi_of(d, 2), c3 = chi_of(d, 3);
    const auto s1 = solve(Order::six(), {c1});
    const auto s12 = solve(Order::six(), {c1, c2});
    const auto s123 = solve(Order::six(), {c1, c2, c3});
    CHECK(s12.size() <= s1.size());
    CHECK(s123.size() <= s12.size());
    for (const auto& s : s123) CHECK(std::find(s12.begin(), s12.end(), s) != s12.end());
    for (const auto& s : s12) CHECK(std::find(s1.begin(), s1.end(), s) != s1.end());
  }
}
