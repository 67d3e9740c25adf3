#include "bv/lefschetz.hpp"

#include <numeric>
#include <string>

#include "bv/errors.hpp"

namespace bv {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

int totient(int n) {
  int result = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++result;
  return result;
}

// Ramanujan sum: sum of the j-th powers of the primitive d-th roots of unity.
int ramanujan(int d, int j) {
  const int q = d / std::gcd(d, j);
  return mobius(q) * totient(d) / totient(q);
}

// Root-of-unity order of each eigenvalue class.
std::vector<int> class_divisors(Order order) {
  switch (order.value()) {
    case 2: return {1, 2};
    case 3: return {1, 3};
    case 4: return {1, 4, 2};
    default: return {1, 6, 3, 2};
  }
}

void check_power(Order order, int power) {
  if (power < 1 || power >= order.value())
    throw Error(ErrorKind::InvalidPower, "power " + std::to_string(power) + " outside 1.." +
                                             std::to_string(order.value() - 1));
}

std::vector<int> as_vector(const EigenspaceDims& d) {
  std::vector<int> v{d.r, d.m, d.d2, d.d3};
  v.resize(class_divisors(d.order).size());
  return v;
}

}  // namespace

std::vector<int> trace_coeffs(Order order, int power) {
  check_power(order, power);
  std::vector<int> out;
  for (int d : class_divisors(order)) out.push_back(ramanujan(d, power));
  return out;
}

int lefschetz_chi(const EigenspaceDims& dims, int power) {
  auto c = trace_coeffs(dims.order, power);
  auto v = as_vector(dims);
  return 2 + std::inner_product(c.begin(), c.end(), v.begin(), 0);
}

std::vector<EigenspaceDims> solve(Order order, const std::vector<ChiConstraint>& constraints) {
  std::vector<std::vector<int>> rows;
  for (const auto& c : constraints) rows.push_back(trace_coeffs(order, c.power));

  const auto w = class_weights(order);
  const std::size_t vars = class_divisors(order).size();
  std::vector<EigenspaceDims> out;
  std::vector<int> x(4, 0);

  auto accept = [&] {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int trace = 0;
      for (std::size_t v = 0; v < vars; ++v) trace += rows[i][v] * x[v];
      if (2 + trace != constraints[i].chi) return;
    }
    out.push_back(EigenspaceDims{order, x[0], x[1], x[2], x[3]});
  };

  // The last variable is fixed by the dimension identity.
  auto recurse = [&](auto&& self, std::size_t v, int remaining) -> void {
    if (v + 1 == vars) {
      if (remaining % w[v] != 0) return;
      x[v] = remaining / w[v];
      if (v == 1 && x[v] < 1) return;
      accept();
      return;
    }
    for (int value = v < 2 ? 1 : 0; value <= 22 && w[v] * value <= remaining; ++value) {
      x[v] = value;
      self(self, v + 1, remaining - w[v] * value);
    }
  };
  recurse(recurse, 0, 22);
  return out;
}

}  // namespace bv
