#include "bv/ellk3.hpp"

#include <charconv>
#include <numeric>

#include "bv/errors.hpp"
#include "bv/lefschetz.hpp"

namespace bv {

namespace {

int parse_positive(std::string_view s, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1)
    throw Error(ErrorKind::ParseError, "bad multiplicity list '" + std::string(text) + "'");
  return v;
}

}  // namespace

MultiplicityProfile MultiplicityProfile::from_c(const std::array<int, 5>& c) {
  int degree = 0;
  for (int mu = 1; mu <= 5; ++mu) {
    if (c[mu - 1] < 0) throw Error(ErrorKind::InvalidInvariants, "negative root count");
    degree += mu * c[mu - 1];
  }
  if (degree != 12)
    throw Error(ErrorKind::InvalidInvariants, "sum of multiplicities is " + std::to_string(degree) + ", expected 12");
  MultiplicityProfile p;
  p.c_ = c;
  return p;
}

MultiplicityProfile MultiplicityProfile::from_counts(const std::map<int, int>& counts) {
  std::array<int, 5> c{};
  for (auto [mu, n] : counts) {
    if (mu < 1 || mu > 5)
      throw Error(ErrorKind::InvalidInvariants, "multiplicity " + std::to_string(mu) + " outside 1..5");
    c[mu - 1] += n;
  }
  return from_c(c);
}

MultiplicityProfile MultiplicityProfile::parse(std::string_view text) {
  std::map<int, int> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const auto x = item.find_first_of("xX");
    if (x == std::string_view::npos) {
      counts[parse_positive(item, text)] += 1;
    } else {
      counts[parse_positive(item.substr(0, x), text)] += parse_positive(item.substr(x + 1), text);
    }
    pos = end + 1;
  }
  return from_counts(counts);
}

std::map<int, int> MultiplicityProfile::counts() const {
  std::map<int, int> out;
  for (int mu = 1; mu <= 5; ++mu)
    if (c_[mu - 1] > 0) out[mu] = c_[mu - 1];
  return out;
}

std::string to_string(const MultiplicityProfile& p) {
  std::string out;
  for (int mu = 5; mu >= 1; --mu) {
    const int n = p.count(mu);
    if (n == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(mu);
    if (n > 1) out += "x" + std::to_string(n);
  }
  return out;
}

KodairaType fiber_type(int mu) {
  using Tag = KodairaType::Tag;
  switch (mu) {
    case 1: return {Tag::II, 0};
    case 2: return {Tag::IV, 0};
    case 3: return {Tag::I0star, 0};
    case 4: return {Tag::IVstar, 0};
    case 5: return {Tag::IIstar, 0};
  }
  throw Error(ErrorKind::InvalidInvariants, "multiplicity " + std::to_string(mu) + " outside 1..5");
}

std::map<int, KodairaType> fiber_types(const MultiplicityProfile& p) {
  std::map<int, KodairaType> out;
  for (auto [mu, n] : p.counts()) out[mu] = fiber_type(mu);
  return out;
}

MultisectionGenus bisection_genus(const MultiplicityProfile& p) {
  // y^2 = p12(t) branches over the odd-multiplicity roots
  const int odd = p.count(1) + p.count(3) + p.count(5);
  return {odd >= 2 ? odd / 2 - 1 : 0, odd == 0};
}

MultisectionGenus trisection_genus(const MultiplicityProfile& p) {
  int ramification = 0;
  bool all_divisible = true;
  for (auto [mu, n] : p.counts()) {
    ramification += n * (3 - std::gcd(mu, 3));
    all_divisible = all_divisible && mu % 3 == 0;
  }
  if (all_divisible) return {0, true};
  return {(-6 + ramification) / 2 + 1, false};
}

int rh_quotient_genus(int g, int degree, int branch_points) {
  if (g < 0 || degree < 1 || branch_points < 0) throw Error(ErrorKind::InvalidCover, "negative cover data");
  const int num = 2 * g - 2 - branch_points * (degree - 1);
  if (num % (2 * degree) != 0)
    throw Error(ErrorKind::InvalidCover, "2g - 2 - R is not divisible by " + std::to_string(2 * degree));
  const int q = num / (2 * degree) + 1;
  if (q < 0) throw Error(ErrorKind::InvalidCover, "negative quotient genus");
  return q;
}

ProfileInvariants invariants_from_profile(const MultiplicityProfile& p) {
  const auto bis = bisection_genus(p);
  const auto tri = trisection_genus(p);
  if (bis.reducible)
    throw Error(ErrorKind::UnsupportedSplitting, "the bisection y^2 = p12(t) splits for " + to_string(p));
  if (tri.reducible)
    throw Error(ErrorKind::UnsupportedSplitting, "the trisection x^3 = -p12(t) splits for " + to_string(p));
  const int c1 = p.count(1), c2 = p.count(2), c3 = p.count(3), c4 = p.count(4), c5 = p.count(5);

  FixedLocusN6 s;
  s.l = 1 + c5;
  s.k = 2 + c4 + 2 * c5;
  s.N = 2 + c3 + c4 + 4 * c5;
  s.p34 = c1 + c3 + 2 * c4 + 3 * c5;
  s.p25 = c2 + c3 + c4 + 4 * c5;
  s.nprime = c4;
  s.gB = bis.genus;
  s.gF1 = tri.genus;
  validate(s);

  ProfileInvariants out;
  out.locus = s;
  out.chi = {2 * s.l + s.p25 + s.p34, 4 - 2 * s.gB + 2 * (c4 + 2 * c5) + s.n(),
             4 - 2 * s.gF1 + 2 * (c3 + c4 + 4 * c5)};
  return out;
}

ProfileHodge hodge_from_profile(const MultiplicityProfile& p) {
  const auto inv = invariants_from_profile(p);
  const auto sols = solve(Order::six(), {{1, inv.chi[0]}, {2, inv.chi[1]}, {3, inv.chi[2]}});
  if (sols.size() != 1)
    throw Error(ErrorKind::AmbiguousDims,
                std::to_string(sols.size()) + " eigenspace solutions for profile " + to_string(p));
  return {hodge_x6(inv.locus, sols.front()), sols.front()};
}

std::vector<MultiplicityProfile> enumerate_profiles() {
  std::vector<MultiplicityProfile> out;
  for (int c1 = 0; c1 <= 12; ++c1)
    for (int c2 = 0; c1 + 2 * c2 <= 12; ++c2)
      for (int c3 = 0; c1 + 2 * c2 + 3 * c3 <= 12; ++c3)
        for (int c4 = 0; c1 + 2 * c2 + 3 * c3 + 4 * c4 <= 12; ++c4) {
          const int rest = 12 - (c1 + 2 * c2 + 3 * c3 + 4 * c4);
          if (rest % 5 == 0) out.push_back(MultiplicityProfile::from_c({c1, c2, c3, c4, rest / 5}));
        }
  return out;
}

}  // namespace bv
