#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bv/hodge.hpp"
#include "bv/invariants.hpp"
#include "bv/weierstrass.hpp"

namespace bv {

// Root multiplicities of p12(t) in y^2 = x^3 + p12(t): c[mu] roots of multiplicity mu.
class MultiplicityProfile {
 public:
  // throws InvalidInvariants unless sum mu c_mu = 12 with 1 <= mu <= 5
  static MultiplicityProfile from_counts(const std::map<int, int>& counts);
  static MultiplicityProfile from_c(const std::array<int, 5>& c);
  // "4,3,3,2", "5,1x7", "1x12"
  static MultiplicityProfile parse(std::string_view text);

  int count(int mu) const { return c_[mu - 1]; }
  const std::array<int, 5>& c() const { return c_; }
  std::map<int, int> counts() const;

  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

 private:
  std::array<int, 5> c_{};
};

// Multiplicities in decreasing order, runs written as mu x count: "5,1x7".
std::string to_string(const MultiplicityProfile& p);

// Kodaira type of the fiber over a root of multiplicity mu (II, IV, I0*, IV*, II*).
KodairaType fiber_type(int mu);
std::map<int, KodairaType> fiber_types(const MultiplicityProfile& p);

struct MultisectionGenus {
  int genus = 0;
  bool reducible = false;
  friend bool operator==(const MultisectionGenus&, const MultisectionGenus&) = default;
};

MultisectionGenus bisection_genus(const MultiplicityProfile& p);
MultisectionGenus trisection_genus(const MultiplicityProfile& p);

// Genus of C/G for a cyclic cover of the given degree totally ramified at branch_points points.
int rh_quotient_genus(int g, int degree, int branch_points);

struct ProfileInvariants {
  FixedLocusN6 locus;
  std::array<int, 3> chi{};  // chi(Fix beta^j), j = 1, 2, 3
};

ProfileInvariants invariants_from_profile(const MultiplicityProfile& p);

struct ProfileHodge {
  HodgeDiamond diamond;
  EigenspaceDims dims;
};

ProfileHodge hodge_from_profile(const MultiplicityProfile& p);

// Every profile with sum mu c_mu = 12, ordered by c vector.
std::vector<MultiplicityProfile> enumerate_profiles();

}  // namespace bv
