#pragma once

// Fixed-locus data of purely non-symplectic automorphisms of order 2, 3, 4, 6
// on K3 surfaces, and the lattice relations tying them to (r, a, m).

#include <array>
#include <map>
#include <string_view>

namespace bv {

// Order of the automorphism: one of 2, 3, 4, 6.
class Order {
 public:
  static Order of(int value);  // throws InvalidInvariants outside {2, 3, 4, 6}
  static constexpr Order two() { return Order(2); }
  static constexpr Order three() { return Order(3); }
  static constexpr Order four() { return Order(4); }
  static constexpr Order six() { return Order(6); }

  constexpr int value() const { return value_; }
  friend constexpr bool operator==(Order, Order) = default;

 private:
  constexpr explicit Order(int v) : value_(v) {}
  int value_;
};

inline constexpr std::array<Order, 4> kAllOrders = {Order::two(), Order::three(), Order::four(),
                                                    Order::six()};

enum class JInvariant { Any, Zero, J1728 };

std::string_view to_string(JInvariant j);

// alpha_E acting on the elliptic curve E with alpha_E^*(omega) = zeta_n omega.
struct EllipticAutomorphismProfile {
  Order order = Order::two();
  JInvariant j_invariant = JInvariant::Any;
  std::map<int, int> fixed_point_counts;  // power j -> #Fix(alpha_E^j)

  friend bool operator==(const EllipticAutomorphismProfile&,
                         const EllipticAutomorphismProfile&) = default;
};

EllipticAutomorphismProfile elliptic_profile(Order order);

// Number of reducible fibers of the isotrivial K3 fibration X -> E/alpha_E, i.e. the
// number of alpha_E-orbits of points with non-trivial stabilizer.
int branch_point_count(const EllipticAutomorphismProfile& profile);

// Order 2. Either empty (the Enriques involution, (r, a) = (10, 10)) or N curves of
// total genus Nprime.
struct FixedLocusN2 {
  bool empty_fixed_locus = false;
  int N = 0;
  int Nprime = 0;

  static FixedLocusN2 empty() { return {true, 0, 0}; }
  friend bool operator==(const FixedLocusN2&, const FixedLocusN2&) = default;
};

// Order 3. n isolated points and k curves, the highest-genus one of genus gC.
struct FixedLocusN3 {
  int n_points = 0;
  int k_curves = 0;
  int gC = 0;

  friend bool operator==(const FixedLocusN3&, const FixedLocusN3&) = default;
};

enum class N4Case { TwoEllipticCurves, DFirstType, DSecondType };

std::string_view to_string(N4Case c);
N4Case parse_n4_case(std::string_view text);

// Order 4. The curves fixed by alpha^2 split into k curves fixed by alpha (first type),
// b curves invariant but not fixed (second type) and a PAIRS of curves swapped by alpha
// (third type, 2a curves in total). D is the highest-genus curve fixed by alpha^2.
struct FixedLocusN4 {
  N4Case fixed_case = N4Case::DFirstType;
  int k = 0;
  int b = 0;
  int a = 0;
  int n1 = 0;  // isolated fixed points of alpha off D
  int n2 = 0;  // isolated fixed points of alpha on D
  int gD = 0;
  int N = 0;   // curves fixed by alpha^2

  friend bool operator==(const FixedLocusN4&, const FixedLocusN4&) = default;
};

// Order 6 (beta_S). Here b counts TRIPLES of beta^3-fixed curves permuted by beta and a
// counts pairs of beta^2-fixed curves swapped by beta; unrelated to FixedLocusN4::a/b.
struct FixedLocusN6 {
  int l = 0;       // curves fixed by beta
  int N = 0;       // curves fixed by beta^3
  int k = 0;       // curves fixed by beta^2
  int a = 0;
  int b = 0;
  int nprime = 0;  // pairs of beta^2-fixed points swapped by beta
  int p25 = 0;
  int p34 = 0;
  int gD = 0;
  int gB = 0;
  int gBq = 0;
  int gF1 = 0;
  int gF1q = 0;
  int gF2 = 0;
  int gF2q = 0;

  // Isolated fixed points of beta^2.
  int n() const { return p25 + 2 * nprime; }
  friend bool operator==(const FixedLocusN6&, const FixedLocusN6&) = default;
};

// Dimensions of the eigenvalue classes of alpha_S^* on H^2(S, C).
//   r  : eigenvalue 1
//   m  : one primitive n-th root of unity (all primitive roots share this dimension)
//   d2 : order 4 -> eigenvalue -1; order 6 -> each primitive cube root of unity
//   d3 : order 6 -> eigenvalue -1
// For order 2 the -1 eigenspace is m = 22 - r.
struct EigenspaceDims {
  Order order = Order::two();
  int r = 0;
  int m = 0;
  int d2 = 0;
  int d3 = 0;

  // Validated constructor: nonnegative, r >= 1, m >= 1, weighted sum 22.
  static EigenspaceDims make(Order order, int r, int m, int d2 = 0, int d3 = 0);
  // m from r for orders 2 and 3, where r determines everything.
  static EigenspaceDims from_r(Order order, int r);

  int weighted_sum() const;
  friend bool operator==(const EigenspaceDims&, const EigenspaceDims&) = default;
};

// Weight (number of eigenvalues) of each class r, m, d2, d3 for the order; zero when
// the class does not exist.
std::array<int, 4> class_weights(Order order);

void validate(const FixedLocusN2& locus);
void validate(const FixedLocusN3& locus);
void validate(const FixedLocusN4& locus);
void validate(const FixedLocusN6& locus);
void validate(const EigenspaceDims& dims);

// (r, a) -> (N, N') for a non-empty order-2 fixed locus.
FixedLocusN2 n2_from_lattice(int r, int a);

struct Lattice2 {
  int r = 0;
  int a = 0;
  friend bool operator==(const Lattice2&, const Lattice2&) = default;
};

// Inverse of n2_from_lattice; the empty locus maps to (10, 10).
Lattice2 lattice_of(const FixedLocusN2& locus);

FixedLocusN3 n3_from_lattice(int r, int a);

struct N4Completion {
  FixedLocusN4 locus;
  EigenspaceDims dims;
};

// Fill in n1, b, N, r, m from (case, k, a, g(D)) and, for the second type, n2.
N4Completion n4_complete(N4Case fixed_case, int k, int a, int gD, int n2 = 0);

// (r, m, d2) re-derived from a completed order-4 locus.
EigenspaceDims dims_of(const FixedLocusN4& locus);

// Euler characteristic of a fixed locus with n points and k curves, the highest of
// genus g and the others rational.
int euler_fix(int g, int k, int n);

}  // namespace bv
