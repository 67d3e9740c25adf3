#pragma once

#include <string>
#include <string_view>

namespace bv {

// P^2 or the Hirzebruch surface F_k; F_0 is P^1 x P^1.
struct BaseSurface {
  enum class Kind { ProjectivePlane, Hirzebruch };
  Kind kind = Kind::ProjectivePlane;
  int k = 0;  // Hirzebruch only

  static BaseSurface p2() { return {Kind::ProjectivePlane, 0}; }
  static BaseSurface hirzebruch(int k);
  static BaseSurface p1xp1() { return hirzebruch(0); }

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

std::string to_string(const BaseSurface& base);
// "P2", "F<k>", "P1xP1" (case-insensitive).
BaseSurface parse_base(std::string_view text);

// t*D_t + z*D_z on F_k; on P^2 the degree is t and z = 0.
struct DivisorClass {
  BaseSurface base;
  int t = 0;
  int z = 0;

  static DivisorClass plane(int degree) { return {BaseSurface::p2(), degree, 0}; }
  static DivisorClass on(const BaseSurface& base, int t, int z);
  // Bidegree (a, b) on P^1 x P^1.
  static DivisorClass bidegree(int a, int b) { return on(BaseSurface::p1xp1(), a, b); }
  // D_y = k D_t + D_z, D_s = D_t.
  static DivisorClass d_y(const BaseSurface& base) { return on(base, base.k, 1); }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(int s, const DivisorClass& c);

std::string to_string(const DivisorClass& c);
// "12,3" on F_k, "6" on P^2.
DivisorClass parse_class(std::string_view text, const BaseSurface& base);

int intersect(const DivisorClass& c1, const DivisorClass& c2, const BaseSurface& base);
DivisorClass canonical(const BaseSurface& base);
int adjunction_genus(const DivisorClass& c, const BaseSurface& base);
BaseSurface quotient_hirzebruch(int k, int d);

}  // namespace bv
