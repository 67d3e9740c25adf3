#include "bv/toricbase.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bv/errors.hpp"

namespace bv {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

int parse_int(std::string_view s, std::string_view context) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, "expected an integer in '" + std::string(context) + "'");
  return value;
}

void same_base(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.base == b.base))
    throw Error(ErrorKind::BaseMismatch, to_string(a) + " on " + to_string(a.base) + " vs " + to_string(b) + " on " +
                                             to_string(b.base));
}

}  // namespace

BaseSurface BaseSurface::hirzebruch(int k) {
  if (k < 0) throw Error(ErrorKind::ParseError, "Hirzebruch index must be >= 0");
  return {Kind::Hirzebruch, k};
}

std::string to_string(const BaseSurface& base) {
  if (base.kind == BaseSurface::Kind::ProjectivePlane) return "P2";
  return "F" + std::to_string(base.k);
}

BaseSurface parse_base(std::string_view text) {
  const auto s = lower(text);
  if (s == "p2") return BaseSurface::p2();
  if (s == "p1xp1") return BaseSurface::p1xp1();
  if (s.size() > 1 && s[0] == 'f') return BaseSurface::hirzebruch(parse_int(std::string_view(s).substr(1), text));
  throw Error(ErrorKind::ParseError, "unknown base surface '" + std::string(text) + "'");
}

DivisorClass DivisorClass::on(const BaseSurface& base, int t, int z) {
  if (base.kind == BaseSurface::Kind::ProjectivePlane && z != 0)
    throw Error(ErrorKind::BaseMismatch, "classes on P2 have no D_z part");
  return {base, t, z};
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  same_base(a, b);
  return {a.base, a.t + b.t, a.z + b.z};
}

DivisorClass operator-(const DivisorClass& a) { return {a.base, -a.t, -a.z}; }

DivisorClass operator*(int s, const DivisorClass& c) { return {c.base, s * c.t, s * c.z}; }

std::string to_string(const DivisorClass& c) {
  if (c.base.kind == BaseSurface::Kind::ProjectivePlane) return std::to_string(c.t);
  return std::to_string(c.t) + "," + std::to_string(c.z);
}

DivisorClass parse_class(std::string_view text, const BaseSurface& base) {
  const auto comma = text.find(',');
  if (base.kind == BaseSurface::Kind::ProjectivePlane) {
    if (comma != std::string_view::npos) throw Error(ErrorKind::ParseError, "classes on P2 are a single degree");
    return DivisorClass::plane(parse_int(text, text));
  }
  if (comma == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected 't,z' for a class on " + to_string(base));
  return DivisorClass::on(base, parse_int(text.substr(0, comma), text), parse_int(text.substr(comma + 1), text));
}

int intersect(const DivisorClass& c1, const DivisorClass& c2, const BaseSurface& base) {
  if (!(c1.base == base)) throw Error(ErrorKind::BaseMismatch, to_string(c1) + " is not on " + to_string(base));
  if (!(c2.base == base)) throw Error(ErrorKind::BaseMismatch, to_string(c2) + " is not on " + to_string(base));
  if (base.kind == BaseSurface::Kind::ProjectivePlane) return c1.t * c2.t;
  // D_t^2 = 0, D_t.D_z = 1, D_z^2 = -k
  return c1.t * c2.z + c1.z * c2.t - base.k * c1.z * c2.z;
}

DivisorClass canonical(const BaseSurface& base) {
  if (base.kind == BaseSurface::Kind::ProjectivePlane) return DivisorClass::plane(-3);
  return {base, -(base.k + 2), -2};
}

int adjunction_genus(const DivisorClass& c, const BaseSurface& base) {
  const int twice = intersect(c, c + canonical(base), base);
  if (twice % 2 != 0 || twice < -2)
    throw Error(ErrorKind::NotACurveClass, "C.(C+K) = " + std::to_string(twice) + " for " + to_string(c));
  return twice / 2 + 1;
}

BaseSurface quotient_hirzebruch(int k, int d) {
  if (k < 0 || d < 1) throw Error(ErrorKind::InvalidInvariants, "need k >= 0 and d >= 1");
  return BaseSurface::hirzebruch(d * k);
}

}  // namespace bv
