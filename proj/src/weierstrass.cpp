#include "bv/weierstrass.hpp"

#include <algorithm>
#include <cctype>

#include "bv/errors.hpp"

namespace bv {

VanishingOrder VanishingOrder::of(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidVanishingOrders, "negative vanishing order");
  return VanishingOrder(n);
}

int VanishingOrder::value() const {
  if (is_infinite()) throw Error(ErrorKind::InvalidVanishingOrders, "infinite vanishing order has no value");
  return value_;
}

std::string to_string(VanishingOrder v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

int KodairaType::euler_number() const {
  switch (tag) {
    case Tag::I0: return 0;
    case Tag::In: return n;
    case Tag::II: return 2;
    case Tag::III: return 3;
    case Tag::IV: return 4;
    case Tag::I0star: return 6;
    case Tag::Instar: return n + 6;
    case Tag::IVstar: return 8;
    case Tag::IIIstar: return 9;
    case Tag::IIstar: return 10;
  }
  return 0;
}

std::string to_string(const KodairaType& t) {
  using Tag = KodairaType::Tag;
  switch (t.tag) {
    case Tag::I0: return "I0";
    case Tag::In: return "I" + std::to_string(t.n);
    case Tag::II: return "II";
    case Tag::III: return "III";
    case Tag::IV: return "IV";
    case Tag::I0star: return "I0*";
    case Tag::Instar: return "I" + std::to_string(t.n) + "*";
    case Tag::IVstar: return "IV*";
    case Tag::IIIstar: return "III*";
    case Tag::IIstar: return "II*";
  }
  return "?";
}

SymbolicSection SymbolicSection::zero(const BaseSurface& base) {
  SymbolicSection s;
  s.is_zero = true;
  s.residual = DivisorClass{base, 0, 0};
  return s;
}

DivisorClass SymbolicSection::total_class() const {
  DivisorClass total = residual;
  for (const auto& f : factors) total = total + f.exponent * f.cls;
  return total;
}

std::optional<int> SymbolicSection::exponent_of(std::string_view name) const {
  for (const auto& f : factors)
    if (f.name == name) return f.exponent;
  return std::nullopt;
}

namespace {

SymbolicSection section(const BaseSurface& base, std::vector<SectionFactor> factors, bool unit = false) {
  SymbolicSection s;
  s.factors = std::move(factors);
  s.generic_unit = unit;
  s.residual = DivisorClass{base, 0, 0};
  return s;
}

SectionFactor factor(std::string name, DivisorClass cls, int exponent, std::optional<int> genus) {
  return {std::move(name), cls, exponent, genus};
}

WeierstrassModel make(std::string name, BaseSurface base, SymbolicSection A, SymbolicSection B) {
  if (A.is_zero && B.is_zero) throw Error(ErrorKind::InvalidInvariants, "A and B both zero");
  return {std::move(name), base, std::move(A), std::move(B)};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"order2-p2",   "order2-f4", "order2-p1p1",
                                                 "order3-p1p1", "order3-f6", "order4-p2",
                                                 "order4-f4",   "order6-p2", "order6-f12"};
  return names;
}

WeierstrassModel build_preset(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });

  if (key == "order2-p2") {
    auto P2 = BaseSurface::p2();
    auto f6 = DivisorClass::plane(6);
    return make(key, P2, section(P2, {factor("f6", f6, 2, 10)}, true), section(P2, {factor("f6", f6, 3, 10)}, true));
  }
  if (key == "order2-f4") {
    auto F4 = BaseSurface::hirzebruch(4);
    auto C = DivisorClass::on(F4, 12, 3), z = DivisorClass::on(F4, 0, 1);
    return make(key, F4, section(F4, {factor("C", C, 2, 10), factor("z", z, 2, 0)}, true),
                section(F4, {factor("C", C, 3, 10), factor("z", z, 3, 0)}, true));
  }
  if (key == "order2-p1p1") {
    auto F0 = BaseSurface::p1xp1();
    auto p = DivisorClass::bidegree(4, 4);
    return make(key, F0, section(F0, {factor("p44", p, 2, 9)}, true), section(F0, {factor("p44", p, 3, 9)}, true));
  }
  if (key == "order3-p1p1") {
    auto F0 = BaseSurface::p1xp1();
    return make(key, F0, SymbolicSection::zero(F0),
                section(F0, {factor("p33", DivisorClass::bidegree(3, 3), 4, 4)}));
  }
  if (key == "order3-f6") {
    auto F6 = BaseSurface::hirzebruch(6);
    // q = z (y^2 - p12 z^2) is reducible
    return make(key, F6, SymbolicSection::zero(F6),
                section(F6, {factor("q", DivisorClass::on(F6, 12, 3), 4, std::nullopt)}));
  }
  if (key == "order4-p2") {
    auto P2 = BaseSurface::p2();
    return make(key, P2, section(P2, {factor("f4", DivisorClass::plane(4), 3, 3)}), SymbolicSection::zero(P2));
  }
  if (key == "order4-f4") {
    auto F4 = BaseSurface::hirzebruch(4);
    return make(key, F4,
                section(F4, {factor("y2-f8z2", DivisorClass::on(F4, 8, 2), 3, 3),
                             factor("z", DivisorClass::on(F4, 0, 1), 2, 0)}),
                SymbolicSection::zero(F4));
  }
  if (key == "order6-p2") {
    auto P2 = BaseSurface::p2();
    return make(key, P2, SymbolicSection::zero(P2),
                section(P2, {factor("F2", DivisorClass::plane(2), 3, 0), factor("F3", DivisorClass::plane(3), 4, 1)}));
  }
  if (key == "order6-f12") {
    auto F12 = BaseSurface::hirzebruch(12);
    return make(key, F12, SymbolicSection::zero(F12),
                section(F12, {factor("X", DivisorClass::on(F12, 12, 1), 4, 0),
                              factor("X+pZ", DivisorClass::on(F12, 12, 1), 3, 0),
                              factor("Z", DivisorClass::on(F12, 0, 1), 5, 0)}));
  }
  throw Error(ErrorKind::UnknownPreset, "'" + std::string(name) + "'");
}

bool class_check(const WeierstrassModel& model) {
  const auto K = canonical(model.base);
  bool ok = true;
  if (!model.A.is_zero) ok = ok && model.A.total_class() == -4 * K;
  if (!model.B.is_zero) ok = ok && model.B.total_class() == -6 * K;
  return ok;
}

KodairaType kodaira_classify(VanishingOrder a, VanishingOrder b, int d) {
  using Tag = KodairaType::Tag;
  if (a.at_least(4) && b.at_least(6))
    throw Error(ErrorKind::NonMinimal, "(ordA, ordB) = (" + to_string(a) + ", " + to_string(b) + ")");
  auto invalid = [&] {
    return Error(ErrorKind::InvalidVanishingOrders,
                 "(" + to_string(a) + ", " + to_string(b) + ", " + std::to_string(d) + ")");
  };
  if (d < 0) throw invalid();
  if (a.equals(0) && b.equals(0)) return d == 0 ? KodairaType{Tag::I0, 0} : KodairaType{Tag::In, d};
  if (d == 0) {
    if (a.equals(0) || b.equals(0)) return {Tag::I0, 0};
    throw invalid();
  }
  if (d == 2 && a.at_least(1) && b.equals(1)) return {Tag::II, 0};
  if (d == 3 && a.equals(1) && b.at_least(2)) return {Tag::III, 0};
  if (d == 4 && a.at_least(2) && b.equals(2)) return {Tag::IV, 0};
  if (d == 6 && a.at_least(2) && b.at_least(3)) return {Tag::I0star, 0};
  if (d > 6 && a.equals(2) && b.equals(3)) return {Tag::Instar, d - 6};
  if (d == 8 && a.at_least(3) && b.equals(4)) return {Tag::IVstar, 0};
  if (d == 9 && a.equals(3) && b.at_least(5)) return {Tag::IIIstar, 0};
  if (d == 10 && a.at_least(4) && b.equals(5)) return {Tag::IIstar, 0};
  throw invalid();
}

namespace {

VanishingOrder order_in(const SymbolicSection& s, const std::string& name) {
  if (s.is_zero) return VanishingOrder::infinite();
  return VanishingOrder::of(s.exponent_of(name).value_or(0));
}

int delta_order(VanishingOrder a, VanishingOrder b) {
  if (a.is_infinite()) return 2 * b.value();
  if (b.is_infinite()) return 3 * a.value();
  return std::min(3 * a.value(), 2 * b.value());
}

const DivisorClass& class_of(const WeierstrassModel& model, const std::string& name) {
  for (const auto* s : {&model.A, &model.B})
    for (const auto& f : s->factors)
      if (f.name == name) return f.cls;
  throw Error(ErrorKind::InternalInconsistency, "no factor named " + name);
}

}  // namespace

std::vector<FactorOrders> factor_orders(const WeierstrassModel& model) {
  std::vector<std::string> names;
  for (const auto* s : {&model.A, &model.B})
    for (const auto& f : s->factors)
      if (std::find(names.begin(), names.end(), f.name) == names.end()) names.push_back(f.name);
  std::vector<FactorOrders> out;
  for (const auto& name : names) {
    FactorOrders fo{name, order_in(model.A, name), order_in(model.B, name), 0};
    fo.ordDelta = delta_order(fo.ordA, fo.ordB);
    out.push_back(fo);
  }
  return out;
}

std::vector<std::pair<std::string, KodairaType>> singular_fibers(const WeierstrassModel& model) {
  std::vector<std::pair<std::string, KodairaType>> out;
  for (const auto& fo : factor_orders(model)) {
    try {
      out.emplace_back(fo.name, kodaira_classify(fo.ordA, fo.ordB, fo.ordDelta));
    } catch (const Error& e) {
      throw Error(e.kind(), "factor " + fo.name + ": " + e.what());
    }
  }
  return out;
}

DivisorClass discriminant_class(const WeierstrassModel& model) {
  const auto& A = model.A;
  const auto& B = model.B;
  DivisorClass along_factors{model.base, 0, 0};
  // Residual of Delta / prod f^ord_Delta, computed from the A^3 and B^2 terms separately.
  DivisorClass residual_a = 3 * A.residual, residual_b = 2 * B.residual;
  for (const auto& fo : factor_orders(model)) {
    const auto& cls = class_of(model, fo.name);
    along_factors = along_factors + fo.ordDelta * cls;
    if (!A.is_zero) residual_a = residual_a + (3 * fo.ordA.value() - fo.ordDelta) * cls;
    if (!B.is_zero) residual_b = residual_b + (2 * fo.ordB.value() - fo.ordDelta) * cls;
  }
  if (A.is_zero) return along_factors + residual_b;
  if (B.is_zero) return along_factors + residual_a;
  if (!(residual_a == residual_b))
    throw Error(ErrorKind::InternalInconsistency, "4A^3 and 27B^2 have different classes");
  return along_factors + residual_a;
}

}  // namespace bv
