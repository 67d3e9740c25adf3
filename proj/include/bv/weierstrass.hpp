#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bv/toricbase.hpp"

namespace bv {

// Vanishing order of a section along a curve; infinite when the section is identically zero.
class VanishingOrder {
 public:
  static constexpr VanishingOrder infinite() { return VanishingOrder(-1); }
  static VanishingOrder of(int n);

  constexpr bool is_infinite() const { return value_ < 0; }
  int value() const;  // throws for infinite
  // true when the order is at least n
  constexpr bool at_least(int n) const { return is_infinite() || value_ >= n; }
  constexpr bool equals(int n) const { return value_ == n; }
  friend constexpr bool operator==(VanishingOrder, VanishingOrder) = default;

 private:
  constexpr explicit VanishingOrder(int v) : value_(v) {}
  int value_;
};

std::string to_string(VanishingOrder v);

struct KodairaType {
  enum class Tag { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
  Tag tag = Tag::I0;
  int n = 0;  // In and Instar only

  // Topological Euler number of the fiber.
  int euler_number() const;
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

// "I0", "I3", "II", "III", "IV", "I0*", "I2*", "IV*", "III*", "II*"
std::string to_string(const KodairaType& t);

struct SectionFactor {
  std::string name;
  DivisorClass cls;
  int exponent = 1;
  std::optional<int> genus;  // nullopt = unknown
  friend bool operator==(const SectionFactor&, const SectionFactor&) = default;
};

struct SymbolicSection {
  std::vector<SectionFactor> factors;
  bool is_zero = false;
  bool generic_unit = false;  // times a generic section of the residual class
  DivisorClass residual;

  static SymbolicSection zero(const BaseSurface& base);
  DivisorClass total_class() const;
  std::optional<int> exponent_of(std::string_view name) const;
};

struct WeierstrassModel {
  std::string name;
  BaseSurface base;
  SymbolicSection A;
  SymbolicSection B;
};

const std::vector<std::string>& preset_names();
// Case-insensitive preset lookup; throws UnknownPreset.
WeierstrassModel build_preset(std::string_view name);

// class(A) = -4K and class(B) = -6K; zero sections pass.
bool class_check(const WeierstrassModel& model);

KodairaType kodaira_classify(VanishingOrder ordA, VanishingOrder ordB, int ordDelta);

struct FactorOrders {
  std::string name;
  VanishingOrder ordA = VanishingOrder::infinite();
  VanishingOrder ordB = VanishingOrder::infinite();
  int ordDelta = 0;
};

// Vanishing orders of A, B and the discriminant along every named factor, in order of
// first appearance (A before B). ord_Delta = min(3 ord_A, 2 ord_B).
std::vector<FactorOrders> factor_orders(const WeierstrassModel& model);

std::vector<std::pair<std::string, KodairaType>> singular_fibers(const WeierstrassModel& model);

// Sum over factors of ord_Delta(f) class(f), plus the residual class of the discriminant.
DivisorClass discriminant_class(const WeierstrassModel& model);

}  // namespace bv
