#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bv/invariants.hpp"
#include "bv/weierstrass.hpp"

namespace bv {

// Position of a point of S/alpha_S relative to the branch data. Legal tags per order:
//   2: Generic, OnBranch
//   3: Generic, OnFixedCurveImage, IsolatedFixedImage
//   4: Generic, TwoPreimages, OnFixedCurveSmooth, SingularPoint
//   6: Generic, ThreePreimages, TwoPreimagesSmooth, TwoPreimagesSingular, OnBetaFixedCurve,
//      P34Image, P25Image
enum class PointTag {
  Generic,
  OnBranch,
  OnFixedCurveImage,
  IsolatedFixedImage,
  TwoPreimages,
  OnFixedCurveSmooth,
  SingularPoint,
  ThreePreimages,
  TwoPreimagesSmooth,
  TwoPreimagesSingular,
  OnBetaFixedCurve,
  P34Image,
  P25Image,
};

std::string_view to_string(PointTag tag);
// Accepts the tag name or a dashed/lowercase spelling ("on-branch", "p34").
PointTag parse_point_tag(std::string_view text);
const std::vector<PointTag>& legal_tags(Order order);

struct BasePointClass {
  Order order = Order::two();
  PointTag tag = PointTag::Generic;

  // throws InvalidInvariants if the tag is not legal for the order
  static BasePointClass make(Order order, PointTag tag);
};

struct ComponentDesc {
  enum class Kind { RationalCurve, ProjectivePlane, P1BundleOverP1, P1BundleOverCurve };
  Kind kind = Kind::RationalCurve;
  int genus = 0;  // P1BundleOverCurve only

  bool is_surface() const { return kind != Kind::RationalCurve; }
  friend bool operator==(const ComponentDesc&, const ComponentDesc&) = default;
};

std::string to_string(const ComponentDesc& c);

struct FiberDescriptor {
  enum class Variant { Kodaira, SmoothElliptic, NonKodaira };
  Variant variant = Variant::SmoothElliptic;
  std::optional<KodairaType> kodaira;
  std::vector<ComponentDesc> components;
  std::vector<std::pair<int, int>> adjacency;
  bool contains_divisors = false;
};

std::string_view to_string(FiberDescriptor::Variant v);
// One line per component with its neighbours.
std::string render_adjacency(const FiberDescriptor& fiber);

FiberDescriptor classify_fiber(const BasePointClass& p);

enum class MwTorsion { Trivial, Z2, Z3 };
std::string_view to_string(MwTorsion t);
MwTorsion mw_torsion(Order order);

struct EllipticFibrationCheck {
  bool elliptic = false;
  bool contradiction = false;  // order 6 with no isolated fixed points, which cannot occur
};

EllipticFibrationCheck is_elliptic_fibration(Order order, const std::map<int, int>& isolated_point_counts);

enum class K3Fiber { IrreducibleK3, Reducible };
std::string_view to_string(K3Fiber f);
K3Fiber k3_fiber(bool on_branch_point);

// Reducible fibers of X -> E/alpha_E.
int reducible_k3_fiber_count(Order order);

}  // namespace bv
