#include "bv/fibration.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bv/errors.hpp"

namespace bv {

namespace {

struct TagName {
  PointTag tag;
  std::string_view name;
  std::string_view alias;
};

constexpr TagName kTagNames[] = {
    {PointTag::Generic, "Generic", "generic"},
    {PointTag::OnBranch, "OnBranch", "on-branch"},
    {PointTag::OnFixedCurveImage, "OnFixedCurveImage", "on-fixed-curve-image"},
    {PointTag::IsolatedFixedImage, "IsolatedFixedImage", "isolated-fixed-image"},
    {PointTag::TwoPreimages, "TwoPreimages", "two-preimages"},
    {PointTag::OnFixedCurveSmooth, "OnFixedCurveSmooth", "on-fixed-curve-smooth"},
    {PointTag::SingularPoint, "SingularPoint", "singular-point"},
    {PointTag::ThreePreimages, "ThreePreimages", "three-preimages"},
    {PointTag::TwoPreimagesSmooth, "TwoPreimagesSmooth", "two-preimages-smooth"},
    {PointTag::TwoPreimagesSingular, "TwoPreimagesSingular", "two-preimages-singular"},
    {PointTag::OnBetaFixedCurve, "OnBetaFixedCurve", "on-beta-fixed-curve"},
    {PointTag::P34Image, "P34Image", "p34"},
    {PointTag::P25Image, "P25Image", "p25"},
};

std::string fold(std::string_view s) {
  std::string out;
  for (unsigned char c : s)
    if (c != '-' && c != '_') out += static_cast<char>(std::tolower(c));
  return out;
}

using Kind = ComponentDesc::Kind;

FiberDescriptor kodaira(KodairaType::Tag tag) {
  FiberDescriptor f;
  f.variant = FiberDescriptor::Variant::Kodaira;
  f.kodaira = KodairaType{tag, 0};
  return f;
}

FiberDescriptor non_kodaira(std::vector<Kind> kinds, std::vector<std::pair<int, int>> edges) {
  FiberDescriptor f;
  f.variant = FiberDescriptor::Variant::NonKodaira;
  for (auto k : kinds) f.components.push_back({k, 0});
  f.adjacency = std::move(edges);
  f.contains_divisors = std::any_of(f.components.begin(), f.components.end(), [](auto& c) { return c.is_surface(); });
  return f;
}

// A rational curve meeting three disjoint copies of P^2, one point each.
FiberDescriptor curve_and_three_planes() {
  return non_kodaira({Kind::RationalCurve, Kind::ProjectivePlane, Kind::ProjectivePlane, Kind::ProjectivePlane},
                     {{0, 1}, {0, 2}, {0, 3}});
}

}  // namespace

std::string_view to_string(PointTag tag) {
  for (const auto& t : kTagNames)
    if (t.tag == tag) return t.name;
  return "?";
}

PointTag parse_point_tag(std::string_view text) {
  const auto key = fold(text);
  for (const auto& t : kTagNames)
    if (fold(t.name) == key || fold(t.alias) == key) return t.tag;
  throw Error(ErrorKind::ParseError, "unknown point class '" + std::string(text) + "'");
}

const std::vector<PointTag>& legal_tags(Order order) {
  static const std::vector<PointTag> t2 = {PointTag::Generic, PointTag::OnBranch};
  static const std::vector<PointTag> t3 = {PointTag::Generic, PointTag::OnFixedCurveImage,
                                           PointTag::IsolatedFixedImage};
  static const std::vector<PointTag> t4 = {PointTag::Generic, PointTag::TwoPreimages, PointTag::OnFixedCurveSmooth,
                                           PointTag::SingularPoint};
  static const std::vector<PointTag> t6 = {PointTag::Generic,          PointTag::ThreePreimages,
                                           PointTag::TwoPreimagesSmooth, PointTag::TwoPreimagesSingular,
                                           PointTag::OnBetaFixedCurve, PointTag::P34Image,
                                           PointTag::P25Image};
  switch (order.value()) {
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default: return t6;
  }
}

BasePointClass BasePointClass::make(Order order, PointTag tag) {
  const auto& legal = legal_tags(order);
  if (std::find(legal.begin(), legal.end(), tag) == legal.end())
    throw Error(ErrorKind::InvalidInvariants,
                std::string(to_string(tag)) + " is not a point class for order " + std::to_string(order.value()));
  return {order, tag};
}

std::string to_string(const ComponentDesc& c) {
  switch (c.kind) {
    case Kind::RationalCurve: return "RationalCurve";
    case Kind::ProjectivePlane: return "ProjectivePlane";
    case Kind::P1BundleOverP1: return "P1BundleOverP1";
    case Kind::P1BundleOverCurve: return "P1BundleOverCurve(" + std::to_string(c.genus) + ")";
  }
  return "?";
}

std::string_view to_string(FiberDescriptor::Variant v) {
  switch (v) {
    case FiberDescriptor::Variant::Kodaira: return "Kodaira";
    case FiberDescriptor::Variant::SmoothElliptic: return "SmoothElliptic";
    case FiberDescriptor::Variant::NonKodaira: return "NonKodaira";
  }
  return "?";
}

std::string render_adjacency(const FiberDescriptor& fiber) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fiber.components.size(); ++i) {
    out << '[' << i << "] " << to_string(fiber.components[i]) << " --";
    bool any = false;
    for (auto [a, b] : fiber.adjacency) {
      if (a == static_cast<int>(i)) out << ' ' << b, any = true;
      if (b == static_cast<int>(i)) out << ' ' << a, any = true;
    }
    if (!any) out << " (none)";
    out << '\n';
  }
  return out.str();
}

FiberDescriptor classify_fiber(const BasePointClass& p) {
  using Tag = KodairaType::Tag;
  const auto checked = BasePointClass::make(p.order, p.tag);
  switch (checked.tag) {
    case PointTag::Generic: return FiberDescriptor{};
    case PointTag::OnBranch:
    case PointTag::TwoPreimages:
    case PointTag::ThreePreimages: return kodaira(Tag::I0star);
    case PointTag::OnFixedCurveImage:
    case PointTag::TwoPreimagesSmooth: return kodaira(Tag::IVstar);
    case PointTag::OnFixedCurveSmooth: return kodaira(Tag::IIIstar);
    case PointTag::OnBetaFixedCurve: return kodaira(Tag::IIstar);
    case PointTag::IsolatedFixedImage:
    case PointTag::TwoPreimagesSingular: return curve_and_three_planes();
    case PointTag::SingularPoint:
      // 0: image of E, 1: second rational curve, 2-3: P1-bundles over P1
      return non_kodaira({Kind::RationalCurve, Kind::RationalCurve, Kind::P1BundleOverP1, Kind::P1BundleOverP1},
                         {{0, 1}, {0, 2}, {0, 3}});
    case PointTag::P34Image:
      // 0: E, 1: permuted curve, 2: C1, 3-4: chain on C1, 5-6: chain on E, 7: P^2
      return non_kodaira({Kind::RationalCurve, Kind::RationalCurve, Kind::RationalCurve, Kind::RationalCurve,
                          Kind::RationalCurve, Kind::RationalCurve, Kind::RationalCurve, Kind::ProjectivePlane},
                         {{0, 1}, {0, 7}, {2, 7}, {2, 3}, {3, 4}, {0, 5}, {5, 6}});
    case PointTag::P25Image:
      // 0: E, 1: permuted curve, 2: P^2, 3-4: P1-bundles
      return non_kodaira({Kind::RationalCurve, Kind::RationalCurve, Kind::ProjectivePlane, Kind::P1BundleOverP1,
                          Kind::P1BundleOverP1},
                         {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  }
  return FiberDescriptor{};
}

std::string_view to_string(MwTorsion t) {
  switch (t) {
    case MwTorsion::Trivial: return "Trivial";
    case MwTorsion::Z2: return "Z2";
    case MwTorsion::Z3: return "Z3";
  }
  return "?";
}

MwTorsion mw_torsion(Order order) {
  switch (order.value()) {
    case 3: return MwTorsion::Z3;
    case 4: return MwTorsion::Z2;
    default: return MwTorsion::Trivial;
  }
}

EllipticFibrationCheck is_elliptic_fibration(Order order, const std::map<int, int>& counts) {
  bool all_zero = true;
  for (int j = 1; j < order.value(); ++j) {
    auto it = counts.find(j);
    if (it == counts.end())
      throw Error(ErrorKind::InvalidInvariants, "missing isolated point count for power " + std::to_string(j));
    if (it->second < 0) throw Error(ErrorKind::InvalidInvariants, "negative isolated point count");
    all_zero = all_zero && it->second == 0;
  }
  for (auto& [j, c] : counts)
    if (j < 1 || j >= order.value()) throw Error(ErrorKind::InvalidPower, "power " + std::to_string(j));
  if (order == Order::six()) return {false, all_zero};
  return {all_zero, false};
}

std::string_view to_string(K3Fiber f) { return f == K3Fiber::Reducible ? "Reducible" : "IrreducibleK3"; }

K3Fiber k3_fiber(bool on_branch_point) { return on_branch_point ? K3Fiber::Reducible : K3Fiber::IrreducibleK3; }

int reducible_k3_fiber_count(Order order) { return branch_point_count(elliptic_profile(order)); }

}  // namespace bv
