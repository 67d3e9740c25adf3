#include "bv/json_io.hpp"

#include <initializer_list>
#include <string>

#include "bv/errors.hpp"

namespace bv {

namespace {

void expect_fields(const json& j, std::initializer_list<std::string_view> allowed, std::string_view type) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, std::string(type) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::ParseError, std::string(type) + ": unknown field '" + key + "'");
  }
}

template <class T>
T field(const json& j, const char* key, std::string_view type) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::ParseError, std::string(type) + ": missing field '" + key + "'");
  try {
    return it->template get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::ParseError, std::string(type) + ": bad value for '" + key + "'");
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback, std::string_view type) {
  return j.contains(key) ? field<T>(j, key, type) : fallback;
}

Order order_field(const json& j, std::string_view type) {
  return Order::of(field<int>(j, "order", type));
}

JInvariant parse_j(const std::string& s) {
  if (s == "Any") return JInvariant::Any;
  if (s == "Zero") return JInvariant::Zero;
  if (s == "J1728") return JInvariant::J1728;
  throw Error(ErrorKind::ParseError, "unknown j_invariant '" + s + "'");
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

void to_json(json& j, const Order& v) { j = v.value(); }
void from_json(const json& j, Order& v) {
  if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, "order: expected an integer");
  v = Order::of(j.get<int>());
}

void to_json(json& j, const EllipticAutomorphismProfile& v) {
  json counts = json::object();
  for (auto [p, c] : v.fixed_point_counts) counts[std::to_string(p)] = c;
  j = json{{"order", v.order}, {"j_invariant", std::string(to_string(v.j_invariant))}, {"fixed_point_counts", counts}};
}
void from_json(const json& j, EllipticAutomorphismProfile& v) {
  constexpr std::string_view T = "EllipticAutomorphismProfile";
  expect_fields(j, {"order", "j_invariant", "fixed_point_counts"}, T);
  v.order = order_field(j, T);
  v.j_invariant = parse_j(field<std::string>(j, "j_invariant", T));
  v.fixed_point_counts.clear();
  const auto counts = field<json>(j, "fixed_point_counts", T);
  for (const auto& [k, c] : counts.items()) {
    try {
      v.fixed_point_counts[std::stoi(k)] = c.get<int>();
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "fixed_point_counts: bad entry '" + k + "'");
    }
  }
}

void to_json(json& j, const FixedLocusN2& v) {
  j = json{{"empty_fixed_locus", v.empty_fixed_locus}, {"N", v.N}, {"Nprime", v.Nprime}};
}
void from_json(const json& j, FixedLocusN2& v) {
  constexpr std::string_view T = "FixedLocusN2";
  expect_fields(j, {"empty_fixed_locus", "N", "Nprime"}, T);
  v.empty_fixed_locus = field_or<bool>(j, "empty_fixed_locus", false, T);
  v.N = field_or<int>(j, "N", 0, T);
  v.Nprime = field_or<int>(j, "Nprime", 0, T);
  validate(v);
}

void to_json(json& j, const FixedLocusN3& v) {
  j = json{{"n_points", v.n_points}, {"k_curves", v.k_curves}, {"gC", v.gC}};
}
void from_json(const json& j, FixedLocusN3& v) {
  constexpr std::string_view T = "FixedLocusN3";
  expect_fields(j, {"n_points", "k_curves", "gC"}, T);
  v.n_points = field<int>(j, "n_points", T);
  v.k_curves = field<int>(j, "k_curves", T);
  v.gC = field<int>(j, "gC", T);
  validate(v);
}

void to_json(json& j, const FixedLocusN4& v) {
  j = json{{"case", std::string(to_string(v.fixed_case))},
           {"k", v.k}, {"b", v.b}, {"a", v.a}, {"n1", v.n1}, {"n2", v.n2}, {"gD", v.gD}, {"N", v.N}};
}
void from_json(const json& j, FixedLocusN4& v) {
  constexpr std::string_view T = "FixedLocusN4";
  expect_fields(j, {"case", "k", "b", "a", "n1", "n2", "gD", "N"}, T);
  v.fixed_case = parse_n4_case(field<std::string>(j, "case", T));
  v.k = field<int>(j, "k", T);
  v.b = field<int>(j, "b", T);
  v.a = field<int>(j, "a", T);
  v.n1 = field<int>(j, "n1", T);
  v.n2 = field<int>(j, "n2", T);
  v.gD = field<int>(j, "gD", T);
  v.N = field<int>(j, "N", T);
  validate(v);
}

void to_json(json& j, const FixedLocusN6& v) {
  j = json{{"l", v.l},       {"N", v.N},       {"k", v.k},       {"a", v.a},       {"b", v.b},
           {"nprime", v.nprime}, {"p25", v.p25}, {"p34", v.p34}, {"gD", v.gD},   {"gB", v.gB},
           {"gBq", v.gBq},   {"gF1", v.gF1},   {"gF1q", v.gF1q}, {"gF2", v.gF2}, {"gF2q", v.gF2q}};
}
void from_json(const json& j, FixedLocusN6& v) {
  constexpr std::string_view T = "FixedLocusN6";
  expect_fields(j, {"l", "N", "k", "a", "b", "nprime", "p25", "p34", "gD", "gB", "gBq", "gF1", "gF1q", "gF2", "gF2q"},
                T);
  v.l = field<int>(j, "l", T);
  v.N = field<int>(j, "N", T);
  v.k = field<int>(j, "k", T);
  v.a = field_or<int>(j, "a", 0, T);
  v.b = field_or<int>(j, "b", 0, T);
  v.nprime = field<int>(j, "nprime", T);
  v.p25 = field<int>(j, "p25", T);
  v.p34 = field<int>(j, "p34", T);
  v.gD = field_or<int>(j, "gD", 0, T);
  v.gB = field_or<int>(j, "gB", 0, T);
  v.gBq = field_or<int>(j, "gBq", 0, T);
  v.gF1 = field_or<int>(j, "gF1", 0, T);
  v.gF1q = field_or<int>(j, "gF1q", 0, T);
  v.gF2 = field_or<int>(j, "gF2", 0, T);
  v.gF2q = field_or<int>(j, "gF2q", 0, T);
  validate(v);
}

void to_json(json& j, const EigenspaceDims& v) {
  j = json{{"order", v.order}, {"r", v.r}, {"m", v.m}};
  if (class_weights(v.order)[2]) j["d2"] = v.d2;
  if (class_weights(v.order)[3]) j["d3"] = v.d3;
}
void from_json(const json& j, EigenspaceDims& v) {
  constexpr std::string_view T = "EigenspaceDims";
  expect_fields(j, {"order", "r", "m", "d2", "d3"}, T);
  v = EigenspaceDims::make(order_field(j, T), field<int>(j, "r", T), field<int>(j, "m", T),
                           field_or<int>(j, "d2", 0, T), field_or<int>(j, "d3", 0, T));
}

void to_json(json& j, const ChiConstraint& v) { j = json{{"power", v.power}, {"chi", v.chi}}; }
void from_json(const json& j, ChiConstraint& v) {
  constexpr std::string_view T = "ChiConstraint";
  expect_fields(j, {"power", "chi"}, T);
  v.power = field<int>(j, "power", T);
  v.chi = field<int>(j, "chi", T);
}

void to_json(json& j, const HodgeDiamond& v) { j = json{{"h11", v.h11}, {"h21", v.h21}}; }
void from_json(const json& j, HodgeDiamond& v) {
  constexpr std::string_view T = "HodgeDiamond";
  expect_fields(j, {"h11", "h21"}, T);
  v.h11 = field<int>(j, "h11", T);
  v.h21 = field<int>(j, "h21", T);
  if (v.h11 < 0 || v.h21 < 0) throw Error(ErrorKind::InvalidInvariants, "Hodge numbers must be nonnegative");
}

void to_json(json& j, const FamilyFlags& v) {
  j = json{{"bv_maximal", v.bv_maximal}, {"no_mum", v.no_mum}, {"alpha_X_order", v.alpha_X_order}};
}
void from_json(const json& j, FamilyFlags& v) {
  constexpr std::string_view T = "FamilyFlags";
  expect_fields(j, {"bv_maximal", "no_mum", "alpha_X_order"}, T);
  v.bv_maximal = field<bool>(j, "bv_maximal", T);
  v.no_mum = field<bool>(j, "no_mum", T);
  v.alpha_X_order = field<int>(j, "alpha_X_order", T);
  if (v.no_mum && !v.bv_maximal) throw Error(ErrorKind::InvalidInvariants, "no_mum requires bv_maximal");
}

void to_json(json& j, const BaseSurface& v) { j = to_string(v); }
void from_json(const json& j, BaseSurface& v) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "base: expected a string");
  v = parse_base(j.get<std::string>());
}

void to_json(json& j, const DivisorClass& v) {
  if (v.base.kind == BaseSurface::Kind::ProjectivePlane) j = json{{"base", v.base}, {"degree", v.t}};
  else j = json{{"base", v.base}, {"t", v.t}, {"z", v.z}};
}
void from_json(const json& j, DivisorClass& v) {
  constexpr std::string_view T = "DivisorClass";
  expect_fields(j, {"base", "degree", "t", "z"}, T);
  const auto base = field<BaseSurface>(j, "base", T);
  if (base.kind == BaseSurface::Kind::ProjectivePlane) {
    if (j.contains("t") || j.contains("z")) throw Error(ErrorKind::ParseError, "DivisorClass on P2 takes 'degree'");
    v = DivisorClass::plane(field<int>(j, "degree", T));
  } else {
    if (j.contains("degree")) throw Error(ErrorKind::ParseError, "DivisorClass on F_k takes 't' and 'z'");
    v = DivisorClass::on(base, field<int>(j, "t", T), field<int>(j, "z", T));
  }
}

KodairaType parse_kodaira(std::string_view text) {
  using Tag = KodairaType::Tag;
  for (auto [name, tag] : {std::pair{"II", Tag::II}, {"III", Tag::III}, {"IV", Tag::IV}, {"IV*", Tag::IVstar},
                           {"III*", Tag::IIIstar}, {"II*", Tag::IIstar}})
    if (text == name) return {tag, 0};
  if (text.size() >= 2 && text[0] == 'I') {
    const bool star = text.back() == '*';
    auto digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos) {
      const int n = std::stoi(std::string(digits));
      if (star) return n == 0 ? KodairaType{Tag::I0star, 0} : KodairaType{Tag::Instar, n};
      return n == 0 ? KodairaType{Tag::I0, 0} : KodairaType{Tag::In, n};
    }
  }
  throw Error(ErrorKind::ParseError, "unknown Kodaira type '" + std::string(text) + "'");
}

void to_json(json& j, const KodairaType& v) { j = to_string(v); }

void to_json(json& j, const SectionFactor& v) {
  j = json{{"name", v.name}, {"class", v.cls}, {"exponent", v.exponent}};
  j["genus"] = v.genus ? json(*v.genus) : json("Unknown");
}

void to_json(json& j, const SymbolicSection& v) {
  j = json{{"is_zero", v.is_zero}, {"factors", v.factors}, {"generic_unit", v.generic_unit}, {"residual", v.residual},
           {"class", v.total_class()}};
}

void to_json(json& j, const WeierstrassModel& v) {
  j = json{{"name", v.name}, {"base", v.base}, {"A", v.A}, {"B", v.B}};
}

void to_json(json& j, const ComponentDesc& v) {
  j = json{{"kind", to_string(v)}};
  if (v.kind == ComponentDesc::Kind::P1BundleOverCurve) j["genus"] = v.genus;
}

void to_json(json& j, const FiberDescriptor& v) {
  j = json{{"variant", std::string(to_string(v.variant))}};
  if (v.kodaira) {
    j["kodaira"] = *v.kodaira;
    j["euler_number"] = v.kodaira->euler_number();
  }
  if (v.variant == FiberDescriptor::Variant::NonKodaira) {
    j["components"] = v.components;
    json edges = json::array();
    for (auto [a, b] : v.adjacency) edges.push_back({a, b});
    j["adjacency"] = edges;
  }
  j["contains_divisors"] = v.contains_divisors;
}

void to_json(json& j, const MultiplicityProfile& v) {
  json counts = json::object();
  for (auto [mu, c] : v.counts()) counts[std::to_string(mu)] = c;
  j = json{{"counts", counts}};
}
void from_json(const json& j, MultiplicityProfile& v) {
  constexpr std::string_view T = "MultiplicityProfile";
  expect_fields(j, {"counts"}, T);
  std::map<int, int> counts;
  const auto raw = field<json>(j, "counts", T);
  for (const auto& [k, c] : raw.items()) {
    try {
      counts[std::stoi(k)] = c.get<int>();
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "counts: bad entry '" + k + "'");
    }
  }
  v = MultiplicityProfile::from_counts(counts);
}

}  // namespace bv
