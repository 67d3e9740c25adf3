#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bv/ellk3.hpp"
#include "bv/errors.hpp"
#include "bv/fibration.hpp"
#include "bv/hodge.hpp"
#include "bv/json_io.hpp"
#include "bv/lefschetz.hpp"
#include "bv/tables.hpp"
#include "bv/toricbase.hpp"
#include "bv/weierstrass.hpp"

using namespace bv;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::Io, "cannot write " + path);
}

// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json load_json(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  return parse_json(read_file(arg));
}

std::vector<ChiConstraint> parse_chi(const std::string& text) {
  std::vector<ChiConstraint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected power=chi, got '" + item + "'");
    try {
      std::size_t used = 0;
      const int power = std::stoi(item.substr(0, eq), &used);
      const int chi = std::stoi(item.substr(eq + 1));
      out.push_back({power, chi});
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "expected power=chi, got '" + item + "'");
    }
  }
  return out;
}

json hodge_report(Order order, const EigenspaceDims& dims, const HodgeDiamond& d) {
  return json{{"order", order}, {"dims", dims}, {"diamond", d}, {"euler", d.euler()},
              {"flags", family_flags(order, d, dims)}};
}

json run_hodge(Order order, const json& in) {
  auto has = [&](const char* k) { return in.is_object() && in.contains(k); };
  switch (order.value()) {
    case 2: {
      FixedLocusN2 locus;
      EigenspaceDims dims;
      if (has("locus")) {
        locus = in.at("locus").get<FixedLocusN2>();
        dims = has("dims") ? in.at("dims").get<EigenspaceDims>()
                           : EigenspaceDims::from_r(order, lattice_of(locus).r);
      } else if (has("empty_fixed_locus") && in.at("empty_fixed_locus").get<bool>()) {
        locus = FixedLocusN2::empty();
        dims = EigenspaceDims::from_r(order, 10);
      } else {
        const int r = in.at("r").get<int>(), a = in.at("a").get<int>();
        locus = n2_from_lattice(r, a);
        dims = EigenspaceDims::from_r(order, r);
      }
      auto report = hodge_report(order, dims, hodge_x2(locus, dims));
      report["locus"] = locus;
      return report;
    }
    case 3: {
      FixedLocusN3 locus;
      EigenspaceDims dims;
      if (has("locus")) {
        locus = in.at("locus").get<FixedLocusN3>();
        dims = has("dims") ? in.at("dims").get<EigenspaceDims>()
                           : EigenspaceDims::from_r(order, 2 * (locus.n_points + 1));
      } else {
        const int r = in.at("r").get<int>(), a = in.at("a").get<int>();
        locus = n3_from_lattice(r, a);
        dims = EigenspaceDims::from_r(order, r);
      }
      auto report = hodge_report(order, dims, hodge_x3(locus, dims));
      report["locus"] = locus;
      return report;
    }
    case 4: {
      FixedLocusN4 locus;
      EigenspaceDims dims;
      if (has("locus")) {
        locus = in.at("locus").get<FixedLocusN4>();
        dims = has("dims") ? in.at("dims").get<EigenspaceDims>() : dims_of(locus);
      } else {
        auto done = n4_complete(parse_n4_case(in.at("case").get<std::string>()), in.value("k", 0), in.value("a", 0),
                                in.value("gD", 0), in.value("n2", 0));
        locus = done.locus;
        dims = done.dims;
      }
      auto report = hodge_report(order, dims, hodge_x4(locus, dims));
      report["locus"] = locus;
      return report;
    }
    default: {
      if (has("profile")) {
        const auto p = MultiplicityProfile::parse(in.at("profile").get<std::string>());
        const auto inv = invariants_from_profile(p);
        const auto h = hodge_from_profile(p);
        auto report = hodge_report(order, h.dims, h.diamond);
        report["locus"] = inv.locus;
        return report;
      }
      const auto locus = in.at("locus").get<FixedLocusN6>();
      EigenspaceDims dims;
      if (has("dims")) {
        dims = in.at("dims").get<EigenspaceDims>();
      } else {
        const auto chi = in.at("chi").get<std::vector<int>>();
        if (chi.size() != 3) throw Error(ErrorKind::ParseError, "chi must list chi(Fix beta^j) for j = 1, 2, 3");
        const auto sols = solve(order, {{1, chi[0]}, {2, chi[1]}, {3, chi[2]}});
        if (sols.size() != 1)
          throw Error(ErrorKind::AmbiguousDims, std::to_string(sols.size()) + " eigenspace solutions");
        dims = sols.front();
      }
      auto report = hodge_report(order, dims, hodge_x6(locus, dims));
      report["locus"] = locus;
      return report;
    }
  }
}

std::string markdown_row(const MultiplicityProfile& p) {
  const auto inv = invariants_from_profile(p);
  const auto h = hodge_from_profile(p);
  const auto& s = inv.locus;
  const auto flags = family_flags(Order::six(), h.diamond, h.dims);
  std::ostringstream out;
  out << "| " << s.n() << " | " << s.nprime << " | " << s.k << " | " << s.a << " | " << s.gB << " | " << s.p34
      << " | " << s.p25 << " | " << s.l << " | " << s.N << " | " << s.b << " | " << s.gF1 << " | " << h.dims.r
      << " | " << h.dims.m << " | " << h.diamond.h11 << " | " << h.diamond.h21 << " | "
      << (flags.no_mum ? "X " : "") << "|\n";
  return out.str();
}

json pipeline_json(const MultiplicityProfile& p) {
  json out{{"profile", to_string(p)}, {"counts", json(p)["counts"]}};
  json types = json::object();
  for (auto [mu, t] : fiber_types(p)) types[std::to_string(mu)] = t;
  out["fiber_types"] = types;
  const auto bis = bisection_genus(p);
  const auto tri = trisection_genus(p);
  out["bisection"] = json{{"genus", bis.genus}, {"reducible", bis.reducible}};
  out["trisection"] = json{{"genus", tri.genus}, {"reducible", tri.reducible}};
  const auto inv = invariants_from_profile(p);
  const auto h = hodge_from_profile(p);
  out["locus"] = inv.locus;
  out["n"] = inv.locus.n();
  out["chi"] = inv.chi;
  out["dims"] = h.dims;
  out["diamond"] = h.diamond;
  out["euler"] = h.diamond.euler();
  out["flags"] = family_flags(Order::six(), h.diamond, h.dims);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Borcea-Voisin Calabi-Yau 3-folds of order 2, 3, 4, 6"};
  app.require_subcommand(1);

  int order = 0;
  std::string input;
  auto* hodge = app.add_subcommand("hodge", "Hodge numbers, Euler characteristic and family flags");
  hodge->add_option("--order", order, "2, 3, 4 or 6")->required();
  hodge->add_option("--input", input, "JSON object or path to one")->required();

  std::string chi;
  auto* lef = app.add_subcommand("lefschetz", "Eigenspace dimensions from fixed-locus Euler characteristics");
  lef->add_option("--order", order, "2, 3, 4 or 6")->required();
  lef->add_option("--chi", chi, "power=chi list, e.g. 1=6,2=-6")->required();

  std::string surface, intersect_arg, genus_arg;
  int quotient = 0;
  bool want_canonical = false;
  auto* base = app.add_subcommand("base", "Intersection theory on P2 and F_k");
  base->add_option("--surface", surface, "P2, P1xP1 or F<k>")->required();
  base->add_option("--intersect", intersect_arg, "'t,z x t,z' (degrees on P2)");
  base->add_flag("--canonical", want_canonical, "canonical class");
  base->add_option("--genus", genus_arg, "arithmetic genus of a class");
  base->add_option("--quotient", quotient, "Hirzebruch surface obtained as quotient by this degree");

  std::string preset;
  bool fibers = false, check_classes = false, list_presets = false;
  auto* weier = app.add_subcommand("weierstrass", "Symbolic Weierstrass models of the fibrations");
  weier->add_option("--preset", preset, "preset name");
  weier->add_flag("--fibers", fibers, "singular fibers over the discriminant factors");
  weier->add_flag("--check-classes", check_classes, "verify class(A) = -4K, class(B) = -6K");
  weier->add_flag("--list", list_presets, "list preset names");

  std::string point_class;
  auto* fiber = app.add_subcommand("fiber", "Fiber of the almost elliptic fibration over a base point class");
  fiber->add_option("--order", order, "2, 3, 4 or 6")->required();
  fiber->add_option("--class", point_class, "point class, e.g. p34 or OnBranch")->required();

  std::string profile, format = "json";
  bool scan = false;
  auto* pipe = app.add_subcommand("pipeline", "Order-6 invariants from the root multiplicities of p12");
  pipe->add_option("--profile", profile, "multiplicities, e.g. 4,3,3,2 or 5,1x7");
  pipe->add_flag("--scan", scan, "every profile with irreducible multisections");
  pipe->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

  std::string table, known, out_path, table_format = "csv";
  auto* tables = app.add_subcommand("tables", "Emit a Hodge-number table");
  tables->add_option("--table", table, "Order4Case1, Order4Case2, Order4RationalOnly, Order6")->required();
  tables->add_option("--format", table_format, "csv, json or markdown")->check(CLI::IsMember({"csv", "json", "markdown"}));
  tables->add_option("--known", known, "known (h11, h21) pairs; recomputes the new column");
  tables->add_option("--out", out_path, "output file (default stdout)");

  std::string rows_arg;
  auto* cmp = app.add_subcommand("compare-known", "Flag Hodge pairs absent from a known-pairs file");
  cmp->add_option("--known", known, "file with one (h11, h21) pair per line")->required();
  auto* cmp_table = cmp->add_option("--table", table, "compare the rows of this table");
  cmp->add_option("--rows", rows_arg, "JSON list of {h11, h21} or path to one")->excludes(cmp_table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hodge) {
      std::cout << run_hodge(Order::of(order), load_json(input)).dump(2) << '\n';
    } else if (*lef) {
      for (const auto& d : solve(Order::of(order), parse_chi(chi))) std::cout << json(d).dump() << '\n';
    } else if (*base) {
      const auto S = parse_base(surface);
      json out{{"surface", S}};
      if (want_canonical) out["canonical"] = canonical(S);
      if (!genus_arg.empty()) out["genus"] = adjunction_genus(parse_class(genus_arg, S), S);
      if (!intersect_arg.empty()) {
        auto x = intersect_arg.find(" x ");
        if (x == std::string::npos) throw Error(ErrorKind::ParseError, "expected 'C1 x C2'");
        out["intersection"] =
            intersect(parse_class(intersect_arg.substr(0, x), S), parse_class(intersect_arg.substr(x + 3), S), S);
      }
      if (quotient > 0) {
        if (S.kind != BaseSurface::Kind::Hirzebruch) throw Error(ErrorKind::BaseMismatch, "quotients need F_k");
        out["quotient"] = quotient_hirzebruch(S.k, quotient);
      }
      std::cout << out.dump(2) << '\n';
    } else if (*weier) {
      if (list_presets) {
        for (const auto& n : preset_names()) std::cout << n << '\n';
        return 0;
      }
      if (preset.empty()) throw Error(ErrorKind::UnknownPreset, "--preset is required");
      const auto model = build_preset(preset);
      json out{{"model", model}};
      if (check_classes) {
        const auto K = canonical(model.base);
        out["class_check"] = class_check(model);
        out["minus_4K"] = -4 * K;
        out["minus_6K"] = -6 * K;
        out["discriminant_class"] = discriminant_class(model);
        out["minus_12K"] = -12 * K;
      }
      if (fibers) {
        json list = json::array();
        auto types = singular_fibers(model);
        auto orders = factor_orders(model);
        for (std::size_t i = 0; i < types.size(); ++i)
          list.push_back(json{{"factor", types[i].first},
                              {"ordA", to_string(orders[i].ordA)},
                              {"ordB", to_string(orders[i].ordB)},
                              {"ordDelta", orders[i].ordDelta},
                              {"type", types[i].second},
                              {"euler_number", types[i].second.euler_number()}});
        out["fibers"] = list;
      }
      std::cout << out.dump(2) << '\n';
      if (check_classes && !class_check(model)) return 3;
    } else if (*fiber) {
      const auto p = BasePointClass::make(Order::of(order), parse_point_tag(point_class));
      const auto f = classify_fiber(p);
      json out{{"order", p.order}, {"class", std::string(to_string(p.tag))}, {"fiber", f}};
      out["mw_torsion"] = std::string(to_string(mw_torsion(p.order)));
      std::cout << out.dump(2) << '\n';
      if (f.variant == FiberDescriptor::Variant::NonKodaira) std::cout << render_adjacency(f);
    } else if (*pipe) {
      std::vector<MultiplicityProfile> profiles;
      if (scan) {
        for (const auto& p : enumerate_profiles())
          if (!bisection_genus(p).reducible && !trisection_genus(p).reducible) profiles.push_back(p);
      } else {
        if (profile.empty()) throw Error(ErrorKind::ParseError, "--profile or --scan is required");
        profiles.push_back(MultiplicityProfile::parse(profile));
      }
      if (format == "markdown") {
        std::cout << "| n | n' | k | a | g(B) | p34 | p25 | l | N | b | g(F) | r | m | h11 | h21 | No MUM |\n";
        std::cout << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& p : profiles) std::cout << markdown_row(p);
      } else if (scan) {
        for (const auto& p : profiles) std::cout << pipeline_json(p).dump() << '\n';
      } else {
        std::cout << pipeline_json(profiles.front()).dump(2) << '\n';
      }
    } else if (*tables) {
      const auto id = parse_table_id(table);
      std::optional<std::vector<bool>> marks;
      if (!known.empty()) marks = compare_known(table_diamonds(id), known);
      write_text(out_path, emit_table(id, parse_table_format(table_format), marks));
    } else if (*cmp) {
      std::vector<HodgeDiamond> rows;
      if (!table.empty()) rows = table_diamonds(parse_table_id(table));
      else if (!rows_arg.empty()) rows = load_json(rows_arg).get<std::vector<HodgeDiamond>>();
      else throw Error(ErrorKind::ParseError, "--table or --rows is required");
      const auto flags = compare_known(rows, known);
      for (std::size_t i = 0; i < rows.size(); ++i)
        std::cout << json{{"row", i + 1}, {"h11", rows[i].h11}, {"h21", rows[i].h21}, {"new", bool(flags[i])}}.dump()
                  << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "bv: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bv: ParseError: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
