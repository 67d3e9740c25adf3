// Acceptance criteria: one PASS/FAIL line each, exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bv/ellk3.hpp"
#include "bv/errors.hpp"
#include "bv/fibration.hpp"
#include "bv/hodge.hpp"
#include "bv/lefschetz.hpp"
#include "bv/tables.hpp"
#include "bv/toricbase.hpp"
#include "bv/weierstrass.hpp"
#include "printed_tables.hpp"

using namespace bv;

namespace {

struct Report {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

template <std::size_t W, std::size_t R>
void check_order4(Report& rep, TableId id, const std::array<std::array<int, W>, R>& table) {
  const bool with_n2 = W == 11;
  const auto rows = compute_order4(id);
  rep.expect(rows.size() == R, "row count");
  for (std::size_t i = 0; i < std::min(rows.size(), R); ++i) {
    const auto& p = table[i];
    const auto& row = rows[i];
    const int o = with_n2 ? 1 : 0;
    const std::string at = "line " + std::to_string(i + 1) + ": ";
    // b is not printed; it follows from n1 and the case
    const int b = row.input.fixed_case == N4Case::TwoEllipticCurves ? 1
                  : id == TableId::Order4Case1                      ? p[2] / 2
                                                                    : p[2] / 2 + 1;
    const auto comp = n4_complete(row.input.fixed_case, p[3 + o], p[4 + o], p[5 + o], with_n2 ? p[3] : 0);
    const auto d = hodge_x4(comp.locus, comp.dims);
    rep.expect(comp.dims.m == p[0] && comp.dims.r == p[1] && comp.locus.n1 == p[2] && comp.locus.b == b,
               at + "(r, m, n1, b)");
    rep.expect(d == HodgeDiamond{p[6 + o], p[7 + o]},
               at + pair_str(d.h11, d.h21) + " vs printed " + pair_str(p[6 + o], p[7 + o]));
    rep.expect(row.diamond == d, at + "table row differs from direct computation");
    if (id == TableId::Order4RationalOnly) {
      rep.expect(family_flags(Order::four(), d, comp.dims).no_mum, at + "no_mum");
      rep.expect(p[9] == 1, at + "printed no_mum");
    }
  }
}

FixedLocusN6 printed_locus(const std::array<int, 17>& p) {
  FixedLocusN6 s;
  s.nprime = p[1];
  s.k = p[2];
  s.a = p[3];
  s.gB = p[4];
  s.gBq = 0;
  s.p34 = p[5];
  s.p25 = p[6];
  s.l = p[7];
  s.N = p[8];
  s.b = p[9];
  s.gF1 = p[10];
  return s;
}

void c1(Report& r) { check_order4(r, TableId::Order4Case1, printed::case1); }
void c2(Report& r) { check_order4(r, TableId::Order4Case2, printed::case2); }
void c3(Report& r) { check_order4(r, TableId::Order4RationalOnly, printed::rational); }

void c4(Report& rep) {
  for (std::size_t i = 0; i < printed::order6.size(); ++i) {
    const auto& p = printed::order6[i];
    const auto locus = printed_locus(p);
    const auto chi = order6_chi(locus);
    const auto sols = solve(Order::six(), {{1, chi[0]}, {2, chi[1]}, {3, chi[2]}});
    const std::string at = "line " + std::to_string(i + 1) + ": ";
    if (sols.size() != 1) {
      rep.expect(false, at + std::to_string(sols.size()) + " Lefschetz solutions");
      continue;
    }
    rep.expect(sols[0].r == p[11] && sols[0].m == p[12], at + "(r, m)");
    const auto d = hodge_x6(locus, sols[0]);
    rep.expect(d == HodgeDiamond{p[13], p[14]},
               at + pair_str(d.h11, d.h21) + " vs printed " + pair_str(p[13], p[14]));
    rep.expect(locus.n() == p[0], at + "n");
  }
}

void c5(Report& rep) {
  std::map<std::string, MultiplicityProfile> first_hit;
  std::vector<bool> matched(printed::order6.size(), false);
  for (const auto& prof : enumerate_profiles()) {
    if (bisection_genus(prof).reducible || trisection_genus(prof).reducible) continue;
    const auto inv = invariants_from_profile(prof);
    const auto h = hodge_from_profile(prof);
    const auto& s = inv.locus;
    for (std::size_t i = 0; i < printed::order6.size(); ++i) {
      const auto& p = printed::order6[i];
      const std::array<int, 17> got = {s.n(), s.nprime, s.k,   s.a,         s.gB,      s.p34,         s.p25,
                                       s.l,   s.N,      s.b,   s.gF1,       h.dims.r,  h.dims.m,      h.diamond.h11,
                                       h.diamond.h21, p[15], p[16]};
      if (got == p) matched[i] = true;
    }
    const std::string key = to_string(prof);
    if (key == "1x12" || key == "5,1x7" || key == "4,3x2,2") first_hit.emplace(key, prof);
    auto expect_line = [&](const char* name, int line) {
      if (key != name) return;
      const auto& p = printed::order6[line - 1];
      rep.expect(h.diamond == HodgeDiamond{p[13], p[14]} && h.dims.r == p[11] && h.dims.m == p[12],
                 std::string("[") + name + "] does not give line " + std::to_string(line));
    };
    expect_line("1x12", 1);
    expect_line("5,1x7", 8);
    expect_line("4,3x2,2", 19);
  }
  rep.expect(first_hit.size() == 3, "named profiles missing from the enumeration");
  for (std::size_t i = 0; i < matched.size(); ++i)
    rep.expect(matched[i], "no profile reproduces line " + std::to_string(i + 1));
}

void c6(Report& rep) {
  auto dims = [](int r, int m, int d2, int d3) { return EigenspaceDims::make(Order::six(), r, m, d2, d3); };
  rep.expect(solve(Order::six(), {{1, 6}, {2, -6}}) == std::vector{dims(1, 7, 3, 1), dims(2, 6, 4, 0)},
             "solve {(1,6),(2,-6)}");
  rep.expect(solve(Order::six(), {{1, 8}, {2, 12}, {3, 10}}).empty(), "solve {(1,8),(2,12),(3,10)} not empty");
  rep.expect(solve(Order::six(), {{1, 10}, {2, 12}, {3, 10}}) == std::vector{dims(11, 2, 2, 3)},
             "solve {(1,10),(2,12),(3,10)}");
}

PointTag smooth_point_for(Order order, const KodairaType& t) {
  for (auto tag : legal_tags(order)) {
    const auto f = classify_fiber(BasePointClass::make(order, tag));
    if (f.kodaira && *f.kodaira == t) return tag;
  }
  return PointTag::Generic;
}

void c7(Report& rep) {
  using Fixture = std::vector<std::pair<std::string, std::string>>;
  const std::map<std::string, Fixture> expected = {
      {"order2-p2", {{"f6", "I0*"}}},
      {"order2-f4", {{"C", "I0*"}, {"z", "I0*"}}},
      {"order2-p1p1", {{"p44", "I0*"}}},
      {"order3-p1p1", {{"p33", "IV*"}}},
      {"order3-f6", {{"q", "IV*"}}},
      {"order4-p2", {{"f4", "III*"}}},
      {"order4-f4", {{"y2-f8z2", "III*"}, {"z", "I0*"}}},
      {"order6-p2", {{"F2", "I0*"}, {"F3", "IV*"}}},
      {"order6-f12", {{"X", "IV*"}, {"X+pZ", "I0*"}, {"Z", "II*"}}},
  };
  rep.expect(preset_names().size() == 9, "nine presets");
  for (const auto& name : preset_names()) {
    const auto model = build_preset(name);
    rep.expect(class_check(model), name + ": class check");
    const auto order = Order::of(name[5] - '0');
    Fixture got;
    for (const auto& [factor, type] : singular_fibers(model)) {
      got.emplace_back(factor, to_string(type));
      const auto tag = smooth_point_for(order, type);
      const auto f = classify_fiber(BasePointClass::make(order, tag));
      rep.expect(tag != PointTag::Generic && f.kodaira && *f.kodaira == type,
                 name + ": " + factor + " has no matching point class");
    }
    auto it = expected.find(name);
    rep.expect(it != expected.end() && it->second == got, name + ": singular fibers differ from fixture");
  }
}

void c8(Report& rep) {
  int checked = 0;
  for (int r = 1; r <= 20; ++r)
    for (int a = 0; a <= 20; ++a) {
      FixedLocusN2 locus;
      if (r == 10 && a == 10) locus = FixedLocusN2::empty();
      else if ((r - a) % 2 != 0 || r - a + 2 < 0 || 22 - r - a < 0) continue;
      else locus = n2_from_lattice(r, a);
      const auto d = hodge_x2(locus, EigenspaceDims::from_r(Order::two(), r));
      const int m = 22 - r;
      if (!locus.empty_fixed_locus) {
        const int N = locus.N, Np = locus.Nprime;
        rep.expect(d.h11 == 1 + r + 4 * N && d.h11 == 11 + 5 * N - Np && d.h11 == 5 + 3 * r - 2 * a,
                   "order 2 h11 at " + pair_str(r, a));
        rep.expect(d.h21 == m - 1 + 4 * Np && d.h21 == 11 + 5 * Np - N && d.h21 == 65 - 3 * r - 2 * a,
                   "order 2 h21 at " + pair_str(r, a));
      } else {
        rep.expect(d == HodgeDiamond{11, 11}, "Enriques diamond");
      }
      ++checked;
    }
  for (int r = 2; r <= 20; r += 2)
    for (int a = 0; a <= 20; ++a) {
      if ((22 - r - 2 * a) % 4 != 0 || 22 - r - 2 * a < 0 || 6 + r - 2 * a < 0) continue;
      const auto locus = n3_from_lattice(r, a);
      const auto d = hodge_x3(locus, EigenspaceDims::from_r(Order::three(), r));
      const int m = (22 - r) / 2, n = r / 2 - 1;
      rep.expect(d.h11 == r + 1 + 3 * n + 6 * locus.k_curves && d.h11 == 7 + 4 * r - 3 * a,
                 "order 3 h11 at " + pair_str(r, a));
      rep.expect(d.h21 == m - 1 + 6 * locus.gC && d.h21 == 43 - 2 * r - 3 * a, "order 3 h21 at " + pair_str(r, a));
      rep.expect(2 * (d.h11 - d.h21) == -72 + 12 * r, "order 3 Euler identity at " + pair_str(r, a));
      ++checked;
    }
  for (int k = 0; k <= 10; ++k)
    for (int a = 0; a <= 10; ++a)
      for (int g = 0; g <= 10; ++g) {
        for (int n2 = -1; n2 <= 2 * k + 4; n2 += n2 < 0 ? 1 : 2) {
          const bool first = n2 < 0;
          N4Completion c;
          try {
            c = first ? n4_complete(N4Case::DFirstType, k, a, g) : n4_complete(N4Case::DSecondType, k, a, g, n2);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvalidInvariants) throw;
            continue;
          }
          const auto d = hodge_x4(c.locus, c.dims);
          const auto& s = c.locus;
          const std::string at = (first ? "order 4 first type " : "order 4 second type ") + std::to_string(k) + "," +
                                 std::to_string(a) + "," + std::to_string(g) + "," + std::to_string(n2);
          rep.expect(d.h11 == 1 + c.dims.r + 7 * s.k + 3 * s.b + 2 * (s.n1 + s.n2) + 4 * s.a, at + " h11 general");
          if (first) {
            rep.expect(d.h11 == 22 + 17 * k + 5 * a - 10 * g, at + " h11");
            rep.expect(d.h21 == 4 - k - a + 8 * g, at + " h21");
            rep.expect(2 * (d.h11 - d.h21) == 36 + 36 * k - 36 * g + 12 * a, at + " chi");
          } else {
            rep.expect(4 * d.h11 == 102 - 7 * n2 - 2 * g + 4 * (17 * k + 5 * a), at + " h11");
            rep.expect(4 * d.h21 == 18 - n2 + 10 * g - 4 * (k + a), at + " h21");
            rep.expect(2 * (d.h11 - d.h21) == 42 - 3 * n2 - 6 * g + 36 * k + 12 * a, at + " chi");
          }
          ++checked;
        }
      }
  rep.expect(checked > 300, "too few admissible cases: " + std::to_string(checked));
}

void c9(Report& rep) {
  auto t1 = table_diamonds(TableId::Order4Case1);
  auto t2 = table_diamonds(TableId::Order4Case2);
  rep.expect(t1[10] == t2[3] && t1[10] == HodgeDiamond{29, 17}, "case1 line 11 = case2 line 4 = (29, 17)");
  rep.expect(t1[8] == t2[1] && t1[8] == HodgeDiamond{14, 26}, "case1 line 9 = case2 line 2 = (14, 26)");
  rep.expect(t2[0] == HodgeDiamond{17, 29}, "case2 line 1 = (17, 29)");
  rep.expect(t1[7] == HodgeDiamond{19, 19}, "case1 line 8 = (19, 19)");
  std::vector<HodgeDiamond> all = t1;
  all.insert(all.end(), t2.begin(), t2.end());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto p : mirror_pairs(all)) pairs.insert(p);
  const std::size_t off = t1.size();
  rep.expect(pairs.count({off + 0, off + 3}) && pairs.count({10, off + 0}), "case2 line 1 mirrors (29, 17)");
  rep.expect(pairs.count({7, 7}) == 1, "case1 line 8 self-mirror");
  for (auto [i, j] : pairs)
    rep.expect(all[i].h11 == all[j].h21 && all[i].h21 == all[j].h11, "mirror pair contradiction");
}

void c10(Report& rep) {
  const auto f4 = BaseSurface::hirzebruch(4);
  const auto f6 = BaseSurface::hirzebruch(6);
  rep.expect(adjunction_genus(DivisorClass::on(f4, 12, 3), f4) == 10, "genus(12Dt+3Dz, F4)");
  rep.expect(adjunction_genus(DivisorClass::on(f6, 12, 2), f6) == 5, "genus(12Dt+2Dz, F6)");
  for (int k = 0; k <= 12; ++k) {
    const auto fk = BaseSurface::hirzebruch(k);
    rep.expect(adjunction_genus(DivisorClass::on(fk, 0, 1), fk) == 0, "genus(Dz, F" + std::to_string(k) + ")");
  }
  for (int k : {0, 4, 6, 12}) {
    const auto fk = BaseSurface::hirzebruch(k);
    rep.expect(canonical(fk) == DivisorClass::on(fk, -(k + 2), -2), "K(F" + std::to_string(k) + ")");
  }
  rep.expect(canonical(BaseSurface::p2()) == DivisorClass::plane(-3), "K(P2)");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Report&)>>> criteria = {
      {"order-4 first-type table", c1},
      {"order-4 second-type table", c2},
      {"order-4 rational-curves table", c3},
      {"order-6 table", c4},
      {"profile pipeline end-to-end", c5},
      {"Lefschetz solver", c6},
      {"Weierstrass presets", c7},
      {"closed-form equivalences", c8},
      {"mirror scan", c9},
      {"adjunction and canonical classes", c10},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Report rep;
    try {
      run(rep);
    } catch (const std::exception& e) {
      rep.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = rep.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %d %s\n", ok ? "PASS" : "FAIL", index, name);
    for (const auto& p : rep.problems) std::printf("    %s\n", p.c_str());
  }
  std::printf("%d/%zu passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
