#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bv/hodge.hpp"
#include "bv/invariants.hpp"

namespace bv {

enum class TableId { Order4Case1, Order4Case2, Order4RationalOnly, Order6 };
enum class TableFormat { Csv, Json, Markdown };

std::string_view to_string(TableId id);
std::string_view to_string(TableFormat f);
// Accepts the enum name or a short alias: case1, case2, rational, order6.
TableId parse_table_id(std::string_view text);
TableFormat parse_table_format(std::string_view text);
const std::vector<TableId>& all_tables();
std::size_t row_count(TableId id);

// Input invariants of one order-4 row.
struct Order4Fixture {
  int line = 0;
  std::string ref;
  N4Case fixed_case = N4Case::DFirstType;
  int k = 0;
  int a = 0;
  int gD = 0;
  int n2 = 0;
  bool marked_new = false;
};

// Input invariants of one order-6 row; g(D) = 0 throughout.
struct Order6Fixture {
  int line = 0;
  int nprime = 0;
  int k = 0;
  int a = 0;
  int gB = 0;
  int p34 = 0;
  int p25 = 0;
  int l = 0;
  int N = 0;
  int b = 0;
  int gF = 0;
  bool marked_new = false;
};

const std::vector<Order4Fixture>& order4_fixtures(TableId id);
const std::vector<Order6Fixture>& order6_fixtures();

struct Order4Row {
  Order4Fixture input;
  FixedLocusN4 locus;
  EigenspaceDims dims;
  HodgeDiamond diamond;
  FamilyFlags flags;
};

struct Order6Row {
  Order6Fixture input;
  FixedLocusN6 locus;
  std::array<int, 3> chi{};
  EigenspaceDims dims;
  HodgeDiamond diamond;
  FamilyFlags flags;
};

// chi(Fix beta^j) from the tabulated order-6 invariants.
std::array<int, 3> order6_chi(const FixedLocusN6& locus);
FixedLocusN6 order6_locus(const Order6Fixture& f);

std::vector<Order4Row> compute_order4(TableId id);
std::vector<Order6Row> compute_order6();
std::vector<HodgeDiamond> table_diamonds(TableId id);

// new_marks overrides the transcribed "new" annotations, one per row.
std::string emit_table(TableId id, TableFormat format, const std::optional<std::vector<bool>>& new_marks = std::nullopt);

// Per row: true iff (h11, h21) is absent from the known-pairs file. The file holds one
// pair per line ("h11 h21", "h11,h21" or "(h11, h21)"); blank lines and # comments skipped.
std::vector<bool> compare_known(const std::vector<HodgeDiamond>& rows, const std::string& known_pairs_file);
std::vector<bool> compare_known_text(const std::vector<HodgeDiamond>& rows, std::string_view text);

}  // namespace bv
