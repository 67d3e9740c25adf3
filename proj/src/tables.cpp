#include "bv/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bv/errors.hpp"
#include "bv/lefschetz.hpp"

namespace bv {

namespace {

std::string ref(int table, int line) {
  return "AS2 Table " + std::to_string(table) + " l. " + std::to_string(line);
}

std::vector<Order4Fixture> build_case1() {
  // line, k, a, g(D)
  const int rows[19][4] = {{1, 1, 0, 1},  {2, 1, 0, 1},  {3, 2, 0, 1},  {4, 1, 1, 1},  {5, 1, 2, 1},
                           {6, 1, 3, 1},  {7, 1, 0, 3},  {8, 1, 0, 2},  {9, 1, 1, 3},  {10, 1, 1, 2},
                           {11, 1, 2, 2}, {12, 1, 0, 0}, {13, 2, 0, 0}, {14, 1, 1, 0}, {15, 3, 0, 0},
                           {16, 2, 1, 0}, {17, 1, 2, 0}, {18, 4, 0, 0}, {19, 1, 3, 0}};
  std::vector<Order4Fixture> out;
  for (const auto& r : rows) {
    Order4Fixture f;
    f.line = r[0];
    f.ref = r[0] <= 6 ? ref(1, r[0]) : r[0] <= 11 ? ref(2, r[0] - 6) : ref(3, r[0] - 11);
    f.fixed_case = r[0] == 1 ? N4Case::TwoEllipticCurves : N4Case::DFirstType;
    f.k = r[1];
    f.a = r[2];
    f.gD = r[3];
    f.marked_new = r[0] == 14 || r[0] == 17 || r[0] == 19;
    out.push_back(f);
  }
  return out;
}

std::vector<Order4Fixture> build_second_type(const std::vector<std::array<int, 6>>& rows, bool marked_new) {
  // line, ref line, n2, k, a, g(D)
  std::vector<Order4Fixture> out;
  for (const auto& r : rows) {
    Order4Fixture f;
    f.line = r[0];
    f.ref = ref(marked_new ? 6 : 5, r[1]);
    f.fixed_case = N4Case::DSecondType;
    f.n2 = r[2];
    f.k = r[3];
    f.a = r[4];
    f.gD = r[5];
    f.marked_new = marked_new;
    out.push_back(f);
  }
  return out;
}

std::vector<Order6Fixture> build_order6() {
  // n', k, a, g(B), p34, p25, l, N, b, g(F)
  const int rows[19][10] = {{0, 2, 0, 5, 12, 0, 1, 2, 0, 10}, {0, 2, 0, 4, 10, 1, 1, 2, 0, 9},
                            {0, 2, 0, 3, 8, 2, 1, 2, 0, 8},   {0, 2, 0, 2, 6, 3, 1, 2, 0, 7},
                            {1, 3, 0, 3, 10, 1, 1, 3, 0, 7},  {0, 2, 0, 1, 4, 4, 1, 2, 0, 6},
                            {1, 3, 0, 2, 8, 2, 1, 3, 0, 6},   {0, 4, 0, 3, 10, 4, 2, 6, 0, 6},
                            {0, 2, 0, 0, 2, 5, 1, 2, 0, 5},   {1, 3, 0, 1, 6, 3, 1, 3, 0, 5},
                            {0, 4, 0, 2, 8, 5, 2, 6, 0, 5},   {1, 3, 0, 0, 4, 4, 1, 3, 0, 4},
                            {0, 4, 0, 1, 6, 6, 2, 6, 0, 4},   {0, 4, 0, 0, 4, 7, 2, 6, 0, 3},
                            {1, 5, 0, 1, 8, 5, 2, 7, 0, 3},   {1, 5, 0, 0, 6, 6, 2, 7, 0, 2},
                            {0, 6, 0, 1, 8, 8, 3, 10, 0, 2},  {0, 6, 0, 0, 6, 9, 3, 10, 0, 1},
                            {1, 3, 0, 0, 4, 4, 1, 5, 0, 0}};
  std::vector<Order6Fixture> out;
  int line = 1;
  for (const auto& r : rows) {
    Order6Fixture f{line, r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8], r[9], line == 19};
    out.push_back(f);
    ++line;
  }
  return out;
}

enum class CellKind { Int, Str, Flag };

struct Cell {
  CellKind kind;
  std::string text;
  int value = 0;
  bool flag = false;
};

Cell num(int v) { return {CellKind::Int, std::to_string(v), v, false}; }
Cell str(std::string s) { return {CellKind::Str, std::move(s), 0, false}; }
Cell mark(bool b) { return {CellKind::Flag, b ? "X" : "", 0, b}; }

struct Layout {
  std::vector<std::string> headers;
  std::vector<std::string> keys;
  std::vector<std::vector<Cell>> rows;
};

Layout layout(TableId id, const std::optional<std::vector<bool>>& new_marks) {
  Layout t;
  auto is_new = [&](std::size_t i, bool transcribed) { return new_marks ? (*new_marks)[i] : transcribed; };
  if (id == TableId::Order6) {
    t.headers = {"#", "n", "n'", "k", "a", "g(B)", "p34", "p25", "l", "N", "b", "g(F)", "r", "m", "h11", "h21", "No MUM", "new"};
    t.keys = {"line", "n", "nprime", "k", "a", "gB", "p34", "p25", "l", "N", "b", "gF", "r", "m", "h11", "h21", "no_mum", "new"};
    const auto rows = compute_order6();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const auto& s = r.locus;
      t.rows.push_back({num(r.input.line), num(s.n()), num(s.nprime), num(s.k), num(s.a), num(s.gB), num(s.p34),
                        num(s.p25), num(s.l), num(s.N), num(s.b), num(s.gF1), num(r.dims.r), num(r.dims.m),
                        num(r.diamond.h11), num(r.diamond.h21), mark(r.flags.no_mum), mark(is_new(i, r.input.marked_new))});
    }
    return t;
  }
  const bool case1 = id == TableId::Order4Case1;
  if (case1) {
    t.headers = {"#", "Ref K3", "m", "r", "n1", "k", "a", "g(D)", "h11", "h21", "No MUM", "new"};
    t.keys = {"line", "ref", "m", "r", "n1", "k", "a", "gD", "h11", "h21", "no_mum", "new"};
  } else {
    t.headers = {"#", "Ref K3", "m", "r", "n1", "n2", "k", "a", "g(D)", "h11", "h21", "No MUM", "new"};
    t.keys = {"line", "ref", "m", "r", "n1", "n2", "k", "a", "gD", "h11", "h21", "no_mum", "new"};
  }
  const auto rows = compute_order4(id);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& s = r.locus;
    std::vector<Cell> cells = {num(r.input.line), str(r.input.ref), num(r.dims.m), num(r.dims.r), num(s.n1)};
    if (!case1) cells.push_back(num(s.n2));
    for (auto c : {num(s.k), num(s.a), num(s.gD), num(r.diamond.h11), num(r.diamond.h21), mark(r.flags.no_mum),
                   mark(is_new(i, r.input.marked_new))})
      cells.push_back(c);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::Order4Case1: return "Order4Case1";
    case TableId::Order4Case2: return "Order4Case2";
    case TableId::Order4RationalOnly: return "Order4RationalOnly";
    case TableId::Order6: return "Order6";
  }
  return "?";
}

std::string_view to_string(TableFormat f) {
  switch (f) {
    case TableFormat::Csv: return "csv";
    case TableFormat::Json: return "json";
    case TableFormat::Markdown: return "markdown";
  }
  return "?";
}

TableId parse_table_id(std::string_view text) {
  std::string key;
  for (unsigned char c : text) key += static_cast<char>(std::tolower(c));
  if (key == "order4case1" || key == "case1") return TableId::Order4Case1;
  if (key == "order4case2" || key == "case2") return TableId::Order4Case2;
  if (key == "order4rationalonly" || key == "rational") return TableId::Order4RationalOnly;
  if (key == "order6") return TableId::Order6;
  throw Error(ErrorKind::ParseError, "unknown table '" + std::string(text) + "'");
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  if (text == "markdown" || text == "md") return TableFormat::Markdown;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "'");
}

const std::vector<TableId>& all_tables() {
  static const std::vector<TableId> ids = {TableId::Order4Case1, TableId::Order4Case2, TableId::Order4RationalOnly,
                                           TableId::Order6};
  return ids;
}

std::size_t row_count(TableId id) {
  return id == TableId::Order6 ? order6_fixtures().size() : order4_fixtures(id).size();
}

const std::vector<Order4Fixture>& order4_fixtures(TableId id) {
  static const auto case1 = build_case1();
  static const auto case2 = build_second_type({{1, 1, 2, 0, 0, 10},
                                               {2, 2, 4, 0, 0, 9},
                                               {3, 3, 4, 1, 0, 7},
                                               {4, 4, 6, 1, 0, 6},
                                               {5, 5, 2, 2, 0, 6},
                                               {6, 6, 4, 2, 0, 5},
                                               {7, 7, 6, 2, 0, 4},
                                               {8, 8, 8, 2, 0, 3},
                                               {9, 9, 4, 3, 0, 3},
                                               {10, 10, 6, 3, 0, 2},
                                               {11, 11, 2, 4, 0, 2},
                                               {12, 12, 4, 4, 0, 1}},
                                              false);
  static const auto rational = build_second_type(
      {{1, 13, 2, 0, 0, 0}, {2, 18, 2, 0, 1, 0}, {3, 23, 2, 0, 2, 0}, {4, 27, 2, 0, 3, 0}, {5, 30, 2, 0, 4, 0}}, true);
  switch (id) {
    case TableId::Order4Case1: return case1;
    case TableId::Order4Case2: return case2;
    case TableId::Order4RationalOnly: return rational;
    case TableId::Order6: break;
  }
  throw Error(ErrorKind::InvalidInvariants, "Order6 is not an order-4 table");
}

const std::vector<Order6Fixture>& order6_fixtures() {
  static const auto rows = build_order6();
  return rows;
}

FixedLocusN6 order6_locus(const Order6Fixture& f) {
  FixedLocusN6 s;
  s.l = f.l;
  s.N = f.N;
  s.k = f.k;
  s.a = f.a;
  s.b = f.b;
  s.nprime = f.nprime;
  s.p25 = f.p25;
  s.p34 = f.p34;
  s.gB = f.gB;
  s.gF1 = f.gF;
  return s;
}

std::array<int, 3> order6_chi(const FixedLocusN6& s) {
  // beta fixes l rational curves and the p25, p34 points; beta^2 fixes k curves, the
  // highest of genus g(B), and n points; beta^3 fixes N curves, the highest of genus g(F)
  return {2 * s.l + s.p25 + s.p34, 2 * s.k - 2 * s.gB + s.n(), 2 * s.N - 2 * s.gF1};
}

std::vector<Order4Row> compute_order4(TableId id) {
  std::vector<Order4Row> out;
  for (const auto& f : order4_fixtures(id)) {
    auto [locus, dims] = n4_complete(f.fixed_case, f.k, f.a, f.gD, f.n2);
    const auto diamond = hodge_x4(locus, dims);
    out.push_back({f, locus, dims, diamond, family_flags(Order::four(), diamond, dims)});
  }
  return out;
}

std::vector<Order6Row> compute_order6() {
  std::vector<Order6Row> out;
  for (const auto& f : order6_fixtures()) {
    Order6Row row;
    row.input = f;
    row.locus = order6_locus(f);
    row.chi = order6_chi(row.locus);
    const auto sols = solve(Order::six(), {{1, row.chi[0]}, {2, row.chi[1]}, {3, row.chi[2]}});
    if (sols.size() != 1)
      throw Error(ErrorKind::AmbiguousDims, std::to_string(sols.size()) + " eigenspace solutions for order-6 line " +
                                                std::to_string(f.line));
    row.dims = sols.front();
    row.diamond = hodge_x6(row.locus, row.dims);
    row.flags = family_flags(Order::six(), row.diamond, row.dims);
    out.push_back(row);
  }
  return out;
}

std::vector<HodgeDiamond> table_diamonds(TableId id) {
  std::vector<HodgeDiamond> out;
  if (id == TableId::Order6) {
    for (const auto& r : compute_order6()) out.push_back(r.diamond);
  } else {
    for (const auto& r : compute_order4(id)) out.push_back(r.diamond);
  }
  return out;
}

std::string emit_table(TableId id, TableFormat format, const std::optional<std::vector<bool>>& new_marks) {
  if (new_marks && new_marks->size() != row_count(id))
    throw Error(ErrorKind::InvalidInvariants, "expected one new mark per row");
  const auto t = layout(id, new_marks);
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv: {
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << '\n';
      };
      line(t.headers);
      for (const auto& row : t.rows) {
        std::vector<std::string> fields;
        for (const auto& c : row) fields.push_back(c.text);
        line(fields);
      }
      break;
    }
    case TableFormat::Markdown: {
      auto line = [&](const std::vector<std::string>& fields) {
        out << '|';
        for (const auto& f : fields) out << ' ' << f << (f.empty() ? "" : " ") << '|';
        out << '\n';
      };
      line(t.headers);
      out << '|';
      for (std::size_t i = 0; i < t.headers.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& row : t.rows) {
        std::vector<std::string> fields;
        for (const auto& c : row) fields.push_back(c.text);
        line(fields);
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
          const auto& c = row[i];
          if (c.kind == CellKind::Int) obj[t.keys[i]] = c.value;
          else if (c.kind == CellKind::Str) obj[t.keys[i]] = c.text;
          else obj[t.keys[i]] = c.flag;
        }
        rows.push_back(obj);
      }
      nlohmann::ordered_json doc = {{"table", std::string(to_string(id))}, {"rows", rows}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::vector<bool> compare_known_text(const std::vector<HodgeDiamond>& rows, std::string_view text) {
  std::set<std::pair<int, int>> known;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '(' && line.back() == ')') line = trim(std::string_view(line).substr(1, line.size() - 2));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    long long h11 = 0, h21 = 0;
    std::string extra;
    if (!(fields >> h11 >> h21) || (fields >> extra) || h11 < 0 || h21 < 0 || h11 > 100000 || h21 > 100000)
      throw Error(ErrorKind::ParseError, "known pairs line " + std::to_string(lineno) + ": expected 'h11 h21'");
    known.emplace(static_cast<int>(h11), static_cast<int>(h21));
  }
  std::vector<bool> out;
  for (const auto& d : rows) out.push_back(!known.count({d.h11, d.h21}));
  return out;
}

std::vector<bool> compare_known(const std::vector<HodgeDiamond>& rows, const std::string& known_pairs_file) {
  std::ifstream in(known_pairs_file, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + known_pairs_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return compare_known_text(rows, buf.str());
}

}  // namespace bv
