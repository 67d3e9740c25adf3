#pragma once

#include <utility>
#include <vector>

#include "bv/invariants.hpp"

namespace bv {

struct HodgeDiamond {
  int h11 = 0;
  int h21 = 0;

  int euler() const { return 2 * (h11 - h21); }
  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

struct FamilyFlags {
  bool bv_maximal = false;
  bool no_mum = false;
  int alpha_X_order = 0;  // 0 unless bv_maximal
  friend bool operator==(const FamilyFlags&, const FamilyFlags&) = default;
};

// (h11, h21) of the alpha-invariant part: (1 + r, m - 1), or (1 + r, m) for order 2.
std::pair<int, int> invariant_part(Order order, int r, int m);

HodgeDiamond hodge_x2(const FixedLocusN2& data, const EigenspaceDims& dims);
HodgeDiamond hodge_x3(const FixedLocusN3& data, const EigenspaceDims& dims);
HodgeDiamond hodge_x4(const FixedLocusN4& data, const EigenspaceDims& dims);
HodgeDiamond hodge_x6(const FixedLocusN6& data, const EigenspaceDims& dims);

FamilyFlags family_flags(Order order, const HodgeDiamond& diamond, const EigenspaceDims& dims);

// Unordered pairs (i <= j) with rows[i] the transpose of rows[j].
std::vector<std::pair<std::size_t, std::size_t>> mirror_pairs(const std::vector<HodgeDiamond>& rows);

}  // namespace bv
