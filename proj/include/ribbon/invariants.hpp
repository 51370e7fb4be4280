#pragma once

// Ribbon encodings, the f1 invariant, leftover regions and the
// non-replication verdicts for inflated L n-ominoes.

#include <optional>
#include <string>
#include <vector>

#include "ribbon/io.hpp"
#include "ribbon/tiles.hpp"

namespace ribbon {

// Bits e1..e_{n-1}: walking from the top-left cell, 1 = step down, 0 = step right.
using RibbonEncoding = std::vector<int>;

std::string encoding_string(const RibbonEncoding& e);
RibbonEncoding encoding_from_string(const std::string& bits);

// Throws std::invalid_argument on a region that is not a ribbon.
RibbonEncoding encode_ribbon(const Region& r);
// Inverse of encode_ribbon, normalized to min corner (0, 0).
Region ribbon_from_encoding(const RibbonEncoding& e);

int f1(const RibbonEncoding& e);

// Ribbon tile with id "R" followed by its encoding.
Tile ribbon_tile(const RibbonEncoding& e);

// [0, r) x [0, n-r)  union  [r, 2r) x [0, r); area r n.
Region leftover_region(int n, int r);
// r ribbon n-tiles, all weight +1, exactly covering leftover_region(n, r).
SignedTiling leftover_tiling(int n, int r);

// Sum of weight * f1 over placements; throws on a non-ribbon tile.
Integer tiling_f1_sum(const SignedTiling& t);

// Regular tiling of inflated_l(n, k) by ribbon n-tiles: bars plus, when n does
// not divide k, a transposed leftover region.
SignedTiling inflated_l_ribbon_tiling(int n, int k);

enum class ReplicationCase { odd_div_n, even_not_div_n, open };
enum class ReplicationConclusion { impossible, undecided };

struct ReplicationVerdict {
  int n = 0;
  int k = 0;
  int r = 0;  // k mod n
  ReplicationCase which = ReplicationCase::open;
  Integer tiles_needed;  // k^2
  Integer region_f1;
  ReplicationConclusion conclusion = ReplicationConclusion::undecided;
  SignedTiling region_tiling;  // ribbon tiling the invariant was read from
};

ReplicationVerdict replication_verdict(int n, int k);

std::string to_string(ReplicationCase c);
std::string to_string(ReplicationConclusion c);
Json replication_to_json(const ReplicationVerdict& v);

}  // namespace ribbon
