#pragma once

// Brute-force ground truth independent of the Groebner machinery:
// integer linear algebra for signed tilings, exact-cover search for regular ones.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ribbon/tiles.hpp"

namespace ribbon {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DioSystem {
  Bounds box;                          // bounding box of the region grown by the margin
  std::vector<Cell> rows;              // raster order: y ascending, then x ascending
  std::vector<Placement> columns;      // ordered by (tile index, dx, dy)
  std::vector<std::vector<std::size_t>> incidence;  // row indices covered by each column
  std::vector<int> target;             // 1 on region cells, 0 elsewhere in the box
};

// Throws ResourceError when the box holds more than max_cells cells.
DioSystem build_dio_system(const Region& r, const TileSet& ts, std::int64_t margin,
                           std::size_t max_cells = 4096);

// Integer solution of matrix * w = target, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_integer(const DioSystem& sys);

// A signed tiling supported in the grown box, or nullopt ("none within margin").
std::optional<SignedTiling> signed_search(const Region& r, const TileSet& ts, std::int64_t margin,
                                          std::size_t max_cells = 4096);

// Weight sum is 1 on every cell of r and 0 on every other touched cell.
bool verify_signed(const SignedTiling& t, const Region& r);

// All weights +1, tiles pairwise disjoint, union exactly r.
bool verify_partition(const SignedTiling& t, const Region& r);

struct CoverLimits {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::uint64_t> seed;      // shuffles placement order when set
  const SignedTiling* hint = nullptr;     // these placements are tried first
};

enum class CoverStatus { found, none, inconclusive };

struct CoverResult {
  CoverStatus status = CoverStatus::none;
  std::optional<SignedTiling> tiling;
  std::uint64_t nodes = 0;
};

CoverResult exact_cover(const Region& r, const TileSet& ts, const CoverLimits& limits = {});

}  // namespace ribbon
