#pragma once

// Lattice regions, the ribbon L tile sets and their polynomial encodings.
//
// A cell is named by its lower-left corner (x, y) and encodes as x^x * y^y.
// A p x q rectangle has height p and base q: cells [0, q) x [0, p).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ribbon/poly.hpp"

namespace ribbon {

struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Bounds {
  std::int64_t min_x = 0, min_y = 0, max_x = -1, max_y = -1;  // inclusive
  std::int64_t width() const { return max_x - min_x + 1; }
  std::int64_t height() const { return max_y - min_y + 1; }
};

// Finite set of cells, kept sorted by (x, y) without duplicates. May be disconnected.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Cell> cells);
  Region(std::initializer_list<Cell> cells) : Region(std::vector<Cell>(cells)) {}

  // Half-open box [x0, x1) x [y0, y1).
  static Region box(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1);
  // Height p, base q, lower-left corner at the origin.
  static Region rectangle(std::int64_t p, std::int64_t q) { return box(0, 0, q, p); }

  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  bool contains(Cell c) const;
  std::span<const Cell> cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  // Throws std::domain_error on the empty region.
  Bounds bounds() const;
  Region translated(std::int64_t dx, std::int64_t dy) const;
  // Translated so that the minimum x and minimum y are both 0.
  Region normalized() const;
  Region transposed() const;

  Region united(const Region& other) const;
  Region minus(const Region& other) const;
  bool intersects(const Region& other) const;
  bool is_connected() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Cell> cells_;
};

// Ribbon: connected, with no two cells on a common line parallel to y = x.
bool is_ribbon(const Region& r);

struct EncodedRegion {
  Polynomial poly;
  Cell offset;  // cell (x, y) of the region became x^(x-offset.x) * y^(y-offset.y)
};

EncodedRegion region_to_poly(const Region& r);
// Inverse on all-coefficient-1 polynomials; nullopt otherwise.
std::optional<Region> poly_to_region(const Polynomial& p);

struct Tile {
  std::string id;
  Region cells;  // normalized to min corner (0, 0)
};

struct TileSet {
  std::string name;
  int n = 0;  // tile size parameter for the library families, 0 otherwise
  std::vector<Tile> tiles;

  std::vector<Polynomial> generators() const;
  const Tile* find(const std::string& id) const;
};

void require_odd_n(int n);

// The four ribbon L n-ominoes G1..G4, n = 2k + 1 odd and >= 5.
TileSet make_tn(int n);
// make_tn plus the 2x2 square "S2".
TileSet make_tilde_tn(int n);
// Resolves "T5", "TT5" / "T~5" / "TildeT5".
TileSet tileset_by_name(const std::string& name);

std::array<Polynomial, 4> tn_generators(int n);
// B1(k), B2(k), B3 = xy - 1.
std::array<Polynomial, 3> tn_basis(int n);

// Row (0,0)..(n-2,0) plus (0,1).
Region l_nomino(int n);
// Each cell of l_nomino(n) blown up to a k x k block.
Region inflated_l(int n, int k);

struct Placement {
  std::string tile;
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  Integer weight = 1;
};

// Weighted translates of catalog tiles. The catalog makes a tiling self-describing.
struct SignedTiling {
  std::string tileset;  // informational, e.g. "T5"
  std::vector<Tile> catalog;
  std::vector<Placement> placements;

  const Tile& tile(const std::string& id) const;
  Region placed_cells(const Placement& p) const;
  // Sum of weights per touched cell (zero sums kept).
  std::map<Cell, Integer> cell_weights() const;
};

}  // namespace ribbon
