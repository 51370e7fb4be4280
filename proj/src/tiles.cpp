#include "ribbon/tiles.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace ribbon {

Region::Region(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Region Region::box(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  std::vector<Cell> cells;
  if (x1 > x0 && y1 > y0) cells.reserve(static_cast<std::size_t>((x1 - x0) * (y1 - y0)));
  for (std::int64_t x = x0; x < x1; ++x)
    for (std::int64_t y = y0; y < y1; ++y) cells.push_back({x, y});
  Region r;
  r.cells_ = std::move(cells);  // already sorted
  return r;
}

bool Region::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Bounds Region::bounds() const {
  if (cells_.empty()) throw std::domain_error("empty region has no bounds");
  Bounds b{cells_.front().x, cells_.front().y, cells_.back().x, cells_.front().y};
  for (const auto& c : cells_) {
    b.min_y = std::min(b.min_y, c.y);
    b.max_y = std::max(b.max_y, c.y);
  }
  return b;
}

Region Region::translated(std::int64_t dx, std::int64_t dy) const {
  Region r;
  r.cells_ = cells_;
  for (auto& c : r.cells_) {
    c.x += dx;
    c.y += dy;
  }
  return r;
}

Region Region::normalized() const {
  if (cells_.empty()) return {};
  Bounds b = bounds();
  return translated(-b.min_x, -b.min_y);
}

Region Region::transposed() const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back({c.y, c.x});
  return Region(std::move(out));
}

Region Region::united(const Region& other) const {
  Region r;
  std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                 std::back_inserter(r.cells_));
  return r;
}

Region Region::minus(const Region& other) const {
  Region r;
  std::set_difference(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                      std::back_inserter(r.cells_));
  return r;
}

bool Region::intersects(const Region& other) const {
  auto a = cells_.begin();
  auto b = other.cells_.begin();
  while (a != cells_.end() && b != other.cells_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

bool Region::is_connected() const {
  if (cells_.empty()) return true;
  std::set<Cell> seen{cells_.front()};
  std::queue<Cell> todo;
  todo.push(cells_.front());
  while (!todo.empty()) {
    Cell c = todo.front();
    todo.pop();
    for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      if (contains(n) && seen.insert(n).second) todo.push(n);
    }
  }
  return seen.size() == cells_.size();
}

bool is_ribbon(const Region& r) {
  if (r.empty()) return false;
  std::set<std::int64_t> diagonals;
  for (const auto& c : r)
    if (!diagonals.insert(c.x - c.y).second) return false;
  return r.is_connected();
}

EncodedRegion region_to_poly(const Region& r) {
  if (r.empty()) return {};
  Bounds b = r.bounds();
  if (b.width() > std::numeric_limits<std::uint32_t>::max() ||
      b.height() > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("region too large to encode");
  std::vector<Term> terms;
  terms.reserve(r.size());
  for (const auto& c : r)
    terms.push_back({{static_cast<std::uint32_t>(c.x - b.min_x), static_cast<std::uint32_t>(c.y - b.min_y)}, 1});
  return {Polynomial::from_terms(std::move(terms)), {b.min_x, b.min_y}};
}

std::optional<Region> poly_to_region(const Polynomial& p) {
  if (!p.all_ones()) return std::nullopt;
  std::vector<Cell> cells;
  cells.reserve(p.size());
  for (const auto& t : p.terms()) cells.push_back({t.mono.ex, t.mono.ey});
  return Region(std::move(cells));
}

std::vector<Polynomial> TileSet::generators() const {
  std::vector<Polynomial> out;
  out.reserve(tiles.size());
  for (const auto& t : tiles) out.push_back(region_to_poly(t.cells).poly);
  return out;
}

const Tile* TileSet::find(const std::string& id) const {
  for (const auto& t : tiles)
    if (t.id == id) return &t;
  return nullptr;
}

void require_odd_n(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 5, got " + std::to_string(n));
}

TileSet make_tn(int n) {
  require_odd_n(n);
  const std::int64_t k2 = n - 1;  // 2k
  TileSet ts;
  ts.name = "T" + std::to_string(n);
  ts.n = n;
  // G1: column (0,0)..(0,2k-1) plus (1,0)
  ts.tiles.push_back({"G1", Region::box(0, 0, 1, k2).united(Region{{1, 0}})});
  // G2: (0,2k-1) plus column (1,0)..(1,2k-1)
  ts.tiles.push_back({"G2", Region::box(1, 0, 2, k2).united(Region{{0, k2 - 1}})});
  // G3: row (0,0)..(2k-1,0) plus (0,1)
  ts.tiles.push_back({"G3", Region::box(0, 0, k2, 1).united(Region{{0, 1}})});
  // G4: row (0,1)..(2k-1,1) plus (2k-1,0)
  ts.tiles.push_back({"G4", Region::box(0, 1, k2, 2).united(Region{{k2 - 1, 0}})});
  return ts;
}

TileSet make_tilde_tn(int n) {
  TileSet ts = make_tn(n);
  ts.name = "TT" + std::to_string(n);
  ts.tiles.push_back({"S2", Region::box(0, 0, 2, 2)});
  return ts;
}

TileSet tileset_by_name(const std::string& name) {
  auto parse_n = [&](std::size_t prefix) {
    std::string digits = name.substr(prefix);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
      throw std::invalid_argument("unknown tile set '" + name + "'");
    return std::stoi(digits);
  };
  for (const char* p : {"TildeT", "TT", "T~"})
    if (name.rfind(p, 0) == 0) return make_tilde_tn(parse_n(std::string(p).size()));
  if (name.rfind('T', 0) == 0) return make_tn(parse_n(1));
  throw std::invalid_argument("unknown tile set '" + name + "'");
}

std::array<Polynomial, 4> tn_generators(int n) {
  require_odd_n(n);
  const auto k2 = static_cast<std::uint32_t>(n - 1);
  Polynomial gy = geometric(Var::y, k2);
  Polynomial gx = geometric(Var::x, k2);
  return {gy + Polynomial::x(), Polynomial::y(k2 - 1) + Polynomial::x() * gy,
          Polynomial::y() + gx, Polynomial::y() * gx + Polynomial::x(k2 - 1)};
}

std::array<Polynomial, 3> tn_basis(int n) {
  require_odd_n(n);
  const auto k = static_cast<std::uint32_t>((n - 1) / 2);
  return {geometric(Var::y, k + 2) + Polynomial::x() * geometric(Var::x, k - 1),
          geometric(Var::y, k + 1) + Polynomial::x() * geometric(Var::x, k),
          Polynomial::x() * Polynomial::y() - Polynomial(1)};
}

Region l_nomino(int n) {
  require_odd_n(n);
  return Region::box(0, 0, n - 1, 1).united(Region{{0, 1}});
}

Region inflated_l(int n, int k) {
  require_odd_n(n);
  if (k < 1) throw std::invalid_argument("inflation factor must be positive");
  std::int64_t kk = k;
  return Region::box(0, 0, kk * (n - 1), kk).united(Region::box(0, kk, kk, 2 * kk));
}

const Tile& SignedTiling::tile(const std::string& id) const {
  for (const auto& t : catalog)
    if (t.id == id) return t;
  throw std::out_of_range("tile '" + id + "' not in catalog");
}

Region SignedTiling::placed_cells(const Placement& p) const {
  return tile(p.tile).cells.translated(p.dx, p.dy);
}

std::map<Cell, Integer> SignedTiling::cell_weights() const {
  std::map<Cell, Integer> out;
  for (const auto& p : placements) {
    const Tile& t = tile(p.tile);
    for (const auto& c : t.cells) out[{c.x + p.dx, c.y + p.dy}] += p.weight;
  }
  return out;
}

}  // namespace ribbon
