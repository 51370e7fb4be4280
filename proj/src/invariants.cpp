#include "ribbon/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "ribbon/oracle.hpp"

namespace ribbon {

std::string encoding_string(const RibbonEncoding& e) {
  std::string s;
  for (int b : e) s += b ? '1' : '0';
  return s;
}

RibbonEncoding encoding_from_string(const std::string& bits) {
  RibbonEncoding e;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("encoding must be a 0/1 string");
    e.push_back(c - '0');
  }
  return e;
}

RibbonEncoding encode_ribbon(const Region& r) {
  if (r.empty()) throw std::invalid_argument("empty region is not a ribbon");
  if (!is_ribbon(r)) throw std::invalid_argument("region is not a ribbon (disconnected or two cells on one diagonal)");
  std::vector<Cell> cells(r.begin(), r.end());
  std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.x - a.y < b.x - b.y; });
  RibbonEncoding e;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    Cell a = cells[i - 1];
    Cell b = cells[i];
    if (b.x == a.x + 1 && b.y == a.y) {
      e.push_back(0);
    } else if (b.x == a.x && b.y == a.y - 1) {
      e.push_back(1);
    } else {
      throw std::invalid_argument("region is not a ribbon (diagonal cells not adjacent)");
    }
  }
  return e;
}

Region ribbon_from_encoding(const RibbonEncoding& e) {
  std::vector<Cell> cells{{0, 0}};
  for (int b : e) {
    Cell c = cells.back();
    cells.push_back(b ? Cell{c.x, c.y - 1} : Cell{c.x + 1, c.y});
  }
  return Region(std::move(cells)).normalized();
}

int f1(const RibbonEncoding& e) {
  if (e.empty()) return 0;
  return e.front() - e.back();
}

Tile ribbon_tile(const RibbonEncoding& e) { return {"R" + encoding_string(e), ribbon_from_encoding(e)}; }

Region leftover_region(int n, int r) {
  require_odd_n(n);
  if (r <= 0 || r >= n) throw std::invalid_argument("leftover needs 0 < r < n");
  const std::int64_t h = n - r;
  return Region::box(0, 0, r, h).united(Region::box(r, 0, 2 * r, r));
}

namespace {

// Adds a ribbon given by its start (top-left) cell and a run-length path.
void add_ribbon(SignedTiling& t, Cell start, const std::vector<std::pair<int, std::int64_t>>& runs) {
  std::vector<Cell> cells{start};
  for (auto [bit, len] : runs)
    for (std::int64_t i = 0; i < len; ++i) {
      Cell c = cells.back();
      cells.push_back(bit ? Cell{c.x, c.y - 1} : Cell{c.x + 1, c.y});
    }
  Region cellset(std::move(cells));
  Bounds b = cellset.bounds();
  Tile tile = ribbon_tile(encode_ribbon(cellset));
  if (std::none_of(t.catalog.begin(), t.catalog.end(), [&](const Tile& x) { return x.id == tile.id; }))
    t.catalog.push_back(tile);
  t.placements.push_back({tile.id, b.min_x, b.min_y, 1});
}

void add_bars(SignedTiling& t, int n, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1,
              bool horizontal) {
  if (x1 <= x0 || y1 <= y0) return;
  if (horizontal) {
    if ((x1 - x0) % n != 0) throw std::logic_error("horizontal bar block width not divisible by n");
    for (std::int64_t y = y0; y < y1; ++y)
      for (std::int64_t x = x0; x < x1; x += n) add_ribbon(t, {x, y}, {{0, n - 1}});
  } else {
    if ((y1 - y0) % n != 0) throw std::logic_error("vertical bar block height not divisible by n");
    for (std::int64_t x = x0; x < x1; ++x)
      for (std::int64_t y = y1 - 1; y >= y0; y -= n) add_ribbon(t, {x, y}, {{1, n - 1}});
  }
}

}  // namespace

SignedTiling leftover_tiling(int n, int r) {
  Region region = leftover_region(n, r);
  const std::int64_t h = n - r;
  SignedTiling t;
  t.tileset = "ribbon" + std::to_string(n);
  // Staircase: 1^(h-1-j) 0^r 1^j from (j, h-1).
  for (std::int64_t j = 0; j < std::min<std::int64_t>(r, h); ++j)
    add_ribbon(t, {j, h - 1}, {{1, h - 1 - j}, {0, r}, {1, j}});
  // When r > h the right block keeps r - h rows: 0^(h+m) 1^h 0^(r-h-1-m) from (r, h+m).
  for (std::int64_t m = 0; m < r - h; ++m) add_ribbon(t, {r, h + m}, {{0, h + m}, {1, h}, {0, r - h - 1 - m}});
  if (!verify_partition(t, region)) throw std::logic_error("leftover staircase does not partition the region");
  return t;
}

Integer tiling_f1_sum(const SignedTiling& t) {
  Integer sum;
  for (const auto& p : t.placements) sum += p.weight * f1(encode_ribbon(t.tile(p.tile).cells));
  return sum;
}

SignedTiling inflated_l_ribbon_tiling(int n, int k) {
  Region target = inflated_l(n, k);
  const std::int64_t kk = k;
  const std::int64_t r = kk % n;
  const std::int64_t width = kk * (n - 1);
  SignedTiling t;
  t.tileset = "ribbon" + std::to_string(n);
  if (r == 0) {
    add_bars(t, n, 0, 0, width, kk, false);
    add_bars(t, n, 0, kk, kk, 2 * kk, false);
  } else {
    add_bars(t, n, n - r, 0, width, r, true);
    add_bars(t, n, r, r, width, kk, false);
    add_bars(t, n, 0, 2 * r, r, 2 * kk, false);
    add_bars(t, n, r, kk, kk, 2 * kk, true);
    SignedTiling left = leftover_tiling(n, static_cast<int>(r));
    for (const auto& p : left.placements) {
      Region cells = left.tile(p.tile).cells.translated(p.dx, p.dy).transposed();
      Bounds b = cells.bounds();
      Tile tile = ribbon_tile(encode_ribbon(cells));
      if (std::none_of(t.catalog.begin(), t.catalog.end(), [&](const Tile& x) { return x.id == tile.id; }))
        t.catalog.push_back(tile);
      t.placements.push_back({tile.id, b.min_x, b.min_y, 1});
    }
  }
  if (!verify_partition(t, target)) throw std::logic_error("inflated L ribbon tiling is not a partition");
  return t;
}

ReplicationVerdict replication_verdict(int n, int k) {
  require_odd_n(n);
  if (k < 1) throw std::invalid_argument("inflation factor must be positive");
  ReplicationVerdict v;
  v.n = n;
  v.k = k;
  v.r = k % n;
  bool odd = k % 2 == 1;
  bool div = k % n == 0;
  v.which = odd && div ? ReplicationCase::odd_div_n
            : !odd && !div ? ReplicationCase::even_not_div_n
                           : ReplicationCase::open;
  v.tiles_needed = Integer(k) * k;
  v.region_tiling = inflated_l_ribbon_tiling(n, k);
  v.region_f1 = tiling_f1_sum(v.region_tiling);
  // Every tile of T_n has f1 = +-1, so k^2 of them sum to something of the parity of k^2.
  Integer diff = v.region_f1 - v.tiles_needed;
  v.conclusion = mpz_even_p(diff.get_mpz_t()) ? ReplicationConclusion::undecided : ReplicationConclusion::impossible;
  return v;
}

std::string to_string(ReplicationCase c) {
  switch (c) {
    case ReplicationCase::odd_div_n:
      return "odd_div_n";
    case ReplicationCase::even_not_div_n:
      return "even_not_div_n";
    case ReplicationCase::open:
      return "open";
  }
  return "?";
}

std::string to_string(ReplicationConclusion c) {
  return c == ReplicationConclusion::impossible ? "impossible" : "undecided";
}

Json replication_to_json(const ReplicationVerdict& v) {
  return {{"n", v.n},
          {"k", v.k},
          {"r", v.r},
          {"case", to_string(v.which)},
          {"tiles_needed", integer_to_json(v.tiles_needed)},
          {"region_f1", integer_to_json(v.region_f1)},
          {"conclusion", to_string(v.conclusion)}};
}

}  // namespace ribbon
