#include "ribbon/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ribbon/oracle.hpp"

namespace ribbon {

bool RectanglePlan::is_partition() const {
  std::vector<Cell> all;
  for (const auto& p : pieces) all.insert(all.end(), p.region.begin(), p.region.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  Region target = Region::rectangle(height, width);
  return std::equal(all.begin(), all.end(), target.begin(), target.end());
}

namespace {

SignedTiling empty_tn_tiling(int n) {
  TileSet ts = make_tn(n);
  return {ts.name, ts.tiles, {}};
}

std::string brick_method(int n, std::int64_t w, std::int64_t h) {
  if (w % n == 0 && h % 2 == 0) return "bricks-h";
  if (h % n == 0 && w % 2 == 0) return "bricks-v";
  return "";
}

}  // namespace

void add_bricks(SignedTiling& t, int n, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  const std::int64_t w = x1 - x0;
  const std::int64_t h = y1 - y0;
  if (w <= 0 || h <= 0) return;
  std::string method = brick_method(n, w, h);
  if (method == "bricks-h") {
    // G3 at (x, y) and G4 at (x + 1, y) fill [x, x + n) x [y, y + 2).
    for (std::int64_t y = y0; y < y1; y += 2)
      for (std::int64_t x = x0; x < x1; x += n) {
        t.placements.push_back({"G3", x, y, 1});
        t.placements.push_back({"G4", x + 1, y, 1});
      }
  } else if (method == "bricks-v") {
    // G1 at (x, y) and G2 at (x, y + 1) fill [x, x + 2) x [y, y + n).
    for (std::int64_t x = x0; x < x1; x += 2)
      for (std::int64_t y = y0; y < y1; y += n) {
        t.placements.push_back({"G1", x, y, 1});
        t.placements.push_back({"G2", x, y + 1, 1});
      }
  } else {
    throw std::invalid_argument("a " + std::to_string(h) + " x " + std::to_string(w) +
                                " block needs a side divisible by " + std::to_string(n) +
                                " with the other side even");
  }
}

SignedTiling brick_tilings(std::int64_t p, std::int64_t q, int n) {
  require_odd_n(n);
  if (p < 1 || q < 1) throw std::invalid_argument("rectangle sides must be positive");
  SignedTiling t = empty_tn_tiling(n);
  add_bricks(t, n, 0, 0, q, p);
  if (!verify_partition(t, Region::rectangle(p, q))) throw std::logic_error("brick tiling is not a partition");
  return t;
}

RectanglePlan plan_3n_3n1(int n) {
  require_odd_n(n);
  const std::int64_t N = n;
  RectanglePlan plan{3 * N, 3 * N + 1, {}};
  const std::int64_t boxes[6][4] = {
      {0, 0, N, 2 * N},           {0, 2 * N, N + 1, 3 * N},         {2 * N, 0, 3 * N + 1, N},
      {2 * N + 1, N, 3 * N + 1, 3 * N}, {N, 0, 2 * N, 2 * N - 2}, {N + 1, 2 * N - 1, 2 * N + 1, 3 * N},
  };
  for (const auto& b : boxes)
    plan.pieces.push_back({Region::box(b[0], b[1], b[2], b[3]), brick_method(n, b[2] - b[0], b[3] - b[1])});
  TileSet ts = make_tn(n);
  plan.pieces.push_back({ts.find("G3")->cells.translated(N, 2 * N - 2), "L:G3"});
  plan.pieces.push_back({ts.find("G2")->cells.translated(2 * N - 1, N), "L:G2"});
  return plan;
}

namespace {

SignedTiling tiling_from_plan(const RectanglePlan& plan, int n) {
  SignedTiling t = empty_tn_tiling(n);
  for (const auto& piece : plan.pieces) {
    Bounds b = piece.region.bounds();
    if (piece.method.rfind("L:", 0) == 0) {
      t.placements.push_back({piece.method.substr(2), b.min_x, b.min_y, 1});
    } else if (piece.method == "3n3n1") {
      for (auto p : rect_3n_3n1(n).placements) {
        p.dx += b.min_x;
        p.dy += b.min_y;
        t.placements.push_back(std::move(p));
      }
    } else {
      add_bricks(t, n, b.min_x, b.min_y, b.max_x + 1, b.max_y + 1);
    }
  }
  return t;
}

}  // namespace

SignedTiling rect_3n_3n1(int n) {
  RectanglePlan plan = plan_3n_3n1(n);
  if (!plan.is_partition()) throw std::logic_error("3n x (3n+1) plan is not a partition");
  SignedTiling t = tiling_from_plan(plan, n);
  if (!verify_partition(t, Region::rectangle(plan.height, plan.width)))
    throw std::logic_error("3n x (3n+1) tiling is not a partition");
  return t;
}

RectanglePlan plan_odd_even(std::int64_t a, std::int64_t b, int n) {
  require_odd_n(n);
  const std::int64_t N = n;
  if (a % 2 == 0 && b % 2 == 1) {
    RectanglePlan t = plan_odd_even(b, a, n);
    RectanglePlan out{a, b, {}};
    for (auto& p : t.pieces) {
      std::string m = p.method == "bricks-h" ? "bricks-v" : p.method == "bricks-v" ? "bricks-h" : p.method;
      out.pieces.push_back({p.region.transposed(), m});
    }
    return out;
  }
  if (a % 2 == 0) throw std::invalid_argument("one side must be odd");
  if (b % 2 != 0) throw std::invalid_argument("one side must be even");
  if (b % N != 0) throw std::invalid_argument("the even side must be divisible by n");
  if (b < 3 * N + 1) throw std::invalid_argument("the even side must be at least 3n+1");
  if (a < 3 * N) throw std::invalid_argument("the odd side must be at least 3n");
  RectanglePlan plan{a, b, {}};
  plan.pieces.push_back({Region::box(0, 0, 3 * N + 1, 3 * N), "3n3n1"});
  if (b > 3 * N + 1) plan.pieces.push_back({Region::box(3 * N + 1, 0, b, 3 * N), "bricks-v"});
  if (a > 3 * N) plan.pieces.push_back({Region::box(0, 3 * N, b, a), "bricks-h"});
  return plan;
}

SignedTiling transpose_tn_tiling(const SignedTiling& t, int n) {
  SignedTiling out = empty_tn_tiling(n);
  for (const auto& p : t.placements) {
    std::string id = p.tile == "G1" ? "G3" : p.tile == "G3" ? "G1" : p.tile == "G2" ? "G4" : p.tile == "G4" ? "G2" : "";
    if (id.empty()) throw std::invalid_argument("tile '" + p.tile + "' is not in T_n");
    out.placements.push_back({id, p.dy, p.dx, p.weight});
  }
  return out;
}

SignedTiling odd_even_rectangle(std::int64_t a, std::int64_t b, int n) {
  require_odd_n(n);
  if (a < 1 || b < 1) throw std::invalid_argument("rectangle sides must be positive");
  SignedTiling t;
  if (a % 2 == 0 && b % 2 == 1) {
    t = transpose_tn_tiling(odd_even_rectangle(b, a, n), n);
  } else {
    RectanglePlan plan = plan_odd_even(a, b, n);
    if (!plan.is_partition()) throw std::logic_error("odd/even plan is not a partition");
    t = tiling_from_plan(plan, n);
  }
  if (!verify_partition(t, Region::rectangle(a, b))) throw std::logic_error("odd/even tiling is not a partition");
  return t;
}

}  // namespace ribbon
