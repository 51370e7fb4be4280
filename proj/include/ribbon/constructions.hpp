#pragma once

// Regular tilings of rectangles by T_n, all weights +1.
// Rectangles are p rows high and q columns wide.

#include <string>
#include <vector>

#include "ribbon/tiles.hpp"

namespace ribbon {

struct PlanPiece {
  Region region;
  std::string method;  // "bricks-h", "bricks-v", "3n3n1", "L:G3" ...
};

struct RectanglePlan {
  std::int64_t height = 0;
  std::int64_t width = 0;
  std::vector<PlanPiece> pieces;

  // The pieces are pairwise disjoint and cover the rectangle exactly.
  bool is_partition() const;
};

// Tiles the box [x0, x1) x [y0, y1) with 2 x n bricks (two tiles each) or n x 2 bricks.
void add_bricks(SignedTiling& t, int n, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1);

SignedTiling brick_tilings(std::int64_t p, std::int64_t q, int n);

RectanglePlan plan_3n_3n1(int n);
// 3n high, 3n + 1 wide.
SignedTiling rect_3n_3n1(int n);

RectanglePlan plan_odd_even(std::int64_t a, std::int64_t b, int n);
// a x b where one side is odd and >= 3n and the other is even, divisible by n and >= 3n + 1.
SignedTiling odd_even_rectangle(std::int64_t a, std::int64_t b, int n);

// Swaps x and y; T_n is closed under this (G1 <-> G3, G2 <-> G4).
SignedTiling transpose_tn_tiling(const SignedTiling& t, int n);

}  // namespace ribbon
