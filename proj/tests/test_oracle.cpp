#include <doctest.h>

#include "ribbon/constructions.hpp"
#include "ribbon/decide.hpp"
#include "ribbon/oracle.hpp"

using namespace ribbon;

TEST_CASE("system layout") {
  TileSet t5 = make_tn(5);
  DioSystem sys = build_dio_system(Region::rectangle(1, 5), t5, 2);
  CHECK(sys.box.width() == 9);
  CHECK(sys.box.height() == 5);
  CHECK(sys.rows.size() == 45);
  CHECK(sys.rows.front() == Cell{-2, -2});
  CHECK(sys.rows[1] == Cell{-1, -2});
  std::size_t ones = 0;
  for (int v : sys.target) ones += v;
  CHECK(ones == 5);
  for (std::size_t j = 0; j < sys.columns.size(); ++j) {
    CHECK(sys.incidence[j].size() == 5);
    for (const auto& c : t5.find(sys.columns[j].tile)->cells) {
      Cell at{c.x + sys.columns[j].dx, c.y + sys.columns[j].dy};
      CHECK(at.x >= sys.box.min_x);
      CHECK(at.x <= sys.box.max_x);
      CHECK(at.y >= sys.box.min_y);
      CHECK(at.y <= sys.box.max_y);
    }
  }
  for (std::size_t j = 1; j < sys.columns.size(); ++j) {
    const auto& a = sys.columns[j - 1];
    const auto& b = sys.columns[j];
    CHECK(std::tie(a.tile, a.dx, a.dy) < std::tie(b.tile, b.dx, b.dy));
  }
  CHECK_THROWS_AS(build_dio_system(Region::rectangle(50, 50), t5, 3, 1000), ResourceError);
}

TEST_CASE("integer solver on tiny systems") {
  // Columns {0,1} and {1,2} cannot make (1,0,0) but do make (1,0,-1).
  DioSystem sys;
  sys.rows = {{0, 0}, {1, 0}, {2, 0}};
  sys.target = {1, 0, 0};
  sys.columns = {{"a", 0, 0, 1}, {"b", 1, 0, 1}};
  sys.incidence = {{0, 1}, {1, 2}};
  CHECK_FALSE(solve_integer(sys).has_value());
  sys.target = {1, 0, -1};
  auto w = solve_integer(sys);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 1);
  CHECK((*w)[1] == -1);
  // Parity obstruction: 2 w = 1 has no integer solution, 2 w + 3 v = 1 has one.
  DioSystem two;
  two.rows = {{0, 0}};
  two.target = {1};
  two.columns = {{"a", 0, 0, 1}};
  two.incidence = {{0, 0}};
  CHECK_FALSE(solve_integer(two).has_value());
  two.columns.push_back({"b", 0, 0, 1});
  two.incidence.push_back({0, 0, 0});
  auto mix = solve_integer(two);
  REQUIRE(mix.has_value());
  CHECK(2 * (*mix)[0] + 3 * (*mix)[1] == 1);
}

TEST_CASE("signed search") {
  TileSet t5 = make_tn(5);
  auto bar = signed_search(Region::rectangle(1, 5), t5, 2);
  REQUIRE(bar.has_value());
  CHECK(verify_signed(*bar, Region::rectangle(1, 5)));
  for (int m = 0; m <= 3; ++m) CHECK_FALSE(signed_search(Region::rectangle(2, 2), t5, m).has_value());
  auto empty = signed_search(Region{}, t5, 1);
  REQUIRE(empty.has_value());
  CHECK(empty->placements.empty());
  auto cell = signed_search(Region{{0, 0}}, make_tilde_tn(5), 2);
  REQUIRE(cell.has_value());
  CHECK(verify_signed(*cell, Region{{0, 0}}));
}

TEST_CASE("signed verification") {
  TileSet t5 = make_tn(5);
  Decision d = signed_tileable(Region::rectangle(5, 2), t5);
  REQUIRE(d.tiling.has_value());
  CHECK(verify_signed(*d.tiling, Region::rectangle(5, 2)));
  SignedTiling bad = *d.tiling;
  bad.placements.front().weight += 1;
  CHECK_FALSE(verify_signed(bad, Region::rectangle(5, 2)));
  SignedTiling cancel{t5.name, t5.tiles, {{"G1", 3, 3, 1}, {"G1", 3, 3, -1}}};
  CHECK(verify_signed(cancel, Region{}));
  SignedTiling unknown{t5.name, t5.tiles, {{"ZZ", 0, 0, 1}}};
  CHECK_FALSE(verify_signed(unknown, Region{}));
}

TEST_CASE("exact cover") {
  TileSet t5 = make_tn(5);
  CoverResult two = exact_cover(Region::rectangle(2, 5), t5);
  CHECK(two.status == CoverStatus::found);
  REQUIRE(two.tiling.has_value());
  CHECK(two.tiling->placements.size() == 2);
  CHECK(verify_partition(*two.tiling, Region::rectangle(2, 5)));

  CHECK(exact_cover(Region::rectangle(3, 4), t5).status == CoverStatus::none);
  CHECK(exact_cover(Region::rectangle(5, 5), t5).status == CoverStatus::none);

  CoverLimits tight;
  tight.max_nodes = 3;
  CHECK(exact_cover(Region::rectangle(15, 14), t5, tight).status == CoverStatus::inconclusive);

  CoverLimits seeded;
  seeded.seed = 42;
  CoverResult s = exact_cover(Region::rectangle(4, 10), t5, seeded);
  CHECK(s.status == CoverStatus::found);
  CHECK(verify_partition(*s.tiling, Region::rectangle(4, 10)));
}

TEST_CASE("exact cover with a hint") {
  TileSet t5 = make_tn(5);
  SignedTiling hint = rect_3n_3n1(5);
  CoverLimits lim;
  lim.hint = &hint;
  CoverResult r = exact_cover(Region::rectangle(15, 16), t5, lim);
  CHECK(r.status == CoverStatus::found);
  CHECK(r.tiling->placements.size() == 48);
  CHECK(verify_partition(*r.tiling, Region::rectangle(15, 16)));
}

TEST_CASE("partition verification") {
  TileSet t5 = make_tn(5);
  SignedTiling brick{t5.name, t5.tiles, {{"G3", 0, 0, 1}, {"G4", 1, 0, 1}}};
  CHECK(verify_partition(brick, Region::rectangle(2, 5)));
  SignedTiling overlap{t5.name, t5.tiles, {{"G3", 0, 0, 1}, {"G3", 0, 0, 1}}};
  CHECK_FALSE(verify_partition(overlap, Region::rectangle(2, 5)));
  SignedTiling weighted{t5.name, t5.tiles, {{"G3", 0, 0, 2}}};
  CHECK_FALSE(verify_partition(weighted, t5.find("G3")->cells));
}
