#include <doctest.h>

#include <random>

#include "ribbon/io.hpp"
#include "ribbon/tiles.hpp"
#include "test_support.hpp"

using namespace ribbon;

TEST_CASE("region encoding") {
  CHECK(region_to_poly(Region{{0, 0}}).poly == Polynomial(1));
  CHECK(region_to_poly(Region::rectangle(1, 5)).poly == geometric(Var::x, 5));
  EncodedRegion shifted = region_to_poly(Region{{3, -2}, {4, -2}});
  CHECK(shifted.poly == Polynomial::parse("x+1"));
  CHECK(shifted.offset == Cell{3, -2});
  CHECK(region_to_poly(Region{}).poly.is_zero());

  TileSet t5 = make_tn(5);
  CHECK(region_to_poly(t5.find("G2")->cells).poly == Polynomial::parse("y^3+x*y^3+x*y^2+x*y+x"));
}

TEST_CASE("poly_to_region inverts region_to_poly on 0/1 polynomials") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    Region r = test_support::random_region(rng, 30, 6).normalized();
    auto back = poly_to_region(region_to_poly(r).poly);
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK_FALSE(poly_to_region(Polynomial::parse("2*x+1")).has_value());
  CHECK_FALSE(poly_to_region(Polynomial::parse("x-1")).has_value());
}

TEST_CASE("tile sets match the closed-form polynomials") {
  for (int k = 2; k <= 12; ++k) {
    const int n = 2 * k + 1;
    TileSet ts = make_tn(n);
    auto g = tn_generators(n);
    REQUIRE(ts.tiles.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(ts.tiles[i].cells.size() == static_cast<std::size_t>(n));
      CHECK(ts.tiles[i].cells == ts.tiles[i].cells.normalized());
      CHECK(is_ribbon(ts.tiles[i].cells));
      CHECK(ts.generators()[i] == g[i]);
      CHECK(g[i].all_ones());
      CHECK(g[i].size() == static_cast<std::size_t>(n));
    }
    auto b = tn_basis(n);
    CHECK(b[0].all_ones());
    CHECK(b[1].all_ones());
    CHECK(b[0].size() == static_cast<std::size_t>(2 * k + 1));  // (k + 2) + (k - 1)
    CHECK(b[1].size() == static_cast<std::size_t>(2 * k + 1));  // (k + 1) + k
    CHECK(b[2] == Polynomial::parse("x*y-1"));
  }
  auto b = tn_basis(5);
  CHECK(b[0].to_string() == "y^3+y^2+x+y+1");
  CHECK(b[1] == Polynomial::parse("y^2+y+x^2+x+1"));

  TileSet tt = make_tilde_tn(5);
  CHECK(tt.tiles.size() == 5);
  CHECK(tt.generators().back() == Polynomial::parse("1+x+y+x*y"));
  CHECK(tileset_by_name("T7").n == 7);
  CHECK(tileset_by_name("TT9").tiles.size() == 5);
  CHECK(tileset_by_name("T~5").tiles.size() == 5);
  CHECK(tileset_by_name("TildeT5").tiles.size() == 5);
  CHECK_THROWS(make_tn(6));
  CHECK_THROWS(make_tn(3));
  CHECK_THROWS(tileset_by_name("Q5"));
}

TEST_CASE("ribbon test") {
  CHECK(is_ribbon(Region::rectangle(1, 7)));
  CHECK(is_ribbon(Region::rectangle(7, 1)));
  CHECK_FALSE(is_ribbon(Region::rectangle(2, 2)));
  CHECK_FALSE(is_ribbon(Region{{0, 0}, {2, 0}}));
}

TEST_CASE("L shapes") {
  Region l5 = l_nomino(5);
  CHECK(l5.size() == 5);
  CHECK(l5 == Region{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}});
  CHECK(inflated_l(5, 1) == l5);
  CHECK(inflated_l(5, 2).size() == 20);
  for (int n : {5, 7, 9})
    for (int k = 1; k <= 5; ++k) CHECK(inflated_l(n, k).size() == static_cast<std::size_t>(k * k * n));
  // Each cell of the L becomes a k x k block.
  Region big = inflated_l(7, 3);
  for (const auto& c : l_nomino(7))
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(big.contains({3 * c.x + i, 3 * c.y + j}));
  CHECK_THROWS(inflated_l(5, 0));
}

TEST_CASE("region set operations") {
  Region a = Region::box(0, 0, 3, 3);
  Region b = Region::box(2, 2, 4, 4);
  CHECK(a.united(b).size() == 12);
  CHECK(a.minus(b).size() == 8);
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(b.translated(5, 0)));
  CHECK(Region{{0, 0}, {2, 0}}.is_connected() == false);
  CHECK(Region::box(0, 0, 2, 3).transposed() == Region::box(0, 0, 3, 2));
  CHECK_THROWS_AS(Region{}.bounds(), std::domain_error);
}

TEST_CASE("ascii I/O") {
  CHECK(region_to_ascii(Region{{0, 0}, {1, 0}, {0, 1}}) == "#.\n##");
  CHECK(region_from_ascii("#.\n##") == Region{{0, 0}, {1, 0}, {0, 1}});
  CHECK(region_from_ascii("#.\n##\n") == Region{{0, 0}, {1, 0}, {0, 1}});
  CHECK(region_to_ascii(Region{}).empty());
  CHECK(region_from_ascii("").empty());
  try {
    region_from_ascii("##\n#x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    Region r = test_support::random_region(rng, 40, 7).normalized();
    CHECK(region_from_ascii(region_to_ascii(r)) == r);
    CHECK(parse_region(region_to_ascii(r)) == r);
  }
}

TEST_CASE("json I/O") {
  Region domino{{0, 0}, {1, 0}};
  CHECK(region_to_json(domino).dump() == R"({"cells":[[0,0],[1,0]]})");
  CHECK(region_from_json(Json::parse(R"({"cells":[[0,0],[1,0]]})")) == domino);
  CHECK_THROWS(region_from_json(Json::parse(R"({"cells":[[0]]})")));
  CHECK_THROWS(parse_region("{not json"));
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    Region r = test_support::random_region(rng, 40, 7);
    CHECK(region_from_json(Json::parse(region_to_json(r).dump())) == r);
  }

  TileSet t5 = make_tn(5);
  SignedTiling t{t5.name, t5.tiles, {{"G1", 0, 0, 1}, {"G2", -3, 4, Integer("-123456789012345678901")}}};
  SignedTiling back = tiling_from_json(Json::parse(tiling_to_json(t).dump()));
  CHECK(back.tileset == "T5");
  REQUIRE(back.placements.size() == 2);
  CHECK(back.placements[1].weight == t.placements[1].weight);
  CHECK(back.placements[1].dx == -3);
  CHECK(back.cell_weights() == t.cell_weights());

  SignedTiling lib = tiling_from_json(
      Json::parse(R"({"tileset":"T5","placements":[{"tile":"G3","dx":0,"dy":0,"w":1}]})"));
  CHECK(lib.placed_cells(lib.placements[0]) == t5.find("G3")->cells);
  CHECK_THROWS(tiling_from_json(Json::parse(R"({"tileset":"T5","placements":[{"tile":"G9"}]})")));
}

TEST_CASE("certificate JSON round trip") {
  ReductionCertificate c{Polynomial::parse("x^2*y^2"), {Polynomial::parse("x*y-1")}, {Polynomial::parse("x*y+1")},
                         Polynomial(1)};
  ReductionCertificate back = certificate_from_json(Json::parse(certificate_to_json(c).dump()));
  CHECK(back.input == c.input);
  CHECK(back.basis == c.basis);
  CHECK(back.quotients == c.quotients);
  CHECK(back.normal_form == c.normal_form);
}
