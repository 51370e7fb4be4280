#pragma once

// Shared helpers for the test binaries.

#include <random>
#include <vector>

#include "ribbon/poly.hpp"
#include "ribbon/tiles.hpp"

namespace test_support {

inline ribbon::Polynomial random_poly(std::mt19937_64& rng, int terms, unsigned max_exp, long max_coeff) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::uniform_int_distribution<long> c(-max_coeff, max_coeff);
  std::vector<ribbon::Term> ts;
  for (int i = 0; i < terms; ++i) ts.push_back({{e(rng), e(rng)}, c(rng)});
  return ribbon::Polynomial::from_terms(std::move(ts));
}

inline ribbon::Region random_region(std::mt19937_64& rng, int max_cells, std::int64_t span) {
  std::uniform_int_distribution<std::int64_t> coord(-span, span);
  std::uniform_int_distribution<int> count(0, max_cells);
  std::vector<ribbon::Cell> cells;
  int k = count(rng);
  for (int i = 0; i < k; ++i) cells.push_back({coord(rng), coord(rng)});
  return ribbon::Region(std::move(cells));
}

}  // namespace test_support
