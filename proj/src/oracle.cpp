#include "ribbon/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ribbon {

DioSystem build_dio_system(const Region& r, const TileSet& ts, std::int64_t margin, std::size_t max_cells) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  DioSystem sys;
  if (r.empty()) return sys;
  Bounds b = r.bounds();
  sys.box = {b.min_x - margin, b.min_y - margin, b.max_x + margin, b.max_y + margin};
  const std::int64_t w = sys.box.width();
  const std::int64_t h = sys.box.height();
  if (w * h > static_cast<std::int64_t>(max_cells))
    throw ResourceError("box of " + std::to_string(w * h) + " cells exceeds the cap of " +
                        std::to_string(max_cells));
  auto row_of = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::size_t>((y - sys.box.min_y) * w + (x - sys.box.min_x));
  };
  for (std::int64_t y = sys.box.min_y; y <= sys.box.max_y; ++y)
    for (std::int64_t x = sys.box.min_x; x <= sys.box.max_x; ++x) {
      sys.rows.push_back({x, y});
      sys.target.push_back(r.contains({x, y}) ? 1 : 0);
    }
  for (const auto& tile : ts.tiles) {
    Bounds tb = tile.cells.bounds();
    for (std::int64_t dx = sys.box.min_x; dx + tb.max_x <= sys.box.max_x; ++dx)
      for (std::int64_t dy = sys.box.min_y; dy + tb.max_y <= sys.box.max_y; ++dy) {
        std::vector<std::size_t> col;
        col.reserve(tile.cells.size());
        for (const auto& c : tile.cells) col.push_back(row_of(c.x + dx, c.y + dy));
        std::sort(col.begin(), col.end());
        sys.columns.push_back({tile.id, dx, dy, 1});
        sys.incidence.push_back(std::move(col));
      }
  }
  return sys;
}

namespace {

using SparseVec = std::map<std::size_t, Integer>;

// v += f * u
void axpy(SparseVec& v, const Integer& f, const SparseVec& u) {
  for (const auto& [k, val] : u) {
    auto [it, inserted] = v.try_emplace(k);
    mpz_addmul(it->second.get_mpz_t(), f.get_mpz_t(), val.get_mpz_t());
    if (it->second == 0) v.erase(it);
  }
}

SparseVec combine(const Integer& a, const SparseVec& u, const Integer& b, const SparseVec& v) {
  SparseVec out;
  axpy(out, a, u);
  axpy(out, b, v);
  return out;
}

struct Pivot {
  SparseVec vec;    // leading row is the key under which this pivot is stored
  SparseVec combo;  // the same vector as a combination of original columns
};

}  // namespace

// Column echelon form by gcd elimination, tracking each pivot as a combination
// of original columns; then forward substitution against the target.
std::optional<std::vector<Integer>> solve_integer(const DioSystem& sys) {
  std::vector<std::optional<Pivot>> pivots(sys.rows.size());
  for (std::size_t j = 0; j < sys.columns.size(); ++j) {
    SparseVec v;
    for (std::size_t row : sys.incidence[j]) v[row] += 1;
    SparseVec c{{j, Integer(1)}};
    while (!v.empty()) {
      std::size_t r = v.begin()->first;
      if (!pivots[r]) {
        if (v.begin()->second < 0) {
          for (auto& [k, val] : v) val = -val;
          for (auto& [k, val] : c) val = -val;
        }
        pivots[r] = Pivot{std::move(v), std::move(c)};
        break;
      }
      Pivot& p = *pivots[r];
      const Integer a = p.vec.begin()->second;
      const Integer b = v.begin()->second;
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0) {
        Integer f = -(b / a);
        axpy(v, f, p.vec);
        axpy(c, f, p.combo);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer bg = b / g;
      Integer ag = -(a / g);
      SparseVec nv = combine(s, p.vec, t, v);
      SparseVec nc = combine(s, p.combo, t, c);
      SparseVec rv = combine(bg, p.vec, ag, v);
      SparseVec rc = combine(bg, p.combo, ag, c);
      p.vec = std::move(nv);
      p.combo = std::move(nc);
      v = std::move(rv);
      c = std::move(rc);
    }
  }

  SparseVec residual;
  for (std::size_t i = 0; i < sys.target.size(); ++i)
    if (sys.target[i] != 0) residual[i] = sys.target[i];
  SparseVec w;
  while (!residual.empty()) {
    std::size_t r = residual.begin()->first;
    if (!pivots[r]) return std::nullopt;
    const Pivot& p = *pivots[r];
    const Integer& lead = p.vec.begin()->second;
    const Integer& val = residual.begin()->second;
    if (mpz_divisible_p(val.get_mpz_t(), lead.get_mpz_t()) == 0) return std::nullopt;
    Integer f = val / lead;
    Integer neg = -f;
    axpy(residual, neg, p.vec);
    axpy(w, f, p.combo);
  }
  std::vector<Integer> out(sys.columns.size());
  for (auto& [k, val] : w) out[k] = val;
  return out;
}

std::optional<SignedTiling> signed_search(const Region& r, const TileSet& ts, std::int64_t margin,
                                          std::size_t max_cells) {
  SignedTiling t{ts.name, ts.tiles, {}};
  if (r.empty()) return t;
  DioSystem sys = build_dio_system(r, ts, margin, max_cells);
  auto w = solve_integer(sys);
  if (!w) return std::nullopt;
  for (std::size_t j = 0; j < w->size(); ++j) {
    if ((*w)[j] == 0) continue;
    Placement p = sys.columns[j];
    p.weight = (*w)[j];
    t.placements.push_back(std::move(p));
  }
  if (!verify_signed(t, r)) throw std::logic_error("integer solution failed to replay");
  return t;
}

bool verify_signed(const SignedTiling& t, const Region& r) {
  std::map<Cell, Integer> sums;
  try {
    sums = t.cell_weights();
  } catch (const std::out_of_range&) {
    return false;
  }
  for (const auto& c : r)
    if (!sums.contains(c)) return false;
  for (const auto& [cell, w] : sums)
    if (w != (r.contains(cell) ? 1 : 0)) return false;
  return true;
}

bool verify_partition(const SignedTiling& t, const Region& r) {
  std::vector<Cell> covered;
  for (const auto& p : t.placements) {
    if (p.weight != 1) return false;
    const Tile* tile = nullptr;
    for (const auto& c : t.catalog)
      if (c.id == p.tile) tile = &c;
    if (tile == nullptr) return false;
    for (const auto& c : tile->cells) covered.push_back({c.x + p.dx, c.y + p.dy});
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
  return std::equal(covered.begin(), covered.end(), r.begin(), r.end());
}

namespace {

// Dancing links over region cells (columns) and in-region placements (rows).
class Dlx {
 public:
  Dlx(std::size_t columns, const std::vector<std::vector<std::size_t>>& rows) {
    const std::size_t root = 0;
    nodes_.resize(columns + 1);
    size_.assign(columns + 1, 0);
    for (std::size_t i = 0; i <= columns; ++i) {
      nodes_[i] = {i == 0 ? columns : i - 1, i == columns ? 0 : i + 1, i, i, i, kNoRow};
    }
    nodes_[root].left = columns;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t first = kNoRow;
      for (std::size_t col : rows[r]) {
        std::size_t c = col + 1;
        std::size_t id = nodes_.size();
        nodes_.push_back({id, id, nodes_[c].up, c, c, r});
        nodes_[nodes_[c].up].down = id;
        nodes_[c].up = id;
        ++size_[c];
        if (first == kNoRow) {
          first = id;
        } else {
          nodes_[id].left = nodes_[first].left;
          nodes_[id].right = first;
          nodes_[nodes_[first].left].right = id;
          nodes_[first].left = id;
        }
      }
    }
  }

  CoverStatus search(std::uint64_t max_nodes, std::vector<std::size_t>& solution, std::uint64_t& nodes) {
    max_nodes_ = max_nodes;
    nodes_used_ = 0;
    aborted_ = false;
    bool found = recurse();
    nodes = nodes_used_;
    if (found) {
      solution = partial_;
      return CoverStatus::found;
    }
    return aborted_ ? CoverStatus::inconclusive : CoverStatus::none;
  }

 private:
  static constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);
  struct Node {
    std::size_t left, right, up, down, col, row;
  };

  void cover(std::size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down)
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --size_[nodes_[j].col];
      }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up)
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++size_[nodes_[j].col];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
  }

  bool recurse() {
    if (nodes_[0].right == 0) return true;
    if (++nodes_used_ > max_nodes_) {
      aborted_ = true;
      return false;
    }
    std::size_t best = nodes_[0].right;
    for (std::size_t c = nodes_[best].right; c != 0; c = nodes_[c].right)
      if (size_[c] < size_[best]) best = c;
    if (size_[best] == 0) return false;
    cover(best);
    for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
      partial_.push_back(nodes_[r].row);
      for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
      if (recurse()) return true;
      for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
      partial_.pop_back();
      if (aborted_) break;
    }
    uncover(best);
    return false;
  }

  std::vector<Node> nodes_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> partial_;
  std::uint64_t max_nodes_ = 0;
  std::uint64_t nodes_used_ = 0;
  bool aborted_ = false;
};

}  // namespace

CoverResult exact_cover(const Region& r, const TileSet& ts, const CoverLimits& limits) {
  CoverResult out;
  SignedTiling base{ts.name, ts.tiles, {}};
  if (r.empty()) {
    out.status = CoverStatus::found;
    out.tiling = base;
    return out;
  }
  bool uniform = !ts.tiles.empty();
  for (const auto& t : ts.tiles) uniform = uniform && t.cells.size() == ts.tiles.front().cells.size();
  if (uniform && r.size() % ts.tiles.front().cells.size() != 0) return out;

  std::map<Cell, std::size_t> index;
  for (const auto& c : r) index.emplace(c, index.size());

  std::vector<Placement> placements;
  std::vector<std::vector<std::size_t>> rows;
  auto try_add = [&](const Tile& tile, std::int64_t dx, std::int64_t dy) {
    std::vector<std::size_t> cols;
    for (const auto& c : tile.cells) {
      auto it = index.find({c.x + dx, c.y + dy});
      if (it == index.end()) return;
      cols.push_back(it->second);
    }
    placements.push_back({tile.id, dx, dy, 1});
    rows.push_back(std::move(cols));
  };

  std::vector<std::pair<const Tile*, Cell>> candidates;
  Bounds b = r.bounds();
  for (const auto& tile : ts.tiles) {
    Bounds tb = tile.cells.bounds();
    for (std::int64_t dx = b.min_x; dx + tb.max_x <= b.max_x; ++dx)
      for (std::int64_t dy = b.min_y; dy + tb.max_y <= b.max_y; ++dy) candidates.push_back({&tile, {dx, dy}});
  }
  if (limits.seed) {
    std::mt19937_64 rng(*limits.seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  if (limits.hint != nullptr) {
    auto in_hint = [&](const std::pair<const Tile*, Cell>& cand) {
      return std::any_of(limits.hint->placements.begin(), limits.hint->placements.end(), [&](const Placement& p) {
        return p.tile == cand.first->id && p.dx == cand.second.x && p.dy == cand.second.y;
      });
    };
    std::stable_partition(candidates.begin(), candidates.end(), in_hint);
  }
  for (const auto& [tile, at] : candidates) try_add(*tile, at.x, at.y);

  Dlx dlx(index.size(), rows);
  std::vector<std::size_t> chosen;
  out.status = dlx.search(limits.max_nodes, chosen, out.nodes);
  if (out.status == CoverStatus::found) {
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t row : chosen) base.placements.push_back(placements[row]);
    if (!verify_partition(base, r)) throw std::logic_error("exact cover produced an invalid partition");
    out.tiling = std::move(base);
  }
  return out;
}

}  // namespace ribbon
