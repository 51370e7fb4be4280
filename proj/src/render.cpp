#include "ribbon/render.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

namespace ribbon {

std::string render_ascii(const SignedTiling& t) {
  auto sums = t.cell_weights();
  if (sums.empty()) return "";
  std::vector<Cell> touched;
  for (const auto& [c, w] : sums) touched.push_back(c);
  Bounds b = Region(touched).bounds();
  std::string out;
  for (std::int64_t y = b.max_y; y >= b.min_y; --y) {
    for (std::int64_t x = b.min_x; x <= b.max_x; ++x) {
      auto it = sums.find({x, y});
      if (it == sums.end()) {
        out += '.';
      } else if (it->second < 0) {
        out += '-';
      } else if (it->second > 9) {
        out += '+';
      } else {
        out += static_cast<char>('0' + it->second.get_si());
      }
    }
    if (y > b.min_y) out += '\n';
  }
  return out;
}

std::vector<std::vector<Cell>> region_outline(const Region& r) {
  using Edge = std::pair<Cell, Cell>;
  std::set<Edge> edges;
  for (const auto& c : r) {
    Cell a{c.x, c.y}, b{c.x + 1, c.y}, d{c.x + 1, c.y + 1}, e{c.x, c.y + 1};
    for (Edge edge : {Edge{a, b}, Edge{b, d}, Edge{d, e}, Edge{e, a}}) {
      auto rev = edges.find({edge.second, edge.first});
      if (rev != edges.end()) {
        edges.erase(rev);
      } else {
        edges.insert(edge);
      }
    }
  }
  std::multimap<Cell, Cell> next;
  for (const auto& [from, to] : edges) next.emplace(from, to);

  std::vector<std::vector<Cell>> loops;
  while (!next.empty()) {
    auto it = next.begin();
    Cell start = it->first;
    std::vector<Cell> loop{start};
    Cell cur = it->second;
    next.erase(it);
    while (!(cur == start)) {
      loop.push_back(cur);
      auto nx = next.find(cur);
      if (nx == next.end()) break;
      cur = nx->second;
      next.erase(nx);
    }
    // Keep only corners.
    std::vector<Cell> corners;
    const std::size_t m = loop.size();
    for (std::size_t i = 0; i < m; ++i) {
      Cell p = loop[(i + m - 1) % m], c = loop[i], q = loop[(i + 1) % m];
      if ((c.x - p.x) * (q.y - c.y) - (c.y - p.y) * (q.x - c.x) != 0) corners.push_back(c);
    }
    loops.push_back(std::move(corners));
  }
  return loops;
}

namespace {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

constexpr std::array<const char*, 10> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                                  "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

}  // namespace

std::string render_svg(const SignedTiling& t, int cell_size) {
  std::vector<Cell> touched;
  for (const auto& p : t.placements)
    for (const auto& c : t.placed_cells(p)) touched.push_back(c);
  std::ostringstream os;
  const int margin = cell_size / 2;
  if (touched.empty()) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * margin << "\" height=\""
       << 2 * margin << "\"></svg>\n";
    return os.str();
  }
  Bounds b = Region(touched).bounds();
  const std::int64_t width = b.width() * cell_size + 2 * margin;
  const std::int64_t height = b.height() * cell_size + 2 * margin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  auto px = [&](std::int64_t x) { return (x - b.min_x) * cell_size + margin; };
  auto py = [&](std::int64_t y) { return (b.max_y + 1 - y) * cell_size + margin; };
  for (const auto& p : t.placements) {
    const char* fill = kPalette[fnv1a(p.tile) % kPalette.size()];
    const char* stroke = p.weight < 0 ? "#d62728" : "#1f77b4";
    for (const auto& loop : region_outline(t.placed_cells(p))) {
      os << "  <polygon points=\"";
      for (std::size_t i = 0; i < loop.size(); ++i) os << (i ? " " : "") << px(loop[i].x) << ',' << py(loop[i].y);
      os << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"" << stroke
         << "\" stroke-width=\"2\"><title>" << p.tile << " (" << p.dx << ',' << p.dy << ") w="
         << p.weight.get_str() << "</title></polygon>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ribbon
