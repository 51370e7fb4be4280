#include "ribbon/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ribbon {

namespace {

Json cells_to_json(const Region& r) {
  Json cells = Json::array();
  for (const auto& c : r) cells.push_back({c.x, c.y});
  return cells;
}

Region cells_from_json(const Json& cells) {
  if (!cells.is_array()) throw std::invalid_argument("\"cells\" must be an array");
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw std::invalid_argument("each cell must be an [x, y] integer pair");
    out.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
  }
  return Region(std::move(out));
}

}  // namespace

Json region_to_json(const Region& r) { return {{"cells", cells_to_json(r)}}; }

Region region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells")) throw std::invalid_argument("region JSON needs a \"cells\" array");
  return cells_from_json(j.at("cells"));
}

std::string region_to_ascii(const Region& r) {
  if (r.empty()) return "";
  Bounds b = r.bounds();
  std::string out;
  out.reserve(static_cast<std::size_t>((b.width() + 1) * b.height()));
  for (std::int64_t y = b.max_y; y >= b.min_y; --y) {
    for (std::int64_t x = b.min_x; x <= b.max_x; ++x) out += r.contains({x, y}) ? '#' : '.';
    if (y > b.min_y) out += '\n';
  }
  return out;
}

Region region_from_ascii(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  std::vector<Cell> cells;
  const auto height = static_cast<std::int64_t>(lines.size());
  for (std::size_t row = 0; row < lines.size(); ++row) {
    for (std::size_t col = 0; col < lines[row].size(); ++col) {
      char ch = lines[row][col];
      if (ch == '#') {
        cells.push_back({static_cast<std::int64_t>(col), height - 1 - static_cast<std::int64_t>(row)});
      } else if (ch != '.') {
        throw ParseError(std::string("unexpected character '") + ch + "' in grid", row + 1, col + 1);
      }
    }
  }
  return Region(std::move(cells)).normalized();
}

Region parse_region(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("region JSON: ") + e.what());
    }
    return region_from_json(j);
  }
  return region_from_ascii(text);
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return v;
  }
  throw std::invalid_argument("expected an integer");
}

Json tiling_to_json(const SignedTiling& t) {
  Json tiles = Json::array();
  for (const auto& tile : t.catalog) tiles.push_back({{"id", tile.id}, {"cells", cells_to_json(tile.cells)}});
  Json placements = Json::array();
  for (const auto& p : t.placements)
    placements.push_back({{"tile", p.tile}, {"dx", p.dx}, {"dy", p.dy}, {"w", integer_to_json(p.weight)}});
  return {{"tileset", t.tileset}, {"tiles", tiles}, {"placements", placements}};
}

SignedTiling tiling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("placements")) throw std::invalid_argument("tiling JSON needs \"placements\"");
  SignedTiling t;
  if (j.contains("tileset")) t.tileset = j.at("tileset").get<std::string>();
  if (j.contains("tiles")) {
    for (const auto& tile : j.at("tiles"))
      t.catalog.push_back({tile.at("id").get<std::string>(), cells_from_json(tile.at("cells")).normalized()});
  } else if (!t.tileset.empty()) {
    t.catalog = tileset_by_name(t.tileset).tiles;
  } else {
    throw std::invalid_argument("tiling JSON needs \"tiles\" or a library \"tileset\"");
  }
  for (const auto& p : j.at("placements")) {
    Placement pl;
    pl.tile = p.at("tile").get<std::string>();
    pl.dx = p.value("dx", std::int64_t{0});
    pl.dy = p.value("dy", std::int64_t{0});
    pl.weight = p.contains("w") ? integer_from_json(p.at("w")) : Integer(1);
    t.tile(pl.tile);  // throws on an unknown id
    t.placements.push_back(std::move(pl));
  }
  return t;
}

Json certificate_to_json(const ReductionCertificate& c) {
  Json basis = Json::array();
  for (const auto& g : c.basis) basis.push_back(g.to_string());
  Json quotients = Json::array();
  for (const auto& q : c.quotients) quotients.push_back(q.to_string());
  return {{"input", c.input.to_string()},
          {"basis", basis},
          {"quotients", quotients},
          {"normal_form", c.normal_form.to_string()}};
}

ReductionCertificate certificate_from_json(const Json& j) {
  ReductionCertificate c;
  c.input = Polynomial::parse(j.at("input").get<std::string>());
  for (const auto& g : j.at("basis")) c.basis.push_back(Polynomial::parse(g.get<std::string>()));
  for (const auto& q : j.at("quotients")) c.quotients.push_back(Polynomial::parse(q.get<std::string>()));
  c.normal_form = Polynomial::parse(j.at("normal_form").get<std::string>());
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace ribbon
