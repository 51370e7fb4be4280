// ribbon: signed tileability by ribbon L n-ominoes from the command line.
// JSON on stdout, diagnostics on stderr. Exit 0 = success / Yes, 1 = negative verdict,
// 2 = usage error or inconclusive.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "ribbon/barnes.hpp"
#include "ribbon/constructions.hpp"
#include "ribbon/decide.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/io.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/render.hpp"

using namespace ribbon;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct RegionArgs {
  std::string file;
  std::vector<std::int64_t> rect;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--region", file, "region file (JSON or ASCII grid)");
    auto* r = cmd->add_option("--rect", rect, "rectangle: height p, base q")->expected(2);
    f->excludes(r);
  }
  bool given() const { return !file.empty() || !rect.empty(); }
  Region load() const {
    if (!rect.empty()) {
      if (rect[0] < 1 || rect[1] < 1) throw std::invalid_argument("rectangle sides must be positive");
      return Region::rectangle(rect[0], rect[1]);
    }
    if (file.empty()) throw std::invalid_argument("give --region FILE or --rect P Q");
    return parse_region(read_file(file));
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void maybe_write_tiling(const std::string& out, const SignedTiling& t) {
  if (!out.empty()) write_file(out, tiling_to_json(t).dump(2) + "\n");
}

SignedTiling load_tiling(const std::string& file) { return tiling_from_json(Json::parse(read_file(file))); }

std::vector<Polynomial> parse_poly_list(const std::string& text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back(Polynomial::parse(piece));
    start = end + 1;
  }
  return out;
}

Json poly_list_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed tilings by ribbon L n-ominoes"};
  app.require_subcommand(1);
  int code = kOk;

  // decide
  auto* decide = app.add_subcommand("decide", "decide signed tileability");
  std::string ts_name = "T5";
  std::size_t max_shift = 4;
  RegionArgs decide_region;
  std::string decide_out;
  decide->add_option("--tileset", ts_name, "T<n> or TT<n>")->capture_default_str();
  decide->add_option("--max-shift", max_shift, "largest N tried for (xy)^N f_R")->capture_default_str();
  decide->add_option("--out", decide_out, "write the tiling certificate here");
  decide_region.attach(decide);
  decide->callback([&] {
    Region r = decide_region.load();
    Decision d = signed_tileable(r, tileset_by_name(ts_name), max_shift);
    emit(decision_to_json(d));
    if (d.tiling) maybe_write_tiling(decide_out, *d.tiling);
    code = d.verdict == Verdict::yes ? kOk : d.verdict == Verdict::no ? kNegative : kError;
  });

  // rect: remainder analysis and the divisibility criterion
  auto* rect = app.add_subcommand("rect", "rectangle remainder analysis");
  std::int64_t rp = 0, rq = 0;
  int rn = 5;
  rect->add_option("p", rp)->required();
  rect->add_option("q", rq)->required();
  rect->add_option("-n", rn)->capture_default_str();
  rect->callback([&] {
    RemainderAnalysis a = rect_remainder(rp, rq, rn);
    Json j = remainder_to_json(a);
    j["side_divisible"] = rect_side_divisible(rp, rq, rn);
    emit(j);
    code = a.divisible ? kOk : kNegative;
  });

  // basis
  auto* basis = app.add_subcommand("basis", "the explicit basis B1, B2, B3");
  int bn = 5;
  bool b_verify = false, b_complete = false, b_tilde = false;
  basis->add_option("-n", bn)->capture_default_str();
  basis->add_flag("--verify", b_verify, "run the Groebner criterion");
  basis->add_flag("--complete", b_complete, "complete the tile generators and compare ideals");
  basis->add_flag("--tilde", b_tilde, "use the tile set with the 2x2 square");
  basis->callback([&] {
    auto b = tn_basis(bn);
    std::vector<Polynomial> bv(b.begin(), b.end());
    Json j{{"n", bn}, {"basis", poly_list_json(bv)}};
    bool good = true;
    if (b_verify) {
      GroebnerReport rep = is_groebner(bv);
      j["is_groebner"] = rep.is_groebner;
      j["pairs_checked"] = rep.pairs_checked;
      good = good && rep.is_groebner;
    }
    if (b_complete || b_tilde) {
      TileSet ts = b_tilde ? make_tilde_tn(bn) : make_tn(bn);
      auto gens = ts.generators();
      Completion c = complete(gens);
      j["tileset"] = ts.name;
      j["completion_status"] = c.status == CompletionStatus::complete ? "complete" : "incomplete";
      j["completed_basis"] = poly_list_json(c.basis);
      j["pairs_processed"] = c.pairs_processed;
      bool contains_one = std::any_of(c.basis.begin(), c.basis.end(),
                                      [](const Polynomial& p) { return p == Polynomial(1); });
      j["contains_one"] = contains_one;
      if (!b_tilde) {
        bool fwd = std::all_of(bv.begin(), bv.end(), [&](const Polynomial& p) {
          return e_reduce(p, c.basis).normal_form.is_zero();
        });
        bool back = std::all_of(c.basis.begin(), c.basis.end(), [&](const Polynomial& p) {
          return e_reduce(p, bv).normal_form.is_zero();
        });
        j["same_ideal"] = fwd && back;
        good = good && fwd && back;
      } else {
        good = good && contains_one;
      }
      good = good && c.status == CompletionStatus::complete;
    }
    emit(j);
    code = good ? kOk : kNegative;
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reduce a polynomial and print the certificate");
  std::string red_poly, red_basis, red_mode = "e";
  int red_n = 0;
  reduce->add_option("--poly", red_poly, "polynomial, e.g. x^2*y^2")->required();
  auto* rb = reduce->add_option("--basis", red_basis, "semicolon-separated polynomials");
  auto* rbn = reduce->add_option("-n", red_n, "use B1, B2, B3 for this n");
  rb->excludes(rbn);
  reduce->add_option("--mode", red_mode, "d or e")->check(CLI::IsMember({"d", "e"}))->capture_default_str();
  reduce->callback([&] {
    Polynomial f = Polynomial::parse(red_poly);
    std::vector<Polynomial> g;
    if (red_n != 0) {
      auto b = tn_basis(red_n);
      g.assign(b.begin(), b.end());
    } else {
      g = parse_poly_list(red_basis);
    }
    if (g.empty()) throw std::invalid_argument("give --basis or -n");
    ReductionCertificate c = red_mode == "d" ? d_reduce(f, g) : e_reduce(f, g);
    Json j = certificate_to_json(c);
    j["verified"] = verify_certificate(c);
    emit(j);
    code = c.normal_form.is_zero() ? kOk : kNegative;
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  std::string or_ts = "T5", or_out;
  std::int64_t or_margin = 2;
  std::uint64_t or_nodes = 50'000'000;
  std::optional<std::uint64_t> or_seed;
  std::string or_hint;
  RegionArgs or_region_signed, or_region_cover;
  auto* osigned = oracle->add_subcommand("signed", "integer-weight search by Hermite elimination");
  auto* ocover = oracle->add_subcommand("cover", "regular tiling by exact cover");
  for (auto* sub : {osigned, ocover}) {
    sub->add_option("--tileset", or_ts)->capture_default_str();
    sub->add_option("--out", or_out, "write the tiling here");
  }
  or_region_signed.attach(osigned);
  or_region_cover.attach(ocover);
  osigned->add_option("--margin", or_margin)->capture_default_str();
  ocover->add_option("--max-nodes", or_nodes)->capture_default_str();
  ocover->add_option("--seed", or_seed, "shuffle placement order");
  ocover->add_option("--hint", or_hint, "tiling file whose placements are tried first");
  osigned->callback([&] {
    Region r = or_region_signed.load();
    auto t = signed_search(r, tileset_by_name(or_ts), or_margin);
    Json j{{"margin", or_margin}, {"found", t.has_value()}};
    if (t) {
      j["tiling"] = tiling_to_json(*t);
      j["verified"] = verify_signed(*t, r);
      maybe_write_tiling(or_out, *t);
    } else {
      j["note"] = "none within margin";
    }
    emit(j);
    code = t ? kOk : kNegative;
  });
  ocover->callback([&] {
    Region r = or_region_cover.load();
    CoverLimits lim;
    lim.max_nodes = or_nodes;
    lim.seed = or_seed;
    std::optional<SignedTiling> hint;
    if (!or_hint.empty()) {
      hint = load_tiling(or_hint);
      lim.hint = &*hint;
    }
    CoverResult res = exact_cover(r, tileset_by_name(or_ts), lim);
    std::string status = res.status == CoverStatus::found ? "found"
                         : res.status == CoverStatus::none ? "none"
                                                           : "inconclusive";
    Json j{{"status", status}, {"nodes", res.nodes}};
    if (res.tiling) {
      j["tiling"] = tiling_to_json(*res.tiling);
      maybe_write_tiling(or_out, *res.tiling);
    }
    emit(j);
    code = res.status == CoverStatus::found ? kOk : res.status == CoverStatus::none ? kNegative : kError;
  });

  // construct
  auto* construct = app.add_subcommand("construct", "explicit regular tilings");
  std::string kind;
  int cn = 5;
  std::vector<std::int64_t> crect;
  std::string c_out;
  construct->add_option("kind", kind, "3n3n1 | bricks | odd-even")
      ->required()
      ->check(CLI::IsMember({"3n3n1", "bricks", "odd-even"}));
  construct->add_option("-n", cn)->capture_default_str();
  construct->add_option("--rect", crect, "height and base")->expected(2);
  construct->add_option("--out", c_out, "write the tiling here");
  construct->callback([&] {
    SignedTiling t;
    std::int64_t h = 0, w = 0;
    if (kind == "3n3n1") {
      t = rect_3n_3n1(cn);
      h = 3 * cn;
      w = 3 * cn + 1;
    } else {
      if (crect.size() != 2) throw std::invalid_argument(kind + " needs --rect P Q");
      h = crect[0];
      w = crect[1];
      t = kind == "bricks" ? brick_tilings(h, w, cn) : odd_even_rectangle(h, w, cn);
    }
    emit({{"height", h},
          {"width", w},
          {"tiles", t.placements.size()},
          {"partition", verify_partition(t, Region::rectangle(h, w))},
          {"tiling", tiling_to_json(t)}});
    maybe_write_tiling(c_out, t);
  });

  // invariant
  auto* invariant = app.add_subcommand("invariant", "ribbon encodings and replication verdicts");
  std::string inv_encode;
  std::vector<int> inv_rep, inv_left;
  auto* ie = invariant->add_option("--encode", inv_encode, "region file holding one ribbon tile");
  auto* ir = invariant->add_option("--replication", inv_rep, "n k")->expected(2);
  auto* il = invariant->add_option("--leftover", inv_left, "n r")->expected(2);
  ie->excludes(ir)->excludes(il);
  ir->excludes(il);
  invariant->callback([&] {
    if (!inv_encode.empty()) {
      RibbonEncoding e = encode_ribbon(parse_region(read_file(inv_encode)));
      emit({{"encoding", encoding_string(e)}, {"f1", f1(e)}});
    } else if (!inv_rep.empty()) {
      ReplicationVerdict v = replication_verdict(inv_rep[0], inv_rep[1]);
      emit(replication_to_json(v));
      code = v.conclusion == ReplicationConclusion::impossible ? kNegative : kOk;
    } else if (!inv_left.empty()) {
      Region reg = leftover_region(inv_left[0], inv_left[1]);
      SignedTiling t = leftover_tiling(inv_left[0], inv_left[1]);
      Json enc = Json::array();
      for (const auto& p : t.placements) enc.push_back(p.tile.substr(1));
      emit({{"n", inv_left[0]},
            {"r", inv_left[1]},
            {"area", reg.size()},
            {"region", region_to_json(reg)},
            {"tiles", t.placements.size()},
            {"encodings", enc},
            {"f1_sum", integer_to_json(tiling_f1_sum(t))},
            {"partition", verify_partition(t, reg)},
            {"tiling", tiling_to_json(t)}});
    } else {
      throw std::invalid_argument("give --encode, --replication or --leftover");
    }
  });

  // barnes
  auto* barnes = app.add_subcommand("barnes", "evaluation on the variety of the tile ideal");
  int bar_n = 5;
  bool bar_checks = false;
  RegionArgs bar_region;
  barnes->add_option("-n", bar_n)->capture_default_str();
  barnes->add_flag("--checks", bar_checks, "variety and radical witnesses");
  bar_region.attach(barnes);
  barnes->callback([&] {
    if (bar_checks) {
      BarnesReport rep = variety_and_radical_checks(bar_n);
      emit(barnes_report_to_json(rep));
      code = rep.ok() ? kOk : kNegative;
      return;
    }
    CyclotomicElement v = eval_variety(bar_region.load(), bar_n);
    emit(cyclotomic_to_json(v));
    code = v.is_zero() ? kOk : kNegative;
  });

  // render
  auto* render = app.add_subcommand("render", "draw a tiling or region");
  std::string ren_tiling, ren_region, ren_svg;
  bool ren_ascii = false;
  int ren_cell = 20;
  auto* rt = render->add_option("--tiling", ren_tiling, "tiling JSON");
  auto* rr = render->add_option("--region", ren_region, "region file");
  rt->excludes(rr);
  render->add_flag("--ascii", ren_ascii, "include the ASCII grid in the output");
  render->add_option("--svg", ren_svg, "write SVG here");
  render->add_option("--cell", ren_cell, "SVG cell size in pixels")->capture_default_str();
  render->callback([&] {
    Json j = Json::object();
    if (!ren_tiling.empty()) {
      SignedTiling t = load_tiling(ren_tiling);
      if (ren_ascii || ren_svg.empty()) j["ascii"] = render_ascii(t);
      if (!ren_svg.empty()) {
        write_file(ren_svg, render_svg(t, ren_cell));
        j["svg"] = ren_svg;
      }
    } else if (!ren_region.empty()) {
      Region r = parse_region(read_file(ren_region));
      j["ascii"] = region_to_ascii(r);
      if (!ren_svg.empty()) {
        SignedTiling t{"region", {{"region", r}}, {{"region", 0, 0, 1}}};
        write_file(ren_svg, render_svg(t, ren_cell));
        j["svg"] = ren_svg;
      }
    } else {
      throw std::invalid_argument("give --tiling or --region");
    }
    emit(j);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  std::string ver_tiling, ver_cert;
  bool ver_partition = false;
  RegionArgs ver_region;
  auto* vt = verify->add_option("--tiling", ver_tiling, "tiling JSON");
  auto* vc = verify->add_option("--certificate", ver_cert, "reduction certificate JSON");
  vt->excludes(vc);
  verify->add_flag("--partition", ver_partition, "require a regular tiling");
  ver_region.attach(verify);
  verify->callback([&] {
    bool ok = false;
    Json j = Json::object();
    if (!ver_cert.empty()) {
      ok = verify_certificate(certificate_from_json(Json::parse(read_file(ver_cert))));
      j["kind"] = "certificate";
    } else if (!ver_tiling.empty()) {
      SignedTiling t = load_tiling(ver_tiling);
      Region r = ver_region.load();
      ok = ver_partition ? verify_partition(t, r) : verify_signed(t, r);
      j["kind"] = ver_partition ? "partition" : "signed";
    } else {
      throw std::invalid_argument("give --tiling or --certificate");
    }
    j["valid"] = ok;
    emit(j);
    code = ok ? kOk : kNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}
