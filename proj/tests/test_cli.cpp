#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "ribbon/io.hpp"

#ifndef RIBBON_CLI_PATH
#error "RIBBON_CLI_PATH must name the ribbon binary"
#endif

using namespace ribbon;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(RIBBON_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("ribbon_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("decide exit codes and verdicts") {
  Run no = run("decide --tileset T5 --rect 3 4");
  CHECK(no.code == 1);
  CHECK(Json::parse(no.out)["verdict"] == "No");

  Run yes = run("decide --tileset T5 --rect 5 3");
  CHECK(yes.code == 0);
  CHECK(Json::parse(yes.out)["verdict"] == "Yes");

  CHECK(run("decide --tileset Q5 --rect 3 4").code == 2);
  CHECK(run("decide --tileset T5 --rect 0 4").code == 2);
  CHECK(run("decide --tileset T5").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("basis and rect subcommands") {
  Run b = run("basis -n 7 --verify");
  CHECK(b.code == 0);
  Json j = Json::parse(b.out);
  CHECK(j["is_groebner"] == true);
  CHECK(j["basis"].size() == 3);
  CHECK(j["basis"][2] == "x*y-1");

  Run t = run("basis -n 5 --tilde");
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["contains_one"] == true);

  Run r = run("rect 4 6 -n 5");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["side_divisible"] == false);
  CHECK(run("rect 10 3 -n 5").code == 0);
}

TEST_CASE("reduce prints a certificate") {
  Run r = run("reduce --poly 'x^2*y^2' --basis 'x*y-1'");
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(verify_certificate(certificate_from_json(j)));
  CHECK(certificate_from_json(j).normal_form == Polynomial(1));
  CHECK(run("reduce --poly 'x^2*y^2-1' --basis 'x*y-1'").code == 0);
  CHECK(run("reduce --poly 'x^4+x^3+x^2+x+1' -n 5 --mode d").code == 0);
  CHECK(run("reduce --poly 'x+' --basis 'x*y-1'").code == 2);
}

TEST_CASE("certificates round trip through files") {
  fs::path dir = scratch();
  std::string tiling = (dir / "t.json").string();
  std::string svg = (dir / "t.svg").string();

  CHECK(run("construct 3n3n1 -n 5 --out " + tiling).code == 0);
  CHECK(run("verify --tiling " + tiling + " --rect 15 16 --partition").code == 0);
  CHECK(run("verify --tiling " + tiling + " --rect 15 17").code == 1);

  Run rendered = run("render --tiling " + tiling + " --svg " + svg);
  CHECK(rendered.code == 0);
  REQUIRE(fs::exists(svg));
  std::string text = read_file(svg);
  CHECK(text.find("<svg") != std::string::npos);

  std::string signed_t = (dir / "s.json").string();
  CHECK(run("decide --tileset T7 --rect 7 2 --out " + signed_t).code == 0);
  CHECK(run("verify --tiling " + signed_t + " --rect 7 2").code == 0);

  std::string region = (dir / "r.txt").string();
  write_file(region, "#####\n");
  Run ascii = run("decide --tileset T5 --region " + region);
  CHECK(ascii.code == 0);

  fs::remove_all(dir);
}

TEST_CASE("invariant and barnes subcommands") {
  Run rep = run("invariant --replication 5 4");
  CHECK(rep.code == 1);
  CHECK(Json::parse(rep.out)["conclusion"] == "impossible");
  Run b = run("barnes -n 9 --checks");
  CHECK(b.code == 0);
}
