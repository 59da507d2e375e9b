#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "invforge/cli.hpp"

using namespace invforge;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "invforge_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("invariants subcommand") {
  const auto r = run_cli({"invariants", "--n", "3", "--degree", "4", "--coords", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "x0^2*x3^2 - 6*x0*x1*x2*x3 + 4*x1^3*x3 + 4*x0*x2^3 - 3*x1^2*x2^2\n");
  const auto j = run_cli({"invariants", "--n", "3", "--degree", "4", "--format", "json"});
  CHECK(j.out == "{\"ring\":{\"kind\":\"u\",\"n\":3},\"terms\":[{\"c\":\"1\",\"e\":[2,0,2]},{\"c\":\"4\",\"e\":[1,3,0]}]}\n");
  CHECK(run_cli({"invariants", "--n", "5", "--degree", "3"}).out.empty());
}

TEST_CASE("verify subcommand") {
  CHECK(run_cli({"verify", "--n", "2", "--coords", "x", write_file("good.poly", "x0*x2 - x1^2\n")}).code == 0);
  CHECK(run_cli({"verify", "--n", "2", "--coords", "x", write_file("bad.poly", "x1\n")}).code == 1);
  CHECK(run_cli({"verify", "--n", "2", "--coords", "x", write_file("broken.poly", "x1 +\n")}).code == 2);
  CHECK(run_cli({"verify", "--n", "2", (scratch() / "missing.poly").string()}).code == 2);
}

TEST_CASE("mingenset, member and syzygies subcommands") {
  const auto r = run_cli({"mingenset", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "f2 = x0*x2 - x1^2\n");

  const auto dir = (scratch() / "gens4").string();
  const auto g = run_cli({"mingenset", "--n", "4", "--out", dir, "--coords", "u"});
  CHECK(g.code == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "f2.poly"));
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "f3.poly"));

  const auto target = write_file("t4.poly", "# coords: u\n9*u2^4 + 6*t*u2^2*u4 + t^2*u4^2\n");
  const auto m = run_cli({"member", "--n", "4", "--gens", dir, "--target", target});
  CHECK(m.code == 0);
  CHECK(m.out == "f2^2\n");
  const auto miss = run_cli({"member", "--n", "4", "--gens", dir, "--target", write_file("t4b.poly", "x0*u4\n")});
  CHECK(miss.code == 1);

  CHECK(run_cli({"mingenset", "--n", "4", "--degrees", "2,4"}).code == 2);
  CHECK(run_cli({"mingenset", "--n", "7"}).code == 2);

  const auto dir5 = (scratch() / "gens5").string();
  CHECK(run_cli({"mingenset", "--n", "5", "--out", dir5}).code == 0);
  const auto s = run_cli({"syzygies", "--n", "5", "--gens", dir5, "--degrees", "36"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("degree 36 = ", 0) == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 1);
}

TEST_CASE("convert subcommand") {
  const auto u = write_file("u2.poly", "x0*u2\n");
  const auto r = run_cli({"convert", "--n", "2", "--direction", "u2x", u});
  CHECK(r.code == 0);
  CHECK(r.out == "x0*x2 - x1^2\n");
  const auto back = run_cli({"convert", "--n", "2", "--direction", "x2u", write_file("x2.poly", r.out)});
  CHECK(back.code == 0);
  CHECK(back.out == "x0*u2\n");
  CHECK(run_cli({"convert", "--n", "2", "--direction", "u2x", write_file("u2only.poly", "u2\n")}).code == 1);
  CHECK(run_cli({"convert", "--n", "2", "--direction", "x2u", write_file("x1.poly", "x1\n")}).code == 1);
  CHECK(run_cli({"convert", "--n", "2", "--direction", "sideways", u}).code == 2);
}

TEST_CASE("fixtures subcommand") {
  const auto r = run_cli({"fixtures", "--n", "5", "--validate"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f4\tu\tvalidated") != std::string::npos);
  CHECK(r.out.find("f12\tu\ttranscription-suspect") != std::string::npos);
  CHECK(r.out.find("syzygy-1\tgen\tvalidated") != std::string::npos);
  CHECK(run_cli({"fixtures", "--n", "5", "--validate"}).out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"invariants", "--n", "3"}).code == 2);
  CHECK(run_cli({"invariants", "--n", "1", "--degree", "2"}).code == 2);
}
