#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "euclid/machine.hpp"

namespace fs = std::filesystem;
using euclid::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// Working directory holding copies of the sample scripts; restored on exit.
class Sandbox {
 public:
  Sandbox() : old_(fs::current_path()) {
    dir_ = fs::temp_directory_path() / ("euclid_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    for (const auto& e : fs::directory_iterator(EUCLID_SCRIPTS_DIR)) {
      fs::copy_file(e.path(), dir_ / e.path().filename(), fs::copy_options::overwrite_existing);
    }
    fs::current_path(dir_);
  }
  ~Sandbox() {
    fs::current_path(old_);
    fs::remove_all(dir_);
  }
  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  fs::path old_;
  fs::path dir_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("help examples run") {
  Sandbox box;
  for (const auto& example : euclid::cli::help_examples()) {
    const Result r = call(split(example));
    CHECK_MESSAGE(r.code == 0, example << "\n" << r.err);
    CHECK_MESSAGE(!r.out.empty(), example);
  }
  CHECK(fs::exists(box.path("golden_section.svg")));
}

TEST_CASE("help and usage errors") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"pi-table", "--rounds", "99"}).code == 2);
  CHECK(call({"pi-table", "--rounds", "x"}).code == 2);
  CHECK(call({"cf"}).code == 2);
  CHECK(call({"lantern", "--R", "1", "--H", "1", "--n", "4", "--m", "2", "--m-power", "2"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  Sandbox box;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"pi-table", "--rounds", "6"},
           {"pi-table", "--rounds", "6", "--backend", "interval"},
           {"verify", "all", "--samples", "200", "--format", "json"},
           {"construct", "tangents.euc", "--trace", "-", "--format", "json"},
           {"cf", "--value", "pi", "--steps", "6", "--format", "json"},
           {"solve-triangle", "7", "6", "10", "--format", "json"},
           {"lantern", "--R", "1", "--H", "1", "--n", "8", "--sweep", "16"}}) {
    const Result a = call(args);
    const Result b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  call({"construct", "tangents.euc"});
  const std::string first = slurp(box.path("tangents.svg"));
  call({"construct", "tangents.euc"});
  CHECK(first == slurp(box.path("tangents.svg")));
  CHECK(first.rfind("<svg", 0) == 0);
}

TEST_CASE("construct exit statuses") {
  Sandbox box;
  box.write("ok.euc", "point A = (0, 0)\npoint B = (2, 0)\nmacro M = divide_segment(A, B, 2)\n"
                      "assert dist(A, M) == 1\n");
  box.write("bad_assert.euc", "point A = (0, 0)\npoint B = (2, 0)\n"
                              "macro M = divide_segment(A, B, 2)\nassert dist(A, M) == 1.1\n");
  box.write("bad_parse.euc", "point A = (0, 0\n");
  box.write("bad_triangle.euc", "macro A, B, C = triangle_from_sides(1, 1, 3)\n");
  box.write("bad_name.euc", "line l = line(A, B)\n");

  CHECK(call({"construct", "ok.euc"}).code == 0);
  const Result a = call({"construct", "bad_assert.euc"});
  CHECK(a.code == 1);
  CHECK(a.err.find("line 4") != std::string::npos);
  const Result p = call({"construct", "bad_parse.euc"});
  CHECK(p.code == 2);
  CHECK(p.err.find("1:") != std::string::npos);
  CHECK(call({"construct", "bad_triangle.euc"}).code == 2);
  CHECK(call({"construct", "bad_name.euc"}).code == 2);
  CHECK(call({"construct", "missing.euc"}).code == 2);
}

TEST_CASE("trace output replays") {
  Sandbox box;
  const Result r = call({"construct", "golden_section.euc", "--trace", "trace.euc"});
  REQUIRE(r.code == 0);
  const std::string trace = slurp(box.path("trace.euc"));
  CHECK(trace.find("macro") == std::string::npos);
  CHECK(call({"construct", "trace.euc"}).code == 0);
  euclid::RunOptions o;
  o.emit = [](const euclid::Emit&, const euclid::Workspace&) {};
  CHECK(euclid::same_geometry(euclid::run_script(slurp(box.path("golden_section.euc")), o),
                              euclid::run_script(trace, o)));
}

TEST_CASE("numeric commands") {
  const Result pi = call({"pi-table", "--rounds", "5"});
  CHECK(pi.out.rfind("n,a_n,p_n,pi_est,error_vs_reference\n", 0) == 0);
  CHECK(pi.out.find("\n192,") != std::string::npos);

  const Result cf = call({"cf", "--a", "31", "--b", "9"});
  CHECK(cf.code == 0);
  CHECK(cf.out.find("31") != std::string::npos);

  const Result tri = call({"solve-triangle", "3", "4", "5"});
  CHECK(tri.code == 0);
  CHECK(call({"solve-triangle", "1", "1", "3"}).code == 2);

  const Result area = call({"mensurate", "rectangle", "a=3.5", "b=4.6"});
  CHECK(area.code == 0);
  CHECK(area.out.find("16.1") != std::string::npos);
  CHECK(call({"mensurate", "rectangle", "a=3.5"}).code == 2);
  CHECK(call({"mensurate", "solid", "cone", "R=5", "L=4"}).code == 2);

  const Result flat = call({"mensurate", "solid", "cylinder", "R=1", "H=0"});
  CHECK(flat.code == 0);
  CHECK(flat.err.find("degenerate") != std::string::npos);

  const Result macros = call({"macros"});
  CHECK(macros.out.find("golden_section") != std::string::npos);
}

TEST_CASE("verify failure exit status") {
  CHECK(call({"verify", "no-such-suite"}).code == 2);
  CHECK(call({"verify", "angle-sum", "--seed", "7"}).code == 0);
}
