#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "golden.hpp"

using namespace planelayers;

namespace {

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("plane-layers-golden-" + std::to_string(::getpid()) + "-" + name))
      .string();
}

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

}  // namespace

TEST_SUITE("golden") {
  TEST_CASE("builds reproduce the stored outputs") {
    for (const golden::Entry& e : golden::manifest()) {
      CAPTURE(e.name);
      const std::string json = tmp_path(e.name + ".json");
      const std::string svg = tmp_path(e.name + ".svg");
      REQUIRE(run_cli({"build", e.points_path(), "--mode", e.mode, "--k", std::to_string(e.k), "--out", json}) == 0);
      std::vector<std::string> render{"render", e.points_path(), json, "--out", svg};
      if (e.mode == "distributed") render.push_back("--grid");
      REQUIRE(run_cli(render) == 0);
      CHECK(read_text_file(json) == read_text_file(e.json_path()));
      CHECK(read_text_file(svg) == read_text_file(e.svg_path()));
      CHECK(run_cli({"verify", e.points_path(), json, "--out", tmp_path("report.json")}) == 0);
      std::filesystem::remove(json);
      std::filesystem::remove(svg);
    }
    std::filesystem::remove(tmp_path("report.json"));
  }

  TEST_CASE("stored outputs pass verification") {
    for (const golden::Entry& e : golden::manifest()) {
      CAPTURE(e.name);
      const PointSet ps = read_point_file(e.points_path());
      const LayerFile file = parse_layer_file(read_text_file(e.json_path()));
      CHECK(file.mode == e.mode);
      CHECK(golden::verify_file(file, ps).ok());
      CHECK(golden::oracle_valid(file, ps));
    }
  }
}

TEST_SUITE("mutation") {
  TEST_CASE("single-edge mutations are caught") {
    for (const golden::Entry& e : golden::manifest()) {
      CAPTURE(e.name);
      const PointSet ps = read_point_file(e.points_path());
      const LayerFile file = parse_layer_file(read_text_file(e.json_path()));
      const golden::MutationStats s = golden::mutate(file, ps, 100, 1);
      MESSAGE(e.name << ": " << s.tripped << "/" << s.trials << " tripped, " << s.equivalent << " equivalent");
      CHECK(s.disagreements == 0);
      CHECK(s.tripped + s.equivalent == s.trials);
    }
  }
}
