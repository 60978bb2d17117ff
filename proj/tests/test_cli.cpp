#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "doctest.h"
#include "run_command.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const std::string kKarateFile = std::string("--input '") + EPITHRESH_DATA_DIR + "/karate.edgelist'";

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "epithresh_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("eigen prints JSON with provenance") {
  const auto r = run_cli("eigen --graph house");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["lambda1"].get<double>() == doctest::Approx(2.4812).epsilon(1e-4));
  CHECK(j["provenance"]["command"] == "eigen");
  CHECK(j["provenance"]["graph"] == "house");
}

TEST_CASE("file input matches the built-in graph") {
  const auto a = Json::parse(run_cli("eigen " + kKarateFile).out);
  const auto b = Json::parse(run_cli("eigen --graph karate").out);
  CHECK(a["result"]["lambda1"].get<double>() == doctest::Approx(b["result"]["lambda1"].get<double>()).epsilon(1e-12));
}

TEST_CASE("threshold report") {
  const auto r = run_cli("threshold --graph karate --pb 0.05 --pd 0.4");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["nlds_prediction"] == "die_out");
  CHECK(j["bounds"]["chromatic_number"] == 5);
  const Json linger = Json::parse(run_cli("threshold --graph karate --pb 0.05 --pd 0.2").out);
  CHECK(linger["nlds_prediction"] == "linger");
}

TEST_CASE("centrality CSV has a header row per measure") {
  const auto r = run_cli("centrality --graph house --measure degree --measure betweenness");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("vertex_label,degree,betweenness\nv1,2,0.5\n") != std::string::npos);
  CHECK(r.out.rfind("# epithresh", 0) == 0);
}

TEST_CASE("correlate gives a 5x5 matrix") {
  const auto r = run_cli("correlate --graph karate --out-format json");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.dump().find("spread") != std::string::npos);
}

TEST_CASE("simulate writes one file per death rate") {
  const fs::path out = scratch_dir() / "curve.csv";
  const auto r = run_cli("simulate --graph house --pd 0.4 --pd 0.2 -K 3 -T 5 -o '" + out.string() + "'");
  REQUIRE(r.status == 0);
  CHECK(fs::exists(scratch_dir() / "curve_pd0.4.csv"));
  CHECK(fs::exists(scratch_dir() / "curve_pd0.2.csv"));
  std::ifstream in(scratch_dir() / "curve_pd0.4.csv");
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("day,S_t\n1,1\n") != std::string::npos);
}

TEST_CASE("simulate per-seed columns use vertex labels") {
  const auto r = run_cli("simulate --graph house --pd 0.4 -K 2 -T 3 --per-seed --seed-vertices v1 v4");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("day,S_t,S_t_v1,S_t_v4\n") != std::string::npos);
}

TEST_CASE("several death rates on stdout give a wide table") {
  const auto r = run_cli("simulate --graph house --pd 0.4 --pd 0.2 -K 2 -T 3");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("day,S_t_pd0.4,S_t_pd0.2\n1,1,1\n") != std::string::npos);
  // Per-seed curves for several rates only go to files.
  CHECK(run_cli("simulate --graph house --pd 0.4 --pd 0.2 -K 2 -T 3 --per-seed").status == 2);
}

TEST_CASE("vaccinate outputs") {
  const auto csv = run_cli("vaccinate --graph karate --method batch -k 8 --out-format csv");
  REQUIRE(csv.status == 0);
  CHECK(csv.out.find("step,removed_label,lambda1\n0,,6.72569772763") != std::string::npos);
  const auto j = Json::parse(run_cli("vaccinate --graph karate --method method1 -k 8").out);
  CHECK(j["report"]["final_lambda1"].get<double>() == doctest::Approx(2.62).epsilon(0.01));
  const auto low = Json::parse(run_cli("vaccinate --graph karate --method greedy -k 8 --tie-break lowest").out);
  CHECK(low["report"]["tie_break"] == "lowest");
  CHECK(low["report"]["final_lambda1"].get<double>() == doctest::Approx(2.1701).epsilon(1e-4));
  const auto cmp = Json::parse(run_cli("vaccinate --graph karate --method compare -k 3 --trials 2").out);
  CHECK(cmp.dump().find("greedy") != std::string::npos);
}

TEST_CASE("heatmap DOT") {
  const auto r = run_cli("heatmap --graph house --measure spread");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("graph heatmap {") != std::string::npos);
  CHECK(r.out.find("#ff0000") != std::string::npos);
  CHECK(r.out.find("#0000ff") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("").status != 0);
  CHECK(run_cli("eigen").status == 2);                                     // no graph source
  CHECK(run_cli("eigen --graph bogus").status == 2);                       // bad built-in name
  CHECK(run_cli("threshold --graph karate --pb 2 --pd 0.4").status == 2);  // rate out of range
  CHECK(run_cli("centrality --graph house --measure pagerank").status == 2);
  CHECK(run_cli("vaccinate --graph house -k 5").status == 2);              // k >= n
  CHECK(run_cli("eigen --graph house --tol 0").status == 2);
  CHECK(run_cli("vaccinate --graph house -k 2 --method compare --tie-break lowest").status == 2);
  CHECK(run_cli("eigen --input /nonexistent/file.txt").status != 0);

  const fs::path bad = scratch_dir() / "bad.edgelist";
  std::ofstream(bad) << "1 2\n3\n";
  CHECK(run_cli("eigen --input '" + bad.string() + "'").status == 1);       // malformed data
  CHECK(run_cli("correlate --input '" + bad.string() + "'").status == 1);
  const fs::path split = scratch_dir() / "split.edgelist";
  std::ofstream(split) << "1 2\n3 4\n";
  CHECK(run_cli("correlate --input '" + split.string() + "'").status == 1);  // disconnected
}

TEST_CASE("reruns are byte-identical") {
  for (const char* args : {"eigen --graph karate --eigenvector", "centrality --graph karate --measure all",
                           "simulate --graph karate --pd 0.2 -K 5 -T 20 --seed 9 --per-seed",
                           "vaccinate --graph karate --method greedy -k 8 --seed 3"}) {
    CAPTURE(args);
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
  }
}
