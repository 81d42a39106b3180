#include <halving/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  auto* old_in = std::cin.rdbuf(in.rdbuf());
  CliResult r;
  r.code = halving::cli::run(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  std::cin.rdbuf(old_in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "halving-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int k = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++k;
  return k;
}

}  // namespace

TEST_CASE("analyze emits the pinned hexagon report") {
  const CliResult gen = run_cli({"gen", "polygon", "--n", "6"});
  REQUIRE(gen.code == 0);

  const CliResult r = run_cli({"analyze", "-", "--json"}, gen.out);
  REQUIRE(r.code == 0);
  const std::string golden = R"json({
  "n": 6,
  "E": 3,
  "edges": [
    [
      0,
      3
    ],
    [
      1,
      4
    ],
    [
      2,
      5
    ]
  ],
  "degrees": [
    1,
    1,
    1,
    1,
    1,
    1
  ],
  "leaves": 6,
  "components": 3,
  "hull": [
    5,
    0,
    1,
    2,
    3,
    4
  ]
}
)json";
  CHECK(r.out == golden);
}

TEST_CASE("generated points round-trip through the parser") {
  const CliResult gen = run_cli({"gen", "polygon", "--n", "10"});
  REQUIRE(gen.code == 0);
  std::istringstream in(gen.out);
  const halving::PointConfig cfg = halving::read_points(in);
  REQUIRE(cfg.n() == 10);
  std::ostringstream back;
  halving::write_points(back, cfg);
  CHECK(back.str() == gen.out);

  const CliResult brute = run_cli({"analyze", "-", "--json", "--method", "brute"}, gen.out);
  const CliResult sweep = run_cli({"analyze", "-", "--json", "--method", "sweep"}, gen.out);
  CHECK(brute.out == sweep.out);
}

TEST_CASE("gen writes a points file with a certificate sidecar") {
  const auto dir = scratch_dir();
  const auto pts = (dir / "s8.pts").string();
  const CliResult gen = run_cli({"gen", "star", "--n", "8", "-o", pts});
  REQUIRE(gen.code == 0);
  REQUIRE(std::filesystem::exists(pts));
  REQUIRE(std::filesystem::exists(pts + ".cert.json"));

  const CliResult an = run_cli({"analyze", pts, "--json"});
  REQUIRE(an.code == 0);
  const auto j = halving::cli::Json::parse(an.out);
  CHECK(j["E"] == 7);
  CHECK(j["leaves"] == 7);

  const CliResult ver = run_cli({"verify", pts});
  CHECK(ver.code == 0);
  CHECK(ver.out.find("certificate") != std::string::npos);

  const CliResult quiet = run_cli({"gen", "star", "--n", "8", "-o",
                                   (dir / "s8b.pts").string(), "--no-cert"});
  REQUIRE(quiet.code == 0);
  CHECK_FALSE(std::filesystem::exists(dir / "s8b.pts.cert.json"));
}

TEST_CASE("verify distinguishes failure from invalid input") {
  const auto dir = scratch_dir();

  SECTION("clean input passes") {
    const auto pts = (dir / "ok6.pts").string();
    REQUIRE(run_cli({"gen", "polygon", "--n", "6", "-o", pts}).code == 0);
    const CliResult r = run_cli({"verify", pts, "--json"});
    CHECK(r.code == 0);
    const auto j = halving::cli::Json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"].get<int>() > 0);
  }

  SECTION("a tampered certificate fails verification") {
    const auto pts = (dir / "tam6.pts").string();
    REQUIRE(run_cli({"gen", "polygon", "--n", "6", "-o", pts}).code == 0);
    auto j = halving::cli::Json::parse(slurp(pts + ".cert.json"));
    j["expected_edges"] = 4;
    std::ofstream(pts + ".cert.json") << j.dump(2) << "\n";

    const CliResult r = run_cli({"verify", pts, "--json"});
    CHECK(r.code == 1);
    const auto rep = halving::cli::Json::parse(r.out);
    CHECK(rep["failed"] == 1);
  }

  SECTION("odd point counts are invalid input") {
    const CliResult r = run_cli({"verify", "-"}, "3\n0 0\n1 1\n2 0\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
  }

  SECTION("collinear points are invalid input") {
    const CliResult r = run_cli({"verify", "-"}, "4\n0 0\n1 1\n2 2\n3 5\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("collinear") != std::string::npos);
  }

  SECTION("garbage is invalid input") {
    const CliResult r = run_cli({"verify", "-"}, "not a points file\n");
    CHECK(r.code == 2);
  }
}

TEST_CASE("search reports a witness that revalidates") {
  const CliResult r = run_cli({"search", "--n", "4", "--grid", "3", "--exhaustive", "--json"});
  REQUIRE(r.code == 0);
  const auto j = halving::cli::Json::parse(r.out);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["best"] == 3);
  std::istringstream in(j["witness"].get<std::string>());
  const halving::PointConfig w = halving::read_points(in);
  CHECK(halving::underlying_geograph(w).E() == 3);

  const CliResult rnd = run_cli({"search", "--n", "6", "--random", "40", "--seed", "5", "--json"});
  REQUIRE(rnd.code == 0);
  const auto jr = halving::cli::Json::parse(rnd.out);
  std::istringstream rin(jr["witness"].get<std::string>());
  CHECK(halving::underlying_geograph(halving::read_points(rin)).E() ==
        jr["best"].get<int>());
  CHECK(run_cli({"search", "--n", "6", "--random", "40", "--seed", "5", "--json"}).out == rnd.out);
}

TEST_CASE("render output is deterministic svg") {
  const CliResult gen = run_cli({"gen", "polygon", "--n", "6"});
  const CliResult a = run_cli({"render", "-"}, gen.out);
  const CliResult b = run_cli({"render", "-"}, gen.out);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(a.out, "<circle") == 6);
  CHECK(count_occurrences(a.out, "<line") == 3);

  const CliResult path8 = run_cli({"gen", "path", "--n", "8"});
  const CliResult chains = run_cli({"render", "-", "--chains"}, path8.out);
  REQUIRE(chains.code == 0);
  CHECK(count_occurrences(chains.out, "<polyline") == 4);

  // stroke widths fall strictly in chain discovery order
  std::vector<double> widths;
  const std::string key = "<polyline stroke=";
  for (std::size_t at = chains.out.find(key); at != std::string::npos;
       at = chains.out.find(key, at + 1)) {
    const std::size_t w = chains.out.find("stroke-width=\"", at) + 14;
    widths.push_back(std::stod(chains.out.substr(w)));
  }
  REQUIRE(widths.size() == 4);
  for (std::size_t i = 1; i < widths.size(); ++i) CHECK(widths[i] < widths[i - 1]);
}

TEST_CASE("degenerate up directions are adjusted with a notice") {
  const CliResult gen = run_cli({"gen", "polygon", "--n", "6"});
  const CliResult r = run_cli({"chains", "-", "--up", "9,-3", "--json"}, gen.out);
  REQUIRE(r.code == 0);
  CHECK(r.err.find("notice:") != std::string::npos);
  const auto j = halving::cli::Json::parse(r.out);
  CHECK(j["chains"].size() == 3);
}

TEST_CASE("interpolation subcommand lists the counts seen") {
  const auto dir = scratch_dir();
  const auto p6 = (dir / "i6.pts").string();
  const auto s6 = (dir / "i6s.pts").string();
  REQUIRE(run_cli({"gen", "polygon", "--n", "6", "-o", p6, "--no-cert"}).code == 0);
  REQUIRE(run_cli({"gen", "star", "--n", "6", "-o", s6, "--no-cert"}).code == 0);

  const CliResult r = run_cli({"interpolate", p6, s6, "--json"});
  REQUIRE(r.code == 0);
  const auto j = halving::cli::Json::parse(r.out);
  const auto seen = j["counts_seen"].get<std::vector<int>>();
  CHECK(std::find(seen.begin(), seen.end(), 3) != seen.end());
  CHECK(std::find(seen.begin(), seen.end(), 4) != seen.end());
  CHECK(std::find(seen.begin(), seen.end(), 5) != seen.end());
}

TEST_CASE("usage errors exit with the invalid-input code") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"analyze"}).code == 2);
  CHECK(run_cli({"analyze", "/nonexistent/input.pts"}).code == 2);
  CHECK(run_cli({"search", "--n", "4"}).code == 2);
  CHECK(run_cli({"search", "--n", "4", "--exhaustive", "--random", "5"}).code == 2);
  CHECK(run_cli({"chains", "-", "--up", "0,0"}, "2\n0 0\n1 1\n").code == 2);
  CHECK(run_cli({"chains", "-", "--up", "nonsense"}, "2\n0 0\n1 1\n").code == 2);
}
