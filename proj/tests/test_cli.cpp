#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "gk/json_io.hpp"

#ifndef GK_CLI_PATH
#error "GK_CLI_PATH must point at the gk executable"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write(const std::string& dir_name, const std::string& file, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / dir_name;
  std::filesystem::create_directories(dir);
  std::ofstream(dir / file) << body;
  return dir / file;
}

}  // namespace

TEST_CASE("gk family") {
  const Run pgl = run("family --kind pgl2 --q 243 --emit spectrum");
  CHECK(pgl.code == 0);
  const gk::json j = gk::json::parse(pgl.out);
  CHECK(j == gk::json::parse(R"json({"name":"PGL2(243)","maximal_orders":[3,242,244]})json"));

  const Run alt = run("family --kind alt --n 10 --emit graph");
  CHECK(alt.code == 0);
  CHECK(gk::json::parse(alt.out) == gk::json::parse(R"json({"vertices":[2,3,5,7],"edges":[[2,3],[2,5],[3,5],[3,7]]})json"));

  CHECK(run("family --kind psl2 --q 6").code == 2);
  CHECK(run("family --kind alt --n 500").code == 2);
  CHECK(run("family --kind alt").code == 2);
  CHECK(run("family --kind gl3 --n 4").code == 2);

  const Run report = run("family --kind psl2 --q 7");
  CHECK(report.code == 0);
  CHECK(gk::json::parse(report.out)["s"] == 3);
}

TEST_CASE("emitted JSON round-trips byte for byte") {
  for (const std::string emit : {"spectrum", "graph"}) {
    const Run first = run("family --kind sym --n 12 --emit " + emit);
    REQUIRE(first.code == 0);
    const auto path = write("gk_test_cli_roundtrip", emit + ".json", first.out);
    const std::string again = emit == "spectrum" ? run("family --kind external --path " + path.string() + " --emit spectrum").out
                                                 : gk::dump(gk::graph_to_json(gk::graph_from_json(gk::read_json_file(path))));
    CHECK(again == first.out);
  }
  const Run report = run("family --kind pgl2 --q 243");
  CHECK(gk::dump(gk::json::parse(report.out)) == report.out);
}

TEST_CASE("gk analyze and srg-classify") {
  const auto psl = write("gk_test_cli_analyze", "psl27.json", R"json({"name":"PSL2(7)","maximal_orders":[1,2,3,4,7]})json");
  const Run a = run("analyze " + psl.string());
  CHECK(a.code == 0);
  const gk::json r = gk::json::parse(a.out);
  CHECK(r["s"] == 3);
  CHECK(r["tau_union_of_cliques"] == true);
  CHECK(r["report_version"] == 1);

  const auto octa = write("gk_test_cli_analyze", "octa.json",
                          R"json({"vertices":[1,2,3,4,5,6],"edges":[[1,3],[1,4],[1,5],[1,6],[2,3],[2,4],[2,5],[2,6],[3,5],[3,6],[4,5],[4,6]]})json");
  const Run o = run("analyze " + octa.string());
  CHECK(o.code == 0);
  CHECK(gk::json::parse(o.out)["srg"]["verdict"] == "complete_multipartite_parts_of_two");
  const Run s = run("srg-classify " + octa.string());
  CHECK(s.code == 0);
  CHECK(gk::json::parse(s.out)["verdict"] == "complete_multipartite_parts_of_two");

  const auto bad = write("gk_test_cli_analyze", "bad.json", "{\"vertices\": [1, 2");
  CHECK(run("analyze " + bad.string()).code == 2);
  CHECK(run("analyze /nonexistent.json").code == 2);
  const auto neither = write("gk_test_cli_analyze", "neither.json", R"json({"name":"x"})json");
  CHECK(run("analyze " + neither.string()).code == 2);
}

TEST_CASE("gk verify-corpus") {
  CHECK(run("verify-corpus --builtin alt:5..30,psl2:..100,external --jobs 3").code == 0);
  const auto bad = write("gk_test_cli_corpus", "bad.json", R"json({"name":"bad","maximal_orders":[2,15,35]})json");
  const Run fail = run("verify-corpus " + bad.parent_path().string());
  CHECK(fail.code == 1);
  CHECK(gk::json::parse(fail.out)["failures"][0]["witness"] == gk::json({3, 5, 7}));

  const auto empty = std::filesystem::temp_directory_path() / "gk_test_cli_corpus_empty";
  std::filesystem::remove_all(empty);
  std::filesystem::create_directories(empty);
  CHECK(run("verify-corpus " + empty.string()).code == 2);
  CHECK(run("verify-corpus --builtin nope:3").code == 2);
  CHECK(run("verify-corpus --builtin alt:5 --check bogus").code == 2);
  CHECK(run("verify-corpus").code == 2);
}

TEST_CASE("gk realizable-multipartite") {
  const Run three = run("realizable-multipartite 3,3,3");
  CHECK(three.code == 0);
  CHECK(gk::json::parse(three.out)["verdict"] == "not_realizable");
  const Run two = run("realizable-multipartite 2,2,2");
  CHECK(two.code == 0);
  CHECK(gk::json::parse(two.out)["verdict"] == "realizable_solvable");
  const Run open = run("realizable-multipartite 3,2,2");
  CHECK(open.code == 3);
  CHECK(gk::json::parse(open.out)["verdict"] == "open");
  CHECK(run("realizable-multipartite 3,x").code == 2);
  CHECK(run("realizable-multipartite 0,2").code == 2);
}

TEST_CASE("GK_DATA_DIR overrides the bundled spectra") {
  const auto p = write("gk_test_cli_datadir", "bad.json", R"json({"name":"bad","maximal_orders":[2,15,35]})json");
  const std::string env = "GK_DATA_DIR=" + p.parent_path().string() + " ";
  const std::string cmd = env + GK_CLI_PATH + " verify-corpus --builtin external >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
