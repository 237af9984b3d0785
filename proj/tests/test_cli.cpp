#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  fs::path out = fs::temp_directory_path() / "reesgraph_cli_out.txt";
  std::string cmd = std::string(REESGRAPH_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

const char* kExample6x8 =
    "matrix 6 8\n"
    "0 x 0 0 x x x x\n"
    "x 0 x x 0 x x 0\n"
    "0 x 0 x x 0 0 x\n"
    "0 x 0 x x 0 0 x\n"
    "x 0 x x x x x x\n"
    "x x x x x x x x\n";

}  // namespace

TEST_CASE("analyze reports the disconnected example") {
  fs::path inst = write_file("inst_example.txt", std::string("group cyclic 1\n") + kExample6x8);
  RunResult r = run_cli("analyze " + inst.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"diameter\": \"inf\"") != std::string::npos);
  CHECK(r.output.find("\"connected\": false") != std::string::npos);

  // Byte-stable across runs.
  RunResult again = run_cli("analyze " + inst.string());
  CHECK(again.output == r.output);
}

TEST_CASE("analyze with oracle cross-check") {
  fs::path inst = write_file("inst_banded.txt",
                             "group cyclic 2\n"
                             "matrix 3 3\n"
                             "0 0 x\n"
                             "x 0 0\n"
                             "0 x 0\n");
  RunResult r = run_cli("analyze --oracle " + inst.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"diameter\": 2") != std::string::npos);
  CHECK(r.output.find("oracle cross-check passed") != std::string::npos);
}

TEST_CASE("analyze writes DOT exports") {
  fs::path inst = write_file("inst_dot.txt",
                             "group cyclic 2\n"
                             "matrix 2 2\n"
                             "0 x\n"
                             "x 0\n");
  fs::path dot = fs::temp_directory_path() / "reesgraph_graphs";
  RunResult r = run_cli("analyze --dot " + dot.string() + " " + inst.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dot.string() + ".commuting.dot"));
  CHECK(fs::exists(dot.string() + ".simplified.dot"));
}

TEST_CASE("zero-free and irregular matrices exit with code 3") {
  fs::path zero_free = write_file("inst_zero_free.txt",
                                  "group cyclic 2\n"
                                  "matrix 2 2\n"
                                  "x x\n"
                                  "x x\n");
  RunResult r = run_cli("analyze " + zero_free.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("completely simple") != std::string::npos);

  fs::path irregular = write_file("inst_irregular.txt",
                                  "group cyclic 2\n"
                                  "matrix 2 2\n"
                                  "0 0\n"
                                  "0 0\n");
  CHECK(run_cli("analyze " + irregular.string()).exit_code == 3);
}

TEST_CASE("parse failures exit with code 2") {
  fs::path bad = write_file("inst_bad.txt", "group cyclic 2\nmatrix 1 2\n0 y\n");
  CHECK(run_cli("analyze " + bad.string()).exit_code == 2);
  CHECK(run_cli("analyze /nonexistent/file").exit_code == 2);
  CHECK(run_cli("analyze --bogus-flag whatever").exit_code == 2);
}

TEST_CASE("oracle guard exits with code 4") {
  std::ostringstream big;
  big << "group cyclic 6\nmatrix 19 19\n";
  for (int r = 0; r < 19; ++r) {
    for (int c = 0; c < 19; ++c) big << ((c == (r + 1) % 19) ? "0" : "x") << (c + 1 < 19 ? " " : "");
    big << "\n";
  }
  fs::path inst = write_file("inst_big.txt", big.str());
  RunResult r = run_cli("analyze --oracle " + inst.string());
  CHECK(r.exit_code == 4);
}

TEST_CASE("closure trace of the worked example") {
  fs::path inst = write_file("inst_closure.txt", std::string("group cyclic 1\n") + kExample6x8);
  RunResult r = run_cli("closure " + inst.string() + " --start 4 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("z(6,4) = 3") != std::string::npos);
  CHECK(r.output.find("Q0: cols {6} rows {4}") != std::string::npos);
  CHECK(r.output.find("Q3: cols {1,3,4,6,7} rows {1,3,4}") != std::string::npos);

  RunResult r2 = run_cli("closure " + inst.string() + " --start 2 2");
  CHECK(r2.output.find("z(2,2) = 1") != std::string::npos);

  // A star start cell is an error.
  RunResult star = run_cli("closure " + inst.string() + " --start 6 1");
  CHECK(star.exit_code == 3);
}

TEST_CASE("generate prints family matrices that re-parse identically") {
  RunResult banded = run_cli("generate banded 3");
  CHECK(banded.exit_code == 0);
  CHECK(banded.output ==
        "matrix 4 4\n"
        "0 0 x x\n"
        "x 0 0 x\n"
        "x x 0 0\n"
        "0 x x 0\n");

  RunResult clique = run_cli("generate clique 5");
  CHECK(clique.exit_code == 0);
  CHECK(clique.output.find("matrix 2 6") != std::string::npos);

  RunResult rnd = run_cli("generate random 3 4 0.4 --seed 9");
  CHECK(rnd.exit_code == 0);
  CHECK(rnd.output == run_cli("generate random 3 4 0.4 --seed 9").output);

  CHECK(run_cli("generate banana 3").exit_code == 2);
  CHECK(run_cli("generate banded 0").exit_code == 2);
}

TEST_CASE("fuzz command is reproducible and green") {
  RunResult a = run_cli("fuzz --count 25 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("25 passed, 0 failed") != std::string::npos);
  RunResult b = run_cli("fuzz --count 25 --seed 5");
  CHECK(b.output == a.output);

  // Bounds beyond the oracle guard are rejected.
  CHECK(run_cli("fuzz --count 1 --max-rows 100 --max-cols 100 --max-order 10").exit_code == 4);
}
