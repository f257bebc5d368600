// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end checks of the installed command-line tool. The binary path
// arrives via SUBSTREAM_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
  const char* bin = std::getenv("SUBSTREAM_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SUBSTREAM_BIN must point at the CLI");
  return bin;
}

int run(const std::string& args) {
  std::string cmd = binary() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path(name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("run/exact/greedy/curvature succeed on a well-formed instance") {
  TempFile f("cli_path.inst", "graph 4\n1 2 1.0\n2 3 3.0\n3 4 1.0\n");
  CHECK(run("run --input cli_path.inst --algo mcgregor1p") == 0);
  CHECK(run("run --input cli_path.inst --algo zelke --check-level full") == 0);
  CHECK(run("run --input cli_path.inst --algo multipass --mode graph_msm "
            "--eps 0.5") == 0);
  CHECK(run("run --input cli_path.inst --algo dual-zelke") == 0);
  CHECK(run("exact --input cli_path.inst") == 0);
  CHECK(run("greedy --input cli_path.inst") == 0);
  CHECK(run("curvature --input cli_path.inst") == 0);
}

TEST_CASE("usage and parse problems exit with status 2") {
  TempFile f("cli_loop.inst", "graph 4\n2 2 1.0\n");
  CHECK(run("run --input cli_loop.inst --algo mcgregor1p") == 2);
  CHECK(run("run --input cli_missing.inst --algo mcgregor1p") == 2);
  CHECK(run("run --no-such-flag") == 2);
  CHECK(run("frobnicate") == 2);
  TempFile g("cli_ok.inst", "graph 4\n1 2 1.0\n");
  CHECK(run("run --input cli_ok.inst --algo nonsense") == 2);
  CHECK(run("run --input cli_ok.inst --algo hypergraph1p") == 2);  // kind
  CHECK(run("exact --input cli_ok.inst --cap 0") == 2);
}

TEST_CASE("an injected invariant breach exits with status 1") {
  TempFile f("cli_fault.inst", "graph 4\n1 2 1.0\n2 3 3.0\n");
  CHECK(run("run --input cli_fault.inst --algo zelke "
            "--inject-fault bad-pair") == 1);
}

TEST_CASE("gen emits byte-identical files for the same seed") {
  CHECK(run("gen --kind graph --n 8 --m 12 --family modular --seed 7 "
            "--out cli_gen_a.inst") == 0);
  CHECK(run("gen --kind graph --n 8 --m 12 --family modular --seed 7 "
            "--out cli_gen_b.inst") == 0);
  CHECK(run("gen --kind bipartite --n 8 --m 9 --family coverage --seed 3 "
            "--out cli_gen_c.inst") == 0);
  CHECK(slurp("cli_gen_a.inst") == slurp("cli_gen_b.inst"));
  CHECK(run("run --input cli_gen_c.inst --algo matroid1p "
            "--check-level full") == 0);
  std::remove("cli_gen_a.inst");
  std::remove("cli_gen_b.inst");
  std::remove("cli_gen_c.inst");
}

TEST_CASE("reports land where the environment points") {
  TempFile f("cli_rep.inst", "graph 4\n1 2 1.0\n2 3 3.0\n");
  std::string cmd = binary() +
                    " run --input cli_rep.inst --algo mcgregor1p"
                    " --report cli_report.json >/dev/null 2>&1";
  setenv("SUBSTREAM_REPORT_DIR", ".", 1);
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  unsetenv("SUBSTREAM_REPORT_DIR");
  std::string body = slurp("./cli_report.json");
  CHECK(body.find("\"algo\": \"mcgregor1p\"") != std::string::npos);
  std::remove("./cli_report.json");
}
