#include <doctest.h>
#include <httplib.h>

#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "cli_runner.hpp"

using testing::last_line;
using testing::run_cli;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("pascalgamma-cli-" + std::to_string(::getpid()) + "-" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("triangle") {
  auto r = run_cli("triangle --family ordinary --r 1 --rows 7 --format plain");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1 11 41 63 41 11 1");
  CHECK(last_line(run_cli("triangle --family narayana --r 1 --rows 7").out) ==
        "1 21 105 175 105 21 1");
  CHECK(run_cli("triangle --family ordinary --r 0 --rows 1").out == "1\n");
  CHECK(last_line(run_cli("triangle --family exponential --r 1 --rows 7 --format csv").out) ==
        "1,21,120,215,120,21,1");
  r = run_cli("triangle --family ordinary --r 1 --rows 3 --format json");
  CHECK(r.out.find("\"schema_version\": 1") != std::string::npos);
  CHECK(run_cli("triangle --family nonsense --rows 3 2>/dev/null").code == 2);
  CHECK(run_cli("triangle --family ordinary --r x 2>/dev/null").code == 2);
  CHECK(run_cli("triangle --family ordinary --format xml 2>/dev/null").code == 2);
  CHECK(run_cli("triangle 2>/dev/null").code == 2);
}

TEST_CASE("gamma") {
  auto r = run_cli("gamma --builtin eulerian --rows 7 --method all");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1 114 720 272");
  for (const char* m : {"solve", "zeilberger", "alphabeta", "closed", "all"}) {
    r = run_cli(std::string("gamma --builtin exponential --r 2 --rows 7 --method ") + m);
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "1 30 180 120");
  }

  const auto doc = run_cli("triangle --family ordinary --r 1 --rows 7 --format json").out;
  const auto path = write_temp("delannoy.json", doc);
  r = run_cli("gamma --input - --method solve < '" + path.string() + "'");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1 5 6 1");
  r = run_cli("gamma --input '" + path.string() + "' --method all --format csv");
  CHECK(last_line(r.out) == "1,5,6,1");

  const auto bad = write_temp("asym.txt", "1\n1 1\n1 2 1\n1 4 3 1\n");
  r = run_cli("gamma --input '" + bad.string() + "' 2>&1");
  CHECK(r.code == 4);
  CHECK(r.out.find("row 3") != std::string::npos);
  CHECK(run_cli("gamma --builtin eulerian --method closed 2>/dev/null").code == 2);
  fs::remove(path);
  fs::remove(bad);
}

TEST_CASE("revert") {
  auto r = run_cli("revert --family ordinary --r -1 --rows 7");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1 21 105 175 105 21 1");
  CHECK(last_line(run_cli("revert --family ordinary --r 1 --rows 7").out) ==
        "1 -9 -15 -15 -15 -9 1");
}

TEST_CASE("jacobi") {
  auto r = run_cli("jacobi --family reverted --r 1 --y symbolic --depth 5");
  CHECK(r.code == 0);
  CHECK(r.out == "a: -1 - y ×5 ; b: -y ×4\n");
  CHECK(run_cli("jacobi --family narayana-gamma --r 2 --depth 3").out == "a: 1 ×3 ; b: 2*y ×2\n");
  CHECK(run_cli("jacobi --family exponential --r 1 --depth 4").out ==
        "a: 1 + y ×4 ; b: y, 2*y, 3*y\n");
  CHECK(run_cli("jacobi --family reverted --r 1 --y 2 --depth 3").out == "a: -3 ×3 ; b: -2 ×2\n");
  r = run_cli("jacobi --family narayana --r 1 --depth 3 --evaluate 4");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "4: 1 + 10*y + 20*y^2 + 10*y^3 + y^4");
  CHECK(run_cli("jacobi --family narayana --r 1 --depth 2 --evaluate 9 2>/dev/null").code == 5);
  CHECK(run_cli("jacobi --family eulerian --depth 2 2>/dev/null").code == 2);
}

TEST_CASE("transform") {
  auto r = run_cli("transform --kind invert --family ordinary-gamma --r 1 --param=-y --rows 7");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1 11 41 63 41 11 1");
  r = run_cli("transform --kind binomial --family narayana-gamma --r 1 --param y --rows 7");
  CHECK(last_line(r.out) == "1 21 105 175 105 21 1");
  r = run_cli("transform --kind binomial --family reverted-gamma --r 1 --param=-y --rows 7");
  CHECK(last_line(r.out) == "1 -9 -15 -15 -15 -9 1");
  CHECK(run_cli("transform --kind nope --family ordinary 2>/dev/null").code == 2);
}

TEST_CASE("verify") {
  auto r = run_cli("verify --suite paper --criterion 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS [1] delannoy") != std::string::npos);
  CHECK(run_cli("verify --suite nope 2>/dev/null").code == 2);
}

TEST_CASE("oeis-compare") {
  auto r = run_cli("oeis-compare --anum A077938 --prefix 7");
  CHECK(r.code == 0);
  CHECK(run_cli("oeis-compare --anum A077938 --terms 1,2,5,14,37,98,261").code == 0);
  CHECK(run_cli("oeis-compare --anum A001591 --terms 1,1,2,4,8,16,31 --skip 4").code == 0);
  r = run_cli("oeis-compare --anum A077938 --terms 1,2,5,14,38,98,261");
  CHECK(r.code == 1);
  CHECK(r.out.find("index 4") != std::string::npos);
  const auto f = write_temp("seq.txt", "1 1 2 5 14 42\n");
  CHECK(run_cli("oeis-compare --anum A000108 --file '" + f.string() + "'").code == 0);
  fs::remove(f);
  CHECK(run_cli("oeis-compare --anum A000045 2>/dev/null").code == 6);
  CHECK(run_cli("oeis-compare --anum X1 2>/dev/null").code == 2);
}

TEST_CASE("oeis-compare fetch") {
  httplib::Server server;
  server.Get("/A000045/b000045.txt", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n", "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const auto cache = fs::temp_directory_path() / ("pascalgamma-cli-cache-" + std::to_string(::getpid()));
  fs::remove_all(cache);
  const std::string env = "PASCALGAMMA_OEIS_CACHE='" + cache.string() + "' ";

  const std::string cmd = "env " + env + "'" + PASCALGAMMA_CLI +
                          "' oeis-compare --anum A000045 --fetch --oeis-base-url " + base +
                          " --terms 0,1,1,2,3,5,8";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(cache / "b000045.txt"));
  server.stop();
  thread.join();

  const std::string dead = "env " + env + "'" + PASCALGAMMA_CLI +
                           "' oeis-compare --anum A000046 --fetch --oeis-base-url " + base +
                           " --terms 1 2>/dev/null";
  const int status = std::system(dead.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 7);
  fs::remove_all(cache);
}
