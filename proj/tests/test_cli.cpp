#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rankvc/dimacs.hpp"
#include "rankvc/instance.hpp"

namespace fs = std::filesystem;
using namespace rankvc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

class Sandbox {
 public:
  Sandbox() : dir_(fs::temp_directory_path() / ("rankvc_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Sandbox() { fs::remove_all(dir_); }
  fs::path operator/(const std::string& name) const { return dir_ / name; }

  Run run(const std::string& args) const {
    const std::string cmd = std::string("'") + RANKVC_CLI + "' " + args + " >'" + (dir_ / "stdout").string() +
                            "' 2>'" + (dir_ / "stderr").string() + "'";
    const int status = std::system(cmd.c_str());
    return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, read(dir_ / "stdout"), read(dir_ / "stderr")};
  }

 private:
  fs::path dir_;
};

const std::string kK3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";

std::string golden(const std::string& name) { return (fs::path(RANKVC_GOLDEN_DIR) / name).string(); }

}  // namespace

TEST_CASE("compress") {
  Sandbox box;
  write(box / "k3.dimacs", kK3);
  const std::string in = "--input '" + (box / "k3.dimacs").string() + "'";

  auto r = box.run("compress " + in + " --k 1 --seed 4 --no-shortcut --out '" + (box / "k3.rvc1").string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("budget=2\n") != std::string::npos);
  const auto inst = deserialize(read(box / "k3.rvc1"));
  CHECK(decide_bruteforce(inst));

  r = box.run("compress " + in + " --k 1 --seed 4 --mode faithful --no-shortcut --verify");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("RVC1\ndomain gfp ", 0) == 0);

  CHECK(box.run("compress --input '" + (box / "missing.dimacs").string() + "' --k 1 --seed 1").code == 1);
  r = box.run("compress " + in + " --k 1 --seed 1 --epsilon 0");
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(box.run("compress " + in + " --k 1 --seed 1 --epsilon 3/2").code == 1);
  CHECK(box.run("compress " + in + " --k 1").code == 1);
  CHECK(box.run("compress " + in + " --k 1 --seed 1 --bogus").code == 1);
  CHECK(box.run("compress " + in + " --k 1 --seed 1 --mode slow").code == 1);
  CHECK(box.run("compress " + in + " --k 1 --seed 1 --vc provided --cover 1").code == 1);
  CHECK(box.run("compress " + in + " --k 1 --seed 1 --vc provided --cover 1,2").code == 0);
  CHECK(box.run("").code == 1);
  CHECK(box.run("decide stats").code == 1);
}

TEST_CASE("decide") {
  Sandbox box;
  Graph k3 = parse_dimacs(kK3);
  write(box / "lift.rvc1", serialize(lift_from_vc_above_mm(k3, 1)));
  auto r = box.run("decide --input '" + (box / "lift.rvc1").string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out == "YES\n");
  write(box / "lift0.rvc1", serialize(RvcInstance{lift_from_vc_above_mm(k3, 0).pair, 1}));
  CHECK(box.run("decide --input '" + (box / "lift0.rvc1").string() + "'").out == "NO\n");

  write(box / "big.rvc1", serialize(lift_from_vc_above_mm(Graph::with_vertices(40), 0)));
  r = box.run("decide --input '" + (box / "big.rvc1").string() + "'");
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());

  write(box / "bad.rvc1", "RVC1\ndomain gfp 8\n");
  CHECK(box.run("decide --input '" + (box / "bad.rvc1").string() + "'").code == 1);
}

TEST_CASE("verify") {
  Sandbox box;
  const std::string g = golden("g7.dimacs");
  auto r = box.run("verify --graph '" + g + "' --k 3 --instance '" + golden("g7_k3_fast.rvc1") + "'");
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");

  auto inst = deserialize(read(golden("g7_k3_fast.rvc1")));
  inst.budget = 0;
  write(box / "corrupt.rvc1", serialize(inst));
  r = box.run("verify --graph '" + g + "' --k 3 --instance '" + (box / "corrupt.rvc1").string() + "'");
  CHECK(r.code == 4);
  CHECK(r.out == "not equivalent\n");

  write(box / "big.dimacs", "p edge 40 0\n");
  CHECK(box.run("verify --graph '" + (box / "big.dimacs").string() + "' --k 0 --instance '" +
                golden("g7_k3_fast.rvc1") + "'")
            .code == 3);
}

TEST_CASE("gen") {
  Sandbox box;
  auto r = box.run("gen --model gnp --n 8 --p 1 --seed 3");
  CHECK(r.code == 0);
  const Graph k8 = parse_dimacs(r.out);
  CHECK(k8.vertex_count() == 8);
  CHECK(k8.edge_count() == 28);

  r = box.run("gen --model gnp --n 8 --p 0 --seed 3");
  CHECK(r.out == "p edge 8 0\n");

  CHECK(box.run("gen --model gnp --n 7 --p 1/2 --seed 1").out == read(golden("g7.dimacs")));
  CHECK(box.run("gen --model gnp --n 7 --p 1/2").code == 1);
  CHECK(box.run("gen --model gnp --n 7 --p 2 --seed 1").code == 1);
  CHECK(box.run("gen --model ba --n 7 --p 1/2 --seed 1").code == 1);
}

TEST_CASE("stats on a golden file") {
  Sandbox box;
  const auto r = box.run("stats --input '" + golden("g7_k3_fast.rvc1") + "'");
  CHECK(r.code == 0);
  CHECK(r.out == read(golden("g7_k3_fast.stats")));
}

TEST_CASE("golden run through the command line") {
  Sandbox box;
  const auto r = box.run("compress --input '" + golden("g7.dimacs") + "' --k 3 --seed 11 --out '" +
                         (box / "o.rvc1").string() + "' --report '" + (box / "o.report").string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read(box / "o.rvc1") == read(golden("g7_k3_fast.rvc1")));
  CHECK(read(box / "o.report") == read(golden("g7_k3_fast.report")));
}
