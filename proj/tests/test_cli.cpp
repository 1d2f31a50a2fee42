#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "msl/class_label.hpp"
#include "msl/config.hpp"
#include "msl/mu_lattice.hpp"

using namespace msl;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(MSLCALC_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("mslcalc_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing") {
  fs::path d = temp_dir("config");
  {
    std::ofstream f(d / "run.cfg");
    f << "# comment\ntruncation = 10\nfield=fq3\n\ncharacteristic = 7\nformat=json\n";
  }
  auto kv = read_config_file((d / "run.cfg").string());
  CHECK(kv.size() == 4);
  RunConfig c;
  c.apply(kv);
  CHECK(c.truncation == 10);
  CHECK(c.field == "fq3");
  CHECK(c.characteristic == 7);
  CHECK(c.format == OutputFormat::Json);
  CHECK_NOTHROW(c.validate());
  c.truncation = 40;
  CHECK_THROWS(c.validate());
  CHECK_THROWS(c.apply({{"colour", "red"}}));
  CHECK_THROWS(c.apply({{"truncation", "ten"}}));
  CHECK_THROWS(read_config_file((d / "missing.cfg").string()));
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("class labels") {
  auto ctx = std::make_shared<const FGLContext>(6);
  MUBasis basis(ctx, 6);
  MUClass cp1 = cpn_class(*ctx, 1);
  CHECK(parse_class_label(basis, "CP1^2") == product(cp1, cp1));
  CHECK(parse_class_label(basis, "2*H2_3") == milnor_hypersurface_class(*ctx, 2, 3).scale(2));
  CHECK(parse_class_label(basis, "x2*x1") == product(basis.generator(2), basis.generator(1)));
  CHECK(parse_class_label(basis, "X2_1") == cp1);
  CHECK_THROWS(parse_class_label(basis, "CP"));
  CHECK_THROWS(parse_class_label(basis, "Y3"));
  CHECK_THROWS(parse_class_label(basis, "CP4^2"));
}

TEST_CASE("exit codes") {
  CHECK(run("msl group --field c --n 4").code == 0);
  CHECK(run("msl group --field c --n 99").code == 2);
  CHECK(run("msl group --field q --n 4").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("--config /nonexistent/file.cfg witt table --field r").code == 1);
  CHECK(run("op apply --name partial --class CP7^9").code == 2);
  CHECK(run("charnum hypersurface --ambient 3 --degree 4").code == 0);
}

TEST_CASE("json output of msl group") {
  RunResult r = run("msl group --field r --n 8 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["group"]["free_rank"] == 9);
  CHECK(j["group"]["invariant_factors"].empty());
  RunResult g = run("--format json msl group --field fq1 --n 4");
  REQUIRE(g.code == 0);
  auto jg = nlohmann::json::parse(g.out);
  CHECK(jg["group"]["free_rank"] == 2);
  CHECK(jg["group"]["invariant_factors"] == nlohmann::json::array({2}));
}

TEST_CASE("flags override the config file") {
  fs::path d = temp_dir("override");
  {
    std::ofstream f(d / "run.cfg");
    f << "field = c\nformat = json\n";
  }
  RunResult r = run("--config " + (d / "run.cfg").string() + " msl group --field r --n 8");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["group"]["free_rank"] == 9);
}

TEST_CASE("operations on labelled classes") {
  RunResult r = run("op apply --name delta --class CP1^2 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["degree"] == 0);
}

TEST_CASE("dump is deterministic") {
  fs::path a = temp_dir("dump_a"), b = temp_dir("dump_b");
  REQUIRE(run("-N 8 dump --out " + a.string()).code == 0);
  REQUIRE(run("-N 8 dump --out " + b.string()).code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
  }
  CHECK(files >= 10);
  CHECK(fs::exists(a / "mu_basis.json"));
  CHECK(fs::exists(a / "homology.csv"));
}

TEST_CASE("verify suites exit cleanly") {
  CHECK(run("verify --suite table").code == 0);
  CHECK(run("-N 8 verify --suite leibniz").code == 0);
  CHECK(run("verify --suite bogus").code == 2);
}
