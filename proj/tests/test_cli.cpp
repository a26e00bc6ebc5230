#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uniact/families.hpp"
#include "uniact/report.hpp"
#include "uniact/table_io.hpp"

namespace fs = std::filesystem;
namespace families = uniact::families;

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "uniact-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CmdResult run_cli(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd = std::string(UNIACT_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  CmdResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_fixture(const std::string& name, const uniact::Semigroup& s,
                       const std::vector<std::string>& names = {}) {
  const fs::path p = work_dir() / name;
  std::ofstream f(p);
  uniact::io::write_table(f, s, names);
  return p;
}

}  // namespace

TEST_CASE("uniform command") {
  const fs::path lz2 = write_fixture("lz2.txt", families::left_zero(2));
  const CmdResult yes = run_cli("uniform " + lz2.string());
  CHECK(yes.status == 0);
  CHECK(yes.out == "uniform: true\n");

  const fs::path lz3 = write_fixture("lz3.txt", families::left_zero(3));
  const CmdResult no = run_cli("uniform " + lz3.string());
  CHECK(no.status == 0);  // a clean answer, just a negative one
  CHECK(no.out.find("uniform: false") == 0);
  CHECK(no.out.find("not large") != std::string::npos);

  const fs::path one = write_fixture("one.txt", families::cyclic_group(1));
  const CmdResult degenerate = run_cli("uniform " + one.string());
  CHECK(degenerate.status == 2);
  CHECK(degenerate.err.find("one-element") != std::string::npos);
}

TEST_CASE("classify command") {
  const fs::path z2z =
      write_fixture("z2z.txt", adjoin_zero(families::cyclic_group(2)));
  const CmdResult r = run_cli("classify " + z2z.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("classification: zero-group") == 0);

  const fs::path nil = write_fixture("nil2.txt", families::monogenic_nil(2));
  const CmdResult na = run_cli("classify " + nil.string());
  CHECK(na.status == 0);
  CHECK(na.out.find("not-applicable") != std::string::npos);
}

TEST_CASE("analyze json matches the library byte for byte") {
  const uniact::Semigroup s =
      families::group_two_left_zeros(families::cyclic_group(2));
  const fs::path file =
      write_fixture("g2lz.txt", s, {"e", "g", "t1", "t2"});

  const CmdResult a = run_cli("analyze " + file.string() + " --json");
  const CmdResult b = run_cli("analyze " + file.string() + " --json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  const auto expected = uniact::report::to_json(
      uniact::report::analyze(s, file.string(), {"e", "g", "t1", "t2"}));
  CHECK(a.out == expected.dump(2) + "\n");

  // And the text rendering mentions the headline facts.
  const CmdResult text = run_cli("analyze " + file.string());
  CHECK(text.status == 0);
  CHECK(text.out.find("uniform: true") != std::string::npos);
  CHECK(text.out.find("group-with-two-left-zeros") != std::string::npos);
}

TEST_CASE("congruence command") {
  const fs::path rz3 = write_fixture("rz3.txt", families::right_zero(3));
  const CmdResult r = run_cli("congruence " + rz3.string() + " --pair 0 1");
  CHECK(r.status == 0);
  CHECK(r.out == "rho(0, 1) blocks: {0, 1} {2}\n");

  const CmdResult named = run_cli(
      "congruence " +
      write_fixture("rz3n.txt", families::right_zero(3), {"x", "y", "z"})
          .string() +
      " --pair 0 1");
  CHECK(named.out == "rho(x, y) blocks: {x, y} {z}\n");

  const CmdResult json =
      run_cli("congruence " + rz3.string() + " --pair 0 1 --json");
  CHECK(json.status == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.at("class_ids") == nlohmann::json({0, 0, 2}));

  CHECK(run_cli("congruence " + rz3.string() + " --pair 0 5").status == 2);
  CHECK(run_cli("congruence " + rz3.string()).status == 2);
}

TEST_CASE("construct command") {
  const CmdResult lz = run_cli("construct left_zero 2");
  CHECK(lz.status == 0);
  CHECK(lz.out == "2\n0 0\n1 1\n");

  const fs::path out_file = work_dir() / "made.txt";
  const CmdResult rees = run_cli("construct rees0 2 1 1 --sandwich 0 --out " +
                                 out_file.string());
  CHECK(rees.status == 0);
  CHECK(uniact::io::read_table_file(out_file).semigroup ==
        families::rees_matrix_zero(families::cyclic_group(2), 1, 1,
                                   std::vector<int>{0}));

  // The strict swap action on three group elements is rejected with the
  // offending triple.
  const CmdResult bad = run_cli("construct g2lz 3");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("associativity fails at triple (1, 1, 3)") !=
        std::string::npos);

  const CmdResult sigma = run_cli("construct g2lz 3 --sigma 0,0,0");
  CHECK(sigma.status == 0);

  const CmdResult unknown = run_cli("construct dodecahedron 3");
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("left_zero") != std::string::npos);  // lists choices

  const CmdResult zero_in_plain = run_cli("construct rees 2 1 1 --sandwich z");
  CHECK(zero_in_plain.status == 2);
}

TEST_CASE("opposite command") {
  const fs::path rz3 =
      write_fixture("rz3o.txt", families::right_zero(3), {"x", "y", "z"});
  const fs::path flipped = work_dir() / "flipped.txt";
  const CmdResult r =
      run_cli("opposite " + rz3.string() + " --out " + flipped.string());
  CHECK(r.status == 0);
  const auto back = uniact::io::read_table_file(flipped);
  CHECK(back.semigroup == families::left_zero(3));
  CHECK(back.names == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("census command") {
  const CmdResult r = run_cli("census --order 2");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "2;0,0,0,0\n2;0,0,0,1\n2;0,0,1,1\n2;0,1,0,1\n2;0,1,1,0\n");

  const CmdResult filtered = run_cli("census --order 2 --filter uniform,band");
  CHECK(filtered.out == "2;0,0,0,1\n2;0,0,1,1\n2;0,1,0,1\n");

  const CmdResult negated =
      run_cli("census --order 2 --filter band,!commutative");
  CHECK(negated.out == "2;0,0,1,1\n2;0,1,0,1\n");

  const CmdResult bad_flag = run_cli("census --order 2 --filter shiny");
  CHECK(bad_flag.status == 2);

  const CmdResult too_big = run_cli("census --order 6");
  CHECK(too_big.status == 2);
  CHECK(too_big.err.find("--i-have-time") != std::string::npos);

  // A cache directory is honored and reused.
  const fs::path cache = work_dir() / "cache";
  fs::create_directories(cache);
  const CmdResult cached =
      run_cli("census --order 3 --cache " + cache.string());
  CHECK(cached.status == 0);
  CHECK(fs::exists(cache / "census-3.txt"));
  const CmdResult reused =
      run_cli("census --order 3 --cache " + cache.string());
  CHECK(reused.out == cached.out);
}

TEST_CASE("verify command") {
  const CmdResult one = run_cli("verify --check C1 --max-order 2");
  CHECK(one.status == 0);
  CHECK(one.out.find("check C1:") == 0);
  CHECK(one.out.find("result: PASS") != std::string::npos);
  CHECK(one.out.find("checks passed: 1/1") != std::string::npos);

  const CmdResult all = run_cli("verify --max-order 2");
  CHECK(all.status == 0);
  CHECK(all.out.find("checks passed: 15/15") != std::string::npos);

  // JSON output is deterministic across runs.
  const CmdResult ja = run_cli("verify --check C3 --max-order 3 --json");
  const CmdResult jb = run_cli("verify --check C3 --max-order 3 --json");
  CHECK(ja.status == 0);
  CHECK(ja.out == jb.out);
  const auto docs = nlohmann::json::parse(ja.out);
  REQUIRE(docs.is_array());
  CHECK(docs.size() == 1);
  CHECK(docs[0].at("passed") == true);

  CHECK(run_cli("verify --check C99 --max-order 2").status == 2);
  const CmdResult big = run_cli("verify --max-order 6");
  CHECK(big.status == 2);
  CHECK(big.err.find("--i-have-time") != std::string::npos);
}

TEST_CASE("input errors exit with code two") {
  CHECK(run_cli("uniform /nonexistent/table.txt").status == 2);

  const fs::path bad = work_dir() / "bad.txt";
  {
    std::ofstream f(bad);
    f << "2\n0 0\n1 x\n";
  }
  const CmdResult parse = run_cli("analyze " + bad.string());
  CHECK(parse.status == 2);
  CHECK(parse.err.find(":3:") != std::string::npos);

  const fs::path nonassoc = work_dir() / "nonassoc.txt";
  {
    std::ofstream f(nonassoc);
    f << "2\n1 1\n0 0\n";
  }
  const CmdResult assoc = run_cli("analyze " + nonassoc.string());
  CHECK(assoc.status == 2);
  CHECK(assoc.err.find("associativity fails") != std::string::npos);

  CHECK(run_cli("").status == 2);           // a subcommand is required
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("frobnicate").status == 2);
}
