#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "ea/cli.hpp"
#include "ea/io.hpp"

using namespace ea;

namespace {

const std::string kData = EA_DATA_DIR;

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate") {
  const RunResult ok = run({"validate", kData + "/e2.ea.json"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("E1") != std::string::npos);
  CHECK(ok.out.find("pass") != std::string::npos);

  const RunResult missing = run({"validate", kData + "/does_not_exist.ea.json"});
  CHECK(missing.status == 2);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("validate rejects a corrupted table with a witness, exit 1") {
  const auto tmp = std::filesystem::temp_directory_path() / "bad_e4.ea.json";
  write_file(tmp.string(),
             R"({"size":2,"zero":0,"one":1,"comp":[1,0],"plus":[[0,1],[1,0]]})");
  const RunResult r = run({"validate", tmp.string()});
  CHECK(r.status == 1);
  CHECK(r.out.find("E4") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("order with JSON export") {
  const auto tmp = std::filesystem::temp_directory_path() / "hs_order.json";
  const RunResult r = run({"order", kData + "/hs.ea.json", "--out", tmp.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("lattice: yes") != std::string::npos);
  const OrderStructure o = order_from_json(read_file(tmp.string()));
  CHECK(o.is_lattice);
  std::filesystem::remove(tmp);
}

TEST_CASE("transform both ways through files") {
  namespace fs = std::filesystem;
  const auto imp_path = fs::temp_directory_path() / "c3_cli.imp.json";
  const auto ea_path = fs::temp_directory_path() / "c3_cli.ea.json";

  CHECK(run({"transform", "--to", "implication", kData + "/c3.ea.json", "--out",
             imp_path.string()})
            .status == 0);
  CHECK(run({"transform", "--to", "effect", imp_path.string(), "--out", ea_path.string()})
            .status == 0);

  CHECK(same_tables(load_effect_algebra(ea_path.string()),
                    load_effect_algebra(kData + "/c3.ea.json")));
  fs::remove(imp_path);
  fs::remove(ea_path);
}

TEST_CASE("roundtrip subcommand") {
  CHECK(run({"roundtrip", kData + "/b4.ea.json"}).status == 0);
  CHECK(run({"roundtrip", kData + "/hex6.ea.json"}).status == 0);
}

TEST_CASE("imp tables and comparison") {
  const RunResult natural = run({"imp", "--kind", "natural", kData + "/c3.ea.json"});
  CHECK(natural.status == 0);
  CHECK(natural.out.find("kind: natural") != std::string::npos);

  // the horizontal sum separates natural from sasaki
  const RunResult cmp = run({"imp", "--kind", "natural", kData + "/hs.ea.json", "--compare"});
  CHECK(cmp.status == 0);
  CHECK(cmp.out.find("natural vs sasaki: 2 differing cells") != std::string::npos);
  CHECK(cmp.out.find("natural vs set: 0 differing cells") != std::string::npos);

  // natural implication needs a lattice
  CHECK(run({"imp", "--kind", "natural", kData + "/hex6.ea.json"}).status == 2);
  CHECK(run({"imp", "--kind", "set", kData + "/hex6.ea.json"}).status == 0);
}

TEST_CASE("check with builtin suites") {
  const RunResult r =
      run({"check", "--suite", "th10", "--model", kData + "/c3.ea.json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("all hold") != std::string::npos);

  const RunResult multi = run({"check", "--suite", "def52", "--model", kData + "/b4.ea.json",
                               kData + "/hex6.ea.json", "--jobs", "2"});
  CHECK(multi.status == 0);

  const RunResult usage = run({"check", "--model", kData + "/c3.ea.json"});
  CHECK(usage.status == 2);
}

TEST_CASE("check with ad hoc identities") {
  CHECK(run({"check", "--identity", "x -> (y -> x) == 1", "--model", kData + "/c4.ea.json"})
            .status == 0);
  const RunResult counter =
      run({"check", "--identity", "x -> y == y -> x", "--model", kData + "/e2.ea.json"});
  CHECK(counter.status == 1);
  CHECK(counter.out.find("countermodel") != std::string::npos);

  CHECK(run({"check", "--quasi", "x -> y == 1, y -> x == 1 => x == y", "--model",
             kData + "/hs.ea.json"})
            .status == 0);
}

TEST_CASE("consequence over the model directory") {
  const RunResult r = run({"consequence", "--sigma", kData + "/mp.ids", "--goal", "q == 1",
                           "--models", kData});
  CHECK(r.status == 0);

  const RunResult bad =
      run({"consequence", "--sigma", kData + "/mp.ids", "--goal", "q == 0", "--models", kData});
  CHECK(bad.status == 1);
  CHECK(bad.out.find("countermodel") != std::string::npos);
}

TEST_CASE("check-proof with audit") {
  const RunResult plain = run({"check-proof", kData + "/th9b.prf.json"});
  CHECK(plain.status == 0);
  CHECK(plain.out.find("verified") != std::string::npos);

  const RunResult audited =
      run({"check-proof", kData + "/th9b.prf.json", "--audit-models", kData});
  CHECK(audited.status == 0);

  // corrupt the conclusion of the final line
  const auto tmp = std::filesystem::temp_directory_path() / "bad.prf.json";
  std::string text = read_file(kData + "/th9b.prf.json");
  const auto pos = text.rfind("p -> 1");
  text.replace(pos, 6, "q -> 1");
  write_file(tmp.string(), text);
  const RunResult bad = run({"check-proof", tmp.string()});
  CHECK(bad.status == 1);
  CHECK(bad.out.find("INVALID") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("prove") {
  const RunResult found = run({"prove", "--system", "A", "--goal", "p -> (q -> p)"});
  CHECK(found.status == 0);
  CHECK(found.out.find("A1") != std::string::npos);

  const RunResult hyp = run({"prove", "--system", "A", "--goal", "p -> r", "--hyp", "p -> q",
                             "--hyp", "q -> r"});
  CHECK(hyp.status == 0);

  const RunResult not_found =
      run({"prove", "--system", "A", "--goal", "p", "--max-lines", "3"});
  CHECK(not_found.status == 1);
}

TEST_CASE("enumerate and census") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "ea_enum_test";
  fs::remove_all(dir);
  const RunResult r =
      run({"enumerate", "--max-size", "4", "--out", dir.string(), "--jobs", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("size 4: 3 algebras") != std::string::npos);
  int count = 0;
  for (const auto& f : list_model_files(dir.string())) {
    CHECK(validate_effect_axioms(load_effect_algebra(f)).ok());
    ++count;
  }
  CHECK(count == 5);  // 1 + 1 + 3
  fs::remove_all(dir);

  const RunResult c = run({"census", "--max-size", "4"});
  CHECK(c.status == 0);
  CHECK(c.out.find("no non-lattice algebra up to size 4") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"imp", "--kind", "odd", kData + "/c3.ea.json"}).status == 2);
  CHECK(run({"check", "--suite", "th11", "--model", kData + "/c3.ea.json"}).status == 2);
}
