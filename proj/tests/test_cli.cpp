#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monopath/cli/commands.hpp"
#include "monopath/cli/svg.hpp"
#include "monopath/errors.hpp"

using namespace monopath;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

int count_lines(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("count") {
  const auto j = invoke_json({"count", "--lambda", "2,2,2"});
  CHECK(j["multinomial"] == 90);
  CHECK(j["coherent"] == 30);
  CHECK(j["regions"] == 30);
  CHECK(j["charpoly"] == json::array({0, 20, -9, 1}));

  const auto small = invoke_json({"--lambda", "1,1", "count"});
  CHECK(small["multinomial"] == 2);
  CHECK(small["coherent"] == 2);

  const auto field = invoke_json({"count", "--lambda", "2,1", "--prime", "5"});
  CHECK(field["finite_field"]["count"] == 15);
  CHECK(field["finite_field"]["closed"] == 15);

  CHECK(invoke({"count", "--lambda", "0,1"}).code == cli::kUsageError);
  CHECK(invoke({"count", "--lambda", "2,1", "--prime", "4"}).code == cli::kUsageError);
  CHECK(invoke({"count"}).code == cli::kUsageError);
  CHECK(invoke({}).code == cli::kUsageError);
  CHECK(invoke({"bogus"}).code == cli::kUsageError);
}

TEST_CASE("check word") {
  const auto no = invoke_json({"check", "--word", "12211"});
  CHECK(no["coherent"] == false);
  CHECK(no.contains("certificate"));
  CHECK_FALSE(no["certificate"]["cycle"].empty());

  const auto yes = invoke_json({"check", "--word", "1,2,1,2,1"});
  CHECK(yes["coherent"] == true);
  CHECK(yes["witness"]["aprime"].size() == 2);
  CHECK(yes["witness"]["delta"].size() == 5);

  CHECK(invoke({"check", "--word", "12x"}).code == cli::kUsageError);
  CHECK(invoke({"check"}).code == cli::kUsageError);
  CHECK(invoke({"check", "--word", "12", "--partition", "1|2"}).code == cli::kUsageError);
}

TEST_CASE("check partition") {
  const auto j = invoke_json({"check", "--partition", "1|1,2|2|1,2|1", "--lambda", "4,3"});
  CHECK(j["coherent"] == false);
  CHECK(j["blocks"] == 5);
  const auto atom = invoke_json({"check", "--partition", "1|1,2", "--lambda", "2,1"});
  CHECK(atom["coherent"] == true);
  CHECK(atom["dimension"] == 1);
}

TEST_CASE("vertices") {
  CHECK(invoke_json({"vertices", "--lambda", "1,1"}).size() == 2);
  CHECK(invoke_json({"vertices", "--lambda", "2,1"}).size() == 3);
  const auto catalan = invoke_json({"vertices", "--lambda", "2,2,2"});
  CHECK(catalan.size() == 30);
  const json expected = {{"I", {"5/3", "1", "1/3", "11/2"}}, {"word", "1,1,2,2,3,3"}};
  CHECK(std::find(catalan.begin(), catalan.end(), expected) != catalan.end());

  const auto csv = invoke({"vertices", "--lambda", "2,1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("word,I1,I2,I3\n", 0) == 0);
  CHECK(count_lines(csv.out, "\n") == 4);

  CHECK(invoke({"vertices", "--lambda", "2,2,2", "--cap", "5"}).code == cli::kCapExceeded);
  CHECK(invoke({"vertices", "--lambda", "2,2,2", "--format", "svg"}).code == cli::kUsageError);
}

TEST_CASE("MONOPATH_CAP") {
  ::setenv("MONOPATH_CAP", "4", 1);
  CHECK(invoke({"vertices", "--lambda", "2,2,1"}).code == cli::kCapExceeded);
  CHECK(invoke({"vertices", "--lambda", "2,2,1", "--cap", "5"}).code == 0);
  ::setenv("MONOPATH_CAP", "abc", 1);
  CHECK(invoke({"vertices", "--lambda", "2,1"}).code == cli::kUsageError);
  ::unsetenv("MONOPATH_CAP");
  CHECK(invoke({"vertices", "--lambda", "2,2,1"}).code == 0);
}

TEST_CASE("enumerate") {
  CHECK(invoke_json({"enumerate", "--lambda", "2,2,2"}).size() == 90);
  CHECK(invoke_json({"enumerate", "--lambda", "2,2,2", "--coherent-only"}).size() == 30);
  const auto parts = invoke_json({"enumerate", "--lambda", "2,1", "--partitions"});
  CHECK(parts.size() == 5);
  const auto coherent = invoke_json({"enumerate", "--lambda", "2,2", "--partitions", "--coherent-only"});
  CHECK(coherent.size() == 7);
  const auto csv = invoke({"enumerate", "--lambda", "2,1", "--format", "csv"});
  CHECK(csv.out == "word,non_nesting,nesting_count\n\"1,1,2\",true,0\n\"1,2,1\",true,0\n\"2,1,1\",true,0\n");
}

TEST_CASE("incoherency") {
  const auto w = invoke_json({"incoherency", "--word", "123321"});
  CHECK(w["incoherency"] == 3);
  CHECK(w["nesting_count"] == 3);
  const auto census = invoke_json({"incoherency", "--lambda", "2,2,2"});
  CHECK(census["maximum"] == 3);
  CHECK(std::count(census["attainers"].begin(), census["attainers"].end(), "1,2,3,3,2,1") == 1);
  CHECK(census["histogram"]["0"] == 30);
  const auto csv = invoke({"incoherency", "--lambda", "1,1", "--format", "csv"});
  CHECK(csv.out == "word,incoherency\n\"1,2\",0\n\"2,1\",0\n");
}

TEST_CASE("coset and zonotope") {
  const auto single = invoke_json({"coset", "--word", "112"});
  CHECK(single["modulus"] == 4);
  CHECK(single["representative"] == json::array({1, 3}));
  const auto all = invoke_json({"coset", "--lambda", "2,2,2"});
  CHECK(all["count"] == 30);
  CHECK(all["bijection"] == true);
  CHECK(invoke({"coset", "--word", "1221"}).code == cli::kUsageError);

  const auto z = invoke_json({"zonotope", "--lambda", "1,1", "--s", "7/2"});
  CHECK(z["count"] == 2);
  CHECK(z["generators"] == json::array({json::array({"-1", "1", "0"}), json::array({"0", "0", "7/2"})}));
  CHECK(z["scale"] == "1/2");
  CHECK(invoke_json({"zonotope", "--lambda", "2,2,2"})["count"] == 13);
  CHECK(invoke({"zonotope", "--lambda", "1,1", "--s", "-1"}).code == cli::kUsageError);
}

TEST_CASE("plot") {
  const auto catalan = invoke({"plot", "--lambda", "2,2,2"});
  CHECK(catalan.code == 0);
  CHECK(count_lines(catalan.out, "<line") == 9);
  CHECK(count_lines(invoke({"plot", "--lambda", "3,2,1", "--format", "svg"}).out, "<line") == 9);
  CHECK(count_lines(invoke({"plot", "--lambda", "1,1,1"}).out, "<line") == 3);
  CHECK(invoke({"plot", "--lambda", "2,2"}).code == cli::kUsageError);
  CHECK(invoke({"plot", "--lambda", "2,2,2", "--format", "csv"}).code == cli::kUsageError);
  CHECK_THROWS_AS(cli::slice_segments(Composition::parse("1,1,1,1"), 3), UnsupportedDimension);

  // x_1 - x_2 = 0 is the u_2 axis
  for (const auto& seg : cli::slice_segments(Composition::parse("1,1,1"), 2)) {
    if (seg.hyperplane.i == 1 && seg.hyperplane.j == 2) {
      CHECK(seg.x1 == doctest::Approx(0));
      CHECK(seg.x2 == doctest::Approx(0));
    }
  }
}

TEST_CASE("output is deterministic and --out writes a file") {
  const auto a = invoke({"vertices", "--lambda", "3,2,1"});
  const auto b = invoke({"vertices", "--lambda", "3,2,1"});
  CHECK(a.out == b.out);
  const auto path = std::string("monopath_cli_test_out.json");
  CHECK(invoke({"count", "--lambda", "2,2,2", "--out", path}).out.empty());
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  CHECK(buffer.str() == invoke({"count", "--lambda", "2,2,2"}).out);
  std::remove(path.c_str());
  // sorted keys
  const auto text = invoke({"count", "--lambda", "2,1"}).out;
  CHECK(text.find("\"charpoly\"") < text.find("\"coherent\""));
  CHECK(text.find("\"multinomial\"") < text.find("\"regions\""));
}

TEST_CASE("verify") {
  const auto r = invoke({"verify", "remark2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
  CHECK(invoke({"verify", "nonsense"}).code == cli::kUsageError);
}
