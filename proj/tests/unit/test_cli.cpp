#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyarc/cli.hpp"
#include "polyarc/serialize.hpp"

using polyarc::io::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = polyarc::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit 1 with usage on stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"compute"}, {"compute", "triangle"}, {"verify", "--bogus"},
           {"verify"}, {"verify", "--line", "5", "--all"}, {"convert", "0;61"}, {"tables", "4"},
           {"render", "ox-eye", "--size", "0x10"}, {"compute", "ox-eye", "--size", "1/x"}}) {
    CAPTURE(args.size());
    const auto r = run(args);
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(contains(run({"frobnicate"}).err, "Usage:"));
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "verify"));
}

TEST_CASE("computation errors exit 2") {
  CHECK(run({"compute", "regular-convex", "--n", "3"}).status == 2);
  CHECK(run({"compute", "regular-concave", "--n", "5", "--mode", "context"}).status == 2);
  CHECK(run({"approx", "heron", "0", "1"}).status == 2);
  CHECK(run({"approx", "takiltum", "0", "-1"}).status == 2);
}

TEST_CASE("verify --all") {
  const auto r = run({"verify", "--all", "--strict"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "12 of 13 entries reproduced exactly"));
  CHECK(contains(r.out, "no (expected)"));
  CHECK(contains(r.out, "4.86 %"));
  CHECK(contains(r.out, "1.10 %"));
  CHECK(contains(r.out, "not reproduced"));

  const auto j = run({"verify", "--all", "--json"});
  const Json array = Json::parse(j.out);
  REQUIRE(array.size() == 13);
  int matches = 0;
  for (const auto& item : array) {
    const auto report = polyarc::io::report_from_json(item);
    matches += report.matches_scribe ? 1 : 0;
    CHECK(polyarc::io::to_json(report).dump() != "");
  }
  CHECK(matches == 12);
}

TEST_CASE("verify a single line") {
  const auto r = run({"verify", "--line", "16"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "0;13,20"));
  CHECK(run({"verify", "--line", "7"}).status == 1);
}

TEST_CASE("approx heron prints table 1") {
  const auto r = run({"approx", "heron", "21", "4", "3"});
  CHECK(r.status == 0);
  for (const char* value : {"37/8", "2713/592", "14720113/3212192", "4;37,30", "4;34,57,16,21,3"}) {
    CHECK(contains(r.out, value));
  }
  const Json j = Json::parse(run({"approx", "heron", "21", "4;30", "3", "--json"}).out);
  CHECK(j.at("iterates").at(3).at("rational").at("num") == "73180801");
}

TEST_CASE("approx surd, takiltum and contexts") {
  CHECK(contains(run({"approx", "surd", "2", "1", "-"}).out, "7/4"));
  CHECK(contains(run({"approx", "surd", "2", "1", "minus"}).out, "1;45"));
  CHECK(run({"approx", "surd", "2", "1", "x"}).status == 1);
  CHECK(contains(run({"approx", "takiltum", "1", "3/4"}).out, "x = 1/2"));
  CHECK(contains(run({"approx", "takiltum", "2", "1", "--root", "17/12"}).out, "5/12"));
  const Json contexts = Json::parse(run({"approx", "contexts", "--json"}).out);
  CHECK(contexts.at("alt-sqrt3").at("SQRT3") == "26/15");
}

TEST_CASE("convert") {
  CHECK(run({"convert", "0;13,20"}).out == "2/9\n");
  CHECK(run({"convert", "2/9"}).out == "0;13,20\n");
  CHECK(run({"convert", "1/7", "--places", "2"}).out == "0;8,34...\n");
  CHECK(run({"convert", "1/7", "--places", "1", "--mode", "round"}).out == "0;9...\n");
  CHECK(run({"convert", "4.5"}).out == "4;30\n");
  const Json j = Json::parse(run({"convert", "0;16,26,46,40", "--json"}).out);
  CHECK(j.at("rational").at("num") == "8881");
  CHECK(j.at("exact") == true);
}

TEST_CASE("compute") {
  const auto r = run({"compute", "ox-eye", "--context", "standard"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "9/32"));
  CHECK(contains(r.out, "0;16,52,30"));

  const Json j = Json::parse(run({"compute", "convex-6", "--json", "--precision", "40"}).out);
  CHECK(j.at("area").at("decimal").get<std::string>().starts_with("0.28811453252776143219688426625546175"));
  const auto back = polyarc::io::metrics_from_json(j);
  CHECK(back.family == polyarc::Family::kConvex6);

  const auto oracle = run({"compute", "barley-field", "--oracle", "1024"});
  CHECK(contains(oracle.out, "oracle area"));
  CHECK(run({"compute", "ox-eye", "--mode", "exact", "--context", "standard"}).status == 1);
}

TEST_CASE("compute with a context file") {
  const auto path = std::filesystem::temp_directory_path() / "polyarc_cli_context.json";
  {
    std::ofstream file(path);
    file << R"({"PI": "3/1", "SQRT2": "7/5", "SQRT3": "7/4"})";
  }
  const auto r = run({"compute", "barley-field", "--context", path.string(), "--json"});
  std::filesystem::remove(path);
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("context") == "polyarc_cli_context");
  CHECK(j.at("measures").at("length").at("rational").at("num") == "14");
  CHECK(j.at("measures").at("length").at("rational").at("den") == "15");
}

TEST_CASE("tables") {
  const auto t2 = run({"tables", "2"});
  CHECK(contains(t2.out, "0;14,45,56,15"));
  CHECK(contains(t2.out, "7 of 9 cells"));
  const Json t3 = Json::parse(run({"tables", "3", "--json", "--top", "1"}).out);
  CHECK(t3.at("rows").size() == 1);
  CHECK(t3.at("rows").at(0).at("rational").at("num") == "3069");

  const auto path = std::filesystem::temp_directory_path() / "polyarc_cli_candidates.json";
  {
    std::ofstream file(path);
    file << R"({"sqrt3": ["7/4", "1;45"], "sqrt21": ["4;35"]})";
  }
  const auto custom = run({"tables", "3", "--candidates", path.string(), "--json"});
  std::filesystem::remove(path);
  REQUIRE(custom.status == 0);
  CHECK(Json::parse(custom.out).at("rows").size() == 2);
  CHECK(run({"tables", "1", "--candidates", "x.json"}).status == 1);
}

TEST_CASE("render") {
  const auto r = run({"render", "regular-concave", "--n", "8", "--guides", "--size", "300x200", "--fill", "red"});
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("<?xml"));
  CHECK(contains(r.out, "fill=\"red\""));
  CHECK(run({"render", "1c"}).out == run({"render", "1c"}).out);
  CHECK(run({"render", "sb23397"}).status == 0);
  CHECK(run({"render", "fig99"}).status == 1);

  const auto path = std::filesystem::temp_directory_path() / "polyarc_cli_render.svg";
  CHECK(run({"render", "12", "-o", path.string()}).status == 0);
  CHECK(std::filesystem::file_size(path) > 100);
  std::filesystem::remove(path);
}
