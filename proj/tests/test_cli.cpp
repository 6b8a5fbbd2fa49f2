#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "mixedcage/cli.hpp"

using namespace mixedcage;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "mixedcage");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), in,
                            out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate cage136 piped into verify") {
  const auto gen = run({"generate", "cage136", "--format", "json"});
  REQUIRE(gen.code == 0);
  const auto ver = run({"verify", "-", "--z", "1", "--r", "3", "--g", "6"},
                       gen.out);
  CHECK(ver.code == 0);
  CHECK(ver.out.find("order 30\n") != std::string::npos);
  CHECK(ver.out.find("regularity [1,3]\n") != std::string::npos);
  CHECK(ver.out.find("girth 6\n") != std::string::npos);
  CHECK(ver.out.ends_with("result pass\n"));
}

TEST_CASE("verify reports failure with exit code 1") {
  const auto gen = run({"generate", "biaffine", "--q", "3"});
  REQUIRE(gen.code == 0);
  const auto ver = run({"verify", "-", "--z", "1", "--r", "3", "--g", "6"},
                       gen.out);
  CHECK(ver.code == 1);
  CHECK(ver.out.find("regularity [0,3]\n") != std::string::npos);
  CHECK(ver.out.find("offending_vertex ") != std::string::npos);
  CHECK(ver.out.ends_with("result fail\n"));
}

TEST_CASE("girth subcommand") {
  const auto gen = run({"generate", "circulant", "--q", "5", "--jumps", "1"});
  REQUIRE(gen.code == 0);
  CHECK(run({"girth", "-"}, gen.out).out == "girth 5\n");
  const auto w = run({"girth", "-", "--witness"}, gen.out);
  CHECK(w.out == "girth 5\nwitness n0 n1 n2 n3 n4\n");
}

TEST_CASE("generate DOT") {
  const auto dot = run({"generate", "family", "--q", "3", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph G {\n", 0) == 0);
  const auto tree = run({"generate", "moore-tree", "--r", "3", "--g", "6"});
  CHECK(tree.code == 0);
  const auto wit =
      run({"generate", "witness", "--z", "2", "--r", "3", "--g", "5"});
  CHECK(wit.code == 0);
  const auto bic = run({"generate", "bicirculant", "--q", "11", "--side",
                        "point", "--index", "3", "--format", "dot"});
  CHECK(bic.code == 0);
  CHECK(bic.out.find("\"(3,0)\" -> \"(3',0')\";") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
  const auto r = run({"bounds", "--z", "2", "--r", "7", "--g", "6", "--q", "7"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "moore 86\nahm 118\nmixed_lower 123\nassumes_conjecture false\n"
        "family_upper 196\n");
  const auto plain = run({"bounds", "--z", "2", "--r", "5", "--g", "6"});
  CHECK(plain.out.find("mixed_lower 71\n") != std::string::npos);
  CHECK(plain.out.find("family_upper none\n") != std::string::npos);
  CHECK(run({"bounds", "--z", "2", "--r", "5", "--g", "6", "--q", "5"}).code ==
        2);
}

TEST_CASE("catalog subcommand") {
  const auto r = run({"catalog", "--q-list", "3,5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "q,p,z,r,order,girth_verified,family_upper,moore,ahm,mixed_lower\n"
        "3,1,1,3,36,true,36,14,30,30\n"
        "5,2,1,5,100,true,100,42,66,66\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"generate", "cage136", "--bogus"}).code == 2);
  CHECK(run({"generate", "nonsense"}).code == 2);
  CHECK(run({"generate", "pg"}).code == 2);  // missing --q
  CHECK(run({"generate", "pg", "--q", "6"}).code == 2);
  CHECK(run({"verify", "-", "--z", "1", "--r", "3", "--g", "6"}, "{").code ==
        2);
  CHECK(run({"girth", "/nonexistent/graph.json"}).code == 2);
  CHECK(run({"catalog", "--q-list", "4"}).code == 2);
  const auto err = run({"frobnicate"});
  CHECK_FALSE(err.err.empty());
}

TEST_CASE("help exits with code 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generate") != std::string::npos);
}
