#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_cases.hpp"
#include "leibniz/io.hpp"
#include "leibniz/sl2.hpp"

using namespace cli_cases;

namespace {

void check_golden(const std::string& name, const Outcome& o) {
  auto stored = golden(name, o);
  REQUIRE_MESSAGE(stored.has_value(), "missing golden file for " << name);
  CHECK(*stored == golden_text(o));
}

}  // namespace

TEST_CASE("golden reports and exit codes") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    Outcome o = run(c.args);
    CHECK(o.code == c.code);
    if (c.code != 0) CHECK_FALSE(o.err.empty());
    check_golden(c.name, o);
  }
}

TEST_CASE("reports are deterministic") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    Outcome a = run(c.args), b = run(c.args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("generated simple extension piped into classify") {
  Outcome gen = run({"gen", "simple-ext", "--n", "5"});
  REQUIRE(gen.code == 0);
  Outcome cls = run({"rep", "classify", "--json", "-", "--m", "2"}, gen.out);
  REQUIRE(cls.code == 0);
  leibniz::Json j = leibniz::parse_json(cls.out);
  CHECK(j["tool"] == leibniz::kToolName);
  CHECK(j["count"] == 2);
  CHECK(j["representations"][0]["variant"] == "zero_lambda");
  CHECK(j["representations"][1]["variant"] == "anti_symmetric");
  check_golden("pipe_classify_ext5", cls);
}

TEST_CASE("gen output parses back to the catalog objects") {
  CHECK(leibniz::parse_algebra(run({"gen", "simple-ext", "--n", "7"}).out) == leibniz::simple_ext_algebra(7));
  CHECK(leibniz::parse_representation(run({"gen", "sl2-irrep", "--m", "3"}).out) ==
        leibniz::sl2_leibniz_irrep(3, leibniz::Variant::zero_lambda));
}

TEST_CASE("help exits with 0") {
  Outcome o = run({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("rep") != std::string::npos);
}
