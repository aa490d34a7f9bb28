#include <gtest/gtest.h>

#include "lts/commands.hpp"
#include "lts/errors.hpp"
#include "lts/fixtures.hpp"
#include "lts/io.hpp"
#include "support.hpp"

using namespace lts;

namespace {

const char* kMinimal = R"({
  "group": {"moduli": [0]},
  "field": {"kind": "rational"},
  "dimension": 2,
  "degrees": [[1], [-1]],
  "triple": [
    {"args": [0, 1, 0], "out": [{"idx": 0, "val": "3/6"}]}
  ]
})";

ParseError parse_error(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError("", 0, 0);
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(Io, ParsesMinimalFile) {
  const GradedLTS e = parse_system(kMinimal);
  EXPECT_EQ(e.dim(), 2u);
  EXPECT_EQ(e.basis_product(0, 1, 0)[0].to_string(), "1/2");
  EXPECT_TRUE(is_zero(e.basis_product(1, 1, 1)));
}

TEST(Io, RoundTripsEveryBuiltinAndVariant) {
  for (const std::string& name : builtin_names()) {
    const GradedLTS e = builtin(name);
    const std::string text = serialize_system(e);
    EXPECT_EQ(parse_system(text), e) << name;
    EXPECT_EQ(serialize_system(parse_system(text)), text) << name;
  }
  for (const auto& v : lts::testing::random_variants(81, 10)) EXPECT_EQ(parse_system(serialize_system(v.system)), v.system);
  const AbelianGroup z({0});
  const GradedLTS f5 = lts::testing::sl2_graded(z, z.element({1}), Field::prime(5));
  EXPECT_EQ(parse_system(serialize_system(f5)), f5);
}

TEST(Io, ShippedFilesAreCanonical) {
  for (const char* name : {"sl2_Z", "disjoint_sum", "nonlie_J", "trivial_grading_sl2", "zero_3"}) {
    const std::string text = read_file(fixture_directory() / (std::string(name) + ".json"));
    EXPECT_EQ(serialize_system(parse_system(text)), text) << name;
  }
}

TEST(Io, SyntaxErrorLocation) {
  const ParseError e = parse_error("{\n  \"group\": {\"moduli\": [0]},\n  \"field\": ]\n}");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 12u);
}

TEST(Io, ZeroDenominatorIsLocated) {
  const ParseError e = parse_error(replace(kMinimal, "\"3/6\"", "\"1/0\""));
  EXPECT_EQ(e.line(), 7u);
  EXPECT_EQ(e.column(), 51u);
  EXPECT_NE(std::string(e.what()).find("/triple/0/out/0/val"), std::string::npos);
}

TEST(Io, SemanticErrors) {
  EXPECT_EQ(parse_error(replace(kMinimal, "[0, 1, 0]", "[0, 2, 0]")).line(), 7u);
  EXPECT_EQ(parse_error(replace(kMinimal, "\"dimension\": 2", "\"dimension\": 3")).line(), 5u);
  EXPECT_EQ(parse_error(replace(kMinimal, "[[1], [-1]]", "[[1], [-1, 0]]")).line(), 5u);
  EXPECT_EQ(parse_error(replace(kMinimal, "\"rational\"", "\"real\"")).line(), 3u);
  EXPECT_EQ(parse_error(replace(kMinimal, "[0]}", "[1]}")).line(), 2u);
  EXPECT_EQ(parse_error(replace(kMinimal, "\"3/6\"", "0.5")).line(), 7u);
  EXPECT_EQ(parse_error(replace(kMinimal, "\"3/6\"", "\"1/-2\"")).line(), 7u);
  EXPECT_EQ(parse_error(replace(kMinimal, "\"dimension\"", "\"dim\"")).line(), 4u);
  EXPECT_EQ(parse_error(replace(kMinimal, "{\"kind\": \"rational\"}", "{\"kind\": \"prime\", \"p\": 9}")).line(), 3u);
  const std::string dup = replace(kMinimal, "\"val\": \"3/6\"}]}", "\"val\": \"3/6\"}]},\n    {\"args\": [0, 1, 0], \"out\": []}");
  const ParseError e = parse_error(dup);
  EXPECT_EQ(e.line(), 8u);
  EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
}

TEST(Io, NonCanonicalDegreeRejected) {
  std::string text = replace(kMinimal, "[0]}", "[2]}");
  text = replace(text, "[[1], [-1]]", "[[1], [3]]");
  EXPECT_EQ(parse_error(text).line(), 5u);
}

TEST(Io, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Commands, ReportsAreDeterministic) {
  const std::string text = serialize_system(builtin("disjoint_sum"));
  const CommandResult a = run_command(Command::decompose, text, "a");
  const CommandResult b = run_command(Command::decompose, text, "b");
  EXPECT_EQ(a.exit_code, kExitPass);
  EXPECT_EQ(a.json, b.json);
  CommandOptions other;
  other.seed = 5;
  EXPECT_NE(run_command(Command::decompose, text, "a", other).json, a.json);
}

TEST(Commands, ExitCodes) {
  const std::string good = serialize_system(builtin("sl2_Z"));
  for (Command c : {Command::verify, Command::analyze, Command::embed, Command::decompose}) {
    EXPECT_EQ(run_command(c, good, "good").exit_code, kExitPass);
  }
  const std::string bad = replace(good, "\"val\":\"4\"", "\"val\":\"5\"");
  for (Command c : {Command::verify, Command::analyze, Command::embed, Command::decompose}) {
    EXPECT_EQ(run_command(c, bad, "bad").exit_code, kExitCertificateFailure);
  }
  const CommandResult m = run_command(Command::verify, replace(good, "\"val\":\"4\"", "\"val\":\"1/0\""), "m.json");
  EXPECT_EQ(m.exit_code, kExitInputError);
  EXPECT_EQ(m.error.rfind("m.json:", 0), 0u);
  EXPECT_EQ(run_command_file(Command::verify, "/nonexistent/file.json").exit_code, kExitInputError);
}

TEST(Commands, VerifyReportNamesTheQuintuple) {
  const std::string bad = replace(serialize_system(builtin("sl2_Z")), "\"val\":\"4\"", "\"val\":\"5\"");
  const CommandResult r = run_command(Command::verify, bad, "bad");
  EXPECT_NE(r.json.find("\"indices\""), std::string::npos);
  EXPECT_NE(r.summary.find("axiom"), std::string::npos);
}
