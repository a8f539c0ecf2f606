#include "support/fans.hpp"
#include "toric/cli.hpp"

#include <gtest/gtest.h>

using namespace toric;
using namespace toric::testing;

namespace {

std::string parse_failure(const std::string& text) {
  try {
    cli::parse_fan_file(text);
  } catch (const InputError& e) {
    return e.kind() + ": " + e.what();
  }
  return "";
}

}  // namespace

TEST(Parse, Valid) {
  const auto f = cli::parse_fan_file(R"({"name":"P1","rank":1,"rays":[[1],["-1"]],"max_cones":[[0],[1]]})");
  EXPECT_EQ(f.name, "P1");
  EXPECT_EQ(f.rank, 1u);
  EXPECT_EQ(f.rays, (std::vector<IntVector>{{1}, {-1}}));
  EXPECT_EQ(f.max_cones, (std::vector<Cone>{{0}, {1}}));
}

TEST(Parse, Errors) {
  EXPECT_NE(parse_failure("{not json"), "");
  EXPECT_NE(parse_failure("[]"), "");
  EXPECT_NE(parse_failure(R"({"rays":[[1]],"max_cones":[[0]]})").find("rank"), std::string::npos);
  EXPECT_NE(parse_failure(R"({"rank":1,"rays":[[1.5]],"max_cones":[[0]]})").find("rays[0][0]"), std::string::npos);
  EXPECT_NE(parse_failure(R"({"rank":2,"rays":[[1]],"max_cones":[[0]]})").find("rays[0]"), std::string::npos);
  EXPECT_NE(parse_failure(R"({"rank":1,"rays":[[1]],"max_cones":[[3]]})").find("max_cones[0][0]"), std::string::npos);
  EXPECT_NE(parse_failure(R"({"rank":0,"rays":[],"max_cones":[]})"), "");
}

TEST(Run, ExitCodes) {
  const auto ok = cli::run("report", load_fan("F1"), {});
  EXPECT_EQ(ok.exit_code, cli::kExitOk);
  EXPECT_EQ(ok.report["status"], "ok");

  const auto bad = cli::run("validate", make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}), {});
  EXPECT_EQ(bad.exit_code, cli::kExitInvalid);
  EXPECT_EQ(bad.report["status"], "invalid_fan");
  EXPECT_EQ(bad.report["error"]["kind"], "NotPositivelySpanning");

  EXPECT_EQ(cli::run("nonsense", load_fan("P1"), {}).exit_code, cli::kExitInvalid);
}

TEST(Run, ReportContents) {
  cli::Flags flags;
  flags.check = true;
  const auto res = cli::run("report", load_fan("P121"), flags);
  ASSERT_EQ(res.exit_code, 0);
  const auto& r = res.report;
  EXPECT_EQ(r["class_group"]["free_rank"], 1);
  EXPECT_EQ(r["roots"]["count"], 5);
  EXPECT_EQ(r["aut0"]["total_dimension"], 7);
  EXPECT_EQ(r["aut0"]["accounting"]["rank_plus_roots"], r["aut0"]["accounting"]["reductive_plus_unipotent"]);
  EXPECT_EQ(r["component_group"]["order"], 1);
  EXPECT_TRUE(r["check"]["passed"].get<bool>());
  EXPECT_NE(cli::render_text(r).find("Aut0 = R_u"), std::string::npos);
}

TEST(Run, SubcommandSections) {
  EXPECT_TRUE(cli::run("symmetries", load_fan("P2"), {}).report.contains("symmetries"));
  EXPECT_EQ(cli::run("symmetries", load_fan("P2"), {}).report["symmetries"]["order"], 6);
  EXPECT_FALSE(cli::run("validate", load_fan("P2"), {}).report.contains("roots"));
  EXPECT_TRUE(cli::run("classes", load_fan("P2"), {}).report.contains("classes"));
}

// Reports are deterministic and survive a JSON round trip.
TEST(Run, DeterministicRoundTrip) {
  for (const auto& name : corpus_names()) {
    const auto a = cli::run("report", load_fan(name), {}).report;
    const auto b = cli::run("report", load_fan(name), {}).report;
    EXPECT_EQ(a.dump(), b.dump()) << name;
    EXPECT_EQ(cli::json::parse(a.dump()), a) << name;
  }
}
