#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "singlab/commands.hpp"
#include "test_support.hpp"

using namespace singlab;
using namespace singlab::cli;
using namespace singlab::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is discarded.
Run run_cli(const std::string& args) {
  const std::string cmd = std::string(SINGLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

InputArgs input(std::string poly, std::string vars, std::optional<std::string> param = std::nullopt) {
  return {std::move(poly), std::move(vars), std::move(param)};
}

}  // namespace

TEST(SplitVars, TrimsAndKeepsOrder) {
  EXPECT_EQ(split_vars("x, y ,z"), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(split_vars("x"), std::vector<std::string>{"x"});
}

TEST(Commands, InvariantsAltman) {
  const auto r = cmd_invariants({input(kAltmanBase, "x,y,z"), true, 64});
  ASSERT_EQ(r.exit_code, kOk) << r.diagnostic;
  const auto& res = r.document.at("result");
  EXPECT_EQ(res.at("mu"), 68);
  EXPECT_EQ(res.at("nu"), 68);
  EXPECT_EQ(res.at("mult"), 5);
  EXPECT_EQ(r.document.at("schema"), kSchema);
  EXPECT_FALSE(r.document.contains("error"));
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(cmd_invariants({input("x^2+y^2", "x,y"), false, 64}).exit_code, kOk);
  EXPECT_EQ(cmd_invariants({input("x*y", "x,y"), false, 64}).exit_code, kOk);  // Morse, not an error
  EXPECT_EQ(cmd_invariants({input("x^2*y", "x,y"), false, 64}).exit_code, kNotIsolated);
  EXPECT_EQ(cmd_invariants({input("x^2+2*x*y+y^2", "x,y"), false, 64}).exit_code, kNotIsolated);
  EXPECT_EQ(cmd_invariants({input("x + q", "x,y"), false, 64}).exit_code, kUsage);
  EXPECT_EQ(cmd_invariants({input("1+x^2", "x"), false, 64}).exit_code, kUsage);
  EXPECT_EQ(cmd_newton({input("x*y", "x,y"), false}).exit_code, kNonConvenient);
  EXPECT_EQ(cmd_newton({input("x*y", "x,y"), true}).exit_code, kOk);
  EXPECT_EQ(cmd_newton({input("x^2*y", "x,y"), true}).exit_code, kNotIsolated);
  EXPECT_EQ(cmd_family({input("x^2+y^2", "x,y"), 3, 0, false, 64}).exit_code, kUsage);

  const auto bad = cmd_invariants({input("x^2*y", "x,y"), false, 64});
  EXPECT_EQ(bad.document.at("error").at("kind"), "stabilization-failure");
  EXPECT_FALSE(bad.diagnostic.empty());
}

TEST(Commands, NewtonSummary) {
  const auto r = cmd_newton({input("x^2+y^2", "x,y"), false});
  ASSERT_EQ(r.exit_code, kOk);
  const auto& res = r.document.at("result");
  EXPECT_EQ(res.at("nu"), 1);
  EXPECT_EQ(res.at("volumes"), json({"4", "2"}));
  EXPECT_EQ(res.at("face_counts"), json({2, 1}));

  const auto bs = cmd_newton({input("x^5+y*z^7+y^15", "x,y,z"), true});
  ASSERT_EQ(bs.exit_code, kOk);
  EXPECT_EQ(bs.document.at("result").at("nu"), 364);
  EXPECT_EQ(bs.document.at("result").at("padded_axes"), json({2}));
}

TEST(Commands, Section) {
  SectionArgs a;
  a.input = input(to_string(specialize(PT(family_a(7)), 0)), "x,y,z");
  a.hyperplane = "z=0";
  a.reference = 260;
  const auto r = cmd_section(a);
  ASSERT_EQ(r.exit_code, kOk) << r.diagnostic;
  EXPECT_EQ(r.document.at("result").at("mu"), 228);
  EXPECT_EQ(r.document.at("result").at("reference_mu"), 260);
  EXPECT_TRUE(r.document.at("result").at("random").is_null());

  SectionArgs b;
  b.input = input("x^3+y^3+z^3", "x,y,z");
  b.hyperplane = "z=x";
  b.random = 3;
  b.seed = 7;
  const auto rb = cmd_section(b);
  ASSERT_EQ(rb.exit_code, kOk);
  EXPECT_EQ(rb.document.at("result").at("mu"), 4);
  EXPECT_EQ(rb.document.at("result").at("random").at("samples").size(), 3u);
}

TEST(Commands, FamilyAltman) {
  const auto r = cmd_family({input(kAltman, "x,y,z", "t"), 3, 0, false, 64});
  ASSERT_EQ(r.exit_code, kOk) << r.diagnostic;
  EXPECT_EQ(r.document.at("result").at("verdict"), "not-applicable-degenerate");
}

TEST(Report, JsonRoundTrips) {
  const auto inv = analyze(specialize(PT(kAltman), 1), {true, {}});
  EXPECT_EQ(invariant_report_from_json(json::parse(to_json(inv).dump())), inv);

  const auto fam = analyze_family(DeformationFamily(PT("x^4+y^4+t*x^2*y^2", kXY)));
  EXPECT_EQ(family_report_from_json(json::parse(to_json(fam).dump())), fam);

  for (const bool stab : {false, true}) {
    const auto s = summarize_newton(support(P("x^5+y*z^7+y^15")), stab);
    EXPECT_EQ(newton_summary_from_json(json::parse(to_json(s).dump())), s);
  }
  const auto alt = summarize_newton(support(P(kAltmanBase)), false);
  EXPECT_EQ(newton_summary_from_json(json::parse(to_json(alt).dump())), alt);
}

TEST(Report, TextIsAFlatteningOfJson) {
  const auto r = cmd_invariants({input(kAltmanBase, "x,y,z"), false, 64});
  const auto text = render_text(r.document);
  EXPECT_NE(text.find("result.mu: 68\n"), std::string::npos);
  EXPECT_NE(text.find("result.nu: 68\n"), std::string::npos);
  EXPECT_NE(text.find("command: invariants\n"), std::string::npos);
  EXPECT_NE(text.find("schema: singlab/1\n"), std::string::npos);
}

TEST(Binary, JsonAndExitCodes) {
  const auto ok = run_cli("invariants --poly \"x^5+y^6+z^5+y^3*z^2\" --vars x,y,z");
  ASSERT_EQ(ok.code, 0);
  const auto doc = json::parse(ok.out);
  EXPECT_EQ(doc.at("result").at("mu"), 68);

  EXPECT_EQ(run_cli("invariants --poly \"x^2*y\" --vars x,y").code, kNotIsolated);
  EXPECT_EQ(run_cli("newton --poly \"x*y\" --vars x,y").code, kNonConvenient);
  EXPECT_EQ(run_cli("invariants --poly \"x+\" --vars x,y").code, kUsage);
  EXPECT_EQ(run_cli("invariants --vars x,y").code, kUsage);
  EXPECT_EQ(run_cli("frobnicate").code, kUsage);
}

TEST(Binary, TextFormatMatchesJson) {
  const std::string args = "newton --poly \"x^3+y^2\" --vars x,y";
  const auto j = run_cli(args);
  const auto t = run_cli("--format text " + args);
  ASSERT_EQ(j.code, 0);
  ASSERT_EQ(t.code, 0);
  const auto doc = json::parse(j.out);
  EXPECT_NE(t.out.find("result.nu: " + doc.at("result").at("nu").dump() + "\n"), std::string::npos);
  EXPECT_NE(t.out.find("result.volumes: [\"5\",\"3\"]\n"), std::string::npos);
}

TEST(Binary, FamilyVerdict) {
  const auto r = run_cli("family --poly \"x^4+y^4+t*x^2*y^2\" --vars x,y --param t --samples 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("result").at("verdict"), "topologically-trivial-and-equimultiple");
}
