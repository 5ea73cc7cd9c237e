#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "edim/edim.hpp"
#include "edim/report_document.hpp"

using namespace edim;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the built CLI with `args` (shell syntax) and captures stdout.
Run run_cli(const std::string& args, bool capture_stderr = false) {
  std::string cmd = std::string(EDIM_CLI_PATH) + " " + args + (capture_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);)
    out.push_back(l);
  return out;
}

} // namespace

TEST(Expression, Parses) {
  EXPECT_EQ(parse_group("ST37").spec, GroupSpec::exceptional(37));
  EXPECT_EQ(parse_group("C12").spec, GroupSpec::cyclic(12));
  EXPECT_EQ(parse_group("S7").spec, GroupSpec::symmetric(7));
  EXPECT_EQ(parse_group("S7[natural]").spec, GroupSpec::symmetric(7, SymmetricRep::natural));
  EXPECT_EQ(parse_group("A8").spec, GroupSpec::alternating(8));
  EXPECT_EQ(parse_group("G(4, 2, 3)").spec, GroupSpec::imprimitive(4, 2, 3));
  EXPECT_THROW(parse_group("G(4,3,3)"), invalid_argument);
  EXPECT_THROW(parse_group("ST2"), parse_error);
  EXPECT_THROW(parse_group("X5"), parse_error);
  EXPECT_THROW(parse_group("S5", 5), characteristic_violation);
}

TEST(Expression, WeylAliases) {
  EXPECT_EQ(parse_group("W(E6)").spec, GroupSpec::exceptional(35));
  EXPECT_EQ(parse_group("W(E7)").spec, GroupSpec::exceptional(36));
  EXPECT_EQ(parse_group("W(E8)").spec, GroupSpec::exceptional(37));
  EXPECT_EQ(parse_group("W(F4)").spec, GroupSpec::exceptional(28));
  EXPECT_EQ(parse_group("W(H3)").spec, GroupSpec::exceptional(23));
  EXPECT_EQ(parse_group("W(H4)").spec, GroupSpec::exceptional(30));
  EXPECT_EQ(parse_group("W(G2)").spec, GroupSpec::imprimitive(6, 6, 2));
  EXPECT_EQ(parse_group("W(B3)").spec, GroupSpec::imprimitive(2, 1, 3));
  EXPECT_EQ(parse_group("W(D4)").spec, GroupSpec::imprimitive(2, 2, 4));
  EXPECT_EQ(parse_group("W(A4)").spec, GroupSpec::symmetric(5));
  EXPECT_EQ(degrees(parse_group("W(G2)").spec).values, (std::vector<int>{2, 6}));
}

TEST(Expression, Ranges) {
  auto g = expand_range("G(m,m,n) m=2..5 n=2..5");
  EXPECT_EQ(g.size(), 16u);
  EXPECT_EQ(g.front(), "G(2,2,2)");
  EXPECT_EQ(expand_range("ST4..ST37").size(), 34u);
  EXPECT_EQ(expand_range("S2..S12").size(), 11u);
  EXPECT_EQ(expand_range("G(m,l,2) m=1..4 l=1..4").size(), 8u);
  EXPECT_EQ(expand_range("ST37"), std::vector<std::string>{"ST37"});
  EXPECT_THROW(expand_range("G(m,m,n) m=2..3"), parse_error);
  EXPECT_THROW(expand_range("G(m,m,2) m=2..3 k=1..2"), parse_error);
  EXPECT_THROW(expand_range("S5..S3"), parse_error);
}

TEST(ReportDocument, JsonRoundTrip) {
  for (const auto& expr : {"ST37", "ST35", "ST4", "G(5,5,2)", "G(4,2,3)", "S7", "S8", "S4", "S6[natural]",
                           "A8", "A3", "C1", "C12", "G(2,2,2)"}) {
    for (bool stamp : {false, true}) {
      auto parsed = parse_group(expr);
      auto doc = make_document(build_report(parsed.spec), expr, parsed.notes, stamp);
      auto back = parse_report_json(render_json(doc));
      EXPECT_EQ(back, doc) << expr;
      EXPECT_EQ(render_json(back), render_json(doc));
    }
  }
}

TEST(ReportDocument, Fields) {
  auto doc = make_document(build_report(GroupSpec::exceptional(37)), "ST37", {}, false);
  std::map<int, int> ed;
  for (const auto& p : doc.per_prime)
    ed[p.p] = *p.ed_at_p;
  EXPECT_EQ(ed, (std::map<int, int>{{2, 8}, {3, 4}, {5, 2}, {7, 1}}));
  auto j = nlohmann::ordered_json::parse(render_json(doc));
  for (const char* key : {"group", "normalized_group", "degrees", "per_prime", "pmed", "ed_abs",
                          "notes", "provenance"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["ed_abs"]["kind"], "exact");
  EXPECT_EQ(j["ed_abs"]["lo"], 8);
  EXPECT_TRUE(j["generated_at"].is_null());
  for (const auto& p : j["per_prime"])
    EXPECT_FALSE(p["provenance"].get<std::string>().empty());
}

TEST(ReportDocument, CsvPrimeColumns) {
  std::vector<ReportDocument> rows;
  for (const auto& e : expand_range("S2..S12"))
    rows.push_back(make_document(build_report(parse_group(e).spec), e, {}, false));
  auto ls = lines(render_csv(rows, true));
  ASSERT_EQ(ls.size(), 12u);
  EXPECT_EQ(ls[0], "group,normalized_group,rank,order,degrees,centre_order,pmed,ed_abs_kind,"
                   "ed_abs_lo,ed_abs_hi,ed_p2,ed_p3,ed_p5,ed_p7,ed_p11");
  const int primes[] = {2, 3, 5, 7, 11};
  for (int n = 2; n <= 12; ++n) {
    std::vector<std::string> cells;
    std::istringstream is(ls[n - 1]);
    for (std::string c; std::getline(is, c, ',');)
      cells.push_back(c);
    ASSERT_EQ(cells.size(), 15u) << ls[n - 1];
    for (int i = 0; i < 5; ++i)
      EXPECT_EQ(std::stoi(cells[10 + i]), n / primes[i]) << "S" << n << " p=" << primes[i];
  }
}

TEST(ReportDocument, CsvQuotesCommas) {
  auto doc = make_document(build_report(GroupSpec::imprimitive(4, 2, 3)), "G(4,2,3)", {}, false);
  auto ls = lines(render_csv({doc}, false));
  EXPECT_EQ(ls[1].rfind("\"G(4,2,3)\",\"G(4,2,3)\",3,192,4+6+8,2,3,exact,3,3", 0), 0u) << ls[1];
}

TEST(Verify, Examples) {
  auto m = verify(GroupSpec::imprimitive(3, 3, 3), Oracle::molien);
  EXPECT_EQ(m.status, VerifyResult::Status::pass);
  ASSERT_TRUE(m.degrees);
  EXPECT_EQ(m.degrees->values, (std::vector<int>{3, 3, 6}));

  auto a = verify(GroupSpec::alternating(8), Oracle::springer_vs_direct);
  EXPECT_EQ(a.status, VerifyResult::Status::skipped);
  EXPECT_FALSE(a.notes.empty());

  auto c = verify(GroupSpec::imprimitive(2, 1, 3), Oracle::counts);
  EXPECT_EQ(c.status, VerifyResult::Status::pass);
  EXPECT_EQ(c.total_elements, Integer(48));

  auto s = verify(GroupSpec::symmetric(6), Oracle::springer_vs_direct);
  EXPECT_EQ(s.status, VerifyResult::Status::pass);

  auto b = verify(GroupSpec::imprimitive(4, 1, 6), Oracle::counts, 10);
  EXPECT_EQ(b.status, VerifyResult::Status::skipped);

  EXPECT_EQ(verify(GroupSpec::exceptional(37), Oracle::molien).status,
            VerifyResult::Status::skipped);
  EXPECT_EQ(parse_oracle("springer-vs-direct"), Oracle::springer_vs_direct);
  EXPECT_THROW(parse_oracle("nope"), invalid_argument);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("report ST37").code, 0);
  EXPECT_EQ(run_cli("report 'G(4,3,3)'").code, 2);
  EXPECT_EQ(run_cli("report X9").code, 2);
  EXPECT_EQ(run_cli("report S5 --char 5").code, 1);
  EXPECT_EQ(run_cli("report S5 --char 4").code, 2);
  EXPECT_EQ(run_cli("report 'S20[natural]' --budget 10").code, 3);
  EXPECT_EQ(run_cli("verify 'G(3,3,3)' --oracle molien").code, 0);
  EXPECT_EQ(run_cli("verify A8").code, 0);
  EXPECT_EQ(run_cli("frobenius 4 6").code, 2);
  EXPECT_EQ(run_cli("bogus").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
}

TEST(Cli, ErrorRecordIsOneJsonLine) {
  auto r = run_cli("report S5 --char 5", true);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u);
  auto j = nlohmann::json::parse(ls[0]);
  EXPECT_EQ(j["error"]["kind"], "refusal");
  EXPECT_EQ(j["error"]["exit_code"], 1);
}

TEST(Cli, ReportOutputs) {
  auto j = nlohmann::json::parse(run_cli("report ST37 --format json --no-timestamp").out);
  EXPECT_EQ(j["degrees"]["values"], (std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30}));
  auto g = nlohmann::json::parse(run_cli("report 'G(5,5,2)' --format json").out);
  EXPECT_EQ(g["ed_abs"]["lo"], 1);
  EXPECT_FALSE(g["generated_at"].is_null());
  auto s = nlohmann::json::parse(run_cli("report S7 --format json").out);
  EXPECT_EQ(s["pmed"]["value"], 3);
  EXPECT_EQ(s["ed_abs"]["kind"], "exact");
  EXPECT_EQ(s["ed_abs"]["lo"], 4);
  EXPECT_NE(run_cli("report 'W(E6)'").out.find("W(E6)"), std::string::npos);
}

TEST(Cli, TableAndFrobenius) {
  EXPECT_EQ(lines(run_cli("table 'G(m,m,n)' m=2..5 n=2..5").out).size(), 17u);
  EXPECT_EQ(lines(run_cli("table ST4..ST37").out).size(), 35u);
  auto csv = run_cli("table S2..S12 --primes").out;
  EXPECT_NE(csv.find(",ed_p11"), std::string::npos);
  EXPECT_EQ(run_cli("frobenius 3 5").out, "7\n");
  auto j = nlohmann::json::parse(run_cli("frobenius 1 4 --format json").out);
  EXPECT_TRUE(j["frobenius_number"].is_null());
}

TEST(Cli, Deterministic) {
  for (const char* args : {"report ST37 --format json --no-timestamp",
                           "table 'G(m,l,3)' m=1..4 l=1..4 --primes",
                           "verify 'G(2,1,3)' --oracle counts --format json"}) {
    auto a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
