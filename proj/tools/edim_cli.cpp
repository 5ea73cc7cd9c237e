#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edim/edim.hpp"
#include "edim/report_document.hpp"

namespace {

enum Exit { ok = 0, domain_refusal = 1, usage = 2, budget = 3, internal = 4 };

struct Common {
  int base_char = 0;
  std::string format;
  unsigned long long budget = edim::default_budget;
  bool no_timestamp = false;
};

int fail(const std::string& kind, const std::string& message, int code) {
  nlohmann::ordered_json rec;
  rec["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << rec.dump() << std::endl;
  return code;
}

edim::ReportDocument report_for(const std::string& expr, const Common& c) {
  auto parsed = edim::parse_group(expr, c.base_char);
  auto rep = edim::build_report(parsed.spec, c.budget);
  return edim::make_document(rep, expr, parsed.notes, !c.no_timestamp);
}

int cmd_report(const std::string& expr, const Common& c) {
  auto doc = report_for(expr, c);
  if (c.format == "json")
    std::cout << edim::render_json(doc) << "\n";
  else
    std::cout << edim::render_text(doc);
  return ok;
}

int cmd_table(const std::vector<std::string>& words, bool primes, const Common& c) {
  std::string range;
  for (const auto& w : words)
    range += (range.empty() ? "" : " ") + w;
  std::vector<edim::ReportDocument> rows;
  for (const auto& expr : edim::expand_range(range))
    rows.push_back(report_for(expr, c));
  if (c.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back(edim::to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else if (c.format == "text") {
    for (const auto& r : rows)
      std::cout << edim::render_text(r) << "\n";
  } else {
    std::cout << edim::render_csv(rows, primes);
  }
  return ok;
}

int cmd_verify(const std::string& expr, const std::string& oracle_name, const Common& c) {
  const auto oracle = edim::parse_oracle(oracle_name);
  auto parsed = edim::parse_group(expr, c.base_char);
  auto res = edim::verify(parsed.spec, oracle, c.budget);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = expr;
    j["normalized_group"] = parsed.spec.expression();
    j["oracle"] = edim::to_string(oracle);
    j["status"] = edim::to_string(res.status);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : res.assertions)
      arr.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    j["assertions"] = arr;
    j["degrees"] = res.degrees ? nlohmann::ordered_json(res.degrees->values)
                               : nlohmann::ordered_json(nullptr);
    j["total_elements"] = res.total_elements ? nlohmann::ordered_json(res.total_elements->str())
                                             : nlohmann::ordered_json(nullptr);
    j["provenance"] = oracle == edim::Oracle::molien ? edim::provenance::oracle_molien
                                                     : edim::to_string(oracle);
    j["notes"] = res.notes;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << parsed.spec.expression() << "  oracle " << edim::to_string(oracle) << ": "
              << edim::to_string(res.status) << "\n";
    for (const auto& a : res.assertions)
      std::cout << "  [" << (a.passed ? "pass" : "FAIL") << "] " << a.name
                << (a.detail.empty() ? "" : "  (" + a.detail + ")") << "\n";
    if (res.degrees) {
      std::cout << "  degrees [";
      for (std::size_t i = 0; i < res.degrees->values.size(); ++i)
        std::cout << (i ? "," : "") << res.degrees->values[i];
      std::cout << "]\n";
    }
    if (res.total_elements)
      std::cout << "  elements " << res.total_elements->str() << "\n";
    for (const auto& n : res.notes)
      std::cout << "  note: " << n << "\n";
  }
  return res.status == edim::VerifyResult::Status::fail ? domain_refusal : ok;
}

int cmd_frobenius(const std::vector<int>& values, const Common& c) {
  auto f = edim::frobenius_number(values);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["degrees"] = values;
    j["frobenius_number"] = f ? nlohmann::ordered_json(*f) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (f ? std::to_string(*f) : "none (1 generates every non-negative integer)") << "\n";
  }
  return ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential dimension of finite pseudo-reflection groups"};
  app.set_version_flag("--version", std::string(edim::version));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, std::string default_format,
                        std::vector<std::string> formats) {
    sub->add_option("--char", common.base_char, "base field characteristic (0 or a prime)");
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember(formats))
        ->default_str(default_format);
    sub->add_option("--budget", common.budget, "maximum number of signature families to enumerate");
    sub->add_flag("--no-timestamp", common.no_timestamp, "omit generated_at from output");
  };

  std::string expr;
  auto* report = app.add_subcommand("report", "full report for one group");
  report->add_option("group", expr, "group expression, e.g. ST37, G(4,2,3), S7, W(E6)")->required();

  std::vector<std::string> range;
  bool primes = false;
  auto* table = app.add_subcommand("table", "one row per group of a family range");
  table->add_option("range", range, "e.g. 'G(m,m,n) m=2..5 n=2..5', ST4..ST37, S2..S12")
      ->required();
  table->add_flag("--primes", primes, "add one ed(G;p) column per prime");

  std::string oracle = "springer-vs-direct";
  auto* verify = app.add_subcommand("verify", "run an independent cross-check");
  verify->add_option("group", expr, "group expression")->required();
  verify->add_option("--oracle", oracle, "springer-vs-direct | molien | counts")
      ->check(CLI::IsMember({"springer-vs-direct", "molien", "counts"}));

  std::vector<int> values;
  auto* frob = app.add_subcommand("frobenius", "Frobenius number of a list of positive integers");
  frob->add_option("values", values, "positive integers")->required();

  // All subcommands share one Common; exactly one of them runs.
  add_common(report, "text", {"text", "json"});
  add_common(table, "csv", {"csv", "json", "text"});
  add_common(verify, "text", {"text", "json"});
  add_common(frob, "text", {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), usage);
  }
  try {
    if (report->parsed()) {
      if (common.format.empty())
        common.format = "text";
      return cmd_report(expr, common);
    }
    if (table->parsed()) {
      if (common.format.empty())
        common.format = "csv";
      return cmd_table(range, primes, common);
    }
    if (verify->parsed()) {
      if (common.format.empty())
        common.format = "text";
      return cmd_verify(expr, oracle, common);
    }
    if (frob->parsed()) {
      if (common.format.empty())
        common.format = "text";
      return cmd_frobenius(values, common);
    }
  } catch (const edim::budget_exceeded& e) {
    return fail("budget", e.what(), budget);
  } catch (const edim::refusal& e) {
    return fail("refusal", e.what(), domain_refusal);
  } catch (const edim::invalid_argument& e) {
    return fail("usage", e.what(), usage);
  } catch (const edim::error& e) {
    return fail("internal", e.what(), internal);
  }
  return usage;
}
