#pragma once

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eddim.hpp"
#include "version.hpp"

namespace edim {

// Serializable rendering of an EdReport. Field names are fixed; big
// integers travel as decimal strings.
struct ReportDocument {
  struct Tagged {
    std::string value;
    std::string provenance;
    friend bool operator==(const Tagged&, const Tagged&) = default;
  };
  struct Degrees {
    std::vector<int> values;
    std::string provenance;
    friend bool operator==(const Degrees&, const Degrees&) = default;
  };
  struct Prime {
    int p = 0;
    int a_p = 0;
    std::optional<int> ed_at_p;
    std::string provenance;
    friend bool operator==(const Prime&, const Prime&) = default;
  };
  struct TaggedInt {
    int value = 0;
    std::string provenance;
    friend bool operator==(const TaggedInt&, const TaggedInt&) = default;
  };
  struct EdAbs {
    std::string kind; // "exact" | "interval"
    int lo = 0;
    int hi = 0;
    std::string provenance;
    friend bool operator==(const EdAbs&, const EdAbs&) = default;
  };

  std::string tool_version;
  std::optional<std::string> generated_at;
  std::string group;
  std::string normalized_group;
  std::string name;
  int base_char = 0;
  int rank = 0;
  Tagged order;
  std::optional<TaggedInt> centre_order;
  std::optional<Degrees> degrees;
  std::vector<Prime> per_prime;
  std::optional<TaggedInt> pmed;
  std::optional<EdAbs> ed_abs;
  std::vector<std::string> notes;
  std::vector<std::string> provenance;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline ReportDocument make_document(const EdReport& r, const std::string& input,
                                    const std::vector<std::string>& extra_notes = {},
                                    bool timestamp = true) {
  ReportDocument doc;
  doc.tool_version = version;
  if (timestamp)
    doc.generated_at = utc_timestamp();
  doc.group = input;
  doc.normalized_group = r.group.expression();
  doc.name = r.group.name();
  doc.base_char = r.group.base_char();
  doc.rank = r.rank;
  const bool table = r.group.as<Exceptional>() != nullptr;
  doc.order = {r.order.str(), table ? (degrees_are_external(r.group) ? provenance::table_external
                                                                     : provenance::table_anchored)
                                    : provenance::family_formula};
  if (r.centre_order)
    doc.centre_order = ReportDocument::TaggedInt{*r.centre_order, provenance::centre_gcd};
  if (r.degrees)
    doc.degrees = ReportDocument::Degrees{r.degrees->values, r.degrees_provenance};
  for (const auto& [p, e] : r.per_prime)
    doc.per_prime.push_back({p, e.a_p, e.ed_at_p, e.provenance});
  if (r.pmed)
    doc.pmed = ReportDocument::TaggedInt{*r.pmed, r.pmed_provenance};
  if (r.ed_abs)
    doc.ed_abs = ReportDocument::EdAbs{r.ed_abs->is_exact() ? "exact" : "interval", r.ed_abs->lo,
                                       r.ed_abs->hi, r.ed_abs->provenance};
  doc.notes = extra_notes;
  doc.notes.insert(doc.notes.end(), r.notes.begin(), r.notes.end());

  std::set<std::string> tags{doc.order.provenance};
  if (doc.centre_order)
    tags.insert(doc.centre_order->provenance);
  if (doc.degrees)
    tags.insert(doc.degrees->provenance);
  for (const auto& p : doc.per_prime)
    tags.insert(p.provenance);
  if (doc.pmed)
    tags.insert(doc.pmed->provenance);
  if (doc.ed_abs)
    tags.insert(doc.ed_abs->provenance);
  doc.provenance.assign(tags.begin(), tags.end());
  return doc;
}

namespace detail {

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

} // namespace detail

inline nlohmann::ordered_json to_json(const ReportDocument& d) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["group"] = d.group;
  j["normalized_group"] = d.normalized_group;
  j["name"] = d.name;
  j["base_char"] = d.base_char;
  j["rank"] = d.rank;
  j["order"] = {{"value", d.order.value}, {"provenance", d.order.provenance}};
  j["centre_order"] = d.centre_order ? ordered_json{{"value", d.centre_order->value},
                                                    {"provenance", d.centre_order->provenance}}
                                     : ordered_json(nullptr);
  j["degrees"] = d.degrees ? ordered_json{{"values", d.degrees->values},
                                          {"provenance", d.degrees->provenance}}
                           : ordered_json(nullptr);
  ordered_json primes = ordered_json::array();
  for (const auto& p : d.per_prime)
    primes.push_back({{"p", p.p},
                      {"a_p", p.a_p},
                      {"ed_at_p", detail::opt(p.ed_at_p)},
                      {"provenance", p.provenance}});
  j["per_prime"] = primes;
  j["pmed"] = d.pmed ? ordered_json{{"value", d.pmed->value}, {"provenance", d.pmed->provenance}}
                     : ordered_json(nullptr);
  j["ed_abs"] = d.ed_abs ? ordered_json{{"kind", d.ed_abs->kind},
                                        {"lo", d.ed_abs->lo},
                                        {"hi", d.ed_abs->hi},
                                        {"provenance", d.ed_abs->provenance}}
                         : ordered_json(nullptr);
  j["notes"] = d.notes;
  j["provenance"] = d.provenance;
  j["tool_version"] = d.tool_version;
  j["generated_at"] = detail::opt(d.generated_at);
  return j;
}

inline ReportDocument report_from_json(const nlohmann::ordered_json& j) {
  ReportDocument d;
  try {
    d.group = j.at("group").get<std::string>();
    d.normalized_group = j.at("normalized_group").get<std::string>();
    d.name = j.at("name").get<std::string>();
    d.base_char = j.at("base_char").get<int>();
    d.rank = j.at("rank").get<int>();
    d.order = {j.at("order").at("value").get<std::string>(),
               j.at("order").at("provenance").get<std::string>()};
    if (!j.at("centre_order").is_null())
      d.centre_order = ReportDocument::TaggedInt{j["centre_order"].at("value").get<int>(),
                                                 j["centre_order"].at("provenance").get<std::string>()};
    if (!j.at("degrees").is_null())
      d.degrees = ReportDocument::Degrees{j["degrees"].at("values").get<std::vector<int>>(),
                                          j["degrees"].at("provenance").get<std::string>()};
    for (const auto& p : j.at("per_prime"))
      d.per_prime.push_back({p.at("p").get<int>(), p.at("a_p").get<int>(),
                             detail::get_opt<int>(p, "ed_at_p"),
                             p.at("provenance").get<std::string>()});
    if (!j.at("pmed").is_null())
      d.pmed = ReportDocument::TaggedInt{j["pmed"].at("value").get<int>(),
                                         j["pmed"].at("provenance").get<std::string>()};
    if (!j.at("ed_abs").is_null())
      d.ed_abs = ReportDocument::EdAbs{
          j["ed_abs"].at("kind").get<std::string>(), j["ed_abs"].at("lo").get<int>(),
          j["ed_abs"].at("hi").get<int>(), j["ed_abs"].at("provenance").get<std::string>()};
    d.notes = j.at("notes").get<std::vector<std::string>>();
    d.provenance = j.at("provenance").get<std::vector<std::string>>();
    d.tool_version = j.at("tool_version").get<std::string>();
    d.generated_at = detail::get_opt<std::string>(j, "generated_at");
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed report document: ") + e.what());
  }
  return d;
}

inline std::string render_json(const ReportDocument& d) { return to_json(d).dump(2); }

inline ReportDocument parse_report_json(const std::string& text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_argument(std::string("report document is not JSON: ") + e.what());
  }
}

inline std::string render_text(const ReportDocument& d) {
  std::ostringstream os;
  os << d.normalized_group;
  if (d.name != d.normalized_group)
    os << "  (" << d.name << ")";
  os << "\n";
  os << "  characteristic  " << d.base_char << "\n";
  os << "  rank            " << d.rank << "\n";
  os << "  order           " << d.order.value << "  [" << d.order.provenance << "]\n";
  if (d.degrees) {
    os << "  degrees         ";
    for (std::size_t i = 0; i < d.degrees->values.size(); ++i)
      os << (i ? ", " : "") << d.degrees->values[i];
    os << "  [" << d.degrees->provenance << "]\n";
  }
  if (d.centre_order)
    os << "  centre order    " << d.centre_order->value << "  [" << d.centre_order->provenance
       << "]\n";
  os << "  per prime:\n";
  os << "      p   a(p)  ed(G;p)\n";
  for (const auto& p : d.per_prime) {
    os << "    " << std::setw(3) << p.p << "  " << std::setw(5) << p.a_p << "  " << std::setw(7)
       << (p.ed_at_p ? std::to_string(*p.ed_at_p) : "-") << "  [" << p.provenance << "]\n";
  }
  os << "    other primes: 0\n";
  if (d.pmed)
    os << "  pmed(G)         " << d.pmed->value << "  [" << d.pmed->provenance << "]\n";
  if (d.ed_abs) {
    os << "  ed(G)           ";
    if (d.ed_abs->kind == "exact")
      os << d.ed_abs->lo;
    else
      os << "[" << d.ed_abs->lo << ", " << d.ed_abs->hi << "]";
    os << "  [" << d.ed_abs->provenance << "]\n";
  } else {
    os << "  ed(G)           undetermined\n";
  }
  for (const auto& n : d.notes)
    os << "  note: " << n << "\n";
  return os.str();
}

} // namespace edim

namespace edim {

// RFC 4180 quoting for fields containing a comma or quote.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// CSV with a fixed header; degrees are "+"-joined. With per-prime columns,
// one ed_p<p> column per prime up to the largest prime seen in any row;
// primes absent from a row's per_prime have a(p) = ed(G;p) = 0.
inline std::string render_csv(const std::vector<ReportDocument>& rows, bool per_prime_columns) {
  int max_p = 0;
  if (per_prime_columns)
    for (const auto& r : rows)
      for (const auto& p : r.per_prime)
        max_p = std::max(max_p, p.p);
  const auto primes = primes_up_to(max_p);
  std::ostringstream os;
  os << "group,normalized_group,rank,order,degrees,centre_order,pmed,ed_abs_kind,ed_abs_lo,ed_abs_hi";
  for (int p : primes)
    os << ",ed_p" << p;
  os << "\n";
  for (const auto& r : rows) {
    os << csv_field(r.group) << "," << csv_field(r.normalized_group) << "," << r.rank << "," << r.order.value << ",";
    if (r.degrees)
      for (std::size_t i = 0; i < r.degrees->values.size(); ++i)
        os << (i ? "+" : "") << r.degrees->values[i];
    os << "," << (r.centre_order ? std::to_string(r.centre_order->value) : "");
    os << "," << (r.pmed ? std::to_string(r.pmed->value) : "");
    if (r.ed_abs)
      os << "," << r.ed_abs->kind << "," << r.ed_abs->lo << "," << r.ed_abs->hi;
    else
      os << ",undetermined,,";
    for (int p : primes) {
      auto it = std::find_if(r.per_prime.begin(), r.per_prime.end(),
                             [p](const ReportDocument::Prime& e) { return e.p == p; });
      os << ",";
      if (it == r.per_prime.end())
        os << 0;
      else if (it->ed_at_p)
        os << *it->ed_at_p;
    }
    os << "\n";
  }
  return os.str();
}

} // namespace edim
