#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "numbers.hpp"

namespace edim {

// One row of the exceptional Shephard-Todd table.
struct ExceptionalEntry {
  int st_index = 0;
  int rank = 0;
  Integer order;
  std::vector<int> degrees;
  std::string name;

  // ST35 = W(E6) and ST37 = W(E8) have degree lists fixed independently of
  // the data file; all other rows are external reference data.
  bool anchored() const noexcept { return st_index == 35 || st_index == 37; }
};

class ExceptionalTable {
public:
  // Parses records "st_index rank order d1,d2,... name". Lines starting with
  // '#' are comments; "# source:" and "# version:" comments are kept as
  // provenance. Every row is checked: degrees sorted, rank = number of
  // degrees, rank <= 8, product of degrees = order, indices 4..37 unique.
  static ExceptionalTable parse(std::istream& in) {
    ExceptionalTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty())
        continue;
      if (line[0] == '#') {
        auto take = [&](std::string_view key, std::string& dst) {
          auto pos = line.find(key);
          if (pos != std::string::npos)
            dst = trim(line.substr(pos + key.size()));
        };
        take("source:", t.source_);
        take("version:", t.version_);
        continue;
      }
      std::istringstream row(line);
      ExceptionalEntry e;
      std::string order_text, degree_text;
      if (!(row >> e.st_index >> e.rank >> order_text >> degree_text))
        throw invalid_argument(where(lineno) + "expected st_index rank order degrees name");
      std::getline(row, e.name);
      e.name = trim(e.name);
      if (e.name.empty())
        throw invalid_argument(where(lineno) + "missing name");
      try {
        e.order = Integer(order_text);
      } catch (const std::exception&) {
        throw invalid_argument(where(lineno) + "bad order '" + order_text + "'");
      }
      std::istringstream ds(degree_text);
      std::string tok;
      while (std::getline(ds, tok, ',')) {
        try {
          std::size_t used = 0;
          int d = std::stoi(tok, &used);
          if (used != tok.size() || d < 1)
            throw std::invalid_argument(tok);
          e.degrees.push_back(d);
        } catch (const std::exception&) {
          throw invalid_argument(where(lineno) + "bad degree '" + tok + "'");
        }
      }
      t.add(std::move(e), lineno);
    }
    if (t.entries_.size() != 34)
      throw invalid_argument("exceptional table must list ST4..ST37 (34 rows), got " +
                             std::to_string(t.entries_.size()));
    return t;
  }

  static ExceptionalTable parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
  }

  // The table compiled into the library (identical to data/exceptional_degrees.txt).
  static const ExceptionalTable& builtin();

  const ExceptionalEntry& at(int st_index) const {
    auto it = entries_.find(st_index);
    if (it == entries_.end())
      throw invalid_argument("no exceptional group ST" + std::to_string(st_index) +
                             " (valid: ST4..ST37)");
    return it->second;
  }

  const std::map<int, ExceptionalEntry>& entries() const noexcept { return entries_; }
  const std::string& source() const noexcept { return source_; }
  const std::string& version() const noexcept { return version_; }

  friend bool operator==(const ExceptionalTable& a, const ExceptionalTable& b) {
    if (a.entries_.size() != b.entries_.size())
      return false;
    for (const auto& [k, e] : a.entries_) {
      auto it = b.entries_.find(k);
      if (it == b.entries_.end())
        return false;
      const auto& f = it->second;
      if (e.rank != f.rank || e.order != f.order || e.degrees != f.degrees || e.name != f.name)
        return false;
    }
    return a.source_ == b.source_ && a.version_ == b.version_;
  }

private:
  static std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }

  static std::string where(int lineno) {
    return "exceptional table line " + std::to_string(lineno) + ": ";
  }

  void add(ExceptionalEntry e, int lineno) {
    if (e.st_index < 4 || e.st_index > 37)
      throw invalid_argument(where(lineno) + "st_index outside 4..37");
    if (entries_.count(e.st_index))
      throw invalid_argument(where(lineno) + "duplicate ST" + std::to_string(e.st_index));
    if (!std::is_sorted(e.degrees.begin(), e.degrees.end()))
      throw invalid_argument(where(lineno) + "degrees must be non-decreasing");
    if (static_cast<int>(e.degrees.size()) != e.rank)
      throw invalid_argument(where(lineno) + "rank differs from the number of degrees");
    if (e.rank > 8)
      throw invalid_argument(where(lineno) + "rank exceeds 8");
    Integer product = 1;
    for (int d : e.degrees)
      product *= d;
    if (product != e.order)
      throw invalid_argument(where(lineno) + "product of degrees " + product.str() +
                             " differs from order " + e.order.str());
    entries_.emplace(e.st_index, std::move(e));
  }

  std::map<int, ExceptionalEntry> entries_;
  std::string source_;
  std::string version_;
};

namespace detail {

inline constexpr std::string_view builtin_exceptional_table = R"TABLE(# Shephard-Todd exceptional complex reflection groups ST4..ST37.
# source: Lehrer & Taylor, "Unitary Reflection Groups" (2009), Appendix D, Table D.3
# version: 1
# Fields: st_index rank order degrees(comma-separated) name
# ST35 and ST37 degrees are also stated in the essential-dimension literature;
# every other row is external reference data.
4 2 24 4,6 ST4
5 2 72 6,12 ST5
6 2 48 4,12 ST6
7 2 144 12,12 ST7
8 2 96 8,12 ST8
9 2 192 8,24 ST9
10 2 288 12,24 ST10
11 2 576 24,24 ST11
12 2 48 6,8 ST12
13 2 96 8,12 ST13
14 2 144 6,24 ST14
15 2 288 12,24 ST15
16 2 600 20,30 ST16
17 2 1200 20,60 ST17
18 2 1800 30,60 ST18
19 2 3600 60,60 ST19
20 2 360 12,30 ST20
21 2 720 12,60 ST21
22 2 240 12,20 ST22
23 3 120 2,6,10 W(H3)
24 3 336 4,6,14 Klein group
25 3 648 6,9,12 Hessian group
26 3 1296 6,12,18 ST26
27 3 2160 6,12,30 Valentiner group
28 4 1152 2,6,8,12 W(F4)
29 4 7680 4,8,12,20 ST29
30 4 14400 2,12,20,30 W(H4)
31 4 46080 8,12,20,24 ST31
32 4 155520 12,18,24,30 ST32
33 5 51840 4,6,10,12,18 ST33
34 6 39191040 6,12,18,24,30,42 Mitchell group
35 6 51840 2,5,6,8,9,12 W(E6)
36 7 2903040 2,6,8,10,12,14,18 W(E7)
37 8 696729600 2,8,12,14,18,20,24,30 W(E8)
)TABLE";

} // namespace detail

inline const ExceptionalTable& ExceptionalTable::builtin() {
  static const ExceptionalTable table = parse(detail::builtin_exceptional_table);
  return table;
}

} // namespace edim
