#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"

namespace edim {

class parse_error : public invalid_argument {
public:
  using invalid_argument::invalid_argument;
};

struct ParsedGroup {
  GroupSpec spec;
  std::string input;
  // Alias rewrites such as "W(E8) is ST37".
  std::vector<std::string> notes;
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  return out;
}

inline int to_int(const std::string& s, const std::string& expr) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v > 1'000'000)
      throw std::out_of_range(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw parse_error("bad integer '" + s + "' in group expression '" + expr + "'");
  }
}

// Family described by a group expression, without validation.
inline GroupFamily parse_family(const std::string& raw, std::vector<std::string>& notes) {
  const std::string s = strip_spaces(raw);
  std::smatch m;
  static const std::regex cyclic(R"(C(\d+))");
  static const std::regex symmetric(R"(S(\d+)(?:\[(natural|standard)\])?)");
  static const std::regex alternating(R"(A(\d+)(?:\[natural\])?)");
  static const std::regex imprimitive(R"(G\((\d+),(\d+),(\d+)\))");
  static const std::regex st(R"(ST(\d+))");
  static const std::regex weyl(R"(W\(([A-Z])(\d+)\))");

  if (std::regex_match(s, m, cyclic))
    return Cyclic{to_int(m[1], raw)};
  if (std::regex_match(s, m, symmetric))
    return Symmetric{to_int(m[1], raw),
                     m[2] == "natural" ? SymmetricRep::natural : SymmetricRep::standard};
  if (std::regex_match(s, m, alternating))
    return Alternating{to_int(m[1], raw)};
  if (std::regex_match(s, m, imprimitive))
    return Imprimitive{to_int(m[1], raw), to_int(m[2], raw), to_int(m[3], raw)};
  if (std::regex_match(s, m, st)) {
    const int k = to_int(m[1], raw);
    if (k == 1 || k == 2 || k == 3)
      throw parse_error("ST" + std::to_string(k) +
                        " is an infinite family; write S<n>, G(m,l,n) or C<m>");
    return Exceptional{k};
  }
  if (std::regex_match(s, m, weyl)) {
    const std::string type = m[1];
    const int n = to_int(m[2], raw);
    auto alias = [&](GroupFamily f, const std::string& target) {
      notes.push_back(s + " is " + target);
      return f;
    };
    static const std::map<std::string, int> exceptional = {
        {"E6", 35}, {"E7", 36}, {"E8", 37}, {"F4", 28}, {"H3", 23}, {"H4", 30}};
    const std::string key = type + std::to_string(n);
    if (auto it = exceptional.find(key); it != exceptional.end())
      return alias(Exceptional{it->second}, "ST" + std::to_string(it->second));
    if (key == "G2")
      return alias(Imprimitive{6, 6, 2}, "G(6,6,2)");
    if (type == "A" && n >= 1)
      return alias(Symmetric{n + 1, SymmetricRep::standard}, "S" + std::to_string(n + 1));
    if (type == "B" && n >= 2)
      return alias(Imprimitive{2, 1, n}, "G(2,1," + std::to_string(n) + ")");
    if (type == "D" && n >= 2)
      return alias(Imprimitive{2, 2, n}, "G(2,2," + std::to_string(n) + ")");
    throw parse_error("unknown Weyl group '" + raw + "'");
  }
  throw parse_error("cannot parse group expression '" + raw +
                    "' (expected Cm, Sn, Sn[natural], An, G(m,l,n), STk or W(...))");
}

} // namespace detail

// Grammar: Cm | Sn | Sn[natural] | An | G(m,l,n) | STk |
//          W(E6) W(E7) W(E8) W(F4) W(G2) W(H3) W(H4) W(An) W(Bn) W(Dn)
inline ParsedGroup parse_group(const std::string& expr, int base_char = 0) {
  std::vector<std::string> notes;
  GroupFamily f = detail::parse_family(expr, notes);
  return {GroupSpec::create(std::move(f), base_char), expr, std::move(notes)};
}

// Expands a family range into group expressions, in order:
//   STa..STb   Sa..Sb   Aa..Ab   Ca..Cb
//   G(x,y,z) var=a..b ...   (x,y,z integers or variable names; l | m enforced,
//                             combinations violating it are skipped)
// A plain group expression yields itself.
inline std::vector<std::string> expand_range(const std::string& raw) {
  std::smatch m;
  const std::string s = detail::strip_spaces(raw);
  static const std::regex simple(R"((ST|S|A|C)(\d+)\.\.(?:\1)?(\d+))");
  if (std::regex_match(s, m, simple)) {
    const int a = detail::to_int(m[2], raw), b = detail::to_int(m[3], raw);
    if (a > b)
      throw parse_error("empty range '" + raw + "'");
    std::vector<std::string> out;
    for (int k = a; k <= b; ++k)
      out.push_back(m[1].str() + std::to_string(k));
    return out;
  }
  static const std::regex gtemplate(R"(^\s*G\(\s*(\w+)\s*,\s*(\w+)\s*,\s*(\w+)\s*\)(.*)$)");
  if (std::regex_match(raw, m, gtemplate)) {
    const std::string slots[3] = {m[1], m[2], m[3]};
    const std::string rest = m[4];
    std::map<std::string, std::pair<int, int>> ranges;
    std::vector<std::string> order;
    static const std::regex assign(R"((\w+)\s*=\s*(\d+)\s*\.\.\s*(\d+))");
    for (std::sregex_iterator it(rest.begin(), rest.end(), assign), end; it != end; ++it) {
      const std::string var = (*it)[1];
      if (ranges.count(var))
        throw parse_error("variable '" + var + "' given twice in '" + raw + "'");
      ranges[var] = {detail::to_int((*it)[2], raw), detail::to_int((*it)[3], raw)};
      order.push_back(var);
    }
    std::string leftover = std::regex_replace(rest, assign, "");
    if (!detail::strip_spaces(leftover).empty())
      throw parse_error("cannot parse range assignments '" + rest + "'");
    for (const auto& slot : slots) {
      bool numeric = !slot.empty() && std::all_of(slot.begin(), slot.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      if (!numeric && !ranges.count(slot))
        throw parse_error("variable '" + slot + "' has no range in '" + raw + "'");
    }
    for (const auto& var : order)
      if (var != slots[0] && var != slots[1] && var != slots[2])
        throw parse_error("variable '" + var + "' does not appear in '" + raw + "'");
    std::vector<std::string> out;
    std::map<std::string, int> value;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == order.size()) {
        int v[3];
        for (int k = 0; k < 3; ++k)
          v[k] = ranges.count(slots[k]) ? value[slots[k]] : detail::to_int(slots[k], raw);
        if (v[0] >= 1 && v[1] >= 1 && v[2] >= 1 && v[0] % v[1] == 0)
          out.push_back("G(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                        std::to_string(v[2]) + ")");
        return;
      }
      const auto [a, b] = ranges[order[i]];
      for (int x = a; x <= b; ++x) {
        value[order[i]] = x;
        rec(i + 1);
      }
    };
    rec(0);
    if (out.empty())
      throw parse_error("range '" + raw + "' contains no valid G(m,l,n)");
    return out;
  }
  // Single group: validate syntax now.
  std::vector<std::string> notes;
  (void)detail::parse_family(raw, notes);
  return {raw};
}

} // namespace edim
