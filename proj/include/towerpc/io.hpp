#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "towerpc/errors.hpp"
#include "towerpc/normal_form.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

namespace io_detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Int parse_int(const std::string& s, int line_no) {
  if (s.empty()) throw ParseError("line " + std::to_string(line_no) + ": missing integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return Int(s);
}

inline int parse_small(const std::string& s, int line_no) {
  Int v = parse_int(s, line_no);
  if (v > 1000000 || v < -1000000)
    throw ParseError("line " + std::to_string(line_no) + ": index too large '" + s + "'");
  return static_cast<int>(v);
}

// "i,j" or "i,j,k"
inline std::vector<int> parse_index_list(const std::string& s, int line_no) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(parse_small(trim(cur), line_no));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_small(trim(cur), line_no));
  return out;
}

}  // namespace io_detail

// Parses the ".tower" text format:
//   line 1 (first content line): n = <int>
//   eps[i,j] = 1 | -1         required for every pair i < j
//   a[i,j,k] = <int>          tail exponent a^k_{i,j}; omitted entries are 0
// '#' starts a comment; blank lines are ignored; duplicate keys are errors.
// validate() runs on the result.
inline TowerPresentation parse_tower_text(const std::string& text) {
  using io_detail::parse_index_list;
  using io_detail::parse_int;
  using io_detail::parse_small;
  using io_detail::trim;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_n = false;
  TowerPresentation p;
  std::vector<bool> eps_seen;
  std::vector<std::vector<bool>> tail_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "n") {
      if (have_n) throw ParseError("line " + std::to_string(line_no) + ": duplicate n");
      int n = parse_small(value, line_no);
      if (n < 1) throw ParseError("line " + std::to_string(line_no) + ": n must be positive");
      p = TowerPresentation(n);
      eps_seen.assign(p.pair_count(), false);
      tail_seen.assign(p.pair_count(), {});
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          tail_seen[p.pair_index(i, j)].assign(n - j, false);
      have_n = true;
      continue;
    }
    if (!have_n)
      throw ParseError("line " + std::to_string(line_no) + ": n must come first");

    if (key.rfind("eps[", 0) == 0 && key.back() == ']') {
      auto idx = parse_index_list(key.substr(4, key.size() - 5), line_no);
      if (idx.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": eps needs two indices");
      int i = idx[0], j = idx[1];
      if (i < 1 || j <= i || j > p.n)
        throw ParseError("line " + std::to_string(line_no) + ": eps[" + std::to_string(i) +
                         "," + std::to_string(j) + "] out of range");
      if (eps_seen[p.pair_index(i, j)])
        throw ParseError("line " + std::to_string(line_no) + ": duplicate eps[" +
                         std::to_string(i) + "," + std::to_string(j) + "]");
      Int v = parse_int(value, line_no);
      if (v != 1 && v != -1)
        throw ParseError("line " + std::to_string(line_no) + ": eps must be 1 or -1");
      p.set_eps(i, j, static_cast<int>(v));
      eps_seen[p.pair_index(i, j)] = true;
      continue;
    }

    if (key.rfind("a[", 0) == 0 && key.back() == ']') {
      auto idx = parse_index_list(key.substr(2, key.size() - 3), line_no);
      if (idx.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": a needs three indices");
      int i = idx[0], j = idx[1], k = idx[2];
      if (i < 1 || j <= i || j > p.n || k <= j || k > p.n)
        throw ParseError("line " + std::to_string(line_no) + ": a[" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + "] out of range");
      if (tail_seen[p.pair_index(i, j)][k - j - 1])
        throw ParseError("line " + std::to_string(line_no) + ": duplicate a[" +
                         std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                         "]");
      p.set_tail_entry(i, j, k, parse_int(value, line_no));
      tail_seen[p.pair_index(i, j)][k - j - 1] = true;
      continue;
    }

    throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }

  if (!have_n) throw ParseError("missing 'n = <int>' line");
  validate(p);  // reports missing eps entries
  return p;
}

// Canonical printer; parse(print(p)) == p for valid presentations.
inline std::string print_tower(const TowerPresentation& p) {
  std::ostringstream out;
  out << "n = " << p.n << '\n';
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) out << "eps[" << i << ',' << j << "] = " << p.eps(i, j) << '\n';
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      for (int k = j + 1; k <= p.n; ++k)
        if (p.tail_entry(i, j, k) != 0)
          out << "a[" << i << ',' << j << ',' << k << "] = " << p.tail_entry(i, j, k) << '\n';
  return out.str();
}

// Word syntax: whitespace-separated tokens `s<i>` or `s<i>^<int>`; the bare
// token `1` is the empty word.
inline GroupWord parse_word(const std::string& text, int n) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 's')
      throw ParseError("bad word token '" + tok + "'");
    std::string body = tok.substr(1);
    std::string gen_part = body;
    std::string exp_part = "1";
    if (auto pos = body.find('^'); pos != std::string::npos) {
      gen_part = body.substr(0, pos);
      exp_part = body.substr(pos + 1);
    }
    int gen;
    Int exp;
    try {
      gen = io_detail::parse_small(gen_part, 0);
      exp = io_detail::parse_int(exp_part, 0);
    } catch (const ParseError&) {
      throw ParseError("bad word token '" + tok + "'");
    }
    if (gen < 1 || gen > n)
      throw ParseError("word generator s" + std::to_string(gen) + " out of range 1.." +
                       std::to_string(n));
    w.append(gen, exp);
  }
  return w;
}

}  // namespace towerpc
