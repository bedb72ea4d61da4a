#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "towerpc/errors.hpp"
#include "towerpc/int_types.hpp"

namespace towerpc {

// A group element in the fixed ascending normal form s_1^{e1} ... s_n^{en}.
// The representation is unique per element; all arithmetic goes through the
// Collector.
struct NormalForm {
  std::vector<Int> e;

  NormalForm() = default;
  explicit NormalForm(std::vector<Int> exps) : e(std::move(exps)) {}

  static NormalForm identity(int n) { return NormalForm(std::vector<Int>(n, Int(0))); }

  static NormalForm generator(int n, int i, Int exp = Int(1)) {
    NormalForm nf = identity(n);
    nf.set(i, std::move(exp));
    return nf;
  }

  int size() const { return static_cast<int>(e.size()); }

  const Int& exp(int i) const {
    check(i);
    return e[i - 1];
  }

  void set(int i, Int v) {
    check(i);
    e[i - 1] = std::move(v);
  }

  bool is_identity() const {
    for (const auto& x : e)
      if (x != 0) return false;
    return true;
  }

  // Smallest generator index with nonzero exponent, or 0 for the identity.
  int lowest_support() const {
    for (int i = 0; i < size(); ++i)
      if (e[i] != 0) return i + 1;
    return 0;
  }

  bool supported_above(int level) const {
    for (int i = 0; i < level && i < size(); ++i)
      if (e[i] != 0) return false;
    return true;
  }

  bool operator==(const NormalForm&) const = default;

  std::string str() const {
    std::ostringstream out;
    out << "( ";
    for (int i = 0; i < size(); ++i) {
      if (i) out << ", ";
      out << e[i];
    }
    out << " )";
    return out.str();
  }

 private:
  void check(int i) const {
    if (i < 1 || i > size())
      throw IndexError("generator index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(size()));
  }
};

// A word in the generators, stored as syllables s_g^e. This is the input
// syntax for elements (CLI words, witness generator images); evaluation and
// normalization happen in the Collector.
struct GroupWord {
  struct Syllable {
    int gen = 0;
    Int exp;
    bool operator==(const Syllable&) const = default;
  };

  std::vector<Syllable> syllables;

  GroupWord() = default;

  static GroupWord of(int gen, Int exp = Int(1)) {
    GroupWord w;
    w.append(gen, std::move(exp));
    return w;
  }

  static GroupWord from_normal_form(const NormalForm& nf) {
    GroupWord w;
    for (int i = 1; i <= nf.size(); ++i)
      if (nf.exp(i) != 0) w.append(i, nf.exp(i));
    return w;
  }

  void append(int gen, Int exp) {
    if (exp == 0) return;
    syllables.push_back(Syllable{gen, std::move(exp)});
  }

  void append(const GroupWord& other) {
    for (const auto& s : other.syllables) append(s.gen, s.exp);
  }

  GroupWord inverse() const {
    GroupWord w;
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
      w.append(it->gen, -it->exp);
    return w;
  }

  bool empty() const { return syllables.empty(); }

  int max_generator() const {
    int m = 0;
    for (const auto& s : syllables) m = std::max(m, s.gen);
    return m;
  }

  bool operator==(const GroupWord&) const = default;

  // "s1 s3^-2"; the empty word prints as "1".
  std::string str() const {
    if (syllables.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& s : syllables) {
      if (!first) out << ' ';
      first = false;
      out << 's' << s.gen;
      if (s.exp != 1) out << '^' << s.exp;
    }
    return out.str();
  }
};

}  // namespace towerpc
