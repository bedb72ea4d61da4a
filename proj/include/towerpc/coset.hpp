#pragma once

#include <deque>
#include <utility>
#include <vector>

#include "towerpc/errors.hpp"
#include "towerpc/int_types.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

// Which killing relators to adjoin on top of the presentation:
//   Gamma:  s_i^2 = 1 for every i        (quotient of order 2^n)
//   Lambda: s_i^2 = 1 for i < n, s_n = 1 (quotient of order 2^{n-1})
enum class QuotientKind { Gamma, Lambda };

// Coset table over the letters s_1, s_1^-1, ..., s_n, s_n^-1. Rows are live
// cosets after coincidence processing; when complete, the table is closed
// under all letters and every relator traces to the starting coset.
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> rows;
  bool complete = false;
  long long order = 0;  // number of live cosets when complete
  long long cap = 0;
};

struct QuotientOrderResult {
  bool closed = false;
  Int order;
  long long cap = 0;
};

namespace coset_detail {

inline int inv_letter(int l) { return l ^ 1; }
inline int pos_letter(int gen) { return 2 * (gen - 1); }      // s_gen
inline int neg_letter(int gen) { return 2 * (gen - 1) + 1; }  // s_gen^-1

inline void append_power(std::vector<int>& word, int gen, const Int& exp) {
  if (exp == 0) return;
  const int letter = exp > 0 ? pos_letter(gen) : neg_letter(gen);
  Int m = abs(exp);
  detail::internal_check(m < 1000000, "relator exponent too large to trace");
  for (Int i = 0; i < m; ++i) word.push_back(letter);
}

// Relator words for the chosen quotient. Since the killers force s_i^2 = 1
// (and s_n = 1 for Lambda), tail exponents are reduced modulo the killed
// powers first; the reduced relators define the same quotient and stay short
// no matter how large the tails are.
inline std::vector<std::vector<int>> relators(const TowerPresentation& p, QuotientKind kind) {
  std::vector<std::vector<int>> rels;
  auto reduced = [&](int gen, const Int& exp) -> Int {
    if (kind == QuotientKind::Lambda && gen == p.n) return Int(0);
    return mod2(exp);
  };
  for (int i = 1; i < p.n; ++i) {
    for (int j = i + 1; j <= p.n; ++j) {
      // s_i s_j s_i^-1 s_j^-eps s_{j+1}^{-a_{j+1}} ... s_n^{-a_n}
      std::vector<int> w = {pos_letter(i), pos_letter(j), neg_letter(i)};
      append_power(w, j, reduced(j, Int(-p.eps(i, j))));
      for (int k = j + 1; k <= p.n; ++k) append_power(w, k, reduced(k, -p.tail_entry(i, j, k)));
      rels.push_back(std::move(w));
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    if (kind == QuotientKind::Lambda && i == p.n)
      rels.push_back({pos_letter(i)});
    else
      rels.push_back({pos_letter(i), pos_letter(i)});
  }
  return rels;
}

class Enumerator {
 public:
  Enumerator(int ngens, std::vector<std::vector<int>> rels, long long cap)
      : ncols_(2 * ngens), rels_(std::move(rels)), cap_(cap) {
    define_root();
  }

  // Runs HLT-style enumeration: lowest live coset first, every relator
  // scanned and filled, then remaining row entries defined directly.
  bool run() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (dead(c)) continue;
      for (const auto& rel : rels_) {
        if (!scan_and_fill(c, rel)) return false;  // cap hit
        if (dead(c)) break;
      }
      if (dead(c)) continue;
      for (int l = 0; l < ncols_; ++l) {
        if (table_[c][l] == -1) {
          if (!define(c, l)) return false;
        }
      }
    }
    return true;
  }

  long long live_count() const {
    long long k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (!dead(c)) ++k;
    return k;
  }

  // Live rows, renumbered consecutively.
  std::vector<std::vector<int>> live_rows() const {
    std::vector<int> renumber(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (!dead(c)) renumber[c] = next++;
    std::vector<std::vector<int>> rows;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (dead(c)) continue;
      std::vector<int> row = table_[c];
      for (auto& x : row)
        if (x != -1) x = renumber[find(x)];
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  bool dead(std::size_t c) const { return parent_[c] != static_cast<int>(c); }

  int find(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  void define_root() {
    table_.emplace_back(ncols_, -1);
    parent_.push_back(0);
  }

  bool define(int c, int letter) {
    if (static_cast<long long>(table_.size()) >= cap_) return false;
    const int d = static_cast<int>(table_.size());
    table_.emplace_back(ncols_, -1);
    parent_.push_back(d);
    table_[c][letter] = d;
    table_[d][inv_letter(letter)] = c;
    return true;
  }

  void merge_pair(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);  // keep the lower coset
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void merge(int a, int b) {
    merge_pair(a, b);
    while (!queue_.empty()) {
      const int g = queue_.front();
      queue_.pop_front();
      // dismantle the dead row, re-routing each edge through representatives
      for (int l = 0; l < ncols_; ++l) {
        const int d = table_[g][l];
        if (d == -1) continue;
        table_[d][inv_letter(l)] = -1;
        const int mu = find(g);
        const int nu = find(d);
        if (table_[mu][l] != -1)
          merge_pair(nu, table_[mu][l]);
        else if (table_[nu][inv_letter(l)] != -1)
          merge_pair(mu, table_[nu][inv_letter(l)]);
        else {
          table_[mu][l] = nu;
          table_[nu][inv_letter(l)] = mu;
        }
      }
    }
  }

  bool scan_and_fill(int start, const std::vector<int>& w) {
    int c = find(start);
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    int f = c, b = c;
    for (;;) {
      while (i <= j) {
        const int next = table_[find(f)][w[i]];
        if (next == -1) break;
        f = find(next);
        ++i;
      }
      if (i > j) {
        if (find(f) != find(b)) merge(f, b);
        return true;
      }
      while (j >= i) {
        const int next = table_[find(b)][inv_letter(w[j])];
        if (next == -1) break;
        b = find(next);
        --j;
      }
      if (j < i) {
        merge(f, b);
        return true;
      }
      if (i == j) {
        table_[find(f)][w[i]] = find(b);
        table_[find(b)][inv_letter(w[i])] = find(f);
        return true;
      }
      if (!define(find(f), w[i])) return false;
      f = table_[find(f)][w[i]];
      ++i;
    }
  }

  int ncols_;
  std::vector<std::vector<int>> rels_;
  long long cap_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace coset_detail

// Enumerates cosets of the trivial subgroup in the quotient of the presented
// group by the killing relators. The cap bounds the number of cosets ever
// defined; hitting it yields an incomplete table, which signals the bound
// and not a mathematical failure.
inline CosetTable enumerate_cosets(const TowerPresentation& p, QuotientKind kind,
                                   long long cap = 1000000) {
  validate(p);
  if (cap < 1) throw PreconditionError("coset table cap must be positive");
  coset_detail::Enumerator en(p.n, coset_detail::relators(p, kind), cap);
  CosetTable t;
  t.ngens = p.n;
  t.cap = cap;
  t.complete = en.run();
  if (t.complete) {
    t.rows = en.live_rows();
    t.order = en.live_count();
  }
  return t;
}

inline QuotientOrderResult finite_quotient_order(const TowerPresentation& p, QuotientKind kind,
                                                 long long cap = 1000000) {
  CosetTable t = enumerate_cosets(p, kind, cap);
  QuotientOrderResult r;
  r.closed = t.complete;
  r.cap = cap;
  if (t.complete) r.order = Int(t.order);
  return r;
}

}  // namespace towerpc
