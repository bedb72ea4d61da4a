#pragma once

#include <boost/multiprecision/miller_rabin.hpp>
#include <string>
#include <utility>
#include <vector>

#include "towerpc/errors.hpp"
#include "towerpc/int_types.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

using IntMatrix = std::vector<std::vector<Int>>;

// H1 data: Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and each d >= 2.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants&) const = default;

  bool is_free_of_rank(int r) const { return free_rank == r && torsion.empty(); }

  std::string str() const {
    std::string s = "free=" + std::to_string(free_rank) + " torsion=(";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (i) s += ",";
      s += torsion[i].str();
    }
    return s + ")";
  }
};

// Abelianized relation matrix: one row per pair i<j with (eps(i,j) - 1) in
// column j and a^k_{i,j} in column k, from s_i s_j s_i^-1 = tail * s_j^eps.
inline IntMatrix relation_matrix(const TowerPresentation& p) {
  validate(p);
  IntMatrix m;
  for (int i = 1; i < p.n; ++i) {
    for (int j = i + 1; j <= p.n; ++j) {
      std::vector<Int> row(p.n, Int(0));
      row[j - 1] = Int(p.eps(i, j) - 1);
      for (int k = j + 1; k <= p.n; ++k) row[k - 1] = p.tail_entry(i, j, k);
      m.push_back(std::move(row));
    }
  }
  return m;
}

// Diagonal of the Smith normal form: nonnegative, divisor chain, zeros last.
// Exact integer elementary operations with pivot selection by minimal
// absolute value, which keeps entries small at this scale.
inline std::vector<Int> smith_diagonal(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  const int steps = std::min(rows, cols);
  std::vector<Int> diag;

  for (int s = 0; s < steps; ++s) {
    for (;;) {
      // locate minimal nonzero |entry| in the trailing submatrix
      int pi = -1, pj = -1;
      for (int i = s; i < rows; ++i)
        for (int j = s; j < cols; ++j)
          if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // trailing submatrix is zero
      std::swap(m[s], m[pi]);
      for (int i = 0; i < rows; ++i) std::swap(m[i][s], m[i][pj]);

      bool clean = true;
      for (int i = s + 1; i < rows; ++i) {
        if (m[i][s] == 0) continue;
        Int q = m[i][s] / m[s][s];
        for (int j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
        if (m[i][s] != 0) clean = false;  // remainder became the new minimum
      }
      for (int j = s + 1; j < cols; ++j) {
        if (m[s][j] == 0) continue;
        Int q = m[s][j] / m[s][s];
        for (int i = 0; i < rows; ++i) m[i][j] -= q * m[i][s];
        if (m[s][j] != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix for the divisor chain
      bool divides = true;
      for (int i = s + 1; i < rows && divides; ++i)
        for (int j = s + 1; j < cols && divides; ++j)
          if (m[i][j] % m[s][s] != 0) {
            for (int jj = s; jj < cols; ++jj) m[s][jj] += m[i][jj];
            divides = false;
          }
      if (divides) break;
    }
    if (m[s][s] == 0) break;
    diag.push_back(abs(m[s][s]));
  }
  return diag;
}

// Invariants of Z^n modulo the row space of the relation matrix (the
// abelianization is well-defined whether or not the data is consistent).
inline AbelianInvariants abelianization(const TowerPresentation& p) {
  auto diag = smith_diagonal(relation_matrix(p));
  AbelianInvariants inv;
  inv.free_rank = p.n - static_cast<int>(diag.size());
  for (auto& d : diag)
    if (d >= 2) inv.torsion.push_back(std::move(d));
  return inv;
}

inline bool is_prime(const Int& q) {
  if (q < 2) return false;
  if (q < 4) return true;
  return boost::multiprecision::miller_rabin_test(q, 32);
}

// First Betti number with Z_q coefficients: n minus the rank of the relation
// matrix over the field with q elements.
inline int b1_mod_p(const TowerPresentation& p, const Int& q) {
  if (!is_prime(q)) throw NotPrimeError(q.str() + " is not prime");
  IntMatrix m = relation_matrix(p);
  auto norm = [&](const Int& x) { return ((x % q) + q) % q; };
  for (auto& row : m)
    for (auto& x : row) x = norm(x);

  const int rows = static_cast<int>(m.size());
  const int cols = p.n;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // inverse mod q by Fermat
    Int inv = boost::multiprecision::powm(m[rank][col], q - 2, q);
    for (int j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv % q;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Int f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] = norm(m[i][j] - f * m[rank][j]);
    }
    ++rank;
  }
  return p.n - rank;
}

}  // namespace towerpc
