#pragma once

#include <string>
#include <utility>
#include <vector>

#include "towerpc/errors.hpp"
#include "towerpc/int_types.hpp"
#include "towerpc/normal_form.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

// Exact word arithmetic over a tower presentation: collection from the left
// driven by per-generator conjugation tables.
//
// The presentation's normal series <s_j,...,s_n> makes conjugation by s_i a
// triangular automorphism of the tail subgroup <s_{i+1},...,s_n>: the image
// of s_j is s_j^{+-1} times an element supported strictly above j. The
// positive tables are read off the relations; the negative tables are the
// triangular inverses, solved descending from index n. Both are precomputed
// at construction, so a Collector is immutable afterwards and safe to share
// across threads.
//
// All operations assume the presentation is consistent (see
// consistency_check); on inconsistent data they still terminate but the
// results are meaningless.
class Collector {
 public:
  // Conjugation by a fixed generator power, as a map on the tail subgroup:
  // images[j - level - 1] is the image of s_j for j in level+1..n.
  struct Automorphism {
    int level = 0;
    std::vector<NormalForm> images;

    const NormalForm& image(int j) const { return images[j - level - 1]; }
  };

  explicit Collector(TowerPresentation p) : p_(std::move(p)) {
    validate(p_);
    build_tables();
  }

  const TowerPresentation& presentation() const { return p_; }
  int height() const { return p_.n; }

  NormalForm identity() const { return NormalForm::identity(p_.n); }
  NormalForm generator(int i, Int exp = Int(1)) const {
    return NormalForm::generator(p_.n, i, std::move(exp));
  }

  // Normal form of s_i^sign s_j s_i^-sign, for i < j.
  const NormalForm& conjugate_generator(int i, int sign, int j) const {
    if (sign != 1 && sign != -1) throw IndexError("conjugation sign must be 1 or -1");
    if (i < 1 || j <= i || j > p_.n)
      throw IndexError("conjugate_generator(" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
    return (sign == 1 ? conj_pos_ : conj_neg_)[i - 1].image(j);
  }

  const Automorphism& conjugation(int i, int sign) const {
    if (i < 1 || i >= p_.n) throw IndexError("conjugation level out of range");
    if (sign != 1 && sign != -1) throw IndexError("conjugation sign must be 1 or -1");
    return (sign == 1 ? conj_pos_ : conj_neg_)[i - 1];
  }

  NormalForm multiply(const NormalForm& u, const NormalForm& v) const {
    check_size(u);
    check_size(v);
    const int n = p_.n;
    NormalForm result = identity();
    NormalForm acc = u;  // remaining u-part, support strictly above processed levels
    for (int l = 1; l <= n; ++l) {
      result.e[l - 1] = acc.e[l - 1] + v.e[l - 1];
      if (l == n) break;
      acc.e[l - 1] = 0;
      // s_l^{ul} acc s_l^{vl} v'  ->  s_l^{ul+vl} (s_l^{-vl} acc s_l^{vl}) v'
      if (v.e[l - 1] != 0 && !acc.is_identity())
        acc = apply(conjugation_power(l, -v.e[l - 1]), acc);
    }
    return result;
  }

  NormalForm invert(const NormalForm& u) const {
    check_size(u);
    const int l = u.lowest_support();
    if (l == 0) return identity();
    NormalForm tail = u;
    tail.e[l - 1] = 0;
    if (tail.is_identity()) return generator(l, -u.e[l - 1]);
    // (s_l^e t)^-1 = s_l^-e (s_l^e t^-1 s_l^-e)
    NormalForm res = apply(conjugation_power(l, u.e[l - 1]), invert(tail));
    res.e[l - 1] = -u.e[l - 1];
    return res;
  }

  NormalForm power(const NormalForm& u, const Int& k) const {
    if (k == 0) return identity();
    if (k < 0) return power(invert(u), -k);
    // square and multiply; powers of a single element commute
    NormalForm base = u;
    NormalForm acc = identity();
    Int m = k;
    while (m > 0) {
      if ((m & 1) != 0) acc = multiply(acc, base);
      m >>= 1;
      if (m > 0) base = multiply(base, base);
    }
    return acc;
  }

  NormalForm commutator(const NormalForm& u, const NormalForm& v) const {
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
  }

  // g x g^-1
  NormalForm conjugate(const NormalForm& g, const NormalForm& x) const {
    return multiply(multiply(g, x), invert(g));
  }

  NormalForm evaluate(const GroupWord& w) const {
    NormalForm res = identity();
    for (const auto& s : w.syllables) {
      if (s.gen < 1 || s.gen > p_.n)
        throw IndexError("word generator s" + std::to_string(s.gen) + " out of range");
      res = multiply(res, generator(s.gen, s.exp));
    }
    return res;
  }

  Automorphism identity_automorphism(int level) const {
    Automorphism f;
    f.level = level;
    for (int j = level + 1; j <= p_.n; ++j) f.images.push_back(generator(j));
    return f;
  }

  // f after g, acting on the same tail subgroup.
  Automorphism compose(const Automorphism& f, const Automorphism& g) const {
    detail::internal_check(f.level == g.level, "composed automorphisms at different levels");
    Automorphism h;
    h.level = f.level;
    h.images.reserve(g.images.size());
    for (const auto& img : g.images) h.images.push_back(apply(f, img));
    return h;
  }

  // Conjugation by s_i^k.
  Automorphism conjugation_power(int i, const Int& k) const {
    if (k == 1) return conjugation(i, 1);
    if (k == -1) return conjugation(i, -1);
    Automorphism acc = identity_automorphism(i);
    if (k == 0) return acc;
    Automorphism base = conjugation(i, k > 0 ? 1 : -1);
    Int m = abs(k);
    while (m > 0) {
      if ((m & 1) != 0) acc = compose(acc, base);
      m >>= 1;
      if (m > 0) base = compose(base, base);
    }
    return acc;
  }

  NormalForm apply(const Automorphism& f, const NormalForm& x) const {
    check_size(x);
    detail::internal_check(x.supported_above(f.level),
                           "automorphism applied below its level");
    NormalForm res = identity();
    for (int j = f.level + 1; j <= p_.n; ++j) {
      const Int& ej = x.e[j - 1];
      if (ej == 0) continue;
      res = multiply(res, power(f.image(j), ej));
    }
    return res;
  }

 private:
  void check_size(const NormalForm& u) const {
    if (u.size() != p_.n)
      throw IndexError("normal form of length " + std::to_string(u.size()) +
                       " used with a height-" + std::to_string(p_.n) + " presentation");
  }

  void build_tables() {
    const int n = p_.n;
    if (n < 2) return;
    conj_pos_.resize(n - 1);
    conj_neg_.resize(n - 1);
    // Build top-down: the tables for level i only use tables above i.
    for (int i = n - 1; i >= 1; --i) {
      Automorphism pos;
      pos.level = i;
      pos.images.reserve(n - i);
      for (int j = i + 1; j <= n; ++j) {
        const int e = p_.eps(i, j);
        if (j == n) {
          pos.images.push_back(generator(n, Int(e)));
          continue;
        }
        // relation word: descending tail, then s_j^e
        NormalForm t = identity();
        for (int k = n; k >= j + 1; --k) {
          const Int& a = p_.tail_entry(i, j, k);
          if (a != 0) t = multiply(t, generator(k, a));
        }
        NormalForm img;
        if (t.is_identity()) {
          img = generator(j, Int(e));
        } else {
          // T s_j^e = s_j^e (s_j^-e T s_j^e)
          img = apply(conjugation(j, -e), t);
          img.e[j - 1] = e;
        }
        pos.images.push_back(std::move(img));
      }
      conj_pos_[i - 1] = std::move(pos);

      // Inverse images by back substitution, descending from n: the diagonal
      // entries are +-1, so the triangular system solves over the integers.
      // Everything here is supported strictly above i, so invert() and
      // multiply() only touch tables of higher levels, which are complete.
      Automorphism neg;
      neg.level = i;
      neg.images.assign(n - i, NormalForm());
      for (int j = n; j >= i + 1; --j) {
        const NormalForm& fwd = conj_pos_[i - 1].image(j);
        const int e = p_.eps(i, j);
        NormalForm t = fwd;
        t.e[j - 1] = 0;
        NormalForm psi_t = identity();
        for (int k = j + 1; k <= n; ++k) {
          if (t.e[k - 1] == 0) continue;
          psi_t = multiply(psi_t, power(neg.images[k - i - 1], t.e[k - 1]));
        }
        NormalForm z = multiply(generator(j), invert(psi_t));
        neg.images[j - i - 1] = (e == 1) ? z : invert(z);
      }
      conj_neg_[i - 1] = std::move(neg);
    }
  }

  TowerPresentation p_;
  std::vector<Automorphism> conj_pos_;
  std::vector<Automorphism> conj_neg_;
};

}  // namespace towerpc
