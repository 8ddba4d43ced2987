#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorbit/roots.hpp"

namespace nilorbit {

// Element of the hyperoctahedral group on {-n..-1, 1..n}: a bijection w with
// w(-i) = -w(i), stored by the images of 1..n. Plain permutations (family A)
// live in the same container with no sign changes; family D restricts to an
// even number of sign changes. Operations take the root system explicitly.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    if (n == 0) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : img_) {
      int a = v < 0 ? -v : v;
      if (a < 1 || a > n || seen[static_cast<size_t>(a - 1)])
        throw std::invalid_argument("not a signed permutation");
      seen[static_cast<size_t>(a - 1)] = true;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
    return SignedPermutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }

  int apply(int i) const {
    if (i == 0 || i < -size() || i > size())
      throw std::invalid_argument("index out of range");
    return i > 0 ? img_[static_cast<size_t>(i - 1)]
                 : -img_[static_cast<size_t>(-i - 1)];
  }
  int operator()(int i) const { return apply(i); }

  // (w.compose(v))(i) = w(v(i)).
  SignedPermutation compose(const SignedPermutation& v) const {
    if (v.size() != size()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 1; i <= size(); ++i)
      img[static_cast<size_t>(i - 1)] = apply(v.apply(i));
    return SignedPermutation(std::move(img));
  }

  SignedPermutation inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= size(); ++i) {
      int v = apply(i);
      if (v > 0)
        img[static_cast<size_t>(v - 1)] = i;
      else
        img[static_cast<size_t>(-v - 1)] = -i;
    }
    return SignedPermutation(std::move(img));
  }

  int sign_change_count() const {
    int c = 0;
    for (int v : img_)
      if (v < 0) ++c;
    return c;
  }

  bool is_identity() const { return *this == identity(size()); }
  bool is_involution() const { return compose(*this).is_identity(); }

  const std::vector<int>& images() const { return img_; }

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (size_t k = 0; k < img_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(img_[k]);
    }
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

// Reflection in a root, as a signed permutation of the root's coordinates.
inline SignedPermutation reflection(const Root& a) {
  RootShape s = classify(a);
  SignedPermutation w = SignedPermutation::identity(a.dim());
  std::vector<int> img = w.images();
  auto set = [&](int i, int v) { img[static_cast<size_t>(i - 1)] = v; };
  switch (s.kind) {
    case RootKind::diff:
      set(s.i, s.j);
      set(s.j, s.i);
      break;
    case RootKind::sum:
      set(s.i, -s.j);
      set(s.j, -s.i);
      break;
    case RootKind::single:
    case RootKind::twice:
      set(s.j, -s.j);
      break;
    case RootKind::none:
      throw std::invalid_argument("reflection of a non-root");
  }
  return SignedPermutation(std::move(img));
}

inline Root act_on_root(const SignedPermutation& w, const Root& r) {
  if (w.size() != r.dim()) throw std::invalid_argument("size mismatch");
  std::vector<int> c(static_cast<size_t>(r.dim()), 0);
  for (int k = 1; k <= r.dim(); ++k) {
    int v = r.coeff(k);
    if (v == 0) continue;
    int img = w.apply(k);
    if (img > 0)
      c[static_cast<size_t>(img - 1)] += v;
    else
      c[static_cast<size_t>(-img - 1)] -= v;
  }
  return Root(std::move(c));
}

inline bool is_in_weyl_group(const RootSystemType& t, const SignedPermutation& w) {
  if (w.size() != t.coord_dim()) return false;
  switch (t.family) {
    case Family::A: return w.sign_change_count() == 0;
    case Family::D: return w.sign_change_count() % 2 == 0;
    case Family::B:
    case Family::C: return true;
  }
  return false;
}

// Coxeter length: inversions of w over the positive roots.
inline int length(const RootSystemType& t, const SignedPermutation& w) {
  if (!is_in_weyl_group(t, w))
    throw std::invalid_argument("element not in the Weyl group of " + t.to_string());
  int l = 0;
  for (const Root& a : positive_roots(t))
    if (classify(act_on_root(w, a)).negative) ++l;
  return l;
}

// Iterative lifting-property comparison. At each step strip one left descent
// of w; u descends along when it shares the descent.
inline bool bruhat_leq(const RootSystemType& t, const SignedPermutation& u_in,
                       const SignedPermutation& w_in) {
  if (!is_in_weyl_group(t, u_in) || !is_in_weyl_group(t, w_in))
    throw std::invalid_argument("element not in the Weyl group of " + t.to_string());
  if (u_in == w_in) return true;
  if (length(t, u_in) > length(t, w_in)) return false;
  SignedPermutation u = u_in, w = w_in;
  const std::vector<Root> delta = simple_roots(t);
  while (!w.is_identity()) {
    if (u == w) return true;
    SignedPermutation winv = w.inverse();
    const Root* desc = nullptr;
    for (const Root& a : delta) {
      if (classify(act_on_root(winv, a)).negative) {
        desc = &a;
        break;
      }
    }
    if (desc == nullptr) throw std::logic_error("non-identity element without descent");
    SignedPermutation s = reflection(*desc);
    if (classify(act_on_root(u.inverse(), *desc)).negative) u = s.compose(u);
    w = s.compose(w);
  }
  return u.is_identity();
}

// Product of the commuting reflections in a set of pairwise disjoint or
// strongly orthogonal roots.
inline SignedPermutation involution_of_set(const RootSystemType& t,
                                           const std::vector<Root>& S) {
  for (size_t x = 0; x < S.size(); ++x) {
    if (!is_root(S[x], t))
      throw std::invalid_argument("set contains a non-root: " + S[x].to_string());
    for (size_t y = x + 1; y < S.size(); ++y)
      if (!is_disjoint(S[x], S[y]) && !is_strongly_orthogonal(S[x], S[y], t))
        throw std::invalid_argument("set is not commuting: " + S[x].to_string() +
                                    " vs " + S[y].to_string());
  }
  SignedPermutation w = SignedPermutation::identity(t.coord_dim());
  for (const Root& a : S) w = w.compose(reflection(a));
  return w;
}

// Canonical decomposition of an involution into reflections with pairwise
// disjoint supports. Sign flips decode as e_i for families B and D (for D the
// short shapes live in the ambient B lattice) and as 2e_i for family C.
inline std::vector<Root> disjoint_reflection_decomposition(
    const RootSystemType& t, const SignedPermutation& s) {
  if (!s.is_involution()) throw std::invalid_argument("not an involution");
  int n = s.size();
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) {
    int v = s.apply(i);
    if (v == i) continue;
    if (v == -i) {
      if (t.family == Family::A)
        throw std::invalid_argument("sign change outside families B/C/D");
      out.push_back(t.family == Family::C ? Root::twice(n, i) : Root::single(n, i));
      continue;
    }
    int a = v < 0 ? -v : v;
    if (a < i) continue;  // mirror of an earlier pair
    out.push_back(v > 0 ? Root::diff(n, i, a) : Root::sum(n, i, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Longest element of the standard parabolic generated by all simple roots
// except the deleted one. Greedy ascent: extend by any simple reflection that
// still lengthens. It is an involution of length |R+ of the subsystem|.
inline SignedPermutation longest_parabolic(const NilradicalId& id) {
  const RootSystemType& t = id.type;
  std::vector<Root> delta;
  for (const Root& a : simple_roots(t))
    if (a != id.simple) delta.push_back(a);
  SignedPermutation w = SignedPermutation::identity(t.coord_dim());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Root& a : delta) {
      if (!classify(act_on_root(w, a)).negative) {
        w = w.compose(reflection(a));
        grew = true;
      }
    }
  }
  return w;
}

inline SignedPermutation conjugate_by(const SignedPermutation& w,
                                      const SignedPermutation& s) {
  return w.compose(s).compose(w);
}

// Embedding of the hyperoctahedral group into S_2n: position n+i carries the
// image of i, position n+1-i its mirror, with values folded the same way.
inline std::vector<int> doubled_permutation(const SignedPermutation& w) {
  int n = w.size();
  auto fold = [n](int v) { return v > 0 ? n + v : n + 1 + v; };
  std::vector<int> out(static_cast<size_t>(2 * n), 0);
  for (int i = 1; i <= n; ++i) {
    out[static_cast<size_t>(n + i - 1)] = fold(w.apply(i));
    out[static_cast<size_t>(n - i)] = fold(-w.apply(i));
  }
  return out;
}

inline int inversion_count(const std::vector<int>& one_line) {
  int inv = 0;
  for (size_t a = 0; a < one_line.size(); ++a)
    for (size_t b = a + 1; b < one_line.size(); ++b)
      if (one_line[a] > one_line[b]) ++inv;
  return inv;
}

inline std::vector<SignedPermutation> enumerate_weyl_group(
    const RootSystemType& t, size_t safety_cap = 2000000) {
  std::vector<SignedPermutation> gens;
  for (const Root& a : simple_roots(t)) gens.push_back(reflection(a));
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(t.coord_dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const SignedPermutation& w : frontier)
      for (const SignedPermutation& s : gens) {
        SignedPermutation v = w.compose(s);
        if (seen.insert(v).second) {
          if (seen.size() > safety_cap)
            throw std::length_error("Weyl group enumeration exceeds cap");
          next.push_back(std::move(v));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Independent Bruhat oracle: enumerates the full group, takes covers
// w < w.s_beta with length difference one, and stores reachability bitsets.
// Intended for small ranks only.
class BruhatCoverOracle {
 public:
  explicit BruhatCoverOracle(const RootSystemType& t) : t_(t) {
    elems_ = enumerate_weyl_group(t);
    size_t n = elems_.size();
    for (size_t k = 0; k < n; ++k) index_[elems_[k]] = k;
    lengths_.resize(n);
    for (size_t k = 0; k < n; ++k) lengths_[k] = length(t, elems_[k]);

    std::vector<size_t> order(n);
    for (size_t k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return lengths_[a] > lengths_[b]; });

    std::vector<SignedPermutation> refl;
    for (const Root& b : positive_roots(t)) refl.push_back(reflection(b));

    size_t words = (n + 63) / 64;
    up_.assign(n, std::vector<uint64_t>(words, 0));
    for (size_t k : order) {
      up_[k][k / 64] |= uint64_t(1) << (k % 64);
      for (const SignedPermutation& s : refl) {
        SignedPermutation v = elems_[k].compose(s);
        size_t vi = index_.at(v);
        if (lengths_[vi] == lengths_[k] + 1)
          for (size_t wd = 0; wd < words; ++wd) up_[k][wd] |= up_[vi][wd];
      }
    }
  }

  size_t order() const { return elems_.size(); }
  const std::vector<SignedPermutation>& elements() const { return elems_; }

  bool leq(const SignedPermutation& u, const SignedPermutation& w) const {
    size_t ui = index_.at(u), wi = index_.at(w);
    return (up_[ui][wi / 64] >> (wi % 64)) & 1;
  }

 private:
  RootSystemType t_;
  std::vector<SignedPermutation> elems_;
  std::map<SignedPermutation, size_t> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<uint64_t>> up_;
};

}  // namespace nilorbit
