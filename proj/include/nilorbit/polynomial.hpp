#pragma once

#include <string>
#include <vector>

#include "nilorbit/rational.hpp"

namespace nilorbit {

// Dense univariate polynomial over Rational, used for matrix entries that
// depend on one formal parameter (the acceleration coefficient of a
// one-parameter unipotent subgroup). Degrees stay tiny, nothing is sparse.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: scalars convert implicitly
    if (!c.is_zero()) c_.push_back(c);
  }
  Poly(long long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly variable() {
    Poly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
  }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k)
      r.c_[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
  }

  Poly operator*(const Rational& s) const { return *this * Poly(s); }
  Poly operator/(const Rational& s) const { return *this * (Rational(1) / s); }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  bool even_only() const {
    for (size_t k = 1; k < c_.size(); k += 2)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  // Substitutes a^2 := r, so a^(2k) -> r^k and a^(2k+1) -> r^k * a.
  // The result has degree at most 1.
  Poly substitute_square(const Rational& r) const {
    Rational even(0), odd(0), pw(1);
    for (size_t k = 0; k < c_.size(); ++k) {
      if (k >= 2 && k % 2 == 0) pw *= r;
      if (k % 2 == 0)
        even += c_[k] * pw;
      else
        odd += c_[k] * pw;
    }
    Poly p;
    p.c_ = {even, odd};
    p.trim();
    return p;
  }

  std::string to_string(const char* var = "a") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      if (k == 0) {
        s += c_[k].to_string();
      } else {
        if (!(c_[k] == Rational(1))) s += c_[k].to_string() + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace nilorbit
