// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

#include "pdescent/error.hpp"

namespace pdescent {

using Integer = mpz_class;
using Rational = mpq_class;

/// An element re + im*i of Q(i), kept with both components in lowest terms so
/// that equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(const Rational& re, const Rational& im = Rational(0));
  template <std::integral T>
  GaussianRational(T re, T im = 0)
      : re_(static_cast<long>(re)), im_(static_cast<long>(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Throws InvalidOperand on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

using GQ = GaussianRational;

GaussianRational conj(const GaussianRational& x);

/// x * conj(x) = re^2 + im^2.
Rational norm(const GaussianRational& x);

/// Returns t with norm(t) == mu. Numerator and denominator are split into
/// Gaussian primes by trial division; each p = 1 mod 4 contributes the
/// Cornacchia solution x + yi with x > y > 0, each 2 contributes 1 + i, and
/// primes p = 3 mod 4 must occur to even order (else NotANorm).
GaussianRational two_squares(const Rational& mu);

/// Gaussian integer z with norm(z) == n, n > 0. Same construction as above.
GaussianRational gaussian_integer_of_norm(const Integer& n);

std::string format_rational(const Rational& q);
std::string format_gq(const GaussianRational& x);

/// Grammar: rational ( ("+"|"-") unsigned-rational "i" )?, rational = ["-"]
/// digits ["/" posint]. The coefficient of i is mandatory ("1+1i").
GaussianRational parse_gq(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace pdescent
