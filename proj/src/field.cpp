// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#include "pdescent/field.hpp"

#include <cctype>
#include <utility>

namespace pdescent {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidOperand: return "invalid-operand";
    case ErrorCode::NotANorm: return "not-a-norm";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::DegenerateInput: return "degenerate-input";
    case ErrorCode::NotAFrame: return "not-a-frame";
    case ErrorCode::NeedsReduction: return "needs-reduction";
    case ErrorCode::Misuse: return "misuse";
    case ErrorCode::TooSmall: return "too-small";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::UndecidedDegenerate: return "undecided-degenerate";
    case ErrorCode::NotACocycle: return "not-a-cocycle";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InternalError: return "internal-error";
  }
  return "unknown";
}

GaussianRational::GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidOperand, "division by zero");
  Rational n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidOperand, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational conj(const GaussianRational& x) { return {x.re(), -x.im()}; }

Rational norm(const GaussianRational& x) { return x.re() * x.re() + x.im() * x.im(); }

namespace {

// x + yi with x^2 + y^2 = p for a prime p = 1 mod 4, normalised to x > y > 0.
GaussianRational cornacchia_prime(const Integer& p) {
  Integer e = (p - 1) / 4;
  Integer half = (p - 1) / 2;
  Integer root;
  for (Integer c = 2; c < p; ++c) {
    Integer euler;
    mpz_powm(euler.get_mpz_t(), c.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (euler == p - 1) {
      mpz_powm(root.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      break;
    }
  }
  Integer a = p, b = root;
  while (b * b > p) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  Integer x = b;
  Integer y2 = p - x * x;
  Integer y = sqrt(y2);
  if (y * y != y2) throw Error(ErrorCode::InternalError, "cornacchia failed for " + p.get_str());
  if (x < y) std::swap(x, y);
  return {Rational(x), Rational(y)};
}

GaussianRational pow(GaussianRational base, unsigned long e) {
  GaussianRational r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

GaussianRational gaussian_integer_of_norm(const Integer& n_in) {
  if (n_in <= 0) throw Error(ErrorCode::InvalidOperand, "norm target must be positive");
  Integer n = n_in;
  GaussianRational result(1);
  auto take = [&](const Integer& p) {
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e == 0) return;
    if (p == 2) {
      result *= pow(GaussianRational(1, 1), e);
    } else if (p % 4 == 1) {
      result *= pow(cornacchia_prime(p), e);
    } else {
      if (e % 2) throw Error(ErrorCode::NotANorm, p.get_str() + " occurs to odd order");
      result *= pow(GaussianRational(Rational(p)), e / 2);
    }
  };
  take(Integer(2));
  for (Integer d = 3; d * d <= n; d += 2) take(d);
  if (n > 1) take(Integer(n));
  return result;
}

GaussianRational two_squares(const Rational& mu) {
  if (sgn(mu) <= 0) throw Error(ErrorCode::NotANorm, "non-positive rational is not a norm");
  return gaussian_integer_of_norm(mu.get_num()) / gaussian_integer_of_norm(mu.get_den());
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_gq(const GaussianRational& x) {
  std::string s = format_rational(x.re());
  if (x.is_real()) return s;
  if (sgn(x.im()) < 0) {
    s += '-';
    s += format_rational(-x.im());
  } else {
    s += '+';
    s += format_rational(x.im());
  }
  s += 'i';
  return s;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"",
                pos_);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digit");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational unsigned_rational() {
    Integer num(digits());
    Integer den(1);
    if (peek() == '/') {
      advance();
      std::size_t at = pos_;
      den = Integer(digits());
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational rational() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    Rational q = unsigned_rational();
    return negative ? Rational(-q) : q;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Scanner sc(text);
  Rational q = sc.rational();
  if (!sc.done()) sc.fail("unexpected character");
  return q;
}

GaussianRational parse_gq(std::string_view text) {
  Scanner sc(text);
  Rational re = sc.rational();
  Rational im(0);
  if (!sc.done()) {
    char sign = sc.peek();
    if (sign != '+' && sign != '-') sc.fail("expected '+' or '-'");
    sc.advance();
    im = sc.unsigned_rational();
    if (sign == '-') im = -im;
    if (sc.peek() != 'i') sc.fail("expected 'i'");
    sc.advance();
    if (!sc.done()) sc.fail("unexpected character");
  }
  return {re, im};
}

}  // namespace pdescent
