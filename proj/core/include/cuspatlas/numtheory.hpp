#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuspatlas {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Negative continued fraction [a1,...,ak]^- stored left to right.
using CFString = std::vector<std::int64_t>;

// Q together with a point at infinity, the value set of cf_eval.
class ExtRational {
 public:
  ExtRational() : infinite_(true) {}
  ExtRational(Rational v) : infinite_(false), value_(std::move(v)) {}  // NOLINT
  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;
  bool is_zero() const { return !infinite_ && value_ == 0; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  std::string str() const;

 private:
  bool infinite_;
  Rational value_;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Inverse of a modulo m, in [1, m). Throws if not coprime.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

// Expansion of p/q, p > q >= 1 coprime, entries all >= 2.
CFString cf_expand(std::int64_t p, std::int64_t q);

// Right to left with a - 1/0 = infinity and a - 1/infinity = a. Empty -> infinity.
ExtRational cf_eval(const CFString& s);

// Expansion of p/(p-q) where s expands p/q.
CFString cf_dual(const CFString& s);

// 1/[a] + 1/[b] = 1, with 1/infinity = 0.
bool are_dual(const CFString& a, const CFString& b);

// Strings m with 1 <= m_i <= n_i and [m]^- = 0, where every proper tail
// [m_i,...,m_l] (i >= 2) is strictly positive. Lexicographic order.
std::vector<CFString> enumerate_zero_strings(const CFString& n);

// True when s evaluates to 0 with every proper tail positive.
bool is_admissible_zero(const CFString& s);

BigInt fib(unsigned j);

std::string to_string(const CFString& s);

}  // namespace cuspatlas
