#include "cuspatlas/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cuspatlas {

const Rational& ExtRational::value() const {
  if (infinite_) throw DomainError("value() of infinity");
  return value_;
}

std::string ExtRational::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << boost::multiprecision::numerator(value_);
  if (boost::multiprecision::denominator(value_) != 1) os << '/' << boost::multiprecision::denominator(value_);
  return os.str();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) throw DomainError("inverse_mod: not coprime");
  return ((t0 % m) + m) % m;
}

CFString cf_expand(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw DomainError("cf_expand: entries must be positive");
  if (q >= p) throw DomainError("cf_expand: need q < p");
  if (std::gcd(p, q) != 1) throw DomainError("cf_expand: p and q not coprime");
  CFString out;
  while (q != 0) {
    std::int64_t a = (p + q - 1) / q;
    out.push_back(a);
    std::int64_t r = a * q - p;
    p = q;
    q = r;
  }
  return out;
}

ExtRational cf_eval(const CFString& s) {
  ExtRational v = ExtRational::infinity();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (v.is_infinite())
      v = ExtRational(Rational(*it));
    else if (v.value() == 0)
      v = ExtRational::infinity();
    else
      v = ExtRational(Rational(*it) - 1 / v.value());
  }
  return v;
}

namespace {

// p/q of an expansion with entries >= 2.
std::pair<std::int64_t, std::int64_t> fraction_of(const CFString& s) {
  if (s.empty()) throw DomainError("empty expansion");
  for (auto a : s)
    if (a < 2) throw DomainError("expansion entries must be >= 2");
  ExtRational v = cf_eval(s);
  const Rational& r = v.value();
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return {num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

Rational reciprocal(const ExtRational& v) {
  if (v.is_infinite()) return Rational(0);
  if (v.value() == 0) throw DomainError("reciprocal of zero");
  return 1 / v.value();
}

}  // namespace

CFString cf_dual(const CFString& s) {
  auto [p, q] = fraction_of(s);
  if (q >= p) throw DomainError("cf_dual: not an expansion of p/q > 1");
  return cf_expand(p, p - q);
}

bool are_dual(const CFString& a, const CFString& b) {
  ExtRational va = cf_eval(a), vb = cf_eval(b);
  if (va.is_zero() || vb.is_zero()) return false;
  return reciprocal(va) + reciprocal(vb) == 1;
}

bool is_admissible_zero(const CFString& s) {
  if (s.empty()) return false;
  Rational v = s.back();
  for (std::size_t i = s.size() - 1; i-- > 0;) {
    if (v <= 0) return false;
    v = Rational(s[i]) - 1 / v;
  }
  return v == 0;
}

std::vector<CFString> enumerate_zero_strings(const CFString& n) {
  for (auto x : n)
    if (x < 1) throw DomainError("enumerate_zero_strings: bounds must be >= 1");
  std::vector<CFString> out;
  if (n.empty()) return out;
  const std::size_t len = n.size();
  CFString m(len);
  // Fill from the right; a tail that is not positive can never be extended.
  auto rec = [&](auto&& self, std::size_t k, const Rational* tail) -> void {
    for (std::int64_t x = 1; x <= n[k]; ++x) {
      Rational v = tail ? Rational(x) - 1 / *tail : Rational(x);
      m[k] = x;
      if (k == 0) {
        if (v == 0) out.push_back(m);
      } else if (v > 0) {
        self(self, k - 1, &v);
      }
    }
  };
  rec(rec, len - 1, nullptr);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt fib(unsigned j) {
  BigInt a = 0, b = 1;
  for (unsigned i = 0; i < j; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

std::string to_string(const CFString& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

}  // namespace cuspatlas
