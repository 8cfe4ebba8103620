#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cuspatlas {

// One Puiseux pair cusp with link T(p,q), 2 <= p < q, gcd(p,q) = 1.
struct CuspType {
  std::int64_t p = 2;
  std::int64_t q = 3;

  // Accepts either order; throws DomainError when invalid.
  static CuspType make(std::int64_t a, std::int64_t b);

  friend bool operator==(const CuspType&, const CuspType&) = default;
  friend auto operator<=>(const CuspType&, const CuspType&) = default;
  std::string str() const;
};

using MultSeq = std::vector<std::int64_t>;

struct CuspCombo {
  std::vector<CuspType> cusps;  // sorted by (p,q) descending
  int degree = 0;

  static CuspCombo make(std::vector<CuspType> cusps, int degree);
  std::int64_t total_delta() const;
  bool genus_balanced() const;
  std::string str() const;
  friend bool operator==(const CuspCombo&, const CuspCombo&) = default;
};

MultSeq mult_seq(const CuspType& c);
std::optional<CuspType> ms_recognize(const MultSeq& s);
std::int64_t delta(const CuspType& c);
std::int64_t delta_from_mult(const MultSeq& s);

// #(<p,q> intersect [0,n)); zero for n <= 0.
std::int64_t semigroup_R(const CuspType& c, std::int64_t n);
// Minimum convolution over all splittings n = n_1 + ... + n_r.
std::int64_t semigroup_R(const std::vector<CuspType>& cs, std::int64_t n);

struct SemigroupResult {
  bool pass = true;
  int failing_j = 0;           // meaningful when !pass
  std::int64_t observed = 0;   // R(jd+1) at the failing j
  std::int64_t expected = 0;   // (j+1)(j+2)/2
};
SemigroupResult semigroup_condition(const CuspCombo& combo);

std::vector<CuspCombo> enumerate_combos(int d);

enum class UnicuspidalFamily { Consecutive, FourPMinusOne, FibonacciOdd, FibonacciSquares, Sporadic8, Sporadic16 };

struct FamilyMember {
  CuspType cusp;
  UnicuspidalFamily family;
  int degree = 0;
  std::int64_t param = 0;  // p for the first two families, j for the Fibonacci ones
};

std::vector<FamilyMember> unicuspidal_families(int d);
std::string family_name(UnicuspidalFamily f);

// to_string(MultSeq) is the CFString overload in numtheory.hpp.

}  // namespace cuspatlas
