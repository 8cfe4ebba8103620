#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cuspatlas/numtheory.hpp"

namespace cuspatlas {

struct LensSpace {
  std::int64_t p = 2;
  std::int64_t q = 1;      // as given
  std::int64_t q_inv = 1;  // q^-1 mod p

  static LensSpace make(std::int64_t p, std::int64_t q);
  std::int64_t canonical_q() const { return q < q_inv ? q : q_inv; }
  // Chain whose zero strings index the fillings: cf_expand(p, p - q).
  CFString chain() const;
};

struct FillingString {
  CFString m;
  std::int64_t excess = 0;  // sum of n_i - m_i, the second Betti number
};

struct RationalBallString {
  CFString m;
  std::size_t lowered = 0;  // 1-based index j with m_j = n_j - 1
};

std::optional<std::pair<std::int64_t, std::int64_t>> wahl_family(const LensSpace& L);
std::vector<FillingString> filling_strings(const LensSpace& L);
std::optional<RationalBallString> rational_ball_string(const LensSpace& L);

}  // namespace cuspatlas
