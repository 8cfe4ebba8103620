#include "cuspatlas/lens.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cuspatlas {

LensSpace LensSpace::make(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1) throw DomainError("lens space needs p >= 2, 0 < q < p coprime");
  return LensSpace{p, q, inverse_mod(q, p)};
}

CFString LensSpace::chain() const { return cf_expand(p, p - q); }

std::optional<std::pair<std::int64_t, std::int64_t>> wahl_family(const LensSpace& L) {
  std::int64_t m = std::int64_t(std::llround(std::sqrt(double(L.p))));
  while (m * m > L.p) --m;
  while ((m + 1) * (m + 1) <= L.p) ++m;
  if (m < 2 || m * m != L.p) return std::nullopt;
  for (std::int64_t r : {L.q, L.q_inv}) {
    if ((r + 1) % m != 0) continue;
    const std::int64_t k = (r + 1) / m;
    if (k > 0 && k <= m && std::gcd(m, k) == 1) return std::pair{m, k};
  }
  return std::nullopt;
}

std::vector<FillingString> filling_strings(const LensSpace& L) {
  const CFString n = L.chain();
  std::vector<FillingString> out;
  for (auto& m : enumerate_zero_strings(n)) {
    std::int64_t ex = 0;
    for (std::size_t i = 0; i < n.size(); ++i) ex += n[i] - m[i];
    out.push_back(FillingString{std::move(m), ex});
  }
  return out;
}

std::optional<RationalBallString> rational_ball_string(const LensSpace& L) {
  const CFString n = L.chain();
  std::optional<RationalBallString> found;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < 2) continue;
    CFString m = n;
    m[j] -= 1;
    if (!is_admissible_zero(m)) continue;
    if (found) throw std::logic_error("rational_ball_string: more than one lowered index");
    if (n[j] != 2) throw std::logic_error("rational_ball_string: lowered entry is not a 2");
    found = RationalBallString{std::move(m), j + 1};
  }
  return found;
}

}  // namespace cuspatlas
