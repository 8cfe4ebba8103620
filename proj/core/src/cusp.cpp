#include "cuspatlas/cusp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cuspatlas/numtheory.hpp"

namespace cuspatlas {

CuspType CuspType::make(std::int64_t a, std::int64_t b) {
  if (a > b) std::swap(a, b);
  if (a < 2) throw DomainError("cusp: multiplicity must be >= 2");
  if (a == b || std::gcd(a, b) != 1) throw DomainError("cusp: (p,q) must be coprime");
  return CuspType{a, b};
}

std::string CuspType::str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

CuspCombo CuspCombo::make(std::vector<CuspType> cusps, int degree) {
  std::sort(cusps.begin(), cusps.end(), std::greater<>());
  return CuspCombo{std::move(cusps), degree};
}

std::int64_t CuspCombo::total_delta() const {
  std::int64_t t = 0;
  for (const auto& c : cusps) t += delta(c);
  return t;
}

bool CuspCombo::genus_balanced() const {
  return 2 * total_delta() == std::int64_t(degree - 1) * (degree - 2);
}

std::string CuspCombo::str() const {
  std::string s;
  for (std::size_t i = 0; i < cusps.size(); ++i) s += (i ? "+" : "") + cusps[i].str();
  return s + " d=" + std::to_string(degree);
}

MultSeq mult_seq(const CuspType& c) {
  MultSeq out;
  std::int64_t p = c.p, q = c.q;
  while (p > 1 && q > 1) {
    std::int64_t m = std::min(p, q);
    out.push_back(m);
    if (p < q)
      q -= p;
    else
      p -= q;
  }
  return out;
}

std::optional<CuspType> ms_recognize(const MultSeq& s) {
  if (s.empty()) return std::nullopt;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 2) return std::nullopt;
    if (i && s[i] > s[i - 1]) return std::nullopt;
  }
  // Undo the subtractive steps: the last state is {m_k, m_k + 1}.
  std::int64_t a = s.back(), b = s.back() + 1;
  for (std::size_t i = s.size() - 1; i-- > 0;) {
    std::int64_t m = s[i];
    if (m != a && m != b) return std::nullopt;
    std::int64_t y = a + b;
    a = m;
    b = y;
  }
  if (std::gcd(a, b) != 1) return std::nullopt;
  CuspType c = CuspType::make(a, b);
  if (mult_seq(c) != s) return std::nullopt;
  return c;
}

std::int64_t delta_from_mult(const MultSeq& s) {
  std::int64_t t = 0;
  for (auto m : s) t += m * (m - 1);
  return t / 2;
}

std::int64_t delta(const CuspType& c) { return delta_from_mult(mult_seq(c)); }

namespace {

std::vector<std::int64_t> counting_table(const CuspType& c, std::int64_t upto) {
  // table[n] = R(n) for 0 <= n <= upto
  std::vector<char> in(std::size_t(std::max<std::int64_t>(upto, 0)) + 1, 0);
  for (std::int64_t a = 0; a * c.p < upto; ++a)
    for (std::int64_t b = 0; a * c.p + b * c.q < upto; ++b) in[std::size_t(a * c.p + b * c.q)] = 1;
  std::vector<std::int64_t> r(in.size(), 0);
  for (std::size_t n = 1; n < r.size(); ++n) r[n] = r[n - 1] + in[n - 1];
  return r;
}

}  // namespace

std::int64_t semigroup_R(const CuspType& c, std::int64_t n) {
  if (n <= 0) return 0;
  return counting_table(c, n)[std::size_t(n)];
}

std::int64_t semigroup_R(const std::vector<CuspType>& cs, std::int64_t n) {
  if (n <= 0 || cs.empty()) return 0;
  // R is nondecreasing and vanishes on n <= 0, so splittings with a part
  // outside [0,n] never beat the ones inside.
  std::vector<std::int64_t> acc = counting_table(cs[0], n);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    auto t = counting_table(cs[i], n);
    std::vector<std::int64_t> next(acc.size());
    for (std::int64_t m = 0; m <= n; ++m) {
      std::int64_t best = acc[std::size_t(m)] + t[0];
      for (std::int64_t k = 0; k <= m; ++k) best = std::min(best, acc[std::size_t(k)] + t[std::size_t(m - k)]);
      next[std::size_t(m)] = best;
    }
    acc = std::move(next);
  }
  return acc[std::size_t(n)];
}

SemigroupResult semigroup_condition(const CuspCombo& combo) {
  const std::int64_t d = combo.degree;
  for (std::int64_t j = -1; j <= d - 2; ++j) {
    std::int64_t n = j * d + 1;
    std::int64_t got = semigroup_R(combo.cusps, n);
    std::int64_t want = (j + 1) * (j + 2) / 2;
    if (got != want) return SemigroupResult{false, int(j), got, want};
  }
  return {};
}

std::vector<CuspCombo> enumerate_combos(int d) {
  if (d < 3) throw DomainError("enumerate_combos: degree must be >= 3");
  const std::int64_t target = std::int64_t(d - 1) * (d - 2) / 2;
  // Candidates in descending (p,q) order; a point of multiplicity p on a
  // degree d curve needs p <= d-1 (intersect with a line through it).
  std::vector<CuspType> cand;
  for (std::int64_t p = 2; p <= d - 1; ++p)
    for (std::int64_t q = p + 1; (p - 1) * (q - 1) / 2 <= target; ++q)
      if (std::gcd(p, q) == 1) cand.push_back(CuspType{p, q});
  std::sort(cand.begin(), cand.end(), std::greater<>());

  std::vector<CuspCombo> out;
  std::vector<CuspType> cur;
  auto rec = [&](auto&& self, std::size_t from, std::int64_t left) -> void {
    if (left == 0) {
      out.push_back(CuspCombo{cur, d});
      return;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      std::int64_t dl = delta(cand[i]);
      if (dl > left) continue;
      cur.push_back(cand[i]);
      self(self, i, left - dl);
      cur.pop_back();
    }
  };
  rec(rec, 0, target);
  return out;
}

std::string family_name(UnicuspidalFamily f) {
  switch (f) {
    case UnicuspidalFamily::Consecutive: return "(p,p+1)";
    case UnicuspidalFamily::FourPMinusOne: return "(p,4p-1)";
    case UnicuspidalFamily::FibonacciOdd: return "(F[j-2],F[j+2])";
    case UnicuspidalFamily::FibonacciSquares: return "(F[j]^2,F[j+2]^2)";
    case UnicuspidalFamily::Sporadic8: return "(3,22)";
    case UnicuspidalFamily::Sporadic16: return "(6,43)";
  }
  return "?";
}

std::vector<FamilyMember> unicuspidal_families(int d) {
  if (d < 3) throw DomainError("unicuspidal_families: degree must be >= 3");
  std::vector<FamilyMember> out;
  auto push = [&](std::int64_t p, std::int64_t q, UnicuspidalFamily f, std::int64_t param) {
    CuspType c = CuspType::make(p, q);
    if ((c.p - 1) * (c.q - 1) != std::int64_t(d - 1) * (d - 2))
      throw std::logic_error("unicuspidal family member fails the genus formula: " + c.str());
    out.push_back(FamilyMember{c, f, d, param});
  };
  push(d - 1, d, UnicuspidalFamily::Consecutive, d - 1);
  if (d % 2 == 0 && d / 2 >= 2) push(d / 2, 2 * d - 1, UnicuspidalFamily::FourPMinusOne, d / 2);
  auto F = [](unsigned j) { return fib(j).convert_to<std::int64_t>(); };
  for (unsigned j = 5; F(j) <= d; j += 2)
    if (F(j) == d) push(F(j - 2), F(j + 2), UnicuspidalFamily::FibonacciOdd, j);
  for (unsigned j = 3; F(j) * F(j + 2) <= d; j += 2)
    if (F(j) * F(j + 2) == d) push(F(j) * F(j), F(j + 2) * F(j + 2), UnicuspidalFamily::FibonacciSquares, j);
  if (d == 8) push(3, 22, UnicuspidalFamily::Sporadic8, 0);
  if (d == 16) push(6, 43, UnicuspidalFamily::Sporadic16, 0);
  return out;
}

}  // namespace cuspatlas
