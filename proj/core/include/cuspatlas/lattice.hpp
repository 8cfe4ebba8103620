#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspatlas/numtheory.hpp"
#include "cuspatlas/plumbing.hpp"

namespace cuspatlas {

// a0 h + sum_i coeffs[i] e_i. Indices are 0-based internally and printed
// 1-based (h - e1 - e2).
struct HClass {
  std::int64_t a0 = 0;
  std::map<int, std::int64_t> coeffs;  // no zero entries

  static HClass h() { return HClass{1, {}}; }
  static HClass e(int i) { return HClass{0, {{i, 1}}}; }
  // -3h + e_0 + ... + e_{n-1}
  static HClass K(int n);

  std::int64_t coeff(int i) const;
  void set(int i, std::int64_t v);
  int max_index() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  std::string str() const;

  friend HClass operator+(const HClass& a, const HClass& b);
  friend HClass operator-(const HClass& a, const HClass& b);
  friend HClass operator*(std::int64_t k, const HClass& a);
  friend bool operator==(const HClass&, const HClass&) = default;
  friend auto operator<=>(const HClass&, const HClass&) = default;
};

std::int64_t pairing(const HClass& x, const HClass& y);

// value -> count over the nonzero e-coefficients
using Profile = std::map<std::int64_t, int>;

std::vector<Profile> adjunction_profiles(std::int64_t a0, std::int64_t s);

// w0 > 0, w_i > 0 on used indices, and area > 0 on every class.
bool area_feasible(const std::vector<HClass>& classes);

struct Embedding {
  std::vector<HClass> classes;  // indexed by vertex id
  int n_used = 0;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct EnumOptions {
  unsigned threads = 1;
  bool use_area = true;
};

struct EnumStats {
  std::uint64_t nodes = 0;  // search nodes visited
  std::uint64_t raw = 0;    // leaves before deduplication
};

std::vector<Embedding> enumerate_embeddings(const PlumbingGraph& g, const EnumOptions& opt = {},
                                            EnumStats* stats = nullptr);

// Checks pairing matrix, adjunction, root class and area. Empty string when valid.
std::string validate_embedding(const PlumbingGraph& g, const Embedding& e);

struct GramForm {
  std::vector<HClass> basis;
  std::vector<std::vector<BigInt>> matrix;
  BigInt det = 1;
  bool even = true;

  int rank() const { return int(basis.size()); }
  std::string parity() const { return even ? "Even" : "Odd"; }
};

// Orthogonal complement of all classes in <h, e_0..e_{N-1}>, N = n_used.
GramForm complement_form(const Embedding& e);
// Orthogonal complement of every class except the root's: the intersection
// form of the blown up plane left over after removing the curve resolution.
GramForm ambient_form(const Embedding& e, int root);

// Index of the span of the classes inside its saturation.
BigInt lattice_index(const Embedding& e);

enum class AmbientKind { Plane, Blowup, SphereProduct };

struct AmbientReport {
  int k = 0;  // blow-ups of the plane beyond the cap's own
  AmbientKind kind = AmbientKind::Plane;
  GramForm form;  // ambient_form
  std::string str() const;
};

AmbientReport ambient(const Embedding& e, int blowups, int root);

}  // namespace cuspatlas
