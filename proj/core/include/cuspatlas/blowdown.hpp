#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspatlas/lattice.hpp"
#include "cuspatlas/plumbing.hpp"

namespace cuspatlas {

struct PointNode {
  int id = 0;
  std::optional<int> parent;           // proximity: infinitely near to parent
  std::map<int, std::int64_t> mult;    // curve (vertex id) -> multiplicity
};

struct Component {
  int curve = 0;  // vertex id in the cap graph
  std::int64_t degree = 0;
  std::string label;
};

// A point of the plane together with everything infinitely near to it.
struct Cluster {
  int root = 0;                                          // PointNode id
  std::map<int, std::int64_t> root_mult;                 // curves through the point
  std::map<std::pair<int, int>, std::int64_t> local;     // local intersection, u < v
};

struct ConfigFingerprint {
  std::vector<Component> components;  // ascending curve id
  std::vector<PointNode> nodes;
  std::vector<Cluster> clusters;
  int steps = 0;  // blow-downs performed

  std::int64_t degree_of(int curve) const;
  // Bezout closure: local intersections of every pair sum to deg*deg.
  bool bezout_closed() const;
  // Order independent description, e.g. "deg[1,1,2] {1,2|2} {1,1}".
  std::string summary() const;
};

ConfigFingerprint blow_down_trace(const PlumbingGraph& g, const Embedding& e);

enum class CatalogStatus { Obstructed, UniqueIsotopy, Unknown };

struct CatalogEntry {
  std::string name;
  CatalogStatus status = CatalogStatus::Unknown;
  std::string reason;
  std::string provenance;
};

CatalogEntry catalog_lookup(const ConfigFingerprint& f);

std::string to_string(CatalogStatus s);

}  // namespace cuspatlas
