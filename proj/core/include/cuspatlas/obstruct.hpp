#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspatlas/blowdown.hpp"
#include "cuspatlas/cusp.hpp"
#include "cuspatlas/lattice.hpp"
#include "cuspatlas/plumbing.hpp"

namespace cuspatlas {

enum class Rule { Semigroup, RiemannHurwitz, SexticSimple, NoAdjunctiveEmbedding, BlowdownCatalog, Spectrum, Involutive };
enum class Outcome { Pass, Fail, Disabled };

struct ObstructionVerdict {
  Rule rule = Rule::Semigroup;
  Outcome outcome = Outcome::Pass;
  std::string details;
  std::map<std::string, std::int64_t> witness;  // the checked inequality instance

  bool failed() const { return outcome == Outcome::Fail; }
};

ObstructionVerdict semigroup_verdict(const CuspCombo& combo);
ObstructionVerdict riemann_hurwitz(const CuspCombo& combo);
ObstructionVerdict sextic_simple(const CuspCombo& combo);

struct EmbeddingRecord {
  Embedding embedding;
  AmbientReport ambient;
  GramForm filling_form;  // complement of every class, root included
  ConfigFingerprint fingerprint;
  CatalogEntry catalog;
};

enum class FinalKind { Obstructed, UniqueInPlane, UniqueInBlowup, Unknown };

struct FinalStatus {
  FinalKind kind = FinalKind::Unknown;
  int k = 0;  // UniqueInBlowup only
  std::string str() const;
  friend bool operator==(const FinalStatus&, const FinalStatus&) = default;
};

struct ClassificationRecord {
  CuspCombo combo;
  std::vector<ObstructionVerdict> verdicts;
  std::optional<Cap> cap;
  std::string cap_note;
  std::vector<EmbeddingRecord> embeddings;
  FinalStatus final_status;

  const ObstructionVerdict& verdict(Rule r) const;
};

struct PipelineOptions {
  unsigned threads = 1;  // combos classified concurrently
};

ClassificationRecord run_pipeline(const CuspCombo& combo);
std::vector<ClassificationRecord> classify_degree(int d, const PipelineOptions& opt = {});

std::string to_string(Rule r);
std::string to_string(Outcome o);

}  // namespace cuspatlas
