#include "cuspatlas/obstruct.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cuspatlas {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Semigroup: return "Semigroup";
    case Rule::RiemannHurwitz: return "RiemannHurwitz";
    case Rule::SexticSimple: return "SexticSimple";
    case Rule::NoAdjunctiveEmbedding: return "NoAdjunctiveEmbedding";
    case Rule::BlowdownCatalog: return "BlowdownCatalog";
    case Rule::Spectrum: return "Spectrum";
    case Rule::Involutive: return "Involutive";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "Pass";
    case Outcome::Fail: return "Fail";
    case Outcome::Disabled: return "Disabled";
  }
  return "?";
}

std::string FinalStatus::str() const {
  switch (kind) {
    case FinalKind::Obstructed: return "Obstructed";
    case FinalKind::UniqueInPlane: return "UniqueInPlane";
    case FinalKind::UniqueInBlowup: return "UniqueInBlowup(" + std::to_string(k) + ")";
    case FinalKind::Unknown: return "Unknown";
  }
  return "?";
}

const ObstructionVerdict& ClassificationRecord::verdict(Rule r) const {
  for (const auto& v : verdicts)
    if (v.rule == r) return v;
  throw std::out_of_range("no verdict for rule " + to_string(r));
}

ObstructionVerdict semigroup_verdict(const CuspCombo& combo) {
  ObstructionVerdict v{Rule::Semigroup, Outcome::Pass, "R(jd+1) = (j+1)(j+2)/2 for j = -1..d-2", {}};
  SemigroupResult r = semigroup_condition(combo);
  if (!r.pass) {
    v.outcome = Outcome::Fail;
    v.details = "fails at j=" + std::to_string(r.failing_j) + ": R=" + std::to_string(r.observed) +
                ", expected " + std::to_string(r.expected);
    v.witness = {{"j", r.failing_j}, {"n", std::int64_t(r.failing_j) * combo.degree + 1}, {"R", r.observed},
                 {"expected", r.expected}};
  }
  return v;
}

ObstructionVerdict riemann_hurwitz(const CuspCombo& combo) {
  const std::int64_t d = combo.degree;
  std::vector<MultSeq> ms;
  for (const auto& c : combo.cusps) ms.push_back(mult_seq(c));
  std::int64_t total = 0;
  for (const auto& s : ms) total += s[0] - 1;
  // Projection from a point off the curve.
  if (2 * d - 2 < total) {
    return ObstructionVerdict{Rule::RiemannHurwitz, Outcome::Fail,
                              "projection from a generic point: " + std::to_string(2 * d - 2) + " < " +
                                  std::to_string(total),
                              {{"base", -1}, {"lhs", 2 * d - 2}, {"rhs", total}}};
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::int64_t lhs = 2 * d - 2 * ms[i][0];
    const std::int64_t second = ms[i].size() > 1 ? ms[i][1] : 1;
    const std::int64_t rhs = 2 + (total - (ms[i][0] - 1)) + (second - 1);
    if (lhs < rhs) {
      return ObstructionVerdict{Rule::RiemannHurwitz, Outcome::Fail,
                                "projection from cusp " + combo.cusps[i].str() + ": " + std::to_string(lhs) + " < " +
                                    std::to_string(rhs),
                                {{"base", std::int64_t(i)}, {"lhs", lhs}, {"rhs", rhs}}};
    }
  }
  return ObstructionVerdict{Rule::RiemannHurwitz, Outcome::Pass, "holds at every base", {}};
}

ObstructionVerdict sextic_simple(const CuspCombo& combo) {
  if (combo.degree != 6) return ObstructionVerdict{Rule::SexticSimple, Outcome::Pass, "inapplicable: degree is not 6", {}};
  std::int64_t mu = 0;
  for (const auto& c : combo.cusps) {
    const bool simple = (c.p == 2) || (c.p == 3 && (c.q == 4 || c.q == 5));
    if (!simple)
      return ObstructionVerdict{Rule::SexticSimple, Outcome::Pass, "inapplicable: " + c.str() + " is not simple", {}};
    mu += 2 * delta(c);
  }
  // The double cover branched along the sextic is a K3 surface, whose
  // vanishing cycles span a negative definite lattice of rank sum(mu) <= 19.
  if (mu > 19)
    return ObstructionVerdict{Rule::SexticSimple, Outcome::Fail,
                              "sum of Milnor numbers " + std::to_string(mu) + " > 19",
                              {{"mu", mu}, {"bound", 19}}};
  return ObstructionVerdict{Rule::SexticSimple, Outcome::Pass, "sum of Milnor numbers " + std::to_string(mu),
                            {{"mu", mu}, {"bound", 19}}};
}

ClassificationRecord run_pipeline(const CuspCombo& combo0) {
  ClassificationRecord rec;
  rec.combo = CuspCombo::make(combo0.cusps, combo0.degree);
  if (!rec.combo.genus_balanced()) throw DomainError("run_pipeline: combo is not genus-balanced: " + rec.combo.str());
  rec.verdicts.push_back(semigroup_verdict(rec.combo));
  rec.verdicts.push_back(riemann_hurwitz(rec.combo));
  rec.verdicts.push_back(sextic_simple(rec.combo));
  const bool plane_blocked = std::any_of(rec.verdicts.begin(), rec.verdicts.end(), [](const auto& v) { return v.failed(); });

  if (auto recipe = cap_recipe_for(rec.combo)) {
    rec.cap = build_cap(*recipe);
    rec.cap_note = recipe->str();
  } else {
    rec.cap_note = "no cap: the minimal resolution already has proper-transform weight < 1";
  }

  if (rec.cap) {
    const int root = *rec.cap->graph.root;
    for (auto& e : enumerate_embeddings(rec.cap->graph)) {
      EmbeddingRecord er;
      er.ambient = ambient(e, rec.cap->blowups, root);
      er.filling_form = complement_form(e);
      er.fingerprint = blow_down_trace(rec.cap->graph, e);
      er.catalog = catalog_lookup(er.fingerprint);
      er.embedding = std::move(e);
      rec.embeddings.push_back(std::move(er));
    }
    ObstructionVerdict na{Rule::NoAdjunctiveEmbedding, Outcome::Pass,
                          std::to_string(rec.embeddings.size()) + " adjunctive embeddings", {}};
    if (rec.embeddings.empty()) na.outcome = Outcome::Fail;
    na.witness = {{"embeddings", std::int64_t(rec.embeddings.size())}};
    rec.verdicts.push_back(na);

    ObstructionVerdict bd{Rule::BlowdownCatalog, Outcome::Pass, "", {}};
    std::int64_t obstructed = 0;
    for (const auto& er : rec.embeddings) obstructed += er.catalog.status == CatalogStatus::Obstructed;
    bd.details = std::to_string(obstructed) + " of " + std::to_string(rec.embeddings.size()) +
                 " embeddings blow down to an obstructed configuration";
    if (!rec.embeddings.empty() && obstructed == std::int64_t(rec.embeddings.size())) bd.outcome = Outcome::Fail;
    bd.witness = {{"obstructed", obstructed}};
    rec.verdicts.push_back(bd);
  } else {
    rec.verdicts.push_back({Rule::NoAdjunctiveEmbedding, Outcome::Disabled, "no cap recipe", {}});
    rec.verdicts.push_back({Rule::BlowdownCatalog, Outcome::Disabled, "no cap recipe", {}});
  }
  rec.verdicts.push_back({Rule::Spectrum, Outcome::Disabled, "spectrum semicontinuity is not implemented", {}});
  rec.verdicts.push_back({Rule::Involutive, Outcome::Disabled, "involutive Floer obstructions are not implemented", {}});

  // Each of the three classical gates rules out a plane curve outright.
  if (plane_blocked || !rec.cap) {
    rec.final_status = {plane_blocked ? FinalKind::Obstructed : FinalKind::Unknown, 0};
    return rec;
  }
  int plane_ok = 0, plane_unknown = 0, blow_ok = 0, blow_unknown = 0, blow_k = 0;
  for (const auto& er : rec.embeddings) {
    const auto st = er.catalog.status;
    if (er.ambient.k == 0) {
      plane_ok += st == CatalogStatus::UniqueIsotopy;
      plane_unknown += st == CatalogStatus::Unknown;
    } else {
      if (st == CatalogStatus::UniqueIsotopy) {
        ++blow_ok;
        blow_k = er.ambient.k;
      }
      blow_unknown += st == CatalogStatus::Unknown;
    }
  }
  if (plane_ok == 1 && plane_unknown == 0)
    rec.final_status = {FinalKind::UniqueInPlane, 0};
  else if (plane_ok + plane_unknown > 0)
    rec.final_status = {FinalKind::Unknown, 0};
  else if (blow_ok == 1 && blow_unknown == 0)
    rec.final_status = {FinalKind::UniqueInBlowup, blow_k};
  else if (blow_ok + blow_unknown > 0)
    rec.final_status = {FinalKind::Unknown, 0};
  else
    rec.final_status = {FinalKind::Obstructed, 0};
  return rec;
}

std::vector<ClassificationRecord> classify_degree(int d, const PipelineOptions& opt) {
  const auto combos = enumerate_combos(d);
  std::vector<ClassificationRecord> out(combos.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < combos.size();) out[i] = run_pipeline(combos[i]);
    } catch (...) {
      std::lock_guard lk(err_mu);
      if (!err) err = std::current_exception();
      next = combos.size();
    }
  };
  const unsigned t = std::max(1u, std::min<unsigned>(opt.threads, unsigned(combos.size())));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace cuspatlas
