#include "cuspatlas/serialize.hpp"

namespace cuspatlas {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

void to_json(json& j, const CuspType& c) { j = json::array({c.p, c.q}); }

void to_json(json& j, const CuspCombo& c) {
  j = json{{"cusps", c.cusps}, {"degree", c.degree}, {"total_delta", c.total_delta()}};
  json ms = json::array();
  for (const auto& x : c.cusps) ms.push_back(mult_seq(x));
  j["mult_seqs"] = ms;
}

void to_json(json& j, const FamilyMember& m) {
  j = json{{"cusp", m.cusp}, {"family", family_name(m.family)}, {"degree", m.degree}, {"param", m.param}};
}

void to_json(json& j, const PlumbingGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices) vs.push_back({{"id", v.id}, {"euler", v.euler}, {"label", v.label}});
  for (const auto& e : g.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}});
  j = json{{"vertices", vs}, {"edges", es}};
  j["root"] = g.root ? json(*g.root) : json(nullptr);
  if (g.hollow) j["hollow"] = *g.hollow;
}

void to_json(json& j, const Cap& c) {
  j = json{{"recipe", c.recipe.str()}, {"family", family_name(c.recipe.family)}, {"blowups", c.blowups},
           {"extra", c.extra}, {"graph", c.graph}};
}

void to_json(json& j, const HClass& c) {
  json co = json::object();
  for (const auto& [i, v] : c.coeffs) co[std::to_string(i + 1)] = v;
  j = json{{"a0", c.a0}, {"e", co}, {"text", c.str()}};
}

void to_json(json& j, const Embedding& e) {
  json cs = json::array();
  for (const auto& c : e.classes) cs.push_back(c.str());
  j = json{{"n_used", e.n_used}, {"classes", cs}};
}

void to_json(json& j, const GramForm& f) {
  json m = json::array();
  for (const auto& row : f.matrix) {
    json r = json::array();
    for (const auto& x : row) r.push_back(big_to_json(x));
    m.push_back(r);
  }
  json b = json::array();
  for (const auto& c : f.basis) b.push_back(c.str());
  j = json{{"rank", f.rank()}, {"det", big_to_json(f.det)}, {"parity", f.parity()}, {"matrix", m}, {"basis", b}};
}

void to_json(json& j, const AmbientReport& a) { j = json{{"k", a.k}, {"kind", a.str()}, {"form", a.form}}; }

void to_json(json& j, const ConfigFingerprint& f) {
  json comps = json::array(), cls = json::array(), nodes = json::array();
  for (const auto& c : f.components) comps.push_back({{"curve", c.curve}, {"degree", c.degree}, {"label", c.label}});
  for (const auto& n : f.nodes) {
    json m = json::object();
    for (const auto& [u, x] : n.mult) m[std::to_string(u)] = x;
    nodes.push_back({{"id", n.id}, {"parent", n.parent ? json(*n.parent) : json(nullptr)}, {"mult", m}});
  }
  for (const auto& c : f.clusters) {
    json rm = json::object(), loc = json::array();
    for (const auto& [u, x] : c.root_mult) rm[std::to_string(u)] = x;
    for (const auto& [k, x] : c.local) loc.push_back({k.first, k.second, x});
    cls.push_back({{"root", c.root}, {"root_mult", rm}, {"local", loc}});
  }
  j = json{{"components", comps}, {"clusters", cls}, {"nodes", nodes}, {"steps", f.steps}, {"summary", f.summary()}};
}

void to_json(json& j, const CatalogEntry& c) {
  j = json{{"name", c.name}, {"status", to_string(c.status)}, {"reason", c.reason}, {"provenance", c.provenance}};
}

void to_json(json& j, const ObstructionVerdict& v) {
  j = json{{"rule", to_string(v.rule)}, {"outcome", to_string(v.outcome)}, {"details", v.details},
           {"witness", v.witness}};
}

void to_json(json& j, const EmbeddingRecord& r) {
  j = json{{"embedding", r.embedding},   {"ambient", r.ambient}, {"filling_form", r.filling_form},
           {"fingerprint", r.fingerprint}, {"catalog", r.catalog}};
}

void to_json(json& j, const FinalStatus& s) {
  j = json{{"kind", s.str()}};
  if (s.kind == FinalKind::UniqueInBlowup) j["k"] = s.k;
}

void to_json(json& j, const ClassificationRecord& r) {
  json embs = json::array(), amb = json::array(), fps = json::array();
  for (const auto& e : r.embeddings) {
    embs.push_back(e.embedding);
    json a = e.ambient;
    a["filling_form"] = e.filling_form;
    amb.push_back(a);
    json f = e.fingerprint;
    f["catalog"] = e.catalog;
    fps.push_back(f);
  }
  j = json{{"combo", r.combo},     {"verdicts", r.verdicts},   {"embeddings", embs},
           {"ambients", amb},      {"fingerprints", fps},      {"final_status", r.final_status},
           {"cap", r.cap_note}};
  if (r.cap) j["cap_blowups"] = r.cap->blowups;
}

void to_json(json& j, const LensSpace& L) { j = json{{"p", L.p}, {"q", L.q}, {"q_inv", L.q_inv}}; }

void to_json(json& j, const FillingString& s) { j = json{{"m", s.m}, {"excess", s.excess}}; }

json lens_report(const LensSpace& L) {
  json j{{"p", L.p}, {"q", L.q}, {"chain", L.chain()}, {"strings", filling_strings(L)}};
  if (auto r = rational_ball_string(L))
    j["rational_ball"] = json{{"m", r->m}, {"lowered", r->lowered}};
  else
    j["rational_ball"] = nullptr;
  if (auto w = wahl_family(L))
    j["wahl"] = json{{"m", w->first}, {"k", w->second}};
  else
    j["wahl"] = nullptr;
  return j;
}

}  // namespace cuspatlas
