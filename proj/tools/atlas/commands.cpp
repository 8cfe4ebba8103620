#include "commands.hpp"

#include <iostream>
#include <sstream>

#include "cuspatlas/serialize.hpp"

namespace atlas {

using namespace cuspatlas;

namespace {

json report(const std::string& command, json inputs, json results, std::vector<std::string> provenance) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"provenance", std::move(provenance)},
              {"version", CUSPATLAS_VERSION}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::int64_t> parse_ints(const std::string& s, char sep) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.empty()) throw DomainError("malformed list: " + s);
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw DomainError("malformed number: " + tok);
    out.push_back(v);
  }
  return out;
}

std::vector<CuspType> parse_cusps(const std::string& s) {
  std::vector<CuspType> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    auto pq = parse_ints(tok, ',');
    if (pq.size() != 2) throw DomainError("cusp must be p,q: " + tok);
    out.push_back(CuspType::make(pq[0], pq[1]));
  }
  if (out.empty()) throw DomainError("empty cusp list");
  return out;
}

CapRecipe recipe_of(const CapSelection& sel) {
  if (sel.family == "A") return CapRecipe::A(sel.p);
  if (sel.family == "B") return CapRecipe::B(sel.p);
  if (sel.family == "E3") return CapRecipe{CapFamily::E3, 0, {}, 0, {}};
  if (sel.family == "E6") return CapRecipe{CapFamily::E6, 0, {}, 0, {}};
  if (sel.family == "combo") {
    CuspCombo c = CuspCombo::make(parse_cusps(sel.cusps), sel.degree);
    if (!c.genus_balanced()) throw DomainError("combo is not genus-balanced: " + c.str());
    auto r = cap_recipe_for(c);
    if (!r) throw DomainError("no cap for " + c.str() + ": minimal resolution weight is below 1");
    return *r;
  }
  throw DomainError("unknown cap family: " + sel.family);
}

json selection_json(const CapSelection& sel) {
  json j{{"family", sel.family}};
  if (sel.family == "A" || sel.family == "B") j["p"] = sel.p;
  if (sel.family == "combo") {
    j["cusps"] = sel.cusps;
    j["degree"] = sel.degree;
  }
  return j;
}

void print_graph(const PlumbingGraph& g) {
  for (const auto& v : g.vertices)
    std::cout << "  v" << v.id << " euler " << v.euler << (g.root == v.id ? " (root)" : "") << "  " << v.label << "\n";
  for (const auto& e : g.edges) std::cout << "  v" << e.u << " -- v" << e.v << (e.mult > 1 ? " x" + std::to_string(e.mult) : "") << "\n";
}

std::string form_text(const GramForm& f) {
  std::ostringstream os;
  os << "rank " << f.rank() << ", det " << f.det << ", " << f.parity();
  if (f.rank() > 0 && f.rank() <= 4) {
    os << ", [";
    for (std::size_t i = 0; i < f.matrix.size(); ++i) {
      os << (i ? ";" : "");
      for (std::size_t j = 0; j < f.matrix[i].size(); ++j) os << (j ? "," : "") << f.matrix[i][j];
    }
    os << "]";
  }
  return os.str();
}

}  // namespace

int cmd_invariants(const Output& out, std::optional<long long> p, std::optional<long long> q, const std::string& seq) {
  json inputs;
  std::optional<CuspType> c;
  if (!seq.empty()) {
    MultSeq s = parse_ints(seq, ',');
    inputs["seq"] = s;
    c = ms_recognize(s);
    if (!c) {
      if (out.json)
        emit(report("invariants", inputs, json{{"status", "NotRealizable"}},
                    {"one Puiseux pair multiplicity sequences come from the subtractive Euclidean algorithm"}));
      else
        std::cout << "multiplicity sequence " << to_string(s) << ": NotRealizable\n";
      return 2;
    }
  } else {
    if (!p || !q) throw DomainError("invariants needs p q or --seq");
    c = CuspType::make(*p, *q);
    inputs["p"] = *p;
    inputs["q"] = *q;
  }
  const auto nc = nc_resolution(*c);
  json r{{"cusp", *c},
         {"mult_seq", mult_seq(*c)},
         {"delta", delta(*c)},
         {"milnor", 2 * delta(*c)},
         {"legs", {cf_expand(c->p, c->p - inverse_mod(c->q, c->p)), cf_expand(c->q, c->q - inverse_mod(c->p, c->q))}},
         {"nc_vertices", nc.size()}};
  if (out.json) {
    emit(report("invariants", inputs, r, {"delta is half the sum of m(m-1) over the multiplicity sequence"}));
  } else {
    std::cout << "cusp " << c->str() << "\n  mult_seq " << to_string(mult_seq(*c)) << "\n  delta " << delta(*c)
              << "\n  nc resolution vertices " << nc.size() << "\n";
  }
  return 0;
}

int cmd_resolve(const Output& out, const std::string& cusps, long long s) {
  auto cs = parse_cusps(cusps);
  PlumbingGraph g = curve_resolution(cs, s);
  if (out.dot) {
    std::cout << to_dot(g);
  } else if (out.json) {
    emit(report("resolve", json{{"cusps", cs}, {"s", s}},
                json{{"graph", g}, {"proper_transform_weight", g.vertices[0].euler}},
                {"proper transform weight is s minus the sum of pq"}));
  } else {
    std::cout << "proper transform weight " << g.vertices[0].euler << "\n";
    print_graph(g);
  }
  return 0;
}

int cmd_cap(const Output& out, const CapSelection& sel) {
  Cap cap = build_cap(recipe_of(sel));
  if (out.dot) {
    std::cout << to_dot(cap.graph);
  } else if (out.json) {
    emit(report("cap", selection_json(sel), cap, {"cap recipes blow up until the curve is a +1 sphere"}));
  } else {
    std::cout << cap.recipe.str() << ": " << cap.graph.size() << " vertices, " << cap.blowups << " blow-ups\n";
    print_graph(cap.graph);
  }
  return 0;
}

int cmd_embed(const Output& out, const CapSelection& sel, unsigned threads) {
  Cap cap = build_cap(recipe_of(sel));
  EnumStats st;
  auto embs = enumerate_embeddings(cap.graph, EnumOptions{threads, true}, &st);
  const int root = *cap.graph.root;
  if (out.json) {
    json arr = json::array();
    for (const auto& e : embs) {
      arr.push_back(json{{"embedding", e},
                         {"ambient", ambient(e, cap.blowups, root)},
                         {"filling_form", complement_form(e)},
                         {"lattice_index", big_to_json(lattice_index(e))}});
    }
    emit(report("embed", selection_json(sel),
                json{{"cap", cap.recipe.str()}, {"blowups", cap.blowups}, {"count", embs.size()}, {"embeddings", arr},
                     {"search_nodes", st.nodes}},
                {"the +1 sphere is a line; classes obey sphere adjunction, the intersection matrix and area positivity"}));
  } else {
    std::cout << cap.recipe.str() << ": " << embs.size() << " embeddings (" << st.nodes << " search nodes)\n";
    for (std::size_t i = 0; i < embs.size(); ++i) {
      const auto& e = embs[i];
      auto a = ambient(e, cap.blowups, root);
      std::cout << "#" << i << " n_used " << e.n_used << ", ambient " << a.str() << "\n";
      for (std::size_t v = 0; v < e.classes.size(); ++v)
        std::cout << "    v" << v << " (" << cap.graph.vertices[v].euler << "): " << e.classes[v].str() << "\n";
      std::cout << "    filling form: " << form_text(complement_form(e)) << "\n";
      std::cout << "    ambient form: " << form_text(a.form) << "\n";
    }
  }
  return embs.empty() ? 2 : 0;
}

int cmd_blowdown(const Output& out, const CapSelection& sel) {
  Cap cap = build_cap(recipe_of(sel));
  auto embs = enumerate_embeddings(cap.graph);
  json arr = json::array();
  bool all_obstructed = !embs.empty();
  for (std::size_t i = 0; i < embs.size(); ++i) {
    auto f = blow_down_trace(cap.graph, embs[i]);
    auto c = catalog_lookup(f);
    auto a = ambient(embs[i], cap.blowups, *cap.graph.root);
    if (c.status != CatalogStatus::Obstructed) all_obstructed = false;
    if (out.json) {
      arr.push_back(json{{"embedding", embs[i]}, {"ambient", a.str()}, {"fingerprint", f}, {"catalog", c}});
    } else {
      std::cout << "#" << i << " " << a.str() << ": " << f.summary() << "\n    " << to_string(c.status) << " ("
                << c.name << ")\n";
    }
  }
  if (out.json)
    emit(report("blowdown", selection_json(sel), json{{"cap", cap.recipe.str()}, {"traces", arr}},
                {"exceptional spheres are blown down one index at a time; auxiliary spheres are generic"}));
  return all_obstructed ? 2 : 0;
}

int cmd_classify(const Output& out, int degree, unsigned threads) {
  auto recs = classify_degree(degree, PipelineOptions{threads});
  std::map<std::string, int> tally;
  for (const auto& r : recs) ++tally[r.final_status.str()];
  if (out.json) {
    emit(report("classify", json{{"degree", degree}}, json{{"count", recs.size()}, {"tally", tally}, {"records", recs}},
                {"semigroup distribution, Riemann-Hurwitz for projections, K3 lattice bound for simple sextics",
                 "adjunctive embeddings of caps and blow-down to catalogued configurations"}));
  } else {
    std::cout << recs.size() << " combos of degree " << degree << "\n";
    for (const auto& r : recs) {
      std::string cusps;
      for (std::size_t i = 0; i < r.combo.cusps.size(); ++i) cusps += (i ? "+" : "") + r.combo.cusps[i].str();
      std::cout << "  " << cusps << ": " << r.final_status.str();
      std::string fails;
      for (const auto& v : r.verdicts)
        if (v.failed()) fails += (fails.empty() ? "" : ", ") + to_string(v.rule);
      std::cout << "  [" << r.embeddings.size() << " embeddings";
      if (!fails.empty()) std::cout << "; fails " << fails;
      std::cout << "]\n";
    }
    for (const auto& [k, n] : tally) std::cout << "  " << k << ": " << n << "\n";
  }
  return 0;
}

int cmd_lens(const Output& out, long long p, long long q) {
  LensSpace L = LensSpace::make(p, q);
  json r = lens_report(L);
  if (out.json) {
    emit(report("lens", json{{"p", p}, {"q", q}}, r,
                {"fillings correspond to zero strings bounded by the chain of p/(p-q)"}));
  } else {
    std::cout << "L(" << p << "," << q << ") chain " << to_string(L.chain()) << "\n";
    for (const auto& s : filling_strings(L)) std::cout << "  " << to_string(s.m) << " excess " << s.excess << "\n";
    if (auto b = rational_ball_string(L))
      std::cout << "  rational ball: " << to_string(b->m) << " lowered index " << b->lowered << "\n";
    if (auto w = wahl_family(L)) std::cout << "  Wahl family (m,k) = (" << w->first << "," << w->second << ")\n";
  }
  return 0;
}

namespace {

json unicuspidal_entry(const FamilyMember& m, bool text) {
  json j = m;
  CuspCombo combo = CuspCombo::make({m.cusp}, m.degree);
  if (m.family == UnicuspidalFamily::FibonacciOdd) {
    const auto j0 = unsigned(m.param);
    const auto a = fib(j0), b = fib(j0 - 2);
    LensSpace L = LensSpace::make((a * a).convert_to<std::int64_t>(), (b * b).convert_to<std::int64_t>());
    j["boundary"] = {{"p", L.p}, {"q", L.q}};
    if (auto w = wahl_family(L)) j["wahl"] = {{"m", w->first}, {"k", w->second}};
    if (text) {
      std::cout << "    boundary L(" << L.p << "," << L.q << ")";
      if (auto w = wahl_family(L)) std::cout << ", Wahl (" << w->first << "," << w->second << ")";
      std::cout << "\n";
    }
  }
  auto recipe = cap_recipe_for(combo);
  if (!recipe) {
    j["cap"] = nullptr;
    if (text) std::cout << "    no cap\n";
    return j;
  }
  Cap cap = build_cap(*recipe);
  auto embs = enumerate_embeddings(cap.graph);
  json arr = json::array();
  for (const auto& e : embs) {
    auto a = ambient(e, cap.blowups, *cap.graph.root);
    json ej{{"embedding", e}, {"ambient", a.str()}, {"k", a.k}};
    if (text) std::cout << "    " << a.str() << " (n_used " << e.n_used << ")\n";
    if (m.family == UnicuspidalFamily::FourPMinusOne && a.kind == AmbientKind::SphereProduct) {
      // A square -4 sphere in the leftover lattice: blowing it down rationally
      // turns the even embedding back into the plane case.
      for (auto b : complement_form(e).basis) {
        if (pairing(b, b) != -4) continue;
        const std::int64_t lead = b.a0 != 0 ? b.a0 : b.coeffs.begin()->second;
        if (lead < 0) b = -1 * b;
        ej["rational_blowdown"] = b.str();
        if (text) std::cout << "      rational blow-down of the -4 class " << b.str() << "\n";
        break;
      }
    }
    arr.push_back(ej);
  }
  j["cap"] = recipe->str();
  j["embeddings"] = arr;
  if (text) std::cout << "    " << embs.size() << " embeddings\n";
  return j;
}

}  // namespace

int cmd_unicuspidal(const Output& out, int degree, const std::string& family, long long p) {
  std::vector<FamilyMember> members;
  json inputs;
  if (degree > 0) {
    members = unicuspidal_families(degree);
    inputs["degree"] = degree;
  } else if (family == "A" || family == "B") {
    if (p < 2) throw DomainError("--p must be >= 2");
    const int d = int(family == "A" ? p + 1 : 2 * p);
    for (const auto& m : unicuspidal_families(d))
      if ((family == "A") == (m.family == UnicuspidalFamily::Consecutive) &&
          (m.family == UnicuspidalFamily::Consecutive || m.family == UnicuspidalFamily::FourPMinusOne))
        members.push_back(m);
    inputs = {{"family", family}, {"p", p}};
  } else if (family == "E3" || family == "E6") {
    for (const auto& m : unicuspidal_families(family == "E3" ? 8 : 16))
      if (m.family == (family == "E3" ? UnicuspidalFamily::Sporadic8 : UnicuspidalFamily::Sporadic16))
        members.push_back(m);
    inputs = {{"family", family}};
  } else {
    throw DomainError("unicuspidal needs --degree or --family A|B|E3|E6");
  }
  json arr = json::array();
  for (const auto& m : members) {
    if (!out.json) std::cout << m.cusp.str() << " degree " << m.degree << " family " << family_name(m.family) << "\n";
    arr.push_back(unicuspidal_entry(m, !out.json));
  }
  if (out.json)
    emit(report("unicuspidal", inputs, arr,
                {"unicuspidal curves with a one pair cusp and a +1 cap fall into six families",
                 "odd Fibonacci members bound L(F_j^2, F_{j-2}^2), which lies in the Wahl family"}));
  return 0;
}

}  // namespace atlas
