#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "cuspatlas/numtheory.hpp"

int main(int argc, char** argv) {
  CLI::App app{"atlas: rational cuspidal curve classification tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CUSPATLAS_VERSION);

  atlas::Output out;
  auto add_output = [&](CLI::App* sc, bool dot) {
    sc->add_flag("--json", out.json, "Emit a JSON report");
    if (dot) sc->add_flag("--dot", out.dot, "Emit Graphviz DOT");
  };
  atlas::CapSelection sel;
  auto add_cap = [&](CLI::App* sc) {
    sc->add_option("family", sel.family, "A, B, E3, E6 or combo")->required();
    sc->add_option("p", sel.p, "Parameter for A and B");
    sc->add_option("--cusps", sel.cusps, "Cusp list for combo, e.g. 2,5+2,3");
    sc->add_option("--degree", sel.degree, "Degree for combo");
  };

  std::optional<long long> ip, iq;
  std::string seq;
  auto* inv = app.add_subcommand("invariants", "Cusp invariants from (p,q) or a multiplicity sequence");
  inv->add_option("p", ip);
  inv->add_option("q", iq);
  inv->add_option("--seq", seq, "Multiplicity sequence, e.g. 3,2,2");
  add_output(inv, false);

  std::string rcusps;
  long long s = 0;
  auto* res = app.add_subcommand("resolve", "Normal crossing resolution graph of a curve");
  res->add_option("cusps", rcusps, "Cusp list, e.g. 2,3+2,5")->required();
  res->add_option("--s", s, "Self-intersection of the curve")->required();
  add_output(res, true);

  auto* cap = app.add_subcommand("cap", "Build a cap graph");
  add_cap(cap);
  add_output(cap, true);

  unsigned threads = 1;
  auto* emb = app.add_subcommand("embed", "Enumerate adjunctive embeddings of a cap");
  add_cap(emb);
  emb->add_option("--threads", threads, "Worker threads");
  add_output(emb, false);

  auto* bd = app.add_subcommand("blowdown", "Blow down every embedding of a cap and look up the catalog");
  add_cap(bd);
  add_output(bd, false);

  int degree = 0;
  auto* cls = app.add_subcommand("classify", "Run the obstruction pipeline over every combo of a degree");
  cls->add_option("--degree", degree, "Curve degree")->required();
  cls->add_option("--threads", threads, "Combos classified concurrently");
  add_output(cls, false);

  long long lp = 0, lq = 0;
  auto* lens = app.add_subcommand("lens", "Filling strings of a lens space L(p,q)");
  lens->add_option("p", lp)->required();
  lens->add_option("q", lq)->required();
  add_output(lens, false);

  std::string family;
  long long fp = 0;
  int udeg = 0;
  auto* uni = app.add_subcommand("unicuspidal", "Unicuspidal families and their caps");
  uni->add_option("--degree", udeg, "Curve degree");
  uni->add_option("--family", family, "A or B (with --p), E3 or E6");
  uni->add_option("--p", fp, "Family parameter");
  add_output(uni, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*inv) return atlas::cmd_invariants(out, ip, iq, seq);
    if (*res) return atlas::cmd_resolve(out, rcusps, s);
    if (*cap) return atlas::cmd_cap(out, sel);
    if (*emb) return atlas::cmd_embed(out, sel, threads);
    if (*bd) return atlas::cmd_blowdown(out, sel);
    if (*cls) return atlas::cmd_classify(out, degree, threads);
    if (*lens) return atlas::cmd_lens(out, lp, lq);
    if (*uni) return atlas::cmd_unicuspidal(out, udeg, family, fp);
  } catch (const cuspatlas::DomainError& e) {
    std::cerr << "atlas: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
