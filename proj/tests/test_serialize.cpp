#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "lrtwist/serialize.hpp"

using namespace lrtwist;

namespace {

// Document holding one diagonal L-R pair with every block kind it needs.
template <class K>
Json diagonal_pair_document(const K& field, int q_from) {
  LRPair<K> p = diagonal_pair(field, 2, nonzero_scalar(field, q_from));
  Document<K> d(field);
  d.add(algebra_block(p.r.a, "A"));
  d.add(algebra_block(p.r.b, "B"));
  d.add(twisting_map_block(p.r, "R", "A", "B"));
  d.add(qmap_block(p.q, "Q", "A", "B"));
  d.add(lrpair_block("p", "R", "Q"));
  return d.doc;
}

}  // namespace

TEST_CASE("scalar vectors and matrices survive the string round trip", "[serialize]") {
  QQ f;
  std::vector<Rational> v = {f.parse("5/6"), f.parse("-3"), f.zero()};
  Json a = scalars_json<QQ>(v);
  REQUIRE(a.dump() == "[\"5/6\",\"-3\",\"0\"]");
  std::vector<Rational> back = parse_scalars(f, a, 3);
  REQUIRE(back == v);
  REQUIRE_THROWS_AS(parse_scalars(f, a, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_scalars(f, Json::array({"x"}), 1), field_error);

  GFp f7(7);
  std::vector<Fp> w = {f7.parse("-3"), f7.parse("13")};
  REQUIRE(scalars_json<GFp>(w).dump() == "[\"4\",\"6\"]");

  Matrix<QQ> m(f, 2, 3);
  m.at(0, 1) = f.parse("1/2");
  m.at(1, 2) = f.parse("-7");
  Json mj = matrix_json(m);
  REQUIRE(parse_matrix(f, mj, 2, 3) == m);
  REQUIRE_THROWS_AS(parse_matrix(f, mj, 3, 2), std::invalid_argument);
}

TEST_CASE("algebra blocks nest structure constants as mult[i][j][k]", "[serialize]") {
  QQ f;
  Algebra<QQ> a = sweedler_hopf(f).bialg.alg;
  Json b = algebra_block(a, "H4");
  REQUIRE(b["kind"] == "algebra");
  REQUIRE(b["dim"] == 4);
  REQUIRE(b["unit"][0] == "1");
  REQUIRE(b["mult"][1][2][3] == "1");   // g·x = gx
  REQUIRE(b["mult"][2][1][3] == "-1");  // x·g = -gx
  REQUIRE(b["mult"][2][2][0] == "0");   // x² = 0

  Document<QQ> d(f);
  d.add(b);
  DocumentReader<QQ> r(f, d.doc);
  Algebra<QQ> back = r.algebra("H4");
  REQUIRE(back.same_table(a));
  REQUIRE(back.label == "H4");
  REQUIRE(check_algebra(back).ok());
}

TEST_CASE("a container file rebuilds a full L-R pair", "[serialize]") {
  QQ f;
  LRPair<QQ> p = diagonal_pair(f, 2, f.from_int(2));
  Json doc = diagonal_pair_document(f, 2);

  // text round trip, not just in-memory json
  Document<QQ> d(f);
  d.doc = doc;
  Json parsed = Json::parse(d.dump());
  DocumentReader<QQ> r(f, parsed);

  REQUIRE(r.labels("algebra") == std::vector<std::string>{"A", "B"});
  REQUIRE(r.labels("lrpair") == std::vector<std::string>{"p"});

  LRPair<QQ> back = r.lr_pair("p");
  REQUIRE(back.r.map.mat == p.r.map.mat);
  REQUIRE(back.q.map.mat == p.q.map.mat);
  REQUIRE(check_lr_pair(back).ok());
  REQUIRE(build_lr_product(back).same_table(build_lr_product(p)));
}

TEST_CASE("hopf blocks keep both antipodes", "[serialize]") {
  QQ f;
  HopfAlgebra<QQ> h = sweedler_hopf(f);
  Document<QQ> d(f);
  d.add(hopf_block(h, "H"));
  DocumentReader<QQ> r(f, d.doc);

  HopfAlgebra<QQ> back = r.hopf("H");
  REQUIRE(back.bialg.same_structure(h.bialg));
  REQUIRE(back.antipode == h.antipode);
  REQUIRE(back.antipode_inv.has_value());
  REQUIRE(*back.antipode_inv == *h.antipode_inv);
  REQUIRE(check_hopf(back).ok());

  // a bialgebra reference may resolve to a hopf block
  Bialgebra<QQ> bi = r.bialgebra("H");
  REQUIRE(bi.same_structure(h.bialg));
}

TEST_CASE("module, comodule and compatibility blocks round trip", "[serialize]") {
  QQ f;
  YdlInstance<QQ> y = ydl_instance(f);
  Document<QQ> d(f);
  d.add(bialgebra_block(y.ydl.bimod.h, "H"));
  d.add(algebra_block(y.ydl.bimod.alg, "A"));
  d.add(bimodule_block(y.ydl.bimod, "M", "H", "A"));
  d.add(bicomodule_block(y.ydl.bicomod, "C", "H", "A"));
  d.add(ydl_block("Y", "M", "C"));
  DocumentReader<QQ> r(f, d.doc);

  BimoduleAlgebra<QQ> m = r.bimodule("M");
  REQUIRE(m.left_action.mat == y.ydl.bimod.left_action.mat);
  REQUIRE(m.right_action.mat == y.ydl.bimod.right_action.mat);
  BicomoduleAlgebra<QQ> c = r.bicomodule("C");
  REQUIRE(c.left_coaction.mat == y.ydl.bicomod.left_coaction.mat);
  REQUIRE(c.right_coaction.mat == y.ydl.bicomod.right_coaction.mat);

  YDLAlgebra<QQ> back = r.ydl("Y");
  REQUIRE(check_ydl(back).ok());
}

TEST_CASE("twist data and cocycle blocks round trip", "[serialize]") {
  QQ f;
  BimoduleAlgebra<QQ> m = graded_bimodule_algebra(f);
  Cocycle<QQ> chi = bicharacter_cocycle(f);
  TwistData<QQ> t = specialize_from_hopf(m, chi);

  Document<QQ> d(f);
  d.add(bialgebra_block(chi.h, "H"));
  d.add(cocycle_block(chi, "chi", "H"));
  d.add(algebra_block(t.a, "A"));
  d.add(algebra_block(t.b, "B"));
  d.add(twisting_map_block(t.p.r, "R", "A", "B"));
  d.add(qmap_block(t.p.q, "Q", "A", "B"));
  d.add(lrpair_block("p", "R", "Q"));
  d.add(twistdata_block(t, "T", "A", "B", "p"));
  DocumentReader<QQ> r(f, d.doc);

  Cocycle<QQ> chi_back = r.cocycle("chi");
  REQUIRE(chi_back.f == chi.f);
  REQUIRE(chi_back.f_inv == chi.f_inv);
  REQUIRE(check_cocycle(chi_back).ok());

  TwistData<QQ> back = r.twist_data("T");
  REQUIRE(back.mu_l.mat == t.mu_l.mat);
  REQUIRE(back.mu_r.mat == t.mu_r.mat);
  REQUIRE(back.rho_r.mat == t.rho_r.mat);
  REQUIRE(back.rho_l.mat == t.rho_l.mat);
  REQUIRE(back.lambda_r.mat == t.lambda_r.mat);
  REQUIRE(back.lambda_l.mat == t.lambda_l.mat);
  REQUIRE(check_pregat(back).ok());
}

TEST_CASE("triple documents rebuild all three pairs", "[serialize]") {
  QQ f;
  std::vector<CatalogEntry<QQ>> cat = load_catalog(f, false);
  const CatalogEntry<QQ>& e = find_entry(cat, "triple_diag");
  const TripleData<QQ>& t = std::get<TripleData<QQ>>(e.payload);

  Json doc = export_entry(f, e);
  DocumentReader<QQ> r(f, doc);
  TripleData<QQ> back = r.triple("triple_diag");
  REQUIRE(back.p1.r.map.mat == t.p1.r.map.mat);
  REQUIRE(back.p2.q.map.mat == t.p2.q.map.mat);
  REQUIRE(back.p3.r.map.mat == t.p3.r.map.mat);
  REQUIRE(check_triple(back).ok());
}

TEST_CASE("prime field documents bind to the declared field only", "[serialize]") {
  GFp f5(5);
  Json doc = diagonal_pair_document(f5, 2);
  DocumentReader<GFp> r(f5, doc);
  LRPair<GFp> back = r.lr_pair("p");
  REQUIRE(check_lr_pair(back).ok());
  REQUIRE(back.q.map.mat.at(3, 3) == f5.from_int(2));

  REQUIRE(document_field_tag(doc) == "F5");
  QQ fq;
  REQUIRE_THROWS_AS(DocumentReader<QQ>(fq, doc), field_error);
  GFp f7(7);
  REQUIRE_THROWS_AS(DocumentReader<GFp>(f7, doc), field_error);
}

TEST_CASE("the reader rejects missing labels, wrong kinds and bad scalars", "[serialize]") {
  QQ f;
  Json doc = diagonal_pair_document(f, 2);
  DocumentReader<QQ> r(f, doc);
  REQUIRE_THROWS_AS(r.block("nope"), std::invalid_argument);
  REQUIRE_THROWS_AS(r.algebra("R"), std::invalid_argument);
  REQUIRE_THROWS_AS(r.twisting_map("Q"), std::invalid_argument);
  REQUIRE_THROWS_AS(r.hopf("A"), std::invalid_argument);

  Json bad = doc;
  bad["objects"][0]["unit"][0] = "one";
  REQUIRE_THROWS_AS(DocumentReader<QQ>(f, bad).algebra("A"), field_error);

  Json shrunk = doc;
  shrunk["objects"][2]["shape"][0] = 3;
  REQUIRE_THROWS_AS(DocumentReader<QQ>(f, shrunk).twisting_map("R"), std::invalid_argument);
}

TEST_CASE("every catalog entry exports to a self contained document", "[serialize]") {
  QQ f;
  std::vector<CatalogEntry<QQ>> cat = load_catalog(f, false);
  REQUIRE(cat.size() == 15);
  for (const CatalogEntry<QQ>& e : cat) {
    Json doc = export_entry(f, e);
    DocumentReader<QQ> r(f, doc);
    REQUIRE(r.labels(e.kind) == std::vector<std::string>{e.id});
    // reconstruct through the typed getter for the entry's kind
    if (e.kind == "algebra") REQUIRE(check_algebra(r.algebra(e.id)).ok());
    else if (e.kind == "bialgebra") REQUIRE(check_bialgebra(r.bialgebra(e.id)).ok());
    else if (e.kind == "hopf") REQUIRE(check_hopf(r.hopf(e.id)).ok());
    else if (e.kind == "bimodule") REQUIRE(check_bimodule_algebra(r.bimodule(e.id)).ok());
    else if (e.kind == "lrpair") REQUIRE(check_lr_pair(r.lr_pair(e.id)).ok());
    else if (e.kind == "triple") REQUIRE(check_triple(r.triple(e.id)).ok());
    else if (e.kind == "cocycle") REQUIRE(check_cocycle(r.cocycle(e.id)).ok());
    else if (e.kind == "ydl") REQUIRE(check_ydl(r.ydl(e.id)).ok());
    else FAIL("unknown catalog kind " + e.kind);
    // serialization is deterministic
    REQUIRE(doc.dump(2) == export_entry(f, e).dump(2));
  }
}

TEST_CASE("multiplication tables render with explicit basis labels", "[serialize]") {
  QQ f;
  LRPair<QQ> p = diagonal_pair(f, 2, f.from_int(2));
  std::string table = render_mult_table(build_lr_product(p), 2);
  REQUIRE(table.find("e0⊗f0") != std::string::npos);
  REQUIRE(table.find("2·e1⊗f1") != std::string::npos);
  REQUIRE(table.find("0") != std::string::npos);

  std::string plain = render_mult_table(truncated_polynomial_algebra(f, 2));
  REQUIRE(plain.find("e1") != std::string::npos);
  REQUIRE(plain.find("⊗") == std::string::npos);
}
