#pragma once

// JSON round-tripping for every structure. One self-describing container per
// file:
//
//   {"field": "Q" | "F<p>", "objects": [block, block, ...]}
//
// Each block carries "kind" and "label"; compound blocks reference earlier
// blocks by label. Scalars are strings: rationals "num/den" with the
// denominator omitted when 1, prime-field elements as decimal residues. The
// field is declared once per file.
//
// Block kinds and their payloads:
//   algebra      dim, unit (n scalars), mult (n×n×n nested, mult[i][j][k])
//   bialgebra    algebra payload + comult (n²×n matrix), counit (n scalars)
//   hopf         bialgebra payload + antipode (n×n), optional antipode_inv
//   R            a, b refs, shape [dim A, dim B], matrix (B⊗A → A⊗B)
//   Q            a, b refs, shape [dim A, dim B], matrix (A⊗B → A⊗B)
//   T            d ref, shape [dim D, dim D], matrix (D⊗D → D⊗D)
//   lrpair       r, q refs
//   bimodule     h, algebra refs, left_action, right_action matrices
//   bicomodule   h, algebra refs, left_coaction, right_coaction matrices
//   ydl          bimodule, bicomodule refs
//   triple       p1, p2, p3 refs to lrpair blocks
//   cocycle      h ref, F and F_inv (n² scalars each)
//   twistdata    a, b, pair refs plus the six matrices mu_l, mu_r, rho_r,
//                rho_l, lambda_r, lambda_l

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrtwist/catalog.hpp"

namespace lrtwist {

using Json = nlohmann::json;

template <class K>
Json scalars_json(const std::vector<typename K::Elem>& v) {
  Json a = Json::array();
  for (const typename K::Elem& x : v) a.push_back(x.str());
  return a;
}

template <class K>
std::vector<typename K::Elem> parse_scalars(const K& field, const Json& a, std::size_t expect) {
  if (!a.is_array() || a.size() != expect)
    throw std::invalid_argument("expected an array of " + std::to_string(expect) + " scalars");
  std::vector<typename K::Elem> v;
  v.reserve(expect);
  for (const Json& x : a) v.push_back(field.parse(x.get<std::string>()));
  return v;
}

template <class K>
Json matrix_json(const Matrix<K>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Matrix<K> parse_matrix(const K& field, const Json& a, int rows, int cols) {
  if (!a.is_array() || static_cast<int>(a.size()) != rows)
    throw std::invalid_argument("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix<K> m(field, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = a[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("expected matrix rows of length " + std::to_string(cols));
    for (int c = 0; c < cols; ++c) m.at(r, c) = field.parse(row[c].get<std::string>());
  }
  return m;
}

template <class K>
Json algebra_block(const Algebra<K>& a, const std::string& label) {
  Json b;
  b["kind"] = "algebra";
  b["label"] = label;
  b["dim"] = a.dim;
  b["unit"] = scalars_json<K>(a.unit);
  Json mult = Json::array();
  for (int i = 0; i < a.dim; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < a.dim; ++j) {
      Json line = Json::array();
      for (int k = 0; k < a.dim; ++k) line.push_back(a.c(i, j, k).str());
      plane.push_back(std::move(line));
    }
    mult.push_back(std::move(plane));
  }
  b["mult"] = std::move(mult);
  return b;
}

template <class K>
Json bialgebra_block(const Bialgebra<K>& b, const std::string& label) {
  Json j = algebra_block(b.alg, label);
  j["kind"] = "bialgebra";
  j["comult"] = matrix_json(b.comult.mat);
  Json counit = Json::array();
  for (int i = 0; i < b.alg.dim; ++i) counit.push_back(b.counit.mat.at(0, i).str());
  j["counit"] = std::move(counit);
  return j;
}

template <class K>
Json hopf_block(const HopfAlgebra<K>& h, const std::string& label) {
  Json j = bialgebra_block(h.bialg, label);
  j["kind"] = "hopf";
  j["antipode"] = matrix_json(h.antipode);
  if (h.antipode_inv) j["antipode_inv"] = matrix_json(*h.antipode_inv);
  return j;
}

template <class K>
Json twisting_map_block(const TwistingMap<K>& r, const std::string& label,
                        const std::string& a_label, const std::string& b_label) {
  Json j;
  j["kind"] = "R";
  j["label"] = label;
  j["a"] = a_label;
  j["b"] = b_label;
  j["shape"] = Json::array({r.a.dim, r.b.dim});
  j["matrix"] = matrix_json(r.map.mat);
  return j;
}

template <class K>
Json qmap_block(const QMap<K>& q, const std::string& label, const std::string& a_label,
                const std::string& b_label) {
  Json j;
  j["kind"] = "Q";
  j["label"] = label;
  j["a"] = a_label;
  j["b"] = b_label;
  j["shape"] = Json::array({q.a.dim, q.b.dim});
  j["matrix"] = matrix_json(q.map.mat);
  return j;
}

template <class K>
Json twistor_block(const Twistor<K>& t, const std::string& label, const std::string& d_label) {
  Json j;
  j["kind"] = "T";
  j["label"] = label;
  j["d"] = d_label;
  j["shape"] = Json::array({t.d.dim, t.d.dim});
  j["matrix"] = matrix_json(t.map.mat);
  return j;
}

inline Json lrpair_block(const std::string& label, const std::string& r_label,
                         const std::string& q_label) {
  Json j;
  j["kind"] = "lrpair";
  j["label"] = label;
  j["r"] = r_label;
  j["q"] = q_label;
  return j;
}

template <class K>
Json bimodule_block(const BimoduleAlgebra<K>& m, const std::string& label,
                    const std::string& h_label, const std::string& a_label) {
  Json j;
  j["kind"] = "bimodule";
  j["label"] = label;
  j["h"] = h_label;
  j["algebra"] = a_label;
  j["left_action"] = matrix_json(m.left_action.mat);
  j["right_action"] = matrix_json(m.right_action.mat);
  return j;
}

template <class K>
Json bicomodule_block(const BicomoduleAlgebra<K>& c, const std::string& label,
                      const std::string& h_label, const std::string& a_label) {
  Json j;
  j["kind"] = "bicomodule";
  j["label"] = label;
  j["h"] = h_label;
  j["algebra"] = a_label;
  j["left_coaction"] = matrix_json(c.left_coaction.mat);
  j["right_coaction"] = matrix_json(c.right_coaction.mat);
  return j;
}

inline Json ydl_block(const std::string& label, const std::string& bimodule_label,
                      const std::string& bicomodule_label) {
  Json j;
  j["kind"] = "ydl";
  j["label"] = label;
  j["bimodule"] = bimodule_label;
  j["bicomodule"] = bicomodule_label;
  return j;
}

inline Json triple_block(const std::string& label, const std::string& p1, const std::string& p2,
                         const std::string& p3) {
  Json j;
  j["kind"] = "triple";
  j["label"] = label;
  j["p1"] = p1;
  j["p2"] = p2;
  j["p3"] = p3;
  return j;
}

template <class K>
Json cocycle_block(const Cocycle<K>& c, const std::string& label, const std::string& h_label) {
  Json j;
  j["kind"] = "cocycle";
  j["label"] = label;
  j["h"] = h_label;
  j["F"] = scalars_json<K>(c.f);
  j["F_inv"] = scalars_json<K>(c.f_inv);
  return j;
}

template <class K>
Json twistdata_block(const TwistData<K>& d, const std::string& label, const std::string& a_label,
                     const std::string& b_label, const std::string& pair_label) {
  Json j;
  j["kind"] = "twistdata";
  j["label"] = label;
  j["a"] = a_label;
  j["b"] = b_label;
  j["pair"] = pair_label;
  j["mu_l"] = matrix_json(d.mu_l.mat);
  j["mu_r"] = matrix_json(d.mu_r.mat);
  j["rho_r"] = matrix_json(d.rho_r.mat);
  j["rho_l"] = matrix_json(d.rho_l.mat);
  j["lambda_r"] = matrix_json(d.lambda_r.mat);
  j["lambda_l"] = matrix_json(d.lambda_l.mat);
  return j;
}

// Writer side of a container file.
template <class K>
struct Document {
  K field;
  Json doc;

  explicit Document(const K& f) : field(f) {
    doc["field"] = field.name();
    doc["objects"] = Json::array();
  }

  void add(Json block) { doc["objects"].push_back(std::move(block)); }
  std::string dump(int indent = 2) const { return doc.dump(indent) + "\n"; }
};

// Reader side: label lookup plus typed reconstruction. Every getter
// validates the block kind and all matrix shapes; structure constructors
// then enforce their own invariants.
template <class K>
class DocumentReader {
 public:
  DocumentReader(const K& field, Json doc) : field_(field), doc_(std::move(doc)) {
    if (!doc_.is_object() || !doc_.contains("field") || !doc_.contains("objects"))
      throw std::invalid_argument("document needs a field tag and an object list");
    std::string tag = doc_.at("field").get<std::string>();
    if (tag != field_.name())
      throw field_error("file is over " + tag + ", expected " + field_.name());
    if (!doc_.at("objects").is_array())
      throw std::invalid_argument("objects must be an array");
  }

  // Labels of all blocks of one kind, in file order.
  std::vector<std::string> labels(const std::string& kind) const {
    std::vector<std::string> out;
    for (const Json& b : doc_.at("objects"))
      if (b.at("kind").get<std::string>() == kind)
        out.push_back(b.at("label").get<std::string>());
    return out;
  }

  const Json& block(const std::string& label) const {
    for (const Json& b : doc_.at("objects"))
      if (b.at("label").get<std::string>() == label) return b;
    throw std::invalid_argument("no block labelled '" + label + "'");
  }

  Algebra<K> algebra(const std::string& label) const {
    const Json& b = expect(label, "algebra");
    int n = b.at("dim").get<int>();
    if (n <= 0) throw std::invalid_argument("algebra dimension must be positive");
    std::vector<typename K::Elem> unit = parse_scalars(field_, b.at("unit"), n);
    const Json& mult = b.at("mult");
    if (!mult.is_array() || static_cast<int>(mult.size()) != n)
      throw std::invalid_argument("mult must have dim planes");
    std::vector<typename K::Elem> flat;
    flat.reserve(static_cast<std::size_t>(n) * n * n);
    for (const Json& plane : mult) {
      if (!plane.is_array() || static_cast<int>(plane.size()) != n)
        throw std::invalid_argument("mult planes must have dim rows");
      for (const Json& line : plane) {
        std::vector<typename K::Elem> row = parse_scalars(field_, line, n);
        for (typename K::Elem& x : row) flat.push_back(std::move(x));
      }
    }
    return Algebra<K>(field_, label, n, std::move(unit), std::move(flat));
  }

  Bialgebra<K> bialgebra(const std::string& label) const {
    const Json& b = expect(label, "bialgebra");
    Algebra<K> a = algebra_payload(b, label);
    int n = a.dim;
    Matrix<K> d = parse_matrix(field_, b.at("comult"), n * n, n);
    std::vector<typename K::Elem> eps = parse_scalars(field_, b.at("counit"), n);
    Matrix<K> e(field_, 1, n);
    for (int i = 0; i < n; ++i) e.at(0, i) = eps[i];
    return Bialgebra<K>(std::move(a), LinMap<K>({n}, {n, n}, std::move(d)),
                        LinMap<K>({n}, {}, std::move(e)));
  }

  HopfAlgebra<K> hopf(const std::string& label) const {
    const Json& b = expect(label, "hopf");
    Bialgebra<K> bi = bialgebra(label);
    int n = bi.alg.dim;
    Matrix<K> s = parse_matrix(field_, b.at("antipode"), n, n);
    std::optional<Matrix<K>> sinv;
    if (b.contains("antipode_inv"))
      sinv = parse_matrix(field_, b.at("antipode_inv"), n, n);
    return HopfAlgebra<K>(std::move(bi), std::move(s), std::move(sinv));
  }

  TwistingMap<K> twisting_map(const std::string& label) const {
    const Json& b = expect(label, "R");
    Algebra<K> a = algebra(b.at("a").get<std::string>());
    Algebra<K> bb = algebra(b.at("b").get<std::string>());
    check_shape(b, a.dim, bb.dim);
    Matrix<K> m = parse_matrix(field_, b.at("matrix"), a.dim * bb.dim, bb.dim * a.dim);
    return TwistingMap<K>(std::move(a), std::move(bb),
                          LinMap<K>({bb.dim, a.dim}, {a.dim, bb.dim}, std::move(m)));
  }

  QMap<K> qmap(const std::string& label) const {
    const Json& b = expect(label, "Q");
    Algebra<K> a = algebra(b.at("a").get<std::string>());
    Algebra<K> bb = algebra(b.at("b").get<std::string>());
    check_shape(b, a.dim, bb.dim);
    Matrix<K> m = parse_matrix(field_, b.at("matrix"), a.dim * bb.dim, a.dim * bb.dim);
    return QMap<K>(std::move(a), std::move(bb),
                   LinMap<K>({a.dim, bb.dim}, {a.dim, bb.dim}, std::move(m)));
  }

  Twistor<K> twistor(const std::string& label) const {
    const Json& b = expect(label, "T");
    Algebra<K> d = algebra(b.at("d").get<std::string>());
    check_shape(b, d.dim, d.dim);
    Matrix<K> m = parse_matrix(field_, b.at("matrix"), d.dim * d.dim, d.dim * d.dim);
    return Twistor<K>(std::move(d), LinMap<K>({d.dim, d.dim}, {d.dim, d.dim}, std::move(m)));
  }

  LRPair<K> lr_pair(const std::string& label) const {
    const Json& b = expect(label, "lrpair");
    return LRPair<K>(twisting_map(b.at("r").get<std::string>()),
                     qmap(b.at("q").get<std::string>()));
  }

  BimoduleAlgebra<K> bimodule(const std::string& label) const {
    const Json& b = expect(label, "bimodule");
    Bialgebra<K> h = bialgebra_ref(b.at("h").get<std::string>());
    Algebra<K> a = algebra(b.at("algebra").get<std::string>());
    int nh = h.alg.dim, na = a.dim;
    Matrix<K> l = parse_matrix(field_, b.at("left_action"), na, nh * na);
    Matrix<K> r = parse_matrix(field_, b.at("right_action"), na, na * nh);
    return BimoduleAlgebra<K>(std::move(h), std::move(a),
                              LinMap<K>({nh, na}, {na}, std::move(l)),
                              LinMap<K>({na, nh}, {na}, std::move(r)));
  }

  BicomoduleAlgebra<K> bicomodule(const std::string& label) const {
    const Json& b = expect(label, "bicomodule");
    Bialgebra<K> h = bialgebra_ref(b.at("h").get<std::string>());
    Algebra<K> a = algebra(b.at("algebra").get<std::string>());
    int nh = h.alg.dim, na = a.dim;
    Matrix<K> l = parse_matrix(field_, b.at("left_coaction"), nh * na, na);
    Matrix<K> r = parse_matrix(field_, b.at("right_coaction"), na * nh, na);
    return BicomoduleAlgebra<K>(std::move(h), std::move(a),
                                LinMap<K>({na}, {nh, na}, std::move(l)),
                                LinMap<K>({na}, {na, nh}, std::move(r)));
  }

  YDLAlgebra<K> ydl(const std::string& label) const {
    const Json& b = expect(label, "ydl");
    return YDLAlgebra<K>(bimodule(b.at("bimodule").get<std::string>()),
                         bicomodule(b.at("bicomodule").get<std::string>()));
  }

  TripleData<K> triple(const std::string& label) const {
    const Json& b = expect(label, "triple");
    return TripleData<K>(lr_pair(b.at("p1").get<std::string>()),
                         lr_pair(b.at("p2").get<std::string>()),
                         lr_pair(b.at("p3").get<std::string>()));
  }

  Cocycle<K> cocycle(const std::string& label) const {
    const Json& b = expect(label, "cocycle");
    Bialgebra<K> h = bialgebra_ref(b.at("h").get<std::string>());
    std::size_t nn = static_cast<std::size_t>(h.alg.dim) * h.alg.dim;
    std::vector<typename K::Elem> f = parse_scalars(field_, b.at("F"), nn);
    std::vector<typename K::Elem> g = parse_scalars(field_, b.at("F_inv"), nn);
    return Cocycle<K>(std::move(h), std::move(f), std::move(g));
  }

  TwistData<K> twist_data(const std::string& label) const {
    const Json& b = expect(label, "twistdata");
    Algebra<K> a = algebra(b.at("a").get<std::string>());
    Algebra<K> bb = algebra(b.at("b").get<std::string>());
    LRPair<K> p = lr_pair(b.at("pair").get<std::string>());
    int na = a.dim, nb = bb.dim;
    auto lin = [&](const char* key, Shape in, Shape out) {
      int rows = 1, cols = 1;
      for (int d : out) rows *= d;
      for (int d : in) cols *= d;
      return LinMap<K>(in, out, parse_matrix(field_, b.at(key), rows, cols));
    };
    return TwistData<K>(std::move(a), std::move(bb), std::move(p),
                        lin("mu_l", {nb, na}, {na}), lin("mu_r", {na, nb}, {na}),
                        lin("rho_r", {na}, {na, nb}), lin("rho_l", {na}, {nb, na}),
                        lin("lambda_r", {na}, {na, nb}), lin("lambda_l", {na}, {nb, na}));
  }

 private:
  const Json& expect(const std::string& label, const std::string& kind) const {
    const Json& b = block(label);
    std::string k = b.at("kind").get<std::string>();
    if (kind == "algebra") {
      // bialgebra and hopf blocks extend the algebra payload
      if (k != "algebra" && k != "bialgebra" && k != "hopf")
        throw std::invalid_argument("block '" + label + "' is a " + k + ", not an algebra");
    } else if (kind == "bialgebra") {
      if (k != "bialgebra" && k != "hopf")
        throw std::invalid_argument("block '" + label + "' is a " + k + ", not a bialgebra");
    } else if (k != kind) {
      throw std::invalid_argument("block '" + label + "' is a " + k + ", not a " + kind);
    }
    return b;
  }

  // A reference to a bialgebra may point at a hopf block as well.
  Bialgebra<K> bialgebra_ref(const std::string& label) const { return bialgebra(label); }

  Algebra<K> algebra_payload(const Json& b, const std::string& label) const {
    Json plain = b;
    plain["kind"] = "algebra";
    DocumentReader tmp(field_, Json{{"field", field_.name()}, {"objects", Json::array({plain})}});
    return tmp.algebra(label);
  }

  static void check_shape(const Json& b, int da, int db) {
    const Json& s = b.at("shape");
    if (!s.is_array() || s.size() != 2 || s[0].get<int>() != da || s[1].get<int>() != db)
      throw std::invalid_argument("map shape does not match its algebras");
  }

  K field_;
  Json doc_;
};

// Parse a container file and bind it to the field it declares itself.
inline std::string document_field_tag(const Json& doc) {
  if (!doc.is_object() || !doc.contains("field"))
    throw std::invalid_argument("document needs a field tag");
  return doc.at("field").get<std::string>();
}

// Container export of one catalog entry, with deterministic block labels.
template <class K>
Json export_entry(const K& field, const CatalogEntry<K>& e) {
  Document<K> d(field);
  if (const Algebra<K>* a = std::get_if<Algebra<K>>(&e.payload)) {
    d.add(algebra_block(*a, e.id));
  } else if (const Bialgebra<K>* b = std::get_if<Bialgebra<K>>(&e.payload)) {
    d.add(bialgebra_block(*b, e.id));
  } else if (const HopfAlgebra<K>* h = std::get_if<HopfAlgebra<K>>(&e.payload)) {
    d.add(hopf_block(*h, e.id));
  } else if (const BimoduleAlgebra<K>* m = std::get_if<BimoduleAlgebra<K>>(&e.payload)) {
    d.add(bialgebra_block(m->h, "H"));
    d.add(algebra_block(m->alg, "A"));
    d.add(bimodule_block(*m, e.id, "H", "A"));
  } else if (const LRPair<K>* p = std::get_if<LRPair<K>>(&e.payload)) {
    d.add(algebra_block(p->r.a, "A"));
    d.add(algebra_block(p->r.b, "B"));
    d.add(twisting_map_block(p->r, "R", "A", "B"));
    d.add(qmap_block(p->q, "Q", "A", "B"));
    d.add(lrpair_block(e.id, "R", "Q"));
  } else if (const TripleData<K>* t = std::get_if<TripleData<K>>(&e.payload)) {
    d.add(algebra_block(t->a(), "A"));
    d.add(algebra_block(t->b(), "B"));
    d.add(algebra_block(t->c(), "C"));
    const LRPair<K>* ps[3] = {&t->p1, &t->p2, &t->p3};
    const char* fst[3] = {"A", "B", "A"};
    const char* snd[3] = {"B", "C", "C"};
    for (int i = 0; i < 3; ++i) {
      std::string n = std::to_string(i + 1);
      d.add(twisting_map_block(ps[i]->r, "R" + n, fst[i], snd[i]));
      d.add(qmap_block(ps[i]->q, "Q" + n, fst[i], snd[i]));
      d.add(lrpair_block("p" + n, "R" + n, "Q" + n));
    }
    d.add(triple_block(e.id, "p1", "p2", "p3"));
  } else if (const Cocycle<K>* c = std::get_if<Cocycle<K>>(&e.payload)) {
    d.add(bialgebra_block(c->h, "H"));
    d.add(cocycle_block(*c, e.id, "H"));
  } else {
    const YdlInstance<K>& y = std::get<YdlInstance<K>>(e.payload);
    d.add(bialgebra_block(y.ydl.bimod.h, "H"));
    d.add(algebra_block(y.ydl.bimod.alg, "A"));
    d.add(bimodule_block(y.ydl.bimod, "M", "H", "A"));
    d.add(bicomodule_block(y.ydl.bicomod, "C", "H", "A"));
    d.add(ydl_block(e.id, "M", "C"));
    d.add(algebra_block(y.coeff.alg, "A_coeff"));
    d.add(bimodule_block(y.coeff, "coeff", "H", "A_coeff"));
  }
  return d.doc;
}

namespace detail {

// column count, not byte count; all glyphs used in tables are single-column
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace detail

// Aligned multiplication table with explicit basis labels; tensor-product
// bases read "e_i⊗f_j" for a declared left factor dimension.
template <class K>
std::string render_mult_table(const Algebra<K>& a, int left_dim = 0) {
  std::vector<std::string> names(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (left_dim > 0 && a.dim % left_dim == 0) {
      int right = a.dim / left_dim;
      names[i] = "e" + std::to_string(i / right) + "⊗f" + std::to_string(i % right);
    } else {
      names[i] = "e" + std::to_string(i);
    }
  }
  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(a.dim) * a.dim);
  std::size_t width = 0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      std::vector<typename K::Elem> prod(a.dim, a.field.zero());
      for (int k = 0; k < a.dim; ++k) prod[k] = a.c(i, j, k);
      std::string out;
      bool any = false;
      for (int k = 0; k < a.dim; ++k) {
        if (prod[k].is_zero()) continue;
        if (any) out += " + ";
        any = true;
        std::string co = prod[k].str();
        if (co == "1") out += names[k];
        else if (co == "-1") out += "-" + names[k];
        else out += co + "·" + names[k];
      }
      if (!any) out = "0";
      width = std::max(width, detail::display_width(out));
      cells.push_back(std::move(out));
    }
  std::string text = "multiplication table of " + a.label + "\n";
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i) * a.dim + j];
      text += c;
      if (j + 1 < a.dim) text += std::string(width - detail::display_width(c) + 2, ' ');
    }
    text += "\n";
  }
  return text;
}

}  // namespace lrtwist
