// lrtt: command line front end for the twisted tensor product library.
//
//   lrtt check <file> --kind <kind>      run the full check suite for one block
//   lrtt build <file> --what <product>   build a product algebra and re-validate it
//   lrtt iterate <file>                  three-factor iterated product, both ways
//   lrtt smash <file>                    smash pair and product from module data
//   lrtt invariance <file>               bullet algebra, twisted pair, isomorphism
//   lrtt detwist <file>                  P = Q⁻¹∘R plus the comparison isomorphism
//   lrtt search                          census of valid maps over a prime field
//   lrtt catalog list | export <id>      stock instances, validated on load
//
// Input files are self-describing JSON containers ({"field": ..., "objects":
// [...]}); the field is read from the file, --field only cross-checks it.
// Exit codes: 0 all requested checks passed, 1 a check failed, 2 usage or
// input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lrtwist/serialize.hpp"

using namespace lrtwist;

namespace {

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return Json::parse(in);  // parse errors carry the byte position
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Json report_json(const Report& rep) {
  Json items = Json::array();
  for (const CheckItem& it : rep.items)
    items.push_back({{"label", it.label},
                     {"pass", it.pass},
                     {"violations", it.violations},
                     {"witness", it.witness}});
  return Json{{"subject", rep.subject}, {"ok", rep.ok()}, {"items", std::move(items)}};
}

// First block whose kind is acceptable for the requested getter, file order.
std::string first_label(const Json& doc, const std::vector<std::string>& kinds) {
  for (const Json& b : doc.at("objects")) {
    std::string k = b.at("kind").get<std::string>();
    for (const std::string& want : kinds)
      if (k == want) return b.at("label").get<std::string>();
  }
  std::string all;
  for (const std::string& k : kinds) all += (all.empty() ? "" : "/") + k;
  throw std::invalid_argument("the file has no block of kind " + all +
                              "; pass an explicit label");
}

std::vector<std::string> block_kinds_for(const std::string& kind) {
  if (kind == "algebra") return {"algebra", "bialgebra", "hopf"};
  if (kind == "bialgebra") return {"bialgebra", "hopf"};
  if (kind == "twisting") return {"R"};
  if (kind == "qmap") return {"Q"};
  return {kind};
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Shared tail of every file command: print the report and the overall line,
// write the machine report if requested, map pass/fail to the exit code.
int finish(const Report& rep, const Timer& timer, const std::string& echo,
           const std::string& field_name, const std::string& out) {
  std::cout << rep.to_text();
  std::cout << "overall: " << (rep.ok() ? "PASS" : "FAIL") << "  [" << rep.items.size()
            << (rep.items.size() == 1 ? " check" : " checks") << " in " << timer.ms()
            << " ms]\n";
  int code = rep.ok() ? 0 : 1;
  if (!out.empty()) {
    Json j{{"command", echo},
           {"field", field_name},
           {"ok", rep.ok()},
           {"exit_code", code},
           {"timing_ms", timer.ms()},
           {"reports", Json::array({report_json(rep)})}};
    write_output(out, j.dump(2) + "\n");
  }
  return code;
}

struct FileOpts {
  std::string path;
  std::string kind;        // check only
  std::string what = "lr"; // build only
  std::string label;
  std::string bicomodule;  // smash only
  std::string field;       // optional cross-check against the file tag
  std::string out;
  bool force = false;
  int jobs = 1;
};

template <class K>
int cmd_check(const K& field, const Json& doc, const FileOpts& o, const std::string& echo) {
  Timer timer;
  DocumentReader<K> r(field, doc);
  std::string label =
      o.label.empty() ? first_label(doc, block_kinds_for(o.kind)) : o.label;

  Report rep;
  rep.subject = o.kind + " '" + label + "' over " + field.name();
  if (o.kind == "algebra") {
    rep.merge(check_algebra(r.algebra(label), o.jobs));
  } else if (o.kind == "twisting") {
    TwistingMap<K> t = r.twisting_map(label);
    rep.merge(check_algebra(t.a, o.jobs), "A ");
    rep.merge(check_algebra(t.b, o.jobs), "B ");
    rep.merge(check_twisting_map(t, o.jobs));
  } else if (o.kind == "qmap") {
    QMap<K> q = r.qmap(label);
    rep.merge(check_algebra(q.a, o.jobs), "A ");
    rep.merge(check_algebra(q.b, o.jobs), "B ");
    rep.merge(check_qmap(q, o.jobs));
  } else if (o.kind == "lrpair") {
    LRPair<K> p = r.lr_pair(label);
    rep.merge(check_algebra(p.r.a, o.jobs), "A ");
    rep.merge(check_algebra(p.r.b, o.jobs), "B ");
    rep.merge(check_lr_pair(p, o.jobs));
  } else if (o.kind == "bialgebra") {
    rep.merge(check_bialgebra(r.bialgebra(label), o.jobs));
  } else if (o.kind == "hopf") {
    rep.merge(check_hopf(r.hopf(label), o.jobs));
  } else if (o.kind == "bimodule") {
    BimoduleAlgebra<K> m = r.bimodule(label);
    rep.merge(check_bialgebra(m.h, o.jobs), "H ");
    rep.merge(check_bimodule_algebra(m, o.jobs));
  } else if (o.kind == "bicomodule") {
    BicomoduleAlgebra<K> c = r.bicomodule(label);
    rep.merge(check_bialgebra(c.h, o.jobs), "H ");
    rep.merge(check_bicomodule_algebra(c, o.jobs));
  } else if (o.kind == "ydl") {
    YDLAlgebra<K> y = r.ydl(label);
    rep.merge(check_bimodule_algebra(y.bimod, o.jobs), "module ");
    rep.merge(check_bicomodule_algebra(y.bicomod, o.jobs), "comodule ");
    rep.merge(check_ydl(y, o.jobs));
  } else if (o.kind == "cocycle") {
    Cocycle<K> c = r.cocycle(label);
    rep.merge(check_bialgebra(c.h, o.jobs), "H ");
    rep.merge(check_cocycle(c, o.jobs));
  } else if (o.kind == "twistdata") {
    TwistData<K> d = r.twist_data(label);
    rep.merge(check_algebra(d.a, o.jobs), "A ");
    rep.merge(check_algebra(d.b, o.jobs), "B ");
    rep.merge(check_pregat(d, o.jobs));
    rep.merge(check_invundtw(d, o.jobs));
  } else if (o.kind == "triple") {
    TripleData<K> t = r.triple(label);
    rep.merge(check_triple(t, o.jobs));
    rep.merge(check_hexagons(t, o.jobs));
  } else {
    throw std::invalid_argument("unknown kind '" + o.kind + "'");
  }
  return finish(rep, timer, echo, field.name(), o.out);
}

template <class K>
int cmd_build(const K& field, const Json& doc, const FileOpts& o, const std::string& echo) {
  Timer timer;
  DocumentReader<K> r(field, doc);
  std::vector<std::string> kinds = o.what == "lr"        ? std::vector<std::string>{"lrpair"}
                                   : o.what == "twisted" ? std::vector<std::string>{"R"}
                                   : o.what == "q"       ? std::vector<std::string>{"Q"}
                                                         : std::vector<std::string>{"T"};
  std::string label = o.label.empty() ? first_label(doc, kinds) : o.label;

  Algebra<K> product = [&]() {
    if (o.what == "lr") return build_lr_product(r.lr_pair(label), o.force, o.jobs);
    if (o.what == "twisted")
      return build_twisted_product(r.twisting_map(label), o.force, o.jobs);
    if (o.what == "q") return build_q_product(r.qmap(label), o.force, o.jobs);
    return build_twisted_by_twistor(r.twistor(label), o.force, o.jobs);
  }();
  int left_dim = 0;
  if (o.what != "twistor") {
    const Json& b = r.block(label);
    std::string map_label = o.what == "lr" ? b.at("r").get<std::string>() : label;
    const Json& mb = r.block(map_label);
    left_dim = r.algebra(mb.at("a").get<std::string>()).dim;
  }

  Report rep = check_algebra(product, o.jobs);  // re-validate the output
  std::cout << render_mult_table(product, left_dim) << "\n";

  if (!o.out.empty()) {
    Document<K> d(field);
    d.add(algebra_block(product, "product"));
    write_output(o.out, d.dump());
  }
  return finish(rep, timer, echo, field.name(), "");
}

template <class K>
int cmd_iterate(const K& field, const Json& doc, const FileOpts& o, const std::string& echo) {
  Timer timer;
  DocumentReader<K> r(field, doc);
  std::string label = o.label.empty() ? first_label(doc, {"triple"}) : o.label;
  TripleData<K> t = r.triple(label);
  IteratedProduct<K> it = build_iterated(t, o.force, o.jobs);

  Report rep;
  rep.subject = "iterate '" + label + "' over " + field.name();
  rep.merge(it.report);
  rep.merge(check_algebra(it.left, o.jobs), "output ");
  std::cout << render_mult_table(it.left, t.a().dim * t.b().dim) << "\n";

  if (!o.out.empty()) {
    Document<K> d(field);
    d.add(algebra_block(it.left, "left"));
    d.add(algebra_block(it.right, "right"));
    write_output(o.out, d.dump());
  }
  return finish(rep, timer, echo, field.name(), "");
}

template <class K>
int cmd_smash(const K& field, const Json& doc, const FileOpts& o, const std::string& echo) {
  Timer timer;
  DocumentReader<K> r(field, doc);
  std::string label = o.label.empty() ? first_label(doc, {"bimodule"}) : o.label;
  BimoduleAlgebra<K> m = r.bimodule(label);
  BicomoduleAlgebra<K> c = o.bicomodule.empty() ? canonical_bicomodule(m.h)
                                                : r.bicomodule(o.bicomodule);

  LRPair<K> pair = smash_maps(m, c, o.force, o.jobs);
  Algebra<K> product = build_lr_smash(m, c, true, o.jobs);

  Report rep;
  rep.subject = "smash " + product.label + " over " + field.name();
  rep.merge(check_lr_pair(pair, o.jobs), "pair ");
  CheckItem eq;
  eq.label = "matches_lr_product";
  eq.pass = build_lr_product(pair, true, o.jobs).same_table(product);
  if (!eq.pass) {
    eq.violations = 1;
    eq.witness = "the defining formula and the L-R product disagree";
  }
  rep.add(std::move(eq));
  rep.merge(check_algebra(product, o.jobs), "product ");
  std::cout << render_mult_table(product, m.alg.dim) << "\n";

  if (!o.out.empty()) {
    Document<K> d(field);
    d.add(algebra_block(m.alg, "A"));
    d.add(algebra_block(c.alg, "U"));
    d.add(twisting_map_block(pair.r, "R", "A", "U"));
    d.add(qmap_block(pair.q, "Q", "A", "U"));
    d.add(lrpair_block("smash_pair", "R", "Q"));
    d.add(algebra_block(product, "product"));
    write_output(o.out, d.dump());
  }
  return finish(rep, timer, echo, field.name(), "");
}

template <class K>
int cmd_invariance(const K& field, const Json& doc, const FileOpts& o, const std::string& echo) {
  Timer timer;
  DocumentReader<K> r(field, doc);
  std::string label = o.label.empty() ? first_label(doc, {"twistdata"}) : o.label;
  TwistData<K> d = r.twist_data(label);

  Report rep;
  rep.subject = "invariance '" + label + "' over " + field.name();
  rep.merge(check_pregat(d, o.jobs));
  rep.merge(check_invundtw(d, o.jobs));
  if (!rep.ok() && !o.force) return finish(rep, timer, echo, field.name(), "");

  TwistInvariance<K> inv = invariance_iso(d, true, o.jobs);
  rep.merge(check_algebra(inv.bullet, o.jobs), "bullet ");
  rep.merge(check_lr_pair(inv.pair, o.jobs), "pair ");
  rep.merge(inv.report, "iso ");
  std::cout << render_mult_table(inv.bullet) << "\n";

  if (!o.out.empty()) {
    Document<K> dd(field);
    dd.add(algebra_block(inv.bullet, "bullet"));
    dd.add(algebra_block(d.b, "B"));
    dd.add(twisting_map_block(inv.pair.r, "R_tw", "bullet", "B"));
    dd.add(qmap_block(inv.pair.q, "Q_tw", "bullet", "B"));
    dd.add(lrpair_block("twisted_pair", "R_tw", "Q_tw"));
    write_output(o.out, dd.dump());
  }
  return finish(rep, timer, echo, field.name(), "");
}

template <class K>
int cmd_detwist(const K& field, const Json& doc, const FileOpts& o, const std::string& echo) {
  Timer timer;
  DocumentReader<K> r(field, doc);
  std::string label = o.label.empty() ? first_label(doc, {"lrpair"}) : o.label;
  LRPair<K> p = r.lr_pair(label);

  Report rep;
  rep.subject = "detwist '" + label + "' over " + field.name();
  if (!o.force) rep.merge(check_lr_pair(p, o.jobs), "pair ");
  DetwistResult<K> res = detwist(p, o.jobs);
  rep.merge(res.report);

  if (!o.out.empty()) {
    Document<K> d(field);
    d.add(algebra_block(p.r.a, "A"));
    d.add(algebra_block(p.r.b, "B"));
    d.add(twisting_map_block(res.p, "P", "A", "B"));
    write_output(o.out, d.dump());
  }
  return finish(rep, timer, echo, field.name(), "");
}

struct CatalogOpts {
  std::string field = "Q";
  std::string id;
  std::string out;
  bool no_validate = false;
  int jobs = 1;
};

template <class K>
int cmd_catalog_list(const K& field, const CatalogOpts& o) {
  std::vector<CatalogEntry<K>> cat = load_catalog(field, !o.no_validate, o.jobs);
  std::size_t wid = 0, wkind = 0;
  for (const CatalogEntry<K>& e : cat) {
    wid = std::max(wid, e.id.size());
    wkind = std::max(wkind, e.kind.size());
  }
  for (const CatalogEntry<K>& e : cat)
    std::cout << e.id << std::string(wid - e.id.size() + 2, ' ') << e.kind
              << std::string(wkind - e.kind.size() + 2, ' ') << e.description << "\n";
  return 0;
}

template <class K>
int cmd_catalog_export(const K& field, const CatalogOpts& o) {
  std::vector<CatalogEntry<K>> cat = load_catalog(field, !o.no_validate, o.jobs);
  const CatalogEntry<K>& e = find_entry(cat, o.id);
  write_output(o.out, export_entry(field, e).dump(2) + "\n");
  return 0;
}

struct SearchOpts {
  std::string field = "F2";
  std::vector<int> dims = {2, 2};
  std::string what = "r";
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::int64_t budget = 0;
  std::string file;
  std::string out;
  int jobs = 1;
};

struct FreeCell {
  bool in_q;
  int row, col;
};

// Candidate census over GF(p). Unit axioms (tw0)/(tw0') fix whole columns of
// the candidate matrices, so only the remaining cells are enumerated; the
// rest of the axiom suite then filters. Requires both units to be the first
// basis vector so the forced columns are basis vectors.
int cmd_search(const GFp& field, const SearchOpts& o) {
  constexpr int kDimBound = 9;           // product of dimensions
  constexpr std::uint64_t kSpaceBound = 1u << 20;  // exhaustive candidates
  constexpr std::size_t kListCap = 64;   // valid matrices listed in the census

  Algebra<GFp> A = group_hopf_algebra(field, o.dims.at(0)).bialg.alg;
  Algebra<GFp> B = group_hopf_algebra(field, o.dims.at(1)).bialg.alg;
  if (!o.file.empty()) {
    Json doc = load_document(o.file);
    DocumentReader<GFp> r(field, doc);
    A = r.algebra("A");
    B = r.algebra("B");
  }
  const int na = A.dim, nb = B.dim;
  if (na * nb > kDimBound) {
    std::cerr << "error: dims (" << na << ", " << nb
              << ") exceed the search bound: dim(A)*dim(B) must be at most " << kDimBound
              << "\n";
    return 2;
  }
  for (const Algebra<GFp>* alg : {&A, &B}) {
    bool basis_unit = !alg->unit[0].is_zero() && alg->unit[0] == field.one();
    for (int i = 1; i < alg->dim; ++i) basis_unit = basis_unit && alg->unit[i].is_zero();
    if (!basis_unit) {
      std::cerr << "error: search requires the unit of " << alg->label
                << " to be the first basis vector\n";
      return 2;
    }
  }

  const bool with_q = o.what == "rq";
  const std::int64_t p = field.p();

  // forced parts: R(1⊗a)=a⊗1, R(b⊗1)=1⊗b; Q(a⊗1)=a⊗1, Q(1⊗b)=1⊗b
  Matrix<GFp> r_base(field, na * nb, nb * na);
  for (int i = 0; i < na; ++i) r_base.at(i * nb, i) = field.one();
  for (int j = 0; j < nb; ++j) r_base.at(j, j * na) = field.one();
  Matrix<GFp> q_base(field, na * nb, na * nb);
  for (int i = 0; i < na; ++i) q_base.at(i * nb, i * nb) = field.one();
  for (int j = 0; j < nb; ++j) q_base.at(j, j) = field.one();

  std::vector<FreeCell> cells;
  for (int j = 1; j < nb; ++j)
    for (int i = 1; i < na; ++i)
      for (int row = 0; row < na * nb; ++row) cells.push_back({false, row, j * na + i});
  if (with_q)
    for (int i = 1; i < na; ++i)
      for (int j = 1; j < nb; ++j)
        for (int row = 0; row < na * nb; ++row) cells.push_back({true, row, i * nb + j});
  const std::size_t nfree = cells.size();

  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(nfree));
  const bool exhaustive = o.mode == "exhaustive";
  if (exhaustive && space > kSpaceBound) {
    std::cerr << "error: exhaustive space " << p << "^" << nfree << " = "
              << space.get_str() << " exceeds the limit " << kSpaceBound
              << "; use --mode random with a budget\n";
    return 2;
  }

  std::uint64_t total;
  if (exhaustive) {
    total = space.get_ui();
    if (o.budget > 0) total = std::min<std::uint64_t>(total, o.budget);
  } else {
    total = o.budget > 0 ? o.budget : 1000;
  }

  // Random candidates are drawn from one sequential stream so the census is
  // independent of --jobs.
  std::vector<std::int64_t> drawn;
  if (!exhaustive) {
    std::mt19937_64 rng(o.seed);
    drawn.resize(total * nfree);
    for (std::int64_t& d : drawn) d = static_cast<std::int64_t>(rng() % p);
  }

  struct Valid {
    std::uint64_t index;
    std::vector<std::int64_t> flat;  // R rows then Q rows, row-major residues
  };
  struct ShardResult {
    std::map<std::string, std::int64_t> first_failure;
    std::vector<Valid> valid;
  };

  auto run_shard = [&](std::uint64_t lo, std::uint64_t hi, ShardResult& outr) {
    std::vector<std::int64_t> digits(nfree);
    for (std::uint64_t n = lo; n < hi; ++n) {
      if (exhaustive) {
        std::uint64_t idx = n;
        for (std::size_t t = 0; t < nfree; ++t) {
          digits[t] = static_cast<std::int64_t>(idx % p);
          idx /= p;
        }
      } else {
        for (std::size_t t = 0; t < nfree; ++t) digits[t] = drawn[n * nfree + t];
      }
      Matrix<GFp> rm = r_base, qm = q_base;
      for (std::size_t t = 0; t < nfree; ++t)
        (cells[t].in_q ? qm : rm).at(cells[t].row, cells[t].col) = field.from_int(digits[t]);

      Report rep;
      if (with_q) {
        LRPair<GFp> cand(TwistingMap<GFp>(A, B, LinMap<GFp>({nb, na}, {na, nb}, rm)),
                         QMap<GFp>(A, B, LinMap<GFp>({na, nb}, {na, nb}, qm)));
        rep = check_lr_pair(cand, 1);
      } else {
        TwistingMap<GFp> cand(A, B, LinMap<GFp>({nb, na}, {na, nb}, rm));
        rep = check_twisting_map(cand, 1);
      }
      if (rep.ok()) {
        Valid v;
        v.index = n;
        for (int i = 0; i < rm.rows(); ++i)
          for (int j = 0; j < rm.cols(); ++j) v.flat.push_back(rm.at(i, j).value());
        if (with_q)
          for (int i = 0; i < qm.rows(); ++i)
            for (int j = 0; j < qm.cols(); ++j) v.flat.push_back(qm.at(i, j).value());
        outr.valid.push_back(std::move(v));
      } else {
        for (const CheckItem& it : rep.items)
          if (!it.pass) {
            ++outr.first_failure[it.label];
            break;
          }
      }
    }
  };

  int workers = std::max(1, std::min<int>(o.jobs, static_cast<int>(std::min<std::uint64_t>(
                                                      total, 1u << 16))));
  std::vector<ShardResult> shards(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    threads.emplace_back(run_shard, lo, hi, std::ref(shards[w]));
  }
  for (std::thread& t : threads) t.join();

  std::map<std::string, std::int64_t> first_failure;
  std::vector<Valid> valid;
  for (ShardResult& s : shards) {
    for (const auto& [label, count] : s.first_failure) first_failure[label] += count;
    for (Valid& v : s.valid) valid.push_back(std::move(v));
  }
  // shards cover ascending index ranges, so concatenation is index-ordered
  const Valid* rep_min = nullptr;
  for (const Valid& v : valid)
    if (!rep_min || v.flat < rep_min->flat) rep_min = &v;

  auto rows_json = [&](const std::vector<std::int64_t>& flat, std::size_t offset, int rows,
                       int cols) {
    Json out_rows = Json::array();
    for (int i = 0; i < rows; ++i) {
      Json row = Json::array();
      for (int j = 0; j < cols; ++j)
        row.push_back(std::to_string(flat[offset + static_cast<std::size_t>(i) * cols + j]));
      out_rows.push_back(std::move(row));
    }
    return out_rows;
  };
  const int rrows = na * nb, rcols = nb * na, qrows = na * nb, qcols = na * nb;
  auto candidate_json = [&](const Valid& v) {
    Json j{{"index", v.index}, {"R", rows_json(v.flat, 0, rrows, rcols)}};
    if (with_q)
      j["Q"] = rows_json(v.flat, static_cast<std::size_t>(rrows) * rcols, qrows, qcols);
    return j;
  };

  Json failures = Json::object();
  for (const auto& [label, count] : first_failure) failures[label] = count;
  Json listed = Json::array();
  for (std::size_t i = 0; i < valid.size() && i < kListCap; ++i)
    listed.push_back(candidate_json(valid[i]));

  Json census{{"command", "search"},
              {"field", field.name()},
              {"a", A.label},
              {"b", B.label},
              {"dims", Json::array({na, nb})},
              {"what", with_q ? "RQ" : "R"},
              {"mode", o.mode},
              {"seed", o.seed},
              {"budget", o.budget},
              {"free_entries", nfree},
              {"space", space.get_str()},
              {"evaluated", total},
              {"complete", exhaustive && mpz_class(static_cast<unsigned long>(total)) == space},
              {"valid", valid.size()},
              {"valid_listed", std::min(valid.size(), kListCap)},
              {"first_failure", std::move(failures)},
              {"representative", rep_min ? candidate_json(*rep_min) : Json()}};
  census["valid_matrices"] = std::move(listed);

  std::ostringstream summary;
  summary << "search over " << field.name() << " on (" << A.label << ", " << B.label
          << "), " << (with_q ? "(R,Q) pairs" : "R maps") << ", mode " << o.mode << "\n"
          << "  free entries " << nfree << ", space " << space.get_str() << ", evaluated "
          << total << (census["complete"].get<bool>() ? "" : " (partial census)") << "\n"
          << "  valid " << valid.size() << "\n";
  for (const auto& [label, count] : first_failure)
    summary << "  rejected at " << label << ": " << count << "\n";

  if (o.out.empty()) {
    std::cout << census.dump(2) << "\n";
  } else {
    write_output(o.out, census.dump(2) + "\n");
    std::cout << summary.str();
  }
  if (!census["complete"].get<bool>() && exhaustive)
    std::cerr << "note: budget exhausted before the space was covered; census is partial\n";
  return 0;
}

int run_guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const build_error& e) {
    std::cout << e.report.to_text();
    std::cout << "overall: FAIL (preconditions)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Reads the field tag from the file, cross-checks --field if given, and
// dispatches the command on the concrete field type.
template <class Cmd>
int run_on_file(const FileOpts& o, const std::string& echo, Cmd cmd) {
  Json doc = load_document(o.path);
  std::string tag = document_field_tag(doc);
  if (!o.field.empty() && o.field != tag)
    throw field_error("file declares field " + tag + ", --field says " + o.field);
  return with_field(tag, [&](const auto& f) { return cmd(f, doc, o, echo); });
}

}  // namespace

int main(int argc, char** argv) {
  std::string echo = "lrtt";
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];

  CLI::App app{"exact construction and verification of twisted tensor products"};
  app.require_subcommand(1);

  FileOpts chk, bld, itr, sms, inv, det;
  CatalogOpts cat;
  SearchOpts sea;

  auto add_common = [](CLI::App* sub, FileOpts& o, bool with_force) {
    sub->add_option("file", o.path, "input JSON document")->required();
    sub->add_option("--label", o.label, "block label (default: first of the matching kind)");
    sub->add_option("--field", o.field, "cross-check the file's field tag");
    sub->add_option("--out", o.out, "write the machine-readable result here");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    if (with_force)
      sub->add_flag("--force", o.force, "skip precondition checks before building");
  };

  CLI::App* c_check = app.add_subcommand("check", "run the full check suite for one block");
  add_common(c_check, chk, false);
  c_check->add_option("--kind", chk.kind, "structure kind")
      ->required()
      ->check(CLI::IsMember({"algebra", "twisting", "qmap", "lrpair", "bialgebra", "hopf",
                             "bimodule", "bicomodule", "ydl", "cocycle", "twistdata",
                             "triple"}));

  CLI::App* c_build = app.add_subcommand("build", "build a product algebra and re-validate it");
  add_common(c_build, bld, true);
  c_build->add_option("--what", bld.what, "product to build")
      ->check(CLI::IsMember({"lr", "twisted", "q", "twistor"}));

  CLI::App* c_iter = app.add_subcommand("iterate", "three-factor iterated product, both ways");
  add_common(c_iter, itr, true);

  CLI::App* c_smash = app.add_subcommand("smash", "smash pair and product from module data");
  add_common(c_smash, sms, true);
  c_smash->add_option("--bicomodule", sms.bicomodule,
                      "bicomodule block (default: comultiplication on both sides)");

  CLI::App* c_inv = app.add_subcommand("invariance", "bullet algebra, twisted pair and isomorphism");
  add_common(c_inv, inv, true);

  CLI::App* c_det = app.add_subcommand("detwist", "P = Q^-1∘R plus the comparison isomorphism");
  add_common(c_det, det, true);

  CLI::App* c_cat = app.add_subcommand("catalog", "stock instances, validated on load");
  c_cat->require_subcommand(1);
  CLI::App* c_list = c_cat->add_subcommand("list", "list entry ids, kinds and descriptions");
  CLI::App* c_exp = c_cat->add_subcommand("export", "write one entry as a JSON document");
  c_exp->add_option("id", cat.id, "catalog entry id")->required();
  for (CLI::App* sub : {c_list, c_exp}) {
    sub->add_option("--field", cat.field, "field tag, Q or F<p>")->capture_default_str();
    sub->add_option("--jobs", cat.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--no-validate", cat.no_validate, "skip the load-time check suites");
  }
  c_exp->add_option("--out", cat.out, "write the document here instead of stdout");

  CLI::App* c_search = app.add_subcommand("search", "census of valid maps over a prime field");
  c_search->add_option("--field", sea.field, "prime field tag F<p>")->capture_default_str();
  c_search->add_option("--dims", sea.dims, "group algebra dimensions a,b")
      ->delimiter(',')
      ->expected(2);
  c_search->add_option("--what", sea.what, "search for R maps or (R,Q) pairs")
      ->check(CLI::IsMember({"r", "rq"}))
      ->capture_default_str();
  c_search->add_option("--mode", sea.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  c_search->add_option("--seed", sea.seed, "RNG seed for random mode")->capture_default_str();
  c_search->add_option("--budget", sea.budget, "candidate cap (0: exhaust or 1000 draws)");
  c_search->add_option("--file", sea.file,
                       "document with algebra blocks labelled A and B instead of group algebras");
  c_search->add_option("--out", sea.out, "write the census here; summary goes to stdout");
  c_search->add_option("--jobs", sea.jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (c_check->parsed())
    return run_guarded([&] {
      return run_on_file(chk, echo, [](const auto& f, const Json& d, const FileOpts& o,
                                       const std::string& e) { return cmd_check(f, d, o, e); });
    });
  if (c_build->parsed())
    return run_guarded([&] {
      return run_on_file(bld, echo, [](const auto& f, const Json& d, const FileOpts& o,
                                       const std::string& e) { return cmd_build(f, d, o, e); });
    });
  if (c_iter->parsed())
    return run_guarded([&] {
      return run_on_file(itr, echo, [](const auto& f, const Json& d, const FileOpts& o,
                                       const std::string& e) { return cmd_iterate(f, d, o, e); });
    });
  if (c_smash->parsed())
    return run_guarded([&] {
      return run_on_file(sms, echo, [](const auto& f, const Json& d, const FileOpts& o,
                                       const std::string& e) { return cmd_smash(f, d, o, e); });
    });
  if (c_inv->parsed())
    return run_guarded([&] {
      return run_on_file(inv, echo, [](const auto& f, const Json& d, const FileOpts& o,
                                       const std::string& e) { return cmd_invariance(f, d, o, e); });
    });
  if (c_det->parsed())
    return run_guarded([&] {
      return run_on_file(det, echo, [](const auto& f, const Json& d, const FileOpts& o,
                                       const std::string& e) { return cmd_detwist(f, d, o, e); });
    });
  if (c_cat->parsed())
    return run_guarded([&] {
      return with_field(cat.field, [&](const auto& f) {
        return c_list->parsed() ? cmd_catalog_list(f, cat) : cmd_catalog_export(f, cat);
      });
    });
  if (c_search->parsed())
    return run_guarded([&] {
      FieldTag tag = parse_field_tag(sea.field);
      const GFp* f = std::get_if<GFp>(&tag);
      if (!f) throw std::invalid_argument("search requires a prime field tag F<p>");
      return cmd_search(*f, sea);
    });
  return 2;
}
