#pragma once

// Identity verification engine.
//
// Every structural identity in this library ((tw4), (comb1), hexagon
// conditions, ...) is a pair of programs that act on named tensor legs:
// "apply this linear map to legs (b, a'), call the results (x, y)".
// An Identity is checked by exhaustive basis enumeration: for each tuple of
// basis vectors of the input legs, both programs run on a sparse tensor
// state and the resulting vectors are compared exactly. Reports carry the
// total violation count and the lexicographically first witness; chunked
// multi-threading cannot change either.
//
// The same programs, run over every basis tuple, also compile to explicit
// matrices (compile_program), which is how all derived structure maps
// (smash-product R and Q, canonical twistors, iterated-product maps, ...)
// are built.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lrtwist/report.hpp"
#include "lrtwist/tensor.hpp"

namespace lrtwist {

template <class K>
struct SparseTerm {
  std::int64_t idx;
  typename K::Elem c;

  bool operator==(const SparseTerm& o) const { return idx == o.idx && c == o.c; }
};

// State of a tensor-leg computation: a sparse vector over the tensor product
// of the current legs, each leg carrying a name.
template <class K>
class Expr {
 public:
  using Elem = typename K::Elem;

  explicit Expr(const K& field) : field_(field) {
    terms_.push_back({0, field.one()});  // scalar 1 in the empty tensor product
  }

  const Shape& dims() const { return dims_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<SparseTerm<K>>& terms() const { return terms_; }

  // Appends one leg holding the index-th basis vector.
  void load_basis(const std::string& name, int dim, int index) {
    std::vector<Elem> v(static_cast<std::size_t>(dim), field_.zero());
    v[index] = field_.one();
    load({name}, {dim}, v);
  }

  // Appends legs holding a fixed tensor (e.g. a cocycle F ∈ H⊗H).
  void load(const std::vector<std::string>& names, const Shape& legs,
            const std::vector<Elem>& dense) {
    if (names.size() != legs.size())
      throw std::invalid_argument("load: one name per leg required");
    std::int64_t tot = shape_total(legs);
    if (static_cast<std::int64_t>(dense.size()) != tot)
      throw std::invalid_argument("load: vector does not match leg shape");
    for (const auto& n : names) require_fresh(n);
    std::vector<SparseTerm<K>> out;
    for (const auto& t : terms_)
      for (std::int64_t j = 0; j < tot; ++j) {
        if (dense[j].is_zero()) continue;
        out.push_back({t.idx * tot + j, t.c * dense[j]});
      }
    terms_ = std::move(out);  // ordered: terms_ sorted, j ascending
    dims_.insert(dims_.end(), legs.begin(), legs.end());
    names_.insert(names_.end(), names.begin(), names.end());
  }

  // Applies map to the named legs (consumed in the given order) and names the
  // produced legs out. The new legs sit where the first consumed leg was.
  void apply(const LinMap<K>& map, const std::vector<std::string>& in,
             const std::vector<std::string>& out) {
    if (in.size() != map.in.size() || out.size() != map.out.size())
      throw std::invalid_argument("apply: leg count does not match map shape");
    if (map.mat.field() != field_) throw field_error("apply: map over a different field");

    std::vector<int> pos(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) pos[k] = leg_pos(in[k]);
    int block = pos.empty() ? static_cast<int>(dims_.size())
                            : *std::min_element(pos.begin(), pos.end());

    // gather the consumed legs into a contiguous block starting at `block`
    std::vector<int> src;
    std::vector<bool> consumed(dims_.size(), false);
    for (int p : pos) consumed[p] = true;
    for (int i = 0; i < block; ++i) src.push_back(i);
    for (int p : pos) src.push_back(p);
    for (int i = block; i < static_cast<int>(dims_.size()); ++i)
      if (!consumed[i]) src.push_back(i);
    permute(src);

    for (std::size_t k = 0; k < in.size(); ++k)
      if (dims_[block + k] != map.in[k])
        throw std::invalid_argument("apply: leg '" + in[k] + "' has dimension " +
                                    std::to_string(dims_[block + k]) + ", map expects " +
                                    std::to_string(map.in[k]));

    apply_at(map, block);

    std::vector<std::string> names;
    names.insert(names.end(), names_.begin(), names_.begin() + block);
    names.insert(names.end(), out.begin(), out.end());
    names.insert(names.end(), names_.begin() + block + in.size(), names_.end());
    names_ = std::move(names);
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("apply: duplicate leg name '" + names_[i] + "'");
  }

  // Reorders the legs; every program ends with this to fix the output order.
  void order(const std::vector<std::string>& names) {
    if (names.size() != names_.size())
      throw std::invalid_argument("order: wrong number of legs");
    std::vector<int> src(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) src[k] = leg_pos(names[k]);
    permute(src);
    names_ = names;
  }

  bool same_value(const Expr& o) const {
    return dims_ == o.dims_ && terms_ == o.terms_;
  }

  // "e0⊗f1 + 2·e1⊗f0"; one symbol per leg.
  std::string render(const std::vector<std::string>& symbols) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      std::string c = t.c.str();
      std::string basis;
      std::vector<int> ix = unflatten(dims_, t.idx);
      for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (k) basis += "⊗";
        std::string sym = k < symbols.size() ? symbols[k] : "v";
        basis += sym + std::to_string(ix[k]);
      }
      if (basis.empty()) basis = "1";
      if (c == "1") s += basis;
      else if (c == "-1") s += "-" + basis;
      else s += c + "·" + basis;
    }
    return s;
  }

 private:
  int leg_pos(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("no leg named '" + name + "'");
  }

  void require_fresh(const std::string& name) const {
    for (const auto& n : names_)
      if (n == name) throw std::invalid_argument("duplicate leg name '" + name + "'");
  }

  // src[k] = current position of the leg that ends up in slot k.
  void permute(const std::vector<int>& src) {
    bool trivial = true;
    for (std::size_t k = 0; k < src.size(); ++k)
      if (src[k] != static_cast<int>(k)) { trivial = false; break; }
    if (trivial) return;

    Shape nd(src.size());
    std::vector<std::string> nn(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
      nd[k] = dims_[src[k]];
      nn[k] = names_[src[k]];
    }
    for (auto& t : terms_) {
      std::vector<int> ix = unflatten(dims_, t.idx);
      std::vector<int> nx(src.size());
      for (std::size_t k = 0; k < src.size(); ++k) nx[k] = ix[src[k]];
      t.idx = flat_index(nd, nx);
    }
    dims_ = std::move(nd);
    names_ = std::move(nn);
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.idx < b.idx; });
  }

  // Applies map to the legs [pos, pos + map.in.size()).
  void apply_at(const LinMap<K>& map, int pos) {
    int k = static_cast<int>(map.in.size());
    std::int64_t in_tot = shape_total(map.in);
    std::int64_t out_tot = shape_total(map.out);
    std::int64_t suf = 1;
    for (std::size_t i = pos + k; i < dims_.size(); ++i) suf *= dims_[i];

    std::vector<SparseTerm<K>> out;
    for (const auto& t : terms_) {
      std::int64_t s = t.idx % suf;
      std::int64_t rest = t.idx / suf;
      std::int64_t mid = rest % in_tot;
      std::int64_t pre = rest / in_tot;
      for (std::int64_t row = 0; row < out_tot; ++row) {
        const Elem& c = map.mat.at(static_cast<int>(row), static_cast<int>(mid));
        if (c.is_zero()) continue;
        out.push_back({(pre * out_tot + row) * suf + s, t.c * c});
      }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.idx < b.idx; });
    std::vector<SparseTerm<K>> merged;
    for (auto& t : out) {
      if (!merged.empty() && merged.back().idx == t.idx) merged.back().c += t.c;
      else merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.c.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);

    Shape nd;
    nd.insert(nd.end(), dims_.begin(), dims_.begin() + pos);
    nd.insert(nd.end(), map.out.begin(), map.out.end());
    nd.insert(nd.end(), dims_.begin() + pos + k, dims_.end());
    dims_ = std::move(nd);
  }

  K field_;
  Shape dims_;
  std::vector<std::string> names_;
  std::vector<SparseTerm<K>> terms_;
};

struct LegSpec {
  std::string name;
  int dim;
  std::string symbol;  // basis symbol used in witnesses: a=e1
};

template <class K>
using Program = std::function<void(Expr<K>&)>;

template <class K>
struct Identity {
  std::string label;
  std::vector<LegSpec> legs;
  Program<K> lhs, rhs;
  std::vector<std::string> out_symbols;  // per output leg, for witnesses
};

namespace detail {

struct ScanResult {
  std::int64_t count = 0;
  std::int64_t first = -1;
  std::string witness;
};

// Deterministic chunked scan: results merge in index order, so the first
// witness is independent of the number of jobs.
template <class Fn>
ScanResult scan_chunks(std::int64_t total, int jobs, Fn&& fn) {
  int j = static_cast<int>(std::max<std::int64_t>(
      1, std::min<std::int64_t>(jobs <= 0 ? 1 : jobs, total)));
  std::vector<ScanResult> parts(j);
  if (j == 1) {
    parts[0] = fn(std::int64_t{0}, total);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errs(j);
    for (int c = 0; c < j; ++c) {
      std::int64_t b = total * c / j, e = total * (c + 1) / j;
      threads.emplace_back([&, c, b, e] {
        try {
          parts[c] = fn(b, e);
        } catch (...) {
          errs[c] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& err : errs)
      if (err) std::rethrow_exception(err);
  }
  ScanResult r;
  for (const auto& p : parts) {
    r.count += p.count;
    if (p.first >= 0 && (r.first < 0 || p.first < r.first)) {
      r.first = p.first;
      r.witness = p.witness;
    }
  }
  return r;
}

}  // namespace detail

template <class K>
CheckItem run_identity(const K& field, const Identity<K>& id, int jobs = 1) {
  Shape dims;
  for (const auto& l : id.legs) dims.push_back(l.dim);
  std::int64_t total = shape_total(dims);

  auto evaluate = [&](std::int64_t t) {
    std::vector<int> ix = unflatten(dims, t);
    Expr<K> base(field);
    for (std::size_t k = 0; k < id.legs.size(); ++k)
      base.load_basis(id.legs[k].name, id.legs[k].dim, ix[k]);
    Expr<K> l = base, r = std::move(base);
    id.lhs(l);
    id.rhs(r);
    if (l.dims() != r.dims())
      throw std::logic_error("identity '" + id.label + "': sides have different shapes");
    return std::pair<Expr<K>, Expr<K>>(std::move(l), std::move(r));
  };

  auto res = detail::scan_chunks(total, jobs, [&](std::int64_t b, std::int64_t e) {
    detail::ScanResult out;
    for (std::int64_t t = b; t < e; ++t) {
      auto [l, r] = evaluate(t);
      if (l.same_value(r)) continue;
      ++out.count;
      if (out.first < 0) {
        out.first = t;
        std::vector<int> ix = unflatten(dims, t);
        std::string w;
        for (std::size_t k = 0; k < id.legs.size(); ++k) {
          if (k) w += ", ";
          w += id.legs[k].name + "=" + id.legs[k].symbol + std::to_string(ix[k]);
        }
        out.witness = w + ": lhs = " + l.render(id.out_symbols) +
                      ", rhs = " + r.render(id.out_symbols);
      }
    }
    return out;
  });

  return CheckItem{id.label, res.count == 0, res.count, res.witness};
}

template <class K>
Report run_identities(const K& field, std::string subject,
                      const std::vector<Identity<K>>& ids, int jobs = 1) {
  Report rep;
  rep.subject = std::move(subject);
  for (const auto& id : ids) rep.add(run_identity(field, id, jobs));
  return rep;
}

// Several equations reported under one label (e.g. the two unit equations
// that together form (tw0)): violations add, the first witness wins.
inline CheckItem merge_items(const std::string& label, const std::vector<CheckItem>& items) {
  CheckItem out{label, true, 0, ""};
  for (const auto& it : items) {
    out.violations += it.violations;
    if (!it.pass && out.pass) {
      out.pass = false;
      out.witness = it.witness;
    }
  }
  return out;
}

// Runs the program on every basis tuple of the given legs and assembles the
// matrix of the resulting linear map.
template <class K>
LinMap<K> compile_program(const K& field, const std::vector<LegSpec>& legs,
                          const Program<K>& prog) {
  Shape in;
  for (const auto& l : legs) in.push_back(l.dim);
  std::int64_t total = shape_total(in);

  auto run = [&](std::int64_t t) {
    std::vector<int> ix = unflatten(in, t);
    Expr<K> e(field);
    for (std::size_t k = 0; k < legs.size(); ++k)
      e.load_basis(legs[k].name, legs[k].dim, ix[k]);
    prog(e);
    return e;
  };

  Expr<K> probe = run(0);
  Shape out = probe.dims();
  Matrix<K> m(field, static_cast<int>(shape_total(out)), static_cast<int>(total));
  for (std::int64_t t = 0; t < total; ++t) {
    Expr<K> e = run(t);
    if (e.dims() != out) throw std::logic_error("compiled program has unstable shape");
    for (const auto& term : e.terms())
      m.at(static_cast<int>(term.idx), static_cast<int>(t)) = term.c;
  }
  return LinMap<K>(in, out, std::move(m));
}

}  // namespace lrtwist
