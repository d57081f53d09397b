#include <algorithm>
#include <sstream>

#include "eic/instance.hpp"

// Self-indexing of finite sets: the fiber over X is FinSet/X, tensor is a
// chosen pullback over X, reindexing is a chosen pullback along the base map.
// These choices are not strict, so the coherence isomorphisms below are
// honest bijections computed on carrier elements.

namespace eic {

namespace {

const SliceData& sd(const FibObj& o) { return std::get<SliceData>(o.data); }
const FinFunction& cm(const FibMor& m) { return std::get<CarrierMorData>(m.data).map; }
int bsize(const BaseObj& x) { return std::get<FinSet>(x.v).size; }
const FinFunction& bfn(const BaseMor& f) { return std::get<FinFunction>(f.v); }

using IPair = std::pair<int, int>;

int find_pair(const std::vector<IPair>& v, IPair p) {
  auto it = std::find(v.begin(), v.end(), p);
  if (it == v.end()) throw StructuralError("self: element lookup failed");
  return static_cast<int>(it - v.begin());
}

// pairs (i, j) with a(i) = b(j), lexicographic
std::vector<IPair> ten_elems(const FinFunction& a, const FinFunction& b) {
  std::vector<IPair> out;
  for (int i = 0; i < a.dom; ++i)
    for (int j = 0; j < b.dom; ++j)
      if (a(i) == b(j)) out.emplace_back(i, j);
  return out;
}

// pairs (y, i) with f(y) = a(i), lexicographic
std::vector<IPair> pb_elems(const FinFunction& f, const FinFunction& a) {
  std::vector<IPair> out;
  for (int y = 0; y < f.dom; ++y)
    for (int i = 0; i < a.dom; ++i)
      if (f(y) == a(i)) out.emplace_back(y, i);
  return out;
}

struct Section {
  int y = 0;
  std::vector<int> picks;  // absolute carrier indices, one per fiber element of f over y
  friend bool operator==(const Section&, const Section&) = default;
};

std::vector<std::vector<int>> fibers_of(const FinFunction& f) {
  std::vector<std::vector<int>> fib(static_cast<size_t>(f.cod));
  for (int x = 0; x < f.dom; ++x) fib[static_cast<size_t>(f(x))].push_back(x);
  return fib;
}

// sections of a over each fiber of f; row-major in ascending fiber order
std::vector<Section> pi_elems(const FinFunction& f, const FinFunction& a) {
  auto ffib = fibers_of(f);
  auto afib = fibers_of(a);
  std::vector<Section> out;
  for (int y = 0; y < f.cod; ++y) {
    const auto& xs = ffib[static_cast<size_t>(y)];
    std::vector<size_t> idx(xs.size(), 0);
    bool dead = false;
    for (int x : xs) dead = dead || afib[static_cast<size_t>(x)].empty();
    if (dead) continue;
    for (;;) {
      Section s;
      s.y = y;
      for (size_t t = 0; t < xs.size(); ++t)
        s.picks.push_back(afib[static_cast<size_t>(xs[t])][idx[t]]);
      out.push_back(std::move(s));
      int t = static_cast<int>(xs.size()) - 1;
      while (t >= 0 && idx[static_cast<size_t>(t)] + 1 >= afib[static_cast<size_t>(xs[static_cast<size_t>(t)])].size()) {
        idx[static_cast<size_t>(t)] = 0;
        --t;
      }
      if (t < 0) break;
      ++idx[static_cast<size_t>(t)];
    }
  }
  return out;
}

int find_section(const std::vector<Section>& v, const Section& s) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) throw StructuralError("self: section lookup failed");
  return static_cast<int>(it - v.begin());
}

// fiberwise functions b^-1(x) -> c^-1(x); vals hold absolute indices in C
struct FibFun {
  int x = 0;
  std::vector<int> vals;
  friend bool operator==(const FibFun&, const FibFun&) = default;
};

std::vector<FibFun> fhom_elems(const FinFunction& b, const FinFunction& c) {
  auto bfib = fibers_of(b);
  auto cfib = fibers_of(c);
  std::vector<FibFun> out;
  for (int x = 0; x < b.cod; ++x) {
    const auto& js = bfib[static_cast<size_t>(x)];
    if (!js.empty() && cfib[static_cast<size_t>(x)].empty()) continue;
    std::vector<size_t> idx(js.size(), 0);
    for (;;) {
      FibFun t;
      t.x = x;
      for (size_t s = 0; s < js.size(); ++s) t.vals.push_back(cfib[static_cast<size_t>(x)][idx[s]]);
      out.push_back(std::move(t));
      int s = static_cast<int>(js.size()) - 1;
      while (s >= 0 && idx[static_cast<size_t>(s)] + 1 >= cfib[static_cast<size_t>(x)].size()) {
        idx[static_cast<size_t>(s)] = 0;
        --s;
      }
      if (s < 0) break;
      ++idx[static_cast<size_t>(s)];
    }
  }
  return out;
}

int find_fibfun(const std::vector<FibFun>& v, const FibFun& t) {
  auto it = std::find(v.begin(), v.end(), t);
  if (it == v.end()) throw StructuralError("self: fiberwise function lookup failed");
  return static_cast<int>(it - v.begin());
}

class SelfFinSetInstance final : public Instance {
 public:
  SelfFinSetInstance() {
    caps_.sigma = caps_.pi = caps_.closed = true;
    caps_.fib_colims = caps_.fib_lims = true;
    caps_.sigma_tensor = true;
    caps_.bc_general = true;
  }

  std::string name() const override { return "self(finset)"; }
  const BaseCat& base() const override { return base_; }
  const Caps& caps() const override { return caps_; }

  bool valid_obj(const FibObj& o) const override {
    return std::holds_alternative<SliceData>(o.data) && sd(o).to_base.cod == bsize(o.base);
  }

  FibMor id(const FibObj& a) const override {
    return FibMor{a, a, CarrierMorData{fin_id(sd(a).to_base.dom)}};
  }

  FibMor compose(const FibMor& g, const FibMor& f) const override {
    if (!(f.cod == g.dom)) throw StructuralError("self: compose mismatch");
    return FibMor{f.dom, g.cod, CarrierMorData{fin_compose(cm(g), cm(f))}};
  }

  long hom_count(const FibObj& a, const FibObj& b) const override {
    auto bf = fibers_of(sd(b).to_base);
    long n = 1;
    for (int i = 0; i < sd(a).to_base.dom; ++i)
      n *= static_cast<long>(bf[static_cast<size_t>(sd(a).to_base(i))].size());
    return n;
  }

  std::vector<FibMor> enum_hom(const FibObj& a, const FibObj& b) const override {
    auto bf = fibers_of(sd(b).to_base);
    const int n = sd(a).to_base.dom;
    std::vector<const std::vector<int>*> cand;
    for (int i = 0; i < n; ++i) {
      cand.push_back(&bf[static_cast<size_t>(sd(a).to_base(i))]);
      if (cand.back()->empty()) return {};
    }
    std::vector<FibMor> out;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    for (;;) {
      std::vector<int> t(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = (*cand[static_cast<size_t>(i)])[idx[static_cast<size_t>(i)]];
      out.push_back(FibMor{a, b, CarrierMorData{FinFunction(n, sd(b).to_base.dom, std::move(t))}});
      int i = 0;
      while (i < n && idx[static_cast<size_t>(i)] + 1 >= cand[static_cast<size_t>(i)]->size()) idx[static_cast<size_t>(i++)] = 0;
      if (i >= n) break;
      ++idx[static_cast<size_t>(i)];
    }
    return out;
  }

  std::optional<FibMor> try_invert(const FibMor& m) const override {
    auto inv = fin_inverse(cm(m));
    if (!inv) return std::nullopt;
    return FibMor{m.cod, m.dom, CarrierMorData{*inv}};
  }

  FibMor solve_epi(const std::vector<FibMor>& es, const std::vector<FibMor>& vs, const FibObj& p,
                   const FibObj& q) const override {
    std::vector<int> t(static_cast<size_t>(sd(p).to_base.dom), -1);
    for (size_t i = 0; i < es.size(); ++i)
      for (int y = 0; y < cm(es[i]).dom; ++y) {
        int x = cm(es[i])(y), v = cm(vs[i])(y);
        if (t[static_cast<size_t>(x)] < 0)
          t[static_cast<size_t>(x)] = v;
        else if (t[static_cast<size_t>(x)] != v)
          throw StructuralError("self solve_epi: inconsistent values");
      }
    for (int x : t)
      if (x < 0) throw StructuralError("self solve_epi: family not jointly surjective");
    return FibMor{p, q, CarrierMorData{FinFunction(sd(p).to_base.dom, sd(q).to_base.dom, std::move(t))}};
  }

  FibObj unit(const BaseObj& x) const override { return make_slice(x, fin_id(bsize(x))); }

  FibObj tensor(const FibObj& a, const FibObj& b) const override {
    require_same_base(a, b);
    auto es = ten_elems(sd(a).to_base, sd(b).to_base);
    std::vector<int> t;
    t.reserve(es.size());
    for (auto [i, j] : es) {
      (void)j;
      t.push_back(sd(a).to_base(i));
    }
    return make_slice(a.base, FinFunction(static_cast<int>(es.size()), bsize(a.base), std::move(t)));
  }

  FibMor tensor_mor(const FibMor& f, const FibMor& g) const override {
    auto src = ten_elems(sd(f.dom).to_base, sd(g.dom).to_base);
    auto dst = ten_elems(sd(f.cod).to_base, sd(g.cod).to_base);
    std::vector<int> t;
    t.reserve(src.size());
    for (auto [i, j] : src) t.push_back(find_pair(dst, {cm(f)(i), cm(g)(j)}));
    return FibMor{tensor(f.dom, g.dom), tensor(f.cod, g.cod),
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor assoc(const FibObj& a, const FibObj& b, const FibObj& c) const override {
    FibObj ab = tensor(a, b), bc = tensor(b, c);
    auto e_ab = ten_elems(sd(a).to_base, sd(b).to_base);
    auto e_bc = ten_elems(sd(b).to_base, sd(c).to_base);
    auto e_l = ten_elems(sd(ab).to_base, sd(c).to_base);
    auto e_r = ten_elems(sd(a).to_base, sd(bc).to_base);
    std::vector<int> t;
    t.reserve(e_l.size());
    for (auto [p, k] : e_l) {
      auto [i, j] = e_ab[static_cast<size_t>(p)];
      t.push_back(find_pair(e_r, {i, find_pair(e_bc, {j, k})}));
    }
    return FibMor{tensor(ab, c), tensor(a, bc),
                  CarrierMorData{FinFunction(static_cast<int>(e_l.size()), static_cast<int>(e_r.size()), std::move(t))}};
  }

  FibMor lunit(const FibObj& a) const override {
    FibObj u = unit(a.base);
    auto es = ten_elems(sd(u).to_base, sd(a).to_base);
    std::vector<int> t;
    for (auto [x, i] : es) {
      (void)x;
      t.push_back(i);
    }
    return FibMor{tensor(u, a), a,
                  CarrierMorData{FinFunction(static_cast<int>(es.size()), sd(a).to_base.dom, std::move(t))}};
  }

  FibMor runit(const FibObj& a) const override {
    FibObj u = unit(a.base);
    auto es = ten_elems(sd(a).to_base, sd(u).to_base);
    std::vector<int> t;
    for (auto [i, x] : es) {
      (void)x;
      t.push_back(i);
    }
    return FibMor{tensor(a, u), a,
                  CarrierMorData{FinFunction(static_cast<int>(es.size()), sd(a).to_base.dom, std::move(t))}};
  }

  FibMor symm(const FibObj& a, const FibObj& b) const override {
    auto src = ten_elems(sd(a).to_base, sd(b).to_base);
    auto dst = ten_elems(sd(b).to_base, sd(a).to_base);
    std::vector<int> t;
    for (auto [i, j] : src) t.push_back(find_pair(dst, {j, i}));
    return FibMor{tensor(a, b), tensor(b, a),
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), static_cast<int>(dst.size()), std::move(t))}};
  }

  FibObj pull(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    if (fn.cod != bsize(a.base)) throw StructuralError("self pull: base mismatch");
    auto es = pb_elems(fn, sd(a).to_base);
    std::vector<int> t;
    for (auto [y, i] : es) {
      (void)i;
      t.push_back(y);
    }
    return make_slice(BaseObj{FinSet{fn.dom}},
                      FinFunction(static_cast<int>(es.size()), fn.dom, std::move(t)));
  }

  FibMor pull_mor(const BaseMor& f, const FibMor& m) const override {
    const auto& fn = bfn(f);
    auto src = pb_elems(fn, sd(m.dom).to_base);
    auto dst = pb_elems(fn, sd(m.cod).to_base);
    std::vector<int> t;
    for (auto [y, i] : src) t.push_back(find_pair(dst, {y, cm(m)(i)}));
    return FibMor{pull(f, m.dom), pull(f, m.cod),
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor pull_comp(const BaseMor& f, const BaseMor& g, const FibObj& a) const override {
    const auto& fn = bfn(f);
    const auto& gn = bfn(g);
    FibObj ga = pull(g, a);
    auto e_g = pb_elems(gn, sd(a).to_base);
    auto e_fg = pb_elems(fn, sd(ga).to_base);
    auto e_gf = pb_elems(fin_compose(gn, fn), sd(a).to_base);
    std::vector<int> t;
    for (auto [z, e] : e_fg) t.push_back(find_pair(e_gf, {z, e_g[static_cast<size_t>(e)].second}));
    return FibMor{pull(f, ga), pull(base_.compose(g, f), a),
                  CarrierMorData{FinFunction(static_cast<int>(e_fg.size()), static_cast<int>(e_gf.size()), std::move(t))}};
  }

  FibMor pull_id(const FibObj& a) const override {
    auto es = pb_elems(fin_id(bsize(a.base)), sd(a).to_base);
    std::vector<int> t;
    for (auto [x, i] : es) {
      (void)x;
      t.push_back(i);
    }
    return FibMor{pull(base_.id(a.base), a), a,
                  CarrierMorData{FinFunction(static_cast<int>(es.size()), sd(a).to_base.dom, std::move(t))}};
  }

  FibMor pull_ten(const BaseMor& f, const FibObj& a, const FibObj& b) const override {
    const auto& fn = bfn(f);
    FibObj fa = pull(f, a), fb = pull(f, b);
    auto e_fa = pb_elems(fn, sd(a).to_base);
    auto e_fb = pb_elems(fn, sd(b).to_base);
    auto e_ab = ten_elems(sd(a).to_base, sd(b).to_base);
    auto src = ten_elems(sd(fa).to_base, sd(fb).to_base);
    auto dst = pb_elems(fn, sd(tensor(a, b)).to_base);
    std::vector<int> t;
    for (auto [e1, e2] : src) {
      auto [y, i] = e_fa[static_cast<size_t>(e1)];
      auto [y2, j] = e_fb[static_cast<size_t>(e2)];
      if (y != y2) throw StructuralError("self pull_ten: base inconsistency");
      t.push_back(find_pair(dst, {y, find_pair(e_ab, {i, j})}));
    }
    return FibMor{tensor(fa, fb), pull(f, tensor(a, b)),
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor pull_unit(const BaseMor& f) const override {
    const auto& fn = bfn(f);
    auto dst = pb_elems(fn, fin_id(fn.cod));
    std::vector<int> t;
    for (int y = 0; y < fn.dom; ++y) t.push_back(find_pair(dst, {y, fn(y)}));
    return FibMor{unit(base_.dom(f)), pull(f, unit(base_.cod(f))),
                  CarrierMorData{FinFunction(fn.dom, static_cast<int>(dst.size()), std::move(t))}};
  }

  FibObj sigma(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    if (fn.dom != bsize(a.base)) throw StructuralError("self sigma: base mismatch");
    return make_slice(base_.cod(f), fin_compose(fn, sd(a).to_base));
  }

  FibMor sigma_mor(const BaseMor& f, const FibMor& m) const override {
    return FibMor{sigma(f, m.dom), sigma(f, m.cod), CarrierMorData{cm(m)}};
  }

  FibMor sigma_unit(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    FibObj sa = sigma(f, a);
    auto dst = pb_elems(fn, sd(sa).to_base);
    std::vector<int> t;
    for (int i = 0; i < sd(a).to_base.dom; ++i) t.push_back(find_pair(dst, {sd(a).to_base(i), i}));
    return FibMor{a, pull(f, sa),
                  CarrierMorData{FinFunction(sd(a).to_base.dom, static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor sigma_counit(const BaseMor& f, const FibObj& b) const override {
    const auto& fn = bfn(f);
    auto es = pb_elems(fn, sd(b).to_base);
    std::vector<int> t;
    for (auto [x, j] : es) {
      (void)x;
      t.push_back(j);
    }
    return FibMor{sigma(f, pull(f, b)), b,
                  CarrierMorData{FinFunction(static_cast<int>(es.size()), sd(b).to_base.dom, std::move(t))}};
  }

  FibObj pi(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    if (fn.dom != bsize(a.base)) throw StructuralError("self pi: base mismatch");
    auto es = pi_elems(fn, sd(a).to_base);
    std::vector<int> t;
    for (const auto& s : es) t.push_back(s.y);
    return make_slice(base_.cod(f), FinFunction(static_cast<int>(es.size()), fn.cod, std::move(t)));
  }

  FibMor pi_mor(const BaseMor& f, const FibMor& m) const override {
    const auto& fn = bfn(f);
    auto src = pi_elems(fn, sd(m.dom).to_base);
    auto dst = pi_elems(fn, sd(m.cod).to_base);
    std::vector<int> t;
    for (const auto& s : src) {
      Section s2;
      s2.y = s.y;
      for (int p : s.picks) s2.picks.push_back(cm(m)(p));
      t.push_back(find_section(dst, s2));
    }
    return FibMor{pi(f, m.dom), pi(f, m.cod),
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor pi_unit(const BaseMor& f, const FibObj& b) const override {
    const auto& fn = bfn(f);
    FibObj pb = pull(f, b);
    auto e_pb = pb_elems(fn, sd(b).to_base);
    auto dst = pi_elems(fn, sd(pb).to_base);
    auto ffib = fibers_of(fn);
    std::vector<int> t;
    for (int j = 0; j < sd(b).to_base.dom; ++j) {
      int y = sd(b).to_base(j);
      Section s;
      s.y = y;
      for (int x : ffib[static_cast<size_t>(y)]) s.picks.push_back(find_pair(e_pb, {x, j}));
      t.push_back(find_section(dst, s));
    }
    return FibMor{b, pi(f, pb),
                  CarrierMorData{FinFunction(sd(b).to_base.dom, static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor pi_counit(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    FibObj pa = pi(f, a);
    auto es = pi_elems(fn, sd(a).to_base);
    auto src = pb_elems(fn, sd(pa).to_base);
    auto ffib = fibers_of(fn);
    std::vector<int> t;
    for (auto [x, sidx] : src) {
      const Section& s = es[static_cast<size_t>(sidx)];
      const auto& xs = ffib[static_cast<size_t>(s.y)];
      size_t pos = static_cast<size_t>(std::find(xs.begin(), xs.end(), x) - xs.begin());
      t.push_back(s.picks[pos]);
    }
    return FibMor{pull(f, pa), a,
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), sd(a).to_base.dom, std::move(t))}};
  }

  FibObj fhom(const FibObj& b, const FibObj& c) const override {
    require_same_base(b, c);
    auto es = fhom_elems(sd(b).to_base, sd(c).to_base);
    std::vector<int> t;
    for (const auto& e : es) t.push_back(e.x);
    return make_slice(b.base, FinFunction(static_cast<int>(es.size()), bsize(b.base), std::move(t)));
  }

  FibMor curry(const FibMor& m, const FibObj& a, const FibObj& b, const FibObj& c) const override {
    auto e_ab = ten_elems(sd(a).to_base, sd(b).to_base);
    auto dst = fhom_elems(sd(b).to_base, sd(c).to_base);
    auto bfib = fibers_of(sd(b).to_base);
    std::vector<int> t;
    for (int i = 0; i < sd(a).to_base.dom; ++i) {
      int x = sd(a).to_base(i);
      FibFun ff;
      ff.x = x;
      for (int j : bfib[static_cast<size_t>(x)]) ff.vals.push_back(cm(m)(find_pair(e_ab, {i, j})));
      t.push_back(find_fibfun(dst, ff));
    }
    return FibMor{a, fhom(b, c),
                  CarrierMorData{FinFunction(sd(a).to_base.dom, static_cast<int>(dst.size()), std::move(t))}};
  }

  FibMor ev(const FibObj& b, const FibObj& c) const override {
    FibObj h = fhom(b, c);
    auto es = fhom_elems(sd(b).to_base, sd(c).to_base);
    auto src = ten_elems(sd(h).to_base, sd(b).to_base);
    auto bfib = fibers_of(sd(b).to_base);
    std::vector<int> t;
    for (auto [hi, j] : src) {
      const FibFun& ff = es[static_cast<size_t>(hi)];
      const auto& js = bfib[static_cast<size_t>(ff.x)];
      size_t pos = static_cast<size_t>(std::find(js.begin(), js.end(), j) - js.begin());
      t.push_back(ff.vals[pos]);
    }
    return FibMor{tensor(h, b), c,
                  CarrierMorData{FinFunction(static_cast<int>(src.size()), sd(c).to_base.dom, std::move(t))}};
  }

  Coprod coproduct(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    Coprod out;
    int total = 0;
    for (const auto& o : xs) total += sd(o).to_base.dom;
    std::vector<int> t;
    t.reserve(static_cast<size_t>(total));
    for (const auto& o : xs)
      for (int i = 0; i < sd(o).to_base.dom; ++i) t.push_back(sd(o).to_base(i));
    out.obj = make_slice(x, FinFunction(total, bsize(x), std::move(t)));
    int off = 0;
    for (const auto& o : xs) {
      std::vector<int> inj(static_cast<size_t>(sd(o).to_base.dom));
      for (int i = 0; i < sd(o).to_base.dom; ++i) inj[static_cast<size_t>(i)] = off + i;
      out.in.push_back(FibMor{o, out.obj, CarrierMorData{FinFunction(sd(o).to_base.dom, total, std::move(inj))}});
      off += sd(o).to_base.dom;
    }
    return out;
  }

  FibMor copair(const Coprod& cp, const std::vector<FibMor>& legs, const FibObj& tgt) const override {
    std::vector<int> t(static_cast<size_t>(sd(cp.obj).to_base.dom));
    for (size_t k = 0; k < legs.size(); ++k)
      for (int i = 0; i < cm(legs[k]).dom; ++i)
        t[static_cast<size_t>(cm(cp.in[k])(i))] = cm(legs[k])(i);
    return FibMor{cp.obj, tgt, CarrierMorData{FinFunction(sd(cp.obj).to_base.dom, sd(tgt).to_base.dom, std::move(t))}};
  }

  Coeq coequalizer(const FibMor& u, const FibMor& v) const override {
    QuotientData q = eic::coequalizer(cm(u), cm(v));
    // target map is constant on classes because both legs live over the base
    std::vector<int> t(static_cast<size_t>(q.classes.size));
    for (int i = 0; i < q.source.size; ++i) t[static_cast<size_t>(q.projection(i))] = sd(u.cod).to_base(i);
    Coeq out;
    out.u = u;
    out.v = v;
    out.obj = make_slice(u.cod.base, FinFunction(q.classes.size, bsize(u.cod.base), std::move(t)));
    out.proj = FibMor{u.cod, out.obj, CarrierMorData{q.projection}};
    return out;
  }

  FibMor coeq_factor(const Coeq& ce, const FibMor& m) const override {
    std::vector<int> t(static_cast<size_t>(sd(ce.obj).to_base.dom), -1);
    for (int i = 0; i < cm(m).dom; ++i) {
      int cls = cm(ce.proj)(i);
      if (t[static_cast<size_t>(cls)] < 0)
        t[static_cast<size_t>(cls)] = cm(m)(i);
      else if (t[static_cast<size_t>(cls)] != cm(m)(i))
        throw StructuralError("self coeq_factor: map does not respect the quotient");
    }
    for (int v : t)
      if (v < 0) throw StructuralError("self coeq_factor: projection not surjective");
    return FibMor{ce.obj, m.cod, CarrierMorData{FinFunction(sd(ce.obj).to_base.dom, sd(m.cod).to_base.dom, std::move(t))}};
  }

  Prod product(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    Prod out;
    if (xs.empty()) {
      out.obj = unit(x);
      return out;
    }
    out.obj = xs[0];
    out.out = {id(xs[0])};
    for (size_t k = 1; k < xs.size(); ++k) {
      FibObj prev = out.obj;
      auto es = ten_elems(sd(prev).to_base, sd(xs[k]).to_base);
      FibObj next = tensor(prev, xs[k]);
      std::vector<int> p1(es.size()), p2(es.size());
      for (size_t e = 0; e < es.size(); ++e) {
        p1[e] = es[e].first;
        p2[e] = es[e].second;
      }
      FibMor m1{next, prev, CarrierMorData{FinFunction(static_cast<int>(es.size()), sd(prev).to_base.dom, std::move(p1))}};
      FibMor m2{next, xs[k], CarrierMorData{FinFunction(static_cast<int>(es.size()), sd(xs[k]).to_base.dom, std::move(p2))}};
      for (auto& pout : out.out) pout = compose(pout, m1);
      out.out.push_back(m2);
      out.obj = next;
    }
    return out;
  }

  FibMor pairm(const Prod& pr, const std::vector<FibMor>& legs, const FibObj& src) const override {
    if (legs.empty()) {
      // unique map to the fiber terminal (the unit slice)
      return FibMor{src, pr.obj, CarrierMorData{sd(src).to_base}};
    }
    FibMor m = legs[0];
    FibObj acc = legs[0].cod;
    for (size_t k = 1; k < legs.size(); ++k) {
      auto es = ten_elems(sd(acc).to_base, sd(legs[k].cod).to_base);
      FibObj next = tensor(acc, legs[k].cod);
      std::vector<int> t(static_cast<size_t>(sd(src).to_base.dom));
      for (int i = 0; i < sd(src).to_base.dom; ++i)
        t[static_cast<size_t>(i)] = find_pair(es, {cm(m)(i), cm(legs[k])(i)});
      m = FibMor{src, next, CarrierMorData{FinFunction(sd(src).to_base.dom, static_cast<int>(es.size()), std::move(t))}};
      acc = next;
    }
    return m;
  }

  Eq equalizer(const FibMor& u, const FibMor& v) const override {
    std::vector<int> keep;
    for (int i = 0; i < cm(u).dom; ++i)
      if (cm(u)(i) == cm(v)(i)) keep.push_back(i);
    std::vector<int> t;
    for (int i : keep) t.push_back(sd(u.dom).to_base(i));
    Eq out;
    out.u = u;
    out.v = v;
    out.obj = make_slice(u.dom.base, FinFunction(static_cast<int>(keep.size()), bsize(u.dom.base), std::move(t)));
    out.incl = FibMor{out.obj, u.dom,
                      CarrierMorData{FinFunction(static_cast<int>(keep.size()), cm(u).dom, std::move(keep))}};
    return out;
  }

  FibMor eq_factor(const Eq& eq, const FibMor& m) const override {
    const auto& incl = cm(eq.incl);
    std::vector<int> t(static_cast<size_t>(cm(m).dom));
    for (int i = 0; i < cm(m).dom; ++i) {
      auto it = std::find(incl.table.begin(), incl.table.end(), cm(m)(i));
      if (it == incl.table.end()) throw StructuralError("self eq_factor: image not in equalizer");
      t[static_cast<size_t>(i)] = static_cast<int>(it - incl.table.begin());
    }
    return FibMor{m.dom, eq.obj, CarrierMorData{FinFunction(cm(m).dom, sd(eq.obj).to_base.dom, std::move(t))}};
  }

  std::string show_obj(const FibObj& o) const override {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < sd(o).to_base.table.size(); ++i)
      os << (i ? "," : "") << sd(o).to_base.table[i];
    os << ")->" << bsize(o.base);
    return os.str();
  }

  std::string show_mor(const FibMor& m) const override {
    std::ostringstream os;
    os << show_obj(m.dom) << "=>" << show_obj(m.cod) << "(";
    for (size_t i = 0; i < cm(m).table.size(); ++i) os << (i ? "," : "") << cm(m).table[i];
    os << ")";
    return os.str();
  }

 private:
  void require_same_base(const FibObj& a, const FibObj& b) const {
    if (!(a.base == b.base)) throw StructuralError("self: fiber mismatch");
  }

  FinSetBase base_;
  Caps caps_;
};

}  // namespace

std::shared_ptr<Instance> make_self_finset_instance() {
  return std::make_shared<SelfFinSetInstance>();
}

}  // namespace eic
