#include <algorithm>
#include <sstream>

#include "eic/instance.hpp"

// Actions of finite groups: the fiber over G is the category of finite
// G-sets. Restriction along a homomorphism is strict; the left adjoint is a
// quotient of H x X and the right adjoint a set of twisted sections. The
// Beck-Chevalley condition holds only for the special square classes, which
// is recorded in the capability flags.

namespace eic {

namespace {

const GSetData& gd(const FibObj& o) { return std::get<GSetData>(o.data); }
const FinFunction& cm(const FibMor& m) { return std::get<CarrierMorData>(m.data).map; }
const FinGroup& grp(const BaseObj& x) { return std::get<FinGroup>(x.v); }
const GroupHom& ghom(const BaseMor& f) { return std::get<GroupHom>(f.v); }

int act(const FibObj& o, int g, int p) {
  return gd(o).action[static_cast<size_t>(g)][static_cast<size_t>(p)];
}

class ActInstance final : public Instance {
 public:
  ActInstance() {
    caps_.sigma = caps_.pi = caps_.closed = true;
    caps_.fib_colims = caps_.fib_lims = true;
    caps_.sigma_tensor = true;
    caps_.bc_general = false;
    caps_.bc_classes = {BCClass::product_transpose, BCClass::diagonal_assoc, BCClass::graph};
  }

  std::string name() const override { return "act(fingrp)"; }
  const BaseCat& base() const override { return base_; }
  const Caps& caps() const override { return caps_; }

  bool valid_obj(const FibObj& o) const override {
    if (!std::holds_alternative<GSetData>(o.data)) return false;
    return static_cast<int>(gd(o).action.size()) == grp(o.base).order;
  }

  FibMor id(const FibObj& a) const override {
    return FibMor{a, a, CarrierMorData{fin_id(gd(a).carrier)}};
  }

  FibMor compose(const FibMor& g, const FibMor& f) const override {
    if (!(f.cod == g.dom)) throw StructuralError("act: compose mismatch");
    return FibMor{f.dom, g.cod, CarrierMorData{fin_compose(cm(g), cm(f))}};
  }

  long hom_count(const FibObj& a, const FibObj& b) const override {
    return static_cast<long>(enum_hom(a, b).size());
  }

  std::vector<FibMor> enum_hom(const FibObj& a, const FibObj& b) const override {
    const int n = gd(a).carrier, m = gd(b).carrier;
    const int ng = grp(a.base).order;
    std::vector<FibMor> out;
    if (n == 0) {
      out.push_back(FibMor{a, b, CarrierMorData{FinFunction(0, m, {})}});
      return out;
    }
    if (m == 0) return out;
    std::vector<int> t(static_cast<size_t>(n), 0);
    for (;;) {
      bool eqv = true;
      for (int g = 0; g < ng && eqv; ++g)
        for (int p = 0; p < n && eqv; ++p)
          if (t[static_cast<size_t>(act(a, g, p))] != act(b, g, t[static_cast<size_t>(p)])) eqv = false;
      if (eqv) out.push_back(FibMor{a, b, CarrierMorData{FinFunction(n, m, t)}});
      int i = 0;
      while (i < n && t[static_cast<size_t>(i)] + 1 >= m) t[static_cast<size_t>(i++)] = 0;
      if (i >= n) break;
      ++t[static_cast<size_t>(i)];
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
    std::vector<int> t(static_cast<size_t>(gd(p).carrier), -1);
    for (size_t i = 0; i < es.size(); ++i)
      for (int y = 0; y < cm(es[i]).dom; ++y) {
        int x = cm(es[i])(y), v = cm(vs[i])(y);
        if (t[static_cast<size_t>(x)] < 0)
          t[static_cast<size_t>(x)] = v;
        else if (t[static_cast<size_t>(x)] != v)
          throw StructuralError("act solve_epi: inconsistent values");
      }
    for (int x : t)
      if (x < 0) throw StructuralError("act solve_epi: family not jointly surjective");
    return FibMor{p, q, CarrierMorData{FinFunction(gd(p).carrier, gd(q).carrier, std::move(t))}};
  }

  FibObj unit(const BaseObj& x) const override {
    return FibObj{x, GSetData{1, std::vector<std::vector<int>>(static_cast<size_t>(grp(x).order), {0})}};
  }

  FibObj tensor(const FibObj& a, const FibObj& b) const override {
    if (!(a.base == b.base)) throw StructuralError("act: fiber mismatch");
    const int na = gd(a).carrier, nb = gd(b).carrier;
    const int ng = grp(a.base).order;
    GSetData d;
    d.carrier = na * nb;
    d.action.assign(static_cast<size_t>(ng), std::vector<int>(static_cast<size_t>(na * nb)));
    for (int g = 0; g < ng; ++g)
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          d.action[static_cast<size_t>(g)][static_cast<size_t>(i * nb + j)] =
              act(a, g, i) * nb + act(b, g, j);
    return FibObj{a.base, std::move(d)};
  }

  FibMor tensor_mor(const FibMor& f, const FibMor& g) const override {
    const int nb = gd(g.dom).carrier, nb2 = gd(g.cod).carrier;
    std::vector<int> t(static_cast<size_t>(gd(f.dom).carrier * nb));
    for (int i = 0; i < gd(f.dom).carrier; ++i)
      for (int j = 0; j < nb; ++j)
        t[static_cast<size_t>(i * nb + j)] = cm(f)(i) * nb2 + cm(g)(j);
    return FibMor{tensor(f.dom, g.dom), tensor(f.cod, g.cod),
                  CarrierMorData{FinFunction(gd(f.dom).carrier * nb, gd(f.cod).carrier * nb2, std::move(t))}};
  }

  FibMor assoc(const FibObj& a, const FibObj& b, const FibObj& c) const override {
    return id(tensor(tensor(a, b), c));  // index arithmetic is strictly associative
  }
  FibMor lunit(const FibObj& a) const override { return id(a); }
  FibMor runit(const FibObj& a) const override { return id(a); }

  FibMor symm(const FibObj& a, const FibObj& b) const override {
    const int na = gd(a).carrier, nb = gd(b).carrier;
    std::vector<int> t(static_cast<size_t>(na * nb));
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) t[static_cast<size_t>(i * nb + j)] = j * na + i;
    return FibMor{tensor(a, b), tensor(b, a), CarrierMorData{FinFunction(na * nb, na * nb, std::move(t))}};
  }

  FibObj pull(const BaseMor& f, const FibObj& a) const override {
    const GroupHom& h = ghom(f);
    if (!(BaseObj{h.cod} == a.base)) throw StructuralError("act pull: base mismatch");
    GSetData d;
    d.carrier = gd(a).carrier;
    for (int g = 0; g < h.dom.order; ++g)
      d.action.push_back(gd(a).action[static_cast<size_t>(h.map(g))]);
    return FibObj{BaseObj{h.dom}, std::move(d)};
  }

  FibMor pull_mor(const BaseMor& f, const FibMor& m) const override {
    return FibMor{pull(f, m.dom), pull(f, m.cod), CarrierMorData{cm(m)}};
  }

  FibMor pull_comp(const BaseMor& f, const BaseMor& g, const FibObj& a) const override {
    return id(pull(base_.compose(g, f), a));
  }
  FibMor pull_id(const FibObj& a) const override { return id(a); }
  FibMor pull_ten(const BaseMor& f, const FibObj& a, const FibObj& b) const override {
    return id(tensor(pull(f, a), pull(f, b)));
  }
  FibMor pull_unit(const BaseMor& f) const override { return id(unit(base_.dom(f))); }

  // induction: quotient of H x A by (h phi(g), p) ~ (h, g p)
  FibObj sigma(const BaseMor& f, const FibObj& a) const override {
    return sigma_quot(f, a).obj;
  }

  FibMor sigma_mor(const BaseMor& f, const FibMor& m) const override {
    auto qd = sigma_quot(f, m.dom);
    auto qc = sigma_quot(f, m.cod);
    const int nh = ghom(f).cod.order;
    const int nd = gd(m.dom).carrier;
    (void)nh;
    std::vector<int> t(static_cast<size_t>(gd(qd.obj).carrier));
    for (int h = 0; h < ghom(f).cod.order; ++h)
      for (int p = 0; p < nd; ++p)
        t[static_cast<size_t>(qd.cls(h, p))] = qc.cls(h, cm(m)(p));
    return FibMor{qd.obj, qc.obj, CarrierMorData{FinFunction(gd(qd.obj).carrier, gd(qc.obj).carrier, std::move(t))}};
  }

  FibMor sigma_unit(const BaseMor& f, const FibObj& a) const override {
    auto q = sigma_quot(f, a);
    const FinGroup& hgrp = ghom(f).cod;
    std::vector<int> t(static_cast<size_t>(gd(a).carrier));
    for (int p = 0; p < gd(a).carrier; ++p) t[static_cast<size_t>(p)] = q.cls(hgrp.unit, p);
    return FibMor{a, pull(f, q.obj), CarrierMorData{FinFunction(gd(a).carrier, gd(q.obj).carrier, std::move(t))}};
  }

  FibMor sigma_counit(const BaseMor& f, const FibObj& b) const override {
    FibObj pb = pull(f, b);
    auto q = sigma_quot(f, pb);
    std::vector<int> t(static_cast<size_t>(gd(q.obj).carrier), -1);
    for (int h = 0; h < ghom(f).cod.order; ++h)
      for (int p = 0; p < gd(b).carrier; ++p)
        t[static_cast<size_t>(q.cls(h, p))] = act(b, h, p);
    return FibMor{q.obj, b, CarrierMorData{FinFunction(gd(q.obj).carrier, gd(b).carrier, std::move(t))}};
  }

  // coinduction: twisted sections s : H -> A with s(phi(g) h) = g s(h)
  FibObj pi(const BaseMor& f, const FibObj& a) const override { return pi_secs(f, a).obj; }

  FibMor pi_mor(const BaseMor& f, const FibMor& m) const override {
    auto sd_ = pi_secs(f, m.dom);
    auto sc = pi_secs(f, m.cod);
    std::vector<int> t;
    for (const auto& s : sd_.secs) {
      std::vector<int> s2;
      for (int v : s) s2.push_back(cm(m)(v));
      t.push_back(sc.index_of(s2));
    }
    return FibMor{sd_.obj, sc.obj,
                  CarrierMorData{FinFunction(static_cast<int>(sd_.secs.size()), static_cast<int>(sc.secs.size()), std::move(t))}};
  }

  FibMor pi_unit(const BaseMor& f, const FibObj& b) const override {
    FibObj pb = pull(f, b);
    auto sc = pi_secs(f, pb);
    const FinGroup& hgrp = ghom(f).cod;
    std::vector<int> t;
    for (int p = 0; p < gd(b).carrier; ++p) {
      std::vector<int> s(static_cast<size_t>(hgrp.order));
      for (int h = 0; h < hgrp.order; ++h) s[static_cast<size_t>(h)] = act(b, h, p);
      t.push_back(sc.index_of(s));
    }
    return FibMor{b, sc.obj, CarrierMorData{FinFunction(gd(b).carrier, static_cast<int>(sc.secs.size()), std::move(t))}};
  }

  FibMor pi_counit(const BaseMor& f, const FibObj& a) const override {
    auto sc = pi_secs(f, a);
    const FinGroup& hgrp = ghom(f).cod;
    std::vector<int> t;
    for (const auto& s : sc.secs) t.push_back(s[static_cast<size_t>(hgrp.unit)]);
    return FibMor{pull(f, sc.obj), a,
                  CarrierMorData{FinFunction(static_cast<int>(sc.secs.size()), gd(a).carrier, std::move(t))}};
  }

  FibObj fhom(const FibObj& b, const FibObj& c) const override {
    if (!(b.base == c.base)) throw StructuralError("act: fiber mismatch");
    const FinGroup& g = grp(b.base);
    const int nb = gd(b).carrier, nc = gd(c).carrier;
    long total = 1;
    for (int i = 0; i < nb; ++i) total *= nc;
    if (nb > 0 && nc == 0) total = 0;
    GSetData d;
    d.carrier = static_cast<int>(total);
    d.action.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(total)));
    for (int gg = 0; gg < g.order; ++gg) {
      int gi = g.inverse(gg);
      for (long fidx = 0; fidx < total; ++fidx) {
        // (g . t)(p) = g t(g^-1 p), functions encoded little-endian base nc
        long outf = 0, pw = 1;
        for (int p = 0; p < nb; ++p) {
          long pw2 = 1;
          for (int k = 0; k < act(b, gi, p); ++k) pw2 *= nc;
          int v = static_cast<int>((fidx / pw2) % std::max(nc, 1));
          outf += static_cast<long>(act(c, gg, v)) * pw;
          pw *= nc;
        }
        d.action[static_cast<size_t>(gg)][static_cast<size_t>(fidx)] = static_cast<int>(outf);
      }
    }
    return FibObj{b.base, std::move(d)};
  }

  FibMor curry(const FibMor& m, const FibObj& a, const FibObj& b, const FibObj& c) const override {
    const int nb = gd(b).carrier, nc = gd(c).carrier;
    std::vector<int> t(static_cast<size_t>(gd(a).carrier));
    for (int i = 0; i < gd(a).carrier; ++i) {
      long h = 0, pw = 1;
      for (int j = 0; j < nb; ++j) {
        h += static_cast<long>(cm(m)(i * nb + j)) * pw;
        pw *= nc;
      }
      t[static_cast<size_t>(i)] = static_cast<int>(h);
    }
    FibObj hm = fhom(b, c);
    return FibMor{a, hm, CarrierMorData{FinFunction(gd(a).carrier, gd(hm).carrier, std::move(t))}};
  }

  FibMor ev(const FibObj& b, const FibObj& c) const override {
    FibObj h = fhom(b, c);
    const int nb = gd(b).carrier, nc = gd(c).carrier, nh = gd(h).carrier;
    std::vector<int> t(static_cast<size_t>(nh * nb));
    for (int f = 0; f < nh; ++f)
      for (int j = 0; j < nb; ++j) {
        long pw = 1;
        for (int k = 0; k < j; ++k) pw *= nc;
        t[static_cast<size_t>(f * nb + j)] = static_cast<int>((f / pw) % std::max(nc, 1));
      }
    return FibMor{tensor(h, b), c, CarrierMorData{FinFunction(nh * nb, nc, std::move(t))}};
  }

  Coprod coproduct(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    const FinGroup& g = grp(x);
    Coprod out;
    int total = 0;
    for (const auto& o : xs) total += gd(o).carrier;
    GSetData d;
    d.carrier = total;
    d.action.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(total)));
    int off = 0;
    for (const auto& o : xs) {
      for (int gg = 0; gg < g.order; ++gg)
        for (int p = 0; p < gd(o).carrier; ++p)
          d.action[static_cast<size_t>(gg)][static_cast<size_t>(off + p)] = off + act(o, gg, p);
      off += gd(o).carrier;
    }
    out.obj = FibObj{x, std::move(d)};
    off = 0;
    for (const auto& o : xs) {
      std::vector<int> inj(static_cast<size_t>(gd(o).carrier));
      for (int p = 0; p < gd(o).carrier; ++p) inj[static_cast<size_t>(p)] = off + p;
      out.in.push_back(FibMor{o, out.obj, CarrierMorData{FinFunction(gd(o).carrier, total, std::move(inj))}});
      off += gd(o).carrier;
    }
    return out;
  }

  FibMor copair(const Coprod& cp, const std::vector<FibMor>& legs, const FibObj& tgt) const override {
    std::vector<int> t(static_cast<size_t>(gd(cp.obj).carrier));
    for (size_t k = 0; k < legs.size(); ++k)
      for (int p = 0; p < cm(legs[k]).dom; ++p) t[static_cast<size_t>(cm(cp.in[k])(p))] = cm(legs[k])(p);
    return FibMor{cp.obj, tgt, CarrierMorData{FinFunction(gd(cp.obj).carrier, gd(tgt).carrier, std::move(t))}};
  }

  Coeq coequalizer(const FibMor& u, const FibMor& v) const override {
    QuotientData q = eic::coequalizer(cm(u), cm(v));
    const FinGroup& g = grp(u.cod.base);
    GSetData d;
    d.carrier = q.classes.size;
    d.action.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(q.classes.size)));
    for (int gg = 0; gg < g.order; ++gg)
      for (int p = 0; p < q.source.size; ++p)
        d.action[static_cast<size_t>(gg)][static_cast<size_t>(q.projection(p))] =
            q.projection(act(u.cod, gg, p));
    Coeq out;
    out.u = u;
    out.v = v;
    out.obj = FibObj{u.cod.base, std::move(d)};
    out.proj = FibMor{u.cod, out.obj, CarrierMorData{q.projection}};
    return out;
  }

  FibMor coeq_factor(const Coeq& ce, const FibMor& m) const override {
    std::vector<int> t(static_cast<size_t>(gd(ce.obj).carrier), -1);
    for (int i = 0; i < cm(m).dom; ++i) {
      int cls = cm(ce.proj)(i);
      if (t[static_cast<size_t>(cls)] < 0)
        t[static_cast<size_t>(cls)] = cm(m)(i);
      else if (t[static_cast<size_t>(cls)] != cm(m)(i))
        throw StructuralError("act coeq_factor: map does not respect the quotient");
    }
    for (int v : t)
      if (v < 0) throw StructuralError("act coeq_factor: projection not surjective");
    return FibMor{ce.obj, m.cod, CarrierMorData{FinFunction(gd(ce.obj).carrier, gd(m.cod).carrier, std::move(t))}};
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
      FibObj next = tensor(prev, xs[k]);
      const int np = gd(prev).carrier, nk = gd(xs[k]).carrier;
      std::vector<int> p1(static_cast<size_t>(np * nk)), p2(static_cast<size_t>(np * nk));
      for (int i = 0; i < np; ++i)
        for (int j = 0; j < nk; ++j) {
          p1[static_cast<size_t>(i * nk + j)] = i;
          p2[static_cast<size_t>(i * nk + j)] = j;
        }
      FibMor m1{next, prev, CarrierMorData{FinFunction(np * nk, np, std::move(p1))}};
      FibMor m2{next, xs[k], CarrierMorData{FinFunction(np * nk, nk, std::move(p2))}};
      for (auto& pout : out.out) pout = compose(pout, m1);
      out.out.push_back(m2);
      out.obj = next;
    }
    return out;
  }

  FibMor pairm(const Prod& pr, const std::vector<FibMor>& legs, const FibObj& src) const override {
    if (legs.empty())
      return FibMor{src, pr.obj, CarrierMorData{fin_const(gd(src).carrier, 1, 0)}};
    FibMor m = legs[0];
    for (size_t k = 1; k < legs.size(); ++k) {
      const int nk = gd(legs[k].cod).carrier;
      std::vector<int> t(static_cast<size_t>(gd(src).carrier));
      for (int i = 0; i < gd(src).carrier; ++i) t[static_cast<size_t>(i)] = cm(m)(i) * nk + cm(legs[k])(i);
      m = FibMor{src, tensor(m.cod, legs[k].cod),
                 CarrierMorData{FinFunction(gd(src).carrier, gd(m.cod).carrier * nk, std::move(t))}};
    }
    return m;
  }

  Eq equalizer(const FibMor& u, const FibMor& v) const override {
    std::vector<int> keep;
    for (int i = 0; i < cm(u).dom; ++i)
      if (cm(u)(i) == cm(v)(i)) keep.push_back(i);
    const FinGroup& g = grp(u.dom.base);
    GSetData d;
    d.carrier = static_cast<int>(keep.size());
    d.action.assign(static_cast<size_t>(g.order), std::vector<int>(keep.size()));
    for (int gg = 0; gg < g.order; ++gg)
      for (size_t s = 0; s < keep.size(); ++s) {
        int img = act(u.dom, gg, keep[s]);
        auto it = std::find(keep.begin(), keep.end(), img);
        if (it == keep.end()) throw StructuralError("act equalizer: subset not action-stable");
        d.action[static_cast<size_t>(gg)][s] = static_cast<int>(it - keep.begin());
      }
    Eq out;
    out.u = u;
    out.v = v;
    out.obj = FibObj{u.dom.base, std::move(d)};
    out.incl = FibMor{out.obj, u.dom,
                      CarrierMorData{FinFunction(static_cast<int>(keep.size()), cm(u).dom, std::move(keep))}};
    return out;
  }

  FibMor eq_factor(const Eq& eq, const FibMor& m) const override {
    const auto& incl = cm(eq.incl);
    std::vector<int> t(static_cast<size_t>(cm(m).dom));
    for (int i = 0; i < cm(m).dom; ++i) {
      auto it = std::find(incl.table.begin(), incl.table.end(), cm(m)(i));
      if (it == incl.table.end()) throw StructuralError("act eq_factor: image not in equalizer");
      t[static_cast<size_t>(i)] = static_cast<int>(it - incl.table.begin());
    }
    return FibMor{m.dom, eq.obj, CarrierMorData{FinFunction(cm(m).dom, gd(eq.obj).carrier, std::move(t))}};
  }

  std::string show_obj(const FibObj& o) const override {
    std::ostringstream os;
    os << "gset(" << gd(o).carrier << "/G" << grp(o.base).order << ")";
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
  struct SigmaQuot {
    FibObj obj;
    std::vector<int> cls_table;  // (h * nA + p) -> class
    int nA = 0;
    int cls(int h, int p) const { return cls_table[static_cast<size_t>(h * nA + p)]; }
  };

  SigmaQuot sigma_quot(const BaseMor& f, const FibObj& a) const {
    const GroupHom& h = ghom(f);
    if (!(BaseObj{h.dom} == a.base)) throw StructuralError("act sigma: base mismatch");
    const FinGroup& H = h.cod;
    const int nA = gd(a).carrier;
    UnionFind uf(H.order * nA);
    for (int hh = 0; hh < H.order; ++hh)
      for (int g = 0; g < h.dom.order; ++g)
        for (int p = 0; p < nA; ++p)
          uf.unite(H.op(hh, h.map(g)) * nA + p, hh * nA + act(a, g, p));
    QuotientData q = quotient_from_unionfind(uf);
    GSetData d;
    d.carrier = q.classes.size;
    d.action.assign(static_cast<size_t>(H.order), std::vector<int>(static_cast<size_t>(q.classes.size)));
    for (int h2 = 0; h2 < H.order; ++h2)
      for (int hh = 0; hh < H.order; ++hh)
        for (int p = 0; p < nA; ++p)
          d.action[static_cast<size_t>(h2)][static_cast<size_t>(q.projection(hh * nA + p))] =
              q.projection(H.op(h2, hh) * nA + p);
    SigmaQuot out;
    out.obj = FibObj{BaseObj{H}, std::move(d)};
    out.cls_table = q.projection.table;
    out.nA = nA;
    return out;
  }

  struct PiSecs {
    FibObj obj;
    std::vector<std::vector<int>> secs;  // s : H -> A, s[h] in A
    int index_of(const std::vector<int>& s) const {
      auto it = std::find(secs.begin(), secs.end(), s);
      if (it == secs.end()) throw StructuralError("act pi: section lookup failed");
      return static_cast<int>(it - secs.begin());
    }
  };

  PiSecs pi_secs(const BaseMor& f, const FibObj& a) const {
    const GroupHom& h = ghom(f);
    if (!(BaseObj{h.dom} == a.base)) throw StructuralError("act pi: base mismatch");
    const FinGroup& H = h.cod;
    const FinGroup& G = h.dom;
    const int nA = gd(a).carrier;
    PiSecs out;
    std::vector<int> s(static_cast<size_t>(H.order), 0);
    if (nA == 0 && H.order > 0) {
      // no sections
    } else {
      for (;;) {
        bool ok = true;
        for (int g = 0; g < G.order && ok; ++g)
          for (int hh = 0; hh < H.order && ok; ++hh)
            if (s[static_cast<size_t>(H.op(h.map(g), hh))] != act(a, g, s[static_cast<size_t>(hh)])) ok = false;
        if (ok) out.secs.push_back(s);
        int i = 0;
        while (i < H.order && s[static_cast<size_t>(i)] + 1 >= nA) s[static_cast<size_t>(i++)] = 0;
        if (i >= H.order) break;
        ++s[static_cast<size_t>(i)];
      }
    }
    GSetData d;
    d.carrier = static_cast<int>(out.secs.size());
    d.action.assign(static_cast<size_t>(H.order), std::vector<int>(out.secs.size()));
    for (int h2 = 0; h2 < H.order; ++h2)
      for (size_t k = 0; k < out.secs.size(); ++k) {
        std::vector<int> s2(static_cast<size_t>(H.order));
        for (int hh = 0; hh < H.order; ++hh)
          s2[static_cast<size_t>(hh)] = out.secs[k][static_cast<size_t>(H.op(hh, h2))];
        d.action[static_cast<size_t>(h2)][k] = out.index_of(s2);
      }
    out.obj = FibObj{BaseObj{H}, std::move(d)};
    return out;
  }

  GroupBase base_;
  Caps caps_;
};

}  // namespace

std::shared_ptr<Instance> make_act_instance() { return std::make_shared<ActInstance>(); }

}  // namespace eic
