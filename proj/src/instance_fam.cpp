#include <algorithm>
#include <sstream>

#include "eic/instance.hpp"

// The naive indexing of a monoidal category: fibers are families of objects
// indexed by a finite set, everything acts pointwise. Reindexing is strict,
// so all pseudofunctor coherence maps are identities.

namespace eic {

namespace {

const FamData& fd(const FibObj& o) { return std::get<FamData>(o.data); }
const FamMorData& fm(const FibMor& m) { return std::get<FamMorData>(m.data); }
int bsize(const BaseObj& x) { return std::get<FinSet>(x.v).size; }
const FinFunction& bfn(const BaseMor& f) { return std::get<FinFunction>(f.v); }

class FamInstance final : public Instance {
 public:
  explicit FamInstance(std::shared_ptr<const MonCat> m) : m_(std::move(m)) {
    caps_.sigma = m_->has_colimits();
    caps_.pi = m_->has_limits();
    caps_.closed = m_->closed();
    caps_.fib_colims = m_->has_colimits();
    caps_.fib_lims = m_->has_limits();
    caps_.sigma_tensor = caps_.sigma && caps_.closed;
    caps_.bc_general = caps_.sigma || caps_.pi;
  }

  std::string name() const override { return "fam(" + m_->name() + ")"; }
  const BaseCat& base() const override { return base_; }
  const Caps& caps() const override { return caps_; }

  bool valid_obj(const FibObj& o) const override {
    return std::holds_alternative<FamData>(o.data) &&
           static_cast<int>(fd(o).at.size()) == bsize(o.base);
  }

  FibMor id(const FibObj& a) const override {
    FamMorData d;
    for (auto o : fd(a).at) d.at.push_back(m_->id(o));
    return FibMor{a, a, std::move(d)};
  }

  FibMor compose(const FibMor& g, const FibMor& f) const override {
    require_chain(g, f);
    FamMorData d;
    for (size_t i = 0; i < fm(f).at.size(); ++i)
      d.at.push_back(m_->compose(fm(g).at[i], fm(f).at[i]));
    return FibMor{f.dom, g.cod, std::move(d)};
  }

  long hom_count(const FibObj& a, const FibObj& b) const override {
    long n = 1;
    for (size_t i = 0; i < fd(a).at.size(); ++i) n *= m_->hom_count(fd(a).at[i], fd(b).at[i]);
    return n;
  }

  std::vector<FibMor> enum_hom(const FibObj& a, const FibObj& b) const override {
    const size_t n = fd(a).at.size();
    std::vector<std::vector<MonMor>> per(n);
    for (size_t i = 0; i < n; ++i) {
      per[i] = m_->enum_hom(fd(a).at[i], fd(b).at[i]);
      if (per[i].empty()) return {};
    }
    std::vector<FibMor> out;
    std::vector<size_t> idx(n, 0);
    for (;;) {
      FamMorData d;
      for (size_t i = 0; i < n; ++i) d.at.push_back(per[i][idx[i]]);
      out.push_back(FibMor{a, b, std::move(d)});
      size_t i = 0;
      while (i < n && idx[i] + 1 >= per[i].size()) idx[i++] = 0;
      if (i >= n) break;
      ++idx[i];
    }
    return out;
  }

  std::optional<FibMor> try_invert(const FibMor& m) const override {
    FamMorData d;
    for (const auto& c : fm(m).at) {
      auto inv = m_->try_invert(c);
      if (!inv) return std::nullopt;
      d.at.push_back(*inv);
    }
    return FibMor{m.cod, m.dom, std::move(d)};
  }

  FibMor solve_epi(const std::vector<FibMor>& es, const std::vector<FibMor>& vs, const FibObj& p,
                   const FibObj& q) const override {
    FamMorData d;
    for (size_t i = 0; i < fd(p).at.size(); ++i) {
      std::vector<MonMor> e2, v2;
      for (const auto& e : es) e2.push_back(fm(e).at[i]);
      for (const auto& v : vs) v2.push_back(fm(v).at[i]);
      d.at.push_back(m_->solve_epi(e2, v2, fd(p).at[i], fd(q).at[i]));
    }
    return FibMor{p, q, std::move(d)};
  }

  FibObj unit(const BaseObj& x) const override {
    return make_fam(x, std::vector<MonObj>(static_cast<size_t>(bsize(x)), m_->unit()));
  }

  FibObj tensor(const FibObj& a, const FibObj& b) const override {
    require_same_base(a, b);
    std::vector<MonObj> at;
    for (size_t i = 0; i < fd(a).at.size(); ++i) at.push_back(m_->tensor(fd(a).at[i], fd(b).at[i]));
    return make_fam(a.base, std::move(at));
  }

  FibMor tensor_mor(const FibMor& f, const FibMor& g) const override {
    FamMorData d;
    for (size_t i = 0; i < fm(f).at.size(); ++i)
      d.at.push_back(m_->tensor_mor(fm(f).at[i], fm(g).at[i]));
    return FibMor{tensor(f.dom, g.dom), tensor(f.cod, g.cod), std::move(d)};
  }

  // strict monoidal structure on objects: the coherence maps are identities
  FibMor assoc(const FibObj& a, const FibObj& b, const FibObj& c) const override {
    return id(tensor(tensor(a, b), c));
  }
  FibMor lunit(const FibObj& a) const override { return id(a); }
  FibMor runit(const FibObj& a) const override { return id(a); }

  FibMor symm(const FibObj& a, const FibObj& b) const override {
    FamMorData d;
    for (size_t i = 0; i < fd(a).at.size(); ++i) d.at.push_back(m_->symm(fd(a).at[i], fd(b).at[i]));
    return FibMor{tensor(a, b), tensor(b, a), std::move(d)};
  }

  FibObj pull(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    if (fn.cod != bsize(a.base)) throw StructuralError("fam pull: base mismatch");
    std::vector<MonObj> at(static_cast<size_t>(fn.dom));
    for (int y = 0; y < fn.dom; ++y) at[static_cast<size_t>(y)] = fd(a).at[static_cast<size_t>(fn(y))];
    return make_fam(BaseObj{FinSet{fn.dom}}, std::move(at));
  }

  FibMor pull_mor(const BaseMor& f, const FibMor& m) const override {
    const auto& fn = bfn(f);
    FamMorData d;
    for (int y = 0; y < fn.dom; ++y) d.at.push_back(fm(m).at[static_cast<size_t>(fn(y))]);
    return FibMor{pull(f, m.dom), pull(f, m.cod), std::move(d)};
  }

  FibMor pull_comp(const BaseMor& f, const BaseMor& g, const FibObj& a) const override {
    return id(pull(base_.compose(g, f), a));
  }
  FibMor pull_id(const FibObj& a) const override { return id(a); }
  FibMor pull_ten(const BaseMor& f, const FibObj& a, const FibObj& b) const override {
    return id(tensor(pull(f, a), pull(f, b)));
  }
  FibMor pull_unit(const BaseMor& f) const override {
    return id(unit(base_.dom(f)));
  }

  FibObj sigma(const BaseMor& f, const FibObj& a) const override {
    return sigma_data(f, a).obj;
  }

  FibMor sigma_mor(const BaseMor& f, const FibMor& m) const override {
    const auto& fn = bfn(f);
    auto dd = sigma_data(f, m.dom);
    auto dc = sigma_data(f, m.cod);
    FamMorData out;
    for (int y = 0; y < fn.cod; ++y) {
      std::vector<MonMor> legs;
      const auto& xs = dd.fibers[static_cast<size_t>(y)];
      for (size_t k = 0; k < xs.size(); ++k)
        legs.push_back(m_->compose(dc.cp[static_cast<size_t>(y)].in[k], fm(m).at[static_cast<size_t>(xs[k])]));
      out.at.push_back(m_->copair(dd.cp[static_cast<size_t>(y)], legs, fd(dc.obj).at[static_cast<size_t>(y)]));
    }
    return FibMor{dd.obj, dc.obj, std::move(out)};
  }

  FibMor sigma_unit(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    auto d = sigma_data(f, a);
    FibObj tgt = pull(f, d.obj);
    FamMorData out;
    for (int x = 0; x < fn.dom; ++x) {
      int y = fn(x);
      const auto& xs = d.fibers[static_cast<size_t>(y)];
      size_t pos = static_cast<size_t>(std::find(xs.begin(), xs.end(), x) - xs.begin());
      out.at.push_back(d.cp[static_cast<size_t>(y)].in[pos]);
    }
    return FibMor{a, tgt, std::move(out)};
  }

  FibMor sigma_counit(const BaseMor& f, const FibObj& b) const override {
    const auto& fn = bfn(f);
    FibObj pb = pull(f, b);
    auto d = sigma_data(f, pb);
    FamMorData out;
    for (int y = 0; y < fn.cod; ++y) {
      const auto& xs = d.fibers[static_cast<size_t>(y)];
      std::vector<MonMor> legs(xs.size(), m_->id(fd(b).at[static_cast<size_t>(y)]));
      out.at.push_back(m_->copair(d.cp[static_cast<size_t>(y)], legs, fd(b).at[static_cast<size_t>(y)]));
    }
    return FibMor{d.obj, b, std::move(out)};
  }

  FibObj pi(const BaseMor& f, const FibObj& a) const override { return pi_data(f, a).obj; }

  FibMor pi_mor(const BaseMor& f, const FibMor& m) const override {
    const auto& fn = bfn(f);
    auto dd = pi_data(f, m.dom);
    auto dc = pi_data(f, m.cod);
    FamMorData out;
    for (int y = 0; y < fn.cod; ++y) {
      std::vector<MonMor> legs;
      const auto& xs = dd.fibers[static_cast<size_t>(y)];
      for (size_t k = 0; k < xs.size(); ++k)
        legs.push_back(m_->compose(fm(m).at[static_cast<size_t>(xs[k])], dd.pr[static_cast<size_t>(y)].out[k]));
      out.at.push_back(m_->pairm(dc.pr[static_cast<size_t>(y)], legs, fd(dd.obj).at[static_cast<size_t>(y)]));
    }
    return FibMor{dd.obj, dc.obj, std::move(out)};
  }

  FibMor pi_unit(const BaseMor& f, const FibObj& b) const override {
    const auto& fn = bfn(f);
    FibObj pb = pull(f, b);
    auto d = pi_data(f, pb);
    FamMorData out;
    for (int y = 0; y < fn.cod; ++y) {
      const auto& xs = d.fibers[static_cast<size_t>(y)];
      std::vector<MonMor> legs(xs.size(), m_->id(fd(b).at[static_cast<size_t>(y)]));
      out.at.push_back(m_->pairm(d.pr[static_cast<size_t>(y)], legs, fd(b).at[static_cast<size_t>(y)]));
    }
    return FibMor{b, d.obj, std::move(out)};
  }

  FibMor pi_counit(const BaseMor& f, const FibObj& a) const override {
    const auto& fn = bfn(f);
    auto d = pi_data(f, a);
    FibObj src = pull(f, d.obj);
    FamMorData out;
    for (int x = 0; x < fn.dom; ++x) {
      int y = fn(x);
      const auto& xs = d.fibers[static_cast<size_t>(y)];
      size_t pos = static_cast<size_t>(std::find(xs.begin(), xs.end(), x) - xs.begin());
      out.at.push_back(d.pr[static_cast<size_t>(y)].out[pos]);
    }
    return FibMor{src, a, std::move(out)};
  }

  FibObj fhom(const FibObj& b, const FibObj& c) const override {
    require_same_base(b, c);
    std::vector<MonObj> at;
    for (size_t i = 0; i < fd(b).at.size(); ++i) at.push_back(m_->hom_obj(fd(b).at[i], fd(c).at[i]));
    return make_fam(b.base, std::move(at));
  }

  FibMor curry(const FibMor& m, const FibObj& a, const FibObj& b, const FibObj& c) const override {
    FamMorData d;
    for (size_t i = 0; i < fd(a).at.size(); ++i)
      d.at.push_back(m_->curry(fm(m).at[i], fd(a).at[i], fd(b).at[i], fd(c).at[i]));
    return FibMor{a, fhom(b, c), std::move(d)};
  }

  FibMor ev(const FibObj& b, const FibObj& c) const override {
    FamMorData d;
    for (size_t i = 0; i < fd(b).at.size(); ++i) d.at.push_back(m_->ev(fd(b).at[i], fd(c).at[i]));
    return FibMor{tensor(fhom(b, c), b), c, std::move(d)};
  }

  Coprod coproduct(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    const int n = bsize(x);
    std::vector<MonCoprod> per;
    for (int i = 0; i < n; ++i) {
      std::vector<MonObj> objs;
      for (const auto& o : xs) objs.push_back(fd(o).at[static_cast<size_t>(i)]);
      per.push_back(m_->coproduct(objs));
    }
    Coprod out;
    std::vector<MonObj> at;
    for (int i = 0; i < n; ++i) at.push_back(per[static_cast<size_t>(i)].obj);
    out.obj = make_fam(x, std::move(at));
    for (size_t k = 0; k < xs.size(); ++k) {
      FamMorData d;
      for (int i = 0; i < n; ++i) d.at.push_back(per[static_cast<size_t>(i)].in[k]);
      out.in.push_back(FibMor{xs[k], out.obj, std::move(d)});
    }
    return out;
  }

  FibMor copair(const Coprod& cp, const std::vector<FibMor>& legs, const FibObj& tgt) const override {
    const int n = bsize(cp.obj.base);
    FamMorData d;
    for (int i = 0; i < n; ++i) {
      std::vector<MonObj> objs;
      for (const auto& l : cp.in) objs.push_back(fd(l.dom).at[static_cast<size_t>(i)]);
      MonCoprod mc = m_->coproduct(objs);
      std::vector<MonMor> ls;
      for (const auto& l : legs) ls.push_back(fm(l).at[static_cast<size_t>(i)]);
      d.at.push_back(m_->copair(mc, ls, fd(tgt).at[static_cast<size_t>(i)]));
    }
    return FibMor{cp.obj, tgt, std::move(d)};
  }

  Coeq coequalizer(const FibMor& u, const FibMor& v) const override {
    require_parallel(u, v);
    Coeq out;
    out.u = u;
    out.v = v;
    std::vector<MonObj> at;
    FamMorData proj;
    std::vector<MonCoeq> per;
    for (size_t i = 0; i < fm(u).at.size(); ++i) {
      per.push_back(m_->coequalizer(fm(u).at[i], fm(v).at[i]));
      at.push_back(per.back().obj);
      proj.at.push_back(per.back().proj);
    }
    out.obj = make_fam(u.cod.base, std::move(at));
    out.proj = FibMor{u.cod, out.obj, std::move(proj)};
    return out;
  }

  FibMor coeq_factor(const Coeq& ce, const FibMor& m) const override {
    FamMorData d;
    for (size_t i = 0; i < fm(m).at.size(); ++i) {
      MonCoeq mc = m_->coequalizer(fm(ce.u).at[i], fm(ce.v).at[i]);
      d.at.push_back(m_->coeq_factor(mc, fm(m).at[i]));
    }
    return FibMor{ce.obj, m.cod, std::move(d)};
  }

  Prod product(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    const int n = bsize(x);
    Prod out;
    std::vector<MonObj> at;
    std::vector<MonProd> per;
    for (int i = 0; i < n; ++i) {
      std::vector<MonObj> objs;
      for (const auto& o : xs) objs.push_back(fd(o).at[static_cast<size_t>(i)]);
      per.push_back(m_->product(objs));
      at.push_back(per.back().obj);
    }
    out.obj = make_fam(x, std::move(at));
    for (size_t k = 0; k < xs.size(); ++k) {
      FamMorData d;
      for (int i = 0; i < n; ++i) d.at.push_back(per[static_cast<size_t>(i)].out[k]);
      out.out.push_back(FibMor{out.obj, xs[k], std::move(d)});
    }
    return out;
  }

  FibMor pairm(const Prod& pr, const std::vector<FibMor>& legs, const FibObj& src) const override {
    const int n = bsize(pr.obj.base);
    FamMorData d;
    for (int i = 0; i < n; ++i) {
      std::vector<MonObj> objs;
      for (const auto& p : pr.out) objs.push_back(fd(p.cod).at[static_cast<size_t>(i)]);
      MonProd mp = m_->product(objs);
      std::vector<MonMor> ls;
      for (const auto& l : legs) ls.push_back(fm(l).at[static_cast<size_t>(i)]);
      d.at.push_back(m_->pairm(mp, ls, fd(src).at[static_cast<size_t>(i)]));
    }
    return FibMor{src, pr.obj, std::move(d)};
  }

  Eq equalizer(const FibMor& u, const FibMor& v) const override {
    require_parallel(u, v);
    Eq out;
    out.u = u;
    out.v = v;
    std::vector<MonObj> at;
    FamMorData incl;
    for (size_t i = 0; i < fm(u).at.size(); ++i) {
      MonEq me = m_->equalizer(fm(u).at[i], fm(v).at[i]);
      at.push_back(me.obj);
      incl.at.push_back(me.incl);
    }
    out.obj = make_fam(u.dom.base, std::move(at));
    out.incl = FibMor{out.obj, u.dom, std::move(incl)};
    return out;
  }

  FibMor eq_factor(const Eq& eq, const FibMor& m) const override {
    FamMorData d;
    for (size_t i = 0; i < fm(m).at.size(); ++i) {
      MonEq me = m_->equalizer(fm(eq.u).at[i], fm(eq.v).at[i]);
      d.at.push_back(m_->eq_factor(me, fm(m).at[i]));
    }
    return FibMor{m.dom, eq.obj, std::move(d)};
  }

  std::string show_obj(const FibObj& o) const override {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < fd(o).at.size(); ++i) os << (i ? " " : "") << m_->show_obj(fd(o).at[i]);
    os << "]";
    return os.str();
  }

  std::string show_mor(const FibMor& m) const override {
    std::ostringstream os;
    os << show_obj(m.dom) << "=>" << show_obj(m.cod) << "[";
    for (size_t i = 0; i < fm(m).at.size(); ++i) os << (i ? " " : "") << m_->show_mor(fm(m).at[i]);
    os << "]";
    return os.str();
  }

 private:
  struct SigmaData {
    FibObj obj;
    std::vector<std::vector<int>> fibers;  // per target element, source elements ascending
    std::vector<MonCoprod> cp;
  };
  struct PiData {
    FibObj obj;
    std::vector<std::vector<int>> fibers;
    std::vector<MonProd> pr;
  };

  SigmaData sigma_data(const BaseMor& f, const FibObj& a) const {
    const auto& fn = bfn(f);
    SigmaData d;
    d.fibers.assign(static_cast<size_t>(fn.cod), {});
    for (int x = 0; x < fn.dom; ++x) d.fibers[static_cast<size_t>(fn(x))].push_back(x);
    std::vector<MonObj> at;
    for (int y = 0; y < fn.cod; ++y) {
      std::vector<MonObj> objs;
      for (int x : d.fibers[static_cast<size_t>(y)]) objs.push_back(fd(a).at[static_cast<size_t>(x)]);
      d.cp.push_back(m_->coproduct(objs));
      at.push_back(d.cp.back().obj);
    }
    d.obj = make_fam(BaseObj{FinSet{fn.cod}}, std::move(at));
    return d;
  }

  PiData pi_data(const BaseMor& f, const FibObj& a) const {
    const auto& fn = bfn(f);
    PiData d;
    d.fibers.assign(static_cast<size_t>(fn.cod), {});
    for (int x = 0; x < fn.dom; ++x) d.fibers[static_cast<size_t>(fn(x))].push_back(x);
    std::vector<MonObj> at;
    for (int y = 0; y < fn.cod; ++y) {
      std::vector<MonObj> objs;
      for (int x : d.fibers[static_cast<size_t>(y)]) objs.push_back(fd(a).at[static_cast<size_t>(x)]);
      d.pr.push_back(m_->product(objs));
      at.push_back(d.pr.back().obj);
    }
    d.obj = make_fam(BaseObj{FinSet{fn.cod}}, std::move(at));
    return d;
  }

  void require_same_base(const FibObj& a, const FibObj& b) const {
    if (!(a.base == b.base)) throw StructuralError("fam: fiber mismatch");
  }
  void require_parallel(const FibMor& u, const FibMor& v) const {
    if (!(u.dom == v.dom && u.cod == v.cod)) throw StructuralError("fam: not a parallel pair");
  }
  void require_chain(const FibMor& g, const FibMor& f) const {
    if (!(f.cod == g.dom)) throw StructuralError("fam: compose mismatch");
  }

  std::shared_ptr<const MonCat> m_;
  FinSetBase base_;
  Caps caps_;
};

}  // namespace

std::shared_ptr<Instance> make_fam_instance(std::shared_ptr<const MonCat> m) {
  return std::make_shared<FamInstance>(std::move(m));
}

}  // namespace eic
