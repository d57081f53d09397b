#include <sstream>

#include "eic/instance.hpp"

// Constant indexed monoidal category over a finite base: every fiber is the
// same monoidal category and reindexing is the identity, so the indexed
// transfers are identities and everything is strict.

namespace eic {

namespace {

const ConstData& cd(const FibObj& o) { return std::get<ConstData>(o.data); }
const ConstMorData& cmd(const FibMor& m) { return std::get<ConstMorData>(m.data); }

class ConstInstance final : public Instance {
 public:
  ConstInstance(std::shared_ptr<const TableBase> b, std::shared_ptr<const MonCat> m)
      : base_(std::move(b)), m_(std::move(m)) {
    caps_.sigma = caps_.pi = true;
    caps_.closed = m_->closed();
    caps_.fib_colims = m_->has_colimits();
    caps_.fib_lims = m_->has_limits();
    caps_.sigma_tensor = true;
    caps_.bc_general = true;
  }

  std::string name() const override { return "const(" + m_->name() + ")"; }
  const BaseCat& base() const override { return *base_; }
  const Caps& caps() const override { return caps_; }

  bool valid_obj(const FibObj& o) const override {
    return std::holds_alternative<ConstData>(o.data);
  }

  FibMor id(const FibObj& a) const override {
    return FibMor{a, a, ConstMorData{m_->id(cd(a).obj)}};
  }
  FibMor compose(const FibMor& g, const FibMor& f) const override {
    if (!(f.cod == g.dom)) throw StructuralError("const: compose mismatch");
    return FibMor{f.dom, g.cod, ConstMorData{m_->compose(cmd(g).m, cmd(f).m)}};
  }
  long hom_count(const FibObj& a, const FibObj& b) const override {
    return m_->hom_count(cd(a).obj, cd(b).obj);
  }
  std::vector<FibMor> enum_hom(const FibObj& a, const FibObj& b) const override {
    std::vector<FibMor> out;
    for (auto& m : m_->enum_hom(cd(a).obj, cd(b).obj)) out.push_back(FibMor{a, b, ConstMorData{m}});
    return out;
  }
  std::optional<FibMor> try_invert(const FibMor& m) const override {
    auto inv = m_->try_invert(cmd(m).m);
    if (!inv) return std::nullopt;
    return FibMor{m.cod, m.dom, ConstMorData{*inv}};
  }

  FibMor solve_epi(const std::vector<FibMor>& es, const std::vector<FibMor>& vs, const FibObj& p,
                   const FibObj& q) const override {
    std::vector<MonMor> e2, v2;
    for (const auto& e : es) e2.push_back(cmd(e).m);
    for (const auto& v : vs) v2.push_back(cmd(v).m);
    return FibMor{p, q, ConstMorData{m_->solve_epi(e2, v2, cd(p).obj, cd(q).obj)}};
  }

  FibObj unit(const BaseObj& x) const override { return FibObj{x, ConstData{m_->unit()}}; }
  FibObj tensor(const FibObj& a, const FibObj& b) const override {
    if (!(a.base == b.base)) throw StructuralError("const: fiber mismatch");
    return FibObj{a.base, ConstData{m_->tensor(cd(a).obj, cd(b).obj)}};
  }
  FibMor tensor_mor(const FibMor& f, const FibMor& g) const override {
    return FibMor{tensor(f.dom, g.dom), tensor(f.cod, g.cod),
                  ConstMorData{m_->tensor_mor(cmd(f).m, cmd(g).m)}};
  }
  FibMor assoc(const FibObj& a, const FibObj& b, const FibObj& c) const override {
    return id(tensor(tensor(a, b), c));
  }
  FibMor lunit(const FibObj& a) const override { return id(a); }
  FibMor runit(const FibObj& a) const override { return id(a); }
  FibMor symm(const FibObj& a, const FibObj& b) const override {
    return FibMor{tensor(a, b), tensor(b, a), ConstMorData{m_->symm(cd(a).obj, cd(b).obj)}};
  }

  FibObj pull(const BaseMor& f, const FibObj& a) const override {
    return FibObj{base_->dom(f), cd(a)};
  }
  FibMor pull_mor(const BaseMor& f, const FibMor& m) const override {
    return FibMor{pull(f, m.dom), pull(f, m.cod), cmd(m)};
  }
  FibMor pull_comp(const BaseMor& f, const BaseMor& g, const FibObj& a) const override {
    (void)g;
    return id(pull(f, pull(g, a)));
  }
  FibMor pull_id(const FibObj& a) const override { return id(a); }
  FibMor pull_ten(const BaseMor& f, const FibObj& a, const FibObj& b) const override {
    return id(tensor(pull(f, a), pull(f, b)));
  }
  FibMor pull_unit(const BaseMor& f) const override { return id(unit(base_->dom(f))); }

  FibObj sigma(const BaseMor& f, const FibObj& a) const override {
    return FibObj{base_->cod(f), cd(a)};
  }
  FibMor sigma_mor(const BaseMor& f, const FibMor& m) const override {
    return FibMor{sigma(f, m.dom), sigma(f, m.cod), cmd(m)};
  }
  FibMor sigma_unit(const BaseMor& f, const FibObj& a) const override {
    return FibMor{a, pull(f, sigma(f, a)), ConstMorData{m_->id(cd(a).obj)}};
  }
  FibMor sigma_counit(const BaseMor& f, const FibObj& b) const override {
    return FibMor{sigma(f, pull(f, b)), b, ConstMorData{m_->id(cd(b).obj)}};
  }
  FibObj pi(const BaseMor& f, const FibObj& a) const override {
    return FibObj{base_->cod(f), cd(a)};
  }
  FibMor pi_mor(const BaseMor& f, const FibMor& m) const override {
    return FibMor{pi(f, m.dom), pi(f, m.cod), cmd(m)};
  }
  FibMor pi_unit(const BaseMor& f, const FibObj& b) const override {
    return FibMor{b, pi(f, pull(f, b)), ConstMorData{m_->id(cd(b).obj)}};
  }
  FibMor pi_counit(const BaseMor& f, const FibObj& a) const override {
    return FibMor{pull(f, pi(f, a)), a, ConstMorData{m_->id(cd(a).obj)}};
  }

  FibObj fhom(const FibObj& b, const FibObj& c) const override {
    return FibObj{b.base, ConstData{m_->hom_obj(cd(b).obj, cd(c).obj)}};
  }
  FibMor curry(const FibMor& m, const FibObj& a, const FibObj& b, const FibObj& c) const override {
    return FibMor{a, fhom(b, c), ConstMorData{m_->curry(cmd(m).m, cd(a).obj, cd(b).obj, cd(c).obj)}};
  }
  FibMor ev(const FibObj& b, const FibObj& c) const override {
    return FibMor{tensor(fhom(b, c), b), c, ConstMorData{m_->ev(cd(b).obj, cd(c).obj)}};
  }

  Coprod coproduct(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    std::vector<MonObj> objs;
    for (const auto& o : xs) objs.push_back(cd(o).obj);
    MonCoprod mc = m_->coproduct(objs);
    Coprod out;
    out.obj = FibObj{x, ConstData{mc.obj}};
    for (size_t k = 0; k < xs.size(); ++k) out.in.push_back(FibMor{xs[k], out.obj, ConstMorData{mc.in[k]}});
    return out;
  }
  FibMor copair(const Coprod& cp, const std::vector<FibMor>& legs, const FibObj& tgt) const override {
    std::vector<MonObj> objs;
    for (const auto& l : cp.in) objs.push_back(cd(l.dom).obj);
    MonCoprod mc = m_->coproduct(objs);
    std::vector<MonMor> ls;
    for (const auto& l : legs) ls.push_back(cmd(l).m);
    return FibMor{cp.obj, tgt, ConstMorData{m_->copair(mc, ls, cd(tgt).obj)}};
  }
  Coeq coequalizer(const FibMor& u, const FibMor& v) const override {
    MonCoeq mc = m_->coequalizer(cmd(u).m, cmd(v).m);
    Coeq out;
    out.u = u;
    out.v = v;
    out.obj = FibObj{u.cod.base, ConstData{mc.obj}};
    out.proj = FibMor{u.cod, out.obj, ConstMorData{mc.proj}};
    return out;
  }
  FibMor coeq_factor(const Coeq& ce, const FibMor& m) const override {
    MonCoeq mc = m_->coequalizer(cmd(ce.u).m, cmd(ce.v).m);
    return FibMor{ce.obj, m.cod, ConstMorData{m_->coeq_factor(mc, cmd(m).m)}};
  }
  Prod product(const BaseObj& x, const std::vector<FibObj>& xs) const override {
    std::vector<MonObj> objs;
    for (const auto& o : xs) objs.push_back(cd(o).obj);
    MonProd mp = m_->product(objs);
    Prod out;
    out.obj = FibObj{x, ConstData{mp.obj}};
    for (size_t k = 0; k < xs.size(); ++k) out.out.push_back(FibMor{out.obj, xs[k], ConstMorData{mp.out[k]}});
    return out;
  }
  FibMor pairm(const Prod& pr, const std::vector<FibMor>& legs, const FibObj& src) const override {
    std::vector<MonObj> objs;
    for (const auto& p : pr.out) objs.push_back(cd(p.cod).obj);
    MonProd mp = m_->product(objs);
    std::vector<MonMor> ls;
    for (const auto& l : legs) ls.push_back(cmd(l).m);
    return FibMor{src, pr.obj, ConstMorData{m_->pairm(mp, ls, cd(src).obj)}};
  }
  Eq equalizer(const FibMor& u, const FibMor& v) const override {
    MonEq me = m_->equalizer(cmd(u).m, cmd(v).m);
    Eq out;
    out.u = u;
    out.v = v;
    out.obj = FibObj{u.dom.base, ConstData{me.obj}};
    out.incl = FibMor{out.obj, u.dom, ConstMorData{me.incl}};
    return out;
  }
  FibMor eq_factor(const Eq& eq, const FibMor& m) const override {
    MonEq me = m_->equalizer(cmd(eq.u).m, cmd(eq.v).m);
    return FibMor{m.dom, eq.obj, ConstMorData{m_->eq_factor(me, cmd(m).m)}};
  }

  std::string show_obj(const FibObj& o) const override {
    std::ostringstream os;
    os << m_->show_obj(cd(o).obj) << "@" << base_->show_obj(o.base);
    return os.str();
  }
  std::string show_mor(const FibMor& m) const override {
    return show_obj(m.dom) + "=>" + show_obj(m.cod) + m_->show_mor(cmd(m).m);
  }

 private:
  std::shared_ptr<const TableBase> base_;
  std::shared_ptr<const MonCat> m_;
  Caps caps_;
};

}  // namespace

std::shared_ptr<Instance> make_const_instance(std::shared_ptr<const TableBase> base,
                                              std::shared_ptr<const MonCat> m) {
  return std::make_shared<ConstInstance>(std::move(base), std::move(m));
}

}  // namespace eic
