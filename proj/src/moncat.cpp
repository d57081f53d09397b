#include "eic/moncat.hpp"

#include <algorithm>
#include <sstream>

namespace eic {

MonMor MonCat::solve_epi(const std::vector<MonMor>& es, const std::vector<MonMor>& vs, MonObj p,
                         MonObj q) const {
  std::vector<MonMor> found;
  for (auto& u : enum_hom(p, q)) {
    bool ok = true;
    for (size_t i = 0; i < es.size() && ok; ++i) ok = compose(u, es[i]) == vs[i];
    if (ok) found.push_back(u);
  }
  if (found.size() != 1)
    throw StructuralError(name() + ": solve_epi found " + std::to_string(found.size()) +
                          " solutions");
  return found[0];
}

MonCoprod MonCat::coproduct(const std::vector<MonObj>&) const {
  throw CapabilityError(name() + ": no coproducts");
}
MonMor MonCat::copair(const MonCoprod&, const std::vector<MonMor>&, MonObj) const {
  throw CapabilityError(name() + ": no coproducts");
}
MonCoeq MonCat::coequalizer(const MonMor&, const MonMor&) const {
  throw CapabilityError(name() + ": no coequalizers");
}
MonMor MonCat::coeq_factor(const MonCoeq&, const MonMor&) const {
  throw CapabilityError(name() + ": no coequalizers");
}
MonProd MonCat::product(const std::vector<MonObj>&) const {
  throw CapabilityError(name() + ": no products");
}
MonMor MonCat::pairm(const MonProd&, const std::vector<MonMor>&, MonObj) const {
  throw CapabilityError(name() + ": no products");
}
MonEq MonCat::equalizer(const MonMor&, const MonMor&) const {
  throw CapabilityError(name() + ": no equalizers");
}
MonMor MonCat::eq_factor(const MonEq&, const MonMor&) const {
  throw CapabilityError(name() + ": no equalizers");
}
MonObj MonCat::hom_obj(MonObj, MonObj) const { throw CapabilityError(name() + ": not closed"); }
MonMor MonCat::curry(const MonMor&, MonObj, MonObj, MonObj) const {
  throw CapabilityError(name() + ": not closed");
}
MonMor MonCat::ev(MonObj, MonObj) const { throw CapabilityError(name() + ": not closed"); }
std::string MonCat::show_obj(MonObj a) const { return std::to_string(a.id); }
std::string MonCat::show_mor(const MonMor& m) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < m.rep.size(); ++i) os << (i ? "," : "") << m.rep[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// FinSetMon

namespace {
FinFunction as_fn(const MonMor& m) {
  return FinFunction(m.dom.id, m.cod.id, m.rep);
}
MonMor as_mor(const FinFunction& f) { return MonMor{MonObj{f.dom}, MonObj{f.cod}, f.table}; }
}  // namespace

MonMor FinSetMon::id(MonObj a) const { return as_mor(fin_id(a.id)); }
MonMor FinSetMon::compose(const MonMor& g, const MonMor& f) const {
  return as_mor(fin_compose(as_fn(g), as_fn(f)));
}
long FinSetMon::hom_count(MonObj a, MonObj b) const {
  if (a.id == 0) return 1;
  if (b.id == 0) return 0;
  long n = 1;
  for (int i = 0; i < a.id; ++i) n *= b.id;
  return n;
}
std::vector<MonMor> FinSetMon::enum_hom(MonObj a, MonObj b) const {
  std::vector<MonMor> out;
  if (a.id > 0 && b.id == 0) return out;
  std::vector<int> t(static_cast<size_t>(a.id), 0);
  for (;;) {
    out.push_back(MonMor{a, b, t});
    int i = 0;
    while (i < a.id && t[static_cast<size_t>(i)] + 1 >= b.id) {
      t[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i >= a.id) break;
    ++t[static_cast<size_t>(i)];
  }
  return out;
}
std::optional<MonMor> FinSetMon::try_invert(const MonMor& m) const {
  auto inv = fin_inverse(as_fn(m));
  if (!inv) return std::nullopt;
  return as_mor(*inv);
}
MonMor FinSetMon::solve_epi(const std::vector<MonMor>& es, const std::vector<MonMor>& vs,
                            MonObj p, MonObj q) const {
  std::vector<int> t(static_cast<size_t>(p.id), -1);
  for (size_t i = 0; i < es.size(); ++i)
    for (int y = 0; y < es[i].dom.id; ++y) {
      int x = es[i].rep[static_cast<size_t>(y)];
      int v = vs[i].rep[static_cast<size_t>(y)];
      if (t[static_cast<size_t>(x)] < 0)
        t[static_cast<size_t>(x)] = v;
      else if (t[static_cast<size_t>(x)] != v)
        throw StructuralError("finset solve_epi: inconsistent values");
    }
  for (int x : t)
    if (x < 0) throw StructuralError("finset solve_epi: family not jointly surjective");
  return MonMor{p, q, std::move(t)};
}
MonMor FinSetMon::tensor_mor(const MonMor& f, const MonMor& g) const {
  MonObj d = tensor(f.dom, g.dom), c = tensor(f.cod, g.cod);
  std::vector<int> t(static_cast<size_t>(d.id));
  for (int i = 0; i < f.dom.id; ++i)
    for (int j = 0; j < g.dom.id; ++j)
      t[static_cast<size_t>(i * g.dom.id + j)] =
          f.rep[static_cast<size_t>(i)] * g.cod.id + g.rep[static_cast<size_t>(j)];
  return MonMor{d, c, std::move(t)};
}
MonMor FinSetMon::symm(MonObj a, MonObj b) const {
  std::vector<int> t(static_cast<size_t>(a.id * b.id));
  for (int i = 0; i < a.id; ++i)
    for (int j = 0; j < b.id; ++j) t[static_cast<size_t>(i * b.id + j)] = j * a.id + i;
  return MonMor{tensor(a, b), tensor(b, a), std::move(t)};
}
MonCoprod FinSetMon::coproduct(const std::vector<MonObj>& xs) const {
  int total = 0;
  for (auto x : xs) total += x.id;
  MonCoprod out;
  out.obj = MonObj{total};
  int off = 0;
  for (auto x : xs) {
    std::vector<int> t(static_cast<size_t>(x.id));
    for (int i = 0; i < x.id; ++i) t[static_cast<size_t>(i)] = off + i;
    out.in.push_back(MonMor{x, out.obj, std::move(t)});
    off += x.id;
  }
  return out;
}
MonMor FinSetMon::copair(const MonCoprod& cp, const std::vector<MonMor>& legs, MonObj tgt) const {
  std::vector<int> t(static_cast<size_t>(cp.obj.id));
  for (size_t k = 0; k < legs.size(); ++k)
    for (int i = 0; i < legs[k].dom.id; ++i)
      t[static_cast<size_t>(cp.in[k].rep[static_cast<size_t>(i)])] = legs[k].rep[static_cast<size_t>(i)];
  return MonMor{cp.obj, tgt, std::move(t)};
}
MonCoeq FinSetMon::coequalizer(const MonMor& u, const MonMor& v) const {
  QuotientData q = eic::coequalizer(as_fn(u), as_fn(v));
  return MonCoeq{u, v, MonObj{q.classes.size}, as_mor(q.projection)};
}
MonMor FinSetMon::coeq_factor(const MonCoeq& ce, const MonMor& m) const {
  std::vector<int> t(static_cast<size_t>(ce.obj.id), -1);
  for (int i = 0; i < m.dom.id; ++i) {
    int cls = ce.proj.rep[static_cast<size_t>(i)];
    int v = m.rep[static_cast<size_t>(i)];
    if (t[static_cast<size_t>(cls)] < 0)
      t[static_cast<size_t>(cls)] = v;
    else if (t[static_cast<size_t>(cls)] != v)
      throw StructuralError("finset coeq_factor: map does not respect the quotient");
  }
  for (int x : t)
    if (x < 0) throw StructuralError("finset coeq_factor: projection not surjective");
  return MonMor{ce.obj, m.cod, std::move(t)};
}
MonProd FinSetMon::product(const std::vector<MonObj>& xs) const {
  MonProd out;
  out.obj = MonObj{1};
  for (auto x : xs) out.obj.id *= x.id;
  // row-major, first coordinate most significant (matches iterated tensor)
  std::vector<int> sizes;
  for (auto x : xs) sizes.push_back(x.id);
  std::vector<int> strides(sizes.size(), 1);
  for (int k = static_cast<int>(sizes.size()) - 2; k >= 0; --k)
    strides[static_cast<size_t>(k)] = strides[static_cast<size_t>(k) + 1] * sizes[static_cast<size_t>(k) + 1];
  for (size_t k = 0; k < sizes.size(); ++k) {
    std::vector<int> t(static_cast<size_t>(out.obj.id));
    for (int i = 0; i < out.obj.id; ++i)
      t[static_cast<size_t>(i)] = (i / strides[k]) % sizes[k];
    out.out.push_back(MonMor{out.obj, MonObj{sizes[k]}, std::move(t)});
  }
  return out;
}
MonMor FinSetMon::pairm(const MonProd& pr, const std::vector<MonMor>& legs, MonObj src) const {
  std::vector<int> sizes;
  for (const auto& p : pr.out) sizes.push_back(p.cod.id);
  std::vector<int> strides(sizes.size(), 1);
  for (int k = static_cast<int>(sizes.size()) - 2; k >= 0; --k)
    strides[static_cast<size_t>(k)] = strides[static_cast<size_t>(k) + 1] * sizes[static_cast<size_t>(k) + 1];
  std::vector<int> t(static_cast<size_t>(src.id), 0);
  for (int i = 0; i < src.id; ++i)
    for (size_t k = 0; k < legs.size(); ++k)
      t[static_cast<size_t>(i)] += legs[k].rep[static_cast<size_t>(i)] * strides[k];
  return MonMor{src, pr.obj, std::move(t)};
}
MonEq FinSetMon::equalizer(const MonMor& u, const MonMor& v) const {
  std::vector<int> t;
  for (int i = 0; i < u.dom.id; ++i)
    if (u.rep[static_cast<size_t>(i)] == v.rep[static_cast<size_t>(i)]) t.push_back(i);
  MonObj e{static_cast<int>(t.size())};
  return MonEq{u, v, e, MonMor{e, u.dom, std::move(t)}};
}
MonMor FinSetMon::eq_factor(const MonEq& eq, const MonMor& m) const {
  std::vector<int> t(static_cast<size_t>(m.dom.id));
  for (int i = 0; i < m.dom.id; ++i) {
    auto it = std::find(eq.incl.rep.begin(), eq.incl.rep.end(), m.rep[static_cast<size_t>(i)]);
    if (it == eq.incl.rep.end()) throw StructuralError("finset eq_factor: image not in equalizer");
    t[static_cast<size_t>(i)] = static_cast<int>(it - eq.incl.rep.begin());
  }
  return MonMor{m.dom, eq.obj, std::move(t)};
}
MonObj FinSetMon::hom_obj(MonObj b, MonObj c) const { return MonObj{static_cast<int>(hom_count(b, c))}; }
MonMor FinSetMon::curry(const MonMor& m, MonObj a, MonObj b, MonObj c) const {
  // functions b -> c encoded little-endian in base c
  std::vector<int> t(static_cast<size_t>(a.id));
  for (int i = 0; i < a.id; ++i) {
    long h = 0, p = 1;
    for (int j = 0; j < b.id; ++j) {
      h += static_cast<long>(m.rep[static_cast<size_t>(i * b.id + j)]) * p;
      p *= c.id;
    }
    t[static_cast<size_t>(i)] = static_cast<int>(h);
  }
  return MonMor{a, hom_obj(b, c), std::move(t)};
}
MonMor FinSetMon::ev(MonObj b, MonObj c) const {
  MonObj h = hom_obj(b, c);
  std::vector<int> t(static_cast<size_t>(h.id * b.id));
  for (int f = 0; f < h.id; ++f)
    for (int j = 0; j < b.id; ++j) {
      long p = 1;
      for (int k = 0; k < j; ++k) p *= c.id;
      t[static_cast<size_t>(f * b.id + j)] = static_cast<int>((f / p) % std::max(c.id, 1));
    }
  return MonMor{tensor(h, b), c, std::move(t)};
}
std::string FinSetMon::show_obj(MonObj a) const { return std::to_string(a.id); }
std::string FinSetMon::show_mor(const MonMor& m) const { return MonCat::show_mor(m); }

// ---------------------------------------------------------------------------
// QuantaleMon

QuantaleMon::QuantaleMon(std::string name, int n, std::vector<std::vector<char>> leq_in,
                         std::vector<std::vector<int>> ten_in, int unit)
    : name_(std::move(name)), n_(n), leq_(std::move(leq_in)), ten_(std::move(ten_in)), unit_(unit) {
  // validate: partial order
  for (int a = 0; a < n_; ++a)
    if (!leq(a, a)) throw StructuralError("quantale: order not reflexive");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) throw StructuralError("quantale: order not antisymmetric");
      for (int c = 0; c < n_; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c)) throw StructuralError("quantale: order not transitive");
    }
  // commutative monoid, monotone
  for (int a = 0; a < n_; ++a) {
    if (ten_[static_cast<size_t>(a)][static_cast<size_t>(unit_)] != a ||
        ten_[static_cast<size_t>(unit_)][static_cast<size_t>(a)] != a)
      throw StructuralError("quantale: unit law fails");
    for (int b = 0; b < n_; ++b) {
      if (ten_[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
          ten_[static_cast<size_t>(b)][static_cast<size_t>(a)])
        throw StructuralError("quantale: tensor not commutative");
      for (int c = 0; c < n_; ++c)
        if (ten_[static_cast<size_t>(ten_[static_cast<size_t>(a)][static_cast<size_t>(b)])][static_cast<size_t>(c)] !=
            ten_[static_cast<size_t>(a)][static_cast<size_t>(ten_[static_cast<size_t>(b)][static_cast<size_t>(c)])])
          throw StructuralError("quantale: tensor not associative");
    }
  }
  // joins of all subsets exist (finite: check binary joins and bottom)
  join({});
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) join({a, b});
  // tensor preserves joins (binary + empty)
  int bot = join({});
  for (int a = 0; a < n_; ++a) {
    if (ten_[static_cast<size_t>(a)][static_cast<size_t>(bot)] != bot)
      throw StructuralError("quantale: tensor does not preserve bottom");
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (ten_[static_cast<size_t>(a)][static_cast<size_t>(join({b, c}))] !=
            join({ten_[static_cast<size_t>(a)][static_cast<size_t>(b)],
                  ten_[static_cast<size_t>(a)][static_cast<size_t>(c)]}))
          throw StructuralError("quantale: tensor does not preserve joins");
  }
}

QuantaleMon QuantaleMon::boolean2() {
  return QuantaleMon("bool2", 2, {{1, 1}, {0, 1}}, {{0, 0}, {0, 1}}, 1);
}

int QuantaleMon::join(const std::vector<int>& xs) const {
  for (int u = 0; u < n_; ++u) {
    bool ub = true;
    for (int x : xs) ub = ub && leq(x, u);
    if (!ub) continue;
    bool least = true;
    for (int v = 0; v < n_; ++v) {
      bool ub2 = true;
      for (int x : xs) ub2 = ub2 && leq(x, v);
      if (ub2 && !leq(u, v)) least = false;
    }
    if (least) return u;
  }
  throw StructuralError("quantale: join does not exist");
}

int QuantaleMon::meet(const std::vector<int>& xs) const {
  std::vector<int> lbs;
  for (int v = 0; v < n_; ++v) {
    bool lb = true;
    for (int x : xs) lb = lb && leq(v, x);
    if (lb) lbs.push_back(v);
  }
  return join(lbs);
}

int QuantaleMon::residual(int b, int c) const {
  std::vector<int> zs;
  for (int z = 0; z < n_; ++z)
    if (leq(ten_[static_cast<size_t>(z)][static_cast<size_t>(b)], c)) zs.push_back(z);
  return join(zs);
}

MonMor QuantaleMon::wit(int a, int b) const {
  if (!leq(a, b)) throw StructuralError("quantale: " + std::to_string(a) + " </= " + std::to_string(b));
  return MonMor{MonObj{a}, MonObj{b}, {}};
}

MonMor QuantaleMon::id(MonObj a) const { return wit(a.id, a.id); }
MonMor QuantaleMon::compose(const MonMor& g, const MonMor& f) const {
  if (!(f.cod == g.dom)) throw StructuralError("quantale compose: mismatch");
  return wit(f.dom.id, g.cod.id);
}
long QuantaleMon::hom_count(MonObj a, MonObj b) const { return leq(a.id, b.id) ? 1 : 0; }
std::vector<MonMor> QuantaleMon::enum_hom(MonObj a, MonObj b) const {
  std::vector<MonMor> out;
  if (leq(a.id, b.id)) out.push_back(MonMor{a, b, {}});
  return out;
}
std::optional<MonMor> QuantaleMon::try_invert(const MonMor& m) const {
  if (m.dom == m.cod) return id(m.dom);
  return std::nullopt;
}
MonObj QuantaleMon::tensor(MonObj a, MonObj b) const {
  return MonObj{ten_[static_cast<size_t>(a.id)][static_cast<size_t>(b.id)]};
}
MonMor QuantaleMon::tensor_mor(const MonMor& f, const MonMor& g) const {
  // monotone by join preservation
  return wit(tensor(f.dom, g.dom).id, tensor(f.cod, g.cod).id);
}
MonMor QuantaleMon::symm(MonObj a, MonObj b) const { return id(tensor(a, b)); }
MonCoprod QuantaleMon::coproduct(const std::vector<MonObj>& xs) const {
  std::vector<int> v;
  for (auto x : xs) v.push_back(x.id);
  MonCoprod out;
  out.obj = MonObj{join(v)};
  for (auto x : xs) out.in.push_back(wit(x.id, out.obj.id));
  return out;
}
MonMor QuantaleMon::copair(const MonCoprod& cp, const std::vector<MonMor>& legs, MonObj tgt) const {
  for (const auto& l : legs)
    if (!(l.cod == tgt)) throw StructuralError("quantale copair: leg target mismatch");
  return wit(cp.obj.id, tgt.id);
}
MonCoeq QuantaleMon::coequalizer(const MonMor& u, const MonMor& v) const {
  if (!(u.dom == v.dom && u.cod == v.cod)) throw StructuralError("quantale coeq: not parallel");
  return MonCoeq{u, v, u.cod, id(u.cod)};
}
MonMor QuantaleMon::coeq_factor(const MonCoeq& ce, const MonMor& m) const {
  return wit(ce.obj.id, m.cod.id);
}
MonProd QuantaleMon::product(const std::vector<MonObj>& xs) const {
  std::vector<int> v;
  for (auto x : xs) v.push_back(x.id);
  MonProd out;
  out.obj = MonObj{meet(v)};
  for (auto x : xs) out.out.push_back(wit(out.obj.id, x.id));
  return out;
}
MonMor QuantaleMon::pairm(const MonProd& pr, const std::vector<MonMor>& legs, MonObj src) const {
  for (const auto& l : legs)
    if (!(l.dom == src)) throw StructuralError("quantale pairm: leg source mismatch");
  return wit(src.id, pr.obj.id);
}
MonEq QuantaleMon::equalizer(const MonMor& u, const MonMor& v) const {
  if (!(u.dom == v.dom && u.cod == v.cod)) throw StructuralError("quantale eq: not parallel");
  return MonEq{u, v, u.dom, id(u.dom)};
}
MonMor QuantaleMon::eq_factor(const MonEq& eq, const MonMor& m) const {
  return wit(m.dom.id, eq.obj.id);
}
MonObj QuantaleMon::hom_obj(MonObj b, MonObj c) const { return MonObj{residual(b.id, c.id)}; }
MonMor QuantaleMon::curry(const MonMor& m, MonObj a, MonObj b, MonObj c) const {
  (void)m;
  return wit(a.id, residual(b.id, c.id));
}
MonMor QuantaleMon::ev(MonObj b, MonObj c) const {
  return wit(ten_[static_cast<size_t>(residual(b.id, c.id))][static_cast<size_t>(b.id)], c.id);
}
std::string QuantaleMon::show_obj(MonObj a) const { return "q" + std::to_string(a.id); }

// ---------------------------------------------------------------------------
// TableMon

TableMon::TableMon(std::string name, FinCategory cat, std::vector<std::vector<int>> ten_obj,
                   std::vector<std::vector<int>> ten_arr, int unit_obj,
                   std::vector<std::vector<int>> symm_arr)
    : name_(std::move(name)),
      cat_(std::move(cat)),
      ten_obj_(std::move(ten_obj)),
      ten_arr_(std::move(ten_arr)),
      unit_(unit_obj),
      symm_arr_(std::move(symm_arr)) {}

TableMon TableMon::from_monoid(std::string name, const std::vector<std::vector<int>>& table,
                               int unit_elt) {
  const int n = static_cast<int>(table.size());
  FinCategory c;
  c.n_objects = 1;
  c.arrow_src.assign(static_cast<size_t>(n), 0);
  c.arrow_dst.assign(static_cast<size_t>(n), 0);
  c.identity = {unit_elt};
  c.comp.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = table[static_cast<size_t>(g)][static_cast<size_t>(f)];
  // tensor = monoid multiplication as well (commutative tables only)
  std::vector<std::vector<int>> tarr = c.comp;
  return TableMon(std::move(name), std::move(c), {{0}}, std::move(tarr), 0, {});
}

void TableMon::validate() const {
  LawReport rep = check_finite_category(cat_);
  if (!rep.ok()) throw StructuralError("TableMon: not a category: " + rep.summary());
  const int no = cat_.n_objects, na = cat_.n_arrows();
  auto tobj = [&](int a, int b) { return ten_obj_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b)); };
  auto tarr = [&](int f, int g) { return ten_arr_.at(static_cast<size_t>(f)).at(static_cast<size_t>(g)); };
  for (int a = 0; a < no; ++a) {
    if (tobj(a, unit_) != a || tobj(unit_, a) != a)
      throw StructuralError("TableMon: tensor unit not strict");
    for (int b = 0; b < no; ++b)
      for (int c = 0; c < no; ++c)
        if (tobj(tobj(a, b), c) != tobj(a, tobj(b, c)))
          throw StructuralError("TableMon: tensor not strictly associative");
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      int t = tarr(f, g);
      if (cat_.arrow_src[static_cast<size_t>(t)] !=
              tobj(cat_.arrow_src[static_cast<size_t>(f)], cat_.arrow_src[static_cast<size_t>(g)]) ||
          cat_.arrow_dst[static_cast<size_t>(t)] !=
              tobj(cat_.arrow_dst[static_cast<size_t>(f)], cat_.arrow_dst[static_cast<size_t>(g)]))
        throw StructuralError("TableMon: arrow tensor endpoints wrong");
    }
  // functoriality + strictness on arrows
  for (int f = 0; f < na; ++f) {
    int s = cat_.arrow_src[static_cast<size_t>(f)], d = cat_.arrow_dst[static_cast<size_t>(f)];
    (void)s;
    (void)d;
    if (tarr(f, cat_.identity[static_cast<size_t>(unit_)]) != f ||
        tarr(cat_.identity[static_cast<size_t>(unit_)], f) != f)
      throw StructuralError("TableMon: arrow unit not strict");
    for (int g = 0; g < na; ++g)
      for (int h = 0; h < na; ++h)
        if (tarr(tarr(f, g), h) != tarr(f, tarr(g, h)))
          throw StructuralError("TableMon: arrow tensor not associative");
  }
  for (int f = 0; f < na; ++f)
    for (int f2 = 0; f2 < na; ++f2) {
      if (cat_.arrow_dst[static_cast<size_t>(f2)] != cat_.arrow_src[static_cast<size_t>(f)]) continue;
      for (int g = 0; g < na; ++g)
        for (int g2 = 0; g2 < na; ++g2) {
          if (cat_.arrow_dst[static_cast<size_t>(g2)] != cat_.arrow_src[static_cast<size_t>(g)]) continue;
          if (tarr(cat_.compose(f, f2), cat_.compose(g, g2)) !=
              cat_.compose(tarr(f, g), tarr(f2, g2)))
            throw StructuralError("TableMon: tensor not functorial");
        }
    }
}

namespace {
int arr_id(const MonMor& m) { return m.rep.at(0); }
}  // namespace

MonMor TableMon::id(MonObj a) const {
  return MonMor{a, a, {cat_.identity.at(static_cast<size_t>(a.id))}};
}
MonMor TableMon::compose(const MonMor& g, const MonMor& f) const {
  return MonMor{f.dom, g.cod, {cat_.compose(arr_id(g), arr_id(f))}};
}
long TableMon::hom_count(MonObj a, MonObj b) const {
  return static_cast<long>(cat_.hom(a.id, b.id).size());
}
std::vector<MonMor> TableMon::enum_hom(MonObj a, MonObj b) const {
  std::vector<MonMor> out;
  for (int m : cat_.hom(a.id, b.id)) out.push_back(MonMor{a, b, {m}});
  return out;
}
std::optional<MonMor> TableMon::try_invert(const MonMor& m) const {
  for (int g : cat_.hom(m.cod.id, m.dom.id))
    if (cat_.compose(g, arr_id(m)) == cat_.identity[static_cast<size_t>(m.dom.id)] &&
        cat_.compose(arr_id(m), g) == cat_.identity[static_cast<size_t>(m.cod.id)])
      return MonMor{m.cod, m.dom, {g}};
  return std::nullopt;
}
MonObj TableMon::tensor(MonObj a, MonObj b) const {
  return MonObj{ten_obj_.at(static_cast<size_t>(a.id)).at(static_cast<size_t>(b.id))};
}
MonMor TableMon::tensor_mor(const MonMor& f, const MonMor& g) const {
  return MonMor{tensor(f.dom, g.dom), tensor(f.cod, g.cod),
                {ten_arr_.at(static_cast<size_t>(arr_id(f))).at(static_cast<size_t>(arr_id(g)))}};
}
MonMor TableMon::symm(MonObj a, MonObj b) const {
  if (symm_arr_.empty()) {
    if (!(tensor(a, b) == tensor(b, a)))
      throw StructuralError("TableMon: no symmetry data and tensor not commutative");
    return id(tensor(a, b));
  }
  return MonMor{tensor(a, b), tensor(b, a),
                {symm_arr_.at(static_cast<size_t>(a.id)).at(static_cast<size_t>(b.id))}};
}

}  // namespace eic
