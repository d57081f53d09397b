#include "eic/mates.hpp"

#include "eic/base.hpp"

namespace eic {

FibMor sigma_adjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& b) {
  if (!(m.cod == V.pull(f, b)))
    throw StructuralError("sigma_adjunct: codomain is not the expected reindexing");
  return V.compose(V.sigma_counit(f, b), V.sigma_mor(f, m));
}

FibMor sigma_unadjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& a) {
  if (!(m.dom == V.sigma(f, a)))
    throw StructuralError("sigma_unadjunct: domain is not the expected sigma");
  return V.compose(V.pull_mor(f, m), V.sigma_unit(f, a));
}

FibMor pi_adjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& b) {
  if (!(m.dom == V.pull(f, b)))
    throw StructuralError("pi_adjunct: domain is not the expected reindexing");
  return V.compose(V.pi_mor(f, m), V.pi_unit(f, b));
}

FibMor pi_unadjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& a) {
  if (!(m.cod == V.pi(f, a)))
    throw StructuralError("pi_unadjunct: codomain is not the expected pi");
  return V.compose(V.pi_counit(f, a), V.pull_mor(f, m));
}

FibMor uncurry(const Instance& V, const FibMor& m, const FibObj& b, const FibObj& c) {
  if (!(m.cod == V.fhom(b, c))) throw StructuralError("uncurry: codomain is not fhom(b,c)");
  return V.compose(V.ev(b, c), V.tensor_mor(m, V.id(b)));
}

FibMor fhom_mor(const Instance& V, const FibMor& u, const FibMor& v) {
  const FibObj& b2 = u.dom;
  const FibObj& b = u.cod;
  const FibObj& c = v.dom;
  const FibObj& c2 = v.cod;
  FibObj h = V.fhom(b, c);
  FibMor body = V.compose(v, V.compose(V.ev(b, c), V.tensor_mor(V.id(h), u)));
  return V.curry(body, h, b2, c2);
}

FibMor sigma_comp(const Instance& V, const BaseMor& f, const BaseMor& g, const FibObj& a) {
  const BaseCat& S = V.base();
  BaseMor gf = S.compose(g, f);
  FibObj tgt = V.sigma(gf, a);
  // a -> (gf)* (gf)_! a -> f* g* (gf)_! a
  FibMor m = V.sigma_unit(gf, a);
  m = V.compose(V.invert(V.pull_comp(f, g, tgt)), m);
  // mate twice
  FibMor m2 = sigma_adjunct(V, f, m, V.pull(g, tgt));
  return sigma_adjunct(V, g, m2, tgt);
}

FibMor pi_comp(const Instance& V, const BaseMor& f, const BaseMor& g, const FibObj& a) {
  const BaseCat& S = V.base();
  BaseMor gf = S.compose(g, f);
  FibObj src = V.pi(gf, a);
  // f* g* (gf)_* a -> (gf)* (gf)_* a -> a
  FibMor m = V.compose(V.pi_counit(gf, a), V.pull_comp(f, g, src));
  FibMor m2 = pi_adjunct(V, f, m, V.pull(g, src));
  return pi_adjunct(V, g, m2, src);
}

FibMor sigma_id(const Instance& V, const FibObj& a) {
  BaseMor i = V.base().id(a.base);
  return sigma_adjunct(V, i, V.invert(V.pull_id(a)), a);
}

FibMor pi_id(const Instance& V, const FibObj& a) {
  BaseMor i = V.base().id(a.base);
  return pi_adjunct(V, i, V.pull_id(a), a);
}

void validate_square(const Instance& V, const BCSquare& sq) {
  const BaseCat& S = V.base();
  if (!S.mor_eq(S.compose(sq.f, sq.h), S.compose(sq.g, sq.k)))
    throw StructuralError("BCSquare does not commute");
}

FibMor bc_map(const Instance& V, const BCSquare& sq, const FibObj& a) {
  validate_square(V, sq);
  const BaseCat& S = V.base();
  FibObj fa = V.sigma(sq.f, a);
  // h* a -> h* f* f_! a -> (f.h)* f_! a = (g.k)* f_! a -> k* g* f_! a
  FibMor m = V.pull_mor(sq.h, V.sigma_unit(sq.f, a));
  m = V.compose(V.pull_comp(sq.h, sq.f, fa), m);
  m = V.compose(V.invert(V.pull_comp(sq.k, sq.g, fa)), m);
  (void)S;
  return sigma_adjunct(V, sq.k, m, V.pull(sq.g, fa));
}

FibMor bc_map_pi(const Instance& V, const BCSquare& sq, const FibObj& a) {
  validate_square(V, sq);
  FibObj pa = V.pi(sq.f, a);
  // k* g* f_* a -> (g.k)* f_* a = (f.h)* f_* a -> h* f* f_* a -> h* a
  FibMor m = V.pull_comp(sq.k, sq.g, pa);
  m = V.compose(V.invert(V.pull_comp(sq.h, sq.f, pa)), m);
  m = V.compose(V.pull_mor(sq.h, V.pi_counit(sq.f, a)), m);
  return pi_adjunct(V, sq.k, m, V.pull(sq.g, pa));
}

FibMor frobenius_r(const Instance& V, const BaseMor& f, const FibObj& a, const FibObj& b) {
  FibObj sb = V.sigma(f, b);
  FibObj tgt = V.tensor(a, sb);
  // f*a (x) b -> f*a (x) f* sigma b -> f*(a (x) sigma b)
  FibMor m = V.tensor_mor(V.id(V.pull(f, a)), V.sigma_unit(f, b));
  m = V.compose(V.pull_ten(f, a, sb), m);
  return sigma_adjunct(V, f, m, tgt);
}

FibMor frobenius_l(const Instance& V, const BaseMor& f, const FibObj& b, const FibObj& a) {
  FibObj sb = V.sigma(f, b);
  FibObj tgt = V.tensor(sb, a);
  FibMor m = V.tensor_mor(V.sigma_unit(f, b), V.id(V.pull(f, a)));
  m = V.compose(V.pull_ten(f, sb, a), m);
  return sigma_adjunct(V, f, m, tgt);
}

FibMor sigma_triangle(const Instance& V, const BaseMor& f, const BaseMor& m, const BaseMor& g,
                      const FibObj& x) {
  const BaseCat& S = V.base();
  if (!S.mor_eq(S.compose(g, m), f)) throw StructuralError("sigma_triangle: triangle mismatch");
  FibObj sx = V.sigma(g, x);
  // m* x -> m* g* sigma_g x -> (g.m)* sigma_g x = f* sigma_g x
  FibMor u = V.pull_mor(m, V.sigma_unit(g, x));
  u = V.compose(V.pull_comp(m, g, sx), u);
  return sigma_adjunct(V, f, u, sx);
}

FibMor dist_ten_coprod_l(const Instance& V, const FibObj& g, const Coprod& cp) {
  std::vector<FibObj> objs;
  std::vector<FibMor> legs;
  for (const auto& in : cp.in) {
    objs.push_back(V.tensor(g, in.dom));
    legs.push_back(V.tensor_mor(V.id(g), in));
  }
  Coprod cp2 = V.coproduct(cp.obj.base, objs);
  return V.copair(cp2, legs, V.tensor(g, cp.obj));
}

FibMor dist_ten_coprod_r(const Instance& V, const Coprod& cp, const FibObj& g) {
  std::vector<FibObj> objs;
  std::vector<FibMor> legs;
  for (const auto& in : cp.in) {
    objs.push_back(V.tensor(in.dom, g));
    legs.push_back(V.tensor_mor(in, V.id(g)));
  }
  Coprod cp2 = V.coproduct(cp.obj.base, objs);
  return V.copair(cp2, legs, V.tensor(cp.obj, g));
}

FibMor dist_pull_coprod(const Instance& V, const BaseMor& f, const Coprod& cp) {
  std::vector<FibObj> objs;
  std::vector<FibMor> legs;
  for (const auto& in : cp.in) {
    objs.push_back(V.pull(f, in.dom));
    legs.push_back(V.pull_mor(f, in));
  }
  Coprod cp2 = V.coproduct(V.base().dom(f), objs);
  return V.copair(cp2, legs, V.pull(f, cp.obj));
}

FibMor dist_sigma_coprod(const Instance& V, const BaseMor& f, const Coprod& cp) {
  std::vector<FibObj> objs;
  std::vector<FibMor> legs;
  for (const auto& in : cp.in) {
    objs.push_back(V.sigma(f, in.dom));
    legs.push_back(V.sigma_mor(f, in));
  }
  Coprod cp2 = V.coproduct(V.base().cod(f), objs);
  return V.copair(cp2, legs, V.sigma(f, cp.obj));
}

FibMor dist_ten_coeq_l(const Instance& V, const FibObj& g, const Coeq& ce) {
  Coeq ce2 = V.coequalizer(V.tensor_mor(V.id(g), ce.u), V.tensor_mor(V.id(g), ce.v));
  return V.coeq_factor(ce2, V.tensor_mor(V.id(g), ce.proj));
}

FibMor dist_ten_coeq_r(const Instance& V, const Coeq& ce, const FibObj& g) {
  Coeq ce2 = V.coequalizer(V.tensor_mor(ce.u, V.id(g)), V.tensor_mor(ce.v, V.id(g)));
  return V.coeq_factor(ce2, V.tensor_mor(ce.proj, V.id(g)));
}

FibMor dist_pull_coeq(const Instance& V, const BaseMor& f, const Coeq& ce) {
  Coeq ce2 = V.coequalizer(V.pull_mor(f, ce.u), V.pull_mor(f, ce.v));
  return V.coeq_factor(ce2, V.pull_mor(f, ce.proj));
}

FibMor dist_sigma_coeq(const Instance& V, const BaseMor& f, const Coeq& ce) {
  Coeq ce2 = V.coequalizer(V.sigma_mor(f, ce.u), V.sigma_mor(f, ce.v));
  return V.coeq_factor(ce2, V.sigma_mor(f, ce.proj));
}

FibObj external_hom(const Instance& V, const FibObj& x, const FibObj& y) {
  const BaseCat& S = V.base();
  Tup t = mk_tup(S, {y.base, x.base});
  FibObj px = V.pull(t.projs[1], x);
  FibObj py = V.pull(t.projs[0], y);
  return V.fhom(px, py);
}

}  // namespace eic
