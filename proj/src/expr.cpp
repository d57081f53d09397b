#include "eic/expr.hpp"

#include <algorithm>
#include <optional>

namespace eic {

ExprP eatom(FibObj obj, int label) {
  auto e = std::make_shared<Expr>();
  e->k = Expr::K::Atom;
  e->obj = std::move(obj);
  e->label = label;
  return e;
}

ExprP eunit(BaseObj x) {
  auto e = std::make_shared<Expr>();
  e->k = Expr::K::Unit;
  e->ubase = std::move(x);
  return e;
}

ExprP eten(ExprP l, ExprP r) {
  auto e = std::make_shared<Expr>();
  e->k = Expr::K::Ten;
  e->l = std::move(l);
  e->r = std::move(r);
  return e;
}

ExprP etens(const BaseObj& base, std::vector<ExprP> xs) {
  if (xs.empty()) return eunit(base);
  ExprP e = xs.back();
  for (size_t i = xs.size() - 1; i-- > 0;) e = eten(xs[i], e);
  return e;
}

ExprP epull(BaseMor f, ExprP inner) {
  auto e = std::make_shared<Expr>();
  e->k = Expr::K::Pull;
  e->f = std::move(f);
  e->inner = std::move(inner);
  return e;
}

FibObj eeval(const Instance& V, const ExprP& e) {
  switch (e->k) {
    case Expr::K::Atom:
      return e->obj;
    case Expr::K::Unit:
      return V.unit(e->ubase);
    case Expr::K::Ten:
      return V.tensor(eeval(V, e->l), eeval(V, e->r));
    case Expr::K::Pull:
      return V.pull(e->f, eeval(V, e->inner));
  }
  throw StructuralError("eeval: bad expr");
}

namespace {

struct Factor {
  std::optional<BaseMor> s;  // composite reindexing, identity elided
  FibObj atom;
  int label = -1;

  FibObj eval(const Instance& V) const { return s ? V.pull(*s, atom) : atom; }
};

FibObj eval_factors(const Instance& V, const std::vector<Factor>& fs, const BaseObj& base) {
  if (fs.empty()) return V.unit(base);
  FibObj o = fs.back().eval(V);
  for (size_t i = fs.size() - 1; i-- > 0;) o = V.tensor(fs[i].eval(V), o);
  return o;
}

struct NF {
  std::vector<Factor> fs;
  FibMor iso;  // eval(expr) -> eval_factors(fs)
};

// NF_l (x) NF_r -> NF(l ++ r), both right-nested over the same base
FibMor merge_iso(const Instance& V, const std::vector<Factor>& l, const std::vector<Factor>& r,
                 const BaseObj& base) {
  FibObj lo = eval_factors(V, l, base);
  FibObj ro = eval_factors(V, r, base);
  if (r.empty()) return V.runit(lo);
  if (l.empty()) return V.lunit(ro);
  if (l.size() == 1) return V.id(V.tensor(lo, ro));
  // (a (x) rest) (x) r  ->  a (x) (rest (x) r)  ->  a (x) merged
  std::vector<Factor> rest(l.begin() + 1, l.end());
  FibObj a = l[0].eval(V);
  FibMor step = V.assoc(a, eval_factors(V, rest, base), ro);
  FibMor sub = merge_iso(V, rest, r, base);
  return V.compose(V.tensor_mor(V.id(a), sub), step);
}

// f*(factor) -> new factor with composed reindexing
std::pair<Factor, FibMor> dist_factor(const Instance& V, const BaseMor& f, const Factor& fac) {
  const BaseCat& S = V.base();
  Factor out;
  out.atom = fac.atom;
  out.label = fac.label;
  FibMor iso;
  if (fac.s) {
    BaseMor comp = S.compose(*fac.s, f);
    iso = V.pull_comp(f, *fac.s, fac.atom);
    if (S.is_identity(comp)) {
      out.s = std::nullopt;
      iso = V.compose(V.pull_id(fac.atom), iso);
    } else {
      out.s = comp;
    }
  } else {
    if (S.is_identity(f)) {
      out.s = std::nullopt;
      iso = V.pull_id(fac.atom);
    } else {
      out.s = f;
      iso = V.id(V.pull(f, fac.atom));
    }
  }
  return {out, iso};
}

// f*(NF over Z) -> NF over dom f with composed reindexings
std::pair<std::vector<Factor>, FibMor> dist_pull(const Instance& V, const BaseMor& f,
                                                 const std::vector<Factor>& fs,
                                                 const BaseObj& zbase) {
  const BaseCat& S = V.base();
  BaseObj b = S.dom(f);
  if (fs.empty()) {
    // f* I_Z -> I_B
    return {{}, V.invert(V.pull_unit(f))};
  }
  if (fs.size() == 1) {
    auto [fac, iso] = dist_factor(V, f, fs[0]);
    return {{fac}, iso};
  }
  std::vector<Factor> rest(fs.begin() + 1, fs.end());
  FibObj a = fs[0].eval(V);
  FibObj ro = eval_factors(V, rest, zbase);
  FibMor split = V.invert(V.pull_ten(f, a, ro));  // f*(a (x) ro) -> f*a (x) f*ro
  auto [fac, iso_a] = dist_factor(V, f, fs[0]);
  auto [rfs, iso_r] = dist_pull(V, f, rest, zbase);
  std::vector<Factor> out;
  out.push_back(fac);
  out.insert(out.end(), rfs.begin(), rfs.end());
  (void)b;
  return {out, V.compose(V.tensor_mor(iso_a, iso_r), split)};
}

NF normalize(const Instance& V, const ExprP& e, const BaseObj& base) {
  const BaseCat& S = V.base();
  switch (e->k) {
    case Expr::K::Unit: {
      if (!S.obj_eq(e->ubase, base)) throw StructuralError("coerce: unit over wrong base");
      return NF{{}, V.id(V.unit(base))};
    }
    case Expr::K::Atom: {
      if (!S.obj_eq(e->obj.base, base)) throw StructuralError("coerce: atom over wrong base");
      Factor f;
      f.s = std::nullopt;
      f.atom = e->obj;
      f.label = e->label;
      return NF{{f}, V.id(e->obj)};
    }
    case Expr::K::Ten: {
      NF nl = normalize(V, e->l, base);
      NF nr = normalize(V, e->r, base);
      FibMor both = V.tensor_mor(nl.iso, nr.iso);
      FibMor merged = merge_iso(V, nl.fs, nr.fs, base);
      std::vector<Factor> fs = nl.fs;
      fs.insert(fs.end(), nr.fs.begin(), nr.fs.end());
      return NF{std::move(fs), V.compose(merged, both)};
    }
    case Expr::K::Pull: {
      BaseObj zbase = S.cod(e->f);
      if (!S.obj_eq(S.dom(e->f), base)) throw StructuralError("coerce: pull over wrong base");
      NF ni = normalize(V, e->inner, zbase);
      FibMor pulled = V.pull_mor(e->f, ni.iso);
      auto [fs, iso] = dist_pull(V, e->f, ni.fs, zbase);
      return NF{std::move(fs), V.compose(iso, pulled)};
    }
  }
  throw StructuralError("normalize: bad expr");
}

bool factor_eq(const Instance& V, const Factor& a, const Factor& b) {
  if (a.label != b.label) return false;
  if (!(a.atom == b.atom)) return false;
  if (a.s.has_value() != b.s.has_value()) return false;
  if (a.s && !V.base().mor_eq(*a.s, *b.s)) return false;
  return true;
}

// swap adjacent factors i and i+1 in a right-nested tensor
FibMor swap_iso(const Instance& V, std::vector<Factor>& fs, size_t i, const BaseObj& base) {
  if (i == 0) {
    FibObj a = fs[0].eval(V);
    FibObj b = fs[1].eval(V);
    if (fs.size() == 2) {
      std::swap(fs[0], fs[1]);
      return V.symm(a, b);
    }
    std::vector<Factor> rest(fs.begin() + 2, fs.end());
    FibObj ro = eval_factors(V, rest, base);
    FibMor m = V.invert(V.assoc(a, b, ro));
    m = V.compose(V.tensor_mor(V.symm(a, b), V.id(ro)), m);
    m = V.compose(V.assoc(b, a, ro), m);
    std::swap(fs[0], fs[1]);
    return m;
  }
  FibObj a = fs[0].eval(V);
  std::vector<Factor> rest(fs.begin() + 1, fs.end());
  FibMor sub = swap_iso(V, rest, i - 1, base);
  std::copy(rest.begin(), rest.end(), fs.begin() + 1);
  return V.tensor_mor(V.id(a), sub);
}

}  // namespace

FibMor coerce(const Instance& V, const ExprP& from, const ExprP& to) {
  // infer the base from either tree
  std::function<std::optional<BaseObj>(const ExprP&)> base_of = [&](const ExprP& e) -> std::optional<BaseObj> {
    switch (e->k) {
      case Expr::K::Atom:
        return e->obj.base;
      case Expr::K::Unit:
        return e->ubase;
      case Expr::K::Ten: {
        auto b = base_of(e->l);
        return b ? b : base_of(e->r);
      }
      case Expr::K::Pull:
        return V.base().dom(e->f);
    }
    return std::nullopt;
  };
  auto b = base_of(from);
  if (!b) b = base_of(to);
  if (!b) throw StructuralError("coerce: cannot infer base");
  NF nf = normalize(V, from, *b);
  NF nt = normalize(V, to, *b);
  if (nf.fs.size() != nt.fs.size()) throw StructuralError("coerce: factor count mismatch");
  // permutation sending from-normal-form onto to-normal-form
  std::vector<Factor> cur = nf.fs;
  FibMor iso = nf.iso;
  for (size_t j = 0; j < nt.fs.size(); ++j) {
    size_t k = j;
    while (k < cur.size() && !factor_eq(V, cur[k], nt.fs[j])) ++k;
    if (k >= cur.size()) throw StructuralError("coerce: factors do not match");
    while (k > j) {
      FibMor sw = swap_iso(V, cur, k - 1, *b);
      iso = V.compose(sw, iso);
      --k;
    }
  }
  return V.compose(V.invert(nt.iso), iso);
}

FibMor precoerce(const Instance& V, const ExprP& actual, const ExprP& src, const FibMor& m) {
  return V.compose(m, coerce(V, actual, src));
}

FibMor postcoerce(const Instance& V, const FibMor& m, const ExprP& tgt, const ExprP& actual) {
  return V.compose(coerce(V, tgt, actual), m);
}

}  // namespace eic
