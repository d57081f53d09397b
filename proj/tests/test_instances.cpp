#include <doctest.h>

#include "eic/instance.hpp"

using namespace eic;

namespace {

BaseMor ffn(int dom, int cod, std::vector<int> t) {
  return BaseMor{FinFunction(dom, cod, std::move(t))};
}

// triangle identities for sigma -| pull and pull -| pi
void check_sigma_triangles(const Instance& V, const BaseMor& f, const FibObj& a, const FibObj& b) {
  // a over dom f, b over cod f
  FibMor t1 = V.compose(V.sigma_counit(f, V.sigma(f, a)), V.sigma_mor(f, V.sigma_unit(f, a)));
  CHECK(V.mor_eq(t1, V.id(V.sigma(f, a))));
  FibMor t2 = V.compose(V.pull_mor(f, V.sigma_counit(f, b)), V.sigma_unit(f, V.pull(f, b)));
  CHECK(V.mor_eq(t2, V.id(V.pull(f, b))));
}

void check_pi_triangles(const Instance& V, const BaseMor& f, const FibObj& a, const FibObj& b) {
  // a over dom f, b over cod f
  FibMor u1 = V.compose(V.pi_counit(f, V.pull(f, b)), V.pull_mor(f, V.pi_unit(f, b)));
  CHECK(V.mor_eq(u1, V.id(V.pull(f, b))));
  FibMor u2 = V.compose(V.pi_mor(f, V.pi_counit(f, a)), V.pi_unit(f, V.pi(f, a)));
  CHECK(V.mor_eq(u2, V.id(V.pi(f, a))));
}

void check_curry_ev(const Instance& V, const FibObj& a, const FibObj& b, const FibObj& c,
                    const FibMor& m) {
  // m : a (x) b -> c;   ev . (curry(m) (x) id_b) = m
  FibMor cu = V.curry(m, a, b, c);
  FibMor lhs = V.compose(V.ev(b, c), V.tensor_mor(cu, V.id(b)));
  CHECK(V.mor_eq(lhs, m));
  // curry(ev) = id on fhom(b,c)
  FibMor cev = V.curry(V.ev(b, c), V.fhom(b, c), b, c);
  CHECK(V.mor_eq(cev, V.id(V.fhom(b, c))));
}

void check_pentagon(const Instance& V, const FibObj& a, const FibObj& b, const FibObj& c,
                    const FibObj& d) {
  FibMor route1 = V.compose(V.tensor_mor(V.id(a), V.assoc(b, c, d)),
                            V.compose(V.assoc(a, V.tensor(b, c), d),
                                      V.tensor_mor(V.assoc(a, b, c), V.id(d))));
  FibMor route2 = V.compose(V.assoc(a, b, V.tensor(c, d)), V.assoc(V.tensor(a, b), c, d));
  CHECK(V.mor_eq(route1, route2));
}

void check_triangle(const Instance& V, const FibObj& a, const FibObj& b) {
  FibObj u = V.unit(a.base);
  FibMor lhs = V.compose(V.tensor_mor(V.id(a), V.lunit(b)), V.assoc(a, u, b));
  FibMor rhs = V.tensor_mor(V.runit(a), V.id(b));
  CHECK(V.mor_eq(lhs, rhs));
}

void check_symm_inverse(const Instance& V, const FibObj& a, const FibObj& b) {
  FibMor s = V.symm(a, b);
  FibMor s2 = V.symm(b, a);
  CHECK(V.mor_eq(V.compose(s2, s), V.id(V.tensor(a, b))));
}

void check_pull_comp_coherence(const Instance& V, const BaseMor& f, const BaseMor& g,
                               const BaseMor& h, const FibObj& a) {
  const BaseCat& S = V.base();
  FibMor route1 = V.compose(V.pull_comp(f, S.compose(h, g), a),
                            V.pull_mor(f, V.pull_comp(g, h, a)));
  FibMor route2 = V.compose(V.pull_comp(S.compose(g, f), h, a),
                            V.pull_comp(f, g, V.pull(h, a)));
  CHECK(V.mor_eq(route1, route2));
}

}  // namespace

TEST_CASE("fam(finset): reindexing is lookup and the external formulas hold") {
  auto V = make_fam_instance(std::make_shared<FinSetMon>());
  BaseObj X{FinSet{2}}, Y{FinSet{3}};
  FibObj A = make_fam(X, {MonObj{2}, MonObj{3}});
  BaseMor f = ffn(3, 2, {0, 0, 1});
  FibObj fA = V->pull(f, A);
  CHECK(fA == make_fam(Y, {MonObj{2}, MonObj{2}, MonObj{3}}));  // (f*A)_y = A_{f(y)}
  // id* A = A with identity coherence
  CHECK(V->mor_eq(V->pull_id(A), V->id(A)));
}

TEST_CASE("fam(finset): sigma along X -> 1 is the coproduct of the family") {
  auto V = make_fam_instance(std::make_shared<FinSetMon>());
  BaseObj X{FinSet{3}};
  FibObj A = make_fam(X, {MonObj{1}, MonObj{2}, MonObj{0}});
  BaseMor bang = ffn(3, 1, {0, 0, 0});
  FibObj sA = V->sigma(bang, A);
  CHECK(sA == make_fam(BaseObj{FinSet{1}}, {MonObj{3}}));
  FibObj pA = V->pi(bang, A);
  CHECK(pA == make_fam(BaseObj{FinSet{1}}, {MonObj{0}}));
}

TEST_CASE("fam(finset): adjunction triangles, closed structure, coherence") {
  auto V = make_fam_instance(std::make_shared<FinSetMon>());
  BaseObj X{FinSet{2}}, Y{FinSet{2}};
  BaseMor f = ffn(2, 2, {0, 0});
  FibObj a = make_fam(X, {MonObj{2}, MonObj{1}});
  FibObj b = make_fam(Y, {MonObj{2}, MonObj{3}});
  check_sigma_triangles(*V, f, a, b);
  check_pi_triangles(*V, f, a, b);
  FibObj c = make_fam(X, {MonObj{2}, MonObj{2}});
  // a morphism a(x)b' -> c to curry
  FibObj b2 = make_fam(X, {MonObj{2}, MonObj{2}});
  auto homs = V->enum_hom(V->tensor(a, b2), c);
  REQUIRE(!homs.empty());
  check_curry_ev(*V, a, b2, c, homs[homs.size() / 2]);
  check_pentagon(*V, a, b2, c, a);
  check_triangle(*V, a, b2);
  check_symm_inverse(*V, a, b2);
}

TEST_CASE("fam(bool2): residuation is the fiberwise hom") {
  auto Q = std::make_shared<QuantaleMon>(QuantaleMon::boolean2());
  // a (x) b <= c iff a <= b => c, exhaustively
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        bool lhs = Q->leq(Q->tensor(MonObj{a}, MonObj{b}).id, c);
        bool rhs = Q->leq(a, Q->residual(b, c));
        CHECK(lhs == rhs);
      }
  CHECK(Q->residual(1, 0) == 0);  // hom(1, c) = c
  CHECK(Q->residual(1, 1) == 1);
  auto V = make_fam_instance(Q);
  CHECK(V->caps().closed);
  BaseObj X{FinSet{2}};
  FibObj a = make_fam(X, {MonObj{1}, MonObj{0}});
  FibObj b = make_fam(X, {MonObj{1}, MonObj{1}});
  check_curry_ev(*V, a, b, a, V->enum_hom(V->tensor(a, b), a).at(0));
  BaseMor f = ffn(2, 2, {1, 1});
  check_sigma_triangles(*V, f, a, b);
  check_pi_triangles(*V, f, a, b);
}

TEST_CASE("self(finset): pullback reindexing with honest coherence") {
  auto V = make_self_finset_instance();
  BaseObj X{FinSet{2}};
  // a: 3 -> 2 with fibers {0,1} over 0 and {2} over 1
  FibObj a = make_slice(X, FinFunction(3, 2, {0, 0, 1}));
  FibObj b = make_slice(X, FinFunction(2, 2, {0, 1}));
  FibObj c = make_slice(X, FinFunction(3, 2, {0, 1, 1}));
  FibObj d = make_slice(X, FinFunction(2, 2, {1, 0}));

  check_pentagon(*V, a, b, c, d);
  check_triangle(*V, a, b);
  check_symm_inverse(*V, a, b);

  BaseMor f = ffn(3, 2, {0, 1, 0});
  BaseMor g = ffn(2, 3, {2, 0});
  BaseMor h = ffn(2, 2, {1, 1});
  // h: 2 -> 2, g: 2 -> 3 wait: compose needs cod g = dom h; build a valid chain over sizes
  // chain: f: 3 -> 2 (into X), then pullbacks along g': 2 -> 3 and h': 2 -> 2
  (void)h;
  FibObj fa = V->pull(f, a);
  CHECK(std::get<SliceData>(fa.data).to_base.dom == 5);  // fibers 2+1+2 over y = 0,1,2
  check_pull_comp_coherence(*V, h, g, f, a);

  // sigma along f is postcomposition (same carrier)
  BaseMor q = ffn(2, 3, {1, 1});
  FibObj sb = V->sigma(q, b);
  CHECK(std::get<SliceData>(sb.data).to_base == FinFunction(2, 3, {1, 1}));
  check_sigma_triangles(*V, q, b, make_slice(BaseObj{FinSet{3}}, FinFunction(2, 3, {0, 1})));
  check_pi_triangles(*V, q, b, make_slice(BaseObj{FinSet{3}}, FinFunction(4, 3, {0, 1, 1, 2})));

  auto homs = V->enum_hom(V->tensor(a, b), c);
  REQUIRE(!homs.empty());
  check_curry_ev(*V, a, b, c, homs[0]);
}

TEST_CASE("self(finset): pull_ten and pull_unit are isomorphisms with inverses") {
  auto V = make_self_finset_instance();
  BaseObj X{FinSet{2}};
  FibObj a = make_slice(X, FinFunction(3, 2, {0, 0, 1}));
  FibObj b = make_slice(X, FinFunction(2, 2, {0, 1}));
  BaseMor f = ffn(3, 2, {0, 1, 1});
  FibMor pt = V->pull_ten(f, a, b);
  auto inv = V->try_invert(pt);
  REQUIRE(inv.has_value());
  CHECK(V->mor_eq(V->compose(*inv, pt), V->id(pt.dom)));
  FibMor pu = V->pull_unit(f);
  CHECK(V->try_invert(pu).has_value());
}

TEST_CASE("act: induction along e -> C2 doubles the carrier") {
  auto V = make_act_instance();
  FinGroup e = trivial_group();
  FinGroup c2 = cyclic_group(2);
  BaseMor incl{GroupHom{e, c2, FinFunction(1, 2, {0})}};
  FibObj X = make_gset(e, 3, {{0, 1, 2}});
  FibObj sX = V->sigma(incl, X);
  CHECK(std::get<GSetData>(sX.data).carrier == 6);  // C2 x X by the coequalizer formula
  check_sigma_triangles(*V, incl, X, make_gset(c2, 2, {{0, 1}, {1, 0}}));
  check_pi_triangles(*V, incl, X, make_gset(c2, 2, {{0, 1}, {1, 0}}));
}

TEST_CASE("act: conjugation hom is closed structure") {
  auto V = make_act_instance();
  FinGroup c2 = cyclic_group(2);
  FibObj regular = make_gset(c2, 2, {{0, 1}, {1, 0}});
  FibObj trivial2 = make_gset(c2, 2, {{0, 1}, {0, 1}});
  auto homs = V->enum_hom(V->tensor(regular, trivial2), regular);
  REQUIRE(!homs.empty());
  check_curry_ev(*V, regular, trivial2, regular, homs[0]);
  check_pentagon(*V, regular, trivial2, regular, trivial2);
  check_triangle(*V, regular, trivial2);
  check_symm_inverse(*V, regular, trivial2);
}

TEST_CASE("act: fixed points as pi along C2 -> e") {
  auto V = make_act_instance();
  FinGroup e = trivial_group();
  FinGroup c2 = cyclic_group(2);
  BaseMor bang{GroupHom{c2, e, FinFunction(2, 1, {0, 0})}};
  // regular C2-set has no fixed points; trivial one is all fixed
  FibObj regular = make_gset(c2, 2, {{0, 1}, {1, 0}});
  FibObj trivial2 = make_gset(c2, 2, {{0, 1}, {0, 1}});
  CHECK(std::get<GSetData>(V->pi(bang, regular).data).carrier == 0);
  CHECK(std::get<GSetData>(V->pi(bang, trivial2).data).carrier == 2);
  // and sigma along C2 -> e is the orbit set
  CHECK(std::get<GSetData>(V->sigma(bang, regular).data).carrier == 1);
  CHECK(std::get<GSetData>(V->sigma(bang, trivial2).data).carrier == 2);
  check_pi_triangles(*V, bang, regular, make_gset(e, 2, {{0, 1}}));
  check_sigma_triangles(*V, bang, regular, make_gset(e, 2, {{0, 1}}));
}

TEST_CASE("const instance over a two-point poset base") {
  // base: poset 0 <= 1 as a category, terminal = 1, products = meet
  FinCategory c;
  c.n_objects = 2;
  c.arrow_src = {0, 1, 0};
  c.arrow_dst = {0, 1, 1};
  c.identity = {0, 1};
  c.comp = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
  auto tb = std::make_shared<TableBase>(
      c, 1,
      std::vector<std::vector<std::array<int, 3>>>{
          {{{0, 0, 0}}, {{0, 0, 2}}},
          {{{0, 2, 0}}, {{1, 1, 1}}}});
  tb->validate();
  auto V = make_const_instance(tb, std::make_shared<FinSetMon>());
  BaseObj x{CatObjRef{0}};
  FibObj a{x, ConstData{MonObj{2}}};
  FibObj b{x, ConstData{MonObj{3}}};
  CHECK(V->tensor(a, b) == FibObj{x, ConstData{MonObj{6}}});
  BaseMor arr{CatArrRef{2}};
  check_sigma_triangles(*V, arr, a, FibObj{BaseObj{CatObjRef{1}}, ConstData{MonObj{2}}});
  auto homs = V->enum_hom(V->tensor(a, b), a);
  REQUIRE(!homs.empty());
  check_curry_ev(*V, a, b, a, homs[0]);
}

TEST_CASE("enum_hom counts match hom_count") {
  auto V = make_fam_instance(std::make_shared<FinSetMon>());
  BaseObj X{FinSet{2}};
  FibObj a = make_fam(X, {MonObj{2}, MonObj{1}});
  FibObj b = make_fam(X, {MonObj{3}, MonObj{2}});
  CHECK(static_cast<long>(V->enum_hom(a, b).size()) == V->hom_count(a, b));
  auto S = make_self_finset_instance();
  FibObj sa = make_slice(X, FinFunction(3, 2, {0, 0, 1}));
  FibObj sb = make_slice(X, FinFunction(4, 2, {0, 0, 1, 1}));
  CHECK(static_cast<long>(S->enum_hom(sa, sb).size()) == S->hom_count(sa, sb));
}
