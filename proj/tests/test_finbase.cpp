#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eic/finbase.hpp"

using namespace eic;

TEST_CASE("product of sizes 2 and 3 has apex 6 with lexicographic projections") {
  Cone c = finite_limit(product_diagram(FinSet{2}, FinSet{3}));
  CHECK(c.apex.size == 6);
  // lexicographic: (0,0),(0,1),(0,2),(1,0),(1,1),(1,2)
  CHECK(c.legs[0].table == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(c.legs[1].table == std::vector<int>{0, 1, 2, 0, 1, 2});
}

TEST_CASE("equalizer of an equal parallel pair is the identity") {
  FinFunction f(3, 2, {0, 1, 0});
  Cone c = finite_limit(equalizer_diagram(f, f));
  CHECK(c.apex.size == 3);
  CHECK(c.legs[0].is_identity());
}

TEST_CASE("pullback of f=(0,0,1) and g=(0,1) has apex 3") {
  FinFunction f(3, 2, {0, 0, 1});
  FinFunction g(2, 2, {0, 1});
  Cone c = finite_limit(pullback_diagram(f, g));
  // oracle: enumerate all pairs (a,b) with f(a) = g(b)
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b)
      if (f(a) == g(b)) ++count;
  CHECK(c.apex.size == count);
  CHECK(c.apex.size == 3);
}

TEST_CASE("coequalizer of identity parallel pair is the identity quotient") {
  FinFunction f(3, 3, {0, 1, 2});
  QuotientData q = coequalizer(f, f);
  CHECK(q.classes.size == 3);
  CHECK(q.projection.is_identity());
}

TEST_CASE("coequalizer of (0,1) and (1,2) in a 3-element set collapses everything") {
  FinFunction f(2, 3, {0, 1});
  FinFunction g(2, 3, {1, 2});
  QuotientData q = coequalizer(f, g);
  // union-find closure oracle: 0~1 and 1~2
  CHECK(q.classes.size == 1);
}

TEST_CASE("coproduct of sizes 2 and 3 has apex 5 with block injections") {
  Cocone c = finite_colimit(coproduct_diagram(FinSet{2}, FinSet{3}));
  CHECK(c.apex.size == 5);
  CHECK(c.legs[0].table == std::vector<int>{0, 1});
  CHECK(c.legs[1].table == std::vector<int>{2, 3, 4});
}

TEST_CASE("empty diagrams: empty limit terminal, empty colimit initial") {
  FinDiagram d;
  CHECK(finite_limit(d).apex.size == 1);
  CHECK(finite_colimit(d).apex.size == 0);
}

TEST_CASE("coequalizer legs commute exactly") {
  FinFunction f(4, 4, {1, 1, 3, 0});
  FinFunction g(4, 4, {0, 2, 2, 0});
  QuotientData q = coequalizer(f, g);
  CHECK(fin_compose(q.projection, f) == fin_compose(q.projection, g));
}

TEST_CASE("quotient determinism: least representative numbering") {
  FinFunction f(1, 4, {3});
  FinFunction g(1, 4, {1});
  QuotientData q = coequalizer(f, g);
  // classes: {0} -> 0, {1,3} -> 1, {2} -> 2
  CHECK(q.projection.table == std::vector<int>{0, 1, 2, 1});
}

static FinCategory z2_monoid() {
  FinCategory c;
  c.n_objects = 1;
  c.arrow_src = {0, 0};
  c.arrow_dst = {0, 0};
  c.identity = {0};
  c.comp = {{0, 1}, {1, 0}};
  return c;
}

TEST_CASE("one-object Z/2 monoid passes the category check") {
  CHECK(check_finite_category(z2_monoid()).ok());
}

TEST_CASE("planted defect in a composition table is caught with its triple") {
  FinCategory c = z2_monoid();
  c.comp[0][1] = 0;  // wrong: g . id should be g
  LawReport r = check_finite_category(c);
  CHECK(!r.ok());
  bool found = false;
  for (auto& v : r.violations) found = found || v.law == "assoc" || v.law == "unit-left" || v.law == "unit-right";
  CHECK(found);
}

TEST_CASE("walking arrow category passes the exhaustive check") {
  FinCategory c;
  c.n_objects = 2;
  c.arrow_src = {0, 1, 0};
  c.arrow_dst = {0, 1, 1};
  c.identity = {0, 1};
  c.comp = {
      {0, -1, -1},   // id0 . f for f with dst 0
      {-1, 1, 2},    // id1 . f
      {2, -1, -1},   // arr . f
  };
  CHECK(check_finite_category(c).ok());
}

TEST_CASE("universal property replay on random competing cones") {
  FinFunction f(3, 2, {0, 0, 1});
  FinFunction g(2, 2, {0, 1});
  FinDiagram d = pullback_diagram(f, g);
  Cone lim = finite_limit(d);
  // a competing cone: apex 2 with legs into the nodes
  FinSet apex{2};
  std::vector<FinFunction> legs = {FinFunction(2, 3, {0, 1}), FinFunction(2, 2, {0, 0}),
                                   FinFunction(2, 2, {0, 0})};
  auto med = mediate_cone(d, lim, apex, legs);
  REQUIRE(med.has_value());
  for (size_t k = 0; k < legs.size(); ++k)
    CHECK(fin_compose(lim.legs[k], *med) == legs[k]);
}

TEST_CASE("mediating map out of a coequalizer colimit") {
  FinFunction f(2, 3, {0, 1});
  FinFunction g(2, 3, {1, 2});
  FinDiagram d = coequalizer_diagram(f, g);
  Cocone colim = finite_colimit(d);
  // competing cocone: constant maps
  FinSet apex{2};
  std::vector<FinFunction> legs = {fin_const(2, 2, 1), fin_const(3, 2, 1)};
  auto med = mediate_cocone(d, colim, apex, legs);
  REQUIRE(med.has_value());
  for (size_t k = 0; k < legs.size(); ++k)
    CHECK(fin_compose(*med, colim.legs[k]) == legs[k]);
}
