#include "eic/builders.hpp"

namespace eic {

namespace {

// shared scaffolding: a fam-instance V-category with terminal extents, hom
// objects given as single monoidal objects and cells as single morphisms
VCatP fam_vcat_terminal(const std::shared_ptr<Instance>& fam, int n,
                        const std::function<MonObj(int, int)>& hom,
                        const std::function<MonMor(int)>& ids,
                        const std::function<MonMor(int, int, int)>& comp, std::string name) {
  const Instance& V = *fam;
  BaseObj one{FinSet{1}};
  auto c = std::make_shared<VCat>();
  c->V = &V;
  c->name = std::move(name);
  c->ext.assign(static_cast<size_t>(n), one);
  c->hom.assign(static_cast<size_t>(n), std::vector<FibObj>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      c->hom[static_cast<size_t>(x)][static_cast<size_t>(y)] = make_fam(one, {hom(x, y)});
  for (int x = 0; x < n; ++x) {
    FibObj tgt = eeval(V, ids_target_expr(*c, x));
    c->ids.push_back(FibMor{V.unit(one), tgt, FamMorData{{ids(x)}}});
  }
  c->comp.assign(static_cast<size_t>(n),
                 std::vector<std::vector<FibMor>>(static_cast<size_t>(n),
                                                  std::vector<FibMor>(static_cast<size_t>(n), FibMor{})));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        FibObj dom = eeval(V, comp_dom_expr(*c, x, y, z, 0, 1));
        FibObj cod = eeval(V, comp_cod_expr(*c, x, y, z, 2));
        c->comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)] =
            FibMor{dom, cod, FamMorData{{comp(x, y, z)}}};
      }
  return c;
}

}  // namespace

VCatP classical_vcat(const std::shared_ptr<Instance>& fam_finset, const FinCategory& cat,
                     const std::string& name) {
  LawReport lr = check_finite_category(cat);
  if (!lr.ok()) throw StructuralError("classical_vcat: " + lr.summary());
  // arrows of hom(x,y) are numbered in ambient arrow order
  auto homlist = [&](int x, int y) { return cat.hom(x, y); };
  return fam_vcat_terminal(
      fam_finset, cat.n_objects,
      [&](int x, int y) { return MonObj{static_cast<int>(homlist(x, y).size())}; },
      [&](int x) {
        auto h = homlist(x, x);
        int pos = static_cast<int>(std::find(h.begin(), h.end(),
                                             cat.identity[static_cast<size_t>(x)]) -
                                   h.begin());
        return MonMor{MonObj{1}, MonObj{static_cast<int>(h.size())}, {pos}};
      },
      [&](int x, int y, int z) {
        auto hyz = homlist(y, z);
        auto hxy = homlist(x, y);
        auto hxz = homlist(x, z);
        std::vector<int> t(hyz.size() * hxy.size());
        for (size_t j = 0; j < hyz.size(); ++j)
          for (size_t i = 0; i < hxy.size(); ++i) {
            int r = cat.compose(hyz[j], hxy[i]);
            int pos = static_cast<int>(std::find(hxz.begin(), hxz.end(), r) - hxz.begin());
            t[j * hxy.size() + i] = pos;
          }
        return MonMor{MonObj{static_cast<int>(hyz.size() * hxy.size())},
                      MonObj{static_cast<int>(hxz.size())}, std::move(t)};
      },
      name.empty() ? "classical" : name);
}

VCatP preorder_vcat(const std::shared_ptr<Instance>& fam_q,
                    const std::vector<std::vector<char>>& rel, const std::string& name) {
  const int n = static_cast<int>(rel.size());
  for (int x = 0; x < n; ++x) {
    if (!rel[static_cast<size_t>(x)][static_cast<size_t>(x)])
      throw StructuralError("preorder_vcat: relation not reflexive");
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (rel[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
            rel[static_cast<size_t>(y)][static_cast<size_t>(z)] &&
            !rel[static_cast<size_t>(x)][static_cast<size_t>(z)])
          throw StructuralError("preorder_vcat: relation not transitive");
  }
  // over the two-element quantale: hom = 1 when related, else 0
  return fam_vcat_terminal(
      fam_q, n, [&](int x, int y) { return MonObj{rel[static_cast<size_t>(x)][static_cast<size_t>(y)] ? 1 : 0}; },
      [&](int x) {
        (void)x;
        return MonMor{MonObj{1}, MonObj{1}, {}};
      },
      [&](int x, int y, int z) {
        int d = (rel[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
                 rel[static_cast<size_t>(y)][static_cast<size_t>(z)])
                    ? 1
                    : 0;
        int c = rel[static_cast<size_t>(x)][static_cast<size_t>(z)] ? 1 : 0;
        return MonMor{MonObj{d}, MonObj{c}, {}};
      },
      name.empty() ? "preorder" : name);
}

VCatP enriched_vcat(const std::shared_ptr<Instance>& fam, const EnrichedTable& t,
                    const std::string& name) {
  return fam_vcat_terminal(
      fam, t.n, [&](int x, int y) { return t.hom[static_cast<size_t>(x)][static_cast<size_t>(y)]; },
      [&](int x) { return t.ids[static_cast<size_t>(x)]; },
      [&](int x, int y, int z) {
        return t.comp[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
      },
      name.empty() ? "enriched" : name);
}

VFunP classical_vfun(const VCatP& a, const VCatP& b, const FinCategory& ca, const FinCategory& cb,
                     const std::vector<int>& ob, const std::vector<int>& arr,
                     const std::string& name) {
  const Instance& V = *a->V;
  auto f = std::make_shared<VFun>();
  f->dom = a;
  f->cod = b;
  f->name = name.empty() ? "fun" : name;
  f->ob = ob;
  for (int x = 0; x < a->size(); ++x) f->eob.push_back(V.base().id(BaseObj{FinSet{1}}));
  f->homc.assign(static_cast<size_t>(a->size()), {});
  for (int x = 0; x < a->size(); ++x)
    for (int y = 0; y < a->size(); ++y) {
      auto hxy = ca.hom(x, y);
      auto hfxy = cb.hom(ob[static_cast<size_t>(x)], ob[static_cast<size_t>(y)]);
      std::vector<int> t(hxy.size());
      for (size_t i = 0; i < hxy.size(); ++i) {
        int img = arr[static_cast<size_t>(hxy[i])];
        t[i] = static_cast<int>(std::find(hfxy.begin(), hfxy.end(), img) - hfxy.begin());
        if (t[i] >= static_cast<int>(hfxy.size()))
          throw StructuralError("classical_vfun: arrow image not in target hom");
      }
      MonMor mm{MonObj{static_cast<int>(hxy.size())}, MonObj{static_cast<int>(hfxy.size())},
                std::move(t)};
      FibObj dom = a->hom[static_cast<size_t>(x)][static_cast<size_t>(y)];
      FibObj cod = eeval(V, fun_target_expr(*f, x, y, 0));
      f->homc[static_cast<size_t>(x)].push_back(FibMor{dom, cod, FamMorData{{mm}}});
    }
  return f;
}

VFunP preorder_vfun(const VCatP& a, const VCatP& b, const std::vector<int>& ob,
                    const std::string& name) {
  const Instance& V = *a->V;
  auto f = std::make_shared<VFun>();
  f->dom = a;
  f->cod = b;
  f->name = name.empty() ? "monotone" : name;
  f->ob = ob;
  for (int x = 0; x < a->size(); ++x) f->eob.push_back(V.base().id(BaseObj{FinSet{1}}));
  f->homc.assign(static_cast<size_t>(a->size()), {});
  for (int x = 0; x < a->size(); ++x)
    for (int y = 0; y < a->size(); ++y) {
      FibObj dom = a->hom[static_cast<size_t>(x)][static_cast<size_t>(y)];
      FibObj cod = eeval(V, fun_target_expr(*f, x, y, 0));
      const auto& dv = std::get<FamData>(dom.data).at[0];
      const auto& cv = std::get<FamData>(cod.data).at[0];
      f->homc[static_cast<size_t>(x)].push_back(
          FibMor{dom, cod, FamMorData{{MonMor{dv, cv, {}}}}});
    }
  return f;
}

FinCategory walking_arrow() {
  FinCategory c;
  c.n_objects = 2;
  c.arrow_src = {0, 1, 0};
  c.arrow_dst = {0, 1, 1};
  c.identity = {0, 1};
  c.comp = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
  return c;
}

FinCategory walking_point() {
  FinCategory c;
  c.n_objects = 1;
  c.arrow_src = {0};
  c.arrow_dst = {0};
  c.identity = {0};
  c.comp = {{0}};
  return c;
}

FinCategory commuting_square() {
  // objects 0,1,2,3 = (0,0),(0,1),(1,0),(1,1); exactly one arrow x -> y when
  // x <= y componentwise
  FinCategory c;
  c.n_objects = 4;
  auto leq = [](int x, int y) {
    return (x / 2) <= (y / 2) && (x % 2) <= (y % 2);
  };
  std::vector<std::pair<int, int>> arrows;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (leq(x, y)) {
        c.arrow_src.push_back(x);
        c.arrow_dst.push_back(y);
        arrows.emplace_back(x, y);
      }
  c.identity.assign(4, -1);
  for (size_t m = 0; m < arrows.size(); ++m)
    if (arrows[m].first == arrows[m].second) c.identity[static_cast<size_t>(arrows[m].first)] = static_cast<int>(m);
  const int na = static_cast<int>(arrows.size());
  c.comp.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(na), -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (arrows[static_cast<size_t>(f)].second == arrows[static_cast<size_t>(g)].first) {
        std::pair<int, int> want{arrows[static_cast<size_t>(f)].first, arrows[static_cast<size_t>(g)].second};
        for (int r = 0; r < na; ++r)
          if (arrows[static_cast<size_t>(r)] == want) c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = r;
      }
  return c;
}

FinCategory one_object_monoid(const std::vector<std::vector<int>>& table, int unit_elt) {
  const int n = static_cast<int>(table.size());
  FinCategory c;
  c.n_objects = 1;
  c.arrow_src.assign(static_cast<size_t>(n), 0);
  c.arrow_dst.assign(static_cast<size_t>(n), 0);
  c.identity = {unit_elt};
  c.comp = table;
  return c;
}

}  // namespace eic
