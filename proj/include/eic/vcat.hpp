#pragma once

#include "eic/mates.hpp"

// Enriched indexed categories with finitely many objects (the one-object
// case being the small ones), their functors and transformations, and the
// 2-category operations. Hom-objects live over (extent of codomain) x
// (extent of domain); identities and composition are stored as fiber
// morphisms into the appropriate reindexings, and all laws are evaluated
// through the coherence engine.

namespace eic {

struct VCat;
using VCatP = std::shared_ptr<const VCat>;

struct VCat {
  const Instance* V = nullptr;
  std::string name;
  std::vector<BaseObj> ext;
  // hom[x][y] : morphisms x -> y, over tup(ext[y], ext[x])
  std::vector<std::vector<FibObj>> hom;
  // ids[x] : unit(ext[x]) -> pull(diag, hom[x][x])
  std::vector<FibMor> ids;
  // comp[x][y][z] : ten(pull01 hom[y][z], pull12 hom[x][y]) -> pull02 hom[x][z]
  //   over tup(ext[z], ext[y], ext[x])
  std::vector<std::vector<std::vector<FibMor>>> comp;

  int size() const { return static_cast<int>(ext.size()); }
};

// canonical tuples and formula builders
Tup hom_tup(const VCat& c, int x, int y);                       // (ext y, ext x)
Tup comp_tup(const VCat& c, int x, int y, int z);               // (ext z, ext y, ext x)
BaseMor ext_diag(const Instance& V, const BaseObj& x);          // x -> x (x) x
ExprP hom_expr(const VCat& c, int x, int y, int label);
ExprP ids_target_expr(const VCat& c, int x);                    // pull(diag, hom(x,x))
ExprP comp_dom_expr(const VCat& c, int x, int y, int z, int l1, int l2);
ExprP comp_cod_expr(const VCat& c, int x, int y, int z, int label);

// the general cell-transport workhorse: reindex a stored cell along a base
// morphism, with coherence glue so that dom/cod are the evaluations of the
// given formulas
FibMor transport_cell(const Instance& V, const BaseMor& m, const FibMor& cell,
                      const ExprP& dom_small, const ExprP& cod_small, const ExprP& dom_big,
                      const ExprP& cod_big);

// componentwise product of base morphisms between tuples
BaseMor tup_cross(const BaseCat& S, const Tup& src, const Tup& dst,
                  const std::vector<BaseMor>& comps);

LawReport check_vcat(const VCat& c);

struct VFun {
  VCatP dom;
  VCatP cod;
  std::string name;
  std::vector<int> ob;
  std::vector<BaseMor> eob;  // ext_dom[x] -> ext_cod[ob[x]]
  // homc[x][y] : hom_dom(x,y) -> pull(eob[y] x eob[x], hom_cod(fx,fy))
  std::vector<std::vector<FibMor>> homc;
};
using VFunP = std::shared_ptr<const VFun>;

BaseMor fun_sq(const VFun& f, int x, int y);    // tup(ey,ex) -> tup(e(fy), e(fx))
ExprP fun_target_expr(const VFun& f, int x, int y, int label);
LawReport check_vfun(const VFun& f);

struct VNat {
  VFunP f;
  VFunP g;  // same dom/cod
  std::string name;
  // at[x] : unit(ext x) -> pull((eg_x, ef_x), hom_cod(fx, gx))
  std::vector<FibMor> at;
};
using VNatP = std::shared_ptr<const VNat>;

BaseMor nat_sq(const VNat& a, int x);  // ext x -> tup(e(gx), e(fx))
LawReport check_vnat(const VNat& a);

// constructions
VCatP discrete_vcat(const Instance& V, const BaseObj& x, const std::string& name = "");
VCatP opposite_vcat(const VCatP& a);
VCatP tensor_vcat(const VCatP& a, const VCatP& b);
int tensor_obj_index(const VCat& a, const VCat& b, int i, int j);

VFunP id_vfun(const VCatP& a);
VFunP compose_vfun(const VFunP& g, const VFunP& f);
// a functor delta(X) -> A from an object a and a base morphism r : X -> ext a
VFunP point_vfun(const VCatP& delta_x, const VCatP& a, int obj, const BaseMor& r);

VNatP id_vnat(const VFunP& f);
VNatP vertical_vnat(const VNatP& beta, const VNatP& alpha);  // beta . alpha
VNatP whisker_left(const VFunP& h, const VNatP& alpha);      // h alpha : hf -> hg
VNatP whisker_right(const VNatP& alpha, const VFunP& h);     // alpha h : fh -> gh

bool vnat_eq(const VNat& a, const VNat& b);
bool vcat_eq(const VCat& a, const VCat& b);

std::vector<VNatP> enum_vnats(const VFunP& f, const VFunP& g);

}  // namespace eic
