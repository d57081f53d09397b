#pragma once

#include "eic/vcat.hpp"

// V-profunctors between enriched indexed categories: two-sided modules with
// componentwise actions, composed by coequalizers of canceling products and
// hommed by equalizers of canceling homs. Universal properties are carried
// around as certificates built from explicit comparison morphisms.

namespace eic {

struct VProf;
using VProfP = std::shared_ptr<const VProf>;

struct VProf {
  VCatP dom;  // A
  VCatP cod;  // B; the profunctor is H : A -|> B
  std::string name;
  // at[b][a] : the component H(b,a) over tup(ext_A a, ext_B b)
  std::vector<std::vector<FibObj>> at;
  // actl[a][a2][b] : ten(pull01 hom_A(a,a2), pull12 H(b,a)) -> pull02 H(b,a2)
  //   over tup(eA a2, eA a, eB b)
  std::vector<std::vector<std::vector<FibMor>>> actl;
  // actr[b][b2][a] : ten(pull01 H(b,a), pull12 hom_B(b2,b)) -> pull02 H(b2,a)
  //   over tup(eA a, eB b, eB b2)
  std::vector<std::vector<std::vector<FibMor>>> actr;

  int na() const { return dom->size(); }
  int nb() const { return cod->size(); }
};

Tup prof_tup(const VProf& h, int b, int a);
ExprP prof_expr(const VProf& h, int b, int a, int label);
ExprP actl_dom_expr(const VProf& h, int a, int a2, int b, int l1, int l2);
ExprP actl_cod_expr(const VProf& h, int a, int a2, int b, int label);
ExprP actr_dom_expr(const VProf& h, int b, int b2, int a, int l1, int l2);
ExprP actr_cod_expr(const VProf& h, int b, int b2, int a, int label);

LawReport check_vprof(const VProf& h);

// profunctor morphisms
struct ProfMor {
  VProfP dom;
  VProfP cod;
  std::vector<std::vector<FibMor>> at;  // at[b][a] : dom.at[b][a] -> cod.at[b][a]
};
LawReport check_prof_mor(const ProfMor& m);
ProfMor id_prof_mor(const VProfP& h);
ProfMor compose_prof_mor(const ProfMor& g, const ProfMor& f);
bool prof_mor_eq(const ProfMor& a, const ProfMor& b);
std::vector<ProfMor> enum_prof_mors(const VProfP& h, const VProfP& k);
std::optional<ProfMor> try_invert_prof_mor(const ProfMor& m);

// basic constructions
VProfP unit_prof(const VCatP& a);
VProfP representable_cov(const VFunP& f);     // B(1,f) : A -|> B
VProfP representable_con(const VFunP& f);     // B(f,1) : B -|> A
VProfP restrict_prof(const VProfP& h, const VFunP& g, const VFunP& f);  // H(g,f) : A' -|> B'

// multimorphisms
struct MultiMor {
  std::vector<VProfP> srcs;  // H_i : A_{i-1} -|> A_i
  VProfP tgt;                // K : A_0 -|> A_n
  // components indexed by object tuples (a_0,...,a_n), flattened row-major
  std::vector<FibMor> at;
};
std::vector<VCatP> multimor_chain(const MultiMor& m);           // A_0 ... A_n
std::vector<int> multimor_dims(const MultiMor& m);
int multimor_index(const MultiMor& m, const std::vector<int>& tuple);
Tup multimor_tup(const MultiMor& m, const std::vector<int>& tuple);
ExprP multimor_dom_expr(const MultiMor& m, const std::vector<int>& tuple, int label0);
ExprP multimor_cod_expr(const MultiMor& m, const std::vector<int>& tuple, int label);
LawReport check_multimor(const MultiMor& m);
std::vector<MultiMor> enum_multimors(const std::vector<VProfP>& srcs, const VProfP& tgt);

// composite by coequalizer, with its universal bimorphism
struct Composite {
  VProfP prof;         // H . K : A -|> C
  MultiMor universal;  // phi : H, K -> H . K
  // the presentation legs: for each (c,a) and middle object b, the canonical
  // map sigma(T1(b)) -> (H.K)(c,a) used for factoring through the quotient
  std::vector<std::vector<std::vector<FibMor>>> legs;  // [c][a][b]
  std::vector<std::vector<std::vector<FibObj>>> blocks; // [c][a][b] = sigma(T1(b))
};
Composite compose_prof(const VProfP& h, const VProfP& k);

// substitute the universal bimorphism of a composite into one slot of a
// multimorphism: from psi : L..,(H.K),M.. -> N obtain L..,H,K,M.. -> N
MultiMor substitute_universal(const MultiMor& psi, size_t slot, const Composite& hk);

// right and left homs by equalizers of canceling homs
struct HomProf {
  VProfP prof;         // K |> L : A -|> B   (right), or L <| H : B -|> C (left)
  MultiMor universal;  // evaluation: (K|>L), K -> L   resp.  H, (L<|H) -> L
};
HomProf right_hom(const VProfP& k, const VProfP& l);  // k : B -|> C, l : A -|> C
HomProf left_hom(const VProfP& l, const VProfP& h);   // h : A -|> B, l : A -|> C

// the canceling hom V^{[Z]}(P, Q) for P over (W,Z), Q over (U,Z), result over (U,W)
FibObj canceling_hom(const Instance& V, const Tup& uw, const Tup& wz, const FibObj& p,
                     const Tup& uz, const FibObj& q);

// canonical isomorphisms as certificates
struct CertItem {
  std::string name;
  bool ok = false;
  std::string detail;
};
struct Certificate {
  std::string statement;
  std::vector<CertItem> items;
  bool ok() const;
  void record(const std::string& name, bool pass, const std::string& detail = "");
};

struct ProfIso {
  ProfMor fwd;
  ProfMor bwd;
  Certificate cert;
};

// H . B ~ H and A . H ~ H via the action maps
ProfIso unit_law_right(const Composite& hb);  // for H . unit(B)
ProfIso unit_law_left(const Composite& ah);   // for unit(A) . H
// (H.K).L ~ H.(K.L)
ProfIso assoc_law(const Composite& hk, const Composite& hk_l, const Composite& kl,
                  const Composite& h_kl);
// coyoneda: A(1,f) . H ~ H(1,f) for f : A' -> A, H : A -|> B
ProfIso coyoneda_iso(const VFunP& f, const VProfP& h, const Composite& comp);
// yoneda2: H <| A(f,1) ~ H(1,f)
ProfIso yoneda2_iso(const VFunP& f, const VProfP& h, const HomProf& lhom);
// unit universal property at bounded arity: the substitution map is a bijection
Certificate unit_universal_cert(const VCatP& a, int max_extra);
Certificate composite_universal_cert(const Composite& hk, int n_left, int m_right);
// yoneda1 bijections, counted
Certificate yoneda1_cert(const VFunP& f, const VProfP& h, const VProfP& k);
// adjunction f -| g vs iso B(f,1) ~ A(1,g)
struct Adjunction {
  VFunP f;  // A -> B
  VFunP g;  // B -> A
  VNatP unit;    // 1_A -> g f
  VNatP counit;  // f g -> 1_B
};
Certificate adjunction_cert(const Adjunction& adj);
ProfIso adjunction_to_iso(const Adjunction& adj);
Adjunction iso_to_adjunction(const VFunP& f, const VFunP& g, const ProfIso& iso);

// hom adjunction bijections Prof(H.K, L) ~ Prof(H, K|>L) ~ Prof(K, L<|H), counted
Certificate hom_adjunction_cert(const VProfP& h, const VProfP& k, const VProfP& l);

}  // namespace eic
