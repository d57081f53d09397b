#pragma once

#include "eic/expr.hpp"

// Canonical maps derived from the adjunctions sigma -| pull -| pi and
// tensor -| fhom: mates, composition comparisons, Beck-Chevalley and
// projection (Frobenius) maps, and the comparisons that push tensor/pull/
// sigma through fiberwise colimits. Whether a canonical map is invertible is
// decided by the instance, not assumed. Objects appear explicitly in the
// signatures because reindexing is not injective on objects.

namespace eic {

// m : a -> pull(f, b)   gives   sigma_f a -> b
FibMor sigma_adjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& b);
// m : sigma_f a -> b    gives   a -> pull(f, b)
FibMor sigma_unadjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& a);
// m : pull(f, b) -> a   gives   b -> pi_f a
FibMor pi_adjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& b);
// m : b -> pi_f a       gives   pull(f, b) -> a
FibMor pi_unadjunct(const Instance& V, const BaseMor& f, const FibMor& m, const FibObj& a);
// m : a -> fhom(b, c)   gives   a (x) b -> c
FibMor uncurry(const Instance& V, const FibMor& m, const FibObj& b, const FibObj& c);
// u : b' -> b, v : c -> c'   gives   fhom(b,c) -> fhom(b',c')
FibMor fhom_mor(const Instance& V, const FibMor& u, const FibMor& v);

// composition comparisons (canonical isomorphisms; use V.invert for inverses)
FibMor sigma_comp(const Instance& V, const BaseMor& f, const BaseMor& g, const FibObj& a);  // g_! f_! a -> (g.f)_! a
FibMor pi_comp(const Instance& V, const BaseMor& f, const BaseMor& g, const FibObj& a);     // (g.f)_* a -> g_* f_* a
FibMor sigma_id(const Instance& V, const FibObj& a);  // (id)_! a -> a
FibMor pi_id(const Instance& V, const FibObj& a);     // a -> (id)_* a

// Beck-Chevalley: commuting square f.h = g.k with h: P->X, k: P->W, f: X->Z, g: W->Z
struct BCSquare {
  BaseMor h, k, f, g;
  BCClass tag = BCClass::general;
};
void validate_square(const Instance& V, const BCSquare& sq);
FibMor bc_map(const Instance& V, const BCSquare& sq, const FibObj& a);     // k_! h* a -> g* f_! a
FibMor bc_map_pi(const Instance& V, const BCSquare& sq, const FibObj& a);  // g* f_* a -> k_* h* a

// projection maps
FibMor frobenius_r(const Instance& V, const BaseMor& f, const FibObj& a, const FibObj& b);  // f_!(f*a (x) b) -> a (x) f_! b
FibMor frobenius_l(const Instance& V, const BaseMor& f, const FibObj& b, const FibObj& a);  // f_!(b (x) f*a) -> f_! b (x) a

// sigma_f(m* x) -> sigma_g(x) for a triangle g . m = f
FibMor sigma_triangle(const Instance& V, const BaseMor& f, const BaseMor& m, const BaseMor& g,
                      const FibObj& x);

// colimit distribution comparisons
FibMor dist_ten_coprod_l(const Instance& V, const FibObj& g, const Coprod& cp);  // coprod(g (x) a_i) -> g (x) coprod(a_i)
FibMor dist_ten_coprod_r(const Instance& V, const Coprod& cp, const FibObj& g);  // coprod(a_i (x) g) -> coprod(a_i) (x) g
FibMor dist_pull_coprod(const Instance& V, const BaseMor& f, const Coprod& cp);  // coprod(f*a_i) -> f* coprod(a_i)
FibMor dist_sigma_coprod(const Instance& V, const BaseMor& f, const Coprod& cp); // coprod(sigma a_i) -> sigma coprod(a_i)
FibMor dist_ten_coeq_l(const Instance& V, const FibObj& g, const Coeq& ce);      // coeq(1(x)u,1(x)v) -> g (x) coeq(u,v)
FibMor dist_ten_coeq_r(const Instance& V, const Coeq& ce, const FibObj& g);
FibMor dist_pull_coeq(const Instance& V, const BaseMor& f, const Coeq& ce);      // coeq(f*u,f*v) -> f* coeq(u,v)
FibMor dist_sigma_coeq(const Instance& V, const BaseMor& f, const Coeq& ce);     // coeq(sigma u, sigma v) -> sigma coeq(u,v)

// the external hom of the instance: uV(x,y) = fhom(pull x, pull y) over the
// tuple (base y, base x), codomain extent first
FibObj external_hom(const Instance& V, const FibObj& x, const FibObj& y);

}  // namespace eic
