#pragma once

#include <memory>

#include "eic/instance.hpp"

// Formula trees for fiber objects built from atoms by unit, fiberwise tensor
// and reindexing, together with the canonical isomorphism between any two
// trees that agree up to monoidal/pseudofunctor coherence and symmetry.
// Atoms carry labels; two trees are coherently equal when their normal forms
// list the same labelled atoms under equal composite reindexings, possibly
// permuted. The permutation part is realized by symmetry isomorphisms, the
// rest by the instance's coherence data.

namespace eic {

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

struct Expr {
  enum class K { Atom, Unit, Ten, Pull } k;
  // Atom
  FibObj obj;
  int label = -1;
  // Unit
  BaseObj ubase;
  // Ten
  ExprP l, r;
  // Pull
  BaseMor f;
  ExprP inner;
};

ExprP eatom(FibObj obj, int label);
ExprP eunit(BaseObj x);
ExprP eten(ExprP l, ExprP r);
ExprP etens(const BaseObj& base, std::vector<ExprP> xs);  // right-nested; empty = unit
ExprP epull(BaseMor f, ExprP inner);

FibObj eeval(const Instance& V, const ExprP& e);

// canonical coherence isomorphism eval(from) -> eval(to); throws
// StructuralError when the two trees are not coherently equal
FibMor coerce(const Instance& V, const ExprP& from, const ExprP& to);

// convenience: coerce then compose, m : eval(src formula) -> X becomes
// eval(actual) -> X, and dually
FibMor precoerce(const Instance& V, const ExprP& actual, const ExprP& src, const FibMor& m);
FibMor postcoerce(const Instance& V, const FibMor& m, const ExprP& tgt, const ExprP& actual);

}  // namespace eic
