#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <variant>

#include "eic/base.hpp"
#include "eic/moncat.hpp"

// An indexed monoidal category over a base category, presented operationally:
// fibers with enumerable hom sets, reindexing with explicit coherence
// isomorphisms, fiberwise tensor with explicit associativity/unit/symmetry
// isomorphisms, optional indexed (co)products f_! -| f^* -| f_*, optional
// fiberwise (co)limits, optional closed structure.
//
// Coherence is not assumed strict anywhere downstream; the self-indexing of
// finite sets genuinely needs the isomorphisms, the other instances return
// identities.

namespace eic {

struct FamData {
  std::vector<MonObj> at;  // indexed by base element
  friend bool operator==(const FamData&, const FamData&) = default;
};
struct SliceData {
  FinFunction to_base;  // a : A -> X
  friend bool operator==(const SliceData&, const SliceData&) = default;
};
struct GSetData {
  int carrier = 0;
  std::vector<std::vector<int>> action;  // action[g][p], a left action
  friend bool operator==(const GSetData&, const GSetData&) = default;
};
struct ConstData {
  MonObj obj;
  friend bool operator==(const ConstData&, const ConstData&) = default;
};

struct FibObj {
  BaseObj base;
  std::variant<FamData, SliceData, GSetData, ConstData> data;
  friend bool operator==(const FibObj&, const FibObj&) = default;
};

struct FamMorData {
  std::vector<MonMor> at;
  friend bool operator==(const FamMorData&, const FamMorData&) = default;
};
struct CarrierMorData {  // slices and G-sets: a function between carriers
  FinFunction map;
  friend bool operator==(const CarrierMorData&, const CarrierMorData&) = default;
};
struct ConstMorData {
  MonMor m;
  friend bool operator==(const ConstMorData&, const ConstMorData&) = default;
};

struct FibMor {
  FibObj dom;
  FibObj cod;
  std::variant<FamMorData, CarrierMorData, ConstMorData> data;
  friend bool operator==(const FibMor&, const FibMor&) = default;
};

struct Coprod {
  FibObj obj;
  std::vector<FibMor> in;
};
struct Prod {
  FibObj obj;
  std::vector<FibMor> out;
};
struct Coeq {
  FibMor u, v;
  FibObj obj;
  FibMor proj;
};
struct Eq {
  FibMor u, v;
  FibObj obj;
  FibMor incl;
};

enum class BCClass { general, product_transpose, diagonal_assoc, graph };

struct Caps {
  bool sigma = false;        // indexed coproducts f_!
  bool pi = false;           // indexed products f_*
  bool closed = false;       // fiberwise homs
  bool fib_colims = false;   // finite fiberwise coproducts + coequalizers
  bool fib_lims = false;     // finite fiberwise products + equalizers
  bool sigma_tensor = false; // tensor preserves indexed coproducts
  bool bc_general = false;   // Beck-Chevalley for all pullback squares
  std::vector<BCClass> bc_classes;  // square classes with Beck-Chevalley, if not general
};

class Instance {
 public:
  virtual ~Instance() = default;
  virtual std::string name() const = 0;
  virtual const BaseCat& base() const = 0;
  virtual const Caps& caps() const = 0;

  // fiber category
  virtual bool valid_obj(const FibObj&) const = 0;
  bool obj_eq(const FibObj& a, const FibObj& b) const { return a == b; }
  bool mor_eq(const FibMor& a, const FibMor& b) const { return a == b; }
  virtual FibMor id(const FibObj& a) const = 0;
  virtual FibMor compose(const FibMor& g, const FibMor& f) const = 0;
  virtual long hom_count(const FibObj& a, const FibObj& b) const = 0;
  virtual std::vector<FibMor> enum_hom(const FibObj& a, const FibObj& b) const = 0;
  virtual std::optional<FibMor> try_invert(const FibMor& m) const = 0;

  // monoidal structure in each fiber
  virtual FibObj unit(const BaseObj& x) const = 0;
  virtual FibObj tensor(const FibObj& a, const FibObj& b) const = 0;
  virtual FibMor tensor_mor(const FibMor& f, const FibMor& g) const = 0;
  virtual FibMor assoc(const FibObj& a, const FibObj& b, const FibObj& c) const = 0;  // (ab)c -> a(bc)
  virtual FibMor lunit(const FibObj& a) const = 0;  // I(x)a -> a
  virtual FibMor runit(const FibObj& a) const = 0;  // a(x)I -> a
  virtual FibMor symm(const FibObj& a, const FibObj& b) const = 0;  // ab -> ba

  // reindexing with pseudofunctor/monoidality coherence
  virtual FibObj pull(const BaseMor& f, const FibObj& a) const = 0;
  virtual FibMor pull_mor(const BaseMor& f, const FibMor& m) const = 0;
  virtual FibMor pull_comp(const BaseMor& f, const BaseMor& g, const FibObj& a) const = 0;  // f*(g*a) -> (g.f)*a
  virtual FibMor pull_id(const FibObj& a) const = 0;  // id*a -> a
  virtual FibMor pull_ten(const BaseMor& f, const FibObj& a, const FibObj& b) const = 0;  // f*a (x) f*b -> f*(a(x)b)
  virtual FibMor pull_unit(const BaseMor& f) const = 0;  // I_dom -> f*(I_cod)

  // indexed coproducts and products
  virtual FibObj sigma(const BaseMor& f, const FibObj& a) const;
  virtual FibMor sigma_mor(const BaseMor& f, const FibMor& m) const;
  virtual FibMor sigma_unit(const BaseMor& f, const FibObj& a) const;    // a -> f* sigma_f a
  virtual FibMor sigma_counit(const BaseMor& f, const FibObj& b) const;  // sigma_f f* b -> b
  virtual FibObj pi(const BaseMor& f, const FibObj& a) const;
  virtual FibMor pi_mor(const BaseMor& f, const FibMor& m) const;
  virtual FibMor pi_unit(const BaseMor& f, const FibObj& b) const;    // b -> pi_f f* b
  virtual FibMor pi_counit(const BaseMor& f, const FibObj& a) const;  // f* pi_f a -> a

  // closed structure
  virtual FibObj fhom(const FibObj& b, const FibObj& c) const;
  virtual FibMor curry(const FibMor& m, const FibObj& a, const FibObj& b, const FibObj& c) const;
  virtual FibMor ev(const FibObj& b, const FibObj& c) const;  // fhom(b,c)(x)b -> c

  // fiberwise (co)limits
  virtual Coprod coproduct(const BaseObj& x, const std::vector<FibObj>&) const;
  virtual FibMor copair(const Coprod&, const std::vector<FibMor>& legs, const FibObj& tgt) const;
  virtual Coeq coequalizer(const FibMor& u, const FibMor& v) const;
  virtual FibMor coeq_factor(const Coeq&, const FibMor& m) const;
  virtual Prod product(const BaseObj& x, const std::vector<FibObj>&) const;
  virtual FibMor pairm(const Prod&, const std::vector<FibMor>& legs, const FibObj& src) const;
  virtual Eq equalizer(const FibMor& u, const FibMor& v) const;
  virtual FibMor eq_factor(const Eq&, const FibMor& m) const;
  FibObj initial(const BaseObj& x) const { return coproduct(x, {}).obj; }

  // the unique u : p -> q with u . es[i] = vs[i], for a jointly surjective
  // family es; throws when no such morphism exists or it is not determined
  virtual FibMor solve_epi(const std::vector<FibMor>& es, const std::vector<FibMor>& vs,
                           const FibObj& p, const FibObj& q) const = 0;

  virtual std::string show_obj(const FibObj&) const = 0;
  virtual std::string show_mor(const FibMor&) const = 0;

  // derived
  FibMor invert(const FibMor& m) const;
  FibMor compose_path(const std::vector<FibMor>& path) const;  // path[n-1] . ... . path[0]
};

std::shared_ptr<Instance> make_fam_instance(std::shared_ptr<const MonCat> m);
std::shared_ptr<Instance> make_self_finset_instance();
std::shared_ptr<Instance> make_act_instance();
std::shared_ptr<Instance> make_const_instance(std::shared_ptr<const TableBase> base,
                                              std::shared_ptr<const MonCat> m);

// G-set construction/validation helpers for the act instance.
FibObj make_gset(const FinGroup& g, int carrier, std::vector<std::vector<int>> action);
FibObj make_fam(const BaseObj& x, std::vector<MonObj> at);
FibObj make_slice(const BaseObj& x, FinFunction to_base);

}  // namespace eic
