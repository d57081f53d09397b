#pragma once

#include <memory>
#include <span>
#include <variant>

#include "eic/finbase.hpp"

// Base categories S for the indexing. Every instance picks one: FinSet (for
// the family, quantale and self indexings), finite groups (for Act), or an
// explicit finite category with chosen products (for constant instances).

namespace eic {

struct FinGroup {
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b]
  int unit = 0;

  int op(int a, int b) const { return mul.at(static_cast<size_t>(a)).at(static_cast<size_t>(b)); }
  int inverse(int a) const;
  void validate() const;  // group axioms, exhaustively
  friend bool operator==(const FinGroup&, const FinGroup&) = default;
};

FinGroup trivial_group();
FinGroup cyclic_group(int n);
FinGroup product_group(const FinGroup& a, const FinGroup& b);

// Object of a finite base category (id into an ambient table held by the BaseCat).
struct CatObjRef {
  int id = 0;
  friend bool operator==(const CatObjRef&, const CatObjRef&) = default;
};
struct CatArrRef {
  int id = 0;
  friend bool operator==(const CatArrRef&, const CatArrRef&) = default;
};

struct BaseObj {
  std::variant<FinSet, FinGroup, CatObjRef> v;
  friend bool operator==(const BaseObj&, const BaseObj&) = default;
};

// Group homomorphisms carry their dom/cod groups so composition is closed.
struct GroupHom {
  FinGroup dom;
  FinGroup cod;
  FinFunction map;
  void validate() const;
  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

struct BaseMor {
  std::variant<FinFunction, GroupHom, CatArrRef> v;
  friend bool operator==(const BaseMor&, const BaseMor&) = default;
};

struct BaseProduct {
  BaseObj obj;
  BaseMor p1;
  BaseMor p2;
};

struct BasePullback {
  BaseObj obj;
  BaseMor p1;  // to dom f
  BaseMor p2;  // to dom g
};

class BaseCat {
 public:
  virtual ~BaseCat() = default;
  virtual bool obj_eq(const BaseObj&, const BaseObj&) const;
  virtual bool mor_eq(const BaseMor&, const BaseMor&) const;
  virtual BaseObj dom(const BaseMor&) const = 0;
  virtual BaseObj cod(const BaseMor&) const = 0;
  virtual BaseMor id(const BaseObj&) const = 0;
  virtual BaseMor compose(const BaseMor& g, const BaseMor& f) const = 0;
  virtual BaseObj terminal() const = 0;
  virtual BaseMor to_terminal(const BaseObj&) const = 0;
  virtual BaseProduct product(const BaseObj&, const BaseObj&) const = 0;
  virtual BaseMor pair(const BaseMor& f, const BaseMor& g) const = 0;  // <f,g>
  virtual bool has_pullbacks() const { return false; }
  virtual BasePullback pullback(const BaseMor&, const BaseMor&) const;
  virtual std::string show_obj(const BaseObj&) const = 0;
  virtual std::string show_mor(const BaseMor&) const = 0;

  BaseMor diagonal(const BaseObj& x) const;  // <1,1> : X -> X x X
  bool is_identity(const BaseMor& f) const;
};

// FinSet with binary products by row-major pairing: (i,j) |-> i*|B| + j.
class FinSetBase final : public BaseCat {
 public:
  BaseObj dom(const BaseMor&) const override;
  BaseObj cod(const BaseMor&) const override;
  BaseMor id(const BaseObj&) const override;
  BaseMor compose(const BaseMor& g, const BaseMor& f) const override;
  BaseObj terminal() const override;
  BaseMor to_terminal(const BaseObj&) const override;
  BaseProduct product(const BaseObj&, const BaseObj&) const override;
  BaseMor pair(const BaseMor& f, const BaseMor& g) const override;
  bool has_pullbacks() const override { return true; }
  BasePullback pullback(const BaseMor&, const BaseMor&) const override;
  std::string show_obj(const BaseObj&) const override;
  std::string show_mor(const BaseMor&) const override;
};

// Finite groups; products are direct products with FinSet-style pairing.
class GroupBase final : public BaseCat {
 public:
  BaseObj dom(const BaseMor&) const override;
  BaseObj cod(const BaseMor&) const override;
  BaseMor id(const BaseObj&) const override;
  BaseMor compose(const BaseMor& g, const BaseMor& f) const override;
  BaseObj terminal() const override;
  BaseMor to_terminal(const BaseObj&) const override;
  BaseProduct product(const BaseObj&, const BaseObj&) const override;
  BaseMor pair(const BaseMor& f, const BaseMor& g) const override;
  bool has_pullbacks() const override { return true; }
  BasePullback pullback(const BaseMor&, const BaseMor&) const override;
  std::string show_obj(const BaseObj&) const override;
  std::string show_mor(const BaseMor&) const override;
};

// A finite category with chosen terminal object and chosen binary products.
// Pairing is found by exhaustive search over the (finite) hom sets.
class TableBase final : public BaseCat {
 public:
  TableBase(FinCategory cat, int terminal_obj,
            std::vector<std::vector<std::array<int, 3>>> prod);  // prod[a][b] = {obj, p1, p2}
  BaseObj dom(const BaseMor&) const override;
  BaseObj cod(const BaseMor&) const override;
  BaseMor id(const BaseObj&) const override;
  BaseMor compose(const BaseMor& g, const BaseMor& f) const override;
  BaseObj terminal() const override;
  BaseMor to_terminal(const BaseObj&) const override;
  BaseProduct product(const BaseObj&, const BaseObj&) const override;
  BaseMor pair(const BaseMor& f, const BaseMor& g) const override;
  std::string show_obj(const BaseObj&) const override;
  std::string show_mor(const BaseMor&) const override;

  const FinCategory& cat() const { return cat_; }
  void validate() const;  // terminal/product universal properties by enumeration

 private:
  FinCategory cat_;
  int terminal_ = 0;
  std::vector<std::vector<std::array<int, 3>>> prod_;
};

// ---------------------------------------------------------------------------
// Tuple calculus: left-folded finite products with coordinate maps.

struct Tup {
  std::vector<BaseObj> parts;
  BaseObj obj;                  // ((p0 x p1) x p2) ... ; terminal when empty
  std::vector<BaseMor> projs;   // obj -> parts[i]
};

Tup mk_tup(const BaseCat& s, std::vector<BaseObj> parts);

// The map dst <- src determined by dst coordinate j pulling from src
// coordinate coords[j]. Repeats give diagonals, omissions projections,
// permutations twists.
BaseMor tmap(const BaseCat& s, const Tup& src, const Tup& dst, std::span<const int> coords);

// Convenience: build dst from the src parts selected by coords, then the map.
struct TupMap {
  Tup dst;
  BaseMor mor;  // src.obj -> dst.obj
};
TupMap tselect(const BaseCat& s, const Tup& src, std::span<const int> coords);

}  // namespace eic
