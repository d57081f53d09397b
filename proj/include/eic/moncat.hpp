#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "eic/finbase.hpp"

// Ordinary (non-indexed) monoidal categories used as enrichment data for the
// family and constant instances: the cartesian category of finite sets, a
// finite commutative quantale, or an explicit strict monoidal table.
//
// Tensor on objects is required to be strictly associative and unital in all
// three; symmetry may be a genuine isomorphism (it is, for finite sets).

namespace eic {

struct MonObj {
  int id = 0;  // FinSetMon: cardinality; quantale: element; table: object id
  friend bool operator==(const MonObj&, const MonObj&) = default;
};

struct MonMor {
  MonObj dom;
  MonObj cod;
  std::vector<int> rep;  // FinSetMon: graph; quantale: empty; table: {arrow id}
  friend bool operator==(const MonMor&, const MonMor&) = default;
};

struct MonCoprod {
  MonObj obj;
  std::vector<MonMor> in;
};
struct MonProd {
  MonObj obj;
  std::vector<MonMor> out;
};
struct MonCoeq {
  MonMor u, v;
  MonObj obj;
  MonMor proj;
};
struct MonEq {
  MonMor u, v;
  MonObj obj;
  MonMor incl;
};

class MonCat {
 public:
  virtual ~MonCat() = default;
  virtual std::string name() const = 0;

  virtual MonMor id(MonObj a) const = 0;
  virtual MonMor compose(const MonMor& g, const MonMor& f) const = 0;
  virtual long hom_count(MonObj a, MonObj b) const = 0;
  virtual std::vector<MonMor> enum_hom(MonObj a, MonObj b) const = 0;
  virtual std::optional<MonMor> try_invert(const MonMor& m) const = 0;

  virtual MonObj unit() const = 0;
  virtual MonObj tensor(MonObj a, MonObj b) const = 0;
  virtual MonMor tensor_mor(const MonMor& f, const MonMor& g) const = 0;
  virtual MonMor symm(MonObj a, MonObj b) const = 0;  // a(x)b -> b(x)a

  // unique u with u . es[i] = vs[i] for a jointly surjective family
  virtual MonMor solve_epi(const std::vector<MonMor>& es, const std::vector<MonMor>& vs,
                           MonObj p, MonObj q) const;

  virtual bool has_colimits() const { return false; }
  virtual MonCoprod coproduct(const std::vector<MonObj>&) const;
  virtual MonMor copair(const MonCoprod&, const std::vector<MonMor>& legs, MonObj tgt) const;
  virtual MonCoeq coequalizer(const MonMor& u, const MonMor& v) const;
  virtual MonMor coeq_factor(const MonCoeq&, const MonMor& m) const;

  virtual bool has_limits() const { return false; }
  virtual MonProd product(const std::vector<MonObj>&) const;
  virtual MonMor pairm(const MonProd&, const std::vector<MonMor>& legs, MonObj src) const;
  virtual MonEq equalizer(const MonMor& u, const MonMor& v) const;
  virtual MonMor eq_factor(const MonEq&, const MonMor& m) const;

  virtual bool closed() const { return false; }
  virtual MonObj hom_obj(MonObj b, MonObj c) const;
  virtual MonMor curry(const MonMor& m, MonObj a, MonObj b, MonObj c) const;  // m: a(x)b -> c
  virtual MonMor ev(MonObj b, MonObj c) const;  // hom(b,c)(x)b -> c

  virtual std::string show_obj(MonObj a) const;
  virtual std::string show_mor(const MonMor& m) const;
};

// Finite sets and functions, skeletal by cardinality; pairs are row-major.
class FinSetMon final : public MonCat {
 public:
  std::string name() const override { return "finset"; }
  MonMor id(MonObj a) const override;
  MonMor compose(const MonMor& g, const MonMor& f) const override;
  long hom_count(MonObj a, MonObj b) const override;
  std::vector<MonMor> enum_hom(MonObj a, MonObj b) const override;
  std::optional<MonMor> try_invert(const MonMor& m) const override;
  MonMor solve_epi(const std::vector<MonMor>& es, const std::vector<MonMor>& vs, MonObj p,
                   MonObj q) const override;
  MonObj unit() const override { return MonObj{1}; }
  MonObj tensor(MonObj a, MonObj b) const override { return MonObj{a.id * b.id}; }
  MonMor tensor_mor(const MonMor& f, const MonMor& g) const override;
  MonMor symm(MonObj a, MonObj b) const override;
  bool has_colimits() const override { return true; }
  MonCoprod coproduct(const std::vector<MonObj>&) const override;
  MonMor copair(const MonCoprod&, const std::vector<MonMor>& legs, MonObj tgt) const override;
  MonCoeq coequalizer(const MonMor& u, const MonMor& v) const override;
  MonMor coeq_factor(const MonCoeq&, const MonMor& m) const override;
  bool has_limits() const override { return true; }
  MonProd product(const std::vector<MonObj>&) const override;
  MonMor pairm(const MonProd&, const std::vector<MonMor>& legs, MonObj src) const override;
  MonEq equalizer(const MonMor& u, const MonMor& v) const override;
  MonMor eq_factor(const MonEq&, const MonMor& m) const override;
  bool closed() const override { return true; }
  MonObj hom_obj(MonObj b, MonObj c) const override;
  MonMor curry(const MonMor& m, MonObj a, MonObj b, MonObj c) const override;
  MonMor ev(MonObj b, MonObj c) const override;
  std::string show_obj(MonObj a) const override;
  std::string show_mor(const MonMor& m) const override;
};

// A finite commutative quantale: a finite lattice with a commutative monoid
// structure preserving joins. Morphisms are order witnesses.
class QuantaleMon final : public MonCat {
 public:
  QuantaleMon(std::string name, int n, std::vector<std::vector<char>> leq,
              std::vector<std::vector<int>> ten, int unit);
  static QuantaleMon boolean2();  // {0 <= 1}, tensor = and, unit = 1

  std::string name() const override { return name_; }
  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0; }
  int join(const std::vector<int>& xs) const;
  int meet(const std::vector<int>& xs) const;
  int residual(int b, int c) const;  // largest z with z (x) b <= c

  MonMor id(MonObj a) const override;
  MonMor compose(const MonMor& g, const MonMor& f) const override;
  long hom_count(MonObj a, MonObj b) const override;
  std::vector<MonMor> enum_hom(MonObj a, MonObj b) const override;
  std::optional<MonMor> try_invert(const MonMor& m) const override;
  MonObj unit() const override { return MonObj{unit_}; }
  MonObj tensor(MonObj a, MonObj b) const override;
  MonMor tensor_mor(const MonMor& f, const MonMor& g) const override;
  MonMor symm(MonObj a, MonObj b) const override;
  bool has_colimits() const override { return true; }
  MonCoprod coproduct(const std::vector<MonObj>&) const override;
  MonMor copair(const MonCoprod&, const std::vector<MonMor>& legs, MonObj tgt) const override;
  MonCoeq coequalizer(const MonMor& u, const MonMor& v) const override;
  MonMor coeq_factor(const MonCoeq&, const MonMor& m) const override;
  bool has_limits() const override { return true; }
  MonProd product(const std::vector<MonObj>&) const override;
  MonMor pairm(const MonProd&, const std::vector<MonMor>& legs, MonObj src) const override;
  MonEq equalizer(const MonMor& u, const MonMor& v) const override;
  MonMor eq_factor(const MonEq&, const MonMor& m) const override;
  bool closed() const override { return true; }
  MonObj hom_obj(MonObj b, MonObj c) const override;
  MonMor curry(const MonMor& m, MonObj a, MonObj b, MonObj c) const override;
  MonMor ev(MonObj b, MonObj c) const override;
  std::string show_obj(MonObj a) const override;

 private:
  MonMor wit(int a, int b) const;  // a <= b, else throws
  std::string name_;
  int n_ = 0;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> ten_;
  int unit_ = 0;
};

// An explicit finite strict monoidal category. Only the structure present in
// the tables is offered; no (co)limits, no homs.
class TableMon final : public MonCat {
 public:
  TableMon(std::string name, FinCategory cat, std::vector<std::vector<int>> ten_obj,
           std::vector<std::vector<int>> ten_arr, int unit_obj,
           std::vector<std::vector<int>> symm_arr = {});
  // one-object strict monoidal category from a commutative monoid table
  static TableMon from_monoid(std::string name, const std::vector<std::vector<int>>& table,
                              int unit_elt);

  std::string name() const override { return name_; }
  const FinCategory& cat() const { return cat_; }
  void validate() const;

  MonMor id(MonObj a) const override;
  MonMor compose(const MonMor& g, const MonMor& f) const override;
  long hom_count(MonObj a, MonObj b) const override;
  std::vector<MonMor> enum_hom(MonObj a, MonObj b) const override;
  std::optional<MonMor> try_invert(const MonMor& m) const override;
  MonObj unit() const override { return MonObj{unit_}; }
  MonObj tensor(MonObj a, MonObj b) const override;
  MonMor tensor_mor(const MonMor& f, const MonMor& g) const override;
  MonMor symm(MonObj a, MonObj b) const override;

 private:
  std::string name_;
  FinCategory cat_;
  std::vector<std::vector<int>> ten_obj_;
  std::vector<std::vector<int>> ten_arr_;
  int unit_ = 0;
  std::vector<std::vector<int>> symm_arr_;  // empty: identity symmetry required
};

}  // namespace eic
