#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Decidable kernel: finite sets as dense index ranges, functions as tables,
// finite categories as composition tables, and finite (co)limits computed by
// enumeration and union-find.

namespace eic {

struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A finite set is its size; elements are 0..size-1.
struct FinSet {
  int size = 0;
  friend bool operator==(const FinSet&, const FinSet&) = default;
};

struct FinFunction {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;  // table[i] in [0, cod)

  FinFunction() = default;
  FinFunction(int dom_, int cod_, std::vector<int> table_);

  int operator()(int i) const { return table.at(static_cast<size_t>(i)); }
  bool is_identity() const;
  bool is_bijection() const;
  bool is_surjection() const;
  friend bool operator==(const FinFunction&, const FinFunction&) = default;
};

FinFunction fin_id(int n);
// g after f
FinFunction fin_compose(const FinFunction& g, const FinFunction& f);
FinFunction fin_const(int dom, int cod, int value);
std::optional<FinFunction> fin_inverse(const FinFunction& f);

struct UnionFind {
  explicit UnionFind(int n);
  int find(int i);
  void unite(int a, int b);
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  mutable std::vector<int> parent_;
};

// source -> classes, classes numbered in order of least representative.
struct QuotientData {
  FinSet source;
  FinSet classes;
  FinFunction projection;
};

QuotientData quotient_from_unionfind(UnionFind& uf);

// Coequalizer of a parallel pair f,g : A -> B in FinSet.
QuotientData coequalizer(const FinFunction& f, const FinFunction& g);

// ---------------------------------------------------------------------------
// Finite categories presented by tables.

struct FinCategory {
  int n_objects = 0;
  std::vector<int> arrow_src;  // per arrow
  std::vector<int> arrow_dst;
  std::vector<int> identity;            // per object, an arrow id
  std::vector<std::vector<int>> comp;   // comp[g][f] = g.f, or -1 when not composable

  int n_arrows() const { return static_cast<int>(arrow_src.size()); }
  int compose(int g, int f) const;      // throws on non-composable pairs
  std::vector<int> hom(int a, int b) const;
};

struct LawViolation {
  std::string law;                 // "assoc", "unit-left", "unit-right", "typing"
  std::vector<int> witness;        // arrow ids (or object ids for unit laws)
  std::string detail;
};

struct LawReport {
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

LawReport check_finite_category(const FinCategory& c);

// ---------------------------------------------------------------------------
// Finite diagrams in FinSet and their (co)limits.

struct FinDiagram {
  std::vector<FinSet> nodes;
  struct Edge {
    int src = 0;
    int dst = 0;
    FinFunction fn;
  };
  std::vector<Edge> edges;

  void validate() const;  // throws StructuralError on dangling edges / size mismatch
};

struct Cone {
  FinSet apex;
  std::vector<FinFunction> legs;          // one per node
  std::vector<std::vector<int>> tuples;   // element description of the apex
};

struct Cocone {
  FinSet apex;
  std::vector<FinFunction> legs;  // one per node
  QuotientData quot;              // from the disjoint sum of the nodes
};

// Limit by enumeration-and-filter over the product carrier; tuples are listed
// in lexicographic order, which fixes the apex numbering.
Cone finite_limit(const FinDiagram& d);

// Colimit by union-find on the disjoint sum of the nodes; class numbering is
// by least representative in the sum ordered (node, element).
Cocone finite_colimit(const FinDiagram& d);

// Mediating map from a competing cone into the limit cone, if one exists.
// Unique when it exists (by construction of `finite_limit`).
std::optional<FinFunction> mediate_cone(const FinDiagram& d, const Cone& lim,
                                        const FinSet& apex,
                                        const std::vector<FinFunction>& legs);

// Mediating map out of the colimit cocone onto a competing cocone.
std::optional<FinFunction> mediate_cocone(const FinDiagram& d, const Cocone& colim,
                                          const FinSet& apex,
                                          const std::vector<FinFunction>& legs);

// Convenience builders.
FinDiagram product_diagram(const FinSet& a, const FinSet& b);
FinDiagram equalizer_diagram(const FinFunction& f, const FinFunction& g);
FinDiagram pullback_diagram(const FinFunction& f, const FinFunction& g);
FinDiagram coproduct_diagram(const FinSet& a, const FinSet& b);
FinDiagram coequalizer_diagram(const FinFunction& f, const FinFunction& g);

}  // namespace eic
