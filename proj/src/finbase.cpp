#include "eic/finbase.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eic {

FinFunction::FinFunction(int dom_, int cod_, std::vector<int> table_)
    : dom(dom_), cod(cod_), table(std::move(table_)) {
  if (static_cast<int>(table.size()) != dom)
    throw StructuralError("FinFunction: table length does not match domain size");
  for (int v : table)
    if (v < 0 || v >= cod) throw StructuralError("FinFunction: table entry out of codomain");
}

bool FinFunction::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i < dom; ++i)
    if (table[static_cast<size_t>(i)] != i) return false;
  return true;
}

bool FinFunction::is_bijection() const {
  if (dom != cod) return false;
  std::vector<char> seen(static_cast<size_t>(cod), 0);
  for (int v : table) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool FinFunction::is_surjection() const {
  std::vector<char> seen(static_cast<size_t>(cod), 0);
  for (int v : table) seen[static_cast<size_t>(v)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

FinFunction fin_id(int n) {
  std::vector<int> t(static_cast<size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  return FinFunction(n, n, std::move(t));
}

FinFunction fin_compose(const FinFunction& g, const FinFunction& f) {
  if (f.cod != g.dom) throw StructuralError("fin_compose: codomain/domain mismatch");
  std::vector<int> t(static_cast<size_t>(f.dom));
  for (int i = 0; i < f.dom; ++i) t[static_cast<size_t>(i)] = g(f(i));
  return FinFunction(f.dom, g.cod, std::move(t));
}

FinFunction fin_const(int dom, int cod, int value) {
  return FinFunction(dom, cod, std::vector<int>(static_cast<size_t>(dom), value));
}

std::optional<FinFunction> fin_inverse(const FinFunction& f) {
  if (!f.is_bijection()) return std::nullopt;
  std::vector<int> t(static_cast<size_t>(f.dom));
  for (int i = 0; i < f.dom; ++i) t[static_cast<size_t>(f(i))] = i;
  return FinFunction(f.cod, f.dom, std::move(t));
}

UnionFind::UnionFind(int n) : parent_(static_cast<size_t>(n)) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int i) {
  while (parent_[static_cast<size_t>(i)] != i) {
    parent_[static_cast<size_t>(i)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(i)])];
    i = parent_[static_cast<size_t>(i)];
  }
  return i;
}

void UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  // keep the least index as root, so representatives are least members
  if (a == b) return;
  if (a < b)
    parent_[static_cast<size_t>(b)] = a;
  else
    parent_[static_cast<size_t>(a)] = b;
}

QuotientData quotient_from_unionfind(UnionFind& uf) {
  const int n = uf.size();
  std::vector<int> cls(static_cast<size_t>(n), -1);
  int next = 0;
  std::vector<int> proj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (cls[static_cast<size_t>(r)] < 0) cls[static_cast<size_t>(r)] = next++;
    proj[static_cast<size_t>(i)] = cls[static_cast<size_t>(r)];
  }
  QuotientData q;
  q.source = FinSet{n};
  q.classes = FinSet{next};
  q.projection = FinFunction(n, next, std::move(proj));
  return q;
}

QuotientData coequalizer(const FinFunction& f, const FinFunction& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw StructuralError("coequalizer: parallel pair required");
  UnionFind uf(f.cod);
  for (int i = 0; i < f.dom; ++i) uf.unite(f(i), g(i));
  return quotient_from_unionfind(uf);
}

// ---------------------------------------------------------------------------

int FinCategory::compose(int g, int f) const {
  int r = comp.at(static_cast<size_t>(g)).at(static_cast<size_t>(f));
  if (r < 0) throw StructuralError("FinCategory: non-composable pair");
  return r;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < n_arrows(); ++m)
    if (arrow_src[static_cast<size_t>(m)] == a && arrow_dst[static_cast<size_t>(m)] == b)
      out.push_back(m);
  return out;
}

std::string LawReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    os << " [" << v.law;
    for (int w : v.witness) os << " " << w;
    if (!v.detail.empty()) os << " : " << v.detail;
    os << "]";
  }
  return os.str();
}

LawReport check_finite_category(const FinCategory& c) {
  LawReport rep;
  const int n = c.n_arrows();
  auto bad = [&](std::string law, std::vector<int> wit, std::string detail) {
    rep.violations.push_back({std::move(law), std::move(wit), std::move(detail)});
  };
  if (static_cast<int>(c.identity.size()) != c.n_objects)
    bad("typing", {}, "identity table size mismatch");
  for (int o = 0; o < c.n_objects && o < static_cast<int>(c.identity.size()); ++o) {
    int e = c.identity[static_cast<size_t>(o)];
    if (e < 0 || e >= n || c.arrow_src[static_cast<size_t>(e)] != o ||
        c.arrow_dst[static_cast<size_t>(e)] != o)
      bad("typing", {o}, "identity arrow does not have the right endpoints");
  }
  if (static_cast<int>(c.comp.size()) != n) {
    bad("typing", {}, "composition table size mismatch");
    return rep;
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      bool composable = c.arrow_dst[static_cast<size_t>(f)] == c.arrow_src[static_cast<size_t>(g)];
      int r = c.comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
      if (composable != (r >= 0)) {
        bad("typing", {g, f}, composable ? "missing composite" : "composite on non-composable pair");
        continue;
      }
      if (r >= 0 && (c.arrow_src[static_cast<size_t>(r)] != c.arrow_src[static_cast<size_t>(f)] ||
                     c.arrow_dst[static_cast<size_t>(r)] != c.arrow_dst[static_cast<size_t>(g)]))
        bad("typing", {g, f}, "composite has wrong endpoints");
    }
  if (!rep.ok()) return rep;

  for (int f = 0; f < n; ++f) {
    int s = c.arrow_src[static_cast<size_t>(f)], d = c.arrow_dst[static_cast<size_t>(f)];
    if (c.compose(f, c.identity[static_cast<size_t>(s)]) != f) bad("unit-right", {f}, "");
    if (c.compose(c.identity[static_cast<size_t>(d)], f) != f) bad("unit-left", {f}, "");
  }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (c.arrow_dst[static_cast<size_t>(g)] != c.arrow_src[static_cast<size_t>(h)]) continue;
      for (int f = 0; f < n; ++f) {
        if (c.arrow_dst[static_cast<size_t>(f)] != c.arrow_src[static_cast<size_t>(g)]) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          bad("assoc", {h, g, f}, "");
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------

void FinDiagram::validate() const {
  const int n = static_cast<int>(nodes.size());
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw StructuralError("FinDiagram: dangling edge");
    if (e.fn.dom != nodes[static_cast<size_t>(e.src)].size ||
        e.fn.cod != nodes[static_cast<size_t>(e.dst)].size)
      throw StructuralError("FinDiagram: edge function does not match node sizes");
  }
}

Cone finite_limit(const FinDiagram& d) {
  d.validate();
  const int n = static_cast<int>(d.nodes.size());
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  auto consistent = [&](const std::vector<int>& t) {
    for (const auto& e : d.edges)
      if (e.fn(t[static_cast<size_t>(e.src)]) != t[static_cast<size_t>(e.dst)]) return false;
    return true;
  };
  // lexicographic enumeration of the product carrier
  bool any_empty = false;
  for (const auto& node : d.nodes) any_empty = any_empty || node.size == 0;
  if (n == 0) {
    tuples.push_back({});  // empty limit is terminal
  } else if (!any_empty) {
    for (;;) {
      if (consistent(cur)) tuples.push_back(cur);
      int i = n - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] + 1 >= d.nodes[static_cast<size_t>(i)].size) {
        cur[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++cur[static_cast<size_t>(i)];
    }
  }
  Cone cone;
  cone.apex = FinSet{static_cast<int>(tuples.size())};
  for (int k = 0; k < n; ++k) {
    std::vector<int> leg(tuples.size());
    for (size_t t = 0; t < tuples.size(); ++t) leg[t] = tuples[t][static_cast<size_t>(k)];
    cone.legs.emplace_back(cone.apex.size, d.nodes[static_cast<size_t>(k)].size, std::move(leg));
  }
  cone.tuples = std::move(tuples);
  return cone;
}

Cocone finite_colimit(const FinDiagram& d) {
  d.validate();
  const int n = static_cast<int>(d.nodes.size());
  std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k)
    offset[static_cast<size_t>(k) + 1] = offset[static_cast<size_t>(k)] + d.nodes[static_cast<size_t>(k)].size;
  UnionFind uf(offset[static_cast<size_t>(n)]);
  for (const auto& e : d.edges)
    for (int i = 0; i < e.fn.dom; ++i)
      uf.unite(offset[static_cast<size_t>(e.src)] + i, offset[static_cast<size_t>(e.dst)] + e.fn(i));
  Cocone cc;
  cc.quot = quotient_from_unionfind(uf);
  cc.apex = cc.quot.classes;
  for (int k = 0; k < n; ++k) {
    std::vector<int> leg(static_cast<size_t>(d.nodes[static_cast<size_t>(k)].size));
    for (int i = 0; i < d.nodes[static_cast<size_t>(k)].size; ++i)
      leg[static_cast<size_t>(i)] = cc.quot.projection(offset[static_cast<size_t>(k)] + i);
    cc.legs.emplace_back(d.nodes[static_cast<size_t>(k)].size, cc.apex.size, std::move(leg));
  }
  return cc;
}

std::optional<FinFunction> mediate_cone(const FinDiagram& d, const Cone& lim,
                                        const FinSet& apex,
                                        const std::vector<FinFunction>& legs) {
  const int n = static_cast<int>(d.nodes.size());
  if (static_cast<int>(legs.size()) != n) throw StructuralError("mediate_cone: wrong leg count");
  std::vector<int> t(static_cast<size_t>(apex.size));
  for (int a = 0; a < apex.size; ++a) {
    std::vector<int> want(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) want[static_cast<size_t>(k)] = legs[static_cast<size_t>(k)](a);
    auto it = std::find(lim.tuples.begin(), lim.tuples.end(), want);
    if (it == lim.tuples.end()) return std::nullopt;  // competing data is not a cone
    t[static_cast<size_t>(a)] = static_cast<int>(it - lim.tuples.begin());
  }
  return FinFunction(apex.size, lim.apex.size, std::move(t));
}

std::optional<FinFunction> mediate_cocone(const FinDiagram& d, const Cocone& colim,
                                          const FinSet& apex,
                                          const std::vector<FinFunction>& legs) {
  const int n = static_cast<int>(d.nodes.size());
  if (static_cast<int>(legs.size()) != n) throw StructuralError("mediate_cocone: wrong leg count");
  std::vector<int> t(static_cast<size_t>(colim.apex.size), -1);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < d.nodes[static_cast<size_t>(k)].size; ++i) {
      int cls = colim.legs[static_cast<size_t>(k)](i);
      int v = legs[static_cast<size_t>(k)](i);
      if (t[static_cast<size_t>(cls)] < 0)
        t[static_cast<size_t>(cls)] = v;
      else if (t[static_cast<size_t>(cls)] != v)
        return std::nullopt;  // competing data is not a cocone
    }
  for (int& v : t)
    if (v < 0) return std::nullopt;  // class not covered: cannot happen for surjective quotients
  return FinFunction(colim.apex.size, apex.size, std::move(t));
}

FinDiagram product_diagram(const FinSet& a, const FinSet& b) {
  FinDiagram d;
  d.nodes = {a, b};
  return d;
}

FinDiagram equalizer_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw StructuralError("equalizer_diagram: parallel pair required");
  FinDiagram d;
  d.nodes = {FinSet{f.dom}, FinSet{f.cod}};
  d.edges.push_back({0, 1, f});
  d.edges.push_back({0, 1, g});
  return d;
}

FinDiagram pullback_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.cod) throw StructuralError("pullback_diagram: codomain mismatch");
  FinDiagram d;
  d.nodes = {FinSet{f.dom}, FinSet{g.dom}, FinSet{f.cod}};
  d.edges.push_back({0, 2, f});
  d.edges.push_back({1, 2, g});
  return d;
}

FinDiagram coproduct_diagram(const FinSet& a, const FinSet& b) {
  FinDiagram d;
  d.nodes = {a, b};
  return d;
}

FinDiagram coequalizer_diagram(const FinFunction& f, const FinFunction& g) {
  return equalizer_diagram(f, g);  // same shape, read as a colimit
}

}  // namespace eic
