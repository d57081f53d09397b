#include "eic/base.hpp"

#include <algorithm>
#include <sstream>

namespace eic {

int FinGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (op(a, b) == unit && op(b, a) == unit) return b;
  throw StructuralError("FinGroup: element has no inverse");
}

void FinGroup::validate() const {
  if (static_cast<int>(mul.size()) != order) throw StructuralError("FinGroup: table size");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != order) throw StructuralError("FinGroup: table row size");
    for (int v : row)
      if (v < 0 || v >= order) throw StructuralError("FinGroup: table entry out of range");
  }
  for (int a = 0; a < order; ++a)
    if (op(unit, a) != a || op(a, unit) != a) throw StructuralError("FinGroup: unit law fails");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) throw StructuralError("FinGroup: associativity fails");
  for (int a = 0; a < order; ++a) inverse(a);
}

FinGroup trivial_group() {
  FinGroup g;
  g.order = 1;
  g.mul = {{0}};
  g.unit = 0;
  return g;
}

FinGroup cyclic_group(int n) {
  FinGroup g;
  g.order = n;
  g.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  g.unit = 0;
  return g;
}

FinGroup product_group(const FinGroup& a, const FinGroup& b) {
  FinGroup g;
  g.order = a.order * b.order;
  g.mul.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(g.order)));
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.mul[static_cast<size_t>(x1 * b.order + y1)][static_cast<size_t>(x2 * b.order + y2)] =
              a.op(x1, x2) * b.order + b.op(y1, y2);
  g.unit = a.unit * b.order + b.unit;
  return g;
}

void GroupHom::validate() const {
  if (map.dom != dom.order || map.cod != cod.order)
    throw StructuralError("GroupHom: carrier size mismatch");
  if (map(dom.unit) != cod.unit) throw StructuralError("GroupHom: does not preserve unit");
  for (int a = 0; a < dom.order; ++a)
    for (int b = 0; b < dom.order; ++b)
      if (map(dom.op(a, b)) != cod.op(map(a), map(b)))
        throw StructuralError("GroupHom: does not preserve multiplication");
}

// ---------------------------------------------------------------------------

bool BaseCat::obj_eq(const BaseObj& a, const BaseObj& b) const { return a == b; }
bool BaseCat::mor_eq(const BaseMor& a, const BaseMor& b) const { return a == b; }

BasePullback BaseCat::pullback(const BaseMor&, const BaseMor&) const {
  throw CapabilityError("base category has no chosen pullbacks");
}

BaseMor BaseCat::diagonal(const BaseObj& x) const {
  BaseMor i = id(x);
  return pair(i, i);
}

bool BaseCat::is_identity(const BaseMor& f) const { return mor_eq(f, id(dom(f))); }

// ---------------------------------------------------------------------------
// FinSetBase

namespace {
const FinFunction& ff(const BaseMor& m) { return std::get<FinFunction>(m.v); }
const FinSet& fs(const BaseObj& o) { return std::get<FinSet>(o.v); }
}  // namespace

BaseObj FinSetBase::dom(const BaseMor& m) const { return {FinSet{ff(m).dom}}; }
BaseObj FinSetBase::cod(const BaseMor& m) const { return {FinSet{ff(m).cod}}; }
BaseMor FinSetBase::id(const BaseObj& o) const { return {fin_id(fs(o).size)}; }
BaseMor FinSetBase::compose(const BaseMor& g, const BaseMor& f) const {
  return {fin_compose(ff(g), ff(f))};
}
BaseObj FinSetBase::terminal() const { return {FinSet{1}}; }
BaseMor FinSetBase::to_terminal(const BaseObj& o) const { return {fin_const(fs(o).size, 1, 0)}; }

BaseProduct FinSetBase::product(const BaseObj& a, const BaseObj& b) const {
  const int na = fs(a).size, nb = fs(b).size;
  std::vector<int> p1(static_cast<size_t>(na * nb)), p2(static_cast<size_t>(na * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      p1[static_cast<size_t>(i * nb + j)] = i;
      p2[static_cast<size_t>(i * nb + j)] = j;
    }
  BaseProduct out;
  out.obj = {FinSet{na * nb}};
  out.p1 = {FinFunction(na * nb, na, std::move(p1))};
  out.p2 = {FinFunction(na * nb, nb, std::move(p2))};
  return out;
}

BaseMor FinSetBase::pair(const BaseMor& f, const BaseMor& g) const {
  const auto& mf = ff(f);
  const auto& mg = ff(g);
  if (mf.dom != mg.dom) throw StructuralError("FinSetBase::pair: domain mismatch");
  std::vector<int> t(static_cast<size_t>(mf.dom));
  for (int i = 0; i < mf.dom; ++i) t[static_cast<size_t>(i)] = mf(i) * mg.cod + mg(i);
  return {FinFunction(mf.dom, mf.cod * mg.cod, std::move(t))};
}

BasePullback FinSetBase::pullback(const BaseMor& f, const BaseMor& g) const {
  const auto& mf = ff(f);
  const auto& mg = ff(g);
  Cone cone = finite_limit(pullback_diagram(mf, mg));
  BasePullback out;
  out.obj = {FinSet{cone.apex.size}};
  out.p1 = {cone.legs[0]};
  out.p2 = {cone.legs[1]};
  return out;
}

std::string FinSetBase::show_obj(const BaseObj& o) const {
  return "[" + std::to_string(fs(o).size) + "]";
}
std::string FinSetBase::show_mor(const BaseMor& m) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < ff(m).table.size(); ++i) os << (i ? "," : "") << ff(m).table[i];
  os << "):" << ff(m).dom << "->" << ff(m).cod;
  return os.str();
}

// ---------------------------------------------------------------------------
// GroupBase

namespace {
const GroupHom& gh(const BaseMor& m) { return std::get<GroupHom>(m.v); }
const FinGroup& fg(const BaseObj& o) { return std::get<FinGroup>(o.v); }
}  // namespace

BaseObj GroupBase::dom(const BaseMor& m) const { return {gh(m).dom}; }
BaseObj GroupBase::cod(const BaseMor& m) const { return {gh(m).cod}; }
BaseMor GroupBase::id(const BaseObj& o) const {
  return {GroupHom{fg(o), fg(o), fin_id(fg(o).order)}};
}
BaseMor GroupBase::compose(const BaseMor& g, const BaseMor& f) const {
  if (!(gh(f).cod == gh(g).dom)) throw StructuralError("GroupBase::compose: mismatch");
  return {GroupHom{gh(f).dom, gh(g).cod, fin_compose(gh(g).map, gh(f).map)}};
}
BaseObj GroupBase::terminal() const { return {trivial_group()}; }
BaseMor GroupBase::to_terminal(const BaseObj& o) const {
  return {GroupHom{fg(o), trivial_group(), fin_const(fg(o).order, 1, 0)}};
}

BaseProduct GroupBase::product(const BaseObj& a, const BaseObj& b) const {
  const FinGroup& ga = fg(a);
  const FinGroup& gb = fg(b);
  FinGroup p = product_group(ga, gb);
  std::vector<int> p1(static_cast<size_t>(p.order)), p2(static_cast<size_t>(p.order));
  for (int i = 0; i < ga.order; ++i)
    for (int j = 0; j < gb.order; ++j) {
      p1[static_cast<size_t>(i * gb.order + j)] = i;
      p2[static_cast<size_t>(i * gb.order + j)] = j;
    }
  BaseProduct out;
  out.obj = {p};
  out.p1 = {GroupHom{p, ga, FinFunction(p.order, ga.order, std::move(p1))}};
  out.p2 = {GroupHom{p, gb, FinFunction(p.order, gb.order, std::move(p2))}};
  return out;
}

BaseMor GroupBase::pair(const BaseMor& f, const BaseMor& g) const {
  const GroupHom& hf = gh(f);
  const GroupHom& hg = gh(g);
  if (!(hf.dom == hg.dom)) throw StructuralError("GroupBase::pair: domain mismatch");
  FinGroup p = product_group(hf.cod, hg.cod);
  std::vector<int> t(static_cast<size_t>(hf.dom.order));
  for (int i = 0; i < hf.dom.order; ++i)
    t[static_cast<size_t>(i)] = hf.map(i) * hg.cod.order + hg.map(i);
  return {GroupHom{hf.dom, p, FinFunction(hf.dom.order, p.order, std::move(t))}};
}

BasePullback GroupBase::pullback(const BaseMor& f, const BaseMor& g) const {
  const GroupHom& hf = gh(f);
  const GroupHom& hg = gh(g);
  if (!(hf.cod == hg.cod)) throw StructuralError("GroupBase::pullback: codomain mismatch");
  // subgroup of the direct product on matching pairs
  std::vector<int> elems;
  for (int i = 0; i < hf.dom.order; ++i)
    for (int j = 0; j < hg.dom.order; ++j)
      if (hf.map(i) == hg.map(j)) elems.push_back(i * hg.dom.order + j);
  FinGroup prod = product_group(hf.dom, hg.dom);
  FinGroup sub;
  sub.order = static_cast<int>(elems.size());
  sub.mul.assign(elems.size(), std::vector<int>(elems.size()));
  auto index_of = [&](int e) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), e) - elems.begin());
  };
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      sub.mul[i][j] = index_of(prod.op(elems[i], elems[j]));
  sub.unit = index_of(prod.unit);
  std::vector<int> p1(elems.size()), p2(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    p1[i] = elems[i] / hg.dom.order;
    p2[i] = elems[i] % hg.dom.order;
  }
  BasePullback out;
  out.obj = {sub};
  out.p1 = {GroupHom{sub, hf.dom, FinFunction(sub.order, hf.dom.order, std::move(p1))}};
  out.p2 = {GroupHom{sub, hg.dom, FinFunction(sub.order, hg.dom.order, std::move(p2))}};
  return out;
}

std::string GroupBase::show_obj(const BaseObj& o) const {
  return "G" + std::to_string(fg(o).order);
}
std::string GroupBase::show_mor(const BaseMor& m) const {
  std::ostringstream os;
  os << "hom(";
  for (size_t i = 0; i < gh(m).map.table.size(); ++i) os << (i ? "," : "") << gh(m).map.table[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// TableBase

TableBase::TableBase(FinCategory cat, int terminal_obj,
                     std::vector<std::vector<std::array<int, 3>>> prod)
    : cat_(std::move(cat)), terminal_(terminal_obj), prod_(std::move(prod)) {}

namespace {
int ca(const BaseMor& m) { return std::get<CatArrRef>(m.v).id; }
int co(const BaseObj& o) { return std::get<CatObjRef>(o.v).id; }
}  // namespace

BaseObj TableBase::dom(const BaseMor& m) const {
  return {CatObjRef{cat_.arrow_src[static_cast<size_t>(ca(m))]}};
}
BaseObj TableBase::cod(const BaseMor& m) const {
  return {CatObjRef{cat_.arrow_dst[static_cast<size_t>(ca(m))]}};
}
BaseMor TableBase::id(const BaseObj& o) const {
  return {CatArrRef{cat_.identity[static_cast<size_t>(co(o))]}};
}
BaseMor TableBase::compose(const BaseMor& g, const BaseMor& f) const {
  return {CatArrRef{cat_.compose(ca(g), ca(f))}};
}
BaseObj TableBase::terminal() const { return {CatObjRef{terminal_}}; }
BaseMor TableBase::to_terminal(const BaseObj& o) const {
  auto h = cat_.hom(co(o), terminal_);
  if (h.size() != 1) throw StructuralError("TableBase: chosen terminal is not terminal");
  return {CatArrRef{h[0]}};
}
BaseProduct TableBase::product(const BaseObj& a, const BaseObj& b) const {
  const auto& entry = prod_.at(static_cast<size_t>(co(a))).at(static_cast<size_t>(co(b)));
  return {BaseObj{CatObjRef{entry[0]}}, BaseMor{CatArrRef{entry[1]}}, BaseMor{CatArrRef{entry[2]}}};
}
BaseMor TableBase::pair(const BaseMor& f, const BaseMor& g) const {
  BaseObj a = cod(f), b = cod(g);
  if (!(dom(f) == dom(g))) throw StructuralError("TableBase::pair: domain mismatch");
  BaseProduct p = product(a, b);
  std::vector<int> found;
  for (int m : cat_.hom(co(dom(f)), co(p.obj)))
    if (cat_.compose(ca(p.p1), m) == ca(f) && cat_.compose(ca(p.p2), m) == ca(g))
      found.push_back(m);
  if (found.size() != 1) throw StructuralError("TableBase::pair: pairing not unique");
  return {CatArrRef{found[0]}};
}
std::string TableBase::show_obj(const BaseObj& o) const { return "o" + std::to_string(co(o)); }
std::string TableBase::show_mor(const BaseMor& m) const { return "a" + std::to_string(ca(m)); }

void TableBase::validate() const {
  LawReport rep = check_finite_category(cat_);
  if (!rep.ok()) throw StructuralError("TableBase: not a category: " + rep.summary());
  for (int x = 0; x < cat_.n_objects; ++x)
    if (cat_.hom(x, terminal_).size() != 1)
      throw StructuralError("TableBase: chosen terminal is not terminal");
  if (static_cast<int>(prod_.size()) != cat_.n_objects)
    throw StructuralError("TableBase: product table size");
  for (int a = 0; a < cat_.n_objects; ++a)
    for (int b = 0; b < cat_.n_objects; ++b) {
      BaseProduct p = product(BaseObj{CatObjRef{a}}, BaseObj{CatObjRef{b}});
      // universal property by enumeration
      for (int z = 0; z < cat_.n_objects; ++z)
        for (int r : cat_.hom(z, a))
          for (int s : cat_.hom(z, b)) {
            int count = 0;
            for (int m : cat_.hom(z, co(p.obj)))
              if (cat_.compose(ca(p.p1), m) == r && cat_.compose(ca(p.p2), m) == s) ++count;
            if (count != 1)
              throw StructuralError("TableBase: chosen product fails universal property");
          }
    }
}

// ---------------------------------------------------------------------------
// Tuples

Tup mk_tup(const BaseCat& s, std::vector<BaseObj> parts) {
  Tup t;
  t.parts = std::move(parts);
  if (t.parts.empty()) {
    t.obj = s.terminal();
    return t;
  }
  t.obj = t.parts[0];
  t.projs = {s.id(t.obj)};
  for (size_t i = 1; i < t.parts.size(); ++i) {
    BaseProduct p = s.product(t.obj, t.parts[i]);
    for (auto& pr : t.projs) pr = s.compose(pr, p.p1);
    t.projs.push_back(p.p2);
    t.obj = p.obj;
  }
  return t;
}

BaseMor tmap(const BaseCat& s, const Tup& src, const Tup& dst, std::span<const int> coords) {
  if (coords.size() != dst.parts.size()) throw StructuralError("tmap: coordinate count mismatch");
  if (dst.parts.empty()) return s.to_terminal(src.obj);
  for (size_t j = 0; j < coords.size(); ++j) {
    int c = coords[j];
    if (c < 0 || c >= static_cast<int>(src.parts.size()))
      throw StructuralError("tmap: coordinate out of range");
    if (!s.obj_eq(src.parts[static_cast<size_t>(c)], dst.parts[j]))
      throw StructuralError("tmap: factor mismatch");
  }
  BaseMor m = src.projs[static_cast<size_t>(coords[0])];
  for (size_t j = 1; j < coords.size(); ++j)
    m = s.pair(m, src.projs[static_cast<size_t>(coords[j])]);
  return m;
}

TupMap tselect(const BaseCat& s, const Tup& src, std::span<const int> coords) {
  std::vector<BaseObj> parts;
  parts.reserve(coords.size());
  for (int c : coords) parts.push_back(src.parts.at(static_cast<size_t>(c)));
  TupMap out;
  out.dst = mk_tup(s, std::move(parts));
  out.mor = tmap(s, src, out.dst, coords);
  return out;
}

}  // namespace eic
