#include "eic/instance.hpp"

namespace eic {

FibObj Instance::sigma(const BaseMor&, const FibObj&) const {
  throw CapabilityError(name() + ": no indexed coproducts");
}
FibMor Instance::sigma_mor(const BaseMor&, const FibMor&) const {
  throw CapabilityError(name() + ": no indexed coproducts");
}
FibMor Instance::sigma_unit(const BaseMor&, const FibObj&) const {
  throw CapabilityError(name() + ": no indexed coproducts");
}
FibMor Instance::sigma_counit(const BaseMor&, const FibObj&) const {
  throw CapabilityError(name() + ": no indexed coproducts");
}
FibObj Instance::pi(const BaseMor&, const FibObj&) const {
  throw CapabilityError(name() + ": no indexed products");
}
FibMor Instance::pi_mor(const BaseMor&, const FibMor&) const {
  throw CapabilityError(name() + ": no indexed products");
}
FibMor Instance::pi_unit(const BaseMor&, const FibObj&) const {
  throw CapabilityError(name() + ": no indexed products");
}
FibMor Instance::pi_counit(const BaseMor&, const FibObj&) const {
  throw CapabilityError(name() + ": no indexed products");
}
FibObj Instance::fhom(const FibObj&, const FibObj&) const {
  throw CapabilityError(name() + ": not closed");
}
FibMor Instance::curry(const FibMor&, const FibObj&, const FibObj&, const FibObj&) const {
  throw CapabilityError(name() + ": not closed");
}
FibMor Instance::ev(const FibObj&, const FibObj&) const {
  throw CapabilityError(name() + ": not closed");
}
Coprod Instance::coproduct(const BaseObj&, const std::vector<FibObj>&) const {
  throw CapabilityError(name() + ": no fiberwise coproducts");
}
FibMor Instance::copair(const Coprod&, const std::vector<FibMor>&, const FibObj&) const {
  throw CapabilityError(name() + ": no fiberwise coproducts");
}
Coeq Instance::coequalizer(const FibMor&, const FibMor&) const {
  throw CapabilityError(name() + ": no fiberwise coequalizers");
}
FibMor Instance::coeq_factor(const Coeq&, const FibMor&) const {
  throw CapabilityError(name() + ": no fiberwise coequalizers");
}
Prod Instance::product(const BaseObj&, const std::vector<FibObj>&) const {
  throw CapabilityError(name() + ": no fiberwise products");
}
FibMor Instance::pairm(const Prod&, const std::vector<FibMor>&, const FibObj&) const {
  throw CapabilityError(name() + ": no fiberwise products");
}
Eq Instance::equalizer(const FibMor&, const FibMor&) const {
  throw CapabilityError(name() + ": no fiberwise equalizers");
}
FibMor Instance::eq_factor(const Eq&, const FibMor&) const {
  throw CapabilityError(name() + ": no fiberwise equalizers");
}

FibMor Instance::invert(const FibMor& m) const {
  auto inv = try_invert(m);
  if (!inv) throw StructuralError(name() + ": morphism is not invertible: " + show_mor(m));
  return *inv;
}

FibMor Instance::compose_path(const std::vector<FibMor>& path) const {
  if (path.empty()) throw StructuralError("compose_path: empty path");
  FibMor m = path[0];
  for (size_t i = 1; i < path.size(); ++i) {
    if (!obj_eq(path[i].dom, m.cod))
      throw StructuralError(name() + ": compose_path: object mismatch at step " +
                            std::to_string(i) + ": " + show_obj(path[i].dom) + " vs " +
                            show_obj(m.cod));
    m = compose(path[i], m);
  }
  return m;
}

FibObj make_fam(const BaseObj& x, std::vector<MonObj> at) {
  return FibObj{x, FamData{std::move(at)}};
}

FibObj make_slice(const BaseObj& x, FinFunction to_base) {
  if (to_base.cod != std::get<FinSet>(x.v).size)
    throw StructuralError("make_slice: codomain mismatch");
  return FibObj{x, SliceData{std::move(to_base)}};
}

FibObj make_gset(const FinGroup& g, int carrier, std::vector<std::vector<int>> action) {
  if (static_cast<int>(action.size()) != g.order)
    throw StructuralError("make_gset: action table has wrong group dimension");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != carrier)
      throw StructuralError("make_gset: action row has wrong carrier dimension");
    for (int v : row)
      if (v < 0 || v >= carrier) throw StructuralError("make_gset: action out of range");
  }
  for (int p = 0; p < carrier; ++p)
    if (action[static_cast<size_t>(g.unit)][static_cast<size_t>(p)] != p)
      throw StructuralError("make_gset: unit does not act as identity");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int p = 0; p < carrier; ++p)
        if (action[static_cast<size_t>(g.op(a, b))][static_cast<size_t>(p)] !=
            action[static_cast<size_t>(a)][static_cast<size_t>(action[static_cast<size_t>(b)][static_cast<size_t>(p)])])
          throw StructuralError("make_gset: not a left action");
  return FibObj{BaseObj{g}, GSetData{carrier, std::move(action)}};
}

}  // namespace eic
