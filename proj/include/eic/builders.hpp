#pragma once

#include "eic/vcat.hpp"

// Constructors turning concrete combinatorial data into V-categories,
// functors and transformations over the family instances. Extents default to
// the terminal object (the classical enriched case); discrete extents and
// internal categories are built elsewhere.

namespace eic {

// a finite ordinary category as a fam(finset)-category with terminal extents
VCatP classical_vcat(const std::shared_ptr<Instance>& fam_finset, const FinCategory& cat,
                     const std::string& name = "");

// a preorder (reflexive, transitive boolean matrix) as a fam(quantale)-category
VCatP preorder_vcat(const std::shared_ptr<Instance>& fam_q, const std::vector<std::vector<char>>& rel,
                    const std::string& name = "");

// an enriched category over any fam instance with terminal extents: hom
// objects and composition/identity tables in the underlying monoidal category
struct EnrichedTable {
  int n = 0;
  std::vector<std::vector<MonObj>> hom;              // hom[x][y]
  std::vector<MonMor> ids;                           // unit() -> hom[x][x]
  std::vector<std::vector<std::vector<MonMor>>> comp;  // hom[y][z] (x) hom[x][y] -> hom[x][z]
};
VCatP enriched_vcat(const std::shared_ptr<Instance>& fam, const EnrichedTable& t,
                    const std::string& name = "");

// functor between classical_vcat images from an object map and arrow map
VFunP classical_vfun(const VCatP& a, const VCatP& b, const FinCategory& ca, const FinCategory& cb,
                     const std::vector<int>& ob, const std::vector<int>& arr,
                     const std::string& name = "");

// functor between preorder_vcat images from a monotone map
VFunP preorder_vfun(const VCatP& a, const VCatP& b, const std::vector<int>& ob,
                    const std::string& name = "");

// the walking arrow as a FinCategory (objects 0 -> 1)
FinCategory walking_arrow();
FinCategory walking_point();
FinCategory commuting_square();  // product of two walking arrows

// monoid as one-object category
FinCategory one_object_monoid(const std::vector<std::vector<int>>& table, int unit_elt);

}  // namespace eic
