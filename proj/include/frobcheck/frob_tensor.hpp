#pragma once

#include "frobcheck/duality.hpp"
#include "frobcheck/functor.hpp"

namespace frobcheck {

// Pointwise tensor of two parallel functors into a braided target:
// (F (x) G)(A) = FA (x) GA, (F (x) G)(m) = Fm (x) Gm,
// r = (r_F (x) r_G)(1 (x) c^{-1} (x) 1) with c^{-1}: GA (x) FB -> FB (x) GA,
// i = (1 (x) c (x) 1)(i_F (x) i_G) with c: FB (x) GA -> GA (x) FB,
// r0 = r0 (x) r0, i0 = i0 (x) i0.
FrobFunctorData pointwise_tensor(const FrobFunctorData& f, const FrobFunctorData& g);

// The constant functor at the monoidal unit, with identity structure maps.
FrobFunctorData unit_functor(const CategoryInstance& source, const CategoryInstance& target);

// Component of the pointwise braiding c_{F,G} at A: braid(FA, GA).
RatMatrix frob_braiding(const FrobFunctorData& f, const FrobFunctorData& g, const MonObject& a);

// Monoidal-category laws for the pointwise structure, over the grid:
// (a) strict associativity of the pointwise tensor, component by component;
// (b) hexagon identities and the symmetry c c = 1 of the pointwise braiding;
// (c) naturality of the braiding in the object variable (spanning family)
//     and in both functor variables (sampled transformation family);
// (d) each functor transports cup/cap dualities to valid dualities.
Report check_frob_category(const FrobFunctorData& f, const FrobFunctorData& g,
                           const FrobFunctorData& h, const ObjectGrid& grid);

}  // namespace frobcheck
