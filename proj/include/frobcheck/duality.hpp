#pragma once

#include <string>

#include "frobcheck/algebra.hpp"
#include "frobcheck/functor.hpp"

namespace frobcheck {

// Evaluation e: A (x) B -> I and coevaluation n: I -> B (x) A. The triangle
// identities are checked explicitly, never assumed, so broken pairs are
// representable.
struct DualSituation {
    MonObject a = MonObject::mat(1);
    MonObject b = MonObject::mat(1);
    RatMatrix e;
    RatMatrix n;
    std::string name = "D";
};

// (e (x) 1)(1 (x) n) = 1_A and (1 (x) e)(n (x) 1) = 1_B, exactly.
Report check_triangles(const DualSituation& d);

// (FA, FB, i0 F(e) r, i F(n) r0): preservation of duals along a Frobenius
// monoidal functor.
DualSituation transport_dual(const FrobFunctorData& f, const DualSituation& d);

// The self-duality (Mat(n), Mat(n), e, n) with e = sum <e_i (x) e_i, ->
// and n its transpose.
DualSituation cupcap(size_t n);

// (FR, F(mu) r, F(eta) r0, i F(delta), i0 F(eps)).
FrobeniusAlgebra apply_functor_to_algebra(const FrobFunctorData& f, const FrobeniusAlgebra& alg);

// The functor R (x) - on a braided instance: r = (mu (x) 1 (x) 1)(1 (x) c (x) 1)
// with c: A (x) R -> R (x) A, r0 = eta, i = (1 (x) c' (x) 1)(delta (x) 1 (x) 1)
// with c': R (x) A -> A (x) R, i0 = eps.
FrobFunctorData tensor_left_functor(const FrobeniusAlgebra& alg, const CategoryInstance& cat);

// A natural transformation between two functor data, with claimed monoidal
// and comonoidal compatibility to be verified by check_nat_transf.
struct MonComonNatTransf {
    FrobFunctorData f;
    FrobFunctorData g;
    std::function<RatMatrix(const MonObject&)> component;
    std::string name = "alpha";
};

MonComonNatTransf identity_transf(const FrobFunctorData& f);
MonComonNatTransf scale_transf(const FrobFunctorData& f, const Rational& c);
// The transformation induced by group inversion e_g -> e_{g^{-1}} on the
// generating algebra of a tensor_left functor.
MonComonNatTransf invaut_transf(const FrobFunctorData& f);

// Naturality over the spanning family plus the four compatibility equations:
// alpha_{AB} r_F = r_G (alpha (x) alpha), alpha_I r0_F = r0_G,
// (alpha (x) alpha) i_F = i_G alpha_{AB}, i0_G alpha_I = i0_F.
Report check_nat_transf(const MonComonNatTransf& t, const ObjectGrid& grid);

// The mate of alpha against a dual situation: with d = (A,B,e,n),
// beta = (e_G (x) 1)(1 (x) alpha_B (x) 1)(1 (x) n_F): GA -> FA. With
// mirrored = true, d is read as (B,A,e,n) and the reflected composite
// beta = (1 (x) e_G)(1 (x) alpha_B (x) 1)(n_F (x) 1) is used.
RatMatrix mate_inverse(const MonComonNatTransf& t, const DualSituation& d, bool mirrored = false);

// Asserts beta alpha_A = 1_FA and alpha_A beta = 1_GA exactly.
Report check_mate_invertibility(const MonComonNatTransf& t, const DualSituation& d,
                                bool mirrored = false);

}  // namespace frobcheck
