#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcheck/functor.hpp"
#include "frobcheck/linalg.hpp"

namespace frobcheck {

// A functor Sigma G -> Mat(Q): a representation rho of a finite abelian G on
// Q^v, optionally carrying monoidal/comonoidal structure as single matrices
// (the source has one object, so one component of each suffices).
// make_base_functor is the hard gate for rho; the structure maps are checked
// by the reporting functions instead, so broken ones stay representable.
struct BaseFunctor {
    FiniteBase base = FiniteBase::zmod(1);
    size_t v_dim = 1;
    std::vector<RatMatrix> rho;  // one v_dim x v_dim matrix per group element

    struct StructureMaps {
        RatMatrix r;   // V (x) V -> V
        RatMatrix r0;  // I -> V
        RatMatrix i;   // V -> V (x) V
        RatMatrix i0;  // V -> I
    };
    std::optional<StructureMaps> maps;

    std::string name = "F";
};

// Validates shapes, rho(e) = 1 and rho(g)rho(h) = rho(gh) exhaustively;
// throws StructureError naming the offending elements.
BaseFunctor make_base_functor(FiniteBase base, size_t v_dim, std::vector<RatMatrix> rho,
                              std::string name);

// Q[G] with the regular representation and the group-algebra structure maps
// mu(e_g (x) e_h) = e_{gh}, eta = e_1, delta(e_g) = sum_h e_h (x) e_{h^{-1}g},
// eps = coefficient of e_1.
BaseFunctor regular_functor(const FiniteBase& base);

// The convolution unit J: Q[G] with the regular representation.
BaseFunctor convolution_unit(const FiniteBase& base);

// View as functor data with source Sigma G and target Mat(Q), so the generic
// functor checks (naturality = equivariance, coherence, Frobenius) apply.
FrobFunctorData to_frob_functor(const BaseFunctor& f);

// A coequalizer quotient of the ambient space Q[G] (x) V_1 (x) ... (x) V_k,
// with a chosen section, the relation matrix that was quotiented by, and the
// induced G-action (hom-label translation) on the quotient.
struct CoendSpace {
    size_t ambient_dim = 0;
    RatMatrix projection;  // q x ambient, projection . relations = 0
    RatMatrix section;     // ambient x q, projection . section = 1
    RatMatrix relations;   // ambient x n_rel, identification differences as columns
    std::vector<std::string> basis_labels;     // one per ambient index
    std::vector<std::string> relation_labels;  // one per relation column
    std::vector<RatMatrix> action;             // one q x q matrix per group element

    size_t quotient_dim() const { return projection.rows(); }
};

// The coend over Sigma G with one tensor factor per entry of factors:
// ambient basis e_x (x) xi for x in G, identified along, for every tuple
// (p_1..p_k) in G^k, every label x and every basis vector xi,
//   e_{x p_1...p_k} (x) xi  ~  e_x (x) (rho_1(p_1) (x)...(x) rho_k(p_k)) xi.
// Enumeration order is fixed (tuples, then labels, then basis), so repeated
// builds are bit-identical. Bases of order > 6 are rejected.
CoendSpace build_coend(const FiniteBase& base, const std::vector<const BaseFunctor*>& factors);

// The two-factor coend Q[G] (x) V (x) W. Errors on a base mismatch.
CoendSpace convolution_product(const BaseFunctor& f, const BaseFunctor& g);

// Map between quotients induced by a map of ambient spaces. Well-defined iff
// the projected image of every source relation vanishes; the first offending
// relation column is recorded otherwise.
struct InducedMapResult {
    bool well_defined = true;
    RatMatrix map;  // q_dst x q_src, projection_dst . ambient . section_src
    size_t bad_relation = 0;
    std::string bad_detail;
};
InducedMapResult induced_map(const RatMatrix& ambient_map, const CoendSpace& src,
                             const CoendSpace& dst);

// The canonical evaluation on the one-factor coend: class of e_x (x) v goes
// to rho(x)v. Needs only rho.
struct Eval3Result {
    CoendSpace coend;
    RatMatrix eval_ambient;  // V x ambient
    RatMatrix induced;       // V x q
    bool iso = false;
};
Eval3Result canonical_eval3(const BaseFunctor& f);

// The retraction lemma: h (three-variable to two-variable, induced by the
// ambient identity), a chosen section k with hk = 1, and l built through the
// inverse evaluation; asserts lh = 1 and hl = 1 exactly, then that the
// two-variable evaluation is invertible.
Report canonical_eval2_retraction(const BaseFunctor& f);
// Same, with the three-variable result supplied by the caller; an e3 whose
// iso flag is down takes the diagnostic branch.
Report eval2_retraction_core(const BaseFunctor& f, const Eval3Result& e3);

// The four three-variable coends F(AB)(x)FC, FA(x)FB(x)FC, F(ABC), FA(x)F(BC),
// the induced maps between them, both commuting squares, and the exact
// isomorphism between the two-variable convolution F*F and the first coend.
Report induced_frobenius_check(const BaseFunctor& f);

// Full suite for one functor: representation gate, the Sigma G-level functor
// checks, the canonical evaluations, the retraction lemma, the induced
// structure, and the F*F quotient dimension.
Report check_convolution(const BaseFunctor& f);

}  // namespace frobcheck
