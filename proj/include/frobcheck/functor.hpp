#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "frobcheck/algebra.hpp"
#include "frobcheck/category.hpp"
#include "frobcheck/report.hpp"

namespace frobcheck {

// Finite family of source objects over which checks run exhaustively. The
// reports claim nothing beyond the grid; dims {1,2,3} already exercise the
// unit, a line and a plane.
struct ObjectGrid {
    std::vector<MonObject> objects;

    static ObjectGrid mat_dims(size_t lo, size_t hi);
    static ObjectGrid star();
    std::string to_string() const;
};

// Monoidal (r, r0) + comonoidal (i, i0) functor data. Components come either
// from generator functions (the built-in kinds) or from explicit override
// tables, which are consulted first so corrupted components are representable
// for negative controls. Accessors throw CoverageError when neither covers a
// requested pair.
struct FrobFunctorData {
    enum class Kind { Identity, TensorLeft, Composite, PointwiseTensor, GroupRep, Unit, Custom };

    CategoryInstance source = CategoryInstance::mat_q();
    CategoryInstance target = CategoryInstance::mat_q();
    Kind kind = Kind::Custom;
    std::string name = "F";

    std::function<MonObject(const MonObject&)> object_map;
    std::function<Morphism(const Morphism&)> morphism_map;
    std::function<Morphism(const MonObject&, const MonObject&)> r_fn;
    std::function<Morphism(const MonObject&, const MonObject&)> i_fn;
    Morphism r0 = RatMatrix::identity(1);
    Morphism i0 = RatMatrix::identity(1);

    struct ComponentOverride {
        MonObject a, b;
        Morphism value;
    };
    std::vector<ComponentOverride> r_overrides;
    std::vector<ComponentOverride> i_overrides;

    // Generating algebra for tensor_left functors; used to derive the sampled
    // transformation family. Empty for other kinds.
    std::shared_ptr<const FrobeniusAlgebra> algebra;

    MonObject obj(const MonObject& a) const;
    Morphism mor(const Morphism& m) const;
    Morphism r(const MonObject& a, const MonObject& b) const;
    Morphism i(const MonObject& a, const MonObject& b) const;
};

FrobFunctorData identity_functor(const CategoryInstance& cat = CategoryInstance::mat_q());

// Replaces the r0/i0 morphism (slot "r0" or "i0").
FrobFunctorData with_override(FrobFunctorData f, const std::string& slot, const Morphism& value);
// Installs an r/i component override at the pair (a, b) (slot "r" or "i").
FrobFunctorData with_override(FrobFunctorData f, const std::string& slot, const MonObject& a,
                              const MonObject& b, const Morphism& value);

// Shapes of every component against the object map, functoriality on
// identities, and coverage over the grid.
Report structural_validate(const FrobFunctorData& f, const ObjectGrid& grid);

// Naturality of r and i over the complete spanning family for every object
// quadruple of the grid: for the matrix source this checks all elementary
// matrices, which spans all morphisms by bilinearity of both sides.
Report check_naturality(const FrobFunctorData& f, const ObjectGrid& grid);

// r-associativity on all grid triples and both unit laws.
Report check_monoidal_coherence(const FrobFunctorData& f, const ObjectGrid& grid);

// i-coassociativity on all grid triples and both counit laws.
Report check_comonoidal_coherence(const FrobFunctorData& f, const ObjectGrid& grid);

// The two compatibility conditions, entrywise on every grid triple:
//   i(A,BC) r(AB,C) = (1 (x) r(B,C))(i(A,B) (x) 1)
//   i(AB,C) r(A,BC) = (r(A,B) (x) 1)(1 (x) i(B,C))
Report check_frobenius(const FrobFunctorData& f, const ObjectGrid& grid);

struct SplitResult {
    bool split = false;
    std::string counterexample;  // empty when split
};

// True iff r(A,B) i(A,B) = 1 on every grid pair.
SplitResult is_split(const FrobFunctorData& f, const ObjectGrid& grid);

// Derives the comonoidal half of a strong monoidal functor: i := r^{-1}
// component by component (exact elimination) and i0 := r0^{-1}. A
// non-invertible component throws StructureError naming the object pair;
// passing a grid forces eager inversion over all its pairs.
FrobFunctorData from_strong(const FrobFunctorData& strong,
                            const ObjectGrid* validate_grid = nullptr);

// G after F: r = G(r_F) r_G, i = i_G G(i_F), and likewise for the units.
FrobFunctorData compose_frobenius(const FrobFunctorData& g, const FrobFunctorData& f);

}  // namespace frobcheck
