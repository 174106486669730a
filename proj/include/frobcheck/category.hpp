#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobcheck/group.hpp"
#include "frobcheck/matrix.hpp"

namespace frobcheck {

// An object of Mat(Q) (a dimension) or the unique object Star of a
// one-object base Sigma G.
struct MonObject {
    enum class Kind { Mat, Star };

    Kind kind = Kind::Mat;
    size_t dim = 1;

    static MonObject mat(size_t d) { return MonObject{Kind::Mat, d}; }
    static MonObject star() { return MonObject{Kind::Star, 0}; }

    bool operator==(const MonObject&) const = default;
    std::string to_string() const;
};

// A morphism of Sigma G: a group element, by index into the base.
struct GroupElt {
    int index = 0;
    bool operator==(const GroupElt&) const = default;
};

using Morphism = std::variant<RatMatrix, GroupElt>;

const RatMatrix& as_matrix(const Morphism& f);

// One member of a spanning family, carrying a printable label for reports.
struct SpanningMorphism {
    Morphism mor;
    std::string label;
};

// Dispatch between the two concrete monoidal category instances,
// Mat(Q) and Sigma G for a finite abelian G.
class CategoryInstance {
public:
    static CategoryInstance mat_q();
    static CategoryInstance sigma_g(FiniteBase base);

    bool is_mat_q() const { return !base_.has_value(); }
    const FiniteBase& base() const;

    MonObject unit_object() const;
    MonObject tensor_obj(const MonObject& x, const MonObject& y) const;
    Morphism identity(const MonObject& x) const;
    Morphism compose(const Morphism& g, const Morphism& f) const;
    Morphism tensor_mor(const Morphism& f, const Morphism& g) const;
    bool mor_equal(const Morphism& f, const Morphism& g) const;

    // Braiding x (x) y -> y (x) x and its inverse. Only Mat(Q) carries a
    // braiding here; Sigma G requests throw StructureError. The two are kept
    // as separate operations so nothing downstream assumes c = c^{-1}.
    Morphism braid(const MonObject& x, const MonObject& y) const;
    Morphism braid_inverse(const MonObject& x, const MonObject& y) const;

    // Complete spanning family of morphisms x -> y for naturality checks:
    // elementary matrices for Mat(Q) (both sides of a naturality square are
    // linear in the morphism), all group elements for Sigma G.
    std::vector<SpanningMorphism> spanning_morphisms(const MonObject& x, const MonObject& y) const;

    std::string mor_to_string(const Morphism& f) const;

    bool operator==(const CategoryInstance& other) const;
    bool operator!=(const CategoryInstance& other) const { return !(*this == other); }

private:
    void require_object(const MonObject& x) const;

    std::optional<FiniteBase> base_;  // empty: Mat(Q)
};

}  // namespace frobcheck
