#include "frobcheck/category.hpp"

#include <utility>

#include "frobcheck/error.hpp"

namespace frobcheck {

std::string MonObject::to_string() const {
    if (kind == Kind::Star) return "*";
    return "Mat(" + std::to_string(dim) + ")";
}

const RatMatrix& as_matrix(const Morphism& f) {
    if (const auto* m = std::get_if<RatMatrix>(&f)) return *m;
    throw ShapeError("expected a matrix morphism");
}

CategoryInstance CategoryInstance::mat_q() { return CategoryInstance{}; }

CategoryInstance CategoryInstance::sigma_g(FiniteBase base) {
    CategoryInstance cat;
    cat.base_ = std::move(base);
    return cat;
}

const FiniteBase& CategoryInstance::base() const {
    if (!base_) throw StructureError("Mat(Q) has no group base");
    return *base_;
}

void CategoryInstance::require_object(const MonObject& x) const {
    if (is_mat_q() && x.kind != MonObject::Kind::Mat)
        throw ShapeError("object does not belong to Mat(Q)");
    if (!is_mat_q() && x.kind != MonObject::Kind::Star)
        throw ShapeError("object does not belong to Sigma G");
}

MonObject CategoryInstance::unit_object() const {
    return is_mat_q() ? MonObject::mat(1) : MonObject::star();
}

MonObject CategoryInstance::tensor_obj(const MonObject& x, const MonObject& y) const {
    require_object(x);
    require_object(y);
    return is_mat_q() ? MonObject::mat(x.dim * y.dim) : MonObject::star();
}

Morphism CategoryInstance::identity(const MonObject& x) const {
    require_object(x);
    if (is_mat_q()) return RatMatrix::identity(x.dim);
    return GroupElt{base_->identity()};
}

Morphism CategoryInstance::compose(const Morphism& g, const Morphism& f) const {
    if (is_mat_q()) return mat_mul(as_matrix(g), as_matrix(f));
    return GroupElt{base_->mul(std::get<GroupElt>(g).index, std::get<GroupElt>(f).index)};
}

Morphism CategoryInstance::tensor_mor(const Morphism& f, const Morphism& g) const {
    if (is_mat_q()) return kron(as_matrix(f), as_matrix(g));
    // g (x) h = gh in Sigma G; functoriality of this tensor is exactly
    // commutativity of the base, validated at construction.
    return GroupElt{base_->mul(std::get<GroupElt>(f).index, std::get<GroupElt>(g).index)};
}

bool CategoryInstance::mor_equal(const Morphism& f, const Morphism& g) const {
    if (f.index() != g.index()) return false;
    if (std::holds_alternative<RatMatrix>(f))
        return std::get<RatMatrix>(f) == std::get<RatMatrix>(g);
    return std::get<GroupElt>(f) == std::get<GroupElt>(g);
}

Morphism CategoryInstance::braid(const MonObject& x, const MonObject& y) const {
    if (!is_mat_q()) throw StructureError("Sigma G carries no braiding");
    require_object(x);
    require_object(y);
    return commutation_matrix(x.dim, y.dim);
}

Morphism CategoryInstance::braid_inverse(const MonObject& x, const MonObject& y) const {
    if (!is_mat_q()) throw StructureError("Sigma G carries no braiding");
    require_object(x);
    require_object(y);
    // Exact inverse of braid(x, y); for the symmetric instance this is the
    // commutation matrix in the opposite order.
    return commutation_matrix(y.dim, x.dim);
}

std::vector<SpanningMorphism> CategoryInstance::spanning_morphisms(const MonObject& x,
                                                                   const MonObject& y) const {
    require_object(x);
    require_object(y);
    std::vector<SpanningMorphism> out;
    if (is_mat_q()) {
        for (size_t p = 0; p < y.dim; ++p)
            for (size_t q = 0; q < x.dim; ++q) {
                RatMatrix e(y.dim, x.dim);
                e.at(p, q) = Rational(1);
                out.push_back({Morphism{std::move(e)}, "E[" + std::to_string(p) + "," +
                                                           std::to_string(q) + "]:" +
                                                           std::to_string(x.dim) + "->" +
                                                           std::to_string(y.dim)});
            }
    } else {
        for (int g = 0; g < base_->order(); ++g)
            out.push_back({Morphism{GroupElt{g}}, "g=" + base_->label(g)});
    }
    return out;
}

std::string CategoryInstance::mor_to_string(const Morphism& f) const {
    if (const auto* m = std::get_if<RatMatrix>(&f)) return m->to_string();
    return "g=" + base().label(std::get<GroupElt>(f).index);
}

bool CategoryInstance::operator==(const CategoryInstance& other) const {
    if (base_.has_value() != other.base_.has_value()) return false;
    return !base_ || *base_ == *other.base_;
}

}  // namespace frobcheck
