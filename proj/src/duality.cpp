#include "frobcheck/duality.hpp"

#include <utility>

#include "frobcheck/error.hpp"

namespace frobcheck {

Report check_triangles(const DualSituation& d) {
    Report rep;
    const std::string suite = "triangles";
    const size_t da = d.a.dim, db = d.b.dim;
    const std::string loc = d.name + ": (" + d.a.to_string() + ", " + d.b.to_string() + ")";

    if (d.e.rows() != 1 || d.e.cols() != da * db || d.n.rows() != db * da || d.n.cols() != 1) {
        rep.add(error_entry(suite, "shapes", loc,
                            "e must be 1 x dim(A)dim(B) and n must be dim(B)dim(A) x 1"));
        return rep;
    }

    const RatMatrix id_a = RatMatrix::identity(da);
    const RatMatrix id_b = RatMatrix::identity(db);
    report_equation(rep, suite, "triangle_a", loc,
                    mat_mul(kron(d.e, id_a), kron(id_a, d.n)), id_a);
    report_equation(rep, suite, "triangle_b", loc,
                    mat_mul(kron(id_b, d.e), kron(d.n, id_b)), id_b);
    return rep;
}

DualSituation transport_dual(const FrobFunctorData& f, const DualSituation& d) {
    DualSituation out;
    out.a = f.obj(d.a);
    out.b = f.obj(d.b);
    out.name = f.name + "(" + d.name + ")";
    out.e = mat_mul(mat_mul(as_matrix(f.i0), as_matrix(f.mor(d.e))),
                    as_matrix(f.r(d.a, d.b)));
    out.n = mat_mul(mat_mul(as_matrix(f.i(d.b, d.a)), as_matrix(f.mor(d.n))),
                    as_matrix(f.r0));
    return out;
}

DualSituation cupcap(size_t n) {
    DualSituation d;
    d.a = MonObject::mat(n);
    d.b = MonObject::mat(n);
    d.name = "cupcap(" + std::to_string(n) + ")";
    d.e = RatMatrix(1, n * n);
    d.n = RatMatrix(n * n, 1);
    for (size_t ii = 0; ii < n; ++ii) {
        d.e.at(0, ii * n + ii) = Rational(1);
        d.n.at(ii * n + ii, 0) = Rational(1);
    }
    if (!check_triangles(d).all_pass())
        throw StructureError("generated cup/cap pair failed its own triangle check");
    return d;
}

FrobeniusAlgebra apply_functor_to_algebra(const FrobFunctorData& f, const FrobeniusAlgebra& alg) {
    FrobeniusAlgebra out;
    out.r = f.obj(alg.r);
    out.name = f.name + "(" + alg.name + ")";
    out.mu = mat_mul(as_matrix(f.mor(alg.mu)), as_matrix(f.r(alg.r, alg.r)));
    out.eta = mat_mul(as_matrix(f.mor(alg.eta)), as_matrix(f.r0));
    out.delta = mat_mul(as_matrix(f.i(alg.r, alg.r)), as_matrix(f.mor(alg.delta)));
    out.eps = mat_mul(as_matrix(f.i0), as_matrix(f.mor(alg.eps)));
    return out;
}

FrobFunctorData tensor_left_functor(const FrobeniusAlgebra& alg, const CategoryInstance& cat) {
    if (!cat.is_mat_q()) throw StructureError("tensor_left requires a braided instance");
    auto ra = std::make_shared<const FrobeniusAlgebra>(alg);
    const size_t d = alg.dim();

    FrobFunctorData f;
    f.source = cat;
    f.target = cat;
    f.kind = FrobFunctorData::Kind::TensorLeft;
    f.name = "tensor_left(" + alg.name + ")";
    f.algebra = ra;
    f.object_map = [d](const MonObject& a) { return MonObject::mat(d * a.dim); };
    f.morphism_map = [d](const Morphism& m) -> Morphism {
        return kron(RatMatrix::identity(d), as_matrix(m));
    };
    f.r_fn = [ra, cat, d](const MonObject& a, const MonObject& b) -> Morphism {
        const Morphism cm = cat.braid(a, MonObject::mat(d));
        return mat_mul(
            kron(ra->mu, RatMatrix::identity(a.dim * b.dim)),
            kron(RatMatrix::identity(d), kron(as_matrix(cm), RatMatrix::identity(b.dim))));
    };
    f.i_fn = [ra, cat, d](const MonObject& a, const MonObject& b) -> Morphism {
        const Morphism cm = cat.braid(MonObject::mat(d), a);
        return mat_mul(
            kron(RatMatrix::identity(d), kron(as_matrix(cm), RatMatrix::identity(b.dim))),
            kron(ra->delta, RatMatrix::identity(a.dim * b.dim)));
    };
    f.r0 = alg.eta;
    f.i0 = alg.eps;
    return f;
}

MonComonNatTransf identity_transf(const FrobFunctorData& f) {
    MonComonNatTransf t;
    t.f = f;
    t.g = f;
    auto fc = std::make_shared<const FrobFunctorData>(f);
    t.component = [fc](const MonObject& a) { return RatMatrix::identity(fc->obj(a).dim); };
    t.name = "id(" + f.name + ")";
    return t;
}

MonComonNatTransf scale_transf(const FrobFunctorData& f, const Rational& c) {
    MonComonNatTransf t;
    t.f = f;
    t.g = f;
    auto fc = std::make_shared<const FrobFunctorData>(f);
    t.component = [fc, c](const MonObject& a) {
        return RatMatrix::identity(fc->obj(a).dim).scaled(c);
    };
    t.name = "scale(" + f.name + ", " + c.to_string() + ")";
    return t;
}

MonComonNatTransf invaut_transf(const FrobFunctorData& f) {
    if (!f.algebra)
        throw StructureError("invaut requires a tensor_left functor with a generating algebra");
    const FrobeniusAlgebra& alg = *f.algebra;
    const size_t d = alg.dim();

    // e_g -> e_{g^{-1}}, reading inverses off mu against eta: h is the inverse
    // of g exactly when mu(e_g (x) e_h) equals the unit basis vector.
    RatMatrix p(d, d);
    for (size_t g = 0; g < d; ++g) {
        size_t found = d;
        for (size_t h = 0; h < d; ++h) {
            bool match = true;
            for (size_t row = 0; row < d && match; ++row)
                if (alg.mu.at(row, g * d + h) != alg.eta.at(row, 0)) match = false;
            if (match) {
                if (found != d)
                    throw StructureError("inversion automorphism unavailable: non-unique inverse");
                found = h;
            }
        }
        if (found == d)
            throw StructureError("inversion automorphism unavailable: missing inverse");
        p.at(found, g) = Rational(1);
    }

    MonComonNatTransf t;
    t.f = f;
    t.g = f;
    t.component = [p](const MonObject& a) { return kron(p, RatMatrix::identity(a.dim)); };
    t.name = "invaut(" + f.name + ")";
    return t;
}

Report check_nat_transf(const MonComonNatTransf& t, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "nat_transf";
    if (t.f.source != t.g.source || t.f.target != t.g.target) {
        rep.add(error_entry(suite, "parallel", t.name,
                            "transformation requires functors with equal source and target"));
        return rep;
    }
    const CategoryInstance& src = t.f.source;

    for (const auto& a : grid.objects)
        for (const auto& a2 : grid.objects) {
            const std::string loc = t.name + " at A=" + a.to_string() + ",A'=" + a2.to_string();
            try {
                const RatMatrix alpha_a = t.component(a);
                const RatMatrix alpha_a2 = t.component(a2);
                bool all_ok = true;
                for (const auto& s : src.spanning_morphisms(a, a2)) {
                    RatMatrix lhs = mat_mul(alpha_a2, as_matrix(t.f.mor(s.mor)));
                    RatMatrix rhs = mat_mul(as_matrix(t.g.mor(s.mor)), alpha_a);
                    if (lhs != rhs) {
                        rep.add(fail_entry(suite, "naturality", loc + "; f=" + s.label, lhs, rhs));
                        all_ok = false;
                    }
                }
                if (all_ok) rep.add(pass_entry(suite, "naturality", loc));
            } catch (const std::exception& ex) {
                rep.add(error_entry(suite, "naturality", loc, ex.what()));
            }
        }

    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects) {
            const std::string loc =
                t.name + " at (" + a.to_string() + ", " + b.to_string() + ")";
            try {
                const MonObject ab = src.tensor_obj(a, b);
                const RatMatrix alpha_ab = t.component(ab);
                const RatMatrix aa = kron(t.component(a), t.component(b));
                report_equation(rep, suite, "monoidal_square", loc,
                                mat_mul(alpha_ab, as_matrix(t.f.r(a, b))),
                                mat_mul(as_matrix(t.g.r(a, b)), aa));
                report_equation(rep, suite, "comonoidal_square", loc,
                                mat_mul(aa, as_matrix(t.f.i(a, b))),
                                mat_mul(as_matrix(t.g.i(a, b)), alpha_ab));
            } catch (const std::exception& ex) {
                rep.add(error_entry(suite, "compatibility", loc, ex.what()));
            }
        }

    try {
        const RatMatrix alpha_i = t.component(src.unit_object());
        report_equation(rep, suite, "monoidal_unit", t.name,
                        mat_mul(alpha_i, as_matrix(t.f.r0)), as_matrix(t.g.r0));
        report_equation(rep, suite, "comonoidal_unit", t.name,
                        mat_mul(as_matrix(t.g.i0), alpha_i), as_matrix(t.f.i0));
    } catch (const std::exception& ex) {
        rep.add(error_entry(suite, "units", t.name, ex.what()));
    }
    return rep;
}

RatMatrix mate_inverse(const MonComonNatTransf& t, const DualSituation& d, bool mirrored) {
    // The distinguished object whose component gets inverted; its dual partner
    // carries the alpha in the middle of the composite.
    const MonObject& a_obj = mirrored ? d.b : d.a;
    const MonObject& b_obj = mirrored ? d.a : d.b;

    const DualSituation df = transport_dual(t.f, d);
    const DualSituation dg = transport_dual(t.g, d);
    const RatMatrix alpha_b = t.component(b_obj);
    const RatMatrix id_fa = RatMatrix::identity(t.f.obj(a_obj).dim);
    const RatMatrix id_ga = RatMatrix::identity(t.g.obj(a_obj).dim);

    if (!mirrored) {
        // GA -> GA (x) FB (x) FA -> GA (x) GB (x) FA -> FA
        RatMatrix m = kron(id_ga, df.n);
        m = mat_mul(kron(id_ga, kron(alpha_b, id_fa)), m);
        return mat_mul(kron(dg.e, id_fa), m);
    }
    // GA -> FA (x) FB (x) GA -> FA (x) GB (x) GA -> FA
    RatMatrix m = kron(df.n, id_ga);
    m = mat_mul(kron(id_fa, kron(alpha_b, id_ga)), m);
    return mat_mul(kron(id_fa, dg.e), m);
}

Report check_mate_invertibility(const MonComonNatTransf& t, const DualSituation& d,
                                bool mirrored) {
    Report rep;
    const std::string suite = "mate";
    const MonObject& a_obj = mirrored ? d.b : d.a;
    const std::string loc = t.name + " at A=" + a_obj.to_string() + ", " + d.name +
                            (mirrored ? " (mirrored)" : "");
    try {
        const RatMatrix beta = mate_inverse(t, d, mirrored);
        const RatMatrix alpha_a = t.component(a_obj);
        report_equation(rep, suite, "left_inverse", loc, mat_mul(beta, alpha_a),
                        RatMatrix::identity(t.f.obj(a_obj).dim));
        report_equation(rep, suite, "right_inverse", loc, mat_mul(alpha_a, beta),
                        RatMatrix::identity(t.g.obj(a_obj).dim));
    } catch (const std::exception& ex) {
        rep.add(error_entry(suite, "mate", loc, ex.what()));
    }
    return rep;
}

}  // namespace frobcheck
