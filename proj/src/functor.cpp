#include "frobcheck/functor.hpp"

#include <optional>
#include <utility>

#include "frobcheck/error.hpp"
#include "frobcheck/linalg.hpp"

namespace frobcheck {

namespace {

std::string pair_str(const MonObject& a, const MonObject& b) {
    return "(" + a.to_string() + ", " + b.to_string() + ")";
}

std::string triple_str(const MonObject& a, const MonObject& b, const MonObject& c) {
    return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

size_t target_dim(const FrobFunctorData& f, const MonObject& a) {
    MonObject fa = f.obj(a);
    if (fa.kind != MonObject::Kind::Mat)
        throw StructureError("checks require a matrix-valued functor");
    return fa.dim;
}

// Runs body per entry and converts any exception into an error entry, so one
// broken component cannot abort a whole suite.
template <typename Fn>
void guarded(Report& rep, const std::string& suite, const std::string& check,
             const std::string& location, Fn&& body) {
    try {
        body();
    } catch (const std::exception& ex) {
        rep.add(error_entry(suite, check, location, ex.what()));
    }
}

}  // namespace

ObjectGrid ObjectGrid::mat_dims(size_t lo, size_t hi) {
    if (lo < 1 || hi < lo) throw StructureError("grid bounds must satisfy 1 <= lo <= hi");
    ObjectGrid grid;
    for (size_t d = lo; d <= hi; ++d) grid.objects.push_back(MonObject::mat(d));
    return grid;
}

ObjectGrid ObjectGrid::star() { return ObjectGrid{{MonObject::star()}}; }

std::string ObjectGrid::to_string() const {
    std::string out = "{";
    for (size_t k = 0; k < objects.size(); ++k) {
        if (k) out += ", ";
        out += objects[k].to_string();
    }
    return out + "}";
}

MonObject FrobFunctorData::obj(const MonObject& a) const {
    if (!object_map) throw StructureError("functor " + name + " has no object map");
    return object_map(a);
}

Morphism FrobFunctorData::mor(const Morphism& m) const {
    if (!morphism_map) throw StructureError("functor " + name + " has no morphism map");
    return morphism_map(m);
}

Morphism FrobFunctorData::r(const MonObject& a, const MonObject& b) const {
    for (const auto& ov : r_overrides)
        if (ov.a == a && ov.b == b) return ov.value;
    if (r_fn) return r_fn(a, b);
    throw CoverageError("functor " + name + " has no r component at " + pair_str(a, b));
}

Morphism FrobFunctorData::i(const MonObject& a, const MonObject& b) const {
    for (const auto& ov : i_overrides)
        if (ov.a == a && ov.b == b) return ov.value;
    if (i_fn) return i_fn(a, b);
    throw CoverageError("functor " + name + " has no i component at " + pair_str(a, b));
}

FrobFunctorData identity_functor(const CategoryInstance& cat) {
    FrobFunctorData f;
    f.source = cat;
    f.target = cat;
    f.kind = FrobFunctorData::Kind::Identity;
    f.name = "Id";
    f.object_map = [](const MonObject& a) { return a; };
    f.morphism_map = [](const Morphism& m) { return m; };
    f.r_fn = [cat](const MonObject& a, const MonObject& b) {
        return cat.identity(cat.tensor_obj(a, b));
    };
    f.i_fn = f.r_fn;
    f.r0 = cat.identity(cat.unit_object());
    f.i0 = f.r0;
    return f;
}

FrobFunctorData with_override(FrobFunctorData f, const std::string& slot, const Morphism& value) {
    if (slot == "r0")
        f.r0 = value;
    else if (slot == "i0")
        f.i0 = value;
    else
        throw StructureError("unknown unit override slot '" + slot + "'");
    f.name = "override(" + f.name + ", " + slot + ")";
    return f;
}

FrobFunctorData with_override(FrobFunctorData f, const std::string& slot, const MonObject& a,
                              const MonObject& b, const Morphism& value) {
    if (slot == "r")
        f.r_overrides.push_back({a, b, value});
    else if (slot == "i")
        f.i_overrides.push_back({a, b, value});
    else
        throw StructureError("unknown component override slot '" + slot + "'");
    f.name = "override(" + f.name + ", " + slot + " at " + pair_str(a, b) + ")";
    return f;
}

Report structural_validate(const FrobFunctorData& f, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "structural";
    if (grid.objects.empty()) {
        rep.add(error_entry(suite, "grid", "-", "object grid is empty"));
        return rep;
    }

    guarded(rep, suite, "unit_components", "I", [&] {
        size_t fi = target_dim(f, f.source.unit_object());
        const RatMatrix& r0 = as_matrix(f.r0);
        const RatMatrix& i0 = as_matrix(f.i0);
        bool ok = true;
        if (r0.rows() != fi || r0.cols() != 1) {
            rep.add(fail_entry(suite, "r0_shape", "I", r0, RatMatrix(fi, 1),
                               "r0 must have shape dim(FI) x 1"));
            ok = false;
        }
        if (i0.rows() != 1 || i0.cols() != fi) {
            rep.add(fail_entry(suite, "i0_shape", "I", i0, RatMatrix(1, fi),
                               "i0 must have shape 1 x dim(FI)"));
            ok = false;
        }
        if (ok) rep.add(pass_entry(suite, "unit_components", "I"));
    });

    for (const auto& a : grid.objects) {
        guarded(rep, suite, "functoriality_id", a.to_string(), [&] {
            Morphism lhs = f.mor(f.source.identity(a));
            Morphism rhs = f.target.identity(f.obj(a));
            if (f.target.mor_equal(lhs, rhs))
                rep.add(pass_entry(suite, "functoriality_id", a.to_string()));
            else
                rep.add(fail_entry(suite, "functoriality_id", a.to_string(), as_matrix(lhs),
                                   as_matrix(rhs), "F(1) differs from 1"));
        });
    }

    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects) {
            const std::string loc = pair_str(a, b);
            guarded(rep, suite, "component_shapes", loc, [&] {
                size_t fa = target_dim(f, a);
                size_t fb = target_dim(f, b);
                size_t fab = target_dim(f, f.source.tensor_obj(a, b));
                std::optional<Morphism> rmor, imor;
                try {
                    rmor = f.r(a, b);
                } catch (const CoverageError& ex) {
                    rep.add(fail_entry(suite, "r_coverage", loc, RatMatrix(0, 0),
                                       RatMatrix(fab, fa * fb), ex.what()));
                }
                try {
                    imor = f.i(a, b);
                } catch (const CoverageError& ex) {
                    rep.add(fail_entry(suite, "i_coverage", loc, RatMatrix(0, 0),
                                       RatMatrix(fa * fb, fab), ex.what()));
                }
                bool ok = rmor.has_value() && imor.has_value();
                if (rmor) {
                    const RatMatrix& rm = as_matrix(*rmor);
                    if (rm.rows() != fab || rm.cols() != fa * fb) {
                        rep.add(fail_entry(suite, "r_shape", loc, rm, RatMatrix(fab, fa * fb),
                                           "r must map FA (x) FB -> F(A (x) B)"));
                        ok = false;
                    }
                }
                if (imor) {
                    const RatMatrix& im = as_matrix(*imor);
                    if (im.rows() != fa * fb || im.cols() != fab) {
                        rep.add(fail_entry(suite, "i_shape", loc, im, RatMatrix(fa * fb, fab),
                                           "i must map F(A (x) B) -> FA (x) FB"));
                        ok = false;
                    }
                }
                if (ok) rep.add(pass_entry(suite, "component_shapes", loc));
            });
        }
    return rep;
}

Report check_naturality(const FrobFunctorData& f, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "naturality";
    for (const auto& a : grid.objects)
        for (const auto& a2 : grid.objects) {
            const auto fam_f = f.source.spanning_morphisms(a, a2);
            for (const auto& b : grid.objects)
                for (const auto& b2 : grid.objects) {
                    const auto fam_g = f.source.spanning_morphisms(b, b2);
                    const std::string loc = "A=" + a.to_string() + ",A'=" + a2.to_string() +
                                            ",B=" + b.to_string() + ",B'=" + b2.to_string();
                    guarded(rep, suite, "squares", loc, [&] {
                        const Morphism r_ab_m = f.r(a, b), r_a2b2_m = f.r(a2, b2);
                        const Morphism i_ab_m = f.i(a, b), i_a2b2_m = f.i(a2, b2);
                        const RatMatrix& r_ab = as_matrix(r_ab_m);
                        const RatMatrix& r_a2b2 = as_matrix(r_a2b2_m);
                        const RatMatrix& i_ab = as_matrix(i_ab_m);
                        const RatMatrix& i_a2b2 = as_matrix(i_a2b2_m);
                        bool all_ok = true;
                        for (const auto& sf : fam_f)
                            for (const auto& sg : fam_g) {
                                const RatMatrix ff = as_matrix(f.mor(sf.mor));
                                const RatMatrix fg = as_matrix(f.mor(sg.mor));
                                const RatMatrix ff_fg = kron(ff, fg);
                                const RatMatrix f_fg = as_matrix(
                                    f.mor(f.source.tensor_mor(sf.mor, sg.mor)));
                                const std::string mloc =
                                    loc + "; f=" + sf.label + ", g=" + sg.label;
                                RatMatrix lhs = mat_mul(r_a2b2, ff_fg);
                                RatMatrix rhs = mat_mul(f_fg, r_ab);
                                if (lhs != rhs) {
                                    rep.add(fail_entry(suite, "r_square", mloc, lhs, rhs));
                                    all_ok = false;
                                }
                                lhs = mat_mul(i_a2b2, f_fg);
                                rhs = mat_mul(ff_fg, i_ab);
                                if (lhs != rhs) {
                                    rep.add(fail_entry(suite, "i_square", mloc, lhs, rhs));
                                    all_ok = false;
                                }
                            }
                        if (all_ok)
                            rep.add(pass_entry(suite, "squares", loc,
                                               std::to_string(fam_f.size() * fam_g.size()) +
                                                   " spanning pairs"));
                    });
                }
        }
    return rep;
}

Report check_monoidal_coherence(const FrobFunctorData& f, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "monoidal";
    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects)
            for (const auto& c : grid.objects) {
                const std::string loc = triple_str(a, b, c);
                guarded(rep, suite, "associativity", loc, [&] {
                    MonObject ab = f.source.tensor_obj(a, b);
                    MonObject bc = f.source.tensor_obj(b, c);
                    RatMatrix lhs = mat_mul(as_matrix(f.r(ab, c)),
                                            kron(as_matrix(f.r(a, b)),
                                                 RatMatrix::identity(target_dim(f, c))));
                    RatMatrix rhs = mat_mul(as_matrix(f.r(a, bc)),
                                            kron(RatMatrix::identity(target_dim(f, a)),
                                                 as_matrix(f.r(b, c))));
                    report_equation(rep, suite, "associativity", loc, lhs, rhs);
                });
            }
    const MonObject unit = f.source.unit_object();
    for (const auto& a : grid.objects) {
        const std::string loc = a.to_string();
        guarded(rep, suite, "unit_laws", loc, [&] {
            const RatMatrix id_fa = RatMatrix::identity(target_dim(f, a));
            RatMatrix right = mat_mul(as_matrix(f.r(a, unit)), kron(id_fa, as_matrix(f.r0)));
            report_equation(rep, suite, "unit_right", loc, right, id_fa);
            RatMatrix left = mat_mul(as_matrix(f.r(unit, a)), kron(as_matrix(f.r0), id_fa));
            report_equation(rep, suite, "unit_left", loc, left, id_fa);
        });
    }
    return rep;
}

Report check_comonoidal_coherence(const FrobFunctorData& f, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "comonoidal";
    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects)
            for (const auto& c : grid.objects) {
                const std::string loc = triple_str(a, b, c);
                guarded(rep, suite, "coassociativity", loc, [&] {
                    MonObject ab = f.source.tensor_obj(a, b);
                    MonObject bc = f.source.tensor_obj(b, c);
                    RatMatrix lhs = mat_mul(kron(as_matrix(f.i(a, b)),
                                                 RatMatrix::identity(target_dim(f, c))),
                                            as_matrix(f.i(ab, c)));
                    RatMatrix rhs = mat_mul(kron(RatMatrix::identity(target_dim(f, a)),
                                                 as_matrix(f.i(b, c))),
                                            as_matrix(f.i(a, bc)));
                    report_equation(rep, suite, "coassociativity", loc, lhs, rhs);
                });
            }
    const MonObject unit = f.source.unit_object();
    for (const auto& a : grid.objects) {
        const std::string loc = a.to_string();
        guarded(rep, suite, "counit_laws", loc, [&] {
            const RatMatrix id_fa = RatMatrix::identity(target_dim(f, a));
            RatMatrix right = mat_mul(kron(id_fa, as_matrix(f.i0)), as_matrix(f.i(a, unit)));
            report_equation(rep, suite, "counit_right", loc, right, id_fa);
            RatMatrix left = mat_mul(kron(as_matrix(f.i0), id_fa), as_matrix(f.i(unit, a)));
            report_equation(rep, suite, "counit_left", loc, left, id_fa);
        });
    }
    return rep;
}

Report check_frobenius(const FrobFunctorData& f, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "frobenius";
    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects)
            for (const auto& c : grid.objects) {
                const std::string loc = triple_str(a, b, c);
                guarded(rep, suite, "conditions", loc, [&] {
                    MonObject ab = f.source.tensor_obj(a, b);
                    MonObject bc = f.source.tensor_obj(b, c);
                    const RatMatrix id_fa = RatMatrix::identity(target_dim(f, a));
                    const RatMatrix id_fc = RatMatrix::identity(target_dim(f, c));

                    RatMatrix lhs = mat_mul(as_matrix(f.i(a, bc)), as_matrix(f.r(ab, c)));
                    RatMatrix rhs = mat_mul(kron(id_fa, as_matrix(f.r(b, c))),
                                            kron(as_matrix(f.i(a, b)), id_fc));
                    report_equation(rep, suite, "condition_1", loc, lhs, rhs);

                    lhs = mat_mul(as_matrix(f.i(ab, c)), as_matrix(f.r(a, bc)));
                    rhs = mat_mul(kron(as_matrix(f.r(a, b)), id_fc),
                                  kron(id_fa, as_matrix(f.i(b, c))));
                    report_equation(rep, suite, "condition_2", loc, lhs, rhs);
                });
            }
    return rep;
}

SplitResult is_split(const FrobFunctorData& f, const ObjectGrid& grid) {
    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects) {
            RatMatrix ri = mat_mul(as_matrix(f.r(a, b)), as_matrix(f.i(a, b)));
            if (!ri.is_identity())
                return {false, "r i differs from the identity at " + pair_str(a, b)};
        }
    return {true, ""};
}

FrobFunctorData from_strong(const FrobFunctorData& strong, const ObjectGrid* validate_grid) {
    FrobFunctorData out = strong;
    out.name = "from_strong(" + strong.name + ")";

    const RatMatrix& r0m = as_matrix(strong.r0);
    auto inv0 = inverse(r0m);
    if (!inv0)
        throw StructureError("from_strong: r0 is not invertible (dim FI must equal 1)");
    out.i0 = *inv0;

    auto base = std::make_shared<const FrobFunctorData>(strong);
    out.i_overrides.clear();
    out.i_fn = [base](const MonObject& a, const MonObject& b) -> Morphism {
        const Morphism rm = base->r(a, b);
        auto inv = inverse(as_matrix(rm));
        if (!inv)
            throw StructureError("from_strong: r component not invertible at " + pair_str(a, b));
        return *inv;
    };

    if (validate_grid)
        for (const auto& a : validate_grid->objects)
            for (const auto& b : validate_grid->objects) out.i(a, b);
    return out;
}

FrobFunctorData compose_frobenius(const FrobFunctorData& g, const FrobFunctorData& f) {
    if (f.target != g.source)
        throw StructureError("compose: target of " + f.name + " differs from source of " +
                             g.name);
    auto fc = std::make_shared<const FrobFunctorData>(f);
    auto gc = std::make_shared<const FrobFunctorData>(g);

    FrobFunctorData out;
    out.source = f.source;
    out.target = g.target;
    out.kind = FrobFunctorData::Kind::Composite;
    out.name = "(" + g.name + " . " + f.name + ")";
    out.object_map = [fc, gc](const MonObject& a) { return gc->obj(fc->obj(a)); };
    out.morphism_map = [fc, gc](const Morphism& m) { return gc->mor(fc->mor(m)); };
    out.r_fn = [fc, gc](const MonObject& a, const MonObject& b) {
        return gc->target.compose(gc->mor(fc->r(a, b)), gc->r(fc->obj(a), fc->obj(b)));
    };
    out.i_fn = [fc, gc](const MonObject& a, const MonObject& b) {
        return gc->target.compose(gc->i(fc->obj(a), fc->obj(b)), gc->mor(fc->i(a, b)));
    };
    out.r0 = gc->target.compose(gc->mor(fc->r0), gc->r0);
    out.i0 = gc->target.compose(gc->i0, gc->mor(fc->i0));
    return out;
}

}  // namespace frobcheck
