#include "frobcheck/frob_tensor.hpp"

#include <memory>
#include <string>
#include <vector>

#include "frobcheck/error.hpp"

namespace frobcheck {

FrobFunctorData pointwise_tensor(const FrobFunctorData& f, const FrobFunctorData& g) {
    if (f.source != g.source || f.target != g.target)
        throw StructureError("pointwise tensor requires parallel functors");
    if (!f.target.is_mat_q())
        throw StructureError("pointwise tensor requires a braided target");

    auto fc = std::make_shared<const FrobFunctorData>(f);
    auto gc = std::make_shared<const FrobFunctorData>(g);
    const CategoryInstance tgt = f.target;

    FrobFunctorData out;
    out.source = f.source;
    out.target = f.target;
    out.kind = FrobFunctorData::Kind::PointwiseTensor;
    out.name = "tensor(" + f.name + ", " + g.name + ")";
    out.object_map = [fc, gc, tgt](const MonObject& a) {
        return tgt.tensor_obj(fc->obj(a), gc->obj(a));
    };
    out.morphism_map = [fc, gc](const Morphism& m) -> Morphism {
        const Morphism mf = fc->mor(m);
        const Morphism mg = gc->mor(m);
        return kron(as_matrix(mf), as_matrix(mg));
    };
    out.r_fn = [fc, gc, tgt](const MonObject& a, const MonObject& b) -> Morphism {
        const Morphism rf = fc->r(a, b);
        const Morphism rg = gc->r(a, b);
        // c^{-1}: GA (x) FB -> FB (x) GA, undoing braid(FB, GA).
        const Morphism cinv = tgt.braid_inverse(fc->obj(b), gc->obj(a));
        const RatMatrix id_fa = RatMatrix::identity(fc->obj(a).dim);
        const RatMatrix id_gb = RatMatrix::identity(gc->obj(b).dim);
        return mat_mul(kron(as_matrix(rf), as_matrix(rg)),
                       kron(id_fa, kron(as_matrix(cinv), id_gb)));
    };
    out.i_fn = [fc, gc, tgt](const MonObject& a, const MonObject& b) -> Morphism {
        const Morphism fi = fc->i(a, b);
        const Morphism gi = gc->i(a, b);
        const Morphism c = tgt.braid(fc->obj(b), gc->obj(a));
        const RatMatrix id_fa = RatMatrix::identity(fc->obj(a).dim);
        const RatMatrix id_gb = RatMatrix::identity(gc->obj(b).dim);
        return mat_mul(kron(id_fa, kron(as_matrix(c), id_gb)),
                       kron(as_matrix(fi), as_matrix(gi)));
    };
    out.r0 = kron(as_matrix(f.r0), as_matrix(g.r0));
    out.i0 = kron(as_matrix(f.i0), as_matrix(g.i0));
    return out;
}

FrobFunctorData unit_functor(const CategoryInstance& source, const CategoryInstance& target) {
    if (!target.is_mat_q())
        throw StructureError("unit functor requires a matrix-valued target");
    FrobFunctorData out;
    out.source = source;
    out.target = target;
    out.kind = FrobFunctorData::Kind::Unit;
    out.name = "unit";
    out.object_map = [](const MonObject&) { return MonObject::mat(1); };
    out.morphism_map = [](const Morphism&) -> Morphism { return RatMatrix::identity(1); };
    out.r_fn = [](const MonObject&, const MonObject&) -> Morphism {
        return RatMatrix::identity(1);
    };
    out.i_fn = [](const MonObject&, const MonObject&) -> Morphism {
        return RatMatrix::identity(1);
    };
    return out;
}

RatMatrix frob_braiding(const FrobFunctorData& f, const FrobFunctorData& g, const MonObject& a) {
    const Morphism c = f.target.braid(f.obj(a), g.obj(a));
    return as_matrix(c);
}

namespace {

std::string obj_loc(const std::string& prefix, const MonObject& a) {
    return prefix + " at " + a.to_string();
}

// Endo-transformation samples for the functor-variable naturality checks:
// always the identity, plus the inversion automorphism when the functor
// carries a generating algebra. Scalings and translations are deliberately
// absent -- they are not monoidal, so they would be false negatives.
std::vector<MonComonNatTransf> sampled_transfs(const FrobFunctorData& f) {
    std::vector<MonComonNatTransf> out;
    out.push_back(identity_transf(f));
    if (f.algebra) {
        try {
            out.push_back(invaut_transf(f));
        } catch (const StructureError&) {
            // algebra without readable inverses: identity sample only
        }
    }
    return out;
}

void check_assoc_components(Report& rep, const FrobFunctorData& lhs, const FrobFunctorData& rhs,
                            const ObjectGrid& grid) {
    const std::string suite = "frobcat";
    for (const auto& a : grid.objects) {
        const std::string loc = obj_loc("assoc", a);
        try {
            if (lhs.obj(a) == rhs.obj(a)) {
                rep.add(pass_entry(suite, "assoc_objects", loc));
            } else {
                rep.add(fail_entry(suite, "assoc_objects", loc,
                                   RatMatrix::identity(lhs.obj(a).dim),
                                   RatMatrix::identity(rhs.obj(a).dim),
                                   "object images differ"));
            }
        } catch (const std::exception& ex) {
            rep.add(error_entry(suite, "assoc_objects", loc, ex.what()));
        }
    }
    for (const auto& a : grid.objects)
        for (const auto& b : grid.objects) {
            const std::string loc =
                "assoc at (" + a.to_string() + ", " + b.to_string() + ")";
            try {
                const Morphism lr = lhs.r(a, b), rr = rhs.r(a, b);
                const Morphism li = lhs.i(a, b), ri = rhs.i(a, b);
                report_equation(rep, suite, "assoc_r", loc, as_matrix(lr), as_matrix(rr));
                report_equation(rep, suite, "assoc_i", loc, as_matrix(li), as_matrix(ri));
            } catch (const std::exception& ex) {
                rep.add(error_entry(suite, "assoc_components", loc, ex.what()));
            }
        }
    try {
        report_equation(rep, suite, "assoc_r0", "assoc", as_matrix(lhs.r0), as_matrix(rhs.r0));
        report_equation(rep, suite, "assoc_i0", "assoc", as_matrix(lhs.i0), as_matrix(rhs.i0));
    } catch (const std::exception& ex) {
        rep.add(error_entry(suite, "assoc_units", "assoc", ex.what()));
    }
}

}  // namespace

Report check_frob_category(const FrobFunctorData& f, const FrobFunctorData& g,
                           const FrobFunctorData& h, const ObjectGrid& grid) {
    Report rep;
    const std::string suite = "frobcat";

    FrobFunctorData left, right;
    try {
        left = pointwise_tensor(pointwise_tensor(f, g), h);
        right = pointwise_tensor(f, pointwise_tensor(g, h));
    } catch (const std::exception& ex) {
        rep.add(error_entry(suite, "assoc_build", "-", ex.what()));
        return rep;
    }
    check_assoc_components(rep, left, right, grid);

    // (b) hexagons and symmetry, on the nose for commutation matrices. These
    // are facts about this particular strict instance, not assumed generally.
    for (const auto& a : grid.objects) {
        const std::string loc = obj_loc("braiding", a);
        try {
            const size_t fa = f.obj(a).dim, ga = g.obj(a).dim, ha = h.obj(a).dim;
            const RatMatrix c_fg_h = frob_braiding(pointwise_tensor(f, g), h, a);
            const RatMatrix hex1 =
                mat_mul(kron(frob_braiding(f, h, a), RatMatrix::identity(ga)),
                        kron(RatMatrix::identity(fa), frob_braiding(g, h, a)));
            report_equation(rep, suite, "hexagon_1", loc, c_fg_h, hex1,
                            "strict instance identity");

            const RatMatrix c_f_gh = frob_braiding(f, pointwise_tensor(g, h), a);
            const RatMatrix hex2 =
                mat_mul(kron(RatMatrix::identity(ga), frob_braiding(f, h, a)),
                        kron(frob_braiding(f, g, a), RatMatrix::identity(ha)));
            report_equation(rep, suite, "hexagon_2", loc, c_f_gh, hex2,
                            "strict instance identity");

            report_equation(rep, suite, "symmetry", loc,
                            mat_mul(frob_braiding(g, f, a), frob_braiding(f, g, a)),
                            RatMatrix::identity(fa * ga), "strict instance identity");
        } catch (const std::exception& ex) {
            rep.add(error_entry(suite, "braiding", loc, ex.what()));
        }
    }

    // (c) braiding naturality in the object variable, over the spanning family.
    for (const auto& a : grid.objects)
        for (const auto& a2 : grid.objects) {
            const std::string loc =
                "braiding at A=" + a.to_string() + ",A'=" + a2.to_string();
            try {
                const RatMatrix c_a = frob_braiding(f, g, a);
                const RatMatrix c_a2 = frob_braiding(f, g, a2);
                bool all_ok = true;
                for (const auto& s : f.source.spanning_morphisms(a, a2)) {
                    const Morphism fm = f.mor(s.mor);
                    const Morphism gm = g.mor(s.mor);
                    RatMatrix lhs = mat_mul(c_a2, kron(as_matrix(fm), as_matrix(gm)));
                    RatMatrix rhs = mat_mul(kron(as_matrix(gm), as_matrix(fm)), c_a);
                    if (lhs != rhs) {
                        rep.add(fail_entry(suite, "braid_naturality_obj",
                                           loc + "; f=" + s.label, lhs, rhs));
                        all_ok = false;
                    }
                }
                if (all_ok) rep.add(pass_entry(suite, "braid_naturality_obj", loc));
            } catch (const std::exception& ex) {
                rep.add(error_entry(suite, "braid_naturality_obj", loc, ex.what()));
            }
        }

    // (c) braiding naturality in each functor variable, against the sampled
    // family. Each sample is first run through its own coherence check.
    struct Side {
        const FrobFunctorData* varying;
        const FrobFunctorData* fixed;
        bool var_first;  // braiding component is c_{varying,fixed} when true
        const char* check;
    };
    const Side sides[2] = {{&f, &g, true, "braid_naturality_F"},
                           {&g, &f, false, "braid_naturality_G"}};
    for (const Side& side : sides) {
        for (const auto& t : sampled_transfs(*side.varying)) {
            const std::string who = side.check + std::string(" sample=") + t.name;
            if (!check_nat_transf(t, grid).all_pass()) {
                rep.add(error_entry(suite, side.check, who,
                                    "sampled transformation failed its own coherence check"));
                continue;
            }
            for (const auto& a : grid.objects) {
                const std::string loc = obj_loc(who, a);
                try {
                    const RatMatrix alpha = t.component(a);
                    const size_t fixed_dim = side.fixed->obj(a).dim;
                    const RatMatrix id_fixed = RatMatrix::identity(fixed_dim);
                    RatMatrix c_a = side.var_first
                                        ? frob_braiding(*side.varying, *side.fixed, a)
                                        : frob_braiding(*side.fixed, *side.varying, a);
                    // alpha is an endo-transformation, so both braidings in the
                    // square share the same component c_a.
                    RatMatrix lhs, rhs;
                    if (side.var_first) {
                        lhs = mat_mul(c_a, kron(alpha, id_fixed));
                        rhs = mat_mul(kron(id_fixed, alpha), c_a);
                    } else {
                        lhs = mat_mul(c_a, kron(id_fixed, alpha));
                        rhs = mat_mul(kron(alpha, id_fixed), c_a);
                    }
                    report_equation(rep, suite, side.check, loc, lhs, rhs,
                                    "sampled transformation family");
                } catch (const std::exception& ex) {
                    rep.add(error_entry(suite, side.check, loc, ex.what()));
                }
            }
        }
    }

    // (d) dual situations survive transport along each functor.
    const FrobFunctorData* functors[3] = {&f, &g, &h};
    for (const FrobFunctorData* fx : functors)
        for (const auto& a : grid.objects) {
            if (a.kind != MonObject::Kind::Mat) continue;
            const std::string loc = fx->name + " at " + a.to_string();
            try {
                Report sub = check_triangles(transport_dual(*fx, cupcap(a.dim)));
                for (ReportEntry e : sub.entries) {
                    e.suite = suite;
                    e.check = "dual_transport:" + e.check;
                    e.location = loc;
                    rep.add(std::move(e));
                }
            } catch (const std::exception& ex) {
                rep.add(error_entry(suite, "dual_transport", loc, ex.what()));
            }
        }

    return rep;
}

}  // namespace frobcheck
