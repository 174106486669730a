#include "frobcheck/day_convolution.hpp"

#include <memory>
#include <utility>
#include <variant>

#include "frobcheck/error.hpp"

namespace frobcheck {

namespace {

constexpr int kMaxBaseOrder = 6;

std::string dim_str(size_t n) { return std::to_string(n); }

}  // namespace

BaseFunctor make_base_functor(FiniteBase base, size_t v_dim, std::vector<RatMatrix> rho,
                              std::string name) {
    const int n = base.order();
    if (rho.size() != static_cast<size_t>(n))
        throw StructureError("functor " + name + ": expected " + dim_str(n) +
                             " representing matrices, got " + dim_str(rho.size()));
    for (int g = 0; g < n; ++g)
        if (rho[g].rows() != v_dim || rho[g].cols() != v_dim)
            throw StructureError("functor " + name + ": rho(" + base.label(g) +
                                 ") is not " + dim_str(v_dim) + " x " + dim_str(v_dim));
    if (!rho[base.identity()].is_identity())
        throw StructureError("functor " + name + ": rho at the identity is not the identity");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (mat_mul(rho[g], rho[h]) != rho[base.mul(g, h)])
                throw StructureError("functor " + name + ": rho(" + base.label(g) +
                                     ")rho(" + base.label(h) + ") != rho(" +
                                     base.label(base.mul(g, h)) + ")");
    BaseFunctor f;
    f.base = std::move(base);
    f.v_dim = v_dim;
    f.rho = std::move(rho);
    f.name = std::move(name);
    return f;
}

BaseFunctor regular_functor(const FiniteBase& base) {
    const int n = base.order();
    const size_t un = static_cast<size_t>(n);
    std::vector<RatMatrix> rho;
    rho.reserve(un);
    for (int g = 0; g < n; ++g) {
        RatMatrix m(un, un);
        for (int h = 0; h < n; ++h) m.at(base.mul(g, h), h) = Rational(1);
        rho.push_back(std::move(m));
    }
    BaseFunctor f = make_base_functor(base, un, std::move(rho), "regular");

    BaseFunctor::StructureMaps maps;
    maps.r = RatMatrix(un, un * un);
    maps.r0 = RatMatrix(un, 1);
    maps.i = RatMatrix(un * un, un);
    maps.i0 = RatMatrix(1, un);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            maps.r.at(base.mul(g, h), static_cast<size_t>(g) * un + h) = Rational(1);
            maps.i.at(static_cast<size_t>(h) * un + base.mul(base.inverse(h), g), g) =
                Rational(1);
        }
    maps.r0.at(base.identity(), 0) = Rational(1);
    maps.i0.at(0, base.identity()) = Rational(1);
    f.maps = std::move(maps);
    return f;
}

BaseFunctor convolution_unit(const FiniteBase& base) {
    BaseFunctor j = regular_functor(base);
    j.name = "J";
    return j;
}

FrobFunctorData to_frob_functor(const BaseFunctor& f) {
    auto fc = std::make_shared<const BaseFunctor>(f);

    FrobFunctorData out;
    out.source = CategoryInstance::sigma_g(f.base);
    out.target = CategoryInstance::mat_q();
    out.kind = FrobFunctorData::Kind::GroupRep;
    out.name = f.name;
    out.object_map = [fc](const MonObject&) { return MonObject::mat(fc->v_dim); };
    out.morphism_map = [fc](const Morphism& m) -> Morphism {
        const GroupElt* g = std::get_if<GroupElt>(&m);
        if (!g) throw ShapeError("Sigma G morphisms are group elements");
        if (g->index < 0 || g->index >= static_cast<int>(fc->rho.size()))
            throw ShapeError("group element index out of range");
        return fc->rho[static_cast<size_t>(g->index)];
    };
    if (f.maps) {
        out.r_fn = [fc](const MonObject&, const MonObject&) -> Morphism {
            return fc->maps->r;
        };
        out.i_fn = [fc](const MonObject&, const MonObject&) -> Morphism {
            return fc->maps->i;
        };
        out.r0 = f.maps->r0;
        out.i0 = f.maps->i0;
    }
    return out;
}

CoendSpace build_coend(const FiniteBase& base, const std::vector<const BaseFunctor*>& factors) {
    if (base.order() > kMaxBaseOrder)
        throw StructureError("base of order " + dim_str(base.order()) +
                             " exceeds the supported bound " + dim_str(kMaxBaseOrder));
    for (const BaseFunctor* f : factors)
        if (f->base != base) throw StructureError("coend factors must share the base");

    const int n = base.order();
    const size_t un = static_cast<size_t>(n);
    const size_t k = factors.size();
    size_t d_total = 1;
    for (const BaseFunctor* f : factors) d_total *= f->v_dim;

    CoendSpace out;
    out.ambient_dim = un * d_total;

    out.basis_labels.reserve(out.ambient_dim);
    for (int x = 0; x < n; ++x)
        for (size_t xi = 0; xi < d_total; ++xi) {
            std::string lab = "x=" + base.label(x) + "|v=(";
            // per-factor indices, first factor slowest
            size_t rem = xi;
            std::vector<size_t> idx(k);
            for (size_t j = k; j-- > 0;) {
                idx[j] = rem % factors[j]->v_dim;
                rem /= factors[j]->v_dim;
            }
            for (size_t j = 0; j < k; ++j) lab += (j ? "," : "") + dim_str(idx[j]);
            lab += ")";
            out.basis_labels.push_back(std::move(lab));
        }

    size_t n_tuples = 1;
    for (size_t j = 0; j < k; ++j) n_tuples *= un;

    RatMatrix rel(out.ambient_dim, n_tuples * un * d_total);
    out.relation_labels.reserve(n_tuples * un * d_total);
    size_t col = 0;
    std::vector<int> tup(k, 0);
    for (size_t t = 0; t < n_tuples; ++t) {
        size_t rem = t;
        for (size_t j = k; j-- > 0;) {
            tup[j] = static_cast<int>(rem % un);
            rem /= un;
        }
        int p = base.identity();
        for (size_t j = 0; j < k; ++j) p = base.mul(p, tup[j]);
        RatMatrix act = RatMatrix::identity(1);
        for (size_t j = 0; j < k; ++j) act = kron(act, factors[j]->rho[tup[j]]);

        std::string tup_lab = "p=(";
        for (size_t j = 0; j < k; ++j) tup_lab += (j ? "," : "") + base.label(tup[j]);
        tup_lab += ")";

        for (int x = 0; x < n; ++x) {
            const size_t shifted = static_cast<size_t>(base.mul(x, p));
            for (size_t xi = 0; xi < d_total; ++xi) {
                rel.at(shifted * d_total + xi, col) += Rational(1);
                for (size_t row = 0; row < d_total; ++row) {
                    const Rational& a = act.at(row, xi);
                    if (!(a == Rational(0)))
                        rel.at(static_cast<size_t>(x) * d_total + row, col) -= a;
                }
                out.relation_labels.push_back(tup_lab + ", x=" + base.label(x) +
                                              ", v=" + dim_str(xi));
                ++col;
            }
        }
    }
    out.relations = std::move(rel);

    CokernelResult ck = cokernel(out.relations);
    out.projection = std::move(ck.projection);
    out.section = std::move(ck.section);

    out.action.reserve(un);
    for (int g = 0; g < n; ++g) {
        RatMatrix amb(out.ambient_dim, out.ambient_dim);
        for (int x = 0; x < n; ++x) {
            const size_t gx = static_cast<size_t>(base.mul(g, x));
            for (size_t xi = 0; xi < d_total; ++xi)
                amb.at(gx * d_total + xi, static_cast<size_t>(x) * d_total + xi) = Rational(1);
        }
        out.action.push_back(mat_mul(out.projection, mat_mul(amb, out.section)));
    }
    return out;
}

CoendSpace convolution_product(const BaseFunctor& f, const BaseFunctor& g) {
    if (f.base != g.base) throw StructureError("convolution requires a common base");
    return build_coend(f.base, {&f, &g});
}

InducedMapResult induced_map(const RatMatrix& ambient_map, const CoendSpace& src,
                             const CoendSpace& dst) {
    if (ambient_map.rows() != dst.ambient_dim || ambient_map.cols() != src.ambient_dim)
        throw ShapeError("ambient map is " + dim_str(ambient_map.rows()) + " x " +
                         dim_str(ambient_map.cols()) + ", expected " + dim_str(dst.ambient_dim) +
                         " x " + dim_str(src.ambient_dim));
    InducedMapResult out;
    const RatMatrix pushed = mat_mul(dst.projection, mat_mul(ambient_map, src.relations));
    for (size_t j = 0; j < pushed.cols() && out.well_defined; ++j)
        for (size_t i = 0; i < pushed.rows(); ++i)
            if (!(pushed.at(i, j) == Rational(0))) {
                out.well_defined = false;
                out.bad_relation = j;
                out.bad_detail = src.relation_labels.size() > j ? src.relation_labels[j] : "";
                break;
            }
    out.map = mat_mul(dst.projection, mat_mul(ambient_map, src.section));
    return out;
}

Eval3Result canonical_eval3(const BaseFunctor& f) {
    Eval3Result out{build_coend(f.base, {&f}), RatMatrix(), RatMatrix(), false};
    const int n = f.base.order();
    const size_t d = f.v_dim;
    RatMatrix ev(d, out.coend.ambient_dim);
    for (int x = 0; x < n; ++x)
        for (size_t col = 0; col < d; ++col)
            for (size_t row = 0; row < d; ++row)
                ev.at(row, static_cast<size_t>(x) * d + col) = f.rho[x].at(row, col);
    out.eval_ambient = std::move(ev);
    out.induced = mat_mul(out.eval_ambient, out.coend.section);
    out.iso = is_iso(out.induced);
    return out;
}

Report canonical_eval2_retraction(const BaseFunctor& f) {
    return eval2_retraction_core(f, canonical_eval3(f));
}

Report eval2_retraction_core(const BaseFunctor& f, const Eval3Result& e3) {
    Report rep;
    const std::string suite = "retraction";
    if (!e3.iso) {
        rep.add(error_entry(suite, "flat_precondition", f.name,
                            "(♭) fails: the canonical three-variable evaluation is not "
                            "invertible, rank " +
                                dim_str(rank(e3.induced)) + " on a quotient of dimension " +
                                dim_str(e3.coend.quotient_dim())));
        return rep;
    }
    rep.add(pass_entry(suite, "flat_precondition", f.name,
                       "three-variable evaluation invertible"));

    const CoendSpace two = build_coend(f.base, {&f});
    const RatMatrix amb_id = RatMatrix::identity(e3.coend.ambient_dim);
    const InducedMapResult h = induced_map(amb_id, e3.coend, two);
    const InducedMapResult k = induced_map(amb_id, two, e3.coend);
    if (!h.well_defined || !k.well_defined) {
        const InducedMapResult& bad = h.well_defined ? k : h;
        rep.add(error_entry(suite, "regrouping_well_defined", f.name,
                            "identity-induced map not well defined at relation " +
                                bad.bad_detail));
        return rep;
    }
    report_equation(rep, suite, "retraction_hk", f.name, mat_mul(h.map, k.map),
                    RatMatrix::identity(two.quotient_dim()));

    const RatMatrix ev2 = mat_mul(e3.eval_ambient, two.section);
    const std::optional<RatMatrix> inv3 = inverse(e3.induced);
    const RatMatrix l = mat_mul(*inv3, ev2);
    report_equation(rep, suite, "lh_identity", f.name, mat_mul(l, h.map),
                    RatMatrix::identity(e3.coend.quotient_dim()));
    report_equation(rep, suite, "hl_identity", f.name, mat_mul(h.map, l),
                    RatMatrix::identity(two.quotient_dim()));

    if (is_iso(ev2)) {
        rep.add(pass_entry(suite, "eval2_iso", f.name,
                           "two-variable evaluation invertible on dimension " +
                               dim_str(two.quotient_dim())));
    } else {
        rep.add(fail_entry(suite, "eval2_iso", f.name, ev2, RatMatrix::identity(ev2.rows()),
                           "two-variable evaluation is not invertible"));
    }
    return rep;
}

namespace {

// Adds a well-definedness error entry when the induced map failed.
bool induced_ok(Report& rep, const InducedMapResult& m, const std::string& check,
                const std::string& loc) {
    if (m.well_defined) return true;
    rep.add(error_entry("induced", check, loc,
                        "equivariance failure: image of relation " + dim_str(m.bad_relation) +
                            " (" + m.bad_detail + ") does not vanish in the quotient"));
    return false;
}

}  // namespace

Report induced_frobenius_check(const BaseFunctor& f) {
    Report rep;
    const std::string suite = "induced";
    if (!f.maps) {
        rep.add(error_entry(suite, "structure_maps", f.name,
                            "functor carries no structure maps"));
        return rep;
    }
    const BaseFunctor::StructureMaps& m = *f.maps;
    const RatMatrix id_g = RatMatrix::identity(static_cast<size_t>(f.base.order()));
    const RatMatrix id_v = RatMatrix::identity(f.v_dim);

    const CoendSpace e1 = build_coend(f.base, {&f, &f});      // F(AB) (x) FC
    const CoendSpace e2 = build_coend(f.base, {&f, &f, &f});  // FA (x) FB (x) FC
    const CoendSpace e3 = build_coend(f.base, {&f});          // F(ABC)
    const CoendSpace e4 = build_coend(f.base, {&f, &f});      // FA (x) F(BC)

    const InducedMapResult m12 = induced_map(kron(id_g, kron(m.i, id_v)), e1, e2);
    const InducedMapResult m24 = induced_map(kron(id_g, kron(id_v, m.r)), e2, e4);
    const InducedMapResult m13 = induced_map(kron(id_g, m.r), e1, e3);
    const InducedMapResult m34 = induced_map(kron(id_g, m.i), e3, e4);
    bool ok = induced_ok(rep, m12, "well_defined_i_left", f.name);
    ok = induced_ok(rep, m24, "well_defined_r_right", f.name) && ok;
    ok = induced_ok(rep, m13, "well_defined_r_total", f.name) && ok;
    ok = induced_ok(rep, m34, "well_defined_i_total", f.name) && ok;
    if (ok)
        report_equation(rep, suite, "frobenius_square_1", f.name,
                        mat_mul(m24.map, m12.map), mat_mul(m34.map, m13.map));

    const InducedMapResult m42 = induced_map(kron(id_g, kron(id_v, m.i)), e4, e2);
    const InducedMapResult m21 = induced_map(kron(id_g, kron(m.r, id_v)), e2, e1);
    const InducedMapResult m43 = induced_map(kron(id_g, m.r), e4, e3);
    const InducedMapResult m31 = induced_map(kron(id_g, m.i), e3, e1);
    bool ok2 = induced_ok(rep, m42, "well_defined_i_right", f.name);
    ok2 = induced_ok(rep, m21, "well_defined_r_left", f.name) && ok2;
    ok2 = induced_ok(rep, m43, "well_defined_r_total_mirror", f.name) && ok2;
    ok2 = induced_ok(rep, m31, "well_defined_i_total_mirror", f.name) && ok2;
    if (ok2)
        report_equation(rep, suite, "frobenius_square_2", f.name,
                        mat_mul(m21.map, m42.map), mat_mul(m31.map, m43.map));

    // The two-variable convolution F*F against the three-variable coend of
    // the same shape, through identity-induced maps both ways.
    const CoendSpace conv = convolution_product(f, f);
    const RatMatrix amb_id = RatMatrix::identity(conv.ambient_dim);
    const InducedMapResult fwd = induced_map(amb_id, conv, e1);
    const InducedMapResult bwd = induced_map(amb_id, e1, conv);
    bool chain_ok = induced_ok(rep, fwd, "chain_well_defined_fwd", f.name);
    chain_ok = induced_ok(rep, bwd, "chain_well_defined_bwd", f.name) && chain_ok;
    if (chain_ok) {
        report_equation(rep, suite, "chain_iso_left", f.name, mat_mul(bwd.map, fwd.map),
                        RatMatrix::identity(conv.quotient_dim()));
        report_equation(rep, suite, "chain_iso_right", f.name, mat_mul(fwd.map, bwd.map),
                        RatMatrix::identity(e1.quotient_dim()));
    }
    return rep;
}

Report check_convolution(const BaseFunctor& f) {
    Report rep;
    const std::string suite = "convolution";
    try {
        make_base_functor(f.base, f.v_dim, f.rho, f.name);
        rep.add(pass_entry(suite, "rho_homomorphism", f.name));
    } catch (const std::exception& ex) {
        rep.add(error_entry(suite, "rho_homomorphism", f.name, ex.what()));
        return rep;
    }

    if (f.maps) {
        const FrobFunctorData fd = to_frob_functor(f);
        const ObjectGrid star = ObjectGrid::star();
        rep.append(structural_validate(fd, star));
        rep.append(check_naturality(fd, star));
        rep.append(check_monoidal_coherence(fd, star));
        rep.append(check_comonoidal_coherence(fd, star));
        rep.append(check_frobenius(fd, star));
    } else {
        rep.add(error_entry(suite, "structure_maps", f.name,
                            "functor carries no structure maps"));
    }

    const Eval3Result e3 = canonical_eval3(f);
    if (e3.iso) {
        rep.add(pass_entry(suite, "eval3_iso", f.name,
                           "quotient dimension " + dim_str(e3.coend.quotient_dim())));
    } else {
        rep.add(fail_entry(suite, "eval3_iso", f.name, e3.induced,
                           RatMatrix::identity(e3.induced.rows()),
                           "three-variable evaluation is not invertible, rank " +
                               dim_str(rank(e3.induced))));
    }
    rep.append(eval2_retraction_core(f, e3));

    if (f.maps) rep.append(induced_frobenius_check(f));

    const CoendSpace conv = convolution_product(f, f);
    rep.add(pass_entry(suite, "quotient_dim", f.name,
                       "F*F quotient dimension = " + dim_str(conv.quotient_dim())));
    return rep;
}

}  // namespace frobcheck
