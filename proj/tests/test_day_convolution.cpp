#include "doctest.h"
#include "oracle.hpp"

#include "frobcheck/day_convolution.hpp"
#include "frobcheck/error.hpp"
#include "frobcheck/linalg.hpp"

using namespace frobcheck;

TEST_CASE("make_base_functor gates the representation laws") {
    const FiniteBase z2 = FiniteBase::zmod(2);
    // sign representation of Z/2 is fine
    RatMatrix sign = RatMatrix::identity(1);
    sign.at(0, 0) = Rational(-1);
    const BaseFunctor s =
        make_base_functor(z2, 1, {RatMatrix::identity(1), sign}, "sign");
    CHECK(s.v_dim == 1);
    // wrong count
    CHECK_THROWS_AS(make_base_functor(z2, 1, {RatMatrix::identity(1)}, "bad"),
                    StructureError);
    // rho(identity) must be the identity
    CHECK_THROWS_AS(make_base_functor(z2, 1, {sign, sign}, "bad"), StructureError);
    // not a homomorphism: rho(1)^2 = -1 != rho(0)
    CHECK_THROWS_AS((void)make_base_functor(
                        z2, 2, {RatMatrix::identity(2),
                                RatMatrix{{Rational(0), Rational(-1)},
                                          {Rational(1), Rational(0)}}},
                        "bad"),
                    StructureError);
}

TEST_CASE("the regular functor is the group algebra with its regular action") {
    const BaseFunctor r = regular_functor(FiniteBase::zmod(3));
    CHECK(r.v_dim == 3);
    REQUIRE(r.maps.has_value());
    // rho(1) sends e_h to e_{1+h}: a cyclic permutation matrix
    CHECK(r.rho[1].at(1, 0).is_one());
    CHECK(r.rho[1].at(2, 1).is_one());
    CHECK(r.rho[1].at(0, 2).is_one());
    // mu is convolution: mu(e_1 (x) e_2) = e_0
    CHECK(r.maps->r.at(0, 1 * 3 + 2).is_one());
    // eps picks the coefficient of the identity
    CHECK(r.maps->i0.at(0, 0).is_one());
    CHECK(r.maps->i0.at(0, 1).is_zero());
    // viewed as functor data, all suites pass over the one-object grid
    const FrobFunctorData fd = to_frob_functor(r);
    const ObjectGrid star = ObjectGrid::star();
    CHECK(structural_validate(fd, star).all_pass());
    CHECK(check_naturality(fd, star).all_pass());
    CHECK(check_monoidal_coherence(fd, star).all_pass());
    CHECK(check_comonoidal_coherence(fd, star).all_pass());
    CHECK(check_frobenius(fd, star).all_pass());
}

TEST_CASE("coend quotient dimension equals ambient minus relation rank") {
    for (int n = 2; n <= 3; ++n) {
        const BaseFunctor f = regular_functor(FiniteBase::zmod(n));
        const CoendSpace two = build_coend(f.base, {&f, &f});
        CHECK(two.ambient_dim == static_cast<size_t>(n * n * n));
        const size_t expected = two.ambient_dim - oracle::naive_rank(two.relations);
        CHECK(two.quotient_dim() == expected);
        // the frozen value: Q[G] * Q[G] has dimension |G|
        CHECK(two.quotient_dim() == static_cast<size_t>(n));
    }
}

TEST_CASE("coend projection and section satisfy their contracts") {
    const BaseFunctor f = regular_functor(FiniteBase::zmod(2));
    const CoendSpace c = build_coend(f.base, {&f, &f});
    CHECK(mat_mul(c.projection, c.relations).is_zero());
    CHECK(mat_mul(c.projection, c.section).is_identity());
    CHECK(c.basis_labels.size() == c.ambient_dim);
    CHECK(c.relation_labels.size() == c.relations.cols());
    // repeated builds are bit-identical
    const CoendSpace c2 = build_coend(f.base, {&f, &f});
    CHECK(c.projection == c2.projection);
    CHECK(c.section == c2.section);
    CHECK(c.relations == c2.relations);
}

TEST_CASE("the induced action is a group homomorphism on the quotient") {
    const FiniteBase z3 = FiniteBase::zmod(3);
    const BaseFunctor f = regular_functor(z3);
    const CoendSpace c = build_coend(z3, {&f, &f});
    REQUIRE(c.action.size() == 3);
    CHECK(c.action[0].is_identity());
    for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h)
            CHECK(mat_mul(c.action[g], c.action[h]) == c.action[z3.mul(g, h)]);
}

TEST_CASE("bases beyond the supported order are rejected") {
    const BaseFunctor f = regular_functor(FiniteBase::zmod(7));
    CHECK_THROWS_AS(build_coend(f.base, {&f}), StructureError);
    const BaseFunctor g = regular_functor(FiniteBase::zmod(2));
    CHECK_THROWS_AS(convolution_product(f, g), StructureError);
}

TEST_CASE("induced maps respect projections") {
    const FiniteBase z2 = FiniteBase::zmod(2);
    const BaseFunctor f = regular_functor(z2);
    const CoendSpace e1 = build_coend(z2, {&f, &f});  // on F(AB) (x) FC shape
    const CoendSpace e3 = build_coend(z2, {&f});
    // the one-factor coend receives kron(1_G, r) from the two-factor one
    const RatMatrix ambient = kron(RatMatrix::identity(2), f.maps->r);
    const InducedMapResult ind = induced_map(ambient, e1, e3);
    REQUIRE(ind.well_defined);
    // compatibility: induced . P_src = P_dst . ambient
    CHECK(mat_mul(ind.map, e1.projection) == mat_mul(e3.projection, ambient));
}

TEST_CASE("non-equivariant maps are caught with the offending relation") {
    const FiniteBase z2 = FiniteBase::zmod(2);
    const BaseFunctor f = regular_functor(z2);
    const CoendSpace e1 = build_coend(z2, {&f, &f});
    const CoendSpace e3 = build_coend(z2, {&f});
    RatMatrix bad(2, 4);
    bad.at(0, 0) = Rational(1);
    bad.at(1, 1) = Rational(1);
    bad.at(1, 2) = Rational(1);
    bad.at(1, 3) = Rational(1);
    const InducedMapResult ind = induced_map(kron(RatMatrix::identity(2), bad), e1, e3);
    CHECK_FALSE(ind.well_defined);
    CHECK_FALSE(ind.bad_detail.empty());
    CHECK(ind.bad_relation < e1.relation_labels.size());
}

TEST_CASE("the canonical three-variable evaluation is an isomorphism") {
    for (int n = 2; n <= 3; ++n) {
        const BaseFunctor f = regular_functor(FiniteBase::zmod(n));
        const Eval3Result e3 = canonical_eval3(f);
        CHECK(e3.iso);
        CHECK(e3.induced.rows() == f.v_dim);
        CHECK(e3.induced.cols() == e3.coend.quotient_dim());
        // ambient evaluation really is class(x, v) -> rho(x) v
        for (int x = 0; x < n; ++x)
            for (size_t col = 0; col < f.v_dim; ++col)
                for (size_t row = 0; row < f.v_dim; ++row)
                    CHECK(e3.eval_ambient.at(row, x * f.v_dim + col) ==
                          f.rho[x].at(row, col));
    }
}

TEST_CASE("the retraction lemma holds for the regular functor") {
    const BaseFunctor f = regular_functor(FiniteBase::zmod(2));
    const Report rep = canonical_eval2_retraction(f);
    CHECK(rep.all_pass());
    bool saw_hk = false, saw_lh = false, saw_hl = false, saw_iso = false;
    for (const ReportEntry& e : rep.entries) {
        if (e.check == "retraction_hk") saw_hk = true;
        if (e.check == "lh_identity") saw_lh = true;
        if (e.check == "hl_identity") saw_hl = true;
        if (e.check == "eval2_iso") saw_iso = true;
    }
    CHECK(saw_hk);
    CHECK(saw_lh);
    CHECK(saw_hl);
    CHECK(saw_iso);
}

TEST_CASE("a failed three-variable precondition takes the diagnostic branch") {
    const BaseFunctor f = regular_functor(FiniteBase::zmod(2));
    Eval3Result doctored = canonical_eval3(f);
    doctored.iso = false;
    doctored.induced = RatMatrix::zero(doctored.induced.rows(), doctored.induced.cols());
    const Report rep = eval2_retraction_core(f, doctored);
    REQUIRE(rep.has_error());
    CHECK(rep.entries[0].check == "flat_precondition");
    CHECK(rep.entries[0].detail.find("rank") != std::string::npos);
}

TEST_CASE("the induced Frobenius squares commute for the regular functor") {
    for (int n = 2; n <= 3; ++n) {
        const BaseFunctor f = regular_functor(FiniteBase::zmod(n));
        const Report rep = induced_frobenius_check(f);
        CHECK(rep.all_pass());
        bool saw_sq1 = false, saw_sq2 = false, saw_chain = false;
        for (const ReportEntry& e : rep.entries) {
            if (e.check == "frobenius_square_1") saw_sq1 = true;
            if (e.check == "frobenius_square_2") saw_sq2 = true;
            if (e.check == "chain_iso_left") saw_chain = true;
        }
        CHECK(saw_sq1);
        CHECK(saw_sq2);
        CHECK(saw_chain);
    }
}

TEST_CASE("functors without structure maps are reported, not crashed") {
    const FiniteBase z2 = FiniteBase::zmod(2);
    RatMatrix sign(1, 1);
    sign.at(0, 0) = Rational(-1);
    const BaseFunctor s =
        make_base_functor(z2, 1, {RatMatrix::identity(1), sign}, "sign");
    const Report rep = check_convolution(s);
    CHECK(rep.has_error());
    bool saw_missing = false;
    for (const ReportEntry& e : rep.entries)
        if (e.check == "structure_maps" && e.status == Status::Error) saw_missing = true;
    CHECK(saw_missing);
    // the sign representation still has its evaluations checked
    bool saw_eval = false;
    for (const ReportEntry& e : rep.entries)
        if (e.check == "eval3_iso") saw_eval = true;
    CHECK(saw_eval);
}

TEST_CASE("the full convolution suite passes for regular functors") {
    for (int n = 2; n <= 3; ++n) {
        const Report rep = check_convolution(regular_functor(FiniteBase::zmod(n)));
        CHECK(rep.all_pass());
    }
}

TEST_CASE("the convolution unit shares the regular structure") {
    const BaseFunctor j = convolution_unit(FiniteBase::zmod(2));
    CHECK(j.name == "J");
    CHECK(check_convolution(j).all_pass());
}
