#include "frobcheck/algebra.hpp"

#include "frobcheck/error.hpp"

namespace frobcheck {

Report check_frobenius_algebra(const FrobeniusAlgebra& alg) {
    Report rep;
    const std::string suite = "frobalg";
    const size_t d = alg.dim();
    const std::string loc = alg.name + " (dim " + std::to_string(d) + ")";

    if (alg.mu.rows() != d || alg.mu.cols() != d * d || alg.eta.rows() != d ||
        alg.eta.cols() != 1 || alg.delta.rows() != d * d || alg.delta.cols() != d ||
        alg.eps.rows() != 1 || alg.eps.cols() != d) {
        rep.add(error_entry(suite, "shapes", loc,
                            "structure maps do not match the object dimension"));
        return rep;
    }

    const RatMatrix id = RatMatrix::identity(d);

    report_equation(rep, suite, "associativity", loc, mat_mul(alg.mu, kron(alg.mu, id)),
                    mat_mul(alg.mu, kron(id, alg.mu)));
    report_equation(rep, suite, "unit_left", loc, mat_mul(alg.mu, kron(alg.eta, id)), id);
    report_equation(rep, suite, "unit_right", loc, mat_mul(alg.mu, kron(id, alg.eta)), id);
    report_equation(rep, suite, "coassociativity", loc, mat_mul(kron(alg.delta, id), alg.delta),
                    mat_mul(kron(id, alg.delta), alg.delta));
    report_equation(rep, suite, "counit_left", loc, mat_mul(kron(alg.eps, id), alg.delta), id);
    report_equation(rep, suite, "counit_right", loc, mat_mul(kron(id, alg.eps), alg.delta), id);

    const RatMatrix delta_mu = mat_mul(alg.delta, alg.mu);
    report_equation(rep, suite, "frobenius_left", loc,
                    mat_mul(kron(alg.mu, id), kron(id, alg.delta)), delta_mu);
    report_equation(rep, suite, "frobenius_right", loc,
                    mat_mul(kron(id, alg.mu), kron(alg.delta, id)), delta_mu);
    return rep;
}

FrobeniusAlgebra zmod_algebra(int n) {
    if (n < 1) throw StructureError("zmod algebra requires n >= 1");
    const size_t d = static_cast<size_t>(n);
    FrobeniusAlgebra alg;
    alg.r = MonObject::mat(d);
    alg.name = "Q[Z/" + std::to_string(n) + "]";
    alg.mu = RatMatrix(d, d * d);
    alg.eta = RatMatrix(d, 1);
    alg.delta = RatMatrix(d * d, d);
    alg.eps = RatMatrix(1, d);

    for (size_t g = 0; g < d; ++g)
        for (size_t h = 0; h < d; ++h) alg.mu.at((g + h) % d, g * d + h) = Rational(1);
    alg.eta.at(0, 0) = Rational(1);
    for (size_t g = 0; g < d; ++g)
        for (size_t h = 0; h < d; ++h) alg.delta.at(h * d + (g + d - h) % d, g) = Rational(1);
    alg.eps.at(0, 0) = Rational(1);

    Report gate = check_frobenius_algebra(alg);
    if (!gate.all_pass())
        throw StructureError("generated group algebra failed its own axiom check");
    return alg;
}

FrobeniusAlgebra unit_algebra() {
    FrobeniusAlgebra alg;
    alg.r = MonObject::mat(1);
    alg.name = "I";
    alg.mu = RatMatrix::identity(1);
    alg.eta = RatMatrix::identity(1);
    alg.delta = RatMatrix::identity(1);
    alg.eps = RatMatrix::identity(1);
    return alg;
}

}  // namespace frobcheck
