#include "twistcalc/random.hpp"

namespace twc {

Scalar random_scalar(Rng& rng, const FieldPtr& f) {
    switch (f->kind) {
    case FieldKind::Rational: {
        std::int64_t num = rng.range(-9, 9);
        std::int64_t den = rng.range(1, 6);
        return Scalar::from_fraction(f, num, den);
    }
    case FieldKind::Prime: return Scalar::from_int(f, rng.below(f->p));
    case FieldKind::RatFunc: {
        const FieldPtr base = f->base == FieldKind::Prime ? prime_field(f->p) : rational_field();
        auto poly = [&](int maxdeg, bool monic) {
            std::vector<Scalar> c;
            int deg = static_cast<int>(rng.below(maxdeg + 1));
            for (int i = 0; i <= deg; ++i) c.push_back(random_scalar(rng, base));
            if (monic) c.back() = Scalar::one(base);
            return c;
        };
        std::vector<Scalar> num = poly(2, false);
        std::vector<Scalar> den =
            rng.chance(30) ? poly(1, true) : std::vector<Scalar>{Scalar::one(base)};
        return Scalar::from_param_fraction(f, std::move(num), std::move(den));
    }
    }
    return Scalar::zero(f);
}

Scalar random_nonzero_scalar(Rng& rng, const FieldPtr& f) {
    for (int tries = 0; tries < 64; ++tries) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
    return Scalar::one(f);
}

CoeffElem random_coeff(Rng& rng, const AlgebraPtr& alg, int max_degree, int max_terms) {
    const int n = alg->nvars();
    const std::int64_t nterms = rng.below(max_terms + 1);
    CoeffElem r = CoeffElem::zero(alg);
    for (std::int64_t t = 0; t < nterms; ++t) {
        Exps e(n, 0);
        for (int i = 0; i < n; ++i)
            e[i] = static_cast<int>(alg->mode == CoeffMode::Poly ? rng.below(max_degree + 1)
                                                                 : rng.range(-max_degree, max_degree));
        r += CoeffElem::monomial(alg, e, random_scalar(rng, alg->field));
    }
    if (alg->mode == CoeffMode::RatFunc && rng.chance(35)) {
        CoeffElem den = CoeffElem::zero(alg);
        for (int t = 0; t < 2; ++t) {
            Exps e(n, 0);
            for (int i = 0; i < n; ++i) e[i] = static_cast<int>(rng.below(2));
            den += CoeffElem::monomial(alg, e, random_scalar(rng, alg->field));
        }
        if (!den.is_zero()) r = r / den;
    }
    return r;
}

CoeffElem random_nonzero_coeff(Rng& rng, const AlgebraPtr& alg, int max_degree, int max_terms) {
    for (int tries = 0; tries < 64; ++tries) {
        CoeffElem c = random_coeff(rng, alg, max_degree, max_terms);
        if (!c.is_zero()) return c;
    }
    return CoeffElem::one(alg);
}

OreOperator random_operator(Rng& rng, const OrePtr& alg, int max_opdeg, int max_coeff_deg,
                            int max_terms) {
    const int m = alg->nops();
    OreOperator r = OreOperator::zero(alg);
    const std::int64_t nterms = rng.range(1, max_terms);
    for (std::int64_t t = 0; t < nterms; ++t) {
        Exps u(m, 0);
        for (int i = 0; i < m; ++i)
            u[i] = static_cast<int>(alg->kind == OreKind::Graded && alg->inversive_vars
                                        ? rng.range(-max_opdeg, max_opdeg)
                                        : rng.below(max_opdeg + 1));
        r += OreOperator::term(alg, u, random_coeff(rng, alg->coeffs, max_coeff_deg, 3));
    }
    return r;
}

CoeffMatrix random_matrix(Rng& rng, const AlgebraPtr& alg, int rank, int max_degree) {
    CoeffMatrix m(alg, rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m.at(i, j) = random_coeff(rng, alg, max_degree, 2);
    return m;
}

} // namespace twc
