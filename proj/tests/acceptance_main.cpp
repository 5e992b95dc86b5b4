// Acceptance suite: end-to-end identity and oracle checks at fixed bounds.
// Each criterion prints one PASS/FAIL line and enforces its runtime budget;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "twistcalc/linalg.hpp"
#include "twistcalc/ore.hpp"
#include "twistcalc/parse.hpp"
#include "twistcalc/random.hpp"
#include "twistcalc/semilin.hpp"
#include "twistcalc/session.hpp"

#include "oracle.hpp"

using namespace twc;

namespace {

int g_failures = 0;

void run(int number, const std::string& name, double limit_seconds,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_seconds) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over time budget";
    }
    std::printf("[%s] criterion %2d: %-58s (%.2fs < %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), secs, limit_seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
    if (!ok) ++g_failures;
}

struct Ring {
    AlgebraPtr alg;
    TwistSpec tw;
    CoeffElem x(int i = 0) const { return CoeffElem::generator(alg, i); }
};

Ring ring(const FieldPtr& f, CoeffMode mode, const Scalar& q, const Scalar& h) {
    AlgebraPtr a = make_algebra(f, {"x"}, mode);
    return {a, TwistSpec::diagonal(a, {{q, h}})};
}

Ring q_dilation(CoeffMode mode) {
    FieldPtr Kq = param_function_field(rational_field(), "q");
    return ring(Kq, mode, Scalar::parameter(Kq), Scalar::zero(Kq));
}

oracle::Mat flatten_ops(const std::vector<OreOperator>& ops, const std::vector<Exps>& monos,
                        const std::vector<Exps>& opdegs, const FieldPtr& f) {
    std::map<Exps, int, GrlexLess> mono_idx, op_idx;
    for (std::size_t i = 0; i < monos.size(); ++i) mono_idx.emplace(monos[i], i);
    for (std::size_t i = 0; i < opdegs.size(); ++i) op_idx.emplace(opdegs[i], i);
    oracle::Mat rows;
    for (const auto& p : ops) {
        std::vector<Scalar> v(monos.size() * opdegs.size(), Scalar::zero(f));
        for (const auto& [u, c] : p.terms())
            for (const auto& [e, s] : c.numer_terms())
                v[op_idx.at(u) * monos.size() + mono_idx.at(e)] = s;
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

int main() {
    // 1. q-derivation formula d(x^n) = (n)_q x^{n-1} for n <= 30.
    run(1, "q-derivation formula up to n = 30", 1.0, [](std::string& detail) {
        Ring r = q_dilation(CoeffMode::Poly);
        Scalar q = Scalar::parameter(r.alg->field);
        for (int n = 1; n <= 30; ++n) {
            CoeffElem want = r.x().pow(n - 1) * quantum_integer(n, q);
            if (!(r.tw.apply_derivation(0, r.x().pow(n)) == want)) {
                detail = "n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    // 2. Both closed power formulas and the Leibniz recursion agree.
    run(2, "power-formula consistency, k <= 12, randomized (q,h)", 5.0, [](std::string& detail) {
        Rng rng(101);
        for (const FieldPtr& f : {rational_field(), prime_field(5)}) {
            AlgebraPtr a = make_algebra(f, {"x"}, CoeffMode::Poly);
            for (int trial = 0; trial < 20; ++trial) {
                Scalar q = random_scalar(rng, f);
                Scalar h = random_scalar(rng, f);
                TwistSpec t = TwistSpec::diagonal(a, {{q, h}});
                for (int k = 1; k <= 12; ++k)
                    if (!derivation_power_formula_check(t, 0, k)) {
                        detail = "field " + f->description() + ", q = " + q.to_string() +
                                 ", h = " + h.to_string() + ", k = " + std::to_string(k);
                        return false;
                    }
            }
        }
        return true;
    });

    // 3. sigma = 1 - y d as maps on A, three rings, 100 random polynomials each.
    run(3, "operator identity sigma = 1 - y*d on three rings", 5.0, [](std::string& detail) {
        Rng rng(103);
        FieldPtr Kq = param_function_field(rational_field(), "q");
        std::vector<Ring> rings{
            q_dilation(CoeffMode::Poly),
            ring(prime_field(3), CoeffMode::Poly, Scalar::one(prime_field(3)),
                 Scalar::one(prime_field(3))),
            ring(Kq, CoeffMode::Poly, Scalar::parameter(Kq), Scalar::one(Kq))};
        for (const Ring& r : rings) {
            OrePtr weyl = make_ore_algebra(r.alg, r.tw, OreKind::Weyl);
            OreOperator sig = sigma_as_operator(weyl, 0);
            for (int rep = 0; rep < 100; ++rep) {
                CoeffElem f = random_coeff(rng, r.alg, 5, 4);
                CoeffElem s1 = r.tw.apply_endo(0, f);
                CoeffElem s2 = f - r.tw.y(0) * r.tw.apply_derivation(0, f);
                CoeffElem s3 = sig.apply(f);
                if (!(s1 == s2) || !(s1 == s3)) {
                    detail = r.alg->description() + ", f = " + f.to_string();
                    return false;
                }
            }
        }
        return true;
    });

    // 4. T -> d -> T and d -> T -> d are identities on the strong Laurent ring.
    run(4, "presentation round trip on 50 random operators", 10.0, [](std::string& detail) {
        Ring r = q_dilation(CoeffMode::Laurent);
        OrePtr graded = make_ore_algebra(r.alg, r.tw, OreKind::Graded);
        OrePtr weyl = make_ore_algebra(r.alg, r.tw, OreKind::Weyl);
        Rng rng(107);
        for (int rep = 0; rep < 50; ++rep) {
            OreOperator p = random_operator(rng, graded, 4, 2, 3);
            if (!(convert_d_to_T(convert_T_to_d(p, weyl), graded) == p)) {
                detail = "graded rep " + std::to_string(rep);
                return false;
            }
            OreOperator w = random_operator(rng, weyl, 4, 2, 3);
            if (!(convert_T_to_d(convert_d_to_T(w, graded), weyl) == w)) {
                detail = "weyl rep " + std::to_string(rep);
                return false;
            }
        }
        return true;
    });

    // 5. Confluence identity over Q(t), and the pair is not of Schwarz type.
    run(5, "confluence identity up to n = 20; non-Schwarz pair", 2.0, [](std::string& detail) {
        FieldPtr Kt = param_function_field(rational_field(), "t");
        AlgebraPtr a = make_algebra(Kt, {"x"}, CoeffMode::Poly);
        Scalar t = Scalar::parameter(Kt);
        Scalar one = Scalar::one(Kt);
        TwistSpec pair = TwistSpec::family(
            a, {Twist{0, t * t, Scalar::zero(Kt)}, Twist{0, t, Scalar::zero(Kt)}});
        Scalar conn = t * (t - one) / (t + one);
        CoeffElem x = CoeffElem::generator(a, 0);
        for (int n = 1; n <= 20; ++n) {
            CoeffElem xn = x.pow(n);
            CoeffElem lhs = pair.apply_derivation(0, xn);
            CoeffElem rhs = pair.apply_derivation(1, xn) +
                            x * pair.apply_derivation(1, pair.apply_derivation(1, xn)) * conn;
            if (!(lhs == rhs)) {
                detail = "n = " + std::to_string(n);
                return false;
            }
        }
        if (schwarz_check(pair).ok) {
            detail = "pair unexpectedly of Schwarz type";
            return false;
        }
        return true;
    });

    // 6. Invariants/constants equal the predicted subring slices, oracle-checked.
    run(6, "invariant and constant slices in F3 and F5", 5.0, [](std::string& detail) {
        struct Case {
            Ring r;
            int bound;
            std::vector<CoeffElem> predicted;
        };
        FieldPtr F3 = prime_field(3);
        FieldPtr F5 = prime_field(5);
        Ring f3 = ring(F3, CoeffMode::Poly, Scalar::one(F3), Scalar::one(F3));
        Ring f5 = ring(F5, CoeffMode::Poly, Scalar::from_int(F5, 2), Scalar::zero(F5));
        CoeffElem u = f3.x().pow(3) - f3.x();
        std::vector<Case> cases;
        cases.push_back({f3, 6, {CoeffElem::one(f3.alg), u, u.pow(2)}});
        cases.push_back({f5, 8, {CoeffElem::one(f5.alg), f5.x().pow(4), f5.x().pow(8)}});
        for (const Case& c : cases) {
            auto monos = bounded_monomials(c.r.alg, c.bound);
            oracle::Mat predicted;
            for (const auto& b : c.predicted) predicted.push_back(oracle::coords(b, monos));
            for (bool constants : {false, true}) {
                auto basis = constants ? constants_basis(c.r.tw, c.bound)
                                       : invariants_basis(c.r.tw, c.bound);
                oracle::Mat lib;
                for (const auto& b : basis) lib.push_back(oracle::coords(b, monos));
                std::vector<std::function<CoeffElem(const CoeffElem&)>> op;
                if (constants)
                    op.emplace_back(
                        [&](const CoeffElem& g) { return c.r.tw.apply_derivation(0, g); });
                else
                    op.emplace_back(
                        [&](const CoeffElem& g) { return g - c.r.tw.apply_endo(0, g); });
                oracle::Mat dense = oracle::dense_kernel(c.r.alg, monos, monos, op);
                if (!oracle::spans_equal(lib, predicted) || !oracle::spans_equal(lib, dense)) {
                    detail = c.r.alg->description() + (constants ? " constants" : " invariants");
                    return false;
                }
            }
        }
        return true;
    });

    // 7. Center and centralizer slices at bounds (8,8) over F5.
    run(7, "center = F5[x^4][T^4] and centralizer = F5[x][T^4] slices", 30.0,
        [](std::string& detail) {
            FieldPtr F5 = prime_field(5);
            Ring r = ring(F5, CoeffMode::Poly, Scalar::from_int(F5, 2), Scalar::zero(F5));
            OrePtr g = make_ore_algebra(r.alg, r.tw, OreKind::Graded);
            std::vector<Exps> monos = bounded_monomials(r.alg, 8);
            std::vector<Exps> opdegs;
            for (int b = 0; b <= 8; ++b) opdegs.push_back({b});
            auto predicted = [&](int xstep) {
                std::vector<OreOperator> out;
                for (int a = 0; a * xstep <= 8; ++a)
                    for (int b = 0; 4 * b <= 8; ++b)
                        out.push_back(OreOperator::term(
                            g, {4 * b},
                            CoeffElem::monomial(r.alg, {a * xstep}, Scalar::one(F5))));
                return out;
            };
            auto center = centralizer_basis(g, CentralizeMode::FullCenter, 8, 8);
            auto cz = centralizer_basis(g, CentralizeMode::CoeffsOnly, 8, 8);
            oracle::Mat mc = flatten_ops(center, monos, opdegs, F5);
            oracle::Mat mp = flatten_ops(predicted(4), monos, opdegs, F5);
            if (!oracle::spans_equal(mc, mp)) {
                detail = "full center mismatch";
                return false;
            }
            oracle::Mat mz = flatten_ops(cz, monos, opdegs, F5);
            oracle::Mat mq = flatten_ops(predicted(1), monos, opdegs, F5);
            if (!oracle::spans_equal(mz, mq)) {
                detail = "centralizer mismatch";
                return false;
            }
            return true;
        });

    // 8. Cohomology dimensions with stability flags, against the dense 1-sigma matrix.
    run(8, "sigma-cohomology of A over Q[x] and F5[x]", 5.0, [](std::string& detail) {
        Ring q2 = ring(rational_field(), CoeffMode::Poly,
                       Scalar::from_int(rational_field(), 2), Scalar::zero(rational_field()));
        SigmaModule m = make_sigma_module(q2.tw, {CoeffMatrix::identity(q2.alg, 1)});
        auto [h0, h1] = sigma_cohomology(m, 0, 10);
        if (h0.dimension != 1 || h1.dimension != 1 || !h0.stable || !h1.stable) {
            detail = "Q[x] dims/flags: h0 = " + std::to_string(h0.dimension) +
                     ", h1 = " + std::to_string(h1.dimension);
            return false;
        }
        FieldPtr F5 = prime_field(5);
        Ring f5 = ring(F5, CoeffMode::Poly, Scalar::from_int(F5, 2), Scalar::zero(F5));
        SigmaModule m5 = make_sigma_module(f5.tw, {CoeffMatrix::identity(f5.alg, 1)});
        auto [g0, g1] = sigma_cohomology(m5, 0, 8);
        if (g0.dimension != 3 || g1.dimension != 3) {
            detail = "F5[x] dims";
            return false;
        }
        for (int k = 0; k < 3; ++k)
            if (!(g0.basis[k][0] == f5.x().pow(4 * k)) || !(g1.basis[k][0] == f5.x().pow(4 * k))) {
                detail = "F5[x] basis";
                return false;
            }
        // dense oracle for both rings: kernel and cokernel of 1 - sigma
        for (const Ring* rr : {&q2, &f5}) {
            int bound = rr == &q2 ? 10 : 8;
            auto monos = bounded_monomials(rr->alg, bound);
            std::vector<std::function<CoeffElem(const CoeffElem&)>> op{
                [&](const CoeffElem& g) { return g - rr->tw.apply_endo(0, g); }};
            oracle::Mat ker = oracle::dense_kernel(rr->alg, monos, monos, op);
            auto [a0, a1] = sigma_cohomology(
                make_sigma_module(rr->tw, {CoeffMatrix::identity(rr->alg, 1)}), 0, bound);
            if (static_cast<int>(ker.size()) != a0.dimension) {
                detail = "kernel oracle disagrees";
                return false;
            }
            // graded operator: cokernel dim = dim V - rank of the image
            const FieldPtr& f = rr->alg->field;
            oracle::Mat img;
            for (const auto& e : monos) {
                CoeffElem v = op[0](CoeffElem::monomial(rr->alg, e, Scalar::one(f)));
                img.push_back(oracle::coords(v, monos));
            }
            int codim = static_cast<int>(monos.size()) - oracle::rank(img);
            if (codim != a1.dimension) {
                detail = "cokernel oracle disagrees";
                return false;
            }
        }
        return true;
    });

    // 9. The representation on A is a ring homomorphism (200 random triples per kind).
    run(9, "representation homomorphism on 200 random (P,Q,f)", 10.0, [](std::string& detail) {
        Rng rng(109);
        for (CoeffMode mode : {CoeffMode::Poly, CoeffMode::Laurent}) {
            Ring r = q_dilation(mode);
            for (OreKind kind : {OreKind::Graded, OreKind::Weyl}) {
                OrePtr alg = make_ore_algebra(r.alg, r.tw, kind);
                for (int rep = 0; rep < 50; ++rep) {
                    OreOperator p = random_operator(rng, alg, 3, 2, 2);
                    OreOperator q = random_operator(rng, alg, 3, 2, 2);
                    CoeffElem f = random_coeff(rng, r.alg, 3, 3);
                    if (!((p * q).apply(f) == p.apply(q.apply(f))) ||
                        !((p + q).apply(f) == p.apply(f) + q.apply(f))) {
                        detail = "rep " + std::to_string(rep);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    // 10. Module functor round trip and horizontal sections vs fixed points.
    run(10, "module functor on 30 random modules; kernels as spans", 30.0,
        [](std::string& detail) {
            Rng rng(113);
            FieldPtr Q = rational_field();
            FieldPtr F3 = prime_field(3);
            FieldPtr F5 = prime_field(5);
            std::vector<Ring> rings{
                ring(Q, CoeffMode::Laurent, Scalar::from_int(Q, 2), Scalar::zero(Q)),
                ring(F3, CoeffMode::Poly, Scalar::one(F3), Scalar::one(F3)),
                ring(F5, CoeffMode::Laurent, Scalar::from_int(F5, 2), Scalar::zero(F5))};
            for (int rep = 0; rep < 30; ++rep) {
                const Ring& r = rings[rep % rings.size()];
                int rank = 1 + static_cast<int>(rng.below(3));
                SigmaModule m = make_sigma_module(r.tw, {random_matrix(rng, r.alg, rank, 1)});
                DiffModule d = sigma_to_diff(m);
                if (!(diff_to_sigma(d).S[0] == m.S[0])) {
                    detail = "round trip, rep " + std::to_string(rep);
                    return false;
                }
                const int bound = 5;
                KernelReport hs = horizontal_sections(d, bound);
                KernelReport fp = sigma_fixed_points(m, bound);
                auto monos = bounded_monomials(r.alg, bound);
                oracle::Mat a, b;
                for (const auto& v : hs.basis) a.push_back(oracle::coords_vec(v, monos));
                for (const auto& v : fp.basis) b.push_back(oracle::coords_vec(v, monos));
                if (!oracle::spans_equal(a, b)) {
                    detail = "kernel spans, rep " + std::to_string(rep);
                    return false;
                }
            }
            return true;
        });

    if (g_failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
