#include "nullflat/suites.hpp"

#include <cmath>
#include <random>

#include "nullflat/curve_spec.hpp"
#include "nullflat/errors.hpp"
#include "nullflat/flat_maps.hpp"
#include "nullflat/json_out.hpp"
#include "nullflat/oracle.hpp"
#include "nullflat/planner.hpp"
#include "nullflat/pseudo.hpp"
#include "nullflat/sampling.hpp"
#include "nullflat/verification.hpp"

namespace nullflat {

namespace {

constexpr int kDetailCap = 20;

void record(SuiteResult& r, bool ok, const std::string& detail) {
    ++r.cases;
    if (ok) {
        ++r.passed;
    } else {
        ++r.failed;
        if (static_cast<int>(r.details.size()) < kDetailCap) r.details.push_back(detail);
    }
}

std::string fmt(double v) { return JsonOut::format_double(v); }

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

CurveSpec random_poly_spec(std::mt19937_64& rng, int min_deg, int max_deg) {
    const int deg = uniform_int(rng, min_deg, max_deg);
    std::vector<double> coeffs(static_cast<size_t>(deg) + 1);
    for (double& c : coeffs) c = uniform(rng, -2.0, 2.0);
    if (deg > 0 && std::abs(coeffs.back()) < 0.25) {
        coeffs.back() = coeffs.back() < 0 ? -0.25 : 0.25;
    }
    return CurveSpec::polynomial(coeffs);
}

// Generic analytic input with scales kept moderate so relative tolerances
// stay meaningful over tau in [-2, 2]. A positive min_deg guarantees
// curvature: the polynomial part alone keeps the inversion divisor from
// vanishing identically.
CurveSpec random_analytic(std::mt19937_64& rng, int min_deg = 0) {
    CurveSpec spec = random_poly_spec(rng, min_deg, 5);
    if (uniform_int(rng, 0, 1)) {
        spec.add_term(SinTerm{uniform(rng, -1.5, 1.5), uniform(rng, 0.3, 2.0)});
    }
    if (uniform_int(rng, 0, 1)) {
        spec.add_term(CosTerm{uniform(rng, -1.5, 1.5), uniform(rng, 0.3, 2.0)});
    }
    if (uniform_int(rng, 0, 1)) {
        spec.add_term(ExpTerm{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)});
    }
    return spec;
}

// Extra coordinate with slope-dominant velocity: |a w| <= |slope| / 4, so
// the squared-speed sum stays away from zero for every argument.
CurveSpec random_extra(std::mt19937_64& rng) {
    const double slope = (uniform_int(rng, 0, 1) ? 1.0 : -1.0) * uniform(rng, 0.6, 2.0);
    CurveSpec spec = CurveSpec::polynomial({uniform(rng, -1.0, 1.0), slope});
    const double freq = uniform(rng, 0.3, 1.5);
    const double amp = uniform(rng, 0.0, 0.5) * std::abs(slope) / (2.0 * freq);
    spec.add_term(SinTerm{amp, freq});
    return spec;
}

// Reparametrization with |sigma'| bounded away from zero; increasing on
// request (required whenever the speed radical is in play).
CurveSpec random_sigma(std::mt19937_64& rng, bool increasing) {
    double c1 = uniform(rng, 0.7, 1.8);
    if (!increasing && uniform_int(rng, 0, 1)) c1 = -c1;
    CurveSpec spec = CurveSpec::polynomial({uniform(rng, -0.5, 0.5), c1});
    const double freq = uniform(rng, 0.3, 1.2);
    const double amp = uniform(rng, 0.0, 0.4) * std::abs(c1) / (2.0 * freq);
    spec.add_term(SinTerm{amp, freq});
    return spec;
}

exact::Rational random_rational(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
    exact::Rational q(uniform_int(rng, num_lo, num_hi), uniform_int(rng, 1, den_hi));
    q.canonicalize();
    return q;
}

exact::RatPoly random_rat_poly(std::mt19937_64& rng, int min_deg, int max_deg) {
    const int deg = uniform_int(rng, min_deg, max_deg);
    std::vector<exact::Rational> coeffs(static_cast<size_t>(deg) + 1);
    for (exact::Rational& c : coeffs) c = random_rational(rng, -9, 9, 9);
    if (coeffs.back() == 0) coeffs.back() = 1;
    return exact::RatPoly(std::move(coeffs));
}

bool residuals_ok(const SampledCurve& curve, std::string* msg) {
    for (const CurveSample& s : curve.samples) {
        double vel2 = 0.0;
        for (double v : s.xdot) vel2 += v * v;
        if (std::abs(s.residual) > 1e-10 * std::max(1.0, vel2)) {
            *msg = "residual " + fmt(s.residual) + " at tau=" + fmt(s.tau);
            return false;
        }
    }
    return true;
}

SuiteResult suite_reference_constants() {
    SuiteResult r{.suite = "reference_constants", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1001);
    // Products of the derived lines over {u, u', v, v'} in the two-line
    // space; rows/columns in that order.
    const double expect[4][4] = {
        {0.0, 0.0, 0.0, 2.0},
        {0.0, 0.0, -2.0, 0.0},
        {0.0, -2.0, 0.0, 0.0},
        {2.0, 0.0, 0.0, 0.0},
    };
    for (int i = 0; i < 100; ++i) {
        const double tau = uniform(rng, -1.0, 1.0);

        const VecJet u = basis_u_r21(tau, 1);
        const PseudoVec u0 = u.value();
        const PseudoVec u1 = u.derivative(1);
        const bool ok3 = std::abs(inner(u0, u0)) <= 1e-14 &&
                         std::abs(inner(u1, u1) + 4.0) <= 1e-14;
        record(r, ok3,
               "three-space generator products off at tau=" + fmt(tau) +
                   ": (u,u)=" + fmt(inner(u0, u0)) + ", (u',u')=" + fmt(inner(u1, u1)));

        const auto [a, b] = basis_uv_r22(tau, 1);
        const PseudoVec rows[4] = {a.value(), a.derivative(1), b.value(), b.derivative(1)};
        bool ok4 = true;
        for (int p = 0; p < 4 && ok4; ++p) {
            for (int q = 0; q < 4 && ok4; ++q) {
                ok4 = std::abs(inner(rows[p], rows[q]) - expect[p][q]) <= 1e-14;
            }
        }
        record(r, ok4, "two-line product table off at tau=" + fmt(tau));
    }
    return r;
}

SuiteResult suite_exact_null_identity() {
    SuiteResult r{.suite = "exact_null_identity", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1002);
    using exact::RatPoly;
    using exact::Rational;

    for (int i = 0; i < 50; ++i) {
        const RatPoly f = random_rat_poly(rng, 0, 10);
        const RatPoly res = exact::poly_null_residual(exact::poly_expand_r21(f));
        record(r, res.is_zero(), "three-space residual nonzero: " + res.to_string());
    }
    for (int i = 0; i < 50; ++i) {
        const RatPoly f = random_rat_poly(rng, 0, 10);
        const RatPoly g = random_rat_poly(rng, 0, 10);
        const RatPoly res = exact::poly_null_residual(exact::poly_expand_r22(f, g));
        record(r, res.is_zero(), "two-line residual nonzero: " + res.to_string());
    }
    for (int i = 0; i < 20; ++i) {
        const RatPoly f = random_rat_poly(rng, 0, 8);
        const Rational delta = random_rational(rng, -9, 9, 9);
        const RatPoly res =
            exact::poly_null_residual(exact::poly_expand_delta_const(f, delta));
        const Rational want = -delta * delta;
        record(r, res == RatPoly::constant(want),
               "constant-speed residual is " + res.to_string() + ", want " + want.get_str());
    }
    // Slope patterns whose squared sums are perfect squares, so the radical
    // stays rational.
    const std::vector<std::vector<int>> patterns = {{1}, {3, 4}, {1, 2, 2}};
    for (int i = 0; i < 20; ++i) {
        const RatPoly f = random_rat_poly(rng, 0, 8);
        const Rational scale = random_rational(rng, 1, 5, 3);
        std::vector<RatPoly> extras;
        for (int s : patterns[static_cast<size_t>(i) % patterns.size()]) {
            extras.push_back(RatPoly({random_rational(rng, -5, 5, 5), Rational(s) * scale}));
        }
        const RatPoly res = exact::poly_null_residual(
            exact::poly_expand_r2n_linear_extras(f, extras));
        record(r, res.is_zero(), "extras-map residual nonzero: " + res.to_string());
    }
    const RatPoly witness = exact::typo_witness();
    const RatPoly want_witness({Rational(0), Rational(0), Rational(-24), Rational(16),
                                Rational(-4)});
    record(r, !witness.is_zero() && witness == want_witness,
           "uncorrected-map witness is " + witness.to_string());
    return r;
}

SuiteResult suite_numeric_null_identity() {
    SuiteResult r{.suite = "numeric_null_identity", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1003);
    const GridSpec grid{-2.0, 2.0, 1000};

    for (int i = 0; i < 25; ++i) {
        FlatInputR21 input;
        input.f = random_analytic(rng);
        std::string msg;
        const bool ok = residuals_ok(generate(FlatInput(input), grid), &msg);
        record(r, ok, "plain three-space input " + std::to_string(i) + ": " + msg);
    }
    for (int i = 0; i < 25; ++i) {
        const CurveSpec f = random_analytic(rng);
        const CurveSpec d = random_analytic(rng);
        bool ok = true;
        std::string msg;
        for (double tau : grid_points(grid)) {
            const VecJet germ = delta_map(f.eval_jet(tau, 3), d.eval_jet(tau, 1), tau);
            const double res = null_residual(germ).value();
            const double dv = d.eval(tau);
            double vel2 = 0.0;
            for (double v : germ.derivative(1).components) vel2 += v * v;
            if (std::abs(res + dv * dv) > 1e-10 * std::max(1.0, vel2)) {
                ok = false;
                msg = "residual " + fmt(res) + " against speed " + fmt(dv) +
                      " at tau=" + fmt(tau);
                break;
            }
        }
        record(r, ok, "prescribed-speed input " + std::to_string(i) + ": " + msg);
    }
    for (int i = 0; i < 25; ++i) {
        FlatInputR21 input;
        input.f = random_analytic(rng);
        const int n = 2 + i % 3;
        for (int e = 0; e + 1 < n; ++e) input.extras.push_back(random_extra(rng));
        std::string msg;
        const bool ok = residuals_ok(generate(FlatInput(input), grid), &msg);
        record(r, ok,
               "extras input " + std::to_string(i) + " (n=" + std::to_string(n) + "): " + msg);
    }
    for (int i = 0; i < 25; ++i) {
        FlatInputR22 input;
        input.f = random_analytic(rng);
        input.g = random_analytic(rng);
        std::string msg;
        const bool ok = residuals_ok(generate(FlatInput(input), grid), &msg);
        record(r, ok, "two-line input " + std::to_string(i) + ": " + msg);
    }
    return r;
}

SuiteResult suite_inversion_roundtrip() {
    SuiteResult r{.suite = "inversion_roundtrip", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1004);
    const GridSpec grid{-1.5, 1.5, 300};

    for (int i = 0; i < 40; ++i) {
        FlatInput input;
        CurveSpec f;
        std::optional<CurveSpec> g;
        std::optional<CurveSpec> sigma;
        const int kind = i % 4;
        if (kind == 0 || kind == 1) {
            FlatInputR21 in;
            in.f = f = random_analytic(rng, 3);
            if (kind == 1) in.sigma = sigma = random_sigma(rng, false);
            input = in;
        } else if (kind == 2) {
            FlatInputR21 in;
            in.f = f = random_analytic(rng, 3);
            const int n = 2 + (i / 4) % 2;
            for (int e = 0; e + 1 < n; ++e) in.extras.push_back(random_extra(rng));
            in.sigma = sigma = random_sigma(rng, true);
            input = in;
        } else {
            FlatInputR22 in;
            in.f = f = random_analytic(rng, 2);
            g = random_analytic(rng, 2);
            in.g = *g;
            in.sigma = sigma = random_sigma(rng, false);
            input = in;
        }

        const SampledCurve curve = generate(input, grid);
        int checked = 0;
        bool ok = true;
        std::string msg;
        for (int s = 0; s < static_cast<int>(curve.samples.size()) && ok; ++s) {
            const VecJet germ = curve.germ_at(s);
            double vel2 = 0.0;
            for (double v : curve.samples[static_cast<size_t>(s)].xdot) vel2 += v * v;
            const double margin =
                std::max(kDefaultEpsDen, 1e-5 * std::max(1.0, std::sqrt(vel2)));

            InversionResult inv;
            if (curve.space == SpaceTag::R22) {
                const double d1 = germ.components[0][1] + germ.components[2][1];
                const double d2 = germ.components[1][1] + germ.components[3][1];
                if (std::max(std::abs(d1), std::abs(d2)) < margin) continue;
                inv = invert_r22(germ);
            } else {
                const double den = germ.components[0][1] + germ.components[2][1];
                if (std::abs(den) < margin) continue;
                inv = invert_r21(germ, germ_delta(germ));
            }
            ++checked;
            const double tau = curve.samples[static_cast<size_t>(s)].tau;
            const double s_expected = sigma ? sigma->eval(tau) : tau;
            const double f_expected = f.eval(s_expected);
            if (std::abs(inv.tau_hat - s_expected) > 1e-9 * std::max(1.0, std::abs(s_expected))) {
                ok = false;
                msg = "parameter " + fmt(inv.tau_hat) + " vs " + fmt(s_expected) +
                      " at tau=" + fmt(tau);
            } else if (std::abs(inv.f_hat - f_expected) >
                       1e-9 * std::max(1.0, std::abs(f_expected))) {
                ok = false;
                msg = "f " + fmt(inv.f_hat) + " vs " + fmt(f_expected) + " at tau=" + fmt(tau);
            } else if (g) {
                const double g_expected = g->eval(s_expected);
                if (std::abs(*inv.g_hat - g_expected) >
                    1e-9 * std::max(1.0, std::abs(g_expected))) {
                    ok = false;
                    msg = "g " + fmt(*inv.g_hat) + " vs " + fmt(g_expected) +
                          " at tau=" + fmt(tau);
                }
            }
        }
        if (ok && checked < 30) {
            ok = false;
            msg = "only " + std::to_string(checked) + " nondegenerate samples";
        }
        record(r, ok, "input " + std::to_string(i) + ": " + msg);
    }

    using exact::RatPoly;
    using exact::Rational;
    for (int i = 0; i < 20; ++i) {
        const RatPoly f = random_rat_poly(rng, 3, 8);
        const exact::PolyInversion inv = exact::poly_invert_roundtrip_r21(f);
        const bool ok = inv.flat_raw == f * Rational(2) && inv.flat_normalized == f &&
                        inv.tau_num == RatPoly::variable() * inv.tau_den;
        record(r, ok, "exact three-space inversion " + std::to_string(i) +
                          ": raw=" + inv.flat_raw.to_string());
    }
    for (int i = 0; i < 10; ++i) {
        const RatPoly f = random_rat_poly(rng, 2, 8);
        const RatPoly g = random_rat_poly(rng, 0, 8);
        const exact::PolyInversion inv = exact::poly_invert_roundtrip_r22(f, g);
        const bool ok = inv.flat_raw == f && inv.flat_normalized == f && inv.g &&
                        *inv.g == g && inv.tau_num == RatPoly::variable() * inv.tau_den;
        record(r, ok, "exact two-line inversion " + std::to_string(i) +
                          ": f=" + inv.flat_raw.to_string());
    }
    return r;
}

SuiteResult suite_rank_facts() {
    SuiteResult r{.suite = "rank_facts", .cases = 0, .passed = 0, .failed = 0, .details = {}};
    std::mt19937_64 rng(1005);

    for (int i = 0; i < 100; ++i) {
        const double tau = uniform(rng, -10.0, 10.0);
        const double det = jacobian_det_r21(tau);
        record(r, std::abs(det - 8.0) <= 1e-10,
               "determinant " + fmt(det) + " at tau=" + fmt(tau));
    }

    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 5; ++i) {
            const double tau = uniform(rng, -2.0, 2.0);
            FlatInputR21 input;
            input.f = random_analytic(rng);
            for (int e = 0; e + 1 < n; ++e) {
                input.extras.push_back(uniform_int(rng, 0, 1)
                                           ? random_extra(rng)
                                           : CurveSpec::constant(uniform(rng, -2.0, 2.0)));
            }
            const SpaceTag space = n == 1 ? SpaceTag::R21 : SpaceTag::R2N;
            const RankReport rep = rank_check(space, n, tau, 2, FlatInput(input));
            record(r, rep.rank == n + 2,
                   "2-jet map rank " + std::to_string(rep.rank) + " at n=" + std::to_string(n) +
                       ", want " + std::to_string(n + 2));
        }
    }
    for (int i = 0; i < 5; ++i) {
        const double tau = uniform(rng, -2.0, 2.0);
        FlatInputR22 input;
        input.f = random_analytic(rng);
        input.g = random_analytic(rng);
        const RankReport rep = rank_check(SpaceTag::R22, 2, tau, 1, FlatInput(input));
        record(r, rep.rank == 4,
               "two-line 1-jet map rank " + std::to_string(rep.rank) + ", want 4");
    }

    for (int n = 1; n <= 4; ++n) {
        const SpaceTag space = n == 1 ? SpaceTag::R21 : SpaceTag::R2N;
        const RankReport rep = rank_check(space, n, 0.3, 2);
        record(r, rep.rank == n + 2,
               "built-in 2-jet probe rank " + std::to_string(rep.rank) + " at n=" +
                   std::to_string(n) + ", want " + std::to_string(n + 2));
    }
    // Depth-1 probe on the constant-extras stratum: one direction short.
    for (int n = 1; n <= 3; ++n) {
        const SpaceTag space = n == 1 ? SpaceTag::R21 : SpaceTag::R2N;
        const RankReport rep = rank_check(space, n, 0.4, 1);
        record(r, rep.rank == n + 1,
               "built-in 1-jet probe rank " + std::to_string(rep.rank) + " at n=" +
                   std::to_string(n) + ", want " + std::to_string(n + 1));
    }
    {
        const RankReport rep = rank_check(SpaceTag::R22, 2, 0.5, 1);
        record(r, rep.rank == 4,
               "built-in two-line 1-jet probe rank " + std::to_string(rep.rank) + ", want 4");
    }
    return r;
}

SuiteResult suite_planner_reachability() {
    SuiteResult r{.suite = "planner_reachability", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1006);

    for (int i = 0; i < 100; ++i) {
        const bool two_line = i % 2 == 1;
        const int dim = two_line ? 4 : 3;
        BoundaryProblem problem;
        problem.space = two_line ? SpaceTag::R22 : SpaceTag::R21;
        problem.from.signature = sig_r2n(two_line ? 2 : 1);
        problem.to.signature = problem.from.signature;
        for (int c = 0; c < dim; ++c) {
            problem.from.components.push_back(uniform(rng, -10.0, 10.0));
            problem.to.components.push_back(uniform(rng, -10.0, 10.0));
        }
        problem.t0 = uniform(rng, -2.0, 0.0);
        problem.t1 = problem.t0 + uniform(rng, 0.5, 3.0);

        const PlanResult plan_result = plan(problem);
        std::string msg;
        bool ok = plan_result.endpoint_error_start <= 1e-9 &&
                  plan_result.endpoint_error_end <= 1e-9;
        if (!ok) {
            msg = "endpoint errors " + fmt(plan_result.endpoint_error_start) + ", " +
                  fmt(plan_result.endpoint_error_end);
        } else {
            ok = residuals_ok(plan_result.curve, &msg);
        }
        record(r, ok, "endpoint pair " + std::to_string(i) + ": " + msg);
    }

    // Closed-form fits for two reference displacement vectors on [0, 1].
    const struct {
        std::vector<double> to;
        std::vector<double> coeffs;
    } examples[] = {
        {{-2.0, 0.0, 2.0}, {0.0, 0.0, 0.0, 10.0, -15.0, 6.0}},
        {{0.0, 2.0, 2.0}, {0.0, 0.0, 0.0, 0.5, -1.0, 0.5}},
    };
    for (const auto& example : examples) {
        BoundaryProblem problem;
        problem.space = SpaceTag::R21;
        problem.from = PseudoVec{{0.0, 0.0, 0.0}, sig_r2n(1)};
        problem.to = PseudoVec{example.to, sig_r2n(1)};
        problem.t0 = 0.0;
        problem.t1 = 1.0;
        const PlanResult plan_result = plan_r21(problem);
        const auto* poly = std::get_if<PolyTerm>(&plan_result.f.terms().front());
        bool ok = poly != nullptr && poly->coeffs.size() == example.coeffs.size();
        if (ok) {
            for (size_t c = 0; c < example.coeffs.size(); ++c) {
                ok = ok && std::abs(poly->coeffs[c] - example.coeffs[c]) <= 1e-12;
            }
        }
        record(r, ok, "reference fit mismatch: got " + plan_result.f.to_string());
    }
    return r;
}

SuiteResult suite_jet_consistency() {
    SuiteResult r{.suite = "jet_consistency", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1007);

    for (int i = 0; i < 60; ++i) {
        CurveSpec spec;
        switch (i % 4) {
            case 0: spec = random_poly_spec(rng, 0, 5); break;
            case 1:
                spec = CurveSpec();
                spec.add_term(SinTerm{uniform(rng, -1.5, 1.5), uniform(rng, 0.3, 2.0)});
                spec.add_term(CosTerm{uniform(rng, -1.5, 1.5), uniform(rng, 0.3, 2.0)});
                break;
            case 2:
                spec = CurveSpec();
                spec.add_term(ExpTerm{uniform(rng, -1.5, 1.5), uniform(rng, -1.2, 1.2)});
                break;
            default: spec = random_analytic(rng); break;
        }
        const double tau = uniform(rng, -2.0, 2.0);
        const double worst = fd_crosscheck(spec, tau, 3);
        record(r, worst <= 1e-6,
               "difference stencil deviation " + fmt(worst) + " for " + spec.to_string() +
                   " at tau=" + fmt(tau));
    }

    for (int i = 0; i < 40; ++i) {
        std::vector<double> derivs(static_cast<size_t>(kDefaultJetOrder) + 1);
        for (double& d : derivs) d = uniform(rng, -2.0, 2.0);
        derivs[0] = (uniform_int(rng, 0, 1) ? 1.0 : -1.0) * uniform(rng, 0.5, 2.0);
        const Jet g{std::vector<double>(derivs)};
        const Jet s = g * g;
        const Jet root = sqrt(s);
        const Jet back = root * root;
        bool ok = true;
        for (int k = 0; k <= s.order() && ok; ++k) {
            ok = std::abs(back[k] - s[k]) <= 1e-12 * std::max(1.0, std::abs(s[k]));
        }
        record(r, ok, "jet sqrt round-trip " + std::to_string(i) + " drifted");
    }

    {
        bool threw = false;
        try {
            sqrt(Jet::constant(-1.0, 3));
        } catch (const DegeneracyError& e) {
            threw = e.kind() == Degeneracy::NonPositiveRadicand;
        }
        record(r, threw, "jet sqrt accepted a negative radicand");
    }
    {
        bool threw = false;
        try {
            sqrt(Jet::constant(0.0, 3));
        } catch (const DegeneracyError& e) {
            threw = e.kind() == Degeneracy::NonPositiveRadicand;
        }
        record(r, threw, "jet sqrt accepted a zero radicand");
    }
    return r;
}

SuiteResult suite_gauge_invariance() {
    SuiteResult r{.suite = "gauge_invariance", .cases = 0, .passed = 0, .failed = 0,
                  .details = {}};
    std::mt19937_64 rng(1008);
    const GridSpec grid{-1.5, 1.5, 1000};

    for (int i = 0; i < 25; ++i) {
        FlatInput input;
        CurveSpec sigma;
        const int kind = i % 3;
        if (kind == 0) {
            FlatInputR21 in;
            in.f = random_analytic(rng);
            input = in;
            sigma = random_sigma(rng, false);
        } else if (kind == 1) {
            FlatInputR21 in;
            in.f = random_analytic(rng);
            const int n = 2 + i % 2;
            for (int e = 0; e + 1 < n; ++e) in.extras.push_back(random_extra(rng));
            input = in;
            sigma = random_sigma(rng, true);
        } else {
            FlatInputR22 in;
            in.f = random_analytic(rng);
            in.g = random_analytic(rng);
            input = in;
            sigma = random_sigma(rng, false);
        }
        const GaugeReport rep = gauge_orbit_check(input, sigma, grid);
        const bool ok = rep.passed && rep.inversion_checked;
        record(r, ok,
               "pair " + std::to_string(i) + ": residual_rel=" + fmt(rep.max_residual_rel) +
                   " tau_err=" + fmt(rep.max_tau_error) + " flat_err=" +
                   fmt(rep.max_flat_error) + (rep.inversion_checked ? "" : " (not inverted)"));
    }
    return r;
}

using SuiteFn = SuiteResult (*)();

struct SuiteEntry {
    const char* name;
    SuiteFn run;
};

constexpr SuiteEntry kSuites[] = {
    {"reference_constants", suite_reference_constants},
    {"exact_null_identity", suite_exact_null_identity},
    {"numeric_null_identity", suite_numeric_null_identity},
    {"inversion_roundtrip", suite_inversion_roundtrip},
    {"rank_facts", suite_rank_facts},
    {"planner_reachability", suite_planner_reachability},
    {"jet_consistency", suite_jet_consistency},
    {"gauge_invariance", suite_gauge_invariance},
};

}  // namespace

std::vector<std::string> verification_suite_names() {
    std::vector<std::string> names;
    for (const SuiteEntry& entry : kSuites) names.emplace_back(entry.name);
    return names;
}

std::optional<SuiteResult> run_verification_suite(const std::string& name) {
    for (const SuiteEntry& entry : kSuites) {
        if (name == entry.name) return entry.run();
    }
    return std::nullopt;
}

std::vector<SuiteResult> run_verification_suites() {
    std::vector<SuiteResult> results;
    for (const SuiteEntry& entry : kSuites) results.push_back(entry.run());
    return results;
}

}  // namespace nullflat
