#include "nullflat/verification.hpp"

#include <quadmath.h>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "nullflat/errors.hpp"

namespace nullflat {

namespace {

// Slot-level model of a position map: the formula applied to raw derivative
// values ("slots") of its functional inputs, with the evaluation point as
// the zeroth slot of the reparametrization. Slots above jet_depth are
// frozen at the values induced by the probe input.
struct SlotModel {
    SpaceTag space = SpaceTag::R21;
    int n = 1;
    // values[i][k]: k-th derivative slot of functional input i. Input 0 is
    // sigma, input 1 is f, the rest are g (two-line map) or the extras.
    std::vector<std::vector<double>> values;
    int jet_depth = 2;

    std::vector<double> position() const {
        const double s = values[0][0];
        std::vector<double> pos;
        if (space == SpaceTag::R22) {
            const auto [ub, vb] = basis_uv_r22(s, 1);
            const double f0 = values[1][0], f1 = values[1][1];
            const double g0 = values[2][0], g1 = values[2][1];
            pos.resize(4);
            for (int i = 0; i < 4; ++i) {
                pos[static_cast<size_t>(i)] =
                    ub.components[static_cast<size_t>(i)][0] * f1 -
                    ub.components[static_cast<size_t>(i)][1] * f0 +
                    vb.components[static_cast<size_t>(i)][0] * g1 -
                    vb.components[static_cast<size_t>(i)][1] * g0;
            }
            return pos;
        }
        const VecJet ub = basis_u_r21(s, 2);
        const double f0 = values[1][0], f1 = values[1][1], f2 = values[1][2];
        double radicand = 0.0;
        for (size_t e = 2; e < values.size(); ++e) {
            radicand += values[e][1] * values[e][1];
        }
        const double delta = std::sqrt(radicand);
        pos.resize(static_cast<size_t>(n) + 2);
        for (int i = 0; i < 3; ++i) {
            const Jet& u = ub.components[static_cast<size_t>(i)];
            pos[static_cast<size_t>(i)] =
                u[0] * f2 - u[1] * f1 + u[2] * f0 + 0.5 * u[0] * delta;
        }
        for (size_t e = 2; e < values.size(); ++e) {
            pos[e + 1] = values[e][0];
        }
        return pos;
    }
};

std::vector<double> jet_values(const Jet& jet, int count) {
    std::vector<double> out(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) out[static_cast<size_t>(k)] = jet[k];
    return out;
}

SlotModel induced_model(SpaceTag space, int n, double tau, int jet_depth,
                        const FlatInput& input) {
    SlotModel model;
    model.space = space;
    model.n = n;
    model.jet_depth = jet_depth;

    const std::optional<CurveSpec>* sigma = nullptr;
    if (const auto* r21 = std::get_if<FlatInputR21>(&input)) {
        sigma = &r21->sigma;
    } else {
        sigma = &std::get<FlatInputR22>(input).sigma;
    }
    const Jet sj = *sigma ? (*sigma)->eval_jet(tau, jet_depth)
                          : Jet::variable(tau, jet_depth);
    model.values.push_back(jet_values(sj, jet_depth + 1));
    const double s0 = sj.value();

    if (space == SpaceTag::R22) {
        const auto& in = std::get<FlatInputR22>(input);
        const int need = std::max(jet_depth, 1);
        model.values.push_back(jet_values(in.f.eval_jet(s0, need), need + 1));
        model.values.push_back(jet_values(in.g.eval_jet(s0, need), need + 1));
        return model;
    }
    const auto& in = std::get<FlatInputR21>(input);
    const int need_f = std::max(jet_depth, 2);
    model.values.push_back(jet_values(in.f.eval_jet(s0, need_f), need_f + 1));
    const int need_w = std::max(jet_depth, 1);
    for (const CurveSpec& w : in.extras) {
        model.values.push_back(jet_values(w.eval_jet(s0, need_w), need_w + 1));
    }
    return model;
}

void check_rank_args(SpaceTag space, int n, int jet_depth, const FlatInput& input) {
    if (jet_depth < 0 || jet_depth > kDefaultJetOrder) {
        throw std::invalid_argument("rank_check: jet_depth must be in [0, " +
                                    std::to_string(kDefaultJetOrder) + "]");
    }
    if (space == SpaceTag::R22) {
        if (n != 2) throw std::invalid_argument("rank_check: the two-line map requires n == 2");
        if (!std::holds_alternative<FlatInputR22>(input)) {
            throw std::invalid_argument("rank_check: space/input mismatch");
        }
        return;
    }
    const auto* r21 = std::get_if<FlatInputR21>(&input);
    if (!r21) throw std::invalid_argument("rank_check: space/input mismatch");
    if (space == SpaceTag::R21 && n != 1) {
        throw std::invalid_argument("rank_check: r21 requires n == 1");
    }
    if (space == SpaceTag::R2N && n < 2) {
        throw std::invalid_argument("rank_check: r2n requires n >= 2");
    }
    if (r21->n() != n) {
        throw std::invalid_argument("rank_check: input has n = " + std::to_string(r21->n()) +
                                    ", expected " + std::to_string(n));
    }
}

// quad-precision evaluation of a CurveSpec, used only by the difference
// stencils so their own rounding stays far below the comparison tolerance.
__float128 eval_quad(const CurveSpec& spec, __float128 t) {
    __float128 acc = 0;
    for (const SpecTerm& term : spec.terms()) {
        if (const auto* p = std::get_if<PolyTerm>(&term)) {
            __float128 horner = 0;
            for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it) {
                horner = horner * t + (__float128)(*it);
            }
            acc += horner;
        } else if (const auto* s = std::get_if<SinTerm>(&term)) {
            acc += (__float128)s->amplitude * sinq((__float128)s->frequency * t);
        } else if (const auto* c = std::get_if<CosTerm>(&term)) {
            acc += (__float128)c->amplitude * cosq((__float128)c->frequency * t);
        } else {
            const auto& e = std::get<ExpTerm>(term);
            acc += (__float128)e.amplitude * expq((__float128)e.rate * t);
        }
    }
    return acc;
}

}  // namespace

double jacobian_det_r21(double tau) {
    const VecJet ub = basis_u_r21(tau, 2);
    // Columns [u'' | -u' | u].
    double m[3][3];
    for (int i = 0; i < 3; ++i) {
        const Jet& u = ub.components[static_cast<size_t>(i)];
        m[i][0] = u[2];
        m[i][1] = -u[1];
        m[i][2] = u[0];
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RankReport rank_check(SpaceTag space, int n, double tau, int jet_depth) {
    if (space == SpaceTag::R22) {
        FlatInputR22 input;
        input.f = CurveSpec::polynomial({0.0, 0.0, 0.0, 1.0});
        input.g = CurveSpec::polynomial({0.0, 0.0, 1.0});
        return rank_check(space, n, tau, jet_depth, FlatInput(input));
    }
    FlatInputR21 input;
    input.f = CurveSpec::polynomial({0.0, 0.0, 0.0, 1.0, 1.0});
    // Constant extras: the canonical probe sits on the stratum where the
    // depth-1 deficiency is visible.
    for (int e = 0; e + 1 < n; ++e) {
        input.extras.push_back(CurveSpec::constant(static_cast<double>(e + 1)));
    }
    return rank_check(space, n, tau, jet_depth, FlatInput(input));
}

RankReport rank_check(SpaceTag space, int n, double tau, int jet_depth,
                      const FlatInput& input) {
    check_rank_args(space, n, jet_depth, input);
    SlotModel model = induced_model(space, n, tau, jet_depth, input);

    const int rows = n + 2;
    const int cols = static_cast<int>(model.values.size()) * (jet_depth + 1);
    Eigen::MatrixXd jac(rows, cols);
    int col = 0;
    for (size_t fi = 0; fi < model.values.size(); ++fi) {
        for (int k = 0; k <= jet_depth; ++k, ++col) {
            double& slot = model.values[fi][static_cast<size_t>(k)];
            const double base = slot;
            const double h = 1e-6 * std::max(1.0, std::abs(base));
            slot = base + h;
            const std::vector<double> plus = model.position();
            slot = base - h;
            const std::vector<double> minus = model.position();
            slot = base;
            for (int r = 0; r < rows; ++r) {
                jac(r, col) = (plus[static_cast<size_t>(r)] - minus[static_cast<size_t>(r)]) /
                              (2.0 * h);
            }
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    RankReport report;
    report.space = space;
    report.n = n;
    report.tau = tau;
    report.jet_depth = jet_depth;
    const auto& sv = svd.singularValues();
    report.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double sv_max = report.singular_values.empty() ? 0.0 : report.singular_values.front();
    report.threshold = 1e-8 * sv_max;
    report.rank = 0;
    for (double s : report.singular_values) {
        if (s > report.threshold && s > 0.0) ++report.rank;
    }
    return report;
}

GaugeReport gauge_orbit_check(const FlatInput& input, const CurveSpec& sigma,
                              const GridSpec& grid, int order) {
    if (order < 1) throw std::invalid_argument("gauge_orbit_check: order must be >= 1");

    FlatInput composed = input;
    bool needs_orientation = false;
    if (auto* r21 = std::get_if<FlatInputR21>(&composed)) {
        if (r21->sigma) {
            throw std::invalid_argument(
                "gauge_orbit_check: input must not carry its own reparametrization");
        }
        r21->sigma = sigma;
        for (const CurveSpec& w : r21->extras) {
            if (!w.is_constant()) needs_orientation = true;
        }
    } else {
        auto& r22 = std::get<FlatInputR22>(composed);
        if (r22.sigma) {
            throw std::invalid_argument(
                "gauge_orbit_check: input must not carry its own reparametrization");
        }
        r22.sigma = sigma;
    }

    const std::vector<double> taus = grid_points(grid);
    GaugeReport report;
    report.samples = static_cast<int>(taus.size());

    // The speed radical of the reparametrized germ is |sigma'| times the
    // underlying one; recovery through the nonnegative root needs sigma
    // increasing when the radical is in play.
    if (needs_orientation) {
        for (double tau : taus) {
            if (sigma.eval_jet(tau, 1)[1] <= 0.0) {
                report.inversion_checked = false;
                break;
            }
        }
    }

    for (double tau : taus) {
        VecJet germ;
        if (const auto* r21 = std::get_if<FlatInputR21>(&composed)) {
            germ = r2n_map(*r21, tau, order);
        } else {
            germ = r22_map(std::get<FlatInputR22>(composed), tau, order);
        }

        double vel2 = 0.0;
        const PseudoVec xdot = germ.derivative(1);
        for (double c : xdot.components) vel2 += c * c;
        const double res = std::abs(null_residual(germ).value()) / std::max(1.0, vel2);
        report.max_residual_rel = std::max(report.max_residual_rel, res);

        if (!report.inversion_checked) continue;
        const double s_expected = sigma.eval(tau);
        try {
            InversionResult inv;
            double f_expected = 0.0;
            std::optional<double> g_expected;
            if (const auto* r21 = std::get_if<FlatInputR21>(&composed)) {
                inv = invert_r21(germ, germ_delta(germ));
                f_expected = r21->f.eval(s_expected);
            } else {
                const auto& r22 = std::get<FlatInputR22>(composed);
                inv = invert_r22(germ);
                f_expected = r22.f.eval(s_expected);
                g_expected = r22.g.eval(s_expected);
            }
            const double tau_err =
                std::abs(inv.tau_hat - s_expected) / std::max(1.0, std::abs(s_expected));
            report.max_tau_error = std::max(report.max_tau_error, tau_err);
            double flat_err =
                std::abs(inv.f_hat - f_expected) / std::max(1.0, std::abs(f_expected));
            if (g_expected) {
                flat_err = std::max(
                    flat_err, std::abs(*inv.g_hat - *g_expected) /
                                  std::max(1.0, std::abs(*g_expected)));
            }
            report.max_flat_error = std::max(report.max_flat_error, flat_err);
        } catch (const DegeneracyError& e) {
            if (e.kind() != Degeneracy::DegenerateGerm) throw;
            ++report.skipped_degenerate;
        }
    }

    report.passed = report.max_residual_rel <= 1e-10 &&
                    (!report.inversion_checked ||
                     (report.max_tau_error <= 1e-9 && report.max_flat_error <= 1e-9));
    return report;
}

double fd_crosscheck(const CurveSpec& spec, double tau, int max_order) {
    if (max_order < 1 || max_order > 3) {
        throw std::invalid_argument("fd_crosscheck: max_order must be 1, 2, or 3");
    }
    const __float128 t = (__float128)tau;
    const __float128 h = (__float128)1e-5;
    const __float128 f0 = eval_quad(spec, t);
    const __float128 fp1 = eval_quad(spec, t + h);
    const __float128 fm1 = eval_quad(spec, t - h);
    const __float128 fp2 = eval_quad(spec, t + 2 * h);
    const __float128 fm2 = eval_quad(spec, t - 2 * h);

    __float128 fd[4] = {0, 0, 0, 0};
    fd[1] = (fp1 - fm1) / (2 * h);
    fd[2] = (fp1 - 2 * f0 + fm1) / (h * h);
    fd[3] = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);

    const Jet jet = spec.eval_jet(tau, max_order);
    double worst = 0.0;
    for (int k = 1; k <= max_order; ++k) {
        const double diff = (double)fabsq(fd[k] - (__float128)jet[k]);
        const double rel = diff / std::max(1.0, std::abs(jet[k]));
        worst = std::max(worst, rel);
    }
    return worst;
}

}  // namespace nullflat
