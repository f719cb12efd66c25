#include "nullflat/planner.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nullflat/errors.hpp"
#include "nullflat/flat_maps.hpp"

namespace nullflat {

namespace {

void check_endpoint(const PseudoVec& point, int dim, int n, const char* name) {
    if (point.dim() != dim) {
        throw std::invalid_argument(std::string("plan: ") + name + " must have dimension " +
                                    std::to_string(dim) + ", got " + std::to_string(point.dim()));
    }
    if (!(point.signature == sig_r2n(n))) {
        throw std::invalid_argument(std::string("plan: ") + name + " must carry signature (2, " +
                                    std::to_string(n) + ")");
    }
}

void check_interval(const BoundaryProblem& problem) {
    if (!(problem.t1 > problem.t0)) {
        throw DegeneracyError(Degeneracy::DegenerateInterval,
                              "planning interval [" + std::to_string(problem.t0) + ", " +
                                  std::to_string(problem.t1) + "] has no interior");
    }
}

// Normalized time (t - t0) / (t1 - t0), as flat data for the maps.
CurveSpec normalized_time(const BoundaryProblem& problem) {
    const double span = problem.t1 - problem.t0;
    return CurveSpec::polynomial({-problem.t0 / span, 1.0 / span});
}

SampledCurve realize(const BoundaryProblem& problem, const CurveSpec& f,
                     const std::optional<CurveSpec>& g, const PseudoVec& shift,
                     int count) {
    const GridSpec grid{problem.t0, problem.t1, count};
    FlatInput input;
    if (g) {
        FlatInputR22 in;
        in.f = f;
        in.g = *g;
        in.sigma = normalized_time(problem);
        input = in;
    } else {
        FlatInputR21 in;
        in.f = f;
        in.sigma = normalized_time(problem);
        input = in;
    }
    SampledCurve curve = generate(input, grid);
    for (CurveSample& sample : curve.samples) {
        for (size_t c = 0; c < sample.x.size(); ++c) sample.x[c] += shift.components[c];
    }
    return curve;
}

double endpoint_distance(const std::vector<double>& x, const PseudoVec& target) {
    double acc = 0.0;
    for (size_t c = 0; c < x.size(); ++c) {
        const double d = x[c] - target.components[c];
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace

PlanResult plan_r21(const BoundaryProblem& problem, int samples) {
    check_endpoint(problem.from, 3, 1, "from");
    check_endpoint(problem.to, 3, 1, "to");
    check_interval(problem);

    Eigen::Vector3d d;
    for (int i = 0; i < 3; ++i) d(i) = problem.to.components[static_cast<size_t>(i)] -
                                       problem.from.components[static_cast<size_t>(i)];

    // Endpoint system [u''(1) | -u'(1) | u(1)] (F, F', F'') = to - from;
    // its determinant is 8 everywhere, so the solve cannot fail.
    const VecJet ub = basis_u_r21(1.0, 2);
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
        const Jet& u = ub.components[static_cast<size_t>(i)];
        m(i, 0) = u[2];
        m(i, 1) = -u[1];
        m(i, 2) = u[0];
    }
    const Eigen::Vector3d j = m.partialPivLu().solve(d);
    const double F = j(0), Fp = j(1), Fpp = j(2);

    // Quintic with zero 2-jet at 0 and 2-jet (F, F', F'') at 1.
    const double a = 10.0 * F - 4.0 * Fp + 0.5 * Fpp;
    const double b = -15.0 * F + 7.0 * Fp - Fpp;
    const double c = 6.0 * F - 3.0 * Fp + 0.5 * Fpp;

    PlanResult result;
    result.problem = problem;
    result.f = CurveSpec::polynomial({0.0, 0.0, 0.0, a, b, c});
    result.shift = problem.from;
    result.curve = realize(problem, result.f, std::nullopt, result.shift, samples);
    result.endpoint_error_start = endpoint_distance(result.curve.samples.front().x, problem.from);
    result.endpoint_error_end = endpoint_distance(result.curve.samples.back().x, problem.to);
    return result;
}

PlanResult plan_r22(const BoundaryProblem& problem, int samples) {
    check_endpoint(problem.from, 4, 2, "from");
    check_endpoint(problem.to, 4, 2, "to");
    check_interval(problem);

    Eigen::Vector4d d;
    for (int i = 0; i < 4; ++i) d(i) = problem.to.components[static_cast<size_t>(i)] -
                                       problem.from.components[static_cast<size_t>(i)];

    // Endpoint system [u(1) | -u'(1) | v(1) | -v'(1)] (f'(1), f(1), g'(1),
    // g(1)) = to - from; its determinant is -4.
    const auto [ub, vb] = basis_uv_r22(1.0, 1);
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i) {
        const Jet& u = ub.components[static_cast<size_t>(i)];
        const Jet& v = vb.components[static_cast<size_t>(i)];
        m(i, 0) = u[0];
        m(i, 1) = -u[1];
        m(i, 2) = v[0];
        m(i, 3) = -v[1];
    }
    const Eigen::Vector4d j = m.partialPivLu().solve(d);
    const double Fp = j(0), F = j(1), Gp = j(2), G = j(3);

    // Cubics with zero 1-jets at 0 and 1-jets (F, F'), (G, G') at 1.
    const double af = 3.0 * F - Fp, bf = Fp - 2.0 * F;
    const double ag = 3.0 * G - Gp, bg = Gp - 2.0 * G;

    PlanResult result;
    result.problem = problem;
    result.f = CurveSpec::polynomial({0.0, 0.0, af, bf});
    result.g = CurveSpec::polynomial({0.0, 0.0, ag, bg});
    result.shift = problem.from;
    result.curve = realize(problem, result.f, result.g, result.shift, samples);
    result.endpoint_error_start = endpoint_distance(result.curve.samples.front().x, problem.from);
    result.endpoint_error_end = endpoint_distance(result.curve.samples.back().x, problem.to);
    return result;
}

PlanResult plan(const BoundaryProblem& problem, int samples) {
    switch (problem.space) {
        case SpaceTag::R21: return plan_r21(problem, samples);
        case SpaceTag::R22: return plan_r22(problem, samples);
        case SpaceTag::R2N: break;
    }
    throw std::invalid_argument("plan: supported spaces are r21 and r22");
}

SampledCurve sample_plan(const PlanResult& result, int count) {
    return realize(result.problem, result.f, result.g, result.shift, count);
}

}  // namespace nullflat
