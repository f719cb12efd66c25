#pragma once

#include <optional>

#include "nullflat/curve_spec.hpp"
#include "nullflat/pseudo.hpp"
#include "nullflat/sampling.hpp"

namespace nullflat {

inline constexpr int kDefaultPlanSamples = 101;

/// Endpoint interpolation problem: find a null curve from `from` at t0 to
/// `to` at t1. Supported spaces: R21 (dimension 3) and R22 (dimension 4).
struct BoundaryProblem {
    SpaceTag space = SpaceTag::R21;
    PseudoVec from;
    PseudoVec to;
    double t0 = 0.0;
    double t1 = 1.0;
};

/// A fitted plan: flat outputs on the normalized interval [0, 1], the
/// constant shift (the start point), and a sampled realization. The curve
/// is exactly null by construction; endpoint errors are the Euclidean
/// distances between the sampled ends and the requested points.
struct PlanResult {
    BoundaryProblem problem;
    CurveSpec f;
    std::optional<CurveSpec> g;  // R22 only
    PseudoVec shift;
    SampledCurve curve;
    double endpoint_error_start = 0.0;
    double endpoint_error_end = 0.0;
};

/// Null interpolation in R^{2,1}: f is the quintic with zero 2-jet at 0
/// whose endpoint 2-jet solves [u''(1) | -u'(1) | u(1)] j = to - from
/// (determinant 8, always solvable); the curve is the three-space map of f
/// plus the shift. Coincident endpoints yield f == 0 (a constant point;
/// every null curve through one point includes the point itself). Errors:
/// std::invalid_argument on wrong dimensions, DegeneracyError
/// (DegenerateInterval) when t1 <= t0.
PlanResult plan_r21(const BoundaryProblem& problem,
                    int samples = kDefaultPlanSamples);

/// Null interpolation in R^{2,2}: cubics f, g with zero 1-jets at 0 and
/// endpoint 1-jets solving the 4x4 system with columns u(1), -u'(1), v(1),
/// -v'(1) (determinant -4, always solvable).
PlanResult plan_r22(const BoundaryProblem& problem,
                    int samples = kDefaultPlanSamples);

/// Dispatch on problem.space.
PlanResult plan(const BoundaryProblem& problem,
                int samples = kDefaultPlanSamples);

/// Resamples a plan on a count-point grid over the original interval; the
/// endpoints land on t0 and t1 exactly.
SampledCurve sample_plan(const PlanResult& result, int count);

}  // namespace nullflat
