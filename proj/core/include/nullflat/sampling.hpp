#pragma once

#include <string>
#include <vector>

#include "nullflat/flat_maps.hpp"
#include "nullflat/pseudo.hpp"

namespace nullflat {

/// Uniform sampling grid; count >= 2 and t1 > t0.
struct GridSpec {
    double t0 = 0.0;
    double t1 = 1.0;
    int count = 2;
};

/// Grid points with exact endpoints (the last point is t1, not an
/// accumulation of steps).
std::vector<double> grid_points(const GridSpec& grid);

/// Which map family produced a curve. R22 and R2N with n = 2 share the
/// ambient space but not the construction, so the tag is part of the data.
enum class SpaceTag { R21, R22, R2N };

const char* space_name(SpaceTag tag) noexcept;
SpaceTag space_from_name(const std::string& name);  // invalid_argument on unknown names

struct CurveSample {
    double tau = 0.0;
    std::vector<double> x;     // position
    std::vector<double> xdot;  // velocity
    double residual = 0.0;     // (x', x') at tau
};

/// Discretized curve in R^{2,n} (dimension n + 2, signature (2, n)).
struct SampledCurve {
    SpaceTag space = SpaceTag::R21;
    int n = 1;
    GridSpec grid;
    std::vector<CurveSample> samples;

    int dim() const { return n + 2; }
    Signature signature() const { return sig_r2n(n); }

    /// Order-1 germ (position + velocity) of sample i.
    VecJet germ_at(int i) const;
};

/// Samples the curve described by `input` over the grid: positions,
/// velocities, and the pointwise null residual (x', x'). Map errors carry
/// the offending tau; the grid is validated up front (invalid_argument).
SampledCurve generate(const FlatInput& input, const GridSpec& grid,
                      int order = kDefaultJetOrder);

/// Deterministic serialization: fixed field order, floats printed with 17
/// significant digits, so identical curves produce byte-identical text and
/// the JSON form round-trips losslessly through load.
std::string to_json(const SampledCurve& curve);

/// CSV projection: header tau,x1,...,x{n+2},residual. Velocities are not
/// part of the CSV form.
std::string to_csv(const SampledCurve& curve);

SampledCurve curve_from_json(const std::string& text);
SampledCurve curve_from_csv(const std::string& text);

/// Reads a curve from disk, dispatching on a leading '{' (JSON) versus a
/// CSV header. Schema violations name the offending field path.
SampledCurve load_curve(const std::string& path);

enum class CurveFormat { Json, Csv };

void save_curve(const SampledCurve& curve, const std::string& path,
                CurveFormat format);

}  // namespace nullflat
