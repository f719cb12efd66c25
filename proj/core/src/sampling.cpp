#include "nullflat/sampling.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nullflat/errors.hpp"
#include "nullflat/json_out.hpp"

namespace nullflat {

namespace {

using nlohmann::json;

void validate_grid(const GridSpec& grid) {
    if (grid.count < 2) {
        throw std::invalid_argument("grid: count must be >= 2, got " +
                                    std::to_string(grid.count));
    }
    if (!(grid.t1 > grid.t0)) {
        throw std::invalid_argument("grid: t1 must exceed t0");
    }
}

std::string join_path(const std::string& path, const std::string& name) {
    return path.empty() ? name : path + "." + name;
}

const json& get_field(const json& obj, const std::string& path, const std::string& name) {
    if (!obj.is_object()) {
        throw std::invalid_argument("curve: '" + (path.empty() ? "<root>" : path) +
                                    "' must be an object");
    }
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw std::invalid_argument("curve: missing field '" + join_path(path, name) + "'");
    }
    return *it;
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw std::invalid_argument("curve: '" + path + "' must be a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        throw std::invalid_argument("curve: '" + path + "' must be an integer");
    }
    return j.get<int>();
}

std::vector<double> get_number_array(const json& j, const std::string& path, size_t expect) {
    if (!j.is_array()) throw std::invalid_argument("curve: '" + path + "' must be an array");
    if (j.size() != expect) {
        throw std::invalid_argument("curve: '" + path + "' must have " + std::to_string(expect) +
                                    " entries, got " + std::to_string(j.size()));
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
        const size_t comma = line.find(',', pos);
        fields.push_back(line.substr(pos, comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return fields;
}

double parse_csv_number(const std::string& field, int line_no, size_t col) {
    try {
        size_t used = 0;
        const double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("curve csv: line " + std::to_string(line_no) + ", column " +
                                    std::to_string(col + 1) + ": bad number '" + field + "'");
    }
}

}  // namespace

std::vector<double> grid_points(const GridSpec& grid) {
    validate_grid(grid);
    std::vector<double> points(static_cast<size_t>(grid.count));
    const double span = grid.t1 - grid.t0;
    for (int i = 0; i < grid.count; ++i) {
        points[static_cast<size_t>(i)] =
            grid.t0 + span * (static_cast<double>(i) / static_cast<double>(grid.count - 1));
    }
    points.front() = grid.t0;
    points.back() = grid.t1;
    return points;
}

const char* space_name(SpaceTag tag) noexcept {
    switch (tag) {
        case SpaceTag::R21: return "r21";
        case SpaceTag::R22: return "r22";
        case SpaceTag::R2N: return "r2n";
    }
    return "r21";
}

SpaceTag space_from_name(const std::string& name) {
    if (name == "r21") return SpaceTag::R21;
    if (name == "r22") return SpaceTag::R22;
    if (name == "r2n") return SpaceTag::R2N;
    throw std::invalid_argument("unknown space name '" + name + "'");
}

VecJet SampledCurve::germ_at(int i) const {
    if (i < 0 || i >= static_cast<int>(samples.size())) {
        throw std::invalid_argument("germ_at: sample index out of range");
    }
    const CurveSample& s = samples[static_cast<size_t>(i)];
    if (static_cast<int>(s.x.size()) != dim()) {
        throw std::invalid_argument("germ_at: sample position has wrong dimension");
    }
    if (s.xdot.size() != s.x.size()) {
        throw std::invalid_argument("germ_at: sample carries no velocity data");
    }
    VecJet germ;
    germ.signature = signature();
    germ.components.reserve(s.x.size());
    for (size_t c = 0; c < s.x.size(); ++c) {
        germ.components.push_back(Jet({s.x[c], s.xdot[c]}));
    }
    return germ;
}

SampledCurve generate(const FlatInput& input, const GridSpec& grid, int order) {
    validate_grid(grid);
    if (order < 1) throw std::invalid_argument("generate: order must be >= 1");
    SampledCurve curve;
    curve.grid = grid;
    if (const auto* r21 = std::get_if<FlatInputR21>(&input)) {
        curve.n = r21->n();
        curve.space = curve.n == 1 ? SpaceTag::R21 : SpaceTag::R2N;
    } else {
        curve.n = 2;
        curve.space = SpaceTag::R22;
    }
    const std::vector<double> taus = grid_points(grid);
    curve.samples.reserve(taus.size());
    for (double tau : taus) {
        VecJet germ;
        try {
            if (const auto* r21 = std::get_if<FlatInputR21>(&input)) {
                germ = r2n_map(*r21, tau, order);
            } else {
                germ = r22_map(std::get<FlatInputR22>(input), tau, order);
            }
        } catch (const DegeneracyError& e) {
            if (!e.tau()) throw e.at_tau(tau);
            throw;
        }
        CurveSample sample;
        sample.tau = tau;
        sample.x = germ.derivative(0).components;
        sample.xdot = germ.derivative(1).components;
        sample.residual = null_residual(germ).value();
        curve.samples.push_back(std::move(sample));
    }
    return curve;
}

std::string to_json(const SampledCurve& curve) {
    JsonOut out;
    out.begin_object();
    out.key("space").value(space_name(curve.space));
    out.key("n").value(curve.n);
    out.key("signature").begin_object();
    out.key("p").value(2);
    out.key("q").value(curve.n);
    out.end_object();
    out.key("grid").begin_array();
    out.value(curve.grid.t0).value(curve.grid.t1).value(curve.grid.count);
    out.end_array();
    out.key("samples").begin_array();
    for (const CurveSample& s : curve.samples) {
        out.begin_object();
        out.key("tau").value(s.tau);
        out.key("x").number_array(s.x);
        out.key("xdot").number_array(s.xdot);
        out.key("residual").value(s.residual);
        out.end_object();
    }
    out.end_array();
    out.end_object();
    return out.str();
}

std::string to_csv(const SampledCurve& curve) {
    std::string out = "tau";
    for (int c = 1; c <= curve.dim(); ++c) out += ",x" + std::to_string(c);
    out += ",residual\n";
    for (const CurveSample& s : curve.samples) {
        out += JsonOut::format_double(s.tau);
        for (double x : s.x) out += "," + JsonOut::format_double(x);
        out += "," + JsonOut::format_double(s.residual);
        out += "\n";
    }
    return out;
}

SampledCurve curve_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("curve: malformed JSON: ") + e.what());
    }
    SampledCurve curve;
    const std::string space_str = [&] {
        const json& j = get_field(doc, "", "space");
        if (!j.is_string()) throw std::invalid_argument("curve: 'space' must be a string");
        return j.get<std::string>();
    }();
    curve.space = space_from_name(space_str);
    curve.n = get_int(get_field(doc, "", "n"), "n");
    if (curve.n < 1) throw std::invalid_argument("curve: 'n' must be >= 1");
    if (curve.space == SpaceTag::R21 && curve.n != 1) {
        throw std::invalid_argument("curve: space 'r21' requires n == 1");
    }
    if (curve.space == SpaceTag::R22 && curve.n != 2) {
        throw std::invalid_argument("curve: space 'r22' requires n == 2");
    }
    if (curve.space == SpaceTag::R2N && curve.n < 2) {
        throw std::invalid_argument("curve: space 'r2n' requires n >= 2");
    }

    const json& sig = get_field(doc, "", "signature");
    if (get_int(get_field(sig, "signature", "p"), "signature.p") != 2) {
        throw std::invalid_argument("curve: 'signature.p' must be 2");
    }
    if (get_int(get_field(sig, "signature", "q"), "signature.q") != curve.n) {
        throw std::invalid_argument("curve: 'signature.q' must equal n");
    }

    const json& grid = get_field(doc, "", "grid");
    if (!grid.is_array() || grid.size() != 3) {
        throw std::invalid_argument("curve: 'grid' must be the array [t0, t1, count]");
    }
    curve.grid.t0 = get_number(grid[0], "grid[0]");
    curve.grid.t1 = get_number(grid[1], "grid[1]");
    curve.grid.count = get_int(grid[2], "grid[2]");
    validate_grid(curve.grid);

    const json& samples = get_field(doc, "", "samples");
    if (!samples.is_array()) throw std::invalid_argument("curve: 'samples' must be an array");
    if (static_cast<int>(samples.size()) != curve.grid.count) {
        throw std::invalid_argument("curve: 'samples' must have grid count " +
                                    std::to_string(curve.grid.count) + " entries, got " +
                                    std::to_string(samples.size()));
    }
    const size_t dim = static_cast<size_t>(curve.dim());
    curve.samples.reserve(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        const std::string path = "samples[" + std::to_string(i) + "]";
        const json& js = samples[i];
        CurveSample s;
        s.tau = get_number(get_field(js, path, "tau"), path + ".tau");
        s.x = get_number_array(get_field(js, path, "x"), path + ".x", dim);
        s.xdot = get_number_array(get_field(js, path, "xdot"), path + ".xdot", dim);
        s.residual = get_number(get_field(js, path, "residual"), path + ".residual");
        curve.samples.push_back(std::move(s));
    }
    return curve;
}

SampledCurve curve_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("curve csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_line(line);
    const size_t cols = header.size();
    if (cols < 5 || header.front() != "tau" || header.back() != "residual") {
        throw std::invalid_argument(
            "curve csv: header must be tau,x1,...,residual with at least three components");
    }
    for (size_t c = 1; c + 1 < cols; ++c) {
        if (header[c] != "x" + std::to_string(c)) {
            throw std::invalid_argument("curve csv: header column " + std::to_string(c + 1) +
                                        " must be x" + std::to_string(c));
        }
    }
    SampledCurve curve;
    curve.n = static_cast<int>(cols) - 4;
    // The CSV form does not carry the construction tag; label by dimension.
    curve.space = curve.n == 1 ? SpaceTag::R21 : curve.n == 2 ? SpaceTag::R22 : SpaceTag::R2N;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != cols) {
            throw std::invalid_argument("curve csv: line " + std::to_string(line_no) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(cols));
        }
        CurveSample s;
        s.tau = parse_csv_number(fields[0], line_no, 0);
        for (size_t c = 1; c + 1 < cols; ++c) {
            s.x.push_back(parse_csv_number(fields[c], line_no, c));
        }
        s.residual = parse_csv_number(fields.back(), line_no, cols - 1);
        curve.samples.push_back(std::move(s));
    }
    if (curve.samples.size() < 2) {
        throw std::invalid_argument("curve csv: needs at least two sample rows");
    }
    curve.grid.t0 = curve.samples.front().tau;
    curve.grid.t1 = curve.samples.back().tau;
    curve.grid.count = static_cast<int>(curve.samples.size());
    validate_grid(curve.grid);
    return curve;
}

SampledCurve load_curve(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open curve file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw std::invalid_argument("curve file '" + path + "' is empty");
    }
    return text[first] == '{' ? curve_from_json(text) : curve_from_csv(text);
}

void save_curve(const SampledCurve& curve, const std::string& path, CurveFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << (format == CurveFormat::Json ? to_json(curve) : to_csv(curve));
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace nullflat
