#include "fields.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fhs {

namespace {
void rebuild_support(ScalarField& f) {
    f.support_ids.clear();
    for (std::size_t e = 0; e < f.values.size(); ++e)
        if (f.values[e] != 0.0) f.support_ids.push_back(static_cast<int>(e));
}
} // namespace

ScalarField field_from_values(const SurfaceMesh& mesh, std::vector<double> values) {
    if (values.size() != mesh.element_count())
        fail(Err::InvalidField, "field length does not match element count");
    for (double v : values)
        if (!std::isfinite(v)) fail(Err::InvalidField, "field has non-finite entries");
    ScalarField f;
    f.values = std::move(values);
    rebuild_support(f);
    return f;
}

ScalarField bump_field(const SurfaceMesh& mesh, Vec3 center, double radius, double power) {
    if (!(radius > 0)) fail(Err::InvalidField, "bump radius must be positive");
    std::vector<double> vals(mesh.element_count(), 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        double t = 1.0 - norm2(mesh.centroids[e] - center) / (radius * radius);
        if (t > 0) vals[e] = std::pow(t, power);
    }
    return field_from_values(mesh, std::move(vals));
}

ScalarField coordinate_field(const SurfaceMesh& mesh, int axis) {
    if (axis < 0 || axis > mesh.dim_n) fail(Err::InvalidField, "axis out of range");
    std::vector<double> vals(mesh.element_count(), 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) vals[e] = mesh.centroids[e][axis];
    return field_from_values(mesh, std::move(vals));
}

ScalarField cap_indicator_field(const SurfaceMesh& mesh, Vec3 center, double radius) {
    std::vector<double> vals(mesh.element_count(), 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        if (dist(mesh.centroids[e], center) <= radius) vals[e] = 1.0;
    return field_from_values(mesh, std::move(vals));
}

ScalarField field_from_file(const SurfaceMesh& mesh, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Io, "cannot open field file: " + path);
    std::vector<double> vals(mesh.element_count(), 0.0);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        long idx;
        double v;
        if (!(ss >> idx >> v)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            fail(Err::Parse, "bad field line: " + line);
        }
        if (idx < 0 || static_cast<std::size_t>(idx) >= vals.size())
            fail(Err::Parse, "field element index out of range");
        vals[static_cast<std::size_t>(idx)] = v;
    }
    return field_from_values(mesh, std::move(vals));
}

void write_field(const ScalarField& u, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Err::Io, "cannot open for writing: " + path);
    out.precision(17);
    for (int e : u.support_ids) out << e << " " << u.values[static_cast<std::size_t>(e)] << "\n";
}

FieldSpec parse_field_spec(const std::string& spec, int dim_n) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    FieldSpec fs;
    if (kind == "file") {
        fs.type = FieldSpec::Type::File;
        fs.path = tail;
        if (fs.path.empty()) fail(Err::Parse, "file field needs a path");
        return fs;
    }
    std::replace(tail.begin(), tail.end(), ',', ' ');
    std::istringstream ss(tail);
    if (kind == "bump") {
        fs.type = FieldSpec::Type::Bump;
        if (dim_n == 2 ? !(ss >> fs.center.x >> fs.center.y >> fs.center.z >> fs.radius >> fs.power)
                       : !(ss >> fs.center.x >> fs.center.y >> fs.radius >> fs.power))
            fail(Err::Parse, "bump field expects center, radius, power");
    } else if (kind == "coord") {
        fs.type = FieldSpec::Type::Coordinate;
        if (!(ss >> fs.axis)) fail(Err::Parse, "coord field expects an axis index");
    } else if (kind == "cap") {
        fs.type = FieldSpec::Type::CapIndicator;
        if (dim_n == 2 ? !(ss >> fs.center.x >> fs.center.y >> fs.center.z >> fs.radius)
                       : !(ss >> fs.center.x >> fs.center.y >> fs.radius))
            fail(Err::Parse, "cap field expects center and radius");
    } else {
        fail(Err::Parse, "unknown field kind: " + kind);
    }
    return fs;
}

std::string field_spec_string(const FieldSpec& fs) {
    char buf[256];
    switch (fs.type) {
        case FieldSpec::Type::Bump:
            std::snprintf(buf, sizeof buf, "bump:%.17g,%.17g,%.17g,%.17g,%.17g", fs.center.x,
                          fs.center.y, fs.center.z, fs.radius, fs.power);
            return buf;
        case FieldSpec::Type::Coordinate:
            std::snprintf(buf, sizeof buf, "coord:%d", fs.axis);
            return buf;
        case FieldSpec::Type::CapIndicator:
            std::snprintf(buf, sizeof buf, "cap:%.17g,%.17g,%.17g,%.17g", fs.center.x,
                          fs.center.y, fs.center.z, fs.radius);
            return buf;
        case FieldSpec::Type::File:
            return "file:" + fs.path;
    }
    return "";
}

ScalarField eval_field(const FieldSpec& fs, const SurfaceMesh& mesh) {
    switch (fs.type) {
        case FieldSpec::Type::Bump:
            return bump_field(mesh, fs.center, fs.radius, fs.power);
        case FieldSpec::Type::Coordinate:
            return coordinate_field(mesh, fs.axis);
        case FieldSpec::Type::CapIndicator:
            return cap_indicator_field(mesh, fs.center, fs.radius);
        case FieldSpec::Type::File:
            return field_from_file(mesh, fs.path);
    }
    fail(Err::Internal, "unreachable");
}

FieldSpec translate_field_spec(const FieldSpec& fs, Vec3 shift) {
    FieldSpec out = fs;
    if (fs.type == FieldSpec::Type::Bump || fs.type == FieldSpec::Type::CapIndicator)
        out.center = fs.center + shift;
    return out;
}

double lq_norm(const SurfaceMesh& mesh, const ScalarField& u, double q) {
    if (!(q >= 1)) fail(Err::InvalidArgument, "q must be >= 1");
    if (u.values.size() != mesh.element_count())
        fail(Err::InvalidField, "field length does not match element count");
    double acc = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        double v = std::fabs(u.values[e]);
        if (v > 0) acc += std::pow(v, q) * mesh.areas[e];
    }
    return std::pow(acc, 1.0 / q);
}

} // namespace fhs
