#pragma once

#include <string>
#include <vector>

#include "mesh.hpp"

namespace fhs {

// Piecewise-constant function on mesh elements.
struct ScalarField {
    std::vector<double> values;
    std::vector<int> support_ids; // indices with nonzero value

    bool is_zero() const { return support_ids.empty(); }
};

ScalarField field_from_values(const SurfaceMesh& mesh, std::vector<double> values);

// Built-in families. `center` and radii are ambient-space quantities; fields
// are sampled at element centroids.
ScalarField bump_field(const SurfaceMesh& mesh, Vec3 center, double radius, double power);
ScalarField coordinate_field(const SurfaceMesh& mesh, int axis);
ScalarField cap_indicator_field(const SurfaceMesh& mesh, Vec3 center, double radius);

// Plain-text "element_index value" lines; unlisted elements are zero.
ScalarField field_from_file(const SurfaceMesh& mesh, const std::string& path);
void write_field(const ScalarField& u, const std::string& path);

// Declarative field description, re-evaluable at any refinement level.
// "bump:cx,cy[,cz],radius,power" | "coord:axis" | "cap:cx,cy[,cz],radius" |
// "file:path"
struct FieldSpec {
    enum class Type { Bump, Coordinate, CapIndicator, File } type = Type::Bump;
    Vec3 center{};
    double radius = 1.0;
    double power = 2.0;
    int axis = 0;
    std::string path;
};

FieldSpec parse_field_spec(const std::string& spec, int dim_n);
std::string field_spec_string(const FieldSpec& fs);
ScalarField eval_field(const FieldSpec& fs, const SurfaceMesh& mesh);

// Translate the spec (bump/cap centers move; coord/file specs unchanged).
FieldSpec translate_field_spec(const FieldSpec& fs, Vec3 shift);

double lq_norm(const SurfaceMesh& mesh, const ScalarField& u, double q);

} // namespace fhs
