#pragma once

#include <string>

#include "s3h/grid.hpp"

namespace s3h {

/// Triangulated OBJ export of a grid-sampled surface in R^3: vertices in
/// row-major order, two faces per grid cell, 1-indexed.
void write_obj(const std::string& path, const GridField<ImQuaternion>& X);

/// Stereographic projection of an S^3-valued field from the given pole onto
/// the orthogonal hyperplane through the origin, then OBJ export. Points too
/// close to the pole are rejected ("pole-proximity").
void write_obj_stereographic(const std::string& path, const GridField<Quaternion>& f,
                             const Quaternion& pole = {-1, 0, 0, 0});

GridField<ImQuaternion> stereographic(const GridField<Quaternion>& f,
                                      const Quaternion& pole = {-1, 0, 0, 0});

} // namespace s3h
