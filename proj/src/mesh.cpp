#include "s3h/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "s3h/error.hpp"

namespace s3h {

namespace {

void write_mesh(const std::string& path, const GridField<ImQuaternion>& X) {
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot open " + path + " for writing");
    char buf[128];
    const Grid& g = X.grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const ImQuaternion& v = X.at(i, j);
            std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
            out << buf;
        }
    auto id = [&](int i, int j) { return static_cast<long>(g.index(i, j)) + 1; };
    for (int j = 0; j < g.ny - 1; ++j)
        for (int i = 0; i < g.nx - 1; ++i) {
            out << "f " << id(i, j) << ' ' << id(i + 1, j) << ' ' << id(i + 1, j + 1) << "\n";
            out << "f " << id(i, j) << ' ' << id(i + 1, j + 1) << ' ' << id(i, j + 1) << "\n";
        }
    if (!out) throw Error("io", "write failed for " + path);
}

} // namespace

GridField<ImQuaternion> stereographic(const GridField<Quaternion>& f, const Quaternion& pole) {
    if (std::abs(norm(pole) - 1.0) > 1e-9)
        throw Error("invalid-argument", "projection pole must be a unit vector");
    // orthonormal basis of the hyperplane orthogonal to the pole
    Quaternion basis[3];
    int nb = 0;
    for (int axis = 0; axis < 4 && nb < 3; ++axis) {
        Quaternion e = axis == 0   ? Quaternion{1, 0, 0, 0}
                       : axis == 1 ? Quaternion{0, 1, 0, 0}
                       : axis == 2 ? Quaternion{0, 0, 1, 0}
                                   : Quaternion{0, 0, 0, 1};
        e -= dot(e, pole) * pole;
        for (int b = 0; b < nb; ++b) e -= dot(e, basis[b]) * basis[b];
        if (norm(e) > 1e-6) basis[nb++] = normalized(e);
    }

    GridField<ImQuaternion> out(f.grid);
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        const Quaternion& q = f.values[k];
        const double denom = 1.0 - dot(q, pole);
        if (denom < 1e-6)
            throw Error("pole-proximity", "a sample lies too close to the projection pole");
        const Quaternion planar = (q - dot(q, pole) * pole) / denom;
        out.values[k] = {dot(planar, basis[0]), dot(planar, basis[1]), dot(planar, basis[2])};
    }
    return out;
}

void write_obj(const std::string& path, const GridField<ImQuaternion>& X) {
    write_mesh(path, X);
}

void write_obj_stereographic(const std::string& path, const GridField<Quaternion>& f,
                             const Quaternion& pole) {
    write_mesh(path, stereographic(f, pole));
}

} // namespace s3h
