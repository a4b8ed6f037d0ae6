#pragma once

#include <string>
#include <vector>

#include "s3h/grid.hpp"

namespace s3h {

// Per-value component layout shared by the CSV codec and the CLI.
// 1 = real, 2 = complex, 3 = R^3, 4 = R^4 / quaternion, 8 = complexified quaternion.
template <class V>
struct CsvTraits;

template <>
struct CsvTraits<double> {
    static constexpr int components = 1;
    static void write(const double& v, double* o) { o[0] = v; }
    static double read(const double* c) { return c[0]; }
};
template <>
struct CsvTraits<Complex> {
    static constexpr int components = 2;
    static void write(const Complex& v, double* o) { o[0] = v.real(); o[1] = v.imag(); }
    static Complex read(const double* c) { return {c[0], c[1]}; }
};
template <>
struct CsvTraits<ImQuaternion> {
    static constexpr int components = 3;
    static void write(const ImQuaternion& v, double* o) { o[0] = v.x; o[1] = v.y; o[2] = v.z; }
    static ImQuaternion read(const double* c) { return {c[0], c[1], c[2]}; }
};
template <>
struct CsvTraits<Quaternion> {
    static constexpr int components = 4;
    static void write(const Quaternion& v, double* o) { o[0] = v.w; o[1] = v.x; o[2] = v.y; o[3] = v.z; }
    static Quaternion read(const double* c) { return {c[0], c[1], c[2], c[3]}; }
};
template <>
struct CsvTraits<CQuaternion> {
    static constexpr int components = 8;
    static void write(const CQuaternion& v, double* o) {
        CsvTraits<Quaternion>::write(v.re, o);
        CsvTraits<Quaternion>::write(v.im, o + 4);
    }
    static CQuaternion read(const double* c) {
        return {CsvTraits<Quaternion>::read(c), CsvTraits<Quaternion>::read(c + 4)};
    }
};

/// Raw grid-field file: header `x,y,c0,c1,...`, one row per grid point in
/// row-major (j outer, i inner) order.
struct CsvData {
    Grid grid;
    int components = 0;
    std::vector<double> data;  // size() == grid.size() * components

    const double* point(int i, int j) const { return data.data() + grid.index(i, j) * components; }
};

CsvData read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvData& d);

template <class V>
GridField<V> field_from_csv(const CsvData& d) {
    if (d.components != CsvTraits<V>::components)
        throw Error("csv-component-mismatch",
                    "expected " + std::to_string(CsvTraits<V>::components) + " components, file has " +
                        std::to_string(d.components));
    GridField<V> out(d.grid);
    for (int j = 0; j < d.grid.ny; ++j)
        for (int i = 0; i < d.grid.nx; ++i) out.at(i, j) = CsvTraits<V>::read(d.point(i, j));
    return out;
}

template <class V>
CsvData csv_from_field(const GridField<V>& f) {
    CsvData d;
    d.grid = f.grid;
    d.components = CsvTraits<V>::components;
    d.data.resize(f.grid.size() * d.components);
    for (int j = 0; j < f.grid.ny; ++j)
        for (int i = 0; i < f.grid.nx; ++i)
            CsvTraits<V>::write(f.at(i, j), d.data.data() + f.grid.index(i, j) * d.components);
    return d;
}

template <class V>
void write_csv(const std::string& path, const GridField<V>& f) {
    write_csv(path, csv_from_field(f));
}

} // namespace s3h
