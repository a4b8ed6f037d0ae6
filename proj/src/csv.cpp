#include "s3h/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace s3h {

namespace {

std::vector<double> parse_row(const std::string& line, int lineno) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        std::string tok = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw Error("csv-parse", "line " + std::to_string(lineno) + ": bad number '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size())
            throw Error("csv-parse", "line " + std::to_string(lineno) + ": trailing junk in '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

CsvData read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw Error("csv-parse", path + ": empty file");
    if (line.rfind("x,y", 0) != 0)
        throw Error("csv-parse", path + ": line 1: header must start with 'x,y'");
    int ncols = 1;
    for (char c : line)
        if (c == ',') ++ncols;
    const int ncomp = ncols - 2;
    if (ncomp != 1 && ncomp != 2 && ncomp != 3 && ncomp != 4 && ncomp != 8)
        throw Error("csv-parse", path + ": unsupported component count " + std::to_string(ncomp));

    std::vector<double> xs, ys, data;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto row = parse_row(line, lineno);
        if (static_cast<int>(row.size()) != ncols)
            throw Error("csv-parse", path + ": line " + std::to_string(lineno) + ": expected " +
                                         std::to_string(ncols) + " fields, got " + std::to_string(row.size()));
        xs.push_back(row[0]);
        ys.push_back(row[1]);
        data.insert(data.end(), row.begin() + 2, row.end());
    }
    const std::size_t npts = xs.size();
    if (npts < 9) throw Error("csv-parse", path + ": fewer than 9 grid points");

    // row-major: x varies fastest; nx = index of first repeat of x[0]
    std::size_t nx = 1;
    while (nx < npts && std::abs(xs[nx] - xs[0]) > 1e-9 * (1.0 + std::abs(xs[0]))) ++nx;
    if (nx < 3 || npts % nx != 0)
        throw Error("csv-parse", path + ": points do not form a rectangular row-major grid");
    const std::size_t ny = npts / nx;
    if (ny < 3) throw Error("csv-parse", path + ": need at least 3 rows");

    const double hx = xs[1] - xs[0];
    const double hy = ys[nx] - ys[0];
    Grid g(xs[0], ys[0], hx, hy, static_cast<int>(nx), static_cast<int>(ny));
    const double scale = std::max({1.0, std::abs(hx), std::abs(hy)});
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t k = j * nx + i;
            if (std::abs(xs[k] - g.x(static_cast<int>(i))) > 1e-7 * scale ||
                std::abs(ys[k] - g.y(static_cast<int>(j))) > 1e-7 * scale)
                throw Error("csv-parse", path + ": line " + std::to_string(k + 2) +
                                             ": coordinates break the uniform grid pattern");
        }

    CsvData d;
    d.grid = g;
    d.components = ncomp;
    d.data = std::move(data);
    return d;
}

void write_csv(const std::string& path, const CsvData& d) {
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot open " + path + " for writing");
    out << "x,y";
    for (int c = 0; c < d.components; ++c) out << ",c" << c;
    out << "\n";
    char buf[32];
    auto emit = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    };
    for (int j = 0; j < d.grid.ny; ++j)
        for (int i = 0; i < d.grid.nx; ++i) {
            emit(d.grid.x(i));
            out << ',';
            emit(d.grid.y(j));
            const double* p = d.point(i, j);
            for (int c = 0; c < d.components; ++c) {
                out << ',';
                emit(p[c]);
            }
            out << "\n";
        }
    if (!out) throw Error("io", "write failed for " + path);
}

} // namespace s3h
