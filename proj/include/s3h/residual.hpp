#pragma once

#include <map>
#include <string>

#include "s3h/grid.hpp"

namespace s3h {

struct Residual {
    double interior_sup = 0;
    double boundary_sup = 0;
};

/// Named residuals plus scalar diagnostics for one verification run.
/// Interior sups exclude a margin ring (two cells by default) so that
/// one-sided stencils and the nested derivatives used for mu never pollute a
/// convergence measurement. Sampled data that already passed through a
/// finite-difference stage carries a wider contaminated band; callers widen
/// the margin accordingly.
struct ResidualReport {
    Grid grid;
    std::map<std::string, Residual> residuals;
    std::map<std::string, double> values;

    static constexpr int interior_margin = 2;
    int margin = interior_margin;

    template <class V>
    void add(const std::string& name, const GridField<V>& field) {
        residuals[name] = {interior_sup_norm(field, margin), boundary_sup_norm(field, margin)};
    }

    void add_value(const std::string& name, double v) { values[name] = v; }

    double interior(const std::string& name) const;
    double max_interior() const;

    /// Pretty JSON document: {"grid": ..., "residuals": ..., "values": ...}.
    std::string to_json(int indent = 2) const;

    void merge(const ResidualReport& other, const std::string& prefix = "");
};

} // namespace s3h
