#include "s3h/residual.hpp"

#include <json.hpp>

namespace s3h {

double ResidualReport::interior(const std::string& name) const {
    auto it = residuals.find(name);
    if (it == residuals.end()) throw Error("unknown-residual", name);
    return it->second.interior_sup;
}

double ResidualReport::max_interior() const {
    double m = 0;
    for (const auto& [name, r] : residuals) m = std::max(m, r.interior_sup);
    return m;
}

std::string ResidualReport::to_json(int indent) const {
    nlohmann::json j;
    j["grid"] = {{"x0", grid.x0}, {"y0", grid.y0}, {"hx", grid.hx},
                 {"hy", grid.hy}, {"nx", grid.nx}, {"ny", grid.ny}};
    j["interior_margin"] = margin;
    for (const auto& [name, r] : residuals)
        j["residuals"][name] = {{"interior_sup", r.interior_sup}, {"boundary_sup", r.boundary_sup}};
    for (const auto& [name, v] : values) j["values"][name] = v;
    return j.dump(indent);
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix) {
    for (const auto& [name, r] : other.residuals) residuals[prefix + name] = r;
    for (const auto& [name, v] : other.values) values[prefix + name] = v;
}

} // namespace s3h
