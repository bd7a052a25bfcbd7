#include "floordyn/region_map.hpp"

#include <sstream>
#include <stdexcept>

namespace floordyn {

void RegionMapSpec::validate() const {
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        throw std::invalid_argument("region map window must satisfy lo < hi on both axes");
    }
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("region map resolution must be at least 2x2");
    }
}

Rational RegionMapSpec::sample_x(std::size_t i) const {
    return x_lo + (x_hi - x_lo) * Rational(BigInt(i), BigInt(nx - 1));
}

Rational RegionMapSpec::sample_y(std::size_t j) const {
    return y_lo + (y_hi - y_lo) * Rational(BigInt(j), BigInt(ny - 1));
}

std::map<std::string, std::size_t> assign_class_ids(const std::vector<OmegaSet>& omega_sets) {
    if (omega_sets.empty()) {
        throw std::invalid_argument("assign_class_ids needs at least one omega set");
    }
    std::map<std::string, std::size_t> ids;
    for (const auto& s : omega_sets) ids.emplace(s.str(), 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    return ids;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

RegionMap render_region_map(const RegionMapSpec& spec) {
    spec.validate();

    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i < spec.nx; ++i) xs.push_back(spec.sample_x(i));
    for (std::size_t j = 0; j < spec.ny; ++j) ys.push_back(spec.sample_y(j));

    // cells[i * ny + j]
    std::vector<OmegaSet> cells;
    cells.reserve(spec.nx * spec.ny);
    for (std::size_t i = 0; i < spec.nx; ++i) {
        for (std::size_t j = 0; j < spec.ny; ++j) {
            cells.push_back(omega(spec.lambda, Point{xs[i], ys[j]}, OmegaMethod::Analytic));
        }
    }
    const auto ids = assign_class_ids(cells);

    RegionMap map;
    map.class_count = ids.size();
    std::ostringstream raster, legend;

    if (spec.format == RasterFormat::Csv) {
        raster << "i,j,x,y,class_id,class_key\n";
        for (std::size_t i = 0; i < spec.nx; ++i) {
            for (std::size_t j = 0; j < spec.ny; ++j) {
                const std::string key = cells[i * spec.ny + j].str();
                raster << i << ',' << j << ',' << xs[i].str() << ',' << ys[j].str() << ','
                       << ids.at(key) << ',' << quoted(key) << '\n';
            }
        }
        legend << "class_id,class_key\n";
        for (const auto& [key, id] : ids) legend << id << ',' << quoted(key) << '\n';
    } else {
        if (ids.size() > 256) {
            throw std::invalid_argument("region map has " + std::to_string(ids.size()) +
                                        " classes; PGM can distinguish at most 256");
        }
        auto gray = [&](std::size_t id) {
            return ids.size() == 1 ? std::size_t{0} : id * 255 / (ids.size() - 1);
        };
        raster << "P2\n" << spec.nx << ' ' << spec.ny << "\n255\n";
        for (std::size_t row = 0; row < spec.ny; ++row) {
            const std::size_t j = spec.ny - 1 - row;
            for (std::size_t i = 0; i < spec.nx; ++i) {
                if (i) raster << ' ';
                raster << gray(ids.at(cells[i * spec.ny + j].str()));
            }
            raster << '\n';
        }
        legend << "class_id,class_key,gray\n";
        for (const auto& [key, id] : ids) legend << id << ',' << quoted(key) << ',' << gray(id) << '\n';
    }

    map.raster = raster.str();
    map.legend = legend.str();
    return map;
}

}  // namespace floordyn
