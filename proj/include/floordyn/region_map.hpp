#pragma once

// Rasterizes omega-classes over a rectangular window of exact sample points.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "floordyn/classifier.hpp"

namespace floordyn {

enum class RasterFormat { Csv, Pgm };

struct RegionMapSpec {
    Rational lambda;
    Rational x_lo, x_hi, y_lo, y_hi;
    std::size_t nx = 2;
    std::size_t ny = 2;
    RasterFormat format = RasterFormat::Csv;

    /// Throws std::invalid_argument on an empty window or nx, ny < 2.
    void validate() const;
    /// x_lo + i (x_hi - x_lo) / (nx - 1), exactly.
    Rational sample_x(std::size_t i) const;
    Rational sample_y(std::size_t j) const;
};

/// Ids 0, 1, ... in lexicographic order of the distinct canonical keys.
std::map<std::string, std::size_t> assign_class_ids(const std::vector<OmegaSet>& omega_sets);

struct RegionMap {
    std::string raster;  // CSV rows or plain PGM ("P2")
    std::string legend;  // CSV sidecar
    std::size_t class_count = 0;
};

/// CSV: header "i,j,x,y,class_id,class_key", rows ordered by (i, j).
/// PGM: nx columns by ny rows, top row at y_hi, gray = id * 255 / (classes - 1);
/// the legend then carries a gray column. More than 256 classes cannot be
/// told apart in PGM and throws std::invalid_argument.
RegionMap render_region_map(const RegionMapSpec& spec);

}  // namespace floordyn
