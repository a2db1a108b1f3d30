#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "geomenc/errors.hpp"
#include "geomenc/geometry.hpp"
#include "geomenc/num_format.hpp"

namespace geomenc {

namespace detail {

inline int grid_cells(double extent, double resolution, const char* axis) {
  if (!(resolution > 0))
    throw_error(ErrorCode::config, "grid resolution must be > 0");
  double n = extent / resolution;
  int ni = static_cast<int>(std::llround(n));
  if (ni < 1 || std::abs(static_cast<double>(ni) * resolution - extent) > 1e-9)
    throw_error(ErrorCode::config,
                std::string("resolution does not divide the frame ") + axis +
                    " extent");
  return ni;
}

inline std::string grid_identifier(const Frame& f, double spacing) {
  return format_double(f.min_x) + "," + format_double(f.min_y) + "," +
         format_double(f.max_x) + "," + format_double(f.max_y) + "|" +
         format_double(spacing);
}

}  // namespace detail

// Ordered reference points at tile centroids, row-major: min-y row first,
// min-x first within each row.
struct ReferenceGrid {
  Frame frame;
  double spacing = 0;
  int nx = 0, ny = 0;
  std::vector<Point2> points;
  std::string id;

  int size() const { return nx * ny; }
};

// The induced tiling: axis-aligned tiles covering the frame exactly, same
// ordering and count as the reference grid.
struct TileGrid {
  Frame frame;
  double spacing = 0;
  int nx = 0, ny = 0;
  std::vector<Frame> tiles;
  std::string id;

  int size() const { return nx * ny; }
};

inline std::pair<ReferenceGrid, TileGrid> make_grids(const Frame& frame,
                                                     double resolution) {
  int nx = detail::grid_cells(frame.width(), resolution, "x");
  int ny = detail::grid_cells(frame.height(), resolution, "y");
  std::string id = detail::grid_identifier(frame, resolution);

  ReferenceGrid ref{frame, resolution, nx, ny, {}, id};
  TileGrid tiles{frame, resolution, nx, ny, {}, id};
  ref.points.reserve(static_cast<std::size_t>(nx) * ny);
  tiles.tiles.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    double y0 = frame.min_y + j * resolution;
    double y1 = (j == ny - 1) ? frame.max_y : frame.min_y + (j + 1) * resolution;
    for (int i = 0; i < nx; ++i) {
      double x0 = frame.min_x + i * resolution;
      double x1 = (i == nx - 1) ? frame.max_x : frame.min_x + (i + 1) * resolution;
      tiles.tiles.push_back(Frame{x0, y0, x1, y1});
      ref.points.push_back(Point2{(x0 + x1) / 2, (y0 + y1) / 2});
    }
  }
  return {std::move(ref), std::move(tiles)};
}

}  // namespace geomenc
