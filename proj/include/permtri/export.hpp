// export.hpp
//
// OFF export of a triangulation and an SVG picture of the cone Delta_c^+ in
// rank 3, drawn by stereographic projection of its great-circle arcs.

#pragma once

#include <string>

#include "permtri/sbdw.hpp"

namespace permtri {

// Vertices w y in element order, one face per cell.  Exact rationals when the
// field is Q; otherwise decimals with exact power-basis coordinates in comments.
std::string export_off(const Sbdw& T, const Vec& y);

// Throws InvalidInput unless the rank is 3.
std::string export_svg(const Sbdw& T);

}  // namespace permtri
