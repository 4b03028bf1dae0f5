// geometry.hpp
//
// Base points, the vectors delta_t, chamber and cluster cones, simplex
// determinants and an independent pulling-triangulation volume of the
// W-permutahedron.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permtri/absolute.hpp"
#include "permtri/coxeter.hpp"

namespace permtri {

// Canonical base point (sum of fundamental weights) when seed is empty; otherwise
// sum a_s lambda_s with a_s = k/97, k drawn from [49, 145] by mt19937_64(seed).
Vec base_point(const CoxeterSystem& W, std::optional<std::uint64_t> seed = std::nullopt);
std::string base_point_name(std::optional<std::uint64_t> seed);
bool in_fundamental_chamber(const CoxeterSystem& W, const Vec& y);

// delta_t for every reflection t (indexed by positive root), read along the
// c^{-1}-sorting word of w0.  Verifies (1 - c^{-1}) delta_t = b_t^v.
std::vector<Vec> delta_vectors(const DualStructure& D);

// Rays u^{-1} lambda_s of the chamber cone Delta(u).
std::vector<Vec> chamber_rays(const CoxeterSystem& W, Elem u);

// True when every inner ray is a nonnegative combination of the r linearly
// independent outer rays.
bool cone_contains(const std::vector<Vec>& inner, const std::vector<Vec>& outer);

// det(v_1 - v_0, ..., v_r - v_0) with the differences as columns.
Scalar simplex_det(const std::vector<Vec>& verts);

enum class ApexRule { MinIndex, MaxIndex, Middle };

// Sum of |det| over a pulling triangulation of conv(W y); every face of the
// permutahedron is a coset x W_J.
Scalar permutahedron_volume(const CoxeterSystem& W, const Vec& y, ApexRule rule = ApexRule::MinIndex);

// gamma in V* (simple-root coordinates) with <gamma, b^v> / <b, y> strictly
// increasing along every cover of the heap order.  Needs a rational field.
std::optional<Vec> find_stable_gamma(const DualStructure& D, const Vec& y);
// Slope of reflection t: <gamma, b_t^v> / <b_t, y>.
Scalar stability_slope(const CoxeterSystem& W, const Vec& gamma, const Vec& y, int t);
bool is_totally_stable(const DualStructure& D, const Vec& gamma, const Vec& y);

}  // namespace permtri
