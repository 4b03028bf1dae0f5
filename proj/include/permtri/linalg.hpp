// linalg.hpp
//
// Dense exact linear algebra over a Field.

#pragma once

#include <optional>
#include <vector>

#include "permtri/numfield.hpp"

namespace permtri {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Vec zero_vec(const FieldPtr& f, int n);
Mat identity_mat(const FieldPtr& f, int n);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
Scalar dot(const Vec& a, const Vec& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
bool is_zero(const Vec& v);

Scalar det(Mat m);
int rank(Mat m);
// Unique solution of A x = b for square nonsingular A; nullopt when singular.
std::optional<Vec> solve(Mat a, const Vec& b);
// Returns the inverse, or nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

}  // namespace permtri
