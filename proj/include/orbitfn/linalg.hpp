#pragma once

#include <cstddef>

#include "orbitfn/rational.hpp"

namespace orbitfn {

IntMat int_identity(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
RatVec mat_vec(const IntMat& a, const RatVec& v);
RatVec mat_vec(const RatMat& a, const RatVec& v);
RatVec mat_vec(const RatMat& a, const IntVec& v);

long long dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);

RatMat to_rat(const IntMat& a);

/// Gauss-Jordan inverse over the rationals; throws std::domain_error when singular.
RatMat rat_inverse(const RatMat& a);

Rat rat_det(const RatMat& a);
Int int_det(const IntMat& a);

}  // namespace orbitfn
