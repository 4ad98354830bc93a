#pragma once

#include <utility>

#include "formclass/integer.hpp"

namespace formclass {

// Quadratic ring Z[g] with g^2 = t*g - n; its discriminant t^2 - 4n must be
// nonzero.  Class-group and ideal arithmetic additionally require it to be a
// non-square (an order in a quadratic field); element arithmetic does not.
struct QuadraticRing {
    Int t, n;

    Int disc() const { return t * t - 4 * n; }

    friend bool operator==(const QuadraticRing&, const QuadraticRing&) = default;
};

// Element x + y*g of a quadratic ring.
struct RingElement {
    Int x, y;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

// 2x2 integer matrix [[m11, m12], [m21, m22]] acting on column vectors.
struct Mat2 {
    Int m11, m12, m21, m22;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

void validate_ring(const QuadraticRing& r);
bool is_valid_ring(const QuadraticRing& r);

RingElement ring_add(const RingElement& u, const RingElement& v);
RingElement ring_sub(const RingElement& u, const RingElement& v);
RingElement ring_mul(const QuadraticRing& r, const RingElement& u,
                     const RingElement& v);

// (trace, norm) of x + y*g: (2x + t*y, x^2 + t*x*y + n*y^2).
std::pair<Int, Int> trace_norm(const QuadraticRing& r, const RingElement& u);

// The standard involution x + y*g -> (x + t*y) - y*g; the unique conjugation
// with u + s(u) = Tr(u) and u * s(u) = Nm(u).
RingElement involution(const QuadraticRing& r, const RingElement& u);

Mat2 mat_identity();
Mat2 mat_mul(const Mat2& A, const Mat2& B);
Mat2 mat_add(const Mat2& A, const Mat2& B);
Mat2 mat_scale(const Int& k, const Mat2& A);
Int mat_trace(const Mat2& A);
Int mat_det(const Mat2& A);

}  // namespace formclass
