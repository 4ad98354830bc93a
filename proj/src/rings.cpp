#include "formclass/rings.hpp"

#include "formclass/errors.hpp"

namespace formclass {

bool is_valid_ring(const QuadraticRing& r) { return r.disc() != 0; }

void validate_ring(const QuadraticRing& r) {
    check_input(is_valid_ring(r), "degenerate ring: discriminant is zero");
}

RingElement ring_add(const RingElement& u, const RingElement& v) {
    return RingElement{u.x + v.x, u.y + v.y};
}

RingElement ring_sub(const RingElement& u, const RingElement& v) {
    return RingElement{u.x - v.x, u.y - v.y};
}

RingElement ring_mul(const QuadraticRing& r, const RingElement& u,
                     const RingElement& v) {
    // (x1 + y1 g)(x2 + y2 g) with g^2 = t g - n.
    Int yy = u.y * v.y;
    return RingElement{u.x * v.x - r.n * yy,
                       u.x * v.y + u.y * v.x + r.t * yy};
}

std::pair<Int, Int> trace_norm(const QuadraticRing& r, const RingElement& u) {
    Int tr = 2 * u.x + r.t * u.y;
    Int nm = u.x * u.x + r.t * u.x * u.y + r.n * u.y * u.y;
    return {tr, nm};
}

RingElement involution(const QuadraticRing& r, const RingElement& u) {
    return RingElement{u.x + r.t * u.y, -u.y};
}

Mat2 mat_identity() { return Mat2{1, 0, 0, 1}; }

Mat2 mat_mul(const Mat2& A, const Mat2& B) {
    return Mat2{A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
                A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
}

Mat2 mat_add(const Mat2& A, const Mat2& B) {
    return Mat2{A.m11 + B.m11, A.m12 + B.m12, A.m21 + B.m21, A.m22 + B.m22};
}

Mat2 mat_scale(const Int& k, const Mat2& A) {
    return Mat2{k * A.m11, k * A.m12, k * A.m21, k * A.m22};
}

Int mat_trace(const Mat2& A) { return A.m11 + A.m22; }

Int mat_det(const Mat2& A) { return A.m11 * A.m22 - A.m12 * A.m21; }

}  // namespace formclass
