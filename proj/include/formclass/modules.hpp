#pragma once

#include "formclass/rings.hpp"

namespace formclass {

// Rank-2 module over a quadratic ring in good-frame presentation: the ring
// generator g acts on the basis (e1, e2) by the matrix [[a, b], [c, 0]]
// (columns are the images of the basis vectors), which forces t = a and
// n = -b*c.  `ring` is the presentation in which the frame lives; `shift`
// records the generator translation g <- g - shift applied by good-frame
// normalization, so the originating ring is (t + 2*shift, ...) recoverable
// via original_ring().
struct GoodFrameModule {
    QuadraticRing ring;
    Int a, b, c;
    Int shift = 0;

    Mat2 action_matrix() const { return Mat2{a, b, c, 0}; }

    QuadraticRing original_ring() const {
        Int t0 = ring.t + 2 * shift;
        return QuadraticRing{t0, ring.n + shift * (t0 - shift)};
    }

    friend bool operator==(const GoodFrameModule&, const GoodFrameModule&) = default;
};

// Throws validation_error unless t = a, n = -b*c and the ring is valid.
void validate_frame(const GoodFrameModule& I);

// Action matrix of the element x + y*g on the module: x*Id + y*frame-matrix.
Mat2 element_action(const GoodFrameModule& I, const RingElement& u);

// The ring acting on itself, presented in the basis (1, t - g): the frame
// (t, n, -1), whose norm form is exactly (1, t, n).
GoodFrameModule regular_module(const QuadraticRing& r);

// Candidate module given by an arbitrary action matrix M over ring (t, n).
// Requires the module axiom M^2 = t*M - n*Id (else "not a module"); returns
// true iff trace(M) = t, which makes every element's characteristic
// polynomial match its ring trace/norm.
bool is_pseudoregular(const QuadraticRing& r, const Mat2& M);

// Normalize a pseudoregular action matrix to the good frame by the generator
// shift g <- g - d with d = M22; records the shift.
GoodFrameModule good_frame(const QuadraticRing& r, const Mat2& M);

// True iff the associated norm form (-c, a, b) is primitive.
bool is_invertible(const GoodFrameModule& I);

// Transposed action matrix (the natural action on Hom(I, Z)); a good frame
// again, over the same ring.
GoodFrameModule dual(const GoodFrameModule& I);

// Product of two invertible modules over (presentations of) the same-
// discriminant ring, computed by 4-generator lattice multiplication and
// Hermite reduction in the canonical presentation, with orientation carried
// as the product of the operand basis orientations.  Errors: discriminant
// mismatch ("ring mismatch"), non-invertible operand.
GoodFrameModule module_mul(const GoodFrameModule& I, const GoodFrameModule& J);

// The canonical presentation (t0, n0) of the discriminant-D quadratic ring,
// with t0 in {0, 1}.
QuadraticRing canonical_ring(const Int& D);

}  // namespace formclass
