#pragma once

#include "formclass/forms.hpp"
#include "formclass/modules.hpp"

namespace formclass {

// The even Clifford ring of a binary form together with the odd part as a
// rank-2 module over it, in good-frame presentation.
struct CliffordPair {
    QuadraticRing ring;
    GoodFrameModule module;
};

// Orientation of the identification between the even Clifford ring of the
// norm form and the module's own ring; with the calibrated conventions it is
// always +1.  Carries the matched (t, n) for reporting.
struct Orientation {
    int sign;
    QuadraticRing matched;
};

// Form (a, b, c) -> ring (b, a*c) with the odd-part action frame (b, c, -a).
// Requires a nondegenerate form (nonzero discriminant); primitivity is not
// required.  disc(ring) = disc(form) identically.
CliffordPair clifford(const BinaryForm& f);

// Norm form of a good-frame module: frame (a, b, c) -> form (-c, a, b).
// Calibrated so that norm_form(regular_module(r)) = (1, t, n) exactly and
// norm_form(clifford(f).module) = f exactly.
BinaryForm norm_form(const GoodFrameModule& I);

// Concrete instance check of Nm(u) * Q(x) = Q(u . x) for Q the norm form of
// I and u acting through the frame matrix.
bool norm_multiplicativity_check(const GoodFrameModule& I, const RingElement& u,
                                 const Int& x1, const Int& x2);

// The canonical identification of the even Clifford ring of norm_form(I)
// with I's ring.  Requires I invertible.  Always sign +1; the trace/norm
// match is asserted as an internal tripwire (a mismatch would be a
// convention bug, not a data error).
Orientation canonical_orientation(const GoodFrameModule& I);

}  // namespace formclass
