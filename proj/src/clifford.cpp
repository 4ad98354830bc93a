#include "formclass/clifford.hpp"

#include "formclass/errors.hpp"

namespace formclass {

CliffordPair clifford(const BinaryForm& f) {
    Int D = discriminant(f);
    check_input(D != 0, "degenerate form: discriminant is zero");
    QuadraticRing ring{f.b, f.a * f.c};
    GoodFrameModule module{ring, f.b, f.c, -f.a, 0};
    check_internal(module.ring.t == module.a && module.ring.n == -module.b * module.c,
                   "Clifford module must satisfy the good-frame invariants");
    check_internal(ring.disc() == D,
                   "Clifford ring must preserve the discriminant");
    return CliffordPair{ring, module};
}

BinaryForm norm_form(const GoodFrameModule& I) {
    validate_frame(I);
    return BinaryForm{-I.c, I.a, I.b};
}

bool norm_multiplicativity_check(const GoodFrameModule& I, const RingElement& u,
                                 const Int& x1, const Int& x2) {
    validate_frame(I);
    BinaryForm Q = norm_form(I);
    Mat2 A = element_action(I, u);
    Int y1 = A.m11 * x1 + A.m12 * x2;
    Int y2 = A.m21 * x1 + A.m22 * x2;
    Int nm = trace_norm(I.ring, u).second;
    return evaluate(Q, y1, y2) == nm * evaluate(Q, x1, x2);
}

Orientation canonical_orientation(const GoodFrameModule& I) {
    validate_frame(I);
    check_input(is_invertible(I),
                "canonical orientation requires an invertible module");
    CliffordPair back = clifford(norm_form(I));
    // The generator of the even Clifford ring of the norm form must act with
    // the module's own trace and norm; any mismatch is a convention bug.
    check_internal(back.ring.t == I.ring.t && back.ring.n == I.ring.n,
                   "orientation tripwire: Clifford generator trace/norm mismatch");
    return Orientation{+1, back.ring};
}

}  // namespace formclass
