#pragma once

#include <vector>

#include "formclass/integer.hpp"

namespace formclass {

// Integral binary quadratic form a*x^2 + b*x*y + c*y^2.
struct BinaryForm {
    Int a, b, c;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

// Unimodular change of variables (x, y) -> (p*x + q*y, r*x + s*y),
// i.e. the matrix [[p, q], [r, s]] with determinant +-1 acting on the right.
struct UnimodularMap {
    Int p, q, r, s;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

struct ReduceResult {
    BinaryForm form;  // the reduced representative
    UnimodularMap map;  // determinant +1 map with transform(input, map) == form
};

Int discriminant(const BinaryForm& f);
Int evaluate(const BinaryForm& f, const Int& x, const Int& y);
Int content(const BinaryForm& f);
bool is_primitive(const BinaryForm& f);

// Definiteness classification for negative discriminant.
bool is_positive_definite(const BinaryForm& f);
bool is_negative_definite(const BinaryForm& f);

Int det(const UnimodularMap& m);
UnimodularMap identity_map();
UnimodularMap compose_maps(const UnimodularMap& first, const UnimodularMap& second);

// Right action: (f . m)(x, y) = f(p*x + q*y, r*x + s*y).
// transform(f, m1*m2) == transform(transform(f, m1), m2).
BinaryForm transform(const BinaryForm& f, const UnimodularMap& m);

// Orientation flip b -> -b; an involution preserving discriminant and content.
BinaryForm flip_orientation(const BinaryForm& f);

// A discriminant is valid when it is congruent to 0 or 1 mod 4, nonzero,
// and not a perfect square.  Throws validation_error otherwise.
void validate_discriminant(const Int& D);
bool is_valid_discriminant(const Int& D);

// Reduction predicates.
// Negative discriminant (positive definite): |b| <= a <= c, with b >= 0
// whenever |b| == a or a == c.
// Positive discriminant: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b,
// decided by exact integer comparisons.
bool is_reduced(const BinaryForm& f);

// Reduce a primitive nondegenerate form; for negative discriminant the input
// must be positive definite.  Returns the reduced form and a determinant +1
// witness map.  Throws validation_error on imprimitive, degenerate
// (zero or square discriminant) or negative definite input.
ReduceResult reduce(const BinaryForm& f);

// The cycle of reduced forms equivalent to a reduced indefinite form,
// starting at f and following the reduction step until it returns.
std::vector<BinaryForm> reduction_cycle(const BinaryForm& reduced);

// Proper (determinant +1) equivalence.  Negative discriminant: equal reduced
// forms (negative definite pairs are compared after negating both; mixed
// definiteness is never equivalent).  Positive discriminant: membership in
// the same reduction cycle.
bool proper_equivalent(const BinaryForm& f, const BinaryForm& g);

// Orientation-compatible similarity: proper equivalence combined with the
// scaling factor -1, whose orientation-preserving representative is
// -flip(g) = (-a, b, -c).  True iff f is properly equivalent to g or to
// (-g.a, g.b, -g.c).  Classes under this relation form the quotient of the
// proper-equivalence class group by the class of the (-1)-scaled principal
// form; for negative discriminants it coincides with proper equivalence on
// positive definite forms.
bool oriented_similar(const BinaryForm& f, const BinaryForm& g);

// Complete duplicate-free list of proper-equivalence class representatives of
// primitive forms of discriminant D.  Negative D: the reduced positive
// definite forms, ordered by a ascending then b descending.  Positive D: one
// canonical representative per cycle — the first form found by scanning
// |a| = 1, 2, ... (positive a first) and b in the normalized window
// (-|a|, |a|] ordered by |b| then sign.
std::vector<BinaryForm> enumerate_classes(const Int& D);

}  // namespace formclass
