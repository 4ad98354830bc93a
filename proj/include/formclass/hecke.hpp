#pragma once

#include <cstddef>
#include <vector>

#include "formclass/classgroup.hpp"
#include "formclass/forms.hpp"
#include "formclass/integer.hpp"

namespace formclass {

// Space of complex-valued functions on the class set of a definite quadratic
// order.  Its dimension is the class number; Hecke operators below act on it
// by permuting the class indices.
struct OMFSpace {
    ClassGroup group;
};

// Build the space over the order of discriminant D.  Requires D < 0: the
// operators are only defined over definite forms.
OMFSpace omf_space(const Int& D);

// Deterministic trial-division primality test (desk-scale inputs).
bool is_prime(const Int& p);

inline std::size_t dimension(const OMFSpace& space) {
    return space.group.reps.size();
}

// How a prime coprime to the discriminant factors in the order: either split
// (two conjugate primes above p, one of which is recorded) or inert.  Primes
// dividing the discriminant are rejected as bad before this is produced.
struct PrimeSplitting {
    bool is_split = false;
    // Index of the class of the recorded prime above p; valid iff is_split.
    std::size_t ideal_class = 0;
    // The form (p, b, (b^2 - D)/(4p)) with the smallest nonnegative b
    // satisfying b^2 = D (mod 4p); valid iff is_split.
    BinaryForm prime_form{0, 0, 0};
};

// Decide how p factors and locate the class of the prime above p.
// Errors: p not prime; p dividing the discriminant ("bad prime").
PrimeSplitting split_prime_class(const OMFSpace& space, const Int& p);

// The two operators attached to a split prime: translation by the recorded
// prime's class, or by its conjugate (= inverse) class.
enum class HeckeBranch { prime_above, conjugate };

// Right-translation operator on the class set: class i maps to perm[i].
struct HeckeOperator {
    Int prime;
    // Class index the operator translates by.
    std::size_t ideal_class;
    // perm[i] = group.table[i][ideal_class]; always a permutation.
    std::vector<std::size_t> perm;
};

// Construct the translation operator for a split prime p.
// Errors: inert p (no operator), bad p, p not prime.
HeckeOperator hecke_operator(const OMFSpace& space, const Int& p,
                             HeckeBranch branch);

// Multiplicative character of the class group with values in exact roots of
// unity: the value at class i is zeta_m^{values[i]} where m = modulus is the
// exponent of the group (1 for the trivial group).
struct Character {
    std::size_t modulus = 1;
    std::vector<std::size_t> values;
};

// All |G| characters, built from the certified cyclic decomposition and each
// verified multiplicative against the composition table.  These are exactly
// the simultaneous eigenvectors of every Hecke operator on the space.
std::vector<Character> eigenforms(const OMFSpace& space);

// Eigenvalue of T on chi as a root-of-unity exponent: chi evaluated at the
// class T translates by.  Applying T to chi's value vector scales it by
// zeta_m^{result} exactly.  Errors: dimension mismatch between chi and T.
std::size_t eigenvalue(const Character& chi, const HeckeOperator& T);

// Exact nonsingularity certificate for the character-value matrix: computes
// the determinant of the |G| x |G| matrix of root-of-unity values in the
// cyclotomic field Q[x]/Phi_m(x) (rational-coefficient polynomial arithmetic,
// no floating point) and reports whether it is nonzero, i.e. whether the
// characters span the whole space.
bool characters_span(const OMFSpace& space,
                     const std::vector<Character>& chis);

}  // namespace formclass
