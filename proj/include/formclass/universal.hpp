#pragma once

#include <string>
#include <vector>

#include "formclass/poly.hpp"

namespace formclass {

// Outcome of one machine-checked polynomial identity: the canonical
// difference polynomials (all expected to print as "0") and the verdict.
struct ProofReport {
    std::string identity;
    std::vector<std::string> differences;
    bool verified = false;
};

// Over Z[a,b,c,d,r,s,x1,x2]: the universal binary form
// E(u,v) = -c*u^2 + (a-d)*u*v + b*v^2 attached to the matrix M = [[a,b],[c,d]]
// satisfies E((r*M + s)(x1,x2)) = ((ad-bc)r^2 + (a+d)rs + s^2) * E(x1,x2)
// identically — the norm of r*M + s scales values of E.
ProofReport verify_norm_multiplicativity();

// Over Z[a,b,c,t,n,x,y,T] modulo the relations t -> a, n -> -b*c (the
// good-frame shape with vanishing lower-right entry): the characteristic
// polynomial of x + y*(frame generator) acting through [[a,b],[c,0]] equals
// T^2 - (2x + t*y)*T + (x^2 + t*x*y + n*y^2) identically, so trace and norm
// of the action are read off the ring invariants.
ProofReport verify_trace_criterion();

// Over Z[a,b,c,t,n]: of the four sign assignments (value-line generator sign,
// generator-basis ordering) for the even-Clifford module of (a,b,c), exactly
// one satisfies both calibration constraints — the norm form of the regular
// module of (t,n) is (1,t,n) and the norm form of the Clifford module returns
// (a,b,c) on the nose — and it is the one the library hard-codes.  Also
// certifies trace = b, determinant = a*c of the generator action and the
// discriminant identity t^2 - 4n = b^2 - 4ac under t -> b, n -> a*c.
ProofReport verify_canonical_orientation();

// All three reports, in the order above.
std::vector<ProofReport> verify_all();

}  // namespace formclass
