#pragma once

#include <cstddef>
#include <vector>

#include "formclass/forms.hpp"

namespace formclass {

// Which similitude scaling group the classes quotient by: wide allows
// scaling by -1 (forms up to sign), narrow does not.  For negative
// discriminants the two coincide; for positive discriminants the narrow
// group surjects onto the wide one with kernel of order 1 or 2.
enum class Variant { wide, narrow };

struct CyclicFactor {
    std::size_t order;      // order of the cyclic factor
    std::size_t generator;  // index into reps of a generator of the factor

    friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

// Finite abelian class group presented by canonical form representatives
// and a full composition table of indices.  structure lists cyclic factors
// in descending divisibility order (each order divides the previous one);
// the direct-product decomposition is certified at construction time.
struct ClassGroup {
    Int disc;
    Variant variant;
    std::vector<BinaryForm> reps;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of product
    std::size_t identity = 0;
    std::vector<CyclicFactor> structure;
};

// The principal form (1, t0, (t0^2 - D)/4) with t0 = D mod 2.
BinaryForm principal_form(const Int& D);

// Gauss composition through the Clifford correspondence: both forms are sent
// to modules, the modules are multiplied, and the product's norm form is
// reduced.  Requires equal valid discriminants, primitivity, and (for
// negative discriminants) positive definite inputs.
BinaryForm compose(const BinaryForm& f, const BinaryForm& g);

// Independent classical composition of united forms: transform f so its
// leading coefficient is coprime to g's, solve the congruences for the
// common middle coefficient B (smallest nonnegative), and reduce
// (a1*a2, B, (B^2 - D)/(4*a1*a2)).  Same preconditions as compose.
BinaryForm dirichlet_compose(const BinaryForm& f, const BinaryForm& g);

// Build the full class group of discriminant D: representatives, composition
// table, identity, and certified cyclic decomposition.
ClassGroup class_group(const Int& D, Variant variant);

// Do f and g lie in the same class of the given variant?  Narrow classes of
// positive discriminant are proper-equivalence classes; every other case
// also glues the orientation-compensated (-1)-scaling.  Requires equal valid
// discriminants.
bool same_class(Variant variant, const BinaryForm& f, const BinaryForm& g);

// Index of f's class among G.reps: proper equivalence for the narrow
// variant (positive discriminant), equivalence up to sign otherwise.
// A failure to match is an internal inconsistency, not a data error.
std::size_t class_of(const BinaryForm& f, const ClassGroup& G);

// Index of the inverse class from the table.
std::size_t inverse_index(const ClassGroup& G, std::size_t i);

// Fundamental solution of t^2 - D*u^2 = +-4 (smallest u > 0), and the norm
// sign it realizes: norm -1 exists iff the narrow and wide class numbers
// agree.  Requires a positive valid discriminant.
struct PellSolution {
    Int t, u;
    int norm;  // +1 or -1
};
PellSolution fundamental_unit(const Int& D);
int fundamental_unit_norm(const Int& D);

}  // namespace formclass
