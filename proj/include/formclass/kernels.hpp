#pragma once

#include <cstddef>
#include <vector>

#include "formclass/classgroup.hpp"
#include "formclass/forms.hpp"

namespace formclass {

// Data-parallel kernels for the two scan-heavy computations, each paired
// with the serial reference implementation the tests compare against.  Both
// variants of each kernel return identical results (same values, same
// order); the parallel ones split the work across OpenMP threads when the
// library is built with OpenMP support and degrade to the serial loop
// otherwise.

// Reference: the canonical class-representative enumeration.
std::vector<BinaryForm> enumerate_classes_serial(const Int& D);

// Parallel over the leading-coefficient range for negative discriminants,
// where every slice is independent; positive discriminants use cycle
// detection, which is inherently sequential, so they fall through to the
// reference implementation.
std::vector<BinaryForm> enumerate_classes_parallel(const Int& D);

// Composition table over the given class representatives: entry (i, j) is
// the index of the representative whose class contains reps[i] * reps[j].
// Every cell is independent, so the parallel variant distributes cells
// across threads.  Throws internal_error if some product matches no
// representative (the representative list does not cover its classes).
std::vector<std::vector<std::size_t>> composition_table_serial(
    Variant variant, const std::vector<BinaryForm>& reps);
std::vector<std::vector<std::size_t>> composition_table_parallel(
    Variant variant, const std::vector<BinaryForm>& reps);

}  // namespace formclass
