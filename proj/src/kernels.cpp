#include "formclass/kernels.hpp"

#include <atomic>
#include <exception>
#include <string>
#include <utility>

#include "formclass/errors.hpp"

namespace formclass {

namespace {

// Shared failure slot for loops whose bodies run inside an OpenMP region,
// where exceptions must not escape an iteration.  The first failure wins;
// later iterations see the flag and skip their work.
struct Failure {
    std::atomic<bool> failed{false};
    bool invalid_input = false;
    std::string message;

    void capture_current_exception() {
#pragma omp critical(formclass_kernel_failure)
        if (!failed) {
            failed = true;
            try {
                throw;
            } catch (const validation_error& e) {
                invalid_input = true;
                message = e.what();
            } catch (const std::exception& e) {
                message = e.what();
            } catch (...) {
                message = "unknown error inside parallel kernel";
            }
        }
    }

    void rethrow_if_failed() const {
        if (!failed) return;
        if (invalid_input) throw validation_error(message);
        throw internal_error(message);
    }
};

// Reduced positive definite forms with leading coefficient a, ordered by b
// descending — one independent slice of the enumeration scan.
std::vector<BinaryForm> definite_slice(const Int& D, const Int& a) {
    std::vector<BinaryForm> out;
    for (Int b = a; b > -a; --b) {
        Int num = b * b - D;
        if (num % (4 * a) != 0) continue;
        Int c = num / (4 * a);
        if (c < a) continue;
        if (b < 0 && (-b == a || a == c)) continue;  // tie-break b >= 0
        if (gcd3(a, b, c) != 1) continue;
        out.push_back(BinaryForm{a, b, c});
    }
    return out;
}

std::size_t match_class(Variant variant, const BinaryForm& f,
                        const std::vector<BinaryForm>& reps) {
    for (std::size_t k = 0; k < reps.size(); ++k)
        if (same_class(variant, f, reps[k])) return k;
    throw internal_error("primitive form matches no class representative");
}

}  // namespace

std::vector<BinaryForm> enumerate_classes_serial(const Int& D) {
    return enumerate_classes(D);
}

std::vector<BinaryForm> enumerate_classes_parallel(const Int& D) {
    validate_discriminant(D);
    Int bound = isqrt(abs_of(D) / 3);
    if (D > 0 || !fits_int64(bound)) return enumerate_classes(D);

    const long long amax = to_int64(bound);
    std::vector<std::vector<BinaryForm>> slices(
        static_cast<std::size_t>(amax));
    Failure failure;
#pragma omp parallel for schedule(dynamic)
    for (long long a = 1; a <= amax; ++a) {
        if (failure.failed) continue;
        try {
            slices[static_cast<std::size_t>(a - 1)] = definite_slice(D, Int(a));
        } catch (...) {
            failure.capture_current_exception();
        }
    }
    failure.rethrow_if_failed();

    std::vector<BinaryForm> out;
    for (std::vector<BinaryForm>& slice : slices)
        for (BinaryForm& f : slice) out.push_back(std::move(f));
    return out;
}

std::vector<std::vector<std::size_t>> composition_table_serial(
    Variant variant, const std::vector<BinaryForm>& reps) {
    const std::size_t h = reps.size();
    std::vector<std::vector<std::size_t>> table(
        h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            table[i][j] = match_class(variant, compose(reps[i], reps[j]), reps);
    return table;
}

std::vector<std::vector<std::size_t>> composition_table_parallel(
    Variant variant, const std::vector<BinaryForm>& reps) {
    const long long h = static_cast<long long>(reps.size());
    std::vector<std::vector<std::size_t>> table(
        reps.size(), std::vector<std::size_t>(reps.size(), 0));
    Failure failure;
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long long i = 0; i < h; ++i)
        for (long long j = 0; j < h; ++j) {
            if (failure.failed) continue;
            try {
                auto si = static_cast<std::size_t>(i);
                auto sj = static_cast<std::size_t>(j);
                table[si][sj] =
                    match_class(variant, compose(reps[si], reps[sj]), reps);
            } catch (...) {
                failure.capture_current_exception();
            }
        }
    failure.rethrow_if_failed();
    return table;
}

}  // namespace formclass
