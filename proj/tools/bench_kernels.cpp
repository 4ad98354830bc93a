// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts: reduced-form enumeration over a negative discriminant and
// composition-table fill over a full set of class representatives.
//
// Usage: bench_kernels [enum_disc] [table_disc]
//   defaults: enumeration at D = -3999943, table fill at D = -49999

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "formclass/classgroup.hpp"
#include "formclass/json_io.hpp"
#include "formclass/kernels.hpp"

using namespace formclass;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

template <typename F>
double timed(F&& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return seconds_since(start);
}

void report(const char* label, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n",
                label, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        Int enum_disc = argc > 1 ? parse_int(argv[1]) : Int(-3999943);
        Int table_disc = argc > 2 ? parse_int(argv[2]) : Int(-49999);

        std::vector<BinaryForm> serial_classes, parallel_classes;
        double t_enum_serial =
            timed([&] { serial_classes = enumerate_classes_serial(enum_disc); });
        double t_enum_parallel = timed(
            [&] { parallel_classes = enumerate_classes_parallel(enum_disc); });
        if (serial_classes != parallel_classes) {
            std::fprintf(stderr, "enumeration results disagree\n");
            return 1;
        }
        std::printf("enumeration at D = %s: %zu classes\n",
                    to_string(enum_disc).c_str(), serial_classes.size());
        report("  enumerate_classes", t_enum_serial, t_enum_parallel);

        std::vector<BinaryForm> reps = enumerate_classes(table_disc);
        std::vector<std::vector<std::size_t>> serial_table, parallel_table;
        double t_table_serial = timed([&] {
            serial_table = composition_table_serial(Variant::wide, reps);
        });
        double t_table_parallel = timed([&] {
            parallel_table = composition_table_parallel(Variant::wide, reps);
        });
        if (serial_table != parallel_table) {
            std::fprintf(stderr, "composition tables disagree\n");
            return 1;
        }
        std::printf("table fill at D = %s: h = %zu\n",
                    to_string(table_disc).c_str(), reps.size());
        report("  composition_table", t_table_serial, t_table_parallel);
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
