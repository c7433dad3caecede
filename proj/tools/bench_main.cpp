// Compares the serial reference kernels against the OpenMP kernels on a
// synthetic union of product terms and checks that both agree bit-exactly.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tmotive/vfset.hpp"

using namespace tmotive;

namespace {

HahnSeries series3(long a, long q1, long b, long q2, long c, long q3) {
    return HahnSeries::from_terms({{Rational(q1), Rational(a)},
                                   {Rational(q2), Rational(b)},
                                   {Rational(q3, 2), Rational(c)}});
}

VfSet make_union(std::size_t terms, std::size_t width) {
    VfSet s;
    s.terms.reserve(terms);
    for (std::size_t i = 0; i < terms; ++i) {
        const long k = static_cast<long>(i);
        VfProduct t;
        // first coordinate separates the terms: disjoint open point intervals
        t.factors.push_back(VInterval{
            Endpoint::at_point(series3(4 * k, 0, 1, 1, 1, 3), false),
            Endpoint::at_point(series3(4 * k + 2, 0, -1, 2, 3, 5), false)});
        if (width > 1)
            t.factors.push_back(Disc{series3(k, -1, k + 1, 0, 7, 3), Rational(k % 5, 2),
                                     /*closed=*/(k % 2) == 0});
        if (width > 2)
            t.factors.push_back(HalfThin{series3(1, 0, -k, 1, 2, 7), Rational(k % 7, 3),
                                         (k % 2) ? 1 : -1});
        for (std::size_t w = 3; w < width; ++w)
            t.factors.push_back(VInterval{
                Endpoint::at_disc(Disc{series3(-k, 0, 2, 1, 1, 9), Rational(3), true}, w % 2),
                Endpoint::pos_infinity()});
        s.terms.push_back(std::move(t));
    }
    return s;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t terms = 1024;
    std::size_t width = 3;
    int reps = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--terms")) terms = std::stoul(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--width")) width = std::stoul(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--reps")) reps = std::stoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "usage: tmotive_bench [--terms N] [--width W] [--reps R]\n");
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled; both kernels run serially\n");
#endif
    std::printf("union terms: %zu, product width: %zu\n", terms, width);

    const VfSet s = make_union(terms, width);

    double tvs = 0, tvp = 0, tis = 0, tip = 0;
    GradedYX serial_class, parallel_class;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        validate_serial(s);
        tvs += ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        validate_parallel(s);
        tvp += ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        serial_class = vf_class_serial(s);
        tis += ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        parallel_class = vf_class_parallel(s);
        tip += ms_since(t0);
    }
    tvs /= reps;
    tvp /= reps;
    tis /= reps;
    tip /= reps;

    if (!(serial_class == parallel_class)) {
        std::fprintf(stderr, "kernel mismatch: serial and parallel classes differ\n");
        return 1;
    }
    if (!(integrate_serial(s) == integrate_parallel(s))) {
        std::fprintf(stderr, "kernel mismatch: serial and parallel integrals differ\n");
        return 1;
    }

    std::printf("%-22s %10.2f ms\n", "validate serial", tvs);
    std::printf("%-22s %10.2f ms  (x%.2f)\n", "validate openmp", tvp, tvp > 0 ? tvs / tvp : 0.0);
    std::printf("%-22s %10.2f ms\n", "integrate serial", tis);
    std::printf("%-22s %10.2f ms  (x%.2f)\n", "integrate openmp", tip, tip > 0 ? tis / tip : 0.0);
    std::printf("kernels agree\n");
    return 0;
}
