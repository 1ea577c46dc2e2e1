#include "drsop/rng.hpp"

#include <cmath>

namespace drsop {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double portable_exp(double x) {
    if (x != x) return x;
    if (x >= 710.0) return HUGE_VAL;
    if (x <= -746.0) return 0.0;

    // exp(x) = 2^k * exp(r), r = x - k*ln2 with |r| <= ln2/2.
    static constexpr double kLog2E = 1.4426950408889634074;
    static constexpr double kLn2Hi = 6.93147180369123816490e-01;
    static constexpr double kLn2Lo = 1.90821492927058770002e-10;

    double kd = x * kLog2E;
    // Round-to-nearest without relying on libm rint.
    int k = static_cast<int>(kd >= 0.0 ? kd + 0.5 : kd - 0.5);
    double r = (x - k * kLn2Hi) - k * kLn2Lo;

    // Taylor series on |r| <= 0.347; terms to r^13 keep the error near 1 ulp.
    double term = r;
    double sum = 1.0 + r;
    for (int i = 2; i <= 13; ++i) {
        term *= r / i;
        sum += term;
    }

    return std::ldexp(sum, k); // exact scaling by 2^k
}

} // namespace drsop
