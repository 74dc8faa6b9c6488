#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidity/errors.hpp"

namespace rigidity {

// Exact arithmetic for the optional rational-rank path.
using BigRational = boost::multiprecision::cpp_rational;

// Small normalized rational, used for surface parameters and for rational
// configurations in JSON ([num, den] pairs).
struct Rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat64() = default;
    Rat64(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InputError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    BigRational big() const { return BigRational(num, den); }

    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num == b.num && a.den == b.den;
    }
    // exact comparison; operands are small so the 128-bit product is safe
    friend bool operator<(const Rat64& a, const Rat64& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

using Vec3Q = std::array<BigRational, 3>;

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace rigidity
