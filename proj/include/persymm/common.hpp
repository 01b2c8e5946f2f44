#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace persymm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// 2^e for e >= 0.
inline BigInt pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    BigInt r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

// 2^e as an exact rational, e may be negative.
inline BigRational pow2q(long e) {
    if (e >= 0) return BigRational(pow2(e));
    return BigRational(1, pow2(-e));
}

// Converts an exact rational that is known to be integral.
inline BigInt to_integer(const BigRational& q, const char* what) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error(std::string(what) + ": non-integral value");
    return boost::multiprecision::numerator(q);
}

inline std::uint64_t low_mask(int bits) {
    if (bits <= 0) return 0;
    if (bits >= 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << bits) - 1;
}

// Thrown when an enumeration would exceed the configured work cap.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace persymm
