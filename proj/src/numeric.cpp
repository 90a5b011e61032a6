#include "motzkin/numeric.hpp"

#include <stdexcept>

namespace motzkin {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1, b = base;
    for (; exp; exp >>= 1) {
        if (exp & 1u) result *= b;
        b *= b;
    }
    return result;
}

BigInt to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::invalid_argument("rational " + to_string(r) + " is not an integer");
    return numerator(r);
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace motzkin
