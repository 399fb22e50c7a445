#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace matring {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Extended gcd: returns g = gcd(a,b) >= 0 and s,t with s*a + t*b = g.
struct Xgcd {
    Int g, s, t;
};
Xgcd xgcd(const Int& a, const Int& b);

/// Floor of sqrt for n >= 0.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n, Int* root = nullptr);

bool is_probable_prime(const Int& n);

/// Prime factorization (trial division + Pollard-Brent rho), sorted ascending.
std::vector<Int> factor(Int n);

/// Distinct prime divisors of n > 0, sorted ascending.
std::vector<Int> prime_divisors(const Int& n);

std::vector<long> primes_up_to(long n);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

/// Fixed-point decimal rendering of num/den with the given number of digits.
std::string rational_decimal(const Int& num, const Int& den, int digits);

}  // namespace matring
