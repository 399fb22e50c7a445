#include "matring/int_types.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace matring {

Xgcd xgcd(const Int& a, const Int& b) {
    // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    Int r0 = a, r1 = b;
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;  // truncated division is fine, signs handled at the end
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) {
        r0 = -r0; s0 = -s0; t0 = -t0;
    }
    return {r0, s0, t0};
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = Int(1) << (unsigned)((msb(n) / 2) + 1);
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

namespace {

Int pollard_rho(const Int& n) {
    // Floyd cycle detection on y -> y^2 + c mod n, retrying with new c on failure.
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor, try next c
            d = gcd_int(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(Int n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<Int> factor(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("factor(0)");
    std::vector<Int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    auto fs = factor(n);
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(std::max(n + 1, 2L), true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= n; ++i)
        if (sieve[i])
            for (long j = i * i; j <= n; j += i) sieve[j] = false;
    std::vector<long> ps;
    for (long i = 2; i <= n; ++i)
        if (sieve[i]) ps.push_back(i);
    return ps;
}

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& s) { return Int(s); }

std::string rational_decimal(const Int& num, const Int& den, int digits) {
    if (den == 0) throw std::domain_error("zero denominator");
    Int n = num, d = den;
    if (d < 0) { d = -d; n = -n; }
    std::string sign = n < 0 ? "-" : "";
    if (n < 0) n = -n;
    Int ip = n / d;
    Int rem = n % d;
    std::ostringstream os;
    os << sign << ip.str();
    if (digits > 0) {
        os << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            os << Int(rem / d).str();
            rem %= d;
        }
    }
    return os.str();
}

}  // namespace matring
