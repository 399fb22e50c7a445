#pragma once

#include "matring/int_types.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace matring {

/// Integers.
struct ZRing {
    using Elem = Int;
    static constexpr const char* name() { return "Z"; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.str(); }
};

/// Prime field Z/pZ with canonical representatives in [0, p).
struct FpRing {
    using Elem = std::int64_t;
    std::int64_t p;

    explicit FpRing(std::int64_t prime) : p(prime) {
        if (prime < 2) throw std::domain_error("modulus must be >= 2");
    }
    static constexpr const char* name() { return "Fp"; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(const Int& v) const {
        Int r = v % p;
        if (r < 0) r += p;
        return (Elem)r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (Elem)(((__int128)a * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        auto e = xgcd(Int(a), Int(p));
        if (e.g != 1) throw std::domain_error("not invertible mod p");
        return from_int(e.s);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
};

/// Laurent polynomial over Z: finite support map exponent -> nonzero coefficient.
struct LPoly {
    std::map<int, Int> c;

    bool operator==(const LPoly& o) const { return c == o.c; }
};

/// Z[t] or Z[t, t^-1], chosen by the laurent flag (Z[t] rejects negative exponents).
struct LaurentRing {
    using Elem = LPoly;
    bool laurent = true;

    explicit LaurentRing(bool allow_negative_exponents = true)
        : laurent(allow_negative_exponents) {}
    static constexpr const char* name() { return "Z[t]"; }

    Elem zero() const { return {}; }
    Elem one() const { return monomial(0, 1); }
    Elem from_int(const Int& v) const { return monomial(0, v); }
    Elem monomial(int exp, const Int& coeff) const {
        if (!laurent && exp < 0) throw std::domain_error("negative exponent in Z[t]");
        LPoly r;
        if (coeff != 0) r.c[exp] = coeff;
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        LPoly r = a;
        for (auto& [e, v] : b.c) {
            Int& slot = r.c[e];
            slot += v;
            if (slot == 0) r.c.erase(e);
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        LPoly r;
        for (auto& [ea, va] : a.c)
            for (auto& [eb, vb] : b.c) {
                Int& slot = r.c[ea + eb];
                slot += va * vb;
                if (slot == 0) r.c.erase(ea + eb);
            }
        return r;
    }
    Elem neg(const Elem& a) const {
        LPoly r;
        for (auto& [e, v] : a.c) r.c[e] = -v;
        return r;
    }
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const {
        if (a.c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, v] : a.c) {
            if (!first && v > 0) os << "+";
            first = false;
            if (e == 0) {
                os << v.str();
            } else {
                if (v == -1) os << "-";
                else if (v != 1) os << v.str() << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }
};

}  // namespace matring
