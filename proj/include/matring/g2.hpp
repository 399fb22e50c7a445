#pragma once

#include "matring/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matring {

/// Solution (d, b) of d^2 - D b^2 = +-4 standing for the unit (d + b sqrt(D))/2,
/// D = c^2 + 4.
struct QuadUnit {
    Int d, b, disc;
    int norm = 0;  // sign of (d^2 - D b^2) / 4

    /// Multiplication law of the quadratic order.
    QuadUnit operator*(const QuadUnit& o) const;
    bool valid() const;
};

struct DegenerateDiscriminant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotGeneratingTriple : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CanonicalFormUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fundamental solution (least b > 0, then least d > 0) of d^2 - (c^2+4) b^2 = +-4.
QuadUnit pell_fundamental(const Int& c);

/// Smallest positive solution of x^2 - D y^2 = +-1 via the continued fraction
/// of sqrt(D); norm is the achieved sign. D must be a positive non-square.
QuadUnit pell_pm1(const Int& d_value);

struct G2Certificate {
    bool generates = false;
    Int gcd_dets;   // gcd(det A, det B, det(A+B))
    Int span_det;   // det of the flattened (I, A, B, AB) rows
};

/// Fast membership test for G_2(Z): gcd condition + unital span determinant.
G2Certificate g2_fast_check(const MatZ& a, const MatZ& b);

/// Triple (I, A1, B1) in the canonical shape A1 = [[c,1],[1,0]], B1 = [[a,0],[b,0]].
struct CanonicalTriple {
    Int c, a, b;
    MatZ a1, b1;
    std::vector<std::string> log;  // the elementary reduction steps taken
};

/// Constructive reduction of a generating triple (I, A, B) to canonical shape.
CanonicalTriple reduce_triple(const MatZ& a, const MatZ& b);

struct G2Solution {
    Int a, b;
    Int equation_value;  // a^2 - abc - b^2, always +-1
    MatZ a1, b1;         // assembled pair
    bool fast_check_passes = false;
    bool triple_generates = false;
};

struct G2Enumeration {
    Int c;
    std::vector<QuadUnit> units;       // fundamental unit powers (empty for c = 0)
    std::vector<G2Solution> solutions; // sorted by (|b|, |a|, b, a)
};

/// Solutions of a^2 - abc - b^2 = +-1 for fixed c from k successive units
/// (degenerate family for c = 0), with assembled pairs.
G2Enumeration enumerate_solutions(const Int& c, int count);

}  // namespace matring
