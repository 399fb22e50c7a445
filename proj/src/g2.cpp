#include "matring/g2.hpp"

#include "matring/hnf.hpp"
#include "matring/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace matring {

namespace {
ZRing zz;

MatZ mk2(const Int& a11, const Int& a12, const Int& a21, const Int& a22) {
    MatZ m(zz, 2, 2);
    m(0, 0) = a11;
    m(0, 1) = a12;
    m(1, 0) = a21;
    m(1, 1) = a22;
    return m;
}

Int det2(const MatZ& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// det of the 4x4 with rows flatten(I), flatten(A), flatten(B), flatten(AB).
Int unital_span_det(const MatZ& a, const MatZ& b) {
    MatZ t(zz, 4, 4);
    MatZ id = MatZ::identity(zz, 2);
    MatZ ab = a * b;
    const MatZ* rows[4] = {&id, &a, &b, &ab};
    for (int i = 0; i < 4; ++i) {
        auto f = flatten(*rows[i]);
        for (int j = 0; j < 4; ++j) t(i, j) = f[j];
    }
    return det(t);
}

bool triple_generates(const MatZ& a, const MatZ& b) {
    return abs_int(unital_span_det(a, b)) == 1;
}

std::string fmt2(const MatZ& m) {
    std::ostringstream os;
    os << "[[" << m(0, 0).str() << "," << m(0, 1).str() << "],[" << m(1, 0).str() << ","
       << m(1, 1).str() << "]]";
    return os.str();
}

}  // namespace

QuadUnit QuadUnit::operator*(const QuadUnit& o) const {
    if (disc != o.disc) throw std::invalid_argument("discriminant mismatch");
    Int nd = d * o.d + disc * b * o.b;
    Int nb = d * o.b + b * o.d;
    if (nd % 2 != 0 || nb % 2 != 0)
        throw std::logic_error("unit product parity failure");
    return {nd / 2, nb / 2, disc, norm * o.norm};
}

bool QuadUnit::valid() const { return d * d - disc * b * b == Int(4) * norm; }

QuadUnit pell_fundamental(const Int& c) {
    if (c == 0)
        throw DegenerateDiscriminant("c = 0 gives the square discriminant 4");
    Int d_value = c * c + 4;
    // Least b > 0 with D b^2 -+ 4 a perfect square; at fixed b prefer the
    // smaller d. (b = 1, d = |c| always qualifies, so the scan is short; the
    // continued-fraction route pell_pm1 cross-checks this in the test suite.)
    for (Int b = 1; b <= 8; ++b) {
        Int base = d_value * b * b;
        Int root;
        if (is_perfect_square(base - 4, &root)) return {root, b, d_value, -1};
        if (is_perfect_square(base + 4, &root)) return {root, b, d_value, +1};
    }
    throw std::logic_error("no fundamental +-4 solution found");
}

QuadUnit pell_pm1(const Int& d_value) {
    Int a0;
    if (d_value <= 0 || is_perfect_square(d_value, &a0))
        throw DegenerateDiscriminant("D must be a positive non-square");
    a0 = isqrt(d_value);
    // Continued fraction of sqrt(D): alpha_k = (m_k + sqrt(D)) / q_k.
    Int m = 0, q = 1, a = a0;
    Int p_prev = 1, p_cur = a0;  // convergent numerators
    Int q_prev = 0, q_cur = 1;   // convergent denominators
    while (true) {
        m = a * q - m;
        q = (d_value - m * m) / q;
        a = (a0 + m) / q;
        // period ends when q returns to 1
        if (q == 1) {
            Int p_next = a * p_cur + p_prev;
            Int q_next = a * q_cur + q_prev;
            // at the end of the period the previous convergent solves +-1
            Int norm = p_cur * p_cur - d_value * q_cur * q_cur;
            if (norm == 1 || norm == -1)
                return {p_cur, q_cur, d_value, norm == 1 ? 1 : -1};
            p_prev = p_cur; p_cur = p_next;
            q_prev = q_cur; q_cur = q_next;
            continue;
        }
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
    }
}

G2Certificate g2_fast_check(const MatZ& a, const MatZ& b) {
    if (a.rows() != 2 || !a.square() || b.rows() != 2 || !b.square())
        throw std::invalid_argument("g2_fast_check expects 2x2 integer matrices");
    G2Certificate cert;
    cert.gcd_dets = gcd_int(gcd_int(det2(a), det2(b)), det2(a + b));
    cert.span_det = unital_span_det(a, b);
    cert.generates = cert.gcd_dets == 1 && abs_int(cert.span_det) == 1;
    return cert;
}

namespace {

struct ShapeState {
    MatZ a, b;
    std::vector<std::string> log;
};

/// Phases of the constructive reduction on a generating triple.
/// Returns nullopt when the final Bezout step cannot keep the (1,2) entry at 1.
std::optional<ShapeState> reduce_phases(MatZ a, MatZ b, std::vector<std::string> log) {
    // Phase 1: unimodular recombination sending the (1,2) entries to (1, 0).
    Int x12 = a(0, 1), y12 = b(0, 1);
    if (x12 == 0 && y12 == 0)
        throw NotGeneratingTriple("both (1,2) entries are zero");
    auto e = xgcd(x12, y12);
    if (e.g != 1)
        throw NotGeneratingTriple("gcd of the (1,2) entries exceeds 1");
    MatZ na = a.scaled(e.s) + b.scaled(e.t);
    MatZ nb = a.scaled(-y12) + b.scaled(x12);
    {
        std::ostringstream os;
        os << "recombine (A,B) <- (" << e.s.str() << "A+" << e.t.str() << "B, "
           << Int(-y12).str() << "A+" << x12.str() << "B): A=" << fmt2(na)
           << " B=" << fmt2(nb);
        log.push_back(os.str());
    }
    a = na;
    b = nb;

    // Phase 2: subtract multiples of I to clear the (2,2) entries.
    if (a(1, 1) != 0) {
        Int s = a(1, 1);
        a = a - MatZ::identity(zz, 2).scaled(s);
        log.push_back("A <- A - " + s.str() + "*I: A=" + fmt2(a));
    }
    if (b(1, 1) != 0) {
        Int s = b(1, 1);
        b = b - MatZ::identity(zz, 2).scaled(s);
        log.push_back("B <- B - " + s.str() + "*I: B=" + fmt2(b));
    }

    // Phase 3: Bezout on the (2,1) entries, keeping the (1,2) entry at 1.
    Int t = a(1, 0), bb = b(1, 0);
    if (gcd_int(t, bb) != 1)
        throw NotGeneratingTriple("gcd of the (2,1) entries exceeds 1");
    if (t != 1) {
        if (bb == 0) return std::nullopt;  // t = -1 here; not fixable linearly
        if ((Int(1) - t) % bb != 0) return std::nullopt;
        Int k = (Int(1) - t) / bb;
        a = a + b.scaled(k);
        log.push_back("A <- A + " + k.str() + "*B: A=" + fmt2(a));
    }

    // Normalize the sign of (a, b).
    if (b(1, 0) < 0 || (b(1, 0) == 0 && b(0, 0) < 0)) {
        b = -b;
        log.push_back("B <- -B: B=" + fmt2(b));
    }
    return ShapeState{a, b, log};
}

const std::vector<MatZ>& conjugator_generators() {
    static std::vector<MatZ> gens = {
        mk2(1, 1, 0, 1), mk2(1, -1, 0, 1), mk2(1, 0, 1, 1), mk2(1, 0, -1, 1),
        mk2(0, -1, 1, 0)};
    return gens;
}

}  // namespace

CanonicalTriple reduce_triple(const MatZ& a_in, const MatZ& b_in) {
    if (a_in.rows() != 2 || !a_in.square() || b_in.rows() != 2 || !b_in.square())
        throw std::invalid_argument("reduce_triple expects 2x2 integer matrices");
    if (!triple_generates(a_in, b_in))
        throw NotGeneratingTriple("(I, A, B) does not generate M_2(Z)");

    auto finish = [&](const ShapeState& st) {
        CanonicalTriple out;
        out.c = st.a(0, 0);
        out.a = st.b(0, 0);
        out.b = st.b(1, 0);
        out.a1 = st.a;
        out.b1 = st.b;
        out.log = st.log;
        if (gcd_int(out.a, out.b) != 1)
            throw std::logic_error("canonical pair is not coprime");
        Int eq = out.a * out.a - out.a * out.b * out.c - out.b * out.b;
        if (eq != 1 && eq != -1)
            throw std::logic_error("canonical triple fails the quadratic equation");
        if (!triple_generates(out.a1, out.b1))
            throw std::logic_error("reduction lost generation");
        return out;
    };

    if (auto st = reduce_phases(a_in, b_in, {})) return finish(*st);

    // The plain linear moves cannot reach the shape; conjugate the input pair
    // by short unimodular words and retry (conjugation preserves generation).
    std::vector<MatZ> frontier = {MatZ::identity(zz, 2)};
    std::set<std::string> seen = {fmt2(frontier[0])};
    for (int depth = 1; depth <= 8; ++depth) {
        std::vector<MatZ> next;
        for (auto& u : frontier)
            for (auto& g : conjugator_generators()) {
                MatZ v = u * g;
                if (!seen.insert(fmt2(v)).second) continue;
                next.push_back(v);
                MatZ vinv = unimodular_inverse(v);
                std::vector<std::string> log = {
                    "conjugate (A,B) by U=" + fmt2(v)};
                if (auto st = reduce_phases(vinv * a_in * v, vinv * b_in * v,
                                            std::move(log)))
                    return finish(*st);
            }
        frontier = std::move(next);
    }
    throw CanonicalFormUnreachable(
        "no canonical form found within the conjugation search bound");
}

G2Enumeration enumerate_solutions(const Int& c, int count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    G2Enumeration out;
    out.c = c;

    auto push_solution = [&](const Int& a, const Int& b, std::set<std::string>& seen) {
        Int eq = a * a - a * b * c - b * b;
        if (eq != 1 && eq != -1) throw std::logic_error("solution fails equation");
        std::string key = a.str() + "/" + b.str();
        if (!seen.insert(key).second) return;
        G2Solution sol;
        sol.a = a;
        sol.b = b;
        sol.equation_value = eq;
        sol.a1 = mk2(c, 1, 1, 0);
        sol.b1 = mk2(a, 0, b, 0);
        auto cert = g2_fast_check(sol.a1, sol.b1);
        sol.fast_check_passes = cert.generates;
        sol.triple_generates = triple_generates(sol.a1, sol.b1);
        out.solutions.push_back(std::move(sol));
    };

    std::set<std::string> seen;
    if (c == 0) {
        for (auto [a, b] : {std::pair<long, long>{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
            push_solution(a, b, seen);
    } else {
        QuadUnit u = pell_fundamental(c);
        QuadUnit acc = u;
        for (int k = 0; k < count; ++k) {
            if (!acc.valid()) throw std::logic_error("unit drifted off the Pell curve");
            out.units.push_back(acc);
            // a = (bc +- d)/2; both signs solve the quadratic, and (-a, -b)
            // is always the mirror solution.
            for (int sd : {+1, -1}) {
                Int d_signed = sd > 0 ? acc.d : -acc.d;
                Int num = acc.b * c + d_signed;
                if (num % 2 != 0) throw std::logic_error("parity failure in (bc +- d)/2");
                Int a = num / 2;
                push_solution(a, acc.b, seen);
                push_solution(-a, -acc.b, seen);
            }
            acc = acc * u;
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const G2Solution& l, const G2Solution& r) {
                  auto key = [](const G2Solution& s) {
                      return std::make_tuple(abs_int(s.b), abs_int(s.a), s.b, s.a);
                  };
                  return key(l) < key(r);
              });
    return out;
}

}  // namespace matring
