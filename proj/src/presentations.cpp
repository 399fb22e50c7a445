#include "matring/presentations.hpp"

#include "matring/hnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace matring {

namespace {
ZRing zz;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Grigdream: return "grigdream";
        case Variant::Dnepr: return "dnepr";
        case Variant::Said45: return "said45";
        case Variant::Troika: return "troika";
        case Variant::Dvoika: return "dvoika";
        case Variant::NoIdentity: return "noidentity";
        case Variant::Modular: return "modular";
        case Variant::SaidwantsFull: return "saidwants_full";
        case Variant::SaidwantsH: return "saidwants_H";
    }
    return "?";
}

std::string PresentationSpec::name() const {
    std::ostringstream os;
    os << variant_name(variant) << "(n=" << n;
    if (variant == Variant::Modular) os << ",m=" << shift.str();
    if (variant == Variant::SaidwantsH) {
        os << ",H={";
        for (std::size_t i = 0; i < h_set.size(); ++i) os << (i ? "," : "") << h_set[i];
        os << "}";
    }
    os << ")";
    return os.str();
}

PresentationSpec standard_relators(int n, Variant v, const Int& shift,
                                   const std::vector<int>& h) {
    if (n < 2) throw std::invalid_argument("presentations need n >= 2");
    PresentationSpec spec;
    spec.n = n;
    spec.variant = v;
    spec.shift = shift;
    spec.h_set = h;
    auto add = [&](const std::string& name, const NcPoly& p) {
        spec.relator_names.push_back(name);
        spec.relators.push_back(p);
    };
    auto sname = [](int j) { return "s" + std::to_string(j); };

    switch (v) {
        case Variant::Grigdream:
            add("r1", relator_r1(n));
            add("r2", relator_r2(n));
            for (int j = 1; j <= n - 1; ++j) add(sname(j), relator_sj(j));
            break;
        case Variant::Dnepr:
            add("r1", relator_r1(n));
            add("r2", relator_r2(n));
            add("s0", relator_s0());
            for (int j = 1; j <= n / 2; ++j) add(sname(j), relator_sj(j));
            break;
        case Variant::Said45:
            if (n != 4 && n != 5)
                throw std::invalid_argument("said45 requires n in {4, 5}");
            add("r1", relator_r1(n));
            add("r2", relator_r2(n));
            add("s0", relator_s0());
            add("s1", relator_sj(1));
            break;
        case Variant::Troika: {
            if (n != 3) throw std::invalid_argument("troika is the n = 3 presentation");
            add("r1", relator_r1(3));
            NcPoly r(true);  // y + x^2 y x + x y x^2 - 1
            r.add_term("y", 1);
            r.add_term("xxyx", 1);
            r.add_term("xyxx", 1);
            r.add_term("", -1);
            add("r2'", r);
            add("s1", relator_sj(1));
            break;
        }
        case Variant::Dvoika: {
            if (n != 2) throw std::invalid_argument("dvoika is the n = 2 presentation");
            add("r1", relator_r1(2));
            NcPoly r(true);  // y + x y x - 1
            r.add_term("y", 1);
            r.add_term("xyx", 1);
            r.add_term("", -1);
            add("r2'", r);
            add("s1", relator_sj(1));
            break;
        }
        case Variant::NoIdentity: {
            spec.unital = false;
            NcPoly p1(false);  // x^{n+1} - x
            p1.add_term(Word((std::size_t)n + 1, 'x'), 1);
            p1.add_term("x", -1);
            add("x^{n+1}-x", p1);
            NcPoly p2(false);  // y x^n - y
            p2.add_term("y" + Word((std::size_t)n, 'x'), 1);
            p2.add_term("y", -1);
            add("yx^n-y", p2);
            // -x^n + sum x^i y x^{n-i}: the orientation the kernel argument
            // expands, matching the transposed cycle of this presentation
            NcPoly p3(false);
            p3.add_term(Word((std::size_t)n, 'x'), -1);
            for (int i = 0; i < n; ++i)
                p3.add_term(Word((std::size_t)i, 'x') + "y" + Word((std::size_t)(n - i), 'x'), 1);
            add("sum-x^n", p3);
            for (int j = 1; j <= n - 1; ++j) add(sname(j), relator_sj(j));
            break;
        }
        case Variant::Modular: {
            auto base = standard_relators(n, Variant::Grigdream);
            for (std::size_t i = 0; i < base.relators.size(); ++i)
                add(base.relator_names[i] + "@shift", base.relators[i].shift_y(shift));
            break;
        }
        case Variant::SaidwantsFull:
            add("r1", relator_r1(n));
            add("s0", relator_s0());
            for (int j = 1; j <= n - 1; ++j) add(sname(j), relator_sj(j));
            break;
        case Variant::SaidwantsH: {
            std::set<int> hs(h.begin(), h.end());
            if (hs.empty() || (int)hs.size() >= n - 1 ||
                *hs.begin() < 1 || *hs.rbegin() > n - 1)
                throw std::invalid_argument(
                    "H must be a nonempty proper subset of {1..n-1}");
            add("r1", relator_r1(n));
            add("r2", relator_r2(n));
            for (int j = 1; j <= n - 1; ++j)
                if (!hs.count(j)) add(sname(j), relator_sj(j));
            break;
        }
    }
    return spec;
}

namespace {

/// Words of lengths 0..L indexed in degree-lexicographic order; the sparse
/// elimination pivots on the largest (longest) word.
struct WordIndex {
    std::vector<std::vector<Word>> by_length;  // [len] -> lex-sorted words
    std::unordered_map<Word, std::int32_t> id;
    std::vector<Word> word_of;

    WordIndex(int max_len, bool unital) {
        by_length.resize(max_len + 1);
        by_length[0] = {""};
        for (int len = 1; len <= max_len; ++len) {
            by_length[len].reserve((std::size_t)1 << len);
            for (auto& w : by_length[len - 1])
                for (char c : {'x', 'y'}) by_length[len].push_back(w + c);
        }
        std::int32_t next = 0;
        if (unital) {
            id[""] = next;
            word_of.push_back("");
            ++next;
        }
        for (int len = 1; len <= max_len; ++len)
            for (auto& w : by_length[len]) {
                id[w] = next;
                word_of.push_back(w);
                ++next;
            }
    }

    std::size_t count() const { return word_of.size(); }
};

SparseRow poly_row(const NcPoly& p, const Word& left, const Word& right,
                   const WordIndex& index) {
    SparseRow row;
    row.reserve(p.terms().size());
    for (auto& [w, c] : p.terms()) {
        auto it = index.id.find(left + w + right);
        if (it == index.id.end()) throw std::logic_error("word outside the index");
        row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return row;
}

int max_relator_degree(const PresentationSpec& spec) {
    int d = 0;
    for (auto& r : spec.relators) d = std::max(d, r.degree());
    return d;
}

/// Runs the relation-lattice elimination level by level. after_level is called
/// with the total degree just finished; returning false stops early.
void build_relation_lattice(const PresentationSpec& spec, int degree_bound,
                            const WordIndex& index, SparseHermite& herm,
                            std::vector<CertTerm>* gen_desc,
                            const std::function<bool(int)>& after_level) {
    // monomial and short relators first: their pivots never grow tails
    std::vector<std::size_t> order(spec.relators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return spec.relators[a].terms().size() < spec.relators[b].terms().size();
    });

    std::int32_t gen_id = 0;
    for (int d = 1; d <= degree_bound; ++d) {
        for (std::size_t ri : order) {
            const NcPoly& r = spec.relators[ri];
            int dr = r.degree();
            int room = d - dr;
            if (room < 0) continue;
            for (int lu = 0; lu <= room; ++lu) {
                int lv = room - lu;
                for (auto& u : index.by_length[lu])
                    for (auto& v : index.by_length[lv]) {
                        if (gen_desc)
                            gen_desc->push_back({u, (int)ri, v, 0});
                        herm.insert(poly_row(r, u, v, index), gen_id);
                        ++gen_id;
                    }
            }
        }
        if (!after_level(d)) return;
    }
}

}  // namespace

QuotientRank bounded_quotient_rank(const PresentationSpec& spec, int degree_bound,
                                   std::size_t word_cap) {
    if (degree_bound < max_relator_degree(spec))
        throw std::invalid_argument("degree bound below the largest relator degree");
    std::size_t words =
        ((std::size_t)1 << (degree_bound + 1)) - 2 + (spec.unital ? 1 : 0);
    if (words > word_cap)
        throw ResourceCapExceeded("word basis exceeds the configured cap");

    WordIndex index(degree_bound, spec.unital);
    SparseHermite herm(false);
    build_relation_lattice(spec, degree_bound, index, herm, nullptr,
                           [](int) { return true; });

    // Pivot rows with lead inside a word window have their whole support
    // inside it, so for every s the window pivots are an echelon basis of
    // (relation lattice) n (span of words of length <= s). Words of length
    // close to the degree bound are relation-starved: their image rank is
    // inflated until the bound grows. The reported rank is the value on the
    // longest interior plateau of s -> image rank; once the plateau contains
    // the true stable window, enlarging the bound does not change the value.
    auto leads = herm.pivot_leads();
    std::vector<long> image_rank(degree_bound + 1, 0);
    std::vector<std::int32_t> window_top(degree_bound + 1, -1);
    for (int s = 1; s <= degree_bound; ++s) {
        std::size_t ws = ((std::size_t)1 << (s + 1)) - 2 + (spec.unital ? 1 : 0);
        window_top[s] = (std::int32_t)ws - 1;
        std::size_t pivots_in = 0;
        for (auto c : leads)
            if (c <= window_top[s]) ++pivots_in;
        image_rank[s] = (long)ws - (long)pivots_in;
    }
    int best_start = degree_bound, best_len = 1;
    int run_start = 1;
    for (int s = 2; s <= degree_bound; ++s) {
        if (image_rank[s] != image_rank[run_start]) run_start = s;
        int len = s - run_start + 1;
        if (len >= best_len) {
            best_len = len;
            best_start = run_start;
        }
    }
    int window = best_start + best_len - 1;

    QuotientRank out;
    out.stabilized = best_len >= 2;
    out.window = out.stabilized ? window : degree_bound;
    out.word_count =
        ((std::size_t)1 << (out.window + 1)) - 2 + (spec.unital ? 1 : 0);
    out.free_rank = image_rank[out.window];
    std::size_t pivots_in = 0;
    for (auto c : leads)
        if (c <= window_top[out.window]) ++pivots_in;
    out.relation_rank = pivots_in;
    out.torsion = herm.nontrivial_divisors(window_top[out.window]);
    return out;
}

std::optional<MembershipCertificate> ideal_membership_bounded(
    const NcPoly& target, const PresentationSpec& spec, int degree_bound,
    std::size_t word_cap) {
    if (target.degree() > degree_bound)
        throw std::invalid_argument("degree bound below the target degree");
    if (target.is_zero()) {
        return MembershipCertificate{target, {}, 0};
    }
    std::size_t words =
        ((std::size_t)1 << (degree_bound + 1)) - 2 + (spec.unital ? 1 : 0);
    if (words > word_cap)
        throw ResourceCapExceeded("word basis exceeds the configured cap");

    WordIndex index(degree_bound, spec.unital);
    SparseHermite herm(true);
    std::vector<CertTerm> gens;
    SparseRow target_row = poly_row(target, "", "", index);

    std::optional<int> found_at;
    std::vector<std::pair<std::int32_t, Int>> combo;
    build_relation_lattice(spec, degree_bound, index, herm, &gens, [&](int d) {
        combo.clear();
        if (herm.reduce(target_row, &combo).empty()) {
            found_at = d;
            return false;
        }
        return true;
    });
    if (!found_at) return std::nullopt;

    MembershipCertificate cert;
    cert.target = target;
    cert.degree_bound = *found_at;
    for (auto& [gid, coeff] : combo) {
        CertTerm t = gens[(std::size_t)gid];
        t.coeff = coeff;
        cert.terms.push_back(std::move(t));
    }
    if (!verify_certificate(cert, spec))
        throw std::logic_error("certificate failed re-expansion");
    return cert;
}

bool verify_certificate(const MembershipCertificate& cert, const PresentationSpec& spec) {
    NcPoly sum(spec.unital);
    for (auto& t : cert.terms) {
        NcPoly u = NcPoly::word(t.left, 1, true);
        NcPoly v = NcPoly::word(t.right, 1, true);
        sum = sum + (u * spec.relators[(std::size_t)t.relator] * v).scaled(t.coeff);
    }
    return sum == cert.target;
}

namespace {

/// Sparse flattening of Laurent-entry matrices over dynamically indexed
/// (row, col, exponent) columns.
struct LaurentFlattener {
    std::map<std::tuple<std::size_t, std::size_t, int>, std::int32_t> ids;
    std::int32_t next = 0;

    SparseRow flatten(const MatL& m) {
        SparseRow row;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (auto& [e, c] : m(i, j).c) {
                    auto key = std::make_tuple(i, j, e);
                    auto it = ids.find(key);
                    if (it == ids.end()) it = ids.emplace(key, next++).first;
                    row.emplace_back(it->second, c);
                }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        return row;
    }
};

MatL laurent_cycle(const LaurentRing& ring, int n) {
    MatL x(ring, n, n);
    for (int i = 0; i + 1 < n; ++i) x(i + 1, i) = ring.one();
    x(0, n - 1) = ring.one();
    return x;
}

}  // namespace

WitnessReport witness_rank_growth(WitnessKind kind, int n, int h,
                                  const std::vector<int>& cutoffs) {
    if (n < 2) throw std::invalid_argument("witnesses need n >= 2");
    if (kind == WitnessKind::Elim7 && (h < 1 || h > n - 1))
        throw std::invalid_argument("elim7 needs 1 <= h <= n-1");
    if (kind == WitnessKind::Elim8 && (h < 1 || 2 * h > n - 1))
        throw std::invalid_argument("elim8 needs 1 <= h < 2h <= n-1");
    if (cutoffs.empty()) throw std::invalid_argument("need at least one cutoff");

    bool laurent = kind == WitnessKind::Elim1;
    LaurentRing ring(laurent);
    MatL a(ring, n, n), b(ring, n, n);
    WitnessReport report;
    report.kind = kind;
    report.n = n;
    report.h = h;

    switch (kind) {
        case WitnessKind::Elim1:
            // A = tX, B = t^-n E11
            a = laurent_cycle(ring, n).scaled(ring.monomial(1, 1));
            b(0, 0) = ring.monomial(-n, 1);
            report.expected_nonzero = {"r1"};
            break;
        case WitnessKind::Elim2:
            // A = X, B = t E11
            a = laurent_cycle(ring, n);
            b(0, 0) = ring.monomial(1, 1);
            report.expected_nonzero = {"r2"};
            break;
        case WitnessKind::Elim7:
            // Y1 = t E11 + (1-t) E_{1+h,1+h}
            a = laurent_cycle(ring, n);
            b(0, 0) = ring.monomial(1, 1);
            b(h, h) = ring.sub(ring.one(), ring.monomial(1, 1));
            report.expected_nonzero = {"s" + std::to_string(h),
                                       "s" + std::to_string(n - h)};
            break;
        case WitnessKind::Elim8: {
            // Y1 = E11 + t E_{1,1+h} - t E_{1-h,1}
            a = laurent_cycle(ring, n);
            b(0, 0) = ring.one();
            b(0, h) = ring.monomial(1, 1);
            b((n - h) % n, 0) = ring.neg(ring.monomial(1, 1));
            report.expected_nonzero = {"s" + std::to_string(h),
                                       "s" + std::to_string(2 * h)};
            break;
        }
    }

    // Audit the grigdream relator family at the witness pair.
    auto grig = standard_relators(n, Variant::Grigdream);
    std::set<std::string> expected(report.expected_nonzero.begin(),
                                   report.expected_nonzero.end());
    report.audit_matches_proof = true;
    for (std::size_t i = 0; i < grig.relators.size(); ++i) {
        bool vanishes = grig.relators[i].eval(a, b).is_zero();
        report.relator_audit.emplace_back(grig.relator_names[i], vanishes);
        bool should_vanish = !expected.count(grig.relator_names[i]);
        if (vanishes != should_vanish) report.audit_matches_proof = false;
    }

    // Monomial audit for elim7/elim8: Y1 X^i Y1 X^-i = 0 except at the kept h's.
    if (kind == WitnessKind::Elim7 || kind == WitnessKind::Elim8) {
        std::set<int> keep = kind == WitnessKind::Elim7
                                 ? std::set<int>{h, n - h}
                                 : std::set<int>{h, 2 * h};
        for (int i = 1; i <= n - 1; ++i) {
            MatL xi = a.pow((unsigned long)i);
            MatL xni = a.pow((unsigned long)(n - i));
            MatL val = b * xi * b * xni;
            bool zero = val.is_zero();
            report.monomial_audit.emplace_back(i, zero);
            if (zero != !keep.count(i)) report.audit_matches_proof = false;
        }
    }

    // Additive rank of the span of word values at each cutoff.
    std::vector<int> cuts = cutoffs;
    std::sort(cuts.begin(), cuts.end());
    int max_cut = cuts.back();
    LaurentFlattener flat;
    SparseHermite herm(false);
    std::vector<MatL> level;
    std::size_t ci = 0;
    for (int len = 1; len <= max_cut; ++len) {
        std::vector<MatL> next;
        if (len == 1) {
            next = {a, b};
        } else {
            next.reserve(level.size() * 2);
            for (auto& v : level) {
                next.push_back(v * a);
                next.push_back(v * b);
            }
        }
        for (auto& v : next) herm.insert(flat.flatten(v));
        while (ci < cuts.size() && cuts[ci] == len) {
            report.rank_sequence.emplace_back(len, herm.rank());
            ++ci;
        }
        level = std::move(next);
    }
    report.strictly_increasing = report.rank_sequence.size() >= 2;
    for (std::size_t i = 0; i + 1 < report.rank_sequence.size(); ++i)
        if (report.rank_sequence[i + 1].second <= report.rank_sequence[i].second)
            report.strictly_increasing = false;

    // Marker memberships from the proofs.
    if (kind == WitnessKind::Elim7) {
        MatL marker(ring, n, n);  // t(t-1) I
        for (int i = 0; i < n; ++i)
            marker(i, i) = ring.sub(ring.monomial(2, 1), ring.monomial(1, 1));
        report.marker_name = "t(t-1)I";
        report.contains_marker = herm.contains(flat.flatten(marker));
    } else if (kind == WitnessKind::Elim8) {
        int e = ((1 - h) % n + n) % n;
        MatL xe = a.pow((unsigned long)e);
        MatL marker = xe.scaled(ring.monomial(2, 1));  // t^2 X^{1-h}
        report.marker_name = "t^2 X^{1-h}";
        report.contains_marker = herm.contains(flat.flatten(marker));
    }
    return report;
}

HConditionReport check_H_conditions(int n, const std::vector<int>& h) {
    std::set<int> hs(h.begin(), h.end());
    if (hs.empty() || (int)hs.size() >= n - 1)
        throw std::invalid_argument("H must be a nonempty proper subset of {1..n-1}");
    for (int v : hs)
        if (v < 1 || v > n - 1)
            throw std::invalid_argument("H must be a subset of {1..n-1}");

    HConditionReport report;
    report.convention =
        "sums congruent to 0 mod n are excluded from condition (a): H' lies in "
        "{1..n-1}, so 0 cannot be required to belong to it";

    std::set<int> pm;  // -H u H mod n
    for (int v : hs) {
        pm.insert(v % n);
        pm.insert(((-v) % n + n) % n);
    }
    for (int a : pm)
        for (int b : pm) {
            int s = (a + b) % n;
            if (s == 0) continue;  // declared convention
            if (hs.count(s)) {
                report.valid = false;
                report.violated_condition = "a";
                report.witness = {a, b, s};
                return report;
            }
        }
    for (int hh : hs)
        for (int k : hs)
            for (int l : hs) {
                int v = ((-hh + k + l) % n + n) % n;
                if (hs.count(v) && hh != k && hh != l) {
                    report.valid = false;
                    report.violated_condition = "b";
                    report.witness = {hh, k, l, v};
                    return report;
                }
            }
    report.valid = true;
    return report;
}

namespace {

/// Element of the two-block extension ring: (A, U, V, z) standing for the
/// block matrix [[A, 0], [xi U + eta V, z]].
struct MagnusElem {
    MatZ a, u, v;
    Int z;

    MagnusElem(int n)
        : a(zz, (std::size_t)n, (std::size_t)n),
          u(zz, (std::size_t)n, (std::size_t)n),
          v(zz, (std::size_t)n, (std::size_t)n),
          z(0) {}

    MagnusElem mul(const MagnusElem& o) const {
        MagnusElem r((int)a.rows());
        r.a = a * o.a;
        r.u = u * o.a + o.u.scaled(z);
        r.v = v * o.a + o.v.scaled(z);
        r.z = z * o.z;
        return r;
    }
    MagnusElem sub(const MagnusElem& o) const {
        MagnusElem r((int)a.rows());
        r.a = a - o.a;
        r.u = u - o.u;
        r.v = v - o.v;
        r.z = z - o.z;
        return r;
    }
    std::vector<Int> flat() const {
        std::vector<Int> out;
        auto push = [&](const MatZ& m) {
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
        };
        push(a);
        push(u);
        push(v);
        out.push_back(z);
        return out;
    }
};

/// Lattice closure of the two-sided ideal generated by g.
LatticeBasis ideal_closure(const MagnusElem& g, const std::vector<MagnusElem>& gens,
                           std::size_t cap) {
    std::size_t dim = g.flat().size();
    HermiteAccum acc(dim);
    std::vector<MagnusElem> queue;
    if (acc.insert(g.flat())) queue.push_back(g);
    std::size_t steps = 0;
    while (!queue.empty()) {
        MagnusElem e = queue.back();
        queue.pop_back();
        for (auto& m : gens) {
            for (MagnusElem f : {m.mul(e), e.mul(m)}) {
                if (++steps > cap)
                    throw ResourceCapExceeded("ideal closure exceeded the iteration cap");
                auto row = f.flat();
                if (!acc.contains(row)) {
                    acc.insert(row);
                    queue.push_back(f);
                }
            }
        }
    }
    return acc.to_lattice();
}

}  // namespace

MagnusReport magnus_directness(int n, std::size_t closure_cap) {
    if (n < 2) throw std::invalid_argument("magnus extension needs n >= 2");
    MagnusReport report;
    report.n = n;

    MagnusElem one(n), gx(n), gy(n);
    one.a = MatZ::identity(zz, n);
    one.z = 1;
    gx.a = MatZ::cycle(zz, n);
    gx.u = MatZ::identity(zz, n);
    gx.z = 1;
    gy.a = MatZ::unit(zz, n, 1, 1);
    gy.v = MatZ::identity(zz, n);
    gy.z = 0;

    std::vector<MagnusElem> gens = {gx, gy};

    // r1 = X^n - 1
    MagnusElem xn = gx;
    for (int i = 1; i < n; ++i) xn = xn.mul(gx);
    MagnusElem r1 = xn.sub(one);
    // s0 = Y^2 - Y
    MagnusElem s0 = gy.mul(gy).sub(gy);
    // s_i = Y X^i Y
    std::vector<MagnusElem> si;
    MagnusElem xp = gx;
    for (int i = 1; i <= n - 1; ++i) {
        si.push_back(gy.mul(xp).mul(gy));
        xp = xp.mul(gx);
    }

    auto l_r1 = ideal_closure(r1, gens, closure_cap);
    auto l_s0 = ideal_closure(s0, gens, closure_cap);
    report.rank_r1 = l_r1.rank();
    report.rank_s0 = l_s0.rank();

    std::vector<LatticeBasis> l_si;
    for (auto& s : si) {
        l_si.push_back(ideal_closure(s, gens, closure_cap));
        report.rank_si.push_back(l_si.back().rank());
    }

    report.r1_meets_s0_trivially =
        lattice_intersection(l_r1.basis(), l_s0.basis()).rank() == 0;

    LatticeBasis sum = l_si.empty() ? LatticeBasis(l_s0.ambient_dim()) : l_si[0];
    for (std::size_t i = 1; i < l_si.size(); ++i)
        sum = lattice_sum(sum.basis(), l_si[i].basis());
    report.rank_sum = sum.rank();
    report.sum_equals_s0 = sum == l_s0;
    std::size_t total = 0;
    for (auto r : report.rank_si) total += r;
    report.sum_is_direct = total == report.rank_sum;
    report.pass = report.r1_meets_s0_trivially && report.sum_equals_s0 &&
                  report.sum_is_direct;
    return report;
}

NoIdentityReport noidentity_check(int n, int max_degree, std::size_t word_cap) {
    NoIdentityReport report;
    report.n = n;
    auto spec = standard_relators(n, Variant::NoIdentity);

    // section 3.2 matrices: X = sum E_{i,i+1} (subscripts mod n), Y = E11
    MatZ x = MatZ::cycle(zz, n).transpose();
    MatZ y = MatZ::unit(zz, n, 1, 1);
    report.relators_vanish = check_relations(x, y, spec).pass;

    if (max_degree <= 0) max_degree = 2 * n + 4;
    int start = max_relator_degree(spec) + 2;
    long prev_rank = -1;
    bool prev_stable = false;
    for (int L = start; L <= max_degree; ++L) {
        auto q = bounded_quotient_rank(spec, L, word_cap);
        report.rank_by_degree.emplace_back(L, q.free_rank);
        report.torsion_at_top = q.torsion;
        // demand agreement across two consecutive degree bounds, each with an
        // interior plateau of its own
        if (q.stabilized && prev_stable && q.free_rank == prev_rank) {
            report.stabilized = true;
            report.stable_rank = q.free_rank;
            break;
        }
        prev_rank = q.free_rank;
        prev_stable = q.stabilized;
    }
    return report;
}

std::vector<std::pair<std::string, NcPoly>> said45_chain_identities(int n) {
    std::vector<std::pair<std::string, NcPoly>> out;
    auto w = [](const std::string& s) { return NcPoly::parse(s, false); };
    if (n == 4) {
        // from 0 = y r_{2,4}: s3 x + s2 x^2 = 0, then s3 = -s2 x, then s3 = 0
        out.emplace_back("yr2-chain", w("y x^3 y x + y x^2 y x^2"));
        out.emplace_back("s3+s2x", w("y x^3 y + y x^2 y x"));
        out.emplace_back("s2xy", w("y x^2 y x y"));
    } else if (n == 5) {
        out.emplace_back("m51", w("y x^4 y + y x^3 y x + y x^2 y x^2"));
        out.emplace_back("m52", w("y x^4 y + x y x^3 y + x^2 y x^2 y"));
        out.emplace_back("m53", w("y x^4 y + y x^2 y y x^2 y"));
        out.emplace_back("m54", w("y x^3 y - x^4 y x^2 y y x^2 y + x y x^2 y"));
        out.emplace_back("m55", w("y x^3 y + y x^2 y y x^2 y y x^2 y y x^2 y"));
        out.emplace_back(
            "m56", w("y x^2 y y x^2 y y x^2 y y x^2 y + x^4 y x^2 y y x^2 y - x y x^2 y"));
        out.emplace_back("m57", w("2 y x^2 y y x^2 y y x^2 y y x^2 y y x^2 y"));
    } else {
        throw std::invalid_argument("chains are recorded for n in {4, 5}");
    }
    return out;
}

std::vector<std::pair<std::string, NcPoly>> elim4_chain_identities(int n, int k) {
    if (k < 1 || k > n - 1 || 2 * k == n)
        throw std::invalid_argument("elim4 chain needs 1 <= k <= n-1, k != n/2");
    std::vector<std::pair<std::string, NcPoly>> out;
    std::string xk((std::size_t)k, 'x');
    std::string xnk((std::size_t)(n - k), 'x');
    NcPoly y = NcPoly::word("y");
    NcPoly y2 = NcPoly::word("yy");
    NcPoly m1a = y - y2 - NcPoly::word("y" + xk + "y" + xnk);
    NcPoly m1b = y - y2 - NcPoly::word(xnk + "y" + xk + "y");
    out.emplace_back("m1a", m1a);
    out.emplace_back("m1b", m1b);
    out.emplace_back("m2", NcPoly::word("yy" + xk + "y"));
    out.emplace_back("m3", NcPoly::word("y" + xk + "yy"));
    return out;
}

}  // namespace matring
