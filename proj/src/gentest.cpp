#include "matring/gentest.hpp"

#include "matring/rng.hpp"

#include <algorithm>
#include <sstream>

namespace matring {

namespace {
ZRing zz;
}

GenPair GenPair::single(MatZ a, MatZ b) {
    if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("pair must be square matrices of equal size");
    GenPair p;
    p.blocks.emplace_back(std::move(a), std::move(b));
    return p;
}

std::size_t GenPair::ambient_dim() const {
    std::size_t d = 0;
    for (auto& [a, b] : blocks) d += a.rows() * a.rows();
    return d;
}

std::string GenPair::shape() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        os << (i ? "+" : "") << blocks[i].first.rows();
    return os.str();
}

Target Target::matrix_ring_z(int n) {
    Target t;
    t.kind = Kind::MatrixRingZ;
    t.sizes = {n};
    return t;
}

Target Target::matrix_ring_fp(int n, long p) {
    if (!is_probable_prime(Int(p))) throw std::invalid_argument("p must be prime");
    Target t;
    t.kind = Kind::MatrixRingFp;
    t.sizes = {n};
    t.p = p;
    return t;
}

Target Target::product_ring_z(std::vector<int> sizes) {
    Target t;
    t.kind = Kind::ProductRingZ;
    t.sizes = std::move(sizes);
    return t;
}

Target Target::explicit_lattice(LatticeBasis basis) {
    Target t;
    t.kind = Kind::Lattice;
    t.lattice = std::move(basis);
    return t;
}

std::size_t Target::ambient_dim() const {
    if (kind == Kind::Lattice) return lattice.ambient_dim();
    std::size_t d = 0;
    for (int n : sizes) d += (std::size_t)n * n;
    return d;
}

std::size_t Target::target_rank() const {
    if (kind == Kind::Lattice) return lattice.rank();
    return ambient_dim();
}

int Target::word_bound() const { return (int)target_rank() - 1; }

namespace {

void check_conformal(const GenPair& pair, const Target& target) {
    if (target.kind == Target::Kind::Lattice) {
        if (pair.ambient_dim() != target.lattice.ambient_dim())
            throw std::invalid_argument("pair does not match target ambient dimension");
        return;
    }
    if (pair.blocks.size() != target.sizes.size())
        throw std::invalid_argument("block count does not match target");
    for (std::size_t i = 0; i < pair.blocks.size(); ++i)
        if ((int)pair.blocks[i].first.rows() != target.sizes[i])
            throw std::invalid_argument("block size does not match target");
}

std::vector<Int> flatten_blocks(const std::vector<MatZ>& vals) {
    std::vector<Int> row;
    for (auto& v : vals) {
        auto f = flatten(v);
        row.insert(row.end(), f.begin(), f.end());
    }
    return row;
}

/// Walks word values level by level (all words of length 1, then 2, ...),
/// calling on_level after each level. on_level returning false stops.
/// visit sees each word's per-block values.
void walk_levels(const GenPair& pair, int bound,
                 const std::function<void(const Word&, const std::vector<MatZ>&)>& visit,
                 const std::function<bool(int)>& on_level) {
    std::vector<std::pair<Word, std::vector<MatZ>>> level;
    for (int len = 1; len <= bound; ++len) {
        std::vector<std::pair<Word, std::vector<MatZ>>> next;
        if (len == 1) {
            for (char c : {'x', 'y'}) {
                std::vector<MatZ> vals;
                for (auto& [a, b] : pair.blocks) vals.push_back(c == 'x' ? a : b);
                next.emplace_back(Word(1, c), std::move(vals));
            }
        } else {
            for (auto& [w, vals] : level)
                for (char c : {'x', 'y'}) {
                    std::vector<MatZ> nv;
                    nv.reserve(vals.size());
                    for (std::size_t i = 0; i < vals.size(); ++i) {
                        const MatZ& gen =
                            (c == 'x') ? pair.blocks[i].first : pair.blocks[i].second;
                        nv.push_back(vals[i] * gen);
                    }
                    next.emplace_back(w + c, std::move(nv));
                }
        }
        for (auto& [w, vals] : next) visit(w, vals);
        level = std::move(next);
        if (!on_level(len)) return;
    }
}

}  // namespace

GenReport is_generating(const GenPair& pair, const Target& target) {
    check_conformal(pair, target);
    std::size_t dim = pair.ambient_dim();
    GenReport report;
    report.target_rank = target.target_rank();

    if (target.kind == Target::Kind::MatrixRingFp) {
        FpRing fp(target.p);
        MatF a = lift_to_fp(pair.blocks[0].first, fp);
        MatF b = lift_to_fp(pair.blocks[0].second, fp);
        FpEchelon ech(target.p, dim);
        std::vector<MatF> level;
        std::size_t prev_rank = 0;
        int used = 0;
        for (int len = 1; len <= target.word_bound(); ++len) {
            used = len;
            std::vector<MatF> next;
            if (len == 1) {
                next = {a, b};
            } else {
                next.reserve(level.size() * 2);
                for (auto& v : level) {
                    next.push_back(v * a);
                    next.push_back(v * b);
                }
            }
            for (auto& v : next) {
                std::vector<std::int64_t> row;
                row.reserve(dim);
                for (std::size_t i = 0; i < v.rows(); ++i)
                    for (std::size_t j = 0; j < v.cols(); ++j) row.push_back(v(i, j));
                ech.insert(std::move(row));
            }
            if (ech.rank() == dim || ech.rank() == prev_rank) break;
            prev_rank = ech.rank();
            level = std::move(next);
        }
        report.bound_used = used;
        report.rank = ech.rank();
        report.generates = ech.rank() == dim;
        return report;
    }

    // Integer lattice path (single, product, or explicit lattice target).
    HermiteAccum acc(dim);
    HermiteAccum rank_probe(dim);
    std::vector<Word> cert;
    MatZ prev_hnf(zz, 0, dim);
    int used = 0;
    bool stabilized = false;
    walk_levels(
        pair, target.word_bound(),
        [&](const Word& w, const std::vector<MatZ>& vals) {
            auto row = flatten_blocks(vals);
            if (acc.insert(row)) cert.push_back(w);
        },
        [&](int len) {
            used = len;
            MatZ h = acc.to_hnf();
            if (h == prev_hnf) {
                stabilized = true;
                return false;
            }
            prev_hnf = h;
            if (target.kind != Target::Kind::Lattice && acc.is_full_unimodular()) {
                stabilized = true;
                return false;
            }
            if (target.kind == Target::Kind::Lattice &&
                acc.to_lattice() == target.lattice) {
                stabilized = true;
                return false;
            }
            return true;
        });
    (void)stabilized;
    report.bound_used = used;
    auto lattice = acc.to_lattice();
    report.rank = lattice.rank();
    report.elementary_divisors = lattice.divisors();
    if (auto idx = lattice.index()) report.index = *idx;

    if (target.kind == Target::Kind::Lattice) {
        report.generates = lattice == target.lattice;
    } else {
        report.generates =
            report.rank == dim &&
            std::all_of(report.elementary_divisors.begin(),
                        report.elementary_divisors.end(),
                        [](const Int& d) { return d == 1; });
        if (!report.generates) {
            if (report.rank < dim) {
                report.rank_deficient = true;
            } else {
                report.failing_primes =
                    prime_divisors(report.elementary_divisors.back());
            }
        }
    }

    if (report.generates) {
        report.certificate_words = cert;
        if (cert.size() == dim) {
            // re-evaluate the certificate words and test for det +-1
            MatZ m(zz, dim, dim);
            std::size_t r = 0;
            for (auto& w : cert) {
                std::vector<MatZ> vals;
                for (auto& [a, b] : pair.blocks) vals.push_back(word_value(w, a, b));
                auto row = flatten_blocks(vals);
                for (std::size_t j = 0; j < dim; ++j) m(r, j) = row[j];
                ++r;
            }
            report.certificate_is_basis = abs_int(det(m)) == 1;
        }
    }
    return report;
}

GenReport is_generating(const MatZ& a, const MatZ& b, const Target& target) {
    return is_generating(GenPair::single(a, b), target);
}

FailingPrimes failing_primes(const MatZ& a, const MatZ& b, int n) {
    auto report = is_generating(a, b, Target::matrix_ring_z(n));
    FailingPrimes out;
    if (report.rank < report.target_rank) {
        out.rank_deficient = true;
        return out;
    }
    Int last = report.elementary_divisors.back();
    if (last != 1) out.primes = prime_divisors(last);
    return out;
}

int msl(const MatZ& a, const MatZ& b, MslRing ring, long p) {
    int n = (int)a.rows();
    std::size_t dim = (std::size_t)n * n;
    int bound = (int)dim - 1;
    GenPair pair = GenPair::single(a, b);

    if (ring == MslRing::Fp) {
        FpRing fp(p);
        int result = msl_fp(lift_to_fp(a, fp), lift_to_fp(b, fp));
        if (result < 0) throw NotGenerating("pair does not generate over F_p");
        return result;
    }

    int found = -1;
    if (ring == MslRing::Z) {
        HermiteAccum acc(dim);
        walk_levels(
            pair, bound,
            [&](const Word&, const std::vector<MatZ>& vals) {
                acc.insert(flatten_blocks(vals));
            },
            [&](int len) {
                if (acc.is_full_unimodular()) {
                    found = len;
                    return false;
                }
                return true;
            });
    } else {
        HermiteAccum acc(dim);
        walk_levels(
            pair, bound,
            [&](const Word&, const std::vector<MatZ>& vals) {
                acc.insert(flatten_blocks(vals));
            },
            [&](int len) {
                if (acc.rank() == dim) {
                    found = len;
                    return false;
                }
                return true;
            });
    }
    if (found < 0) throw NotGenerating("pair does not generate over the stated ring");
    return found;
}

std::pair<MatZ, MatZ> example_beauty1(int n, int s, int t) {
    if (s < 1 || s > n || t < 1 || t > n) throw std::invalid_argument("bad unit indices");
    return {MatZ::cycle(zz, n), MatZ::unit(zz, n, s, t)};
}

std::pair<MatZ, MatZ> example_beauty3(int n, const MatZ& b) {
    if ((int)b.rows() != n || !b.square()) throw std::invalid_argument("B must be n x n");
    // A: ones on the superdiagonal, zero elsewhere (shift toward e_1).
    MatZ a(zz, n, n);
    for (int l = 2; l <= n; ++l) a(l - 2, l - 1) = 1;
    // condition 2: {e_1} u {B^l e_1 : 2 <= l <= n} is a Z-basis of Z^n.
    MatZ cols(zz, n, n);
    cols(0, 0) = 1;
    MatZ bp = b * b;
    for (int l = 2; l <= n; ++l) {
        for (int i = 0; i < n; ++i) cols(i, l - 1) = bp(i, 0);
        if (l < n) bp = bp * b;
    }
    if (abs_int(det(cols)) != 1)
        throw Beauty3BasisViolation("e_1, B^2 e_1, ..., B^n e_1 is not a Z-basis");
    return {a, b};
}

std::pair<MatZ, MatZ> example_conjugate(int n, const MatZ& u) {
    if ((int)u.rows() != n || !u.square()) throw std::invalid_argument("U must be n x n");
    Int d = det(u);
    if (d != 1 && d != -1) throw NotUnimodular("U must have determinant +-1");
    MatZ uinv = unimodular_inverse(u);
    return {uinv * MatZ::cycle(zz, n) * u, uinv * MatZ::unit(zz, n, 1, 1) * u};
}

std::optional<Int> subring_index(const GenPair& pair, const Target& target) {
    auto report = is_generating(pair, target);
    if (report.rank < target.ambient_dim()) return std::nullopt;
    return report.index;
}

bool generates_fp(const MatF& a, const MatF& b) { return msl_fp(a, b) > 0; }

int msl_fp(const MatF& a, const MatF& b) {
    std::size_t n = a.rows();
    std::size_t dim = n * n;
    int bound = (int)dim - 1;
    FpEchelon ech(a.ring().p, dim);
    std::vector<std::pair<Word, MatF>> level;
    std::size_t prev_rank = 0;
    for (int len = 1; len <= bound; ++len) {
        std::vector<std::pair<Word, MatF>> next;
        if (len == 1) {
            next.emplace_back("x", a);
            next.emplace_back("y", b);
        } else {
            for (auto& [w, v] : level) {
                next.emplace_back(w + "x", v * a);
                next.emplace_back(w + "y", v * b);
            }
        }
        for (auto& [w, v] : next) {
            std::vector<std::int64_t> row;
            row.reserve(dim);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) row.push_back(v(i, j));
            ech.insert(std::move(row));
        }
        if (ech.rank() == dim) return len;
        if (ech.rank() == prev_rank) return -1;  // stabilized short of full
        prev_rank = ech.rank();
        level = std::move(next);
    }
    return -1;
}

MslSurvey msl_survey(int n, long p, std::uint64_t samples, std::uint64_t seed,
                     unsigned shards) {
    if (shards == 0) shards = 1;
    MslSurvey out;
    out.total = samples;
    FpRing fp(p);
    // Sample draws depend only on (seed, index); shard boundaries are irrelevant.
    std::uint64_t chunk = (samples + shards - 1) / shards;
    for (unsigned s = 0; s < shards; ++s) {
        std::uint64_t lo = (std::uint64_t)s * chunk;
        std::uint64_t hi = std::min(samples, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
            Rng rng = sample_rng(seed, i);
            MatF a(fp, n, n), b(fp, n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) a(r, c) = (std::int64_t)rng.next_below(p);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) b(r, c) = (std::int64_t)rng.next_below(p);
            int m = msl_fp(a, b);
            if (m > 0) {
                ++out.generating;
                ++out.histogram[m];
                out.max_msl = std::max(out.max_msl, m);
            }
        }
    }
    return out;
}

}  // namespace matring
