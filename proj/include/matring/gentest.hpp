#pragma once

#include "matring/hnf.hpp"
#include "matring/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matring {

/// A pair of square integer matrices, possibly block-diagonal with declared
/// block sizes (one block for plain M_n targets).
struct GenPair {
    std::vector<std::pair<MatZ, MatZ>> blocks;

    static GenPair single(MatZ a, MatZ b);
    std::size_t ambient_dim() const;  // sum of n_j^2
    std::string shape() const;
};

/// What the pair is tested against.
struct Target {
    enum class Kind { MatrixRingZ, MatrixRingFp, ProductRingZ, Lattice };
    Kind kind = Kind::MatrixRingZ;
    std::vector<int> sizes;   // block sizes n_j (one entry unless product)
    long p = 0;               // prime for MatrixRingFp
    LatticeBasis lattice;     // explicit target lattice

    static Target matrix_ring_z(int n);
    static Target matrix_ring_fp(int n, long p);
    static Target product_ring_z(std::vector<int> sizes);
    static Target explicit_lattice(LatticeBasis basis);

    std::size_t ambient_dim() const;
    std::size_t target_rank() const;
    int word_bound() const;  // target_rank - 1
};

struct NotGenerating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenReport {
    bool generates = false;
    int bound_used = 0;                  // last word length actually inspected
    std::vector<Int> elementary_divisors;
    std::size_t rank = 0;
    std::size_t target_rank = 0;
    std::vector<Int> failing_primes;     // full-rank failures only
    bool rank_deficient = false;
    std::vector<Word> certificate_words; // spanning words when generates
    bool certificate_is_basis = false;   // n^2 words with determinant +-1
    std::optional<Int> index;            // sublattice index when rank is full
};

/// The span test of the word lattice against the target.
GenReport is_generating(const GenPair& pair, const Target& target);
GenReport is_generating(const MatZ& a, const MatZ& b, const Target& target);

/// Finite set of failing primes, or rank-deficiency.
struct FailingPrimes {
    bool rank_deficient = false;
    std::vector<Int> primes;  // empty and !rank_deficient means no failures
};
FailingPrimes failing_primes(const MatZ& a, const MatZ& b, int n);

enum class MslRing { Z, Fp, Q };

/// Minimum spanning length over the stated ring; throws NotGenerating if the
/// pair does not generate there.
int msl(const MatZ& a, const MatZ& b, MslRing ring, long p = 0);

struct Beauty3BasisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnimodular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (X, E_st).
std::pair<MatZ, MatZ> example_beauty1(int n, int s, int t);
/// (A, B) with A the shift a_{l-1,l} = 1 and B subject to the basis condition
/// on {e_1} u {B^l e_1 : 2 <= l <= n}; throws Beauty3BasisViolation otherwise.
std::pair<MatZ, MatZ> example_beauty3(int n, const MatZ& b);
/// (U^-1 X U, U^-1 Y U) for unimodular U.
std::pair<MatZ, MatZ> example_conjugate(int n, const MatZ& u);

/// Index of the generated sublattice in the product target; nullopt = infinite.
std::optional<Int> subring_index(const GenPair& pair, const Target& target);

struct MslSurvey {
    std::map<int, std::uint64_t> histogram;  // msl value -> count (generating pairs)
    std::uint64_t generating = 0;
    std::uint64_t total = 0;
    int max_msl = 0;
};

/// Seeded survey of msl over M_n(F_p)^2; identical results for any shard count.
MslSurvey msl_survey(int n, long p, std::uint64_t samples, std::uint64_t seed,
                     unsigned shards = 1);

/// Generation test over F_p for a pair given mod p (fast path).
bool generates_fp(const MatF& a, const MatF& b);
/// msl over F_p for a generating pair; -1 if not generating.
int msl_fp(const MatF& a, const MatF& b);

}  // namespace matring
