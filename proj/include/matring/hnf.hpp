#pragma once

#include "matring/matrix.hpp"

#include <optional>
#include <vector>

namespace matring {

/// Row-style Hermite normal form of the Z-row-span of a matrix.
/// Pivot entries positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
    MatZ h;        // rank x cols, zero rows deleted
    MatZ u;        // transform with u * input = h_padded (square, |det| = 1)
    MatZ h_full;   // rows x cols, HNF rows followed by zero rows
};

HnfResult hnf(const MatZ& m);

/// Elementary divisor chain d1 | d2 | ... | dr of the Z-row-span (Smith normal form).
std::vector<Int> snf_divisors(const MatZ& m);

/// Exact determinant (fraction-free Bareiss).
Int det(const MatZ& m);

/// Rank of m over F_p.
std::size_t rank_mod_p(const MatZ& m, long p);

/// Rank over Q.
std::size_t rank_q(const MatZ& m);

/// Basis (rows) of the left kernel {x : x m = 0}, free of full rank.
MatZ left_kernel(const MatZ& m);

/// Inverse of a matrix with det = +-1.
MatZ unimodular_inverse(const MatZ& m);

/// Exact inverse scaled by determinant: returns adjugate and det (m * adj = det * I).
std::pair<MatZ, Int> adjugate(const MatZ& m);

/// Lattice given by a row-HNF basis inside Z^dim.
class LatticeBasis {
  public:
    LatticeBasis() : dim_(0) {}
    explicit LatticeBasis(std::size_t ambient_dim)
        : dim_(ambient_dim), basis_(ZRing{}, 0, ambient_dim) {}
    static LatticeBasis from_rows(const MatZ& rows);
    static LatticeBasis full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return basis_.rows(); }
    const MatZ& basis() const { return basis_; }

    bool contains(const std::vector<Int>& v) const;
    bool contains_row(const MatZ& m, std::size_t row) const;
    bool operator==(const LatticeBasis& o) const;

    /// Elementary divisors of the basis matrix.
    std::vector<Int> divisors() const;

    /// Product of divisors when rank == ambient_dim; nullopt otherwise (infinite index).
    std::optional<Int> index() const;

  private:
    std::size_t dim_;
    MatZ basis_;
};

/// Incremental Z-lattice accumulator: insert rows one at a time, keeping an
/// echelon basis by xgcd row combinations (the row span is preserved exactly).
class HermiteAccum {
  public:
    explicit HermiteAccum(std::size_t dim);

    /// Returns true if the row changed the lattice.
    bool insert(std::vector<Int> row);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const;
    bool is_full_unimodular() const;  // lattice == Z^dim
    bool contains(const std::vector<Int>& row) const;

    /// Fully reduced HNF of the current lattice.
    MatZ to_hnf() const;
    LatticeBasis to_lattice() const;

  private:
    std::size_t dim_;
    // pivot_[c] = echelon row with leading column c (leading coeff > 0), or empty.
    std::vector<std::vector<Int>> pivot_;
};

/// Incremental row echelon over F_p.
class FpEchelon {
  public:
    FpEchelon(long p, std::size_t dim) : fp_(p), dim_(dim), pivot_(dim) {}

    /// Returns true if the row increased the rank.
    bool insert(std::vector<std::int64_t> row);
    std::size_t rank() const { return rank_; }

  private:
    FpRing fp_;
    std::size_t dim_;
    std::size_t rank_ = 0;
    std::vector<std::vector<std::int64_t>> pivot_;
};

/// Intersection of two lattices given by row matrices (any spanning rows).
LatticeBasis lattice_intersection(const MatZ& a, const MatZ& b);

/// Lattice sum.
LatticeBasis lattice_sum(const MatZ& a, const MatZ& b);

}  // namespace matring
