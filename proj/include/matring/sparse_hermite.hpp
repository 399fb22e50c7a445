#pragma once

#include "matring/int_types.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace matring {

/// Sparse integer row: (column, coefficient) pairs sorted by column descending,
/// no zero coefficients. The leading entry is the largest column.
using SparseRow = std::vector<std::pair<std::int32_t, Int>>;

SparseRow sparse_axpy(const SparseRow& a, const Int& c, const SparseRow& b);
SparseRow sparse_combine(const Int& ca, const SparseRow& a, const Int& cb, const SparseRow& b);

/// Incremental integer echelon form over sparse rows, pivoting on the largest
/// column. Row operations are unimodular, so the Z-row-span is preserved
/// exactly. Optionally tracks each kept row as a combination of the original
/// inserted rows (for membership certificates).
class SparseHermite {
  public:
    explicit SparseHermite(bool track_combinations = false)
        : track_(track_combinations) {}

    /// Inserts a row; gen_id labels it in tracked combinations.
    void insert(SparseRow row, std::int32_t gen_id = -1);

    std::size_t rank() const { return pivots_.size(); }

    /// Reduces v against the current pivots without modifying them.
    /// Returns the residual; empty residual means v lies in the row lattice.
    /// With tracking enabled and membership holding, combination receives the
    /// expression of v as a combination of inserted generator rows.
    SparseRow reduce(SparseRow v,
                     std::vector<std::pair<std::int32_t, Int>>* combination = nullptr) const;

    bool contains(const SparseRow& v) const { return reduce(v).empty(); }

    /// Elementary divisors > 1 of the row lattice (torsion of the cokernel),
    /// restricted to pivot rows whose leading column is <= max_lead.
    std::vector<Int> nontrivial_divisors(
        std::int32_t max_lead = std::numeric_limits<std::int32_t>::max()) const;

    /// All pivot leading coefficients are +-1.
    bool all_pivots_unit() const;

    /// Leading columns of the pivot rows, ascending.
    std::vector<std::int32_t> pivot_leads() const;

  private:
    struct Row {
        SparseRow v;
        SparseRow expr;  // combination of generator ids (column = gen id)
    };

    bool track_;
    std::map<std::int32_t, Row> pivots_;  // leading column -> row
};

}  // namespace matring
