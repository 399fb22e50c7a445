#include "matring/sparse_hermite.hpp"

#include "matring/hnf.hpp"
#include "matring/matrix.hpp"

#include <algorithm>
#include <set>

namespace matring {

SparseRow sparse_axpy(const SparseRow& a, const Int& c, const SparseRow& b) {
    // a + c*b, both sorted descending by column.
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            Int v = c * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Int v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow sparse_combine(const Int& ca, const SparseRow& a, const Int& cb, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            Int v = ca * a[i].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
        } else if (i == a.size() || b[j].first > a[i].first) {
            Int v = cb * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Int v = ca * a[i].second + cb * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void SparseHermite::insert(SparseRow row, std::int32_t gen_id) {
    Row incoming;
    incoming.v = std::move(row);
    if (track_ && gen_id >= 0) incoming.expr = {{gen_id, Int(1)}};
    while (!incoming.v.empty()) {
        std::int32_t lead = incoming.v.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            if (incoming.v.front().second < 0) {
                for (auto& [c, val] : incoming.v) val = -val;
                if (track_)
                    for (auto& [c, val] : incoming.expr) val = -val;
            }
            pivots_.emplace(lead, std::move(incoming));
            return;
        }
        Row& pivot = it->second;
        const Int& a = pivot.v.front().second;
        const Int& b = incoming.v.front().second;
        if (b % a == 0) {
            Int q = -(b / a);
            incoming.v = sparse_axpy(incoming.v, q, pivot.v);
            if (track_) incoming.expr = sparse_axpy(incoming.expr, q, pivot.expr);
        } else {
            auto e = xgcd(a, b);
            Int af = a / e.g, bf = b / e.g;
            SparseRow new_pivot = sparse_combine(e.s, pivot.v, e.t, incoming.v);
            SparseRow new_incoming = sparse_combine(-bf, pivot.v, af, incoming.v);
            SparseRow new_pivot_expr, new_incoming_expr;
            if (track_) {
                new_pivot_expr = sparse_combine(e.s, pivot.expr, e.t, incoming.expr);
                new_incoming_expr = sparse_combine(-bf, pivot.expr, af, incoming.expr);
            }
            pivot.v = std::move(new_pivot);
            pivot.expr = std::move(new_pivot_expr);
            incoming.v = std::move(new_incoming);
            incoming.expr = std::move(new_incoming_expr);
        }
    }
}

SparseRow SparseHermite::reduce(SparseRow v,
                                std::vector<std::pair<std::int32_t, Int>>* combination) const {
    SparseRow expr;  // combination over generator ids
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        const Row& pivot = it->second;
        const Int& a = pivot.v.front().second;
        const Int& b = v.front().second;
        if (b % a != 0) break;
        Int q = -(b / a);
        v = sparse_axpy(v, q, pivot.v);
        if (track_ && combination) expr = sparse_axpy(expr, -q, pivot.expr);
    }
    if (combination && v.empty()) {
        combination->assign(expr.rbegin(), expr.rend());  // ascending generator ids
    }
    return v;
}

bool SparseHermite::all_pivots_unit() const {
    for (auto& [c, row] : pivots_)
        if (abs_int(row.v.front().second) != 1) return false;
    return true;
}

std::vector<std::int32_t> SparseHermite::pivot_leads() const {
    std::vector<std::int32_t> out;
    out.reserve(pivots_.size());
    for (auto& [c, row] : pivots_) out.push_back(c);
    return out;
}

std::vector<Int> SparseHermite::nontrivial_divisors(std::int32_t max_lead) const {
    // Split pivots into unit rows and the rest. Quotienting by the unit rows is
    // a free quotient, so the nontrivial divisors come from the reduced images
    // of the non-unit rows alone. Rows with lead <= max_lead have all entries
    // <= max_lead, so the restriction is self-contained.
    std::vector<const Row*> non_unit;
    std::set<std::int32_t> unit_cols;
    bool any_non_unit = false;
    for (auto& [c, row] : pivots_) {
        if (c > max_lead) continue;
        if (abs_int(row.v.front().second) == 1)
            unit_cols.insert(c);
        else {
            non_unit.push_back(&row);
            any_non_unit = true;
        }
    }
    if (!any_non_unit) return {};
    // Back-substitute unit columns out of each non-unit row (descending scan).
    std::vector<SparseRow> reduced;
    for (const Row* r : non_unit) {
        SparseRow v = r->v;
        std::size_t i = 0;
        while (i < v.size()) {
            std::int32_t c = v[i].first;
            if (i > 0 && unit_cols.count(c)) {
                const Row& u = pivots_.at(c);
                Int q = -(v[i].second / u.v.front().second);  // unit pivot divides exactly
                v = sparse_axpy(v, q, u.v);
                // restart scan at same index: entries before i are at larger cols, untouched
            } else {
                ++i;
            }
        }
        reduced.push_back(std::move(v));
    }
    // Densify over the union support and take the Smith form.
    std::set<std::int32_t> support;
    for (auto& v : reduced)
        for (auto& [c, val] : v) support.insert(c);
    std::vector<std::int32_t> cols(support.begin(), support.end());
    MatZ m(ZRing{}, reduced.size(), cols.size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (auto& [c, val] : reduced[i]) {
            std::size_t j = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
            m(i, j) = val;
        }
    std::vector<Int> out;
    for (auto& d : snf_divisors(m))
        if (d != 1) out.push_back(d);
    return out;
}

}  // namespace matring
