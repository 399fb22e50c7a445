#include "matring/hnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace matring {

namespace {

ZRing zz;

/// In-place row echelon over Z by xgcd combinations; returns pivot (row, col) list.
/// Unimodular transform tracked in u when non-null (u premultiplied the same way).
std::vector<std::pair<std::size_t, std::size_t>> echelonize(MatZ& m, MatZ* u) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Clear column c below row r against a single pivot row via xgcd.
        std::size_t pr = r;
        while (pr < rows && m(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pr, j));
            if (u)
                for (std::size_t j = 0; j < u->cols(); ++j) std::swap((*u)(r, j), (*u)(pr, j));
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            Int a = m(r, c), b = m(i, c);
            if (b % a == 0) {
                Int q = b / a;
                for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
                if (u)
                    for (std::size_t j = 0; j < u->cols(); ++j) (*u)(i, j) -= q * (*u)(r, j);
            } else {
                auto e = xgcd(a, b);
                Int af = a / e.g, bf = b / e.g;
                // rows (r, i) <- ((s,t),(  -bf, af)) * (r, i); det = s*af + t*bf = 1.
                for (std::size_t j = 0; j < cols; ++j) {
                    Int mr = m(r, j), mi = m(i, j);
                    m(r, j) = e.s * mr + e.t * mi;
                    m(i, j) = -bf * mr + af * mi;
                }
                if (u)
                    for (std::size_t j = 0; j < u->cols(); ++j) {
                        Int ur = (*u)(r, j), ui = (*u)(i, j);
                        (*u)(r, j) = e.s * ur + e.t * ui;
                        (*u)(i, j) = -bf * ur + af * ui;
                    }
            }
        }
        if (m(r, c) < 0) {
            for (std::size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
            if (u)
                for (std::size_t j = 0; j < u->cols(); ++j) (*u)(r, j) = -(*u)(r, j);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

/// Reduce entries above pivots into [0, pivot).
void reduce_above(MatZ& m, MatZ* u,
                  const std::vector<std::pair<std::size_t, std::size_t>>& pivots) {
    for (auto& [pr, pc] : pivots) {
        const Int& p = m(pr, pc);
        for (std::size_t i = 0; i < pr; ++i) {
            Int q;
            // floor division so that remainder lands in [0, p)
            Int v = m(i, pc);
            q = v / p;
            if (v - q * p < 0) q -= 1;
            if (q == 0) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(pr, j);
            if (u)
                for (std::size_t j = 0; j < u->cols(); ++j) (*u)(i, j) -= q * (*u)(pr, j);
        }
    }
}

}  // namespace

HnfResult hnf(const MatZ& m) {
    MatZ h = m;
    MatZ u = MatZ::identity(zz, m.rows());
    auto pivots = echelonize(h, &u);
    reduce_above(h, &u, pivots);
    MatZ hh(zz, pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) hh(i, j) = h(i, j);
    return {hh, u, h};
}

std::vector<Int> snf_divisors(const MatZ& m_in) {
    // First compress to an echelon basis so SNF runs on rank x cols.
    MatZ e = m_in;
    auto pivots = echelonize(e, nullptr);
    std::size_t r = pivots.size();
    std::size_t n = m_in.cols();
    MatZ a(zz, r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = e(i, j);

    std::size_t k = 0;
    std::vector<Int> div;
    while (k < a.rows() && k < a.cols()) {
        // Find a nonzero entry in the submatrix starting at (k, k).
        std::size_t bi = k, bj = k;
        bool found = false;
        Int best = 0;
        for (std::size_t i = k; i < a.rows(); ++i)
            for (std::size_t j = k; j < a.cols(); ++j)
                if (a(i, j) != 0) {
                    Int v = abs_int(a(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
        if (!found) break;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(k, j), a(bi, j));
        for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, k), a(i, bj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < a.rows(); ++i) {
                if (a(i, k) == 0) continue;
                Int x = a(k, k), y = a(i, k);
                if (y % x == 0) {
                    Int q = y / x;
                    for (std::size_t j = k; j < a.cols(); ++j) a(i, j) -= q * a(k, j);
                } else {
                    auto g = xgcd(x, y);
                    Int xf = x / g.g, yf = y / g.g;
                    for (std::size_t j = k; j < a.cols(); ++j) {
                        Int rk = a(k, j), ri = a(i, j);
                        a(k, j) = g.s * rk + g.t * ri;
                        a(i, j) = -yf * rk + xf * ri;
                    }
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < a.cols(); ++j) {
                if (a(k, j) == 0) continue;
                Int x = a(k, k), y = a(k, j);
                if (y % x == 0) {
                    Int q = y / x;
                    for (std::size_t i = k; i < a.rows(); ++i) a(i, j) -= q * a(i, k);
                } else {
                    auto g = xgcd(x, y);
                    Int xf = x / g.g, yf = y / g.g;
                    for (std::size_t i = k; i < a.rows(); ++i) {
                        Int ck = a(i, k), cj = a(i, j);
                        a(i, k) = g.s * ck + g.t * cj;
                        a(i, j) = -yf * ck + xf * cj;
                    }
                    clean = false;
                }
            }
        }
        div.push_back(abs_int(a(k, k)));
        ++k;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    for (std::size_t i = 0; i + 1 < div.size(); ++i)
        for (std::size_t j = i + 1; j < div.size(); ++j)
            if (div[j] % div[i] != 0) {
                Int g = gcd_int(div[i], div[j]);
                Int l = div[i] / g * div[j];
                div[i] = g;
                div[j] = l;
            }
    std::sort(div.begin(), div.end());
    return div;
}

Int det(const MatZ& m) {
    if (!m.square()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::size_t rank_mod_p(const MatZ& m, long p) {
    FpRing fp(p);
    MatF a = lift_to_fp(m, fp);
    std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pr, j));
        auto inv = fp.inv(a(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            auto f = fp.mul(a(i, c), inv);
            for (std::size_t j = c; j < cols; ++j)
                a(i, j) = fp.sub(a(i, j), fp.mul(f, a(r, j)));
        }
        ++r;
    }
    return r;
}

std::size_t rank_q(const MatZ& m) {
    MatZ a = m;
    return echelonize(a, nullptr).size();
}

MatZ left_kernel(const MatZ& m) {
    MatZ h = m;
    MatZ u = MatZ::identity(zz, m.rows());
    auto pivots = echelonize(h, &u);
    std::size_t r = pivots.size();
    MatZ k(zz, m.rows() - r, m.rows());
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k(i - r, j) = u(i, j);
    return k;
}

std::pair<MatZ, Int> adjugate(const MatZ& m) {
    if (!m.square()) throw std::invalid_argument("adjugate of non-square matrix");
    std::size_t n = m.rows();
    Int d = det(m);
    MatZ adj(zz, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatZ minor(zz, n - 1, n - 1);
            for (std::size_t r = 0, ri = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, ci = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(ri, ci) = m(r, c);
                    ++ci;
                }
                ++ri;
            }
            Int mv = det(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? mv : -mv;
        }
    return {adj, d};
}

MatZ unimodular_inverse(const MatZ& m) {
    auto [adj, d] = adjugate(m);
    if (d == 1) return adj;
    if (d == -1) return -adj;
    throw std::invalid_argument("matrix is not unimodular");
}

LatticeBasis LatticeBasis::from_rows(const MatZ& rows) {
    LatticeBasis b(rows.cols());
    b.basis_ = hnf(rows).h;
    return b;
}

LatticeBasis LatticeBasis::full(std::size_t d) {
    LatticeBasis b(d);
    b.basis_ = MatZ::identity(zz, d);
    return b;
}

bool LatticeBasis::contains(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
    std::vector<Int> w = v;
    std::size_t row = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        bool pivot_here = row < basis_.rows() && basis_(row, c) != 0;
        if (pivot_here) {
            if (w[c] % basis_(row, c) != 0) return false;
            Int q = w[c] / basis_(row, c);
            if (q != 0)
                for (std::size_t j = c; j < dim_; ++j) w[j] -= q * basis_(row, j);
            ++row;
        } else if (w[c] != 0) {
            return false;
        }
    }
    return true;
}

bool LatticeBasis::contains_row(const MatZ& m, std::size_t row) const {
    std::vector<Int> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(row, j);
    return contains(v);
}

bool LatticeBasis::operator==(const LatticeBasis& o) const {
    return dim_ == o.dim_ && basis_ == o.basis_;
}

std::vector<Int> LatticeBasis::divisors() const { return snf_divisors(basis_); }

std::optional<Int> LatticeBasis::index() const {
    if (rank() != dim_) return std::nullopt;
    Int prod = 1;
    for (auto& d : divisors()) prod *= d;
    return prod;
}

HermiteAccum::HermiteAccum(std::size_t dim) : dim_(dim), pivot_(dim) {}

bool HermiteAccum::insert(std::vector<Int> row) {
    if (row.size() != dim_) throw std::invalid_argument("dimension mismatch");
    bool changed = false;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (row[c] == 0) continue;
        if (pivot_[c].empty()) {
            if (row[c] < 0)
                for (auto& v : row) v = -v;
            pivot_[c] = std::move(row);
            return true;
        }
        Int a = pivot_[c][c], b = row[c];
        if (b % a == 0) {
            Int q = b / a;
            for (std::size_t j = c; j < dim_; ++j) row[j] -= q * pivot_[c][j];
        } else {
            auto e = xgcd(a, b);
            Int af = a / e.g, bf = b / e.g;
            for (std::size_t j = c; j < dim_; ++j) {
                Int pv = pivot_[c][j], rv = row[j];
                pivot_[c][j] = e.s * pv + e.t * rv;
                row[j] = -bf * pv + af * rv;
            }
            changed = true;  // pivot strictly shrank
        }
    }
    return changed;
}

std::size_t HermiteAccum::rank() const {
    std::size_t r = 0;
    for (auto& p : pivot_)
        if (!p.empty()) ++r;
    return r;
}

bool HermiteAccum::is_full_unimodular() const {
    for (std::size_t c = 0; c < dim_; ++c)
        if (pivot_[c].empty() || abs_int(pivot_[c][c]) != 1) return false;
    return true;
}

bool HermiteAccum::contains(const std::vector<Int>& row_in) const {
    std::vector<Int> row = row_in;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (row[c] == 0) continue;
        if (pivot_[c].empty()) return false;
        if (row[c] % pivot_[c][c] != 0) return false;
        Int q = row[c] / pivot_[c][c];
        for (std::size_t j = c; j < dim_; ++j) row[j] -= q * pivot_[c][j];
    }
    return true;
}

static MatZ pivots_to_matrix(const std::vector<std::vector<Int>>& pivot, std::size_t dim) {
    std::size_t r = 0;
    for (auto& p : pivot)
        if (!p.empty()) ++r;
    MatZ m(ZRing{}, r, dim);
    std::size_t i = 0;
    for (auto& p : pivot)
        if (!p.empty()) {
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = p[j];
            ++i;
        }
    return m;
}

MatZ HermiteAccum::to_hnf() const {
    return hnf(pivots_to_matrix(pivot_, dim_)).h;
}

LatticeBasis HermiteAccum::to_lattice() const {
    return LatticeBasis::from_rows(pivots_to_matrix(pivot_, dim_));
}

bool FpEchelon::insert(std::vector<std::int64_t> row) {
    if (row.size() != dim_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t c = 0; c < dim_; ++c) {
        if (row[c] == 0) continue;
        if (pivot_[c].empty()) {
            auto inv = fp_.inv(row[c]);
            for (std::size_t j = c; j < dim_; ++j) row[j] = fp_.mul(row[j], inv);
            pivot_[c] = std::move(row);
            ++rank_;
            return true;
        }
        auto f = row[c];
        for (std::size_t j = c; j < dim_; ++j)
            row[j] = fp_.sub(row[j], fp_.mul(f, pivot_[c][j]));
    }
    return false;
}

LatticeBasis lattice_intersection(const MatZ& a, const MatZ& b) {
    // Rows (x, y) of the left kernel of [A; -B] give x A = y B, i.e. the intersection.
    MatZ ab(ZRing{}, a.rows() + b.rows(), a.cols());
    if (a.cols() != b.cols()) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) ab(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) ab(a.rows() + i, j) = -b(i, j);
    MatZ k = left_kernel(ab);
    MatZ inter(ZRing{}, k.rows(), a.cols());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Int v = 0;
            for (std::size_t r = 0; r < a.rows(); ++r) v += k(i, r) * a(r, j);
            inter(i, j) = v;
        }
    return LatticeBasis::from_rows(inter);
}

LatticeBasis lattice_sum(const MatZ& a, const MatZ& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("ambient dimension mismatch");
    MatZ ab(ZRing{}, a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) ab(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) ab(a.rows() + i, j) = b(i, j);
    return LatticeBasis::from_rows(ab);
}

}  // namespace matring
