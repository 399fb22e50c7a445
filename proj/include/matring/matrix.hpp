#pragma once

#include "matring/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace matring {

/// Dense matrix with exact entries from ring R, row-major storage.
template <class R>
class Mat {
  public:
    using Elem = typename R::Elem;

    Mat() : ring_(), rows_(0), cols_(0) {}
    Mat(R ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, ring.zero()) {}

    static Mat identity(R ring, std::size_t n) {
        Mat m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }
    static Mat zero(R ring, std::size_t n) { return Mat(ring, n, n); }

    /// E_{st} with 1-based indices, size n.
    static Mat unit(R ring, std::size_t n, std::size_t s, std::size_t t) {
        Mat m(ring, n, n);
        m(s - 1, t - 1) = ring.one();
        return m;
    }

    /// X = E_{21} + E_{32} + ... + E_{n,n-1} + E_{1n}: the cyclic shift e_i -> e_{i+1}.
    static Mat cycle(R ring, std::size_t n) {
        Mat m(ring, n, n);
        for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = ring.one();
        m(0, n - 1) = ring.one();
        return m;
    }

    static Mat from_rows(R ring, std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Mat m(ring, r, c);
        std::size_t i = 0;
        for (auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("ragged rows");
            std::size_t j = 0;
            for (long v : row) m(i, j++) = ring.from_int(v);
            ++i;
        }
        return m;
    }

    const R& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!ring_.eq(a_[k], o.a_[k])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto& v : a_)
            if (!ring_.is_zero(v)) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(ring_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.add(a_[k], o.a_[k]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(ring_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.sub(a_[k], o.a_[k]);
        return r;
    }
    Mat operator-() const {
        Mat r(ring_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.neg(a_[k]);
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
        Mat r(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = (*this)(i, k);
                if (ring_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (ring_.is_zero(o(k, j))) continue;
                    r(i, j) = ring_.add(r(i, j), ring_.mul(aik, o(k, j)));
                }
            }
        return r;
    }

    Mat scaled(const Elem& s) const {
        Mat r(ring_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.mul(a_[k], s);
        return r;
    }

    Mat pow(unsigned long e) const {
        if (!square()) throw std::invalid_argument("pow of non-square matrix");
        Mat result = identity(ring_, rows_);
        Mat base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    Mat transpose() const {
        Mat r(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Elem trace() const {
        if (!square()) throw std::invalid_argument("trace of non-square matrix");
        Elem t = ring_.zero();
        for (std::size_t i = 0; i < rows_; ++i) t = ring_.add(t, (*this)(i, i));
        return t;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += j ? "," : "";
                s += ring_.str((*this)(i, j));
            }
        }
        return s + "]";
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("shape mismatch");
    }

    R ring_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

using MatZ = Mat<ZRing>;
using MatF = Mat<FpRing>;
using MatL = Mat<LaurentRing>;

/// Block-diagonal assembly.
template <class R>
Mat<R> block_diag(const std::vector<Mat<R>>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("no blocks");
    R ring = blocks[0].ring();
    std::size_t n = 0;
    for (auto& b : blocks) {
        if (!b.square()) throw std::invalid_argument("blocks must be square");
        n += b.rows();
    }
    Mat<R> m(ring, n, n);
    std::size_t off = 0;
    for (auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

inline MatF lift_to_fp(const MatZ& m, const FpRing& fp) {
    MatF r(fp, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = fp.from_int(m(i, j));
    return r;
}

}  // namespace matring
