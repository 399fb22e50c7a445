#pragma once

#include "matring/matrix.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace matring {

/// A word in the free semigroup on {x, y} is a string over 'x','y'.
/// The empty string stands for the empty word and is admitted only in unital
/// contexts. std::string comparison is exactly the order used throughout:
/// x < y, prefixes before extensions.
using Word = std::string;

/// All words of length 1..m (plus the empty word first, iff unital), sorted.
/// Non-unital count is 2^(m+1) - 2.
std::vector<Word> enumerate_words(int m, bool unital = false);

/// Row-major flattening (z11, z12, ..., z1n, z21, ..., znn) of a square matrix.
template <class R>
std::vector<typename R::Elem> flatten(const Mat<R>& m) {
    if (!m.square()) throw std::invalid_argument("flatten of non-square matrix");
    std::vector<typename R::Elem> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

/// Walks all words of length 1..max_len in lexicographic order, memoizing
/// values along the prefix tree so each word costs one matrix product.
/// Callback gets (word, value); returning false stops the walk early.
template <class R>
void walk_word_values(const Mat<R>& a, const Mat<R>& b, int max_len,
                      const std::function<bool(const Word&, const Mat<R>&)>& visit) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.square())
        throw std::invalid_argument("generators must be square of equal size");
    if (max_len <= 0) return;
    Word w;
    std::vector<Mat<R>> stack;  // stack[k] = value of w[0..k]
    // Depth-first in (x, y) order == lexicographic order with prefixes first.
    std::function<bool()> dfs = [&]() -> bool {
        for (char c : {'x', 'y'}) {
            const Mat<R>& gen = (c == 'x') ? a : b;
            Mat<R> val = stack.empty() ? gen : stack.back() * gen;
            w.push_back(c);
            stack.push_back(std::move(val));
            bool keep = visit(w, stack.back());
            if (keep && (int)w.size() < max_len) keep = dfs();
            stack.pop_back();
            w.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    dfs();
}

/// Value of a single word at (a, b).
template <class R>
Mat<R> word_value(const Word& w, const Mat<R>& a, const Mat<R>& b) {
    if (w.empty()) return Mat<R>::identity(a.ring(), a.rows());
    Mat<R> v = (w[0] == 'x') ? a : b;
    for (std::size_t i = 1; i < w.size(); ++i) v = v * ((w[i] == 'x') ? a : b);
    return v;
}

/// T_{m,n,R}(A,B): rows are flattened word values, words of length <= m in
/// lexicographic order.
template <class R>
Mat<R> build_T(int m, const Mat<R>& a, const Mat<R>& b) {
    std::size_t n2 = a.rows() * a.cols();
    std::vector<std::vector<typename R::Elem>> rows;
    walk_word_values<R>(a, b, m, [&](const Word&, const Mat<R>& v) {
        rows.push_back(flatten(v));
        return true;
    });
    Mat<R> t(a.ring(), rows.size(), n2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n2; ++j) t(i, j) = rows[i][j];
    return t;
}

/// Noncommutative polynomial: finite map word -> nonzero integer coefficient.
/// The unital flag tells whether the empty word may appear in the support.
class NcPoly {
  public:
    NcPoly() : unital_(false) {}
    explicit NcPoly(bool unital) : unital_(unital) {}

    static NcPoly word(const Word& w, const Int& coeff = 1, bool unital = false);
    static NcPoly constant(const Int& c);  // unital by construction

    bool unital() const { return unital_; }
    const std::map<Word, Int>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const;  // max word length in support; -1 for zero

    void add_term(const Word& w, const Int& coeff);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly scaled(const Int& s) const;
    bool operator==(const NcPoly& o) const { return c_ == o.c_; }

    /// Substitution y -> m*x + y (x fixed). Used for the shifted relator families.
    NcPoly shift_y(const Int& m) const;

    /// Swap x and y in every word.
    NcPoly swap_xy() const;

    /// Evaluate with x -> a, y -> b; the empty word maps to the identity.
    template <class R>
    Mat<R> eval(const Mat<R>& a, const Mat<R>& b) const {
        if (a.rows() != b.rows() || a.cols() != b.cols() || !a.square())
            throw std::invalid_argument("generators must be square of equal size");
        Mat<R> acc(a.ring(), a.rows(), a.cols());
        for (auto& [w, coeff] : c_) {
            Mat<R> v = word_value(w, a, b);
            acc = acc + v.scaled(a.ring().from_int(coeff));
        }
        return acc;
    }

    std::string str() const;

    /// Parser for the textual syntax, e.g. "x^4 + x^3*y*x - 2 y x y^2 - 1".
    /// Whitespace-insensitive; '*' optional. Constants require unital = true.
    static NcPoly parse(const std::string& text, bool unital = true);

  private:
    bool unital_;
    std::map<Word, Int> c_;
};

/// r_{1,n} = x^n - 1.
NcPoly relator_r1(int n);
/// r_{2,n} = sum_{i=0}^{n-1} x^{n-i} y x^i - 1.
NcPoly relator_r2(int n);
/// s_0 = y^2 - y.
NcPoly relator_s0();
/// s_j = y x^j y for j >= 1.
NcPoly relator_sj(int j);

}  // namespace matring
