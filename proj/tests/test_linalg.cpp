#include "doctest.h"

#include "matring/hnf.hpp"
#include "matring/rng.hpp"

#include <vector>

using namespace matring;

namespace {

ZRing zz;

// Independent textbook oracle: bring rows into Hermite form by plain repeated
// Euclidean column clearing, no xgcd shortcuts. Kept separate from the library
// path on purpose.
MatZ hnf_oracle(MatZ m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m(i, c) != 0 && (best == rows || abs_int(m(i, c)) < abs_int(m(best, c))))
                    best = i;
            if (best == rows) break;  // column clear below r
            if (best != r)
                for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q = m(i, c) / m(r, c);
                for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        bool have_pivot = false;
        for (std::size_t i = r; i < rows; ++i)
            if (m(i, c) != 0) have_pivot = true;
        if (!have_pivot) continue;
        if (m(r, c) < 0)
            for (std::size_t j = 0; j < cols; ++j) m(r, j) = -m(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Int v = m(i, c), p = m(r, c);
            Int q = v / p;
            if (v - q * p < 0) q -= 1;
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        }
        ++r;
    }
    MatZ h(zz, r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) h(i, j) = m(i, j);
    return h;
}

// gcd-of-minors oracle for elementary divisors: d_i = D_i / D_{i-1}.
std::vector<Int> snf_oracle(const MatZ& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rk = rank_q(m);
    std::vector<Int> dets{1};
    for (std::size_t k = 1; k <= rk; ++k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        std::function<void(std::size_t, std::size_t)> rowsel = [&](std::size_t pos,
                                                                   std::size_t start) {
            if (pos == k) {
                std::function<void(std::size_t, std::size_t)> colsel =
                    [&](std::size_t cpos, std::size_t cstart) {
                        if (cpos == k) {
                            MatZ sub(zz, k, k);
                            for (std::size_t i = 0; i < k; ++i)
                                for (std::size_t j = 0; j < k; ++j)
                                    sub(i, j) = m(ri[i], ci[j]);
                            g = gcd_int(g, det(sub));
                            return;
                        }
                        for (std::size_t c = cstart; c < cols; ++c) {
                            ci[cpos] = c;
                            colsel(cpos + 1, c + 1);
                        }
                    };
                colsel(0, 0);
                return;
            }
            for (std::size_t rr = start; rr < rows; ++rr) {
                ri[pos] = rr;
                rowsel(pos + 1, rr + 1);
            }
        };
        rowsel(0, 0);
        dets.push_back(g);
    }
    std::vector<Int> div;
    for (std::size_t k = 1; k <= rk; ++k) div.push_back(dets[k] / dets[k - 1]);
    return div;
}

MatZ random_mat(Rng& rng, std::size_t n, long lo, long hi) {
    MatZ m(zz, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.next_in(lo, hi);
    return m;
}

}  // namespace

TEST_CASE("hnf identity and zero cases") {
    MatZ id = MatZ::identity(zz, 3);
    auto r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    MatZ z(zz, 2, 2);
    auto rz = hnf(z);
    CHECK(rz.h.rows() == 0);
}

TEST_CASE("hnf matches the textbook oracle") {
    MatZ m = MatZ::from_rows(zz, {{2, 4}, {0, 3}});
    auto r = hnf(m);
    CHECK(r.h == hnf_oracle(m));

    Rng rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        MatZ a = random_mat(rng, 3 + trial % 2, -9, 9);
        CHECK(hnf(a).h == hnf_oracle(a));
    }
}

TEST_CASE("hnf transform is unimodular and reproduces h") {
    Rng rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        MatZ a = random_mat(rng, 4, -5, 5);
        auto r = hnf(a);
        CHECK(abs_int(det(r.u)) == 1);
        CHECK(r.u * a == r.h_full);
    }
}

TEST_CASE("hnf idempotence and span preservation") {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        MatZ a = random_mat(rng, 3, -6, 6);
        MatZ h = hnf(a).h;
        CHECK(hnf(h).h == h);
        auto la = LatticeBasis::from_rows(a);
        auto lh = LatticeBasis::from_rows(h);
        CHECK(la == lh);
        for (std::size_t i = 0; i < a.rows(); ++i) CHECK(lh.contains_row(a, i));
        for (std::size_t i = 0; i < h.rows(); ++i) CHECK(la.contains_row(h, i));
    }
}

TEST_CASE("snf examples against the gcd-of-minors oracle") {
    MatZ d23 = MatZ::from_rows(zz, {{2, 0}, {0, 3}});
    auto div = snf_divisors(d23);
    REQUIRE(div.size() == 2);
    CHECK(div[0] == 1);
    CHECK(div[1] == 6);
    CHECK(div == snf_oracle(d23));

    MatZ d11 = MatZ::identity(zz, 2);
    CHECK(snf_divisors(d11) == std::vector<Int>{1, 1});

    MatZ z(zz, 2, 2);
    CHECK(snf_divisors(z).empty());

    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        MatZ a = random_mat(rng, 3, -4, 4);
        CHECK(snf_divisors(a) == snf_oracle(a));
    }
}

TEST_CASE("snf divisor chain and det product") {
    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        MatZ a = random_mat(rng, 4, -4, 4);
        auto div = snf_divisors(a);
        for (std::size_t i = 0; i + 1 < div.size(); ++i) CHECK(div[i + 1] % div[i] == 0);
        Int d = det(a);
        if (d != 0) {
            Int prod = 1;
            for (auto& v : div) prod *= v;
            CHECK(prod == abs_int(d));
        }
    }
}

TEST_CASE("rank mod p equals count of divisors not divisible by p") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        MatZ a = random_mat(rng, 4, -6, 6);
        auto div = snf_divisors(a);
        for (long p : {2L, 3L, 5L}) {
            std::size_t expect = 0;
            for (auto& d : div)
                if (d % p != 0) ++expect;
            CHECK(rank_mod_p(a, p) == expect);
        }
    }
}

TEST_CASE("lattice membership basics") {
    auto full2 = LatticeBasis::from_rows(MatZ::identity(zz, 2));
    CHECK(full2.contains({Int(5), Int(-7)}));

    MatZ twice = MatZ::from_rows(zz, {{2, 0}, {0, 2}});
    auto l = LatticeBasis::from_rows(twice);
    CHECK_FALSE(l.contains({Int(1), Int(0)}));
    CHECK(l.contains({Int(4), Int(-2)}));
    CHECK_THROWS(l.contains({Int(1)}));
}

TEST_CASE("hermite accumulator agrees with batch hnf") {
    Rng rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        MatZ a = random_mat(rng, 5, -7, 7);
        HermiteAccum acc(5);
        for (std::size_t i = 0; i < 5; ++i) {
            std::vector<Int> row(5);
            for (std::size_t j = 0; j < 5; ++j) row[j] = a(i, j);
            acc.insert(row);
        }
        CHECK(acc.to_hnf() == hnf(a).h);
    }
}

TEST_CASE("insert reports lattice growth correctly") {
    HermiteAccum acc(2);
    CHECK(acc.insert({Int(2), Int(0)}));
    CHECK(acc.insert({Int(0), Int(2)}));
    CHECK_FALSE(acc.insert({Int(2), Int(2)}));
    CHECK(acc.insert({Int(1), Int(1)}));
    CHECK_FALSE(acc.is_full_unimodular());
    CHECK(acc.insert({Int(0), Int(1)}));
    CHECK(acc.is_full_unimodular());
}

TEST_CASE("lattice intersection and sum") {
    MatZ a = MatZ::from_rows(zz, {{2, 0}, {0, 1}});
    MatZ b = MatZ::from_rows(zz, {{1, 0}, {0, 3}});
    auto inter = lattice_intersection(a, b);
    auto expect = LatticeBasis::from_rows(MatZ::from_rows(zz, {{2, 0}, {0, 3}}));
    CHECK(inter == expect);
    auto sum = lattice_sum(a, b);
    CHECK(sum == LatticeBasis::full(2));
}

TEST_CASE("unimodular inverse round trip") {
    MatZ u = MatZ::from_rows(zz, {{1, 1, 0}, {0, 1, 2}, {0, 0, 1}});
    MatZ inv = unimodular_inverse(u);
    CHECK(u * inv == MatZ::identity(zz, 3));
    CHECK_THROWS(unimodular_inverse(MatZ::from_rows(zz, {{2, 0}, {0, 1}})));
}

TEST_CASE("left kernel") {
    MatZ m = MatZ::from_rows(zz, {{1, 2}, {2, 4}, {0, 1}});
    MatZ k = left_kernel(m);
    REQUIRE(k.rows() == 1);
    MatZ prod = k * m;
    CHECK(prod.is_zero());
}
