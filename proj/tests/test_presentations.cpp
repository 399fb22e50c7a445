#include "doctest.h"

#include "matring/presentations.hpp"

using namespace matring;

namespace {
ZRing zz;

MatZ x_of(int n) { return MatZ::cycle(zz, n); }
MatZ y_of(int n) { return MatZ::unit(zz, n, 1, 1); }
}  // namespace

TEST_CASE("standard relator catalogs") {
    auto g2 = standard_relators(2, Variant::Grigdream);
    REQUIRE(g2.relators.size() == 3);
    CHECK(g2.relators[0] == NcPoly::parse("x^2 - 1"));
    CHECK(g2.relators[1] == NcPoly::parse("x^2*y + x*y*x - 1"));
    CHECK(g2.relators[2] == NcPoly::parse("y x y", false));

    auto s4 = standard_relators(4, Variant::Said45);
    REQUIRE(s4.relators.size() == 4);
    CHECK(s4.relator_names == std::vector<std::string>{"r1", "r2", "s0", "s1"});

    auto d3 = standard_relators(3, Variant::Dnepr);
    REQUIRE(d3.relators.size() == 4);  // r1, r2, s0, s1 (floor(3/2) = 1)

    CHECK_THROWS(standard_relators(3, Variant::Said45));
    CHECK_THROWS(standard_relators(4, Variant::Troika));
    CHECK_THROWS(standard_relators(5, Variant::SaidwantsH, 0, {}));
    CHECK_THROWS(standard_relators(5, Variant::SaidwantsH, 0, {1, 2, 3, 4}));
}

TEST_CASE("X and Y satisfy grigdream and dnepr for n up to 8") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(check_relations(x_of(n), y_of(n),
                              standard_relators(n, Variant::Grigdream))
                  .pass);
        CHECK(check_relations(x_of(n), y_of(n), standard_relators(n, Variant::Dnepr))
                  .pass);
    }
    CHECK(check_relations(x_of(2), y_of(2), standard_relators(2, Variant::Dvoika)).pass);
    CHECK(check_relations(x_of(3), y_of(3), standard_relators(3, Variant::Troika)).pass);
}

TEST_CASE("swapped generators violate grigdream") {
    auto spec = standard_relators(2, Variant::Grigdream);
    auto check = check_relations(y_of(2), x_of(2), spec);
    CHECK_FALSE(check.pass);
    CHECK(!check.violations.empty());
}

TEST_CASE("modular relators match the shifted pair") {
    for (int n : {2, 3}) {
        for (long m : {1L, 2L, -1L}) {
            auto spec = standard_relators(n, Variant::Modular, m);
            // phi_m sends grigdream to relations of (X, -mX + Y)
            MatZ a = x_of(n);
            MatZ b = a.scaled(Int(-m)) + y_of(n);
            CHECK(check_relations(a, b, spec).pass);
        }
    }
}

TEST_CASE("bounded quotient rank of the free ring slice") {
    // no relators, L = 2, non-unital: rank 6 = 2^3 - 2
    PresentationSpec empty;
    empty.n = 2;
    empty.unital = false;
    empty.relators.clear();
    empty.relator_names.clear();
    auto q = bounded_quotient_rank(empty, 2);
    CHECK(q.word_count == 6);
    CHECK(q.free_rank == 6);
    CHECK_FALSE(q.stabilized);  // a free slice has no plateau
    CHECK(q.torsion.empty());
}

TEST_CASE("grigdream(2) quotient stabilizes at rank 4 without torsion") {
    auto spec = standard_relators(2, Variant::Grigdream);
    auto q6 = bounded_quotient_rank(spec, 6);
    CHECK(q6.free_rank == 4);
    CHECK(q6.stabilized);
    CHECK(q6.torsion.empty());
    auto q8 = bounded_quotient_rank(spec, 8);
    CHECK(q8.free_rank == 4);
    CHECK(q8.torsion.empty());
    CHECK(q8.window >= q6.window);
}

TEST_CASE("saidwants_full(2) stabilizes at rank n^2 + n = 6") {
    auto spec = standard_relators(2, Variant::SaidwantsFull);
    auto q = bounded_quotient_rank(spec, 8);
    CHECK(q.free_rank == 6);
    CHECK(q.stabilized);
    CHECK(q.torsion.empty());
    auto q9 = bounded_quotient_rank(spec, 9);
    CHECK(q9.free_rank == 6);
}

TEST_CASE("degree bound errors") {
    auto spec = standard_relators(2, Variant::Grigdream);
    CHECK_THROWS_AS(bounded_quotient_rank(spec, 1), std::invalid_argument);
    CHECK_THROWS_AS(bounded_quotient_rank(spec, 14, 100), ResourceCapExceeded);
}

TEST_CASE("membership certificates for the short presentations") {
    // s2 in the n = 4 ideal (r1, r2, s0, s1); the witnessing degree is 13
    auto s4 = standard_relators(4, Variant::Said45);
    CHECK_FALSE(ideal_membership_bounded(relator_sj(2), s4, 12).has_value());
    auto cert = ideal_membership_bounded(relator_sj(2), s4, 13, 1u << 17);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(*cert, s4));
    CHECK(cert->degree_bound == 13);

    // s3 in the same ideal is witnessed at degree 10
    auto cert_s3 = ideal_membership_bounded(relator_sj(3), s4, 10);
    REQUIRE(cert_s3.has_value());
    CHECK(verify_certificate(*cert_s3, s4));

    // s2 in the n = 3 ideal (r1, r2, s1) of the troika explanation
    PresentationSpec t3;
    t3.n = 3;
    t3.unital = true;
    t3.relator_names = {"r1", "r2", "s1"};
    t3.relators = {relator_r1(3), relator_r2(3), relator_sj(1)};
    auto cert3 = ideal_membership_bounded(relator_sj(2), t3, 10);
    REQUIRE(cert3.has_value());
    CHECK(verify_certificate(*cert3, t3));

    // 1 in I_2 + I_2(1): join the two relator families
    auto i2 = standard_relators(2, Variant::Grigdream);
    auto i21 = standard_relators(2, Variant::Modular, 1);
    PresentationSpec join;
    join.n = 2;
    join.unital = true;
    join.relators = i2.relators;
    join.relator_names = i2.relator_names;
    for (std::size_t k = 0; k < i21.relators.size(); ++k) {
        join.relators.push_back(i21.relators[k]);
        join.relator_names.push_back(i21.relator_names[k]);
    }
    auto cert1 = ideal_membership_bounded(NcPoly::constant(1), join, 8);
    REQUIRE(cert1.has_value());
    CHECK(verify_certificate(*cert1, join));
}

TEST_CASE("membership is inconclusive for non-members at low degree") {
    // y alone is not in the grigdream ideal slice at any degree; at small L the
    // reduction must come back inconclusive rather than inventing membership
    auto spec = standard_relators(2, Variant::Grigdream);
    auto cert = ideal_membership_bounded(NcPoly::word("y"), spec, 6);
    CHECK_FALSE(cert.has_value());
}

TEST_CASE("said45 chain identities vanish at (X, Y)") {
    for (int n : {4, 5}) {
        for (auto& [name, poly] : said45_chain_identities(n)) {
            CAPTURE(name);
            CHECK(poly.eval(x_of(n), y_of(n)).is_zero());
        }
    }
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}}) {
        for (auto& [name, poly] : elim4_chain_identities(n, k)) {
            CAPTURE(name);
            CHECK(poly.eval(x_of(n), y_of(n)).is_zero());
        }
    }
    CHECK_THROWS(elim4_chain_identities(4, 2));  // k = n/2 excluded
}

TEST_CASE("witness elim1 and elim2 rank growth") {
    auto r1 = witness_rank_growth(WitnessKind::Elim1, 2, 0, {4, 8, 12});
    CHECK(r1.audit_matches_proof);
    CHECK(r1.strictly_increasing);
    REQUIRE(r1.rank_sequence.size() == 3);

    auto r2 = witness_rank_growth(WitnessKind::Elim2, 2, 0, {4, 8, 12});
    CHECK(r2.audit_matches_proof);
    CHECK(r2.strictly_increasing);
}

TEST_CASE("witness elim7 audit and marker") {
    auto r = witness_rank_growth(WitnessKind::Elim7, 5, 1, {3, 5, 7});
    CHECK(r.audit_matches_proof);
    CHECK(r.strictly_increasing);
    CHECK(r.contains_marker);  // t(t-1) I_5
    for (auto& [i, zero] : r.monomial_audit) {
        if (i == 1 || i == 4)
            CHECK_FALSE(zero);
        else
            CHECK(zero);
    }
}

TEST_CASE("witness elim8 audit and marker") {
    auto r = witness_rank_growth(WitnessKind::Elim8, 5, 1, {4, 8, 12});
    CHECK(r.audit_matches_proof);
    CHECK(r.strictly_increasing);
    CHECK(r.contains_marker);  // t^2 X^{1-h} = t^2 I at h = 1
    for (auto& [i, zero] : r.monomial_audit) {
        if (i == 1 || i == 2)
            CHECK_FALSE(zero);
        else
            CHECK(zero);
    }
    CHECK_THROWS(witness_rank_growth(WitnessKind::Elim8, 5, 3, {3, 5}));
}

TEST_CASE("H condition checker") {
    auto bad = check_H_conditions(7, {1, 2});
    CHECK_FALSE(bad.valid);
    CHECK(bad.violated_condition == "a");
    REQUIRE(bad.witness.size() == 3);
    CHECK(bad.witness[2] == 2);

    auto h14 = check_H_conditions(5, {1, 4});
    CHECK(h14.valid);
    CHECK(!h14.convention.empty());

    CHECK_THROWS(check_H_conditions(5, {1, 2, 3, 4}));
    CHECK_THROWS(check_H_conditions(5, {}));
}

TEST_CASE("saidwants_H rank evidence") {
    // H = {1} for n = 4 passes both conditions and the quotient is the full
    // matrix ring: s1 follows from the remaining relators
    CHECK(check_H_conditions(4, {1}).valid);
    auto spec = standard_relators(4, Variant::SaidwantsH, 0, {1});
    auto q = bounded_quotient_rank(spec, 12, 1u << 17);
    CHECK(q.stabilized);
    CHECK(q.free_rank == 16);
    CHECK(q.free_rank <= 9 * 64);  // the a-priori normal-form bound
    CHECK(q.torsion.empty());

    // H = {1,3} for n = 4 violates condition (b)
    auto bad = check_H_conditions(4, {1, 3});
    CHECK_FALSE(bad.valid);
    CHECK(bad.violated_condition == "b");
}

TEST_CASE("magnus directness for n = 2 and 3") {
    auto m2 = magnus_directness(2);
    CHECK(m2.pass);
    CHECK(m2.r1_meets_s0_trivially);
    CHECK(m2.rank_si.size() == 1);
    CHECK(m2.sum_equals_s0);

    auto m3 = magnus_directness(3);
    CHECK(m3.pass);
    CHECK(m3.rank_si.size() == 2);
    CHECK(m3.rank_sum == m3.rank_si[0] + m3.rank_si[1]);
}

TEST_CASE("magnus expected lattice ranks") {
    // R1 = xi q_n(X) M has rank n; each S_i has rank n; S_0 has rank n(n-1)
    for (int n : {2, 3, 4}) {
        auto m = magnus_directness(n);
        CHECK(m.rank_r1 == (std::size_t)n);
        CHECK(m.rank_s0 == (std::size_t)(n * (n - 1)));
        for (auto r : m.rank_si) CHECK(r == (std::size_t)n);
    }
}

TEST_CASE("noidentity presentation") {
    auto r2 = noidentity_check(2);
    CHECK(r2.relators_vanish);
    CHECK(r2.stabilized);
    CHECK(r2.stable_rank == 4);
    CHECK(r2.torsion_at_top.empty());

    auto r3 = noidentity_check(3);
    CHECK(r3.relators_vanish);
    CHECK(r3.stabilized);
    CHECK(r3.stable_rank == 9);

    // x^{n+1} - x evaluates to zero at the permutation matrix
    auto spec = standard_relators(4, Variant::NoIdentity);
    MatZ x = MatZ::cycle(zz, 4).transpose();
    CHECK(spec.relators[0].eval(x, MatZ::unit(zz, 4, 1, 1)).is_zero());
}

TEST_CASE("certificate soundness is re-checked independently") {
    auto spec = standard_relators(5, Variant::Said45);
    auto cert = ideal_membership_bounded(relator_sj(2), spec, 12);
    if (cert) {
        // corrupting a coefficient must break verification
        auto broken = *cert;
        REQUIRE(!broken.terms.empty());
        broken.terms[0].coeff += 1;
        CHECK_FALSE(verify_certificate(broken, spec));
    }
}
