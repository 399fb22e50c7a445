#pragma once

#include "matring/sparse_hermite.hpp"
#include "matring/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace matring {

enum class Variant {
    Grigdream,
    Dnepr,
    Said45,
    Troika,
    Dvoika,
    NoIdentity,
    Modular,
    SaidwantsFull,
    SaidwantsH,
};

std::string variant_name(Variant v);

struct PresentationSpec {
    int n = 2;
    Variant variant = Variant::Grigdream;
    Int shift = 0;           // Modular only
    std::vector<int> h_set;  // SaidwantsH only
    std::vector<NcPoly> relators;
    std::vector<std::string> relator_names;
    bool unital = true;      // false only for NoIdentity

    std::string name() const;
};

/// The exact relator list for each presentation family.
PresentationSpec standard_relators(int n, Variant v, const Int& shift = 0,
                                   const std::vector<int>& h = {});

struct RelationCheck {
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> violations;  // name, value
};

/// Evaluates every relator at (a, b); pass iff all vanish.
template <class R>
RelationCheck check_relations(const Mat<R>& a, const Mat<R>& b,
                              const PresentationSpec& spec) {
    RelationCheck out;
    for (std::size_t i = 0; i < spec.relators.size(); ++i) {
        Mat<R> v = spec.relators[i].eval(a, b);
        if (!v.is_zero()) {
            out.pass = false;
            out.violations.emplace_back(spec.relator_names[i], v.str());
        }
    }
    return out;
}

struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuotientRank {
    std::size_t word_count = 0;     // words inside the reported window
    std::size_t relation_rank = 0;  // relation-lattice rank inside the window
    long free_rank = 0;
    std::vector<Int> torsion;  // nontrivial divisors of the windowed lattice
    int window = 0;            // word-length window the rank is reported at
    bool stabilized = false;   // the window rank formed a plateau
};

/// Builds the relation lattice spanned by all u r v of total degree <= L and
/// reports the rank of (span of words of length <= s) modulo that lattice on
/// the longest plateau of s; windows within a relator-degree of L stay
/// relation-starved, so the plateau value is the one that survives larger L.
QuotientRank bounded_quotient_rank(const PresentationSpec& spec, int degree_bound,
                                   std::size_t word_cap = (1u << 16));

struct CertTerm {
    Word left;
    int relator = 0;
    Word right;
    Int coeff;
};

struct MembershipCertificate {
    NcPoly target;
    std::vector<CertTerm> terms;
    int degree_bound = 0;  // degree level at which membership was found
};

/// Exact membership of target in the Z-span of {u r v : total degree <= L}.
/// nullopt is "inconclusive at L", never a non-membership proof.
std::optional<MembershipCertificate> ideal_membership_bounded(
    const NcPoly& target, const PresentationSpec& spec, int degree_bound,
    std::size_t word_cap = (1u << 16));

/// Re-expands the certificate and compares with its target.
bool verify_certificate(const MembershipCertificate& cert, const PresentationSpec& spec);

enum class WitnessKind { Elim1, Elim2, Elim7, Elim8 };

struct WitnessReport {
    WitnessKind kind;
    int n = 0;
    int h = 0;
    // name -> vanishes, over the grigdream relator list at the witness pair
    std::vector<std::pair<std::string, bool>> relator_audit;
    std::vector<std::string> expected_nonzero;  // relators the proof keeps nonzero
    bool audit_matches_proof = false;
    std::vector<std::pair<int, std::size_t>> rank_sequence;  // (cutoff, additive rank)
    bool strictly_increasing = false;
    // witness-specific span memberships
    bool contains_marker = false;  // t(t-1)I for elim7, t^2 X^{1-h} for elim8
    std::string marker_name;
    std::vector<std::pair<int, bool>> monomial_audit;  // i -> Y1 X^i Y1 X^-i == 0
};

/// Infinite-rank witnesses for the presentation-minimality statements.
WitnessReport witness_rank_growth(WitnessKind kind, int n, int h,
                                  const std::vector<int>& cutoffs);

struct HConditionReport {
    bool valid = false;
    std::string violated_condition;       // "a" or "b" when invalid
    std::vector<int> witness;             // violating tuple
    std::string convention;               // zero-sum handling note
};

/// Exhaustive check of the two H-set conditions modulo n.
HConditionReport check_H_conditions(int n, const std::vector<int>& h);

struct MagnusReport {
    int n = 0;
    std::size_t rank_r1 = 0;
    std::size_t rank_s0 = 0;
    std::vector<std::size_t> rank_si;
    std::size_t rank_sum = 0;           // rank of S_1 + ... + S_{n-1}
    bool r1_meets_s0_trivially = false; // R_1 n S_0 = 0
    bool sum_equals_s0 = false;
    bool sum_is_direct = false;         // rank additivity
    bool pass = false;
};

/// Builds the two-block extension ring, closes the relator ideals as lattices,
/// and verifies R_1 n S_0 = 0 and S_0 = S_1 (+) ... (+) S_{n-1}.
MagnusReport magnus_directness(int n, std::size_t closure_cap = 200000);

struct NoIdentityReport {
    int n = 0;
    bool relators_vanish = false;
    std::vector<std::pair<int, long>> rank_by_degree;  // (L, free rank)
    bool stabilized = false;
    long stable_rank = -1;
    std::vector<Int> torsion_at_top;
};

/// Non-unital presentation test: relators of the n+2 element generating set
/// vanish at the section-3.2 matrices and the bounded quotient rank stabilizes.
NoIdentityReport noidentity_check(int n, int max_degree = 0,
                                  std::size_t word_cap = (1u << 16));

/// Intermediate identities of the short-presentation derivations; all evaluate
/// to zero at (X, Y). Returns (name, polynomial) pairs.
std::vector<std::pair<std::string, NcPoly>> said45_chain_identities(int n);
std::vector<std::pair<std::string, NcPoly>> elim4_chain_identities(int n, int k);

}  // namespace matring
