#pragma once

/*
 * Bi-decomposition of effective n-forms on a symplectic 2n-space: splitting
 * w = w1 - w2 into decomposable pieces with transversal Lagrangian
 * annihilators, recovery through the trace invariant of the operator
 * K(u) eps = i_u(w) ^ w, and the supporting decomposability tests.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malp/exterior.hpp"

namespace malp {

struct DecompositionCheck {
    bool decomposable = false;
    /* when decomposable: covectors (rows) whose wedge equals the form */
    std::vector<Vec> factors;
};

/* dual-route decomposability: annihilator dimension against the full set of
 * Pluecker quadrics; the two must agree. Zero forms are reported not
 * decomposable. */
DecompositionCheck is_decomposable(const ExteriorForm& w);

struct NormalizedPair {
    std::vector<Vec> a, b;
    Rational c;
};

/* Darboux basis adapted to a bi-decomposing pair: theta = sum a_i*^b_i*,
 * w1 = c a_1*^...^a_n*, w2 = b_1*^...^b_n*. All displayed identities are
 * re-verified exactly before returning. */
NormalizedPair normalize_symplectic(const ExteriorForm& w1, const ExteriorForm& w2,
                                    const ExteriorForm& theta);

struct HitchinData {
    Matrix<Rational> K;
    Rational lambda;
    ExteriorForm eps;
    /* set for even n: K is proportional to the identity on the pairs this
     * library targets and carries no splitting information */
    bool even_degree_warning = false;
};

/* K(u) eps = i_u(psi) ^ psi, lambda = tr(K^2) / dim */
HitchinData hitchin_operator(const ExteriorForm& psi, const ExteriorForm& eps);

/* normalized volume element: (-1)^{n(n-1)/2} theta^n / n!; equals
 * a_1*^..^a_n*^b_1*^..^b_n* in any Darboux basis */
ExteriorForm epsilon_from_theta(const ExteriorForm& theta);

struct BiDecomposition {
    ExteriorForm w1, w2;
    Subspace V1, V2;
};

/* recovery for odd n >= 3: w1 = (w -+ lambda^{-n/2} K*w) / 2, both sign
 * branches validated; when both pass (the generic case: the two branches are
 * the swap-symmetric pair) a deterministic total order picks the result */
BiDecomposition bidecompose_odd(const ExteriorForm& w, const ExteriorForm& theta);

struct VerifyResult {
    bool ok = false;
    std::string reason;
    std::optional<BiDecomposition> value;
};

/* reconstruct candidate pieces through the projections of V = V1 + V2 and
 * accept iff w = w1 - w2 with the volume and Lagrangian conditions */
VerifyResult verify_bidecomposition(const ExteriorForm& w, const Subspace& V1, const Subspace& V2,
                                    const ExteriorForm& theta);

struct UniquenessReport {
    int trials = 0;
    int accepted_count = 0;
    /* canonical keys of distinct accepted unordered pairs */
    std::vector<std::string> distinct_pairs;
    std::vector<BiDecomposition> accepted;
};

/* randomized search for alternative bi-decompositions: seeded random
 * symplectic images of the standard Lagrangian pair, plus caller-supplied
 * candidate pairs, run through verify_bidecomposition */
UniquenessReport uniqueness_oracle(const ExteriorForm& w, const ExteriorForm& theta, int trials,
                                   std::uint64_t seed,
                                   const std::vector<std::pair<Subspace, Subspace>>& extra_pairs = {});

/* whether w' = lambda w + phi ^ theta is solvable with lambda != 0, computed
 * both as a linear system over Lambda^n and through the annihilator criterion
 * (equal or theta-perpendicular); the routes must agree */
bool decomposable_equivalence(const ExteriorForm& w, const ExteriorForm& wp,
                              const ExteriorForm& theta);

struct ProportionalityReport {
    bool implication_holds = true;
    std::optional<std::vector<Vec>> counterexample;
    std::optional<Rational> mu;
    int isotropic_samples = 0;
};

/* brute-force check on a fixed grid: does w|_L = 0 force w'|_L = 0 over the
 * sampled isotropic subspaces, and is w' a rational multiple of w */
ProportionalityReport effective_proportionality_oracle(const ExteriorForm& w,
                                                       const ExteriorForm& wp,
                                                       const ExteriorForm& theta);

std::string pair_key(const Subspace& V1, const Subspace& V2);

}  // namespace malp
