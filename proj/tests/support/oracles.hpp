#pragma once

// Slow, direct reimplementations used as expected-value sources in tests.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hlskit/laurent.hpp"
#include "hlskit/poset.hpp"
#include "hlskit/series.hpp"
#include "hlskit/verify.hpp"

namespace oracle {

using hlskit::LaurentPoly;
using hlskit::VarId;

/// Gaussian binomial as the inversion-weighted count of k-subsets of {0..n-1}.
LaurentPoly gaussian_by_counting(int n, int k, VarId q);

/// Tableau order straight from the definition on raw count vectors.
bool leq_by_definition(const hlskit::Element& a, const hlskit::Element& b);

/// Number of strict chains (including the empty one) found by testing every
/// subset of the interval for total order.
std::size_t chains_by_subsets(const hlskit::Poset& poset, hlskit::Interval kind);

/// Numerator assembled term by term: sum_C W_C prod_{c in C} X_c prod_{c not in C} (1 - X_c).
LaurentPoly numerator_literal(const hlskit::SeriesContext& ctx, hlskit::Interval kind);

/// Classical Mobius function of the order `leq` on {0..size-1}, by the
/// recursion mu(a,b) = -sum_{a<=c<b} mu(a,c).
long long classical_mobius(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq, std::size_t a,
                           std::size_t b);

/// Inverse of a unitriangular matrix by back substitution.
hlskit::PolyMatrix unitriangular_inverse(const hlskit::PolyMatrix& z);

/// Random Laurent polynomial in the given variables.
LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int max_terms = 5, int max_exp = 3,
                        int max_coeff = 5);

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

PropertyResult prop_ring_axioms(std::mt19937_64& rng, std::size_t cases);
PropertyResult prop_q_pascal(std::mt19937_64& rng, std::size_t cases);
PropertyResult prop_invert_vars(std::mt19937_64& rng, std::size_t cases);
PropertyResult prop_repetition_invariance(std::mt19937_64& rng, std::size_t cases);
PropertyResult prop_chain_tableau(std::mt19937_64& rng, std::size_t cases);

}  // namespace oracle
