#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hlskit/laurent.hpp"
#include "hlskit/poset.hpp"
#include "hlskit/series.hpp"

namespace hlskit {

/// Worker count: HLSKIT_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();
/// Runs body(i) for 0 <= i < count on up to worker_count() threads. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Dense square matrix of Laurent polynomials indexed by poset elements.
struct PolyMatrix {
    std::vector<Element> index;
    std::vector<LaurentPoly> entries;  ///< row-major

    std::size_t dim() const { return index.size(); }
    LaurentPoly& at(std::size_t i, std::size_t j) { return entries.at(i * dim() + j); }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries.at(i * dim() + j); }

    static PolyMatrix identity(std::vector<Element> index);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

/// Largest dimension for dense matrices.
inline constexpr std::size_t kMaxMatrixDim = 4096;

PolyMatrix zeta_matrix(const SeriesContext& ctx);
PolyMatrix zeta_matrix(const PosetSpec& spec);
/// Closed-form inverse of the zeta matrix. Throws std::logic_error if an
/// entry fails to be a polynomial.
PolyMatrix mobius_matrix(const SeriesContext& ctx);
PolyMatrix mobius_matrix(const PosetSpec& spec);

/// Throws std::invalid_argument on an index mismatch.
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
bool is_identity(const PolyMatrix& a);
/// Kronecker product; the index is the lexicographic product of the two indices.
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Alternating sum over strict chains of the open interval (a, b) of
/// products of pair weights. Throws std::invalid_argument unless a <= b.
LaurentPoly mobius_via_chains(const SeriesContext& ctx, std::size_t a, std::size_t b);

struct KN {
    LaurentPoly K;
    int N = 0;
};
KN K_and_N(const PosetSpec& spec);

struct ReciprocityCertificate {
    PosetSpec spec;
    Interval kind = Interval::HalfOpen;
    int N = 0;
    LaurentPoly K;
    LaurentPoly lhs;
    LaurentPoly rhs;
    bool equal = false;
    /// The spec has a single element, so there is nothing to check.
    bool vacuous = false;
};

/// Checks the functional equation of hls (HalfOpen) or hls_modified (Open)
/// after clearing denominators.
ReciprocityCertificate verify_reciprocity(const SeriesContext& ctx, Interval kind);
ReciprocityCertificate verify_reciprocity(const PosetSpec& spec, Interval kind, Caps caps = {});

struct OrderComplexReport {
    PosetSpec spec;
    std::size_t subsets = 0;
    /// Failing subsets of the open interval, as element index lists, in subset order.
    std::vector<std::vector<std::size_t>> failures;

    bool pass() const { return failures.empty(); }
};

/// Checks, for every subset S of the open interval, that the alternating
/// chain sum over OC(S) matches (-1)^{N-1} K times the inverted sum over
/// OC(complement of S). Throws CapExceeded past caps().max_subsets and
/// DegenerateSpec when bottom and top coincide.
OrderComplexReport verify_order_complex(const SeriesContext& ctx);
OrderComplexReport verify_order_complex(const PosetSpec& spec, Caps caps = {});

/// Zeta matrix of P_{n+1,r} against the block form built from that of P_{n,r}.
bool verify_block_structure(int n, int r);

/// Zeta matrix of P_{0,r} against Gaussian binomials, and the closed-form
/// Mobius matrix against the signed q-Pascal inverse.
bool verify_q_pascal(int r);

/// Classical Igusa reciprocity obtained from the (0),(r) certificate by
/// renaming, compared with the same cleared identity built from classical_igusa.
bool verify_classical_igusa_reciprocity(int r);
/// Same for the generalized Igusa function of (0,..,0),(r_1,..,r_g).
bool verify_generalized_igusa_reciprocity(const std::vector<int>& r);

}  // namespace hlskit
