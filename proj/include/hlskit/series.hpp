#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hlskit/laurent.hpp"
#include "hlskit/poset.hpp"
#include "hlskit/weight.hpp"

namespace hlskit {

/// X-variable of a poset element, named `X{<rendered element>}`.
VarId x_var(const Element& e, VarTable& table = VarTable::global());

/// Everything derived from one spec: the poset, its variables and the cached
/// pair weights. Built once and shared read-only.
class SeriesContext {
public:
    explicit SeriesContext(PosetSpec spec, Caps caps = {});
    SeriesContext(const SeriesContext&) = delete;
    SeriesContext& operator=(const SeriesContext&) = delete;

    const Poset& poset() const { return poset_; }
    const PosetSpec& spec() const { return poset_.spec(); }
    const YVars& ys() const { return ys_; }
    VarId x(std::size_t element) const { return xs_.at(element); }
    const PairWeights& weights() const { return weights_; }

private:
    Poset poset_;
    YVars ys_;
    std::vector<VarId> xs_;
    PairWeights weights_;
};

/// numerator / prod_{x in denominator} (1 - x).
struct GeneratingFunction {
    LaurentPoly numerator;
    std::vector<VarId> denominator;

    /// Same numerator and the same set of denominator factors.
    bool same_as(const GeneratingFunction& other) const;
};

struct SeriesStats {
    std::size_t chains = 0;
    double millis = 0;
};

/// An HLS value over its universal denominator prod_{c in I} (1 - X_c), with
/// I = (0,1] for the series and (0,1) for the modified series.
struct HlsRational {
    PosetSpec spec;
    Interval kind = Interval::HalfOpen;
    std::vector<std::size_t> denominator;  ///< element indices, enumeration order
    std::vector<VarId> denominator_vars;
    LaurentPoly numerator;
    SeriesStats stats;

    GeneratingFunction as_generating_function() const { return {numerator, denominator_vars}; }
};

HlsRational hls(const SeriesContext& ctx);
HlsRational hls_modified(const SeriesContext& ctx);
/// Shared implementation; `kind` selects the interval.
HlsRational hls_series(const SeriesContext& ctx, Interval kind);

class DegenerateSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// HLS = HLS' / (1 - X_top): over the universal denominators this says the
/// two numerators coincide. Both are computed independently and compared.
bool relation_check(const SeriesContext& ctx);

/// Power-series coefficients keyed by X-monomial, truncated at total X-degree.
struct TruncatedSeries {
    int bound = 0;
    std::map<Monomial, LaurentPoly> coefficients;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Direct sum of W_C X^{Mult(C)} over multichains of (0,1] with |C| <= bound.
TruncatedSeries expand_multichain(const SeriesContext& ctx, int bound);
/// numerator * prod (1 + x + ... + x^bound), truncated at X-degree bound.
TruncatedSeries expand_rational(const GeneratingFunction& f, int bound);

/// A generating function after substitution: no cancellation is attempted.
struct SubstitutedRational {
    LaurentPoly numerator;
    std::vector<LaurentPoly> denominator_factors;  ///< each factor is 1 - image(x)

    /// Power series in `t` up to degree `bound`; every denominator factor must
    /// be 1 - u with u divisible by t.
    LaurentPoly expand_in(VarId t, int bound) const;
};

/// Applies the substitution to the numerator and to each denominator factor.
/// Throws std::domain_error when a factor 1 - image(x) vanishes.
SubstitutedRational substitute(const GeneratingFunction& f, const std::map<VarId, LaurentPoly>& images);

/// Truncation of p to terms whose degree in t is at most bound.
LaurentPoly truncate_in(const LaurentPoly& p, VarId t, int bound);

// ---------------------------------------------------------------------------
// Specializations, each built from its own defining sum.

/// Classical Igusa function: sum over J of binom(r, J)_Y prod_{j in J} X_j/(1-X_j).
/// `xs[j-1]` is X_j.
GeneratingFunction classical_igusa(int r, VarId y, std::span<const VarId> xs);

/// Weak order Igusa function over chains of nonempty subsets of [g] under
/// strict inclusion. `x_of(mask)` names X_J for the subset with bitmask `mask`.
GeneratingFunction weak_order_igusa(int g, const std::function<VarId(unsigned)>& x_of);

/// Generalized Igusa function: chains in the product of chains [0, r_i],
/// weighted by prod_i binom(r_i, {i-th coordinates})_{Y_i}. `x_of` names the
/// X-variable of a coordinate vector.
GeneratingFunction generalized_igusa(std::span<const int> r, std::span<const VarId> ys,
                                     const std::function<VarId(const std::vector<int>&)>& x_of);

/// Hall-Littlewood-Schubert series over reduced tableaux with entries in [n],
/// weighted by the univariate leg polynomial in y.
GeneratingFunction mv_hls(int n, VarId y, const std::function<VarId(unsigned)>& x_of);

}  // namespace hlskit
