#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlskit/laurent.hpp"
#include "hlskit/poset.hpp"

namespace hlskit {

/// The Y-variables of a spec: ids[i][j] is Y[i+1,j] for 0 <= j <= n_{i+1}.
struct YVars {
    std::vector<std::vector<VarId>> ids;

    static YVars for_spec(const PosetSpec& spec, VarTable& table = VarTable::global());
    VarId y0(int component) const { return ids.at(component).at(0); }
    /// Y[i,1..n_i] for the 0-based component index.
    std::span<const VarId> positive(int component) const;
    std::vector<VarId> all() const;
};

/// theta_{a,b}(Y0) = binom(b_0, a_0)_{Y0}; zero when a_0 > b_0.
LaurentPoly theta(const ComponentElement& a, const ComponentElement& b, VarId y0);

/// Refined leg polynomial of a pair: zero unless a <=_t b, otherwise the
/// product over i with a_i = 1, b_i = 0 of (1 - Y_i^{Delta_i(a,b)}).
/// `ys[k-1]` is the variable Y_k.
LaurentPoly refined_leg_pair(const ComponentElement& a, const ComponentElement& b, std::span<const VarId> ys);

/// Pair weight w_{a,b} = prod_i theta(a_i, b_i) phi(a_i, b_i).
LaurentPoly pair_weight(const Element& a, const Element& b, const YVars& ys);

/// All pair weights of a poset, cached. Entry (a, b) is zero unless a <= b.
class PairWeights {
public:
    PairWeights(const Poset& poset, const YVars& ys);

    const LaurentPoly& operator()(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
    const Poset& poset() const { return *poset_; }
    const YVars& ys() const { return ys_; }

private:
    const Poset* poset_;
    YVars ys_;
    std::size_t size_;
    std::vector<LaurentPoly> table_;
};

/// W_C = prod_{j=0..k} w(c_j, c_{j+1}) with c_0 the bottom and c_{k+1} the
/// top. Accepts strict chains and multichains; throws std::invalid_argument
/// when consecutive items are not weakly increasing.
LaurentPoly chain_weight(std::span<const std::size_t> chain, const PairWeights& weights);

/// Semistandard skew tableau with the inner shape filled by zeros.
///
/// Stored by columns, left to right, each column listed top to bottom
/// (ascending, zeros first). Columns are never empty.
class SkewTableau {
public:
    SkewTableau(int n, int r, std::vector<std::vector<int>> columns);

    /// Columns given right to left as elements of P_{n,r}; empty ones are dropped.
    static SkewTableau from_elements(std::span<const ComponentElement> right_to_left, int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    std::vector<std::vector<int>> rows() const;
    std::vector<int> lambda() const;
    std::vector<int> mu() const;
    /// Zero counts e_1, ..., e_l of the columns read right to left.
    std::vector<int> zero_counts_right_to_left() const;

    /// Entry at 1-based (row, column), if that cell exists.
    std::optional<int> at(int row, int col) const;

    std::string pretty() const;
    std::string json() const;

private:
    void validate() const;

    int n_;
    int r_;
    std::vector<std::vector<int>> columns_;
};

/// Leg^+_T(i, j) for a 1-based cell position (empty when undefined).
std::vector<int> leg_plus(const SkewTableau& t, int row, int col);

struct LegPlusCell {
    int row;
    int col;
    std::vector<int> members;
};
/// L^+_T with the members of each Leg^+ set, ordered by column then row.
std::vector<LegPlusCell> leg_plus_cells(const SkewTableau& t);

/// i-th projection of a multichain (0-based component index).
SkewTableau project(std::span<const std::size_t> multichain, const Poset& poset, int component);

/// Theta_T(Y0): product of binom(e_{i+1}, e_i)_{Y0} with e_{l+1} = r.
LaurentPoly theta_tableau(const SkewTableau& t, VarId y0);
/// Phi_T: product over L^+_T of (1 - Y_{T_{i,j+1}}^{#Leg^+(i,j)}). `ys[k-1]` is Y_k.
LaurentPoly phi_tableau(const SkewTableau& t, std::span<const VarId> ys);

}  // namespace hlskit
