#include "hlskit/weight.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hlskit/yanalog.hpp"

namespace hlskit {

YVars YVars::for_spec(const PosetSpec& spec, VarTable& table) {
    YVars out;
    for (int i = 0; i < spec.g(); ++i) {
        std::vector<VarId> row;
        for (int j = 0; j <= spec.n[i]; ++j) row.push_back(table.y(i + 1, j));
        out.ids.push_back(std::move(row));
    }
    return out;
}

std::span<const VarId> YVars::positive(int component) const {
    const auto& row = ids.at(component);
    return std::span<const VarId>(row).subspan(1);
}

std::vector<VarId> YVars::all() const {
    std::vector<VarId> out;
    for (const auto& row : ids) out.insert(out.end(), row.begin(), row.end());
    return out;
}

LaurentPoly theta(const ComponentElement& a, const ComponentElement& b, VarId y0) {
    if (a.zeros() > b.zeros()) return {};
    return y_binomial(b.zeros(), a.zeros(), y0);
}

LaurentPoly refined_leg_pair(const ComponentElement& a, const ComponentElement& b, std::span<const VarId> ys) {
    if (a.n() != b.n()) throw std::invalid_argument("refined_leg_pair: elements of different posets");
    if (static_cast<int>(ys.size()) < a.n()) throw std::invalid_argument("refined_leg_pair: too few variables");
    if (!leq_t(a, b)) return {};
    LaurentPoly out(1);
    int d = b.counts[0] - a.counts[0];
    // d runs as Delta_i(a, b) = s_i(b) - s_i(a) for i >= 1.
    for (int i = 1; i <= a.n(); ++i) {
        if (a.counts[i] == 1 && b.counts[i] == 0) out *= LaurentPoly(1) - LaurentPoly::var(ys[i - 1], d);
        d += b.counts[i] - a.counts[i];
    }
    return out;
}

LaurentPoly pair_weight(const Element& a, const Element& b, const YVars& ys) {
    if (a.parts.size() != b.parts.size() || a.parts.size() != ys.ids.size()) {
        throw std::invalid_argument("pair_weight: shape mismatch");
    }
    LaurentPoly out(1);
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        const int c = static_cast<int>(i);
        out *= theta(a.parts[i], b.parts[i], ys.y0(c));
        if (out.is_zero()) return out;
        out *= refined_leg_pair(a.parts[i], b.parts[i], ys.positive(c));
        if (out.is_zero()) return out;
    }
    return out;
}

PairWeights::PairWeights(const Poset& poset, const YVars& ys)
    : poset_(&poset), ys_(ys), size_(poset.size()), table_(size_ * size_) {
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
            if (poset.leq(a, b)) table_[a * size_ + b] = pair_weight(poset.element(a), poset.element(b), ys_);
        }
    }
}

LaurentPoly chain_weight(std::span<const std::size_t> chain, const PairWeights& weights) {
    const auto& poset = weights.poset();
    LaurentPoly out(1);
    std::size_t prev = poset.bottom();
    for (auto c : chain) {
        if (!poset.leq(prev, c)) throw std::invalid_argument("chain_weight: input is not a multichain");
        out *= weights(prev, c);
        prev = c;
    }
    return out * weights(prev, poset.top());
}

// ---------------------------------------------------------------------------
// Tableaux

SkewTableau::SkewTableau(int n, int r, std::vector<std::vector<int>> columns)
    : n_(n), r_(r), columns_(std::move(columns)) {
    validate();
}

SkewTableau SkewTableau::from_elements(std::span<const ComponentElement> right_to_left, int n, int r) {
    std::vector<std::vector<int>> cols;
    for (auto it = right_to_left.rbegin(); it != right_to_left.rend(); ++it) {
        if (it->n() != n) throw std::invalid_argument("tableau column from a different poset");
        std::vector<int> col(it->counts[0], 0);
        for (int k = 1; k <= n; ++k) {
            if (it->counts[k]) col.push_back(k);
        }
        if (!col.empty()) cols.push_back(std::move(col));
    }
    return SkewTableau(n, r, std::move(cols));
}

void SkewTableau::validate() const {
    auto fail = [](const std::string& why) { throw std::invalid_argument("invalid skew tableau: " + why); };
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        const auto& col = columns_[j];
        if (col.empty()) fail("empty column");
        int zeros = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] < 0 || col[i] > n_) fail("entry outside {0.." + std::to_string(n_) + "}");
            if (col[i] == 0) {
                if (i != static_cast<std::size_t>(zeros)) fail("zero below a positive entry");
                ++zeros;
            } else if (i > 0 && col[i] <= col[i - 1] && col[i - 1] != 0) {
                fail("positive column entries not strictly increasing");
            }
        }
        if (zeros > r_) fail("inner shape has more than r rows");
        if (j > 0) {
            const auto& left = columns_[j - 1];
            if (col.size() > left.size()) fail("column lengths increase");
            const int left_zeros = static_cast<int>(std::count(left.begin(), left.end(), 0));
            if (zeros > left_zeros) fail("inner shape is not a partition");
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (left[i] > col[i]) fail("row decreases");
            }
        }
    }
}

std::vector<std::vector<int>> SkewTableau::rows() const {
    std::vector<std::vector<int>> out;
    for (const auto& col : columns_) {
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (out.size() <= i) out.emplace_back();
            out[i].push_back(col[i]);
        }
    }
    return out;
}

std::vector<int> SkewTableau::lambda() const {
    std::vector<int> out;
    for (const auto& row : rows()) out.push_back(static_cast<int>(row.size()));
    return out;
}

std::vector<int> SkewTableau::mu() const {
    std::vector<int> out;
    for (const auto& row : rows()) {
        const int z = static_cast<int>(std::count(row.begin(), row.end(), 0));
        if (z > 0) out.push_back(z);
    }
    return out;
}

std::vector<int> SkewTableau::zero_counts_right_to_left() const {
    std::vector<int> out;
    for (auto it = columns_.rbegin(); it != columns_.rend(); ++it) {
        out.push_back(static_cast<int>(std::count(it->begin(), it->end(), 0)));
    }
    return out;
}

std::optional<int> SkewTableau::at(int row, int col) const {
    if (col < 1 || col > static_cast<int>(columns_.size())) return std::nullopt;
    const auto& c = columns_[col - 1];
    if (row < 1 || row > static_cast<int>(c.size())) return std::nullopt;
    return c[row - 1];
}

std::string SkewTableau::pretty() const {
    std::ostringstream out;
    for (const auto& row : rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

std::string SkewTableau::json() const {
    nlohmann::json j;
    j["lambda"] = lambda();
    j["mu"] = mu();
    j["rows"] = rows();
    return j.dump();
}

std::vector<int> leg_plus(const SkewTableau& t, int row, int col) {
    const auto here = t.at(row, col);
    const auto right = t.at(row, col + 1);
    if (!here || !right) return {};
    const auto& column = t.columns()[col - 1];
    const std::vector<int> leg(column.begin() + (row - 1), column.end());
    if (std::find(leg.begin(), leg.end(), *right) != leg.end()) return {};
    std::vector<int> out;
    for (int x : leg) {
        if (x < *right) out.push_back(x);
    }
    return out;
}

std::vector<LegPlusCell> leg_plus_cells(const SkewTableau& t) {
    std::vector<LegPlusCell> out;
    const int width = static_cast<int>(t.columns().size());
    for (int col = 1; col <= width; ++col) {
        const int height = static_cast<int>(t.columns()[col - 1].size());
        for (int row = 1; row <= height; ++row) {
            auto members = leg_plus(t, row, col);
            if (!members.empty()) out.push_back({row, col, std::move(members)});
        }
    }
    return out;
}

SkewTableau project(std::span<const std::size_t> multichain, const Poset& poset, int component) {
    const auto& spec = poset.spec();
    if (component < 0 || component >= spec.g()) throw std::out_of_range("project: bad component index");
    std::vector<ComponentElement> cols;
    std::size_t prev = poset.bottom();
    for (auto c : multichain) {
        if (c == poset.bottom() || !poset.leq(prev, c)) {
            throw std::invalid_argument("project: input is not a multichain of the half-open interval");
        }
        cols.push_back(poset.element(c).parts[component]);
        prev = c;
    }
    return SkewTableau::from_elements(cols, spec.n[component], spec.r[component]);
}

LaurentPoly theta_tableau(const SkewTableau& t, VarId y0) {
    auto e = t.zero_counts_right_to_left();
    e.push_back(t.r());
    LaurentPoly out(1);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) out *= y_binomial(e[i + 1], e[i], y0);
    return out;
}

LaurentPoly phi_tableau(const SkewTableau& t, std::span<const VarId> ys) {
    if (static_cast<int>(ys.size()) < t.n()) throw std::invalid_argument("phi_tableau: too few variables");
    LaurentPoly out(1);
    for (const auto& cell : leg_plus_cells(t)) {
        const int entry = *t.at(cell.row, cell.col + 1);
        out *= LaurentPoly(1) - LaurentPoly::var(ys[entry - 1], static_cast<int>(cell.members.size()));
    }
    return out;
}

}  // namespace hlskit
