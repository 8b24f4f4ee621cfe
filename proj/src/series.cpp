#include "hlskit/series.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>

#include "hlskit/yanalog.hpp"

namespace hlskit {

VarId x_var(const Element& e, VarTable& table) { return table.by_name("X{" + render(e) + "}"); }

namespace {

std::vector<VarId> make_xs(const Poset& poset) {
    std::vector<VarId> xs;
    xs.reserve(poset.size());
    for (const auto& e : poset.elements()) xs.push_back(x_var(e));
    return xs;
}

// Subset tables below are indexed by bitmask over the interval.
constexpr std::size_t kMaxIntervalBits = 24;

}  // namespace

SeriesContext::SeriesContext(PosetSpec spec, Caps caps)
    : poset_(std::move(spec), caps),
      ys_(YVars::for_spec(poset_.spec())),
      xs_(make_xs(poset_)),
      weights_(poset_, ys_) {}

bool GeneratingFunction::same_as(const GeneratingFunction& other) const {
    auto a = denominator;
    auto b = other.denominator;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && numerator == other.numerator;
}

HlsRational hls_series(const SeriesContext& ctx, Interval kind) {
    const auto start = std::chrono::steady_clock::now();
    const auto& poset = ctx.poset();
    HlsRational out;
    out.spec = poset.spec();
    out.kind = kind;
    out.denominator = poset.interval(kind);
    for (auto c : out.denominator) out.denominator_vars.push_back(ctx.x(c));

    const std::size_t m = out.denominator.size();
    if (m > kMaxIntervalBits) {
        throw CapExceeded("interval of " + std::to_string(m) + " elements is too large for numerator assembly");
    }
    std::vector<int> position(poset.size(), -1);
    for (std::size_t p = 0; p < m; ++p) position[out.denominator[p]] = static_cast<int>(p);

    // signed[T] = sum of (-1)^{|C|} W_C over chains C with support mask T.
    const std::size_t subsets = std::size_t{1} << m;
    std::vector<LaurentPoly> table(subsets);
    poset.for_each_chain(kind, [&](std::span<const std::size_t> chain) {
        std::size_t mask = 0;
        for (auto c : chain) mask |= std::size_t{1} << position[c];
        LaurentPoly w = chain_weight(chain, ctx.weights());
        if (chain.size() % 2 == 1) w = -w;
        table[mask] += w;
        ++out.stats.chains;
    });
    // Subset-sum transform: table[S] becomes the sum over all T inside S.
    for (std::size_t bit = 0; bit < m; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t s = 0; s < subsets; ++s) {
            if ((s & b) && !table[s ^ b].is_zero()) table[s] += table[s ^ b];
        }
    }
    // Coefficient of X^S in sum_C W_C X^C prod_{c not in C} (1 - X_c) is
    // (-1)^{|S|} times the transformed entry.
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t s = 0; s < subsets; ++s) {
        if (table[s].is_zero()) continue;
        std::vector<Monomial::Entry> xs;
        for (std::size_t p = 0; p < m; ++p) {
            if (s & (std::size_t{1} << p)) xs.emplace_back(out.denominator_vars[p], 1);
        }
        const Monomial xm = Monomial::from_entries(std::move(xs));
        const bool odd = std::popcount(s) % 2 == 1;
        for (const auto& [ym, c] : table[s].terms()) terms.emplace_back(ym * xm, odd ? Integer(-c) : c);
    }
    out.numerator = LaurentPoly::from_terms(std::move(terms));
    out.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

HlsRational hls(const SeriesContext& ctx) { return hls_series(ctx, Interval::HalfOpen); }
HlsRational hls_modified(const SeriesContext& ctx) { return hls_series(ctx, Interval::Open); }

bool relation_check(const SeriesContext& ctx) {
    if (ctx.spec().degenerate()) {
        throw DegenerateSpec("relation check needs a spec whose bottom and top differ");
    }
    return hls(ctx).numerator == hls_modified(ctx).numerator;
}

// ---------------------------------------------------------------------------
// Expansions

namespace {

long x_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [v, e] : m.entries()) d += e;
    return d;
}

/// Splits every term into its X part (over `xvars`) and the rest.
std::map<Monomial, LaurentPoly> split_by_x(const LaurentPoly& p, const std::vector<VarId>& xvars) {
    std::map<Monomial, std::vector<LaurentPoly::Term>> parts;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> xe;
        std::vector<Monomial::Entry> ye;
        for (const auto& entry : m.entries()) {
            (std::binary_search(xvars.begin(), xvars.end(), entry.first) ? xe : ye).push_back(entry);
        }
        parts[Monomial::from_entries(std::move(xe))].emplace_back(Monomial::from_entries(std::move(ye)), c);
    }
    std::map<Monomial, LaurentPoly> out;
    for (auto& [xm, terms] : parts) out.emplace(xm, LaurentPoly::from_terms(std::move(terms)));
    return out;
}

}  // namespace

TruncatedSeries expand_multichain(const SeriesContext& ctx, int bound) {
    TruncatedSeries out;
    out.bound = bound;
    ctx.poset().for_each_multichain(Interval::HalfOpen, bound, [&](std::span<const std::size_t> chain) {
        std::vector<Monomial::Entry> xs;
        for (auto c : chain) xs.emplace_back(ctx.x(c), 1);
        out.coefficients[Monomial::from_entries(std::move(xs))] += chain_weight(chain, ctx.weights());
    });
    std::erase_if(out.coefficients, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

TruncatedSeries expand_rational(const GeneratingFunction& f, int bound) {
    if (bound < 0) throw std::invalid_argument("expansion bound must be nonnegative");
    std::vector<VarId> xvars = f.denominator;
    std::sort(xvars.begin(), xvars.end());
    std::map<Monomial, LaurentPoly> series;
    for (auto& [xm, coeff] : split_by_x(f.numerator, xvars)) {
        if (x_degree(xm) <= bound) series.emplace(xm, std::move(coeff));
    }
    for (VarId x : f.denominator) {
        std::map<Monomial, LaurentPoly> next;
        for (const auto& [xm, coeff] : series) {
            const long d = x_degree(xm);
            for (int k = 0; d + k <= bound; ++k) next[xm * Monomial::var(x, k)] += coeff;
        }
        series = std::move(next);
    }
    TruncatedSeries out;
    out.bound = bound;
    for (auto& [xm, coeff] : series) {
        if (!coeff.is_zero()) out.coefficients.emplace(xm, std::move(coeff));
    }
    return out;
}

SubstitutedRational substitute(const GeneratingFunction& f, const std::map<VarId, LaurentPoly>& images) {
    SubstitutedRational out;
    out.numerator = hlskit::substitute(f.numerator, images);
    for (VarId x : f.denominator) {
        LaurentPoly factor = hlskit::substitute(LaurentPoly(1) - LaurentPoly::var(x), images);
        if (factor.is_zero()) throw std::domain_error("substitution makes a denominator factor vanish");
        out.denominator_factors.push_back(std::move(factor));
    }
    return out;
}

LaurentPoly truncate_in(const LaurentPoly& p, VarId t, int bound) {
    std::vector<LaurentPoly::Term> kept;
    for (const auto& term : p.terms()) {
        if (term.first.exponent(t) <= bound) kept.push_back(term);
    }
    return LaurentPoly::from_terms(std::move(kept));
}

LaurentPoly SubstitutedRational::expand_in(VarId t, int bound) const {
    LaurentPoly result = truncate_in(numerator, t, bound);
    for (const auto& factor : denominator_factors) {
        const LaurentPoly u = LaurentPoly(1) - factor;
        for (const auto& [m, c] : u.terms()) {
            if (m.exponent(t) < 1) throw std::domain_error("denominator factor is not 1 - t*(...)");
        }
        // 1 / (1 - u) = sum_k u^k, and u^k has t-degree >= k.
        LaurentPoly geometric(1);
        LaurentPoly power(1);
        for (int k = 1; k <= bound; ++k) {
            power = truncate_in(power * u, t, bound);
            geometric += power;
        }
        result = truncate_in(result * geometric, t, bound);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Specializations. These assemble sum_C w_C prod_{c in C} x_c prod_{c not in C} (1 - x_c)
// by direct multiplication, independently of the subset transform above.

namespace {

LaurentPoly literal_term(const LaurentPoly& weight, const std::vector<VarId>& chain, const std::vector<VarId>& all) {
    LaurentPoly out = weight;
    std::set<VarId> in_chain(chain.begin(), chain.end());
    for (VarId x : all) {
        out *= in_chain.contains(x) ? LaurentPoly::var(x) : LaurentPoly(1) - LaurentPoly::var(x);
    }
    return out;
}

}  // namespace

GeneratingFunction classical_igusa(int r, VarId y, std::span<const VarId> xs) {
    if (r < 0) throw std::invalid_argument("classical_igusa: r must be nonnegative");
    if (static_cast<int>(xs.size()) != r) throw std::invalid_argument("classical_igusa: need r X-variables");
    GeneratingFunction out;
    out.denominator.assign(xs.begin(), xs.end());
    for (unsigned mask = 0; mask < (1U << r); ++mask) {
        std::vector<int> subset;
        std::vector<VarId> chain;
        for (int j = 1; j <= r; ++j) {
            if (mask & (1U << (j - 1))) {
                subset.push_back(j);
                chain.push_back(xs[j - 1]);
            }
        }
        out.numerator += literal_term(y_multinomial(r, subset, y), chain, out.denominator);
    }
    return out;
}

GeneratingFunction weak_order_igusa(int g, const std::function<VarId(unsigned)>& x_of) {
    if (g < 1 || g > 16) throw std::invalid_argument("weak_order_igusa: g out of range");
    const unsigned full = (1U << g) - 1;
    GeneratingFunction out;
    for (unsigned mask = 1; mask <= full; ++mask) out.denominator.push_back(x_of(mask));
    std::vector<unsigned> chain;
    std::function<void()> extend = [&] {
        std::vector<VarId> vars;
        for (unsigned s : chain) vars.push_back(x_of(s));
        out.numerator += literal_term(LaurentPoly(1), vars, out.denominator);
        const unsigned last = chain.empty() ? 0 : chain.back();
        for (unsigned next = 1; next <= full; ++next) {
            // strict superset of the last subset
            if ((next & last) == last && next != last) {
                chain.push_back(next);
                extend();
                chain.pop_back();
            }
        }
    };
    extend();
    return out;
}

GeneratingFunction generalized_igusa(std::span<const int> r, std::span<const VarId> ys,
                                     const std::function<VarId(const std::vector<int>&)>& x_of) {
    if (r.empty() || ys.size() != r.size()) throw std::invalid_argument("generalized_igusa: need one Y per part");
    // All nonzero coordinate vectors of the product of chains [0, r_i].
    std::vector<std::vector<int>> points;
    std::vector<int> v(r.size(), 0);
    while (true) {
        std::size_t i = r.size();
        while (i-- > 0) {
            if (v[i] < r[i]) {
                ++v[i];
                break;
            }
            v[i] = 0;
        }
        if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) break;
        points.push_back(v);
    }
    GeneratingFunction out;
    for (const auto& p : points) out.denominator.push_back(x_of(p));

    auto below = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a == b) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > b[i]) return false;
        }
        return true;
    };
    std::vector<std::size_t> chain;
    std::function<void()> extend = [&] {
        LaurentPoly weight(1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::vector<int> coords;
            for (auto c : chain) {
                if (points[c][i] > 0) coords.push_back(points[c][i]);
            }
            weight *= y_multinomial(r[i], coords, ys[i]);
        }
        std::vector<VarId> vars;
        for (auto c : chain) vars.push_back(out.denominator[c]);
        out.numerator += literal_term(weight, vars, out.denominator);
        for (std::size_t next = 0; next < points.size(); ++next) {
            if (chain.empty() || below(points[chain.back()], points[next])) {
                chain.push_back(next);
                extend();
                chain.pop_back();
            }
        }
    };
    extend();
    return out;
}

GeneratingFunction mv_hls(int n, VarId y, const std::function<VarId(unsigned)>& x_of) {
    if (n < 1 || n > 16) throw std::invalid_argument("mv_hls: n out of range");
    const unsigned full = (1U << n) - 1;
    std::vector<std::vector<int>> columns(full + 1);
    for (unsigned mask = 1; mask <= full; ++mask) {
        for (int k = 1; k <= n; ++k) {
            if (mask & (1U << (k - 1))) columns[mask].push_back(k);
        }
    }
    // Two columns left|right sit side by side semistandardly when the left
    // one is at least as long and dominates row by row.
    auto fits_left_of = [&](unsigned left, unsigned right) {
        const auto& l = columns[left];
        const auto& rcol = columns[right];
        if (l.size() < rcol.size()) return false;
        for (std::size_t i = 0; i < rcol.size(); ++i) {
            if (l[i] > rcol[i]) return false;
        }
        return true;
    };
    GeneratingFunction out;
    for (unsigned mask = 1; mask <= full; ++mask) out.denominator.push_back(x_of(mask));
    const std::vector<VarId> ys(static_cast<std::size_t>(n), y);

    std::vector<unsigned> right_to_left;
    std::function<void()> extend = [&] {
        std::vector<std::vector<int>> left_to_right;
        std::vector<VarId> vars;
        for (auto it = right_to_left.rbegin(); it != right_to_left.rend(); ++it) {
            left_to_right.push_back(columns[*it]);
        }
        for (unsigned c : right_to_left) vars.push_back(x_of(c));
        const SkewTableau t(n, 0, std::move(left_to_right));
        out.numerator += literal_term(phi_tableau(t, ys), vars, out.denominator);
        for (unsigned next = 1; next <= full; ++next) {
            const bool distinct = std::find(right_to_left.begin(), right_to_left.end(), next) == right_to_left.end();
            if (distinct && (right_to_left.empty() || fits_left_of(next, right_to_left.back()))) {
                right_to_left.push_back(next);
                extend();
                right_to_left.pop_back();
            }
        }
    };
    extend();
    return out;
}

}  // namespace hlskit
