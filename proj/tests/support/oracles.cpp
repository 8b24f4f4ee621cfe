#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "hlskit/weight.hpp"
#include "hlskit/yanalog.hpp"

namespace oracle {

using namespace hlskit;

LaurentPoly gaussian_by_counting(int n, int k, VarId q) {
    LaurentPoly out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        // inversions between chosen and unchosen positions
        int inv = 0;
        int chosen_so_far = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1U << i)) {
                inv += i - chosen_so_far;
                ++chosen_so_far;
            }
        }
        out += LaurentPoly::var(q, inv);
    }
    return out;
}

bool leq_by_definition(const Element& a, const Element& b) {
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        int sa = 0;
        int sb = 0;
        for (std::size_t k = 0; k < a.parts[i].counts.size(); ++k) {
            sa += a.parts[i].counts[k];
            sb += b.parts[i].counts[k];
            if (sa > sb) return false;
        }
    }
    return true;
}

std::size_t chains_by_subsets(const Poset& poset, Interval kind) {
    const auto pool = poset.interval(kind);
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
        bool chain = true;
        for (std::size_t i = 0; i < pool.size() && chain; ++i) {
            for (std::size_t j = i + 1; j < pool.size() && chain; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1)) {
                    chain = poset.leq(pool[i], pool[j]) || poset.leq(pool[j], pool[i]);
                }
            }
        }
        count += chain;
    }
    return count;
}

LaurentPoly numerator_literal(const SeriesContext& ctx, Interval kind) {
    const auto pool = ctx.poset().interval(kind);
    LaurentPoly out;
    ctx.poset().for_each_chain(kind, [&](std::span<const std::size_t> chain) {
        LaurentPoly term = chain_weight(chain, ctx.weights());
        for (auto c : pool) {
            const bool in = std::find(chain.begin(), chain.end(), c) != chain.end();
            term *= in ? LaurentPoly::var(ctx.x(c)) : LaurentPoly(1) - LaurentPoly::var(ctx.x(c));
        }
        out += term;
    });
    return out;
}

long long classical_mobius(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq, std::size_t a,
                           std::size_t b) {
    if (a == b) return 1;
    if (!leq(a, b)) return 0;
    long long sum = 0;
    for (std::size_t c = 0; c < size; ++c) {
        if (c != b && leq(a, c) && leq(c, b)) sum += classical_mobius(size, leq, a, c);
    }
    return -sum;
}

PolyMatrix unitriangular_inverse(const PolyMatrix& z) {
    const std::size_t n = z.dim();
    PolyMatrix m = PolyMatrix::identity(z.index);
    // Row a of M: m_{a,b} = -sum_{c != b} m_{a,c} z_{c,b}, solved along any
    // order in which z is upper triangular. Use repeated passes until fixed.
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> done(n, false);
        done[a] = true;
        for (std::size_t b = 0; b < n; ++b) {
            if (b != a) m.at(a, b) = LaurentPoly{};
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t b = 0; b < n; ++b) {
                if (done[b]) continue;
                bool ready = true;
                for (std::size_t c = 0; c < n && ready; ++c) {
                    if (c != b && !z.at(c, b).is_zero() && !done[c]) ready = false;
                }
                if (!ready) continue;
                LaurentPoly s;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != b && !z.at(c, b).is_zero()) s += m.at(a, c) * z.at(c, b);
                }
                m.at(a, b) = -s;
                done[b] = true;
                progress = true;
            }
        }
    }
    return m;
}

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int max_terms, int max_exp,
                        int max_coeff) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<LaurentPoly::Term> terms;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<Monomial::Entry> entries;
        for (VarId v : vars) entries.emplace_back(v, exp(rng));
        terms.emplace_back(Monomial::from_entries(std::move(entries)), Integer(coeff(rng)));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

namespace {

std::vector<VarId> test_vars() {
    auto& t = VarTable::global();
    return {t.generic("a"), t.generic("b"), t.generic("c")};
}

void record(PropertyResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) {
        if (r.failures == 0) r.first_failure = what;
        ++r.failures;
    }
}

/// Small specs used by the weight properties, built once.
const std::vector<std::unique_ptr<SeriesContext>>& contexts() {
    static const auto all = [] {
        std::vector<std::unique_ptr<SeriesContext>> v;
        const std::vector<PosetSpec> specs{{{1}, {2}}, {{2}, {1}},    {{2}, {2}},      {{3}, {1}},
                                           {{0}, {3}}, {{3}, {2}},    {{1, 1}, {1, 0}}, {{2, 1}, {1, 1}},
                                           {{4}, {2}}, {{0, 2}, {2, 0}}};
        for (const auto& s : specs) v.push_back(std::make_unique<SeriesContext>(s));
        return v;
    }();
    return all;
}

std::vector<std::size_t> random_multichain(std::mt19937_64& rng, const Poset& poset) {
    std::uniform_int_distribution<int> len(1, 6);
    const int k = len(rng);
    std::vector<std::size_t> chain;
    std::size_t prev = poset.bottom();
    for (int i = 0; i < k; ++i) {
        std::vector<std::size_t> options;
        for (std::size_t c = 1; c < poset.size(); ++c) {
            if (poset.leq(prev, c)) options.push_back(c);
        }
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        prev = options[pick(rng)];
        chain.push_back(prev);
    }
    return chain;
}

std::string chain_text(const Poset& poset, const std::vector<std::size_t>& chain) {
    std::string s = poset.spec().to_string() + ":";
    for (auto c : chain) s += " " + render(poset.element(c));
    return s;
}

}  // namespace

PropertyResult prop_ring_axioms(std::mt19937_64& rng, std::size_t cases) {
    PropertyResult r{"ring axioms"};
    const auto vars = test_vars();
    for (std::size_t i = 0; i < cases; ++i) {
        const auto p = random_poly(rng, vars);
        const auto q = random_poly(rng, vars);
        const auto s = random_poly(rng, vars);
        const bool ok = p + q == q + p && p * q == q * p && (p + q) + s == p + (q + s) &&
                        (p * q) * s == p * (q * s) && p * (q + s) == p * q + p * s && p - p == LaurentPoly{} &&
                        p * LaurentPoly(1) == p && p + LaurentPoly{} == p;
        record(r, ok, to_string(p) + " | " + to_string(q) + " | " + to_string(s));
    }
    return r;
}

PropertyResult prop_q_pascal(std::mt19937_64& rng, std::size_t cases) {
    PropertyResult r{"q-Pascal recurrence and symmetry"};
    const VarId q = VarTable::global().generic("q");
    std::uniform_int_distribution<int> nd(1, 14);
    for (std::size_t i = 0; i < cases; ++i) {
        const int n = nd(rng);
        std::uniform_int_distribution<int> kd(0, n);
        const int k = kd(rng);
        const LaurentPoly b = y_binomial(n, k, q);
        bool ok = b == y_binomial(n, n - k, q);
        if (k >= 1 && k <= n - 1) {
            ok = ok && b == y_binomial(n - 1, k - 1, q) + y_binomial(n - 1, k, q).times_monomial(Monomial::var(q, k));
            ok = ok && b == y_binomial(n - 1, k, q) + y_binomial(n - 1, k - 1, q).times_monomial(Monomial::var(q, n - k));
        }
        ok = ok && eval_at_one(b, std::vector<VarId>{q}) == LaurentPoly(binomial(n, k));
        record(r, ok, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    return r;
}

PropertyResult prop_invert_vars(std::mt19937_64& rng, std::size_t cases) {
    PropertyResult r{"invert_vars homomorphism and involution"};
    const auto vars = test_vars();
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < cases; ++i) {
        std::vector<VarId> sel;
        for (VarId v : vars) {
            if (coin(rng)) sel.push_back(v);
        }
        const auto p = random_poly(rng, vars);
        const auto q = random_poly(rng, vars);
        auto inv = [&](const LaurentPoly& x) { return invert_vars(x, sel); };
        const bool ok = inv(inv(p)) == p && inv(p * q) == inv(p) * inv(q) && inv(p + q) == inv(p) + inv(q) &&
                        invert_all(invert_all(p)) == p;
        record(r, ok, to_string(p) + " | " + to_string(q));
    }
    return r;
}

PropertyResult prop_repetition_invariance(std::mt19937_64& rng, std::size_t cases) {
    PropertyResult r{"weight invariance under repetition"};
    const auto& ctxs = contexts();
    std::uniform_int_distribution<std::size_t> which(0, ctxs.size() - 1);
    for (std::size_t i = 0; i < cases; ++i) {
        const auto& ctx = *ctxs[which(rng)];
        auto chain = random_multichain(rng, ctx.poset());
        if (chain.empty()) chain.push_back(ctx.poset().top());
        // Support of the multichain, then a version with one entry repeated.
        std::vector<std::size_t> support = chain;
        support.erase(std::unique(support.begin(), support.end()), support.end());
        std::uniform_int_distribution<std::size_t> pos(0, chain.size() - 1);
        std::vector<std::size_t> longer = chain;
        const std::size_t p = pos(rng);
        longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(p), chain[p]);
        const auto w = chain_weight(support, ctx.weights());
        const bool ok = chain_weight(chain, ctx.weights()) == w && chain_weight(longer, ctx.weights()) == w;
        record(r, ok, chain_text(ctx.poset(), longer));
    }
    return r;
}

PropertyResult prop_chain_tableau(std::mt19937_64& rng, std::size_t cases) {
    PropertyResult r{"chain and tableau weights agree"};
    const auto& ctxs = contexts();
    std::uniform_int_distribution<std::size_t> which(0, ctxs.size() - 1);
    for (std::size_t i = 0; i < cases; ++i) {
        const auto& ctx = *ctxs[which(rng)];
        const auto chain = random_multichain(rng, ctx.poset());
        LaurentPoly product(1);
        for (int c = 0; c < ctx.spec().g(); ++c) {
            const SkewTableau t = project(chain, ctx.poset(), c);
            product *= theta_tableau(t, ctx.ys().y0(c)) * phi_tableau(t, ctx.ys().positive(c));
        }
        const auto w = chain_weight(chain, ctx.weights());
        const bool ok = w == product;
        record(r, ok, chain_text(ctx.poset(), chain));
    }
    return r;
}

}  // namespace oracle
