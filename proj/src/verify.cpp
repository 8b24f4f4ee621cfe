#include "hlskit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "hlskit/weight.hpp"
#include "hlskit/yanalog.hpp"

namespace hlskit {

std::size_t worker_count() {
    if (const char* env = std::getenv("HLSKIT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        while (!stop) {
            const std::size_t i = next++;
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                stop = true;
            }
        }
    };
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Matrices

PolyMatrix PolyMatrix::identity(std::vector<Element> index) {
    PolyMatrix m;
    m.index = std::move(index);
    m.entries.assign(m.dim() * m.dim(), LaurentPoly{});
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

namespace {

void check_dim(std::size_t dim) {
    if (dim > kMaxMatrixDim) {
        throw CapExceeded("matrix dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxMatrixDim));
    }
}

PolyMatrix empty_matrix(const Poset& poset) {
    check_dim(poset.size());
    PolyMatrix m;
    m.index = poset.elements();
    m.entries.assign(m.dim() * m.dim(), LaurentPoly{});
    return m;
}

}  // namespace

PolyMatrix zeta_matrix(const SeriesContext& ctx) {
    PolyMatrix m = empty_matrix(ctx.poset());
    for (std::size_t a = 0; a < m.dim(); ++a) {
        for (std::size_t b = 0; b < m.dim(); ++b) m.at(a, b) = ctx.weights()(a, b);
    }
    return m;
}

PolyMatrix zeta_matrix(const PosetSpec& spec) {
    const SeriesContext ctx(spec);
    return zeta_matrix(ctx);
}

PolyMatrix mobius_matrix(const SeriesContext& ctx) {
    const auto& poset = ctx.poset();
    const auto& spec = poset.spec();
    const auto yall = ctx.ys().all();
    PolyMatrix m = empty_matrix(poset);
    for (std::size_t a = 0; a < m.dim(); ++a) {
        for (std::size_t b = 0; b < m.dim(); ++b) {
            const LaurentPoly& w = ctx.weights()(a, b);
            if (w.is_zero()) continue;
            // prod_i (-1)^{Delta_{n_i+1}} prod_j Y_{i,j}^{Delta_j}, times w(Y^-1).
            int sign_exp = 0;
            std::vector<Monomial::Entry> pre;
            for (int i = 0; i < spec.g(); ++i) {
                const auto& ai = poset.element(a).parts[i];
                const auto& bi = poset.element(b).parts[i];
                sign_exp += delta(ai, bi, spec.n[i] + 1);
                for (int j = 0; j <= spec.n[i]; ++j) pre.emplace_back(ctx.ys().ids[i][j], delta(ai, bi, j));
            }
            LaurentPoly entry = invert_vars(w, yall).times_monomial(Monomial::from_entries(std::move(pre)));
            if (sign_exp % 2 != 0) entry = -entry;
            if (entry.has_negative_exponents()) {
                throw std::logic_error("mobius_matrix: entry (" + render(poset.element(a)) + ", " +
                                       render(poset.element(b)) + ") is not a polynomial");
            }
            m.at(a, b) = std::move(entry);
        }
    }
    return m;
}

PolyMatrix mobius_matrix(const PosetSpec& spec) {
    const SeriesContext ctx(spec);
    return mobius_matrix(ctx);
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.index != b.index) throw std::invalid_argument("matmul: index mismatch");
    const std::size_t n = a.dim();
    PolyMatrix out;
    out.index = a.index;
    out.entries.assign(n * n, LaurentPoly{});
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) {
            const LaurentPoly& left = a.at(i, k);
            if (left.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const LaurentPoly& right = b.at(k, j);
                if (!right.is_zero()) out.entries[i * n + j] += left * right;
            }
        }
    });
    return out;
}

bool is_identity(const PolyMatrix& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.at(i, j) != LaurentPoly(i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    check_dim(na * nb);
    PolyMatrix out;
    for (const auto& x : a.index) {
        for (const auto& y : b.index) {
            Element e = x;
            e.parts.insert(e.parts.end(), y.parts.begin(), y.parts.end());
            out.index.push_back(std::move(e));
        }
    }
    out.entries.assign(na * nb * na * nb, LaurentPoly{});
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    if (!b.at(k, l).is_zero()) out.at(i * nb + k, j * nb + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return out;
}

LaurentPoly mobius_via_chains(const SeriesContext& ctx, std::size_t a, std::size_t b) {
    const auto& poset = ctx.poset();
    if (!poset.leq(a, b)) throw std::invalid_argument("mobius_via_chains: a is not below b");
    if (a == b) return LaurentPoly(1);
    const auto pool = poset.open_interval(a, b);
    LaurentPoly out;
    poset.for_each_chain_in(pool, [&](std::span<const std::size_t> chain) {
        LaurentPoly term(1);
        std::size_t prev = a;
        for (auto c : chain) {
            term *= ctx.weights()(prev, c);
            prev = c;
        }
        term *= ctx.weights()(prev, b);
        // k-element chain contributes with sign (-1)^{k+1}.
        if (chain.size() % 2 == 0) term = -term;
        out += term;
    });
    return out;
}

KN K_and_N(const PosetSpec& spec) {
    spec.validate();
    const YVars ys = YVars::for_spec(spec);
    std::vector<Monomial::Entry> k;
    KN out;
    for (int i = 0; i < spec.g(); ++i) {
        const int r = spec.r[i];
        out.N += spec.n[i] + r;
        k.emplace_back(ys.ids[i][0], r * (r - 1) / 2);
        for (int j = 1; j <= spec.n[i]; ++j) k.emplace_back(ys.ids[i][j], r + j - 1);
    }
    out.K = LaurentPoly(Monomial::from_entries(std::move(k)), 1);
    return out;
}

// ---------------------------------------------------------------------------
// Reciprocity
//
// With F = Num / prod_{c in I} (1 - X_c) and m = |I|,
//   F(Y^-1; X^-1) = invert_all(Num) / prod (1 - X_c^-1)
//                 = invert_all(Num) (-1)^m prod X_c / prod (1 - X_c).
// The functional equations
//   HLS(Y^-1; X^-1)  = (-1)^N     X_top K(Y)^-1 HLS
//   HLS'(Y^-1; X^-1) = (-1)^{N-1}       K(Y)^-1 HLS'
// therefore clear to
//   invert_all(Num) (-1)^m prod X_c K = (-1)^N X_top Num        (half-open)
//   invert_all(Num) (-1)^m prod X_c K = (-1)^{N-1} Num          (open).

namespace {

struct ClearedSides {
    LaurentPoly lhs;
    LaurentPoly rhs;
};

ClearedSides cleared_sides(const LaurentPoly& num, const std::vector<VarId>& denominator, const LaurentPoly& K,
                           int N, std::optional<VarId> x_top) {
    std::vector<Monomial::Entry> xs;
    for (VarId x : denominator) xs.emplace_back(x, 1);
    ClearedSides out;
    out.lhs = (invert_all(num) * K).times_monomial(Monomial::from_entries(std::move(xs)));
    if (denominator.size() % 2 == 1) out.lhs = -out.lhs;
    int sign_exp = N;
    out.rhs = num;
    if (x_top) {
        out.rhs = out.rhs.times_monomial(Monomial::var(*x_top));
    } else {
        sign_exp = N - 1;
    }
    if (sign_exp % 2 != 0) out.rhs = -out.rhs;
    return out;
}

}  // namespace

ReciprocityCertificate verify_reciprocity(const SeriesContext& ctx, Interval kind) {
    ReciprocityCertificate cert;
    cert.spec = ctx.spec();
    cert.kind = kind;
    const KN kn = K_and_N(ctx.spec());
    cert.N = kn.N;
    cert.K = kn.K;
    if (ctx.spec().degenerate()) {
        cert.vacuous = true;
        return cert;
    }
    const HlsRational f = hls_series(ctx, kind);
    std::optional<VarId> x_top;
    if (kind == Interval::HalfOpen) x_top = ctx.x(ctx.poset().top());
    auto sides = cleared_sides(f.numerator, f.denominator_vars, cert.K, cert.N, x_top);
    cert.lhs = std::move(sides.lhs);
    cert.rhs = std::move(sides.rhs);
    cert.equal = cert.lhs == cert.rhs;
    return cert;
}

ReciprocityCertificate verify_reciprocity(const PosetSpec& spec, Interval kind, Caps caps) {
    const SeriesContext ctx(spec, caps);
    return verify_reciprocity(ctx, kind);
}

OrderComplexReport verify_order_complex(const SeriesContext& ctx) {
    const auto& poset = ctx.poset();
    if (ctx.spec().degenerate()) {
        throw DegenerateSpec("order complex check needs a spec whose bottom and top differ");
    }
    const auto open = poset.interval(Interval::Open);
    const std::size_t m = open.size();
    if (m >= 63 || (std::size_t{1} << m) > poset.caps().max_subsets) {
        throw CapExceeded("2^" + std::to_string(m) + " subsets exceed the subset cap");
    }
    const std::size_t subsets = std::size_t{1} << m;
    auto pool_of = [&](std::size_t mask) {
        std::vector<std::size_t> pool;
        for (std::size_t p = 0; p < m; ++p) {
            if (mask & (std::size_t{1} << p)) pool.push_back(open[p]);
        }
        return pool;
    };
    // sums[S] = sum over C in OC(S) of (-1)^{|C|} W_C.
    std::vector<LaurentPoly> sums(subsets);
    parallel_for(subsets, [&](std::size_t mask) {
        const auto pool = pool_of(mask);
        LaurentPoly total;
        poset.for_each_chain_in(pool, [&](std::span<const std::size_t> chain) {
            LaurentPoly w = chain_weight(chain, ctx.weights());
            total += chain.size() % 2 == 0 ? w : -w;
        });
        sums[mask] = std::move(total);
    });

    const KN kn = K_and_N(ctx.spec());
    const auto yall = ctx.ys().all();
    std::vector<unsigned char> ok(subsets, 0);
    parallel_for(subsets, [&](std::size_t mask) {
        LaurentPoly rhs = kn.K * invert_vars(sums[(subsets - 1) ^ mask], yall);
        if ((kn.N - 1) % 2 != 0) rhs = -rhs;
        ok[mask] = sums[mask] == rhs;
    });

    OrderComplexReport report;
    report.spec = ctx.spec();
    report.subsets = subsets;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        if (!ok[mask]) report.failures.push_back(pool_of(mask));
    }
    return report;
}

OrderComplexReport verify_order_complex(const PosetSpec& spec, Caps caps) {
    const SeriesContext ctx(spec, caps);
    return verify_order_complex(ctx);
}

// ---------------------------------------------------------------------------
// Structural checks

bool verify_block_structure(int n, int r) {
    const PosetSpec small{{n}, {r}};
    const PosetSpec big{{n + 1}, {r}};
    const PolyMatrix z = zeta_matrix(small);
    const PolyMatrix zp = zeta_matrix(big);
    const std::size_t h = z.dim();
    if (zp.dim() != 2 * h) return false;
    const VarId y_last = VarTable::global().y(1, n + 1);
    auto s_last = [&](const Element& e) { return s_vector(e.parts[0]).at(n + 1); };
    for (std::size_t a = 0; a < h; ++a) {
        // Reverse-lex order: the first half has a_{n+1} = 0, the second a_{n+1} = 1.
        if (zp.index[a].parts[0].counts[n + 1] != 0 || zp.index[a + h].parts[0].counts[n + 1] != 1) return false;
        for (std::size_t b = 0; b < h; ++b) {
            const LaurentPoly& zab = z.at(a, b);
            // (D^-1 Z D)_{ab} = Y^{s(b) - s(a)} z_{ab}
            const LaurentPoly conj =
                zab.times_monomial(Monomial::var(y_last, s_last(z.index[b]) - s_last(z.index[a])));
            if (zp.at(a, b) != zab || zp.at(a, b + h) != zab || zp.at(a + h, b + h) != zab) return false;
            if (zp.at(a + h, b) != zab - conj) return false;
        }
    }
    return true;
}

bool verify_q_pascal(int r) {
    const PosetSpec spec{{0}, {r}};
    const PolyMatrix z = zeta_matrix(spec);
    const PolyMatrix m = mobius_matrix(spec);
    const VarId q = VarTable::global().y(1, 0);
    for (int i = 0; i <= r; ++i) {
        for (int j = 0; j <= r; ++j) {
            LaurentPoly expect_z;
            LaurentPoly expect_m;
            if (i <= j) {
                expect_z = y_binomial(j, i, q);
                const int d = j - i;
                expect_m = expect_z.times_monomial(Monomial::var(q, d * (d - 1) / 2));
                if (d % 2 != 0) expect_m = -expect_m;
            }
            if (z.at(i, j) != expect_z || m.at(i, j) != expect_m) return false;
        }
    }
    return is_identity(matmul(z, m));
}

bool verify_classical_igusa_reciprocity(int r) {
    if (r < 1) throw std::invalid_argument("classical Igusa reciprocity needs r >= 1");
    auto& table = VarTable::global();
    const PosetSpec spec{{0}, {r}};
    const ReciprocityCertificate cert = verify_reciprocity(spec, Interval::HalfOpen);
    if (!cert.equal) return false;

    const VarId y = table.generic("y");
    std::vector<VarId> xs;
    std::map<VarId, VarId> renaming{{table.y(1, 0), y}};
    for (int j = 1; j <= r; ++j) {
        xs.push_back(table.generic("x" + std::to_string(j)));
        renaming[x_var(Element{{ComponentElement{{j}}}})] = xs.back();
    }
    const GeneratingFunction igusa = classical_igusa(r, y, xs);
    const LaurentPoly K(Monomial::var(y, r * (r - 1) / 2), 1);
    const auto sides = cleared_sides(igusa.numerator, igusa.denominator, K, r, xs.back());
    return rename(cert.lhs, renaming) == sides.lhs && rename(cert.rhs, renaming) == sides.rhs &&
           sides.lhs == sides.rhs;
}

bool verify_generalized_igusa_reciprocity(const std::vector<int>& r) {
    auto& table = VarTable::global();
    const PosetSpec spec{std::vector<int>(r.size(), 0), r};
    const ReciprocityCertificate cert = verify_reciprocity(spec, Interval::HalfOpen);
    if (!cert.equal) return false;

    std::map<VarId, VarId> renaming;
    std::vector<VarId> ys;
    std::vector<Monomial::Entry> k;
    int N = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        ys.push_back(table.generic("y" + std::to_string(i + 1)));
        renaming[table.y(static_cast<int>(i) + 1, 0)] = ys.back();
        k.emplace_back(ys.back(), r[i] * (r[i] - 1) / 2);
        N += r[i];
    }
    auto x_name = [](const std::vector<int>& v) {
        std::string name = "x";
        for (int c : v) name += "_" + std::to_string(c);
        return name;
    };
    auto x_of = [&](const std::vector<int>& v) {
        Element e;
        for (int c : v) e.parts.push_back(ComponentElement{{c}});
        const VarId generic = table.generic(x_name(v));
        renaming[x_var(e)] = generic;
        return generic;
    };
    const GeneratingFunction gen = generalized_igusa(r, ys, x_of);
    const LaurentPoly K(Monomial::from_entries(std::move(k)), 1);
    const auto sides = cleared_sides(gen.numerator, gen.denominator, K, N, table.generic(x_name(r)));
    return rename(cert.lhs, renaming) == sides.lhs && rename(cert.rhs, renaming) == sides.rhs &&
           sides.lhs == sides.rhs;
}

}  // namespace hlskit
