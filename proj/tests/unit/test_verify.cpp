#include <gtest/gtest.h>

#include <cstdlib>

#include "hlskit/verify.hpp"
#include "hlskit/weight.hpp"
#include "hlskit/yanalog.hpp"
#include "oracles.hpp"

using namespace hlskit;

namespace {
LaurentPoly P(const char* text) { return parse_poly(text); }
}  // namespace

TEST(Verify, QPascalThreeByThree) {
    const PolyMatrix z = zeta_matrix(PosetSpec{{0}, {2}});
    const PolyMatrix m = mobius_matrix(PosetSpec{{0}, {2}});
    ASSERT_EQ(z.dim(), 3U);
    const char* zx[3][3] = {{"1", "1", "1"}, {"0", "1", "1 + Y[1,0]"}, {"0", "0", "1"}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) EXPECT_EQ(z.at(i, j), P(zx[i][j])) << i << j;
    }
    EXPECT_EQ(m.at(0, 2), P("Y[1,0]"));
    EXPECT_EQ(m.at(1, 2), P("-1 - Y[1,0]"));
    EXPECT_EQ(m.at(0, 1), LaurentPoly(-1));
    for (int r = 0; r <= 5; ++r) EXPECT_TRUE(verify_q_pascal(r)) << r;
}

TEST(Verify, MobiusIsInverse) {
    for (const PosetSpec& s : {PosetSpec{{1}, {1}}, PosetSpec{{1}, {2}}, PosetSpec{{2}, {1}}, PosetSpec{{0}, {4}},
                               PosetSpec{{2}, {2}}, PosetSpec{{3}, {1}}}) {
        const SeriesContext ctx(s);
        const PolyMatrix z = zeta_matrix(ctx);
        const PolyMatrix m = mobius_matrix(ctx);
        EXPECT_TRUE(is_identity(matmul(z, m))) << s.to_string();
        EXPECT_TRUE(is_identity(matmul(m, z))) << s.to_string();
        EXPECT_EQ(m, oracle::unitriangular_inverse(z)) << s.to_string();
    }
}

TEST(Verify, KroneckerStructure) {
    const PosetSpec a{{1}, {1}};
    const PosetSpec b{{1}, {0}};
    const PosetSpec ab{{1, 1}, {1, 0}};
    EXPECT_EQ(zeta_matrix(ab), kron(zeta_matrix(a), zeta_matrix(b)));
    EXPECT_EQ(mobius_matrix(ab), kron(mobius_matrix(a), mobius_matrix(b)));
    EXPECT_TRUE(is_identity(matmul(kron(zeta_matrix(a), zeta_matrix(b)), kron(mobius_matrix(a), mobius_matrix(b)))));
    const auto id = PolyMatrix::identity(enumerate_elements(a));
    const auto id2 = PolyMatrix::identity(enumerate_elements(b));
    EXPECT_TRUE(is_identity(kron(id, id2)));
}

TEST(Verify, KroneckerInverseTwoByTwo) {
    PolyMatrix a = PolyMatrix::identity(enumerate_elements(PosetSpec{{0}, {1}}));
    a.at(0, 1) = P("q + 1");
    PolyMatrix ai = PolyMatrix::identity(a.index);
    ai.at(0, 1) = P("-q - 1");
    PolyMatrix b = PolyMatrix::identity(a.index);
    b.at(0, 1) = P("a^-1");
    PolyMatrix bi = PolyMatrix::identity(a.index);
    bi.at(0, 1) = P("-a^-1");
    EXPECT_TRUE(is_identity(matmul(kron(a, b), kron(ai, bi))));
}

TEST(Verify, MatmulIdentityAndMismatch) {
    const PolyMatrix z = zeta_matrix(PosetSpec{{1}, {1}});
    EXPECT_EQ(matmul(PolyMatrix::identity(z.index), z), z);
    EXPECT_THROW(matmul(z, zeta_matrix(PosetSpec{{0}, {3}})), std::invalid_argument);
}

TEST(Verify, MobiusViaChains) {
    for (const PosetSpec& s : {PosetSpec{{2}, {1}}, PosetSpec{{1}, {2}}}) {
        const SeriesContext ctx(s);
        const PolyMatrix m = mobius_matrix(ctx);
        for (std::size_t a = 0; a < m.dim(); ++a) {
            for (std::size_t b = 0; b < m.dim(); ++b) {
                if (ctx.poset().leq(a, b)) {
                    EXPECT_EQ(mobius_via_chains(ctx, a, b), m.at(a, b));
                } else {
                    EXPECT_THROW(mobius_via_chains(ctx, a, b), std::invalid_argument);
                }
            }
        }
    }
}

TEST(Verify, ClassicalMobiusAtOne) {
    // With r = 0 and Y = 1 a weight is 1 exactly when a is contained in b,
    // so the chain formula gives the Mobius function of the containment order.
    for (int n = 1; n <= 3; ++n) {
        const SeriesContext ctx(PosetSpec{{n}, {0}});
        const auto yall = ctx.ys().all();
        const auto& p = ctx.poset();
        auto contained = [&](std::size_t a, std::size_t b) {
            for (int k = 1; k <= n; ++k) {
                if (p.element(a).parts[0].counts[k] > p.element(b).parts[0].counts[k]) return false;
            }
            return true;
        };
        for (std::size_t a = 0; a < p.size(); ++a) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                if (!p.leq(a, b)) continue;
                EXPECT_EQ(eval_at_one(mobius_via_chains(ctx, a, b), yall),
                          LaurentPoly(oracle::classical_mobius(p.size(), contained, a, b)));
            }
        }
    }
    // On P_{0,r} the Y = 1 weights are binomials, and M is the inverse Pascal matrix.
    const SeriesContext chain(PosetSpec{{0}, {4}});
    const auto yall = chain.ys().all();
    for (int a = 0; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) {
            const Integer c = binomial(b, a);
            EXPECT_EQ(eval_at_one(mobius_via_chains(chain, a, b), yall), LaurentPoly((b - a) % 2 ? Integer(-c) : c));
        }
    }
}

TEST(Verify, BlockStructure) {
    for (int n = 0; n <= 2; ++n) {
        for (int r = 0; r <= 2; ++r) EXPECT_TRUE(verify_block_structure(n, r)) << n << " " << r;
    }
}

TEST(Verify, KAndN) {
    const KN kn = K_and_N(PosetSpec{{1}, {2}});
    EXPECT_EQ(kn.N, 3);
    EXPECT_EQ(kn.K, P("Y[1,0]*Y[1,1]^2"));
    EXPECT_EQ(K_and_N(PosetSpec{{0, 0}, {3, 2}}).K, P("Y[1,0]^3*Y[2,0]"));
    // exponent of Y_{i,j} is Delta_j(bottom, top)
    const PosetSpec s{{3}, {2}};
    const KN k3 = K_and_N(s);
    const auto b = bottom_element(s).parts[0];
    const auto t = top_element(s).parts[0];
    for (int j = 0; j <= 3; ++j) {
        EXPECT_EQ(k3.K.terms()[0].first.exponent(VarTable::global().y(1, j)), delta(b, t, j));
    }
}

TEST(Verify, ReciprocitySmallGrid) {
    for (int n = 0; n <= 3; ++n) {
        for (int r = 0; n + r <= 3; ++r) {
            for (auto kind : {Interval::HalfOpen, Interval::Open}) {
                const auto cert = verify_reciprocity(PosetSpec{{n}, {r}}, kind);
                if (n == 0 && r == 0) {
                    EXPECT_TRUE(cert.vacuous);
                } else {
                    EXPECT_TRUE(cert.equal) << n << " " << r;
                    EXPECT_EQ(to_string(cert.lhs), to_string(cert.rhs));
                }
            }
        }
    }
}

TEST(Verify, ReciprocityDetectsBrokenSign) {
    const auto cert = verify_reciprocity(PosetSpec{{1}, {2}}, Interval::HalfOpen);
    ASSERT_TRUE(cert.equal);
    EXPECT_NE(cert.lhs, -cert.rhs);
}

TEST(Verify, OrderComplex) {
    for (const PosetSpec& s : {PosetSpec{{1}, {1}}, PosetSpec{{0}, {3}}, PosetSpec{{2}, {1}}}) {
        const auto report = verify_order_complex(s);
        EXPECT_TRUE(report.pass()) << s.to_string();
        EXPECT_EQ(report.subsets, std::size_t{1} << Poset(s).interval(Interval::Open).size());
    }
    EXPECT_THROW(verify_order_complex(PosetSpec{{0}, {0}}), DegenerateSpec);
    Caps tight;
    tight.max_subsets = 8;
    EXPECT_THROW(verify_order_complex(PosetSpec{{2}, {1}}, tight), CapExceeded);
}

TEST(Verify, IgusaCorollaries) {
    for (int r = 1; r <= 4; ++r) EXPECT_TRUE(verify_classical_igusa_reciprocity(r)) << r;
    EXPECT_TRUE(verify_generalized_igusa_reciprocity({1, 2}));
    EXPECT_TRUE(verify_generalized_igusa_reciprocity({2, 2}));
}

TEST(Verify, ThreadCountDoesNotChangeResults) {
    const PosetSpec s{{2}, {2}};
    setenv("HLSKIT_THREADS", "1", 1);
    const auto one = matmul(zeta_matrix(s), mobius_matrix(s));
    const auto r1 = verify_order_complex(s);
    setenv("HLSKIT_THREADS", "4", 1);
    EXPECT_EQ(worker_count(), 4U);
    const auto four = matmul(zeta_matrix(s), mobius_matrix(s));
    const auto r4 = verify_order_complex(s);
    unsetenv("HLSKIT_THREADS");
    EXPECT_EQ(one, four);
    EXPECT_EQ(r1.failures, r4.failures);
    EXPECT_TRUE(r4.pass());
}

TEST(Verify, ParallelForPropagatesErrors) {
    setenv("HLSKIT_THREADS", "3", 1);
    EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                     if (i == 5) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
    unsetenv("HLSKIT_THREADS");
}
