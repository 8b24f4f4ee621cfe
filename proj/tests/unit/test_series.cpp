#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "hlskit/series.hpp"
#include "hlskit/weight.hpp"
#include "oracles.hpp"

using namespace hlskit;

#ifndef HLSKIT_GOLDEN_DIR
#error "HLSKIT_GOLDEN_DIR must be defined"
#endif

namespace {

std::map<std::string, std::string> read_golden(const std::string& name) {
    std::ifstream in(std::string(HLSKIT_GOLDEN_DIR) + "/" + name);
    std::map<std::string, std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(": ");
        fields[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return fields;
}

std::set<VarId> denominator_of(const std::string& list) {
    std::set<VarId> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto b = name.find_first_not_of(' ');
        out.insert(VarTable::global().by_name(name.substr(b)));
    }
    return out;
}

}  // namespace

TEST(Series, PublishedExample) {
    const auto golden = read_golden("hls_1_2.txt");
    ASSERT_TRUE(golden.contains("numerator"));
    const SeriesContext ctx(PosetSpec{{1}, {2}});
    const HlsRational f = hls(ctx);
    EXPECT_EQ(f.numerator, parse_poly(golden.at("numerator")));
    EXPECT_EQ(f.numerator.size(), 12U);
    EXPECT_EQ(std::set<VarId>(f.denominator_vars.begin(), f.denominator_vars.end()),
              denominator_of(golden.at("denominator")));
    EXPECT_EQ(f.stats.chains, 32U);
}

TEST(Series, TermCountTwoTwo) {
    const SeriesContext ctx(PosetSpec{{2}, {2}});
    const HlsRational f = hls(ctx);
    EXPECT_EQ(f.numerator.size(), 1412U);
    EXPECT_EQ(f.denominator_vars.size(), 11U);
}

TEST(Series, NumeratorMatchesLiteralAssembly) {
    for (const PosetSpec& s : {PosetSpec{{1}, {1}}, PosetSpec{{2}, {1}}, PosetSpec{{0}, {3}}, PosetSpec{{1, 1}, {1, 0}}}) {
        const SeriesContext ctx(s);
        EXPECT_EQ(hls(ctx).numerator, oracle::numerator_literal(ctx, Interval::HalfOpen)) << s.to_string();
        EXPECT_EQ(hls_modified(ctx).numerator, oracle::numerator_literal(ctx, Interval::Open)) << s.to_string();
    }
}

TEST(Series, TrivialSpecs) {
    const SeriesContext zero(PosetSpec{{0}, {0}});
    const HlsRational f = hls(zero);
    EXPECT_EQ(f.numerator, LaurentPoly(1));
    EXPECT_TRUE(f.denominator_vars.empty());
    EXPECT_THROW(relation_check(zero), DegenerateSpec);

    // P_{0,1}: HLS = 1/(1 - X{0})
    const SeriesContext one(PosetSpec{{0}, {1}});
    EXPECT_EQ(hls(one).numerator, LaurentPoly(1));
    EXPECT_EQ(hls(one).denominator_vars.size(), 1U);
}

TEST(Series, RelationBetweenSeries) {
    for (const PosetSpec& s : {PosetSpec{{1}, {2}}, PosetSpec{{2}, {2}}, PosetSpec{{0}, {3}}, PosetSpec{{1, 0}, {0, 2}}}) {
        const SeriesContext ctx(s);
        EXPECT_TRUE(relation_check(ctx)) << s.to_string();
    }
}

TEST(Series, ExpansionsAgree) {
    for (const PosetSpec& s : {PosetSpec{{1}, {2}}, PosetSpec{{2}, {1}}, PosetSpec{{1}, {1}}}) {
        const SeriesContext ctx(s);
        const auto direct = expand_multichain(ctx, 4);
        EXPECT_EQ(direct, expand_rational(hls(ctx).as_generating_function(), 4)) << s.to_string();
        EXPECT_FALSE(direct.coefficients.empty());
    }
}

TEST(Series, ExpansionCoefficientByHand) {
    // P_{0,1}: HLS = 1/(1 - X), every coefficient is 1.
    const SeriesContext ctx(PosetSpec{{0}, {1}});
    const auto s = expand_multichain(ctx, 3);
    EXPECT_EQ(s.coefficients.size(), 4U);
    for (const auto& [m, c] : s.coefficients) EXPECT_EQ(c, LaurentPoly(1));
}

TEST(Series, SubstitutionExpansion) {
    // 1/(1 - X{0}) with X{0} -> t expands to 1 + t + t^2.
    const SeriesContext ctx(PosetSpec{{0}, {1}});
    const VarId t = VarTable::global().generic("t");
    const auto f = hls(ctx).as_generating_function();
    const auto sub = substitute(f, {{ctx.x(1), LaurentPoly::var(t)}});
    EXPECT_EQ(sub.expand_in(t, 2), parse_poly("1 + t + t^2"));
    EXPECT_THROW(substitute(f, {{ctx.x(1), LaurentPoly(1)}}), std::domain_error);
}

TEST(Series, ClassicalIgusaIsHlsWithoutPositiveEntries) {
    for (int r = 1; r <= 3; ++r) {
        const SeriesContext ctx(PosetSpec{{0}, {r}});
        const HlsRational f = hls(ctx);
        std::vector<VarId> xs;
        for (int j = 1; j <= r; ++j) xs.push_back(ctx.x(static_cast<std::size_t>(j)));
        const auto igusa = classical_igusa(r, ctx.ys().y0(0), xs);
        EXPECT_TRUE(igusa.same_as(f.as_generating_function())) << r;
    }
}

TEST(Series, GeneralizedIgusa) {
    for (const std::vector<int>& r : {std::vector<int>{2}, std::vector<int>{1, 2}, std::vector<int>{2, 2}}) {
        const PosetSpec spec{std::vector<int>(r.size(), 0), r};
        const SeriesContext ctx(spec);
        std::vector<VarId> ys;
        for (std::size_t i = 0; i < r.size(); ++i) ys.push_back(ctx.ys().y0(static_cast<int>(i)));
        const auto g = generalized_igusa(r, ys, [&](const std::vector<int>& v) {
            Element e;
            for (int c : v) e.parts.push_back(ComponentElement{{c}});
            return x_var(e);
        });
        EXPECT_TRUE(g.same_as(hls(ctx).as_generating_function())) << spec.to_string();
    }
}

TEST(Series, MvHlsAgainstHls) {
    auto& table = VarTable::global();
    const VarId y = table.generic("Y");
    for (int n = 1; n <= 3; ++n) {
        const SeriesContext ctx(PosetSpec{{n}, {0}});
        auto x_of = [&](unsigned mask) {
            ComponentElement e = empty_component(n);
            for (int k = 1; k <= n; ++k) e.counts[k] = static_cast<int>((mask >> (k - 1)) & 1U);
            return x_var(Element{{e}});
        };
        const auto mv = mv_hls(n, y, x_of);
        std::map<VarId, LaurentPoly> images;
        for (VarId v : ctx.ys().all()) images[v] = LaurentPoly::var(y);
        const auto f = hls(ctx).as_generating_function();
        const GeneratingFunction specialized{substitute(f.numerator, images), f.denominator};
        EXPECT_TRUE(mv.same_as(specialized)) << n;
    }
}

TEST(Series, WeakOrderSmall) {
    // g = 1: chains are {} and {{1}}; Num = (1 - X) + X = 1.
    const VarId x = VarTable::global().generic("w1");
    const auto f = weak_order_igusa(1, [&](unsigned) { return x; });
    EXPECT_EQ(f.numerator, LaurentPoly(1));
    // g = 2 by hand: the six chains sum to 1 - X{1} X{2}.
    auto& t = VarTable::global();
    const auto g2 = weak_order_igusa(2, [&](unsigned m) { return t.generic("w2_" + std::to_string(m)); });
    EXPECT_EQ(g2.numerator, parse_poly("1 - w2_1*w2_2"));
}
