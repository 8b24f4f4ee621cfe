#include "hlskit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hlskit/render.hpp"
#include "hlskit/series.hpp"
#include "hlskit/verify.hpp"
#include "hlskit/weight.hpp"

namespace hlskit {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::vector<int> n;
    std::vector<int> r;
    bool modified = false;
    int max_degree = 3;
    std::string format = "text";
    std::size_t max_elements = Caps{}.max_elements;
    std::size_t max_chains = Caps{}.max_chains;
    std::size_t max_subsets = Caps{}.max_subsets;
    bool stats_only = false;
    bool no_timing = false;
    std::string chain;
    std::string kind;
    std::string check;
    std::string method = "multichain";
    bool dual = false;

    Caps caps() const { return {max_elements, max_chains, max_subsets}; }
    PosetSpec spec() const {
        if (n.empty() || n.size() != r.size()) throw CLI::ValidationError("--n/--r", "need equal nonempty lists");
        PosetSpec s{n, r};
        s.validate();
        return s;
    }
};

/// Bad user input detected after flag parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void add_spec(CLI::App* sub, Options& o, bool required = true) {
    auto* n = sub->add_option("--n", o.n, "comma-separated n_1,...,n_g")->delimiter(',');
    auto* r = sub->add_option("--r", o.r, "comma-separated r_1,...,r_g")->delimiter(',');
    if (required) {
        n->required();
        r->required();
    }
}

void add_caps(CLI::App* sub, Options& o) {
    const auto positive = CLI::PositiveNumber;
    sub->add_option("--max-elements", o.max_elements, "element cap")->check(positive);
    sub->add_option("--max-chains", o.max_chains, "chain cap")->check(positive);
    sub->add_option("--max-subsets", o.max_subsets, "subset cap")->check(positive);
    sub->add_flag("--no-timing", o.no_timing, "omit timings");
}

void add_format(CLI::App* sub, Options& o, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void put_millis(json& j, const Options& o, double ms) {
    if (!o.no_timing) j["millis"] = ms;
}

std::vector<std::pair<Monomial, LaurentPoly>> sorted_series(const TruncatedSeries& s) {
    std::vector<std::pair<Monomial, LaurentPoly>> rows(s.coefficients.begin(), s.coefficients.end());
    const auto& table = VarTable::global();
    std::sort(rows.begin(), rows.end(),
              [&](const auto& a, const auto& b) { return canonical_less(a.first, b.first, table); });
    return rows;
}

// ---------------------------------------------------------------------------

int cmd_compute(const Options& o, std::ostream& out) {
    const SeriesContext ctx(o.spec(), o.caps());
    const HlsRational f = o.modified ? hls_modified(ctx) : hls(ctx);
    const std::size_t terms = f.numerator.size();
    if (o.format == "json") {
        json stats{{"chains", f.stats.chains}, {"terms", terms}, {"denom_factors", f.denominator_vars.size()}};
        put_millis(stats, o, f.stats.millis);
        json j{{"spec", spec_json(f.spec)}, {"series", o.modified ? "hls_modified" : "hls"}, {"stats", stats}};
        if (!o.stats_only) {
            j["numerator"] = to_string(f.numerator);
            j["numerator_terms"] = poly_json(f.numerator);
            json den = json::array();
            for (VarId x : f.denominator_vars) den.push_back(VarTable::global().name(x));
            j["denominator"] = den;
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "spec: " << f.spec.to_string() << '\n';
    out << "series: " << (o.modified ? "hls_modified" : "hls") << '\n';
    if (!o.stats_only) {
        out << "numerator: " << to_string(f.numerator) << '\n';
        out << "denominator: " << denominator_text(f.denominator_vars) << '\n';
    }
    out << "terms: " << terms << '\n';
    out << "denom_factors: " << f.denominator_vars.size() << '\n';
    out << "chains: " << f.stats.chains << '\n';
    if (!o.no_timing) out << "millis: " << f.stats.millis << '\n';
    return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
    if (o.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
    const SeriesContext ctx(o.spec(), o.caps());
    const auto start = Clock::now();
    TruncatedSeries s;
    if (o.method == "rational") {
        s = expand_rational(hls(ctx).as_generating_function(), o.max_degree);
    } else {
        s = expand_multichain(ctx, o.max_degree);
    }
    bool agree = true;
    if (o.dual) {
        const TruncatedSeries other = o.method == "rational" ? expand_multichain(ctx, o.max_degree)
                                                             : expand_rational(hls(ctx).as_generating_function(),
                                                                               o.max_degree);
        agree = other == s;
    }
    const double ms = millis_since(start);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [m, c] : sorted_series(s)) {
            rows.push_back({{"monomial", to_string(m)}, {"coefficient", to_string(c)}});
        }
        json j{{"spec", spec_json(ctx.spec())}, {"max_degree", o.max_degree}, {"method", o.method}, {"rows", rows}};
        if (o.dual) j["dual_path_agree"] = agree;
        put_millis(j, o, ms);
        out << j.dump(2) << '\n';
    } else {
        for (const auto& [m, c] : sorted_series(s)) out << to_string(m) << ": " << to_string(c) << '\n';
        if (o.dual) out << "dual_path_agree: " << (agree ? "true" : "false") << '\n';
    }
    return agree ? kExitOk : kExitFailure;
}

int cmd_project(const Options& o, std::ostream& out) {
    const SeriesContext ctx(o.spec(), o.caps());
    const auto& poset = ctx.poset();
    std::vector<std::size_t> chain;
    for (const auto& piece : split_chain_literal(o.chain)) {
        chain.push_back(poset.index_of(parse_element(piece, poset.spec())));
    }
    LaurentPoly product(1);
    json comps = json::array();
    std::ostringstream text;
    for (int i = 0; i < poset.spec().g(); ++i) {
        const SkewTableau t = project(chain, poset, i);
        const LaurentPoly th = theta_tableau(t, ctx.ys().y0(i));
        const LaurentPoly ph = phi_tableau(t, ctx.ys().positive(i));
        product *= th * ph;
        json legs = json::array();
        for (const auto& cell : leg_plus_cells(t)) {
            legs.push_back({{"row", cell.row}, {"col", cell.col}, {"leg", cell.members}});
        }
        comps.push_back({{"component", i + 1},
                         {"tableau", json::parse(t.json())},
                         {"leg_plus", legs},
                         {"theta", to_string(th)},
                         {"phi", to_string(ph)}});
        text << "component " << (i + 1) << ":\n" << t.pretty();
        text << "L+:";
        for (const auto& cell : leg_plus_cells(t)) text << " (" << cell.row << "," << cell.col << ")";
        text << "\ntheta: " << to_string(th) << "\nphi: " << to_string(ph) << '\n';
    }
    const LaurentPoly w = chain_weight(chain, ctx.weights());
    if (o.format == "json") {
        out << json{{"spec", spec_json(poset.spec())},
                    {"components", comps},
                    {"chain_weight", to_string(w)},
                    {"tableau_weight", to_string(product)}}
                   .dump(2)
            << '\n';
    } else {
        out << text.str() << "chain_weight: " << to_string(w) << "\ntableau_weight: " << to_string(product)
            << '\n';
    }
    return w == product ? kExitOk : kExitFailure;
}

int cmd_hasse(const Options& o, std::ostream& out) {
    const Poset poset(o.spec(), o.caps());
    if (o.format == "dot") {
        out << poset.to_dot();
        return kExitOk;
    }
    const auto covers = poset.cover_relations();
    if (o.format == "json") {
        json nodes = json::array();
        for (const auto& e : poset.elements()) nodes.push_back(render(e));
        json edges = json::array();
        for (const auto& [a, b] : covers) edges.push_back({a, b});
        out << json{{"spec", spec_json(poset.spec())}, {"nodes", nodes}, {"edges", edges}}.dump(2) << '\n';
        return kExitOk;
    }
    out << "nodes: " << poset.size() << '\n';
    for (const auto& e : poset.elements()) out << render(e) << '\n';
    out << "edges: " << covers.size() << '\n';
    for (const auto& [a, b] : covers) out << render(poset.element(a)) << " < " << render(poset.element(b)) << '\n';
    return kExitOk;
}

int single(const std::vector<int>& v, const char* flag) {
    if (v.size() != 1 || v[0] < 0) throw UsageError(std::string(flag) + " must be one nonnegative integer");
    return v[0];
}

int cmd_specialize(const Options& o, std::ostream& out) {
    auto& table = VarTable::global();
    GeneratingFunction f;
    auto mask_name = [](unsigned mask) {
        std::string s = "X{";
        bool first = true;
        for (int k = 1; mask >> (k - 1); ++k) {
            if (mask & (1U << (k - 1))) {
                s += (first ? "" : " ") + std::to_string(k);
                first = false;
            }
        }
        return s + "}";
    };
    auto x_of_mask = [&](unsigned mask) { return table.by_name(mask_name(mask)); };
    if (o.kind == "classical-igusa") {
        const int r = single(o.r, "--r");
        std::vector<VarId> xs;
        for (int j = 1; j <= r; ++j) xs.push_back(table.generic("X" + std::to_string(j)));
        f = classical_igusa(r, table.generic("Y"), xs);
    } else if (o.kind == "weak-order-igusa") {
        f = weak_order_igusa(single(o.n, "--n"), x_of_mask);
    } else if (o.kind == "mv-hls") {
        f = mv_hls(single(o.n, "--n"), table.generic("Y"), x_of_mask);
    } else {
        if (o.r.empty()) throw UsageError("--r is required");
        std::vector<VarId> ys;
        for (std::size_t i = 0; i < o.r.size(); ++i) ys.push_back(table.generic("Y" + std::to_string(i + 1)));
        f = generalized_igusa(o.r, ys, [&](const std::vector<int>& v) {
            Element e;
            for (int c : v) e.parts.push_back(ComponentElement{{c}});
            return x_var(e);
        });
    }
    if (o.format == "json") {
        json den = json::array();
        for (VarId x : f.denominator) den.push_back(table.name(x));
        out << json{{"kind", o.kind},
                    {"numerator", to_string(f.numerator)},
                    {"numerator_terms", poly_json(f.numerator)},
                    {"denominator", den}}
                   .dump(2)
            << '\n';
    } else {
        out << "kind: " << o.kind << "\nnumerator: " << to_string(f.numerator)
            << "\ndenominator: " << denominator_text(f.denominator) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const SeriesContext ctx(o.spec(), o.caps());
    const auto start = Clock::now();
    json verdict{{"check", o.check}, {"spec", spec_json(ctx.spec())}};
    bool pass = false;
    bool vacuous = false;
    if (o.check == "reciprocity") {
        const auto kind = o.modified ? Interval::Open : Interval::HalfOpen;
        const ReciprocityCertificate cert = verify_reciprocity(ctx, kind);
        verdict["series"] = o.modified ? "hls_modified" : "hls";
        verdict["N"] = cert.N;
        verdict["K"] = to_string(cert.K);
        vacuous = cert.vacuous;
        pass = cert.equal;
        if (!pass && !vacuous) {
            verdict["counterexample"] = {{"lhs_minus_rhs", to_string(cert.lhs - cert.rhs)}};
        }
    } else if (o.check == "order-complex") {
        if (ctx.spec().degenerate()) {
            vacuous = true;
        } else {
            const OrderComplexReport report = verify_order_complex(ctx);
            verdict["subsets"] = report.subsets;
            pass = report.pass();
            if (!pass) {
                json failures = json::array();
                for (const auto& s : report.failures) {
                    json set = json::array();
                    for (auto c : s) set.push_back(render(ctx.poset().element(c)));
                    failures.push_back(set);
                }
                verdict["counterexample"] = {{"failing_subsets", failures}};
            }
        }
    } else if (o.check == "zeta-mobius") {
        const PolyMatrix z = zeta_matrix(ctx);
        const PolyMatrix m = mobius_matrix(ctx);
        const PolyMatrix p = matmul(z, m);
        pass = true;
        for (std::size_t i = 0; i < p.dim() && pass; ++i) {
            for (std::size_t j = 0; j < p.dim(); ++j) {
                if (p.at(i, j) != LaurentPoly(i == j ? 1 : 0)) {
                    verdict["counterexample"] = {{"row", render(p.index[i])},
                                                 {"col", render(p.index[j])},
                                                 {"entry", to_string(p.at(i, j))}};
                    pass = false;
                    break;
                }
            }
        }
        verdict["dimension"] = p.dim();
    } else {
        if (ctx.spec().degenerate()) {
            vacuous = true;
        } else {
            pass = relation_check(ctx);
        }
    }
    if (vacuous) {
        verdict["pass"] = nullptr;
        verdict["status"] = "vacuous";
    } else {
        verdict["pass"] = pass;
        verdict["status"] = pass ? "pass" : "fail";
    }
    put_millis(verdict, o, millis_since(start));
    out << verdict.dump(2) << '\n';
    return vacuous || pass ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<std::string> split_chain_literal(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t stop = text.find('<', start);
        std::string piece = text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        const auto b = piece.find_first_not_of(" \t");
        const auto e = piece.find_last_not_of(" \t");
        if (b == std::string::npos) throw UsageError("empty element in chain literal '" + text + "'");
        out.push_back(piece.substr(b, e - b + 1));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Hall-Littlewood-Schubert series toolkit", "hlskit"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "numerator and denominator of HLS or HLS'");
    add_spec(compute, o);
    add_caps(compute, o);
    add_format(compute, o, {"text", "json"});
    compute->add_flag("--modified", o.modified, "open interval series HLS'");
    compute->add_flag("--stats-only", o.stats_only, "print only counts");

    auto* expand = app.add_subcommand("expand", "power series coefficients up to total X-degree");
    add_spec(expand, o);
    add_caps(expand, o);
    add_format(expand, o, {"text", "json"});
    expand->add_option("--max-degree", o.max_degree, "total X-degree bound");
    expand->add_option("--method", o.method, "multichain or rational")
        ->check(CLI::IsMember({"multichain", "rational"}));
    expand->add_flag("--dual", o.dual, "also run the other method and compare");

    auto* proj = app.add_subcommand("project", "projected tableaux of a multichain");
    add_spec(proj, o);
    add_caps(proj, o);
    add_format(proj, o, {"text", "json"});
    proj->add_option("--chain", o.chain, "multichain literal, e.g. '1|- < 0 1|0'")->required();

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram");
    add_spec(hasse, o);
    add_caps(hasse, o);
    add_format(hasse, o, {"text", "json", "dot"});

    auto* spec = app.add_subcommand("specialize", "Igusa-type specializations");
    add_spec(spec, o, false);
    add_caps(spec, o);
    add_format(spec, o, {"text", "json"});
    spec->add_option("kind", o.kind, "classical-igusa | weak-order-igusa | generalized-igusa | mv-hls")
        ->required()
        ->check(CLI::IsMember({"classical-igusa", "weak-order-igusa", "generalized-igusa", "mv-hls"}));

    auto* verify = app.add_subcommand("verify", "identity checks with a JSON verdict");
    add_spec(verify, o);
    add_caps(verify, o);
    add_format(verify, o, {"json", "text"});
    verify->add_option("check", o.check, "reciprocity | order-complex | zeta-mobius | relation")
        ->required()
        ->check(CLI::IsMember({"reciprocity", "order-complex", "zeta-mobius", "relation"}));
    verify->add_flag("--modified", o.modified, "check the open interval series");

    std::vector<const char*> argv{"hlskit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(o, out);
        if (*expand) return cmd_expand(o, out);
        if (*proj) return cmd_project(o, out);
        if (*hasse) return cmd_hasse(o, out);
        if (*spec) return cmd_specialize(o, out);
        return cmd_verify(o, out);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kExitCap;
    } catch (const CLI::Error& e) {
        err << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hlskit
