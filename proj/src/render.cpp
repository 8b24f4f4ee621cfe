#include "hlskit/render.hpp"

#include <algorithm>

namespace hlskit {

std::vector<LaurentPoly::Term> canonical_terms(const LaurentPoly& p, const VarTable& table) {
    std::vector<LaurentPoly::Term> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return canonical_less(a.first, b.first, table); });
    return terms;
}

nlohmann::json poly_json(const LaurentPoly& p, const VarTable& table) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : canonical_terms(p, table)) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& [v, e] : m.entries()) mono[table.name(v)] = e;
        out.push_back({{"coeff", c.str()}, {"monomial", mono}});
    }
    return out;
}

nlohmann::json spec_json(const PosetSpec& spec) { return {{"n", spec.n}, {"r", spec.r}}; }

std::string denominator_text(const std::vector<VarId>& vars, const VarTable& table) {
    if (vars.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += '*';
        out += "(1 - " + table.name(vars[i]) + ")";
    }
    return out;
}

}  // namespace hlskit
