#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hlskit/laurent.hpp"
#include "hlskit/poset.hpp"

namespace hlskit {

/// Terms in canonical order, each {"coeff": decimal string, "monomial": {name: exponent}}.
nlohmann::json poly_json(const LaurentPoly& p, const VarTable& table = VarTable::global());
/// {"n": [...], "r": [...]}
nlohmann::json spec_json(const PosetSpec& spec);
/// "(1 - X{1})*(1 - X{0})"; "1" when empty.
std::string denominator_text(const std::vector<VarId>& vars, const VarTable& table = VarTable::global());
/// Terms of p sorted by canonical monomial order.
std::vector<LaurentPoly::Term> canonical_terms(const LaurentPoly& p, const VarTable& table = VarTable::global());

}  // namespace hlskit
