#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlskit {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = boost::multiprecision::cpp_int;

using VarId = std::uint32_t;

/// Variable families, listed in canonical printing order.
enum class VarFamily : std::uint8_t { Y = 0, X = 1, Generic = 2 };

struct VarKey {
    VarFamily family = VarFamily::Generic;
    std::vector<int> sort_key;
    std::string name;
};

/// Interning table mapping display names to dense VarIds.
///
/// Names follow three shapes: `Y[i,j]` for the Y family, `X{...}` for the
/// X family (the braces hold a rendered poset element), and bare identifiers
/// such as `q` for everything else. Interning is thread-safe; a VarId, once
/// handed out, never changes meaning.
class VarTable {
public:
    static VarTable& global();

    VarId y(int component, int index);
    VarId generic(std::string_view name);
    VarId intern(VarFamily family, std::vector<int> sort_key, std::string name);

    /// Interns any well-formed display name, deriving the family and sort key.
    VarId by_name(std::string_view name);
    std::optional<VarId> find(std::string_view name) const;

    std::string name(VarId id) const;
    VarKey key(VarId id) const;
    std::size_t size() const;

    /// Canonical variable order: (family, sort key, name).
    bool precedes(VarId a, VarId b) const;

private:
    mutable std::shared_mutex mutex_;
    std::deque<VarKey> keys_;
    std::unordered_map<std::string, VarId> ids_;
};

/// Sort key of an X-variable whose braces hold `body` (components joined by
/// `|`, each a multiset such as `0^2 1 3` or `-`).
std::vector<int> x_sort_key(std::string_view body);

/// A Laurent monomial: sorted (VarId, exponent) pairs, no zero exponents.
class Monomial {
public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);
    static Monomial from_entries(std::vector<Entry> entries);

    std::span<const Entry> entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int exponent(VarId v) const;
    long total_degree() const;

    Monomial operator*(const Monomial& other) const;
    Monomial inverse() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse multivariate Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted by the internal VarId order with no zero
/// coefficients, so structural equality is mathematical equality. Values are
/// immutable once built; every operation returns a new polynomial.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(Integer c);
    LaurentPoly(Monomial m, Integer c);

    static LaurentPoly var(VarId v, int exp = 1);
    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the monomial 1.
    Integer constant_term() const;
    Integer coefficient(const Monomial& m) const;
    /// Variables occurring with a nonzero exponent, in VarId order.
    std::vector<VarId> variables() const;
    bool has_negative_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly scaled(const Integer& c) const;
    LaurentPoly times_monomial(const Monomial& m) const;
    LaurentPoly pow(unsigned e) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Negates every exponent of the selected variables.
LaurentPoly invert_vars(const LaurentPoly& p, std::span<const VarId> vars);
/// Negates every exponent of every variable.
LaurentPoly invert_all(const LaurentPoly& p);
/// Substitutes 1 for each selected variable.
LaurentPoly eval_at_one(const LaurentPoly& p, std::span<const VarId> vars);
/// Replaces variables by polynomials (negative exponents need invertible
/// images, i.e. signed monomials). Unmapped variables are kept.
LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& images);
/// Renames variables one-for-one.
LaurentPoly rename(const LaurentPoly& p, const std::map<VarId, VarId>& renaming);

class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact quotient p / d by long division under graded order; throws
/// InexactDivision if the remainder is nonzero.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// Canonical-order comparison used for printing (graded, then lexicographic
/// in canonical variable order).
bool canonical_less(const Monomial& a, const Monomial& b, const VarTable& table);

std::string to_string(const LaurentPoly& p, const VarTable& table = VarTable::global());
std::string to_string(const Monomial& m, const VarTable& table = VarTable::global());
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses the canonical text format (any term order, whitespace tolerant).
LaurentPoly parse_poly(std::string_view text, VarTable& table = VarTable::global());

}  // namespace hlskit
