#include "hlskit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace hlskit {

// ---------------------------------------------------------------------------
// VarTable

VarTable& VarTable::global() {
    static VarTable table;
    return table;
}

VarId VarTable::intern(VarFamily family, std::vector<int> sort_key, std::string name) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = ids_.find(name); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(name); it != ids_.end()) return it->second;
    const auto id = static_cast<VarId>(keys_.size());
    ids_.emplace(name, id);
    keys_.push_back(VarKey{family, std::move(sort_key), std::move(name)});
    return id;
}

VarId VarTable::y(int component, int index) {
    if (component < 1 || index < 0) throw std::invalid_argument("Y variable indices out of range");
    return intern(VarFamily::Y, {component, index},
                  "Y[" + std::to_string(component) + "," + std::to_string(index) + "]");
}

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("malformed integer '" + std::string(s) + "' in " + std::string(what));
    }
    return value;
}

}  // namespace

VarId VarTable::generic(std::string_view name) {
    if (!is_identifier(name)) throw ParseError("bad variable name '" + std::string(name) + "'");
    return intern(VarFamily::Generic, {}, std::string(name));
}

std::vector<int> x_sort_key(std::string_view body) {
    constexpr int width = 32;
    std::vector<int> key;
    std::size_t start = 0;
    while (true) {
        const auto bar = body.find('|', start);
        const auto part = body.substr(start, bar == std::string_view::npos ? body.npos : bar - start);
        std::vector<int> counts(width, 0);
        std::istringstream tokens{std::string(part)};
        std::string tok;
        bool any = false;
        while (tokens >> tok) {
            if (tok == "-") {
                if (any) throw ParseError("'-' mixed with entries in X{" + std::string(body) + "}");
                any = true;
                continue;
            }
            any = true;
            int entry = 0;
            int mult = 1;
            if (auto caret = tok.find('^'); caret != std::string::npos) {
                entry = parse_int(std::string_view(tok).substr(0, caret), "X variable");
                mult = parse_int(std::string_view(tok).substr(caret + 1), "X variable");
            } else {
                entry = parse_int(tok, "X variable");
            }
            if (entry < 0 || entry >= width || mult < 1) {
                throw ParseError("X variable entry out of range in X{" + std::string(body) + "}");
            }
            counts[entry] += mult;
        }
        if (!any) throw ParseError("empty component in X{" + std::string(body) + "}");
        key.insert(key.end(), counts.rbegin(), counts.rend());
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return key;
}

VarId VarTable::by_name(std::string_view name) {
    if (auto id = find(name)) return *id;
    if (name.starts_with("Y[") && name.ends_with("]")) {
        const auto inner = name.substr(2, name.size() - 3);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) throw ParseError("malformed Y variable " + std::string(name));
        return y(parse_int(inner.substr(0, comma), "Y variable"),
                 parse_int(inner.substr(comma + 1), "Y variable"));
    }
    if (name.starts_with("X{") && name.ends_with("}")) {
        return intern(VarFamily::X, x_sort_key(name.substr(2, name.size() - 3)), std::string(name));
    }
    return generic(name);
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
}

std::string VarTable::name(VarId id) const {
    std::shared_lock lock(mutex_);
    return keys_.at(id).name;
}

VarKey VarTable::key(VarId id) const {
    std::shared_lock lock(mutex_);
    return keys_.at(id);
}

std::size_t VarTable::size() const {
    std::shared_lock lock(mutex_);
    return keys_.size();
}

bool VarTable::precedes(VarId a, VarId b) const {
    std::shared_lock lock(mutex_);
    const auto& ka = keys_.at(a);
    const auto& kb = keys_.at(b);
    return std::tie(ka.family, ka.sort_key, ka.name) < std::tie(kb.family, kb.sort_key, kb.name);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp != 0) m.entries_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [v, e] : entries) {
        if (!m.entries_.empty() && m.entries_.back().first == v) {
            m.entries_.back().second += e;
        } else {
            m.entries_.emplace_back(v, e);
        }
    }
    std::erase_if(m.entries_, [](const Entry& x) { return x.second == 0; });
    return m;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, std::numeric_limits<int>::min()});
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

long Monomial::total_degree() const {
    long d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            if (int e = a->second + b->second; e != 0) out.entries_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out = *this;
    for (auto& [v, e] : out.entries_) e = -e;
    return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [v, e] : m.entries()) {
        h ^= (static_cast<std::size_t>(v) * 0x100000001b3ULL + static_cast<std::size_t>(e + 0x4000)) +
             0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
    if (c != 0) terms_.emplace_back(Monomial{}, std::move(c));
}

LaurentPoly::LaurentPoly(Monomial m, Integer c) {
    if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

LaurentPoly LaurentPoly::var(VarId v, int exp) { return LaurentPoly(Monomial::var(v, exp), 1); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Integer LaurentPoly::constant_term() const { return coefficient(Monomial{}); }

Integer LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : Integer(0);
}

std::vector<VarId> LaurentPoly::variables() const {
    std::vector<VarId> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.entries()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool LaurentPoly::has_negative_exponents() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) {
        return std::any_of(t.first.entries().begin(), t.first.entries().end(),
                           [](const Monomial::Entry& x) { return x.second < 0; });
    });
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.terms_.push_back(*b++);
        } else {
            Integer c = a->second + b->second;
            if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};
    if (o.is_constant()) return scaled(o.terms_[0].second);
    if (is_constant()) return o.scaled(terms_[0].second);
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) terms.emplace_back(m, std::move(c));
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly out;
    out.terms_ = std::move(terms);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
    if (c == 0) return {};
    LaurentPoly out = *this;
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
    if (m.is_one()) return *this;
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& [mm, c] : terms_) terms.emplace_back(mm * m, c);
    // Multiplying by a monomial is injective, but it can reorder terms.
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly out;
    out.terms_ = std::move(terms);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly invert_vars(const LaurentPoly& p, std::span<const VarId> vars) {
    std::vector<VarId> sel(vars.begin(), vars.end());
    std::sort(sel.begin(), sel.end());
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> entries(m.entries().begin(), m.entries().end());
        for (auto& [v, e] : entries) {
            if (std::binary_search(sel.begin(), sel.end(), v)) e = -e;
        }
        terms.emplace_back(Monomial::from_entries(std::move(entries)), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly invert_all(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m.inverse(), c);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly eval_at_one(const LaurentPoly& p, std::span<const VarId> vars) {
    std::vector<VarId> sel(vars.begin(), vars.end());
    std::sort(sel.begin(), sel.end());
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> kept;
        for (const auto& entry : m.entries()) {
            if (!std::binary_search(sel.begin(), sel.end(), entry.first)) kept.push_back(entry);
        }
        terms.emplace_back(Monomial::from_entries(std::move(kept)), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

namespace {

/// Inverse of a signed monomial image, or nullopt when not a unit.
std::optional<LaurentPoly> unit_inverse(const LaurentPoly& p) {
    if (p.size() != 1) return std::nullopt;
    const auto& [m, c] = p.terms()[0];
    if (c != 1 && c != -1) return std::nullopt;
    return LaurentPoly(m.inverse(), c);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& images) {
    // Cache powers per variable; chain sums repeat small exponents a lot.
    std::map<std::pair<VarId, int>, LaurentPoly> powers;
    auto power_of = [&](VarId v, int e) -> const LaurentPoly& {
        auto key = std::make_pair(v, e);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        const LaurentPoly& img = images.at(v);
        LaurentPoly value;
        if (e >= 0) {
            value = img.pow(static_cast<unsigned>(e));
        } else {
            auto inv = unit_inverse(img);
            if (!inv) throw std::domain_error("negative power of a non-unit substitution image");
            value = inv->pow(static_cast<unsigned>(-e));
        }
        return powers.emplace(key, std::move(value)).first->second;
    };
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> kept;
        LaurentPoly factor(c);
        for (const auto& [v, e] : m.entries()) {
            if (images.contains(v)) {
                factor *= power_of(v, e);
            } else {
                kept.emplace_back(v, e);
            }
        }
        out += factor.times_monomial(Monomial::from_entries(std::move(kept)));
    }
    return out;
}

LaurentPoly rename(const LaurentPoly& p, const std::map<VarId, VarId>& renaming) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> entries(m.entries().begin(), m.entries().end());
        for (auto& [v, e] : entries) {
            if (auto it = renaming.find(v); it != renaming.end()) v = it->second;
        }
        terms.emplace_back(Monomial::from_entries(std::move(entries)), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

/// Graded lexicographic comparison in VarId order; a monomial order.
int grlex_compare(const Monomial& a, const Monomial& b) {
    const long da = a.total_degree();
    const long db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto x = a.entries().begin();
    auto y = b.entries().begin();
    while (x != a.entries().end() || y != b.entries().end()) {
        int ex = 0;
        int ey = 0;
        if (y == b.entries().end() || (x != a.entries().end() && x->first < y->first)) {
            ex = (x++)->second;
        } else if (x == a.entries().end() || y->first < x->first) {
            ey = (y++)->second;
        } else {
            ex = (x++)->second;
            ey = (y++)->second;
        }
        if (ex != ey) return ex < ey ? -1 : 1;
    }
    return 0;
}

const LaurentPoly::Term& leading_term(const LaurentPoly& p) {
    const auto terms = p.terms();
    return *std::max_element(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return grlex_compare(a.first, b.first) < 0;
    });
}

/// Per-variable [min, max] exponent over the support of p (absent = 0).
std::map<VarId, std::pair<int, int>> exponent_box(const LaurentPoly& p, const std::vector<VarId>& vars) {
    std::map<VarId, std::pair<int, int>> box;
    for (VarId v : vars) {
        int lo = std::numeric_limits<int>::max();
        int hi = std::numeric_limits<int>::min();
        for (const auto& [m, c] : p.terms()) {
            const int e = m.exponent(v);
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        box[v] = {lo, hi};
    }
    return box;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    std::vector<VarId> vars = p.variables();
    const auto dvars = d.variables();
    vars.insert(vars.end(), dvars.begin(), dvars.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    // Any exact quotient has its exponents inside this box, which bounds the
    // loop when the division is not exact.
    const auto pbox = exponent_box(p, vars);
    const auto dbox = exponent_box(d, vars);

    const auto& [dm, dc] = leading_term(d);
    const Monomial dm_inv = dm.inverse();
    LaurentPoly remainder = p;
    std::vector<LaurentPoly::Term> quotient;
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = leading_term(remainder);
        if (rc % dc != 0) throw InexactDivision("coefficient not divisible in exact division");
        Monomial qm = rm * dm_inv;
        for (VarId v : vars) {
            const int e = qm.exponent(v);
            if (e < pbox.at(v).first - dbox.at(v).second || e > pbox.at(v).second - dbox.at(v).first) {
                throw InexactDivision("nonzero remainder in exact division");
            }
        }
        Integer qc = rc / dc;
        remainder -= d.times_monomial(qm).scaled(qc);
        quotient.emplace_back(std::move(qm), std::move(qc));
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

/// Rank of each variable in canonical order.
std::unordered_map<VarId, std::size_t> canonical_ranks(std::vector<VarId> vars, const VarTable& table) {
    std::sort(vars.begin(), vars.end(), [&](VarId a, VarId b) { return table.precedes(a, b); });
    std::unordered_map<VarId, std::size_t> rank;
    for (std::size_t i = 0; i < vars.size(); ++i) rank[vars[i]] = i;
    return rank;
}

std::vector<int> dense_exponents(const Monomial& m, const std::unordered_map<VarId, std::size_t>& rank) {
    std::vector<int> out(rank.size(), 0);
    for (const auto& [v, e] : m.entries()) out[rank.at(v)] = e;
    return out;
}

bool dense_less(long deg_a, const std::vector<int>& a, long deg_b, const std::vector<int>& b) {
    if (deg_a != deg_b) return deg_a < deg_b;
    // Lexicographic with the first canonical variable most significant.
    return a < b;
}

void append_monomial(std::string& out, const Monomial& m, const VarTable& table,
                     const std::unordered_map<VarId, std::size_t>& rank) {
    std::vector<Monomial::Entry> entries(m.entries().begin(), m.entries().end());
    std::sort(entries.begin(), entries.end(),
              [&](const auto& a, const auto& b) { return rank.at(a.first) < rank.at(b.first); });
    bool first = true;
    for (const auto& [v, e] : entries) {
        if (!first) out += '*';
        first = false;
        out += table.name(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
}

}  // namespace

bool canonical_less(const Monomial& a, const Monomial& b, const VarTable& table) {
    std::vector<VarId> vars;
    for (const auto& [v, e] : a.entries()) vars.push_back(v);
    for (const auto& [v, e] : b.entries()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const auto rank = canonical_ranks(vars, table);
    return dense_less(a.total_degree(), dense_exponents(a, rank), b.total_degree(), dense_exponents(b, rank));
}

std::string to_string(const Monomial& m, const VarTable& table) {
    if (m.is_one()) return "1";
    std::vector<VarId> vars;
    for (const auto& [v, e] : m.entries()) vars.push_back(v);
    std::string out;
    append_monomial(out, m, table, canonical_ranks(vars, table));
    return out;
}

std::string to_string(const LaurentPoly& p, const VarTable& table) {
    if (p.is_zero()) return "0";
    const auto rank = canonical_ranks(p.variables(), table);
    struct Row {
        long degree;
        std::vector<int> exps;
        const LaurentPoly::Term* term;
    };
    std::vector<Row> rows;
    rows.reserve(p.size());
    for (const auto& t : p.terms()) rows.push_back({t.first.total_degree(), dense_exponents(t.first, rank), &t});
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return dense_less(a.degree, a.exps, b.degree, b.exps); });
    std::string out;
    bool first = true;
    for (const auto& row : rows) {
        const auto& [m, c] = *row.term;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (m.is_one()) {
            out += magnitude.str();
            continue;
        }
        if (magnitude != 1) out += magnitude.str() + "*";
        append_monomial(out, m, table, rank);
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, VarTable& table) : text_(text), table_(table) {}

    LaurentPoly parse() {
        std::vector<LaurentPoly::Term> terms;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial text");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (get() == '-') ? -1 : 1;
                skip_ws();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            terms.push_back(parse_term(sign));
            skip_ws();
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

private:
    LaurentPoly::Term parse_term(int sign) {
        Integer coeff = sign;
        std::vector<Monomial::Entry> entries;
        while (true) {
            skip_ws();
            if (at_end()) throw error("truncated term");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_integer();
            } else {
                const VarId v = table_.by_name(parse_var_name());
                int exp = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    skip_ws();
                    exp = parse_exponent();
                }
                entries.emplace_back(v, exp);
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        return {Monomial::from_entries(std::move(entries)), std::move(coeff)};
    }

    Integer parse_integer() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int parse_exponent() {
        const auto start = pos_;
        if (!at_end() && peek() == '-') ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return parse_int(text_.substr(start, pos_ - start), "exponent");
    }

    std::string parse_var_name() {
        const auto start = pos_;
        if (peek() == 'Y' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
            const auto close = text_.find(']', pos_);
            if (close == std::string_view::npos) throw error("unterminated Y variable");
            pos_ = close + 1;
        } else if (peek() == 'X' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') {
            const auto close = text_.find('}', pos_);
            if (close == std::string_view::npos) throw error("unterminated X variable");
            pos_ = close + 1;
        } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        } else {
            throw error("unexpected character");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    ParseError error(const std::string& what) const {
        return ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    std::string_view text_;
    VarTable& table_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, VarTable& table) { return PolyParser(text, table).parse(); }

}  // namespace hlskit

namespace hlskit {

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace hlskit
