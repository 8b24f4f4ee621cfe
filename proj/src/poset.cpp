#include "hlskit/poset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hlskit {

void PosetSpec::validate() const {
    if (n.empty()) throw std::invalid_argument("poset spec needs g >= 1 components");
    if (n.size() != r.size()) throw std::invalid_argument("poset spec: n and r differ in length");
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 0 || r[i] < 0) throw std::invalid_argument("poset spec entries must be nonnegative");
    }
}

bool PosetSpec::degenerate() const {
    return std::all_of(n.begin(), n.end(), [](int x) { return x == 0; }) &&
           std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

std::string PosetSpec::to_string() const {
    auto join = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    return "n=" + join(n) + " r=" + join(r);
}

int ComponentElement::size() const {
    int s = 0;
    for (int c : counts) s += c;
    return s;
}

std::vector<int> s_vector(const ComponentElement& a) {
    const int n = a.n();
    std::vector<int> s(n + 2, 0);
    s[0] = a.counts[0] * (a.counts[0] - 1) / 2;
    int running = 0;
    for (int i = 1; i <= n + 1; ++i) {
        running += a.counts[i - 1];
        s[i] = running;
    }
    return s;
}

int delta(const ComponentElement& a, const ComponentElement& b, int i) {
    if (a.n() != b.n()) throw std::invalid_argument("delta: elements of different posets");
    if (i < 0 || i > a.n() + 1) throw std::out_of_range("delta: index " + std::to_string(i) + " out of range");
    if (i == 0) return b.counts[0] * (b.counts[0] - 1) / 2 - a.counts[0] * (a.counts[0] - 1) / 2;
    int d = 0;
    for (int k = 0; k < i; ++k) d += b.counts[k] - a.counts[k];
    return d;
}

bool leq_t(const ComponentElement& a, const ComponentElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("leq_t: elements of different posets");
    int d = 0;
    for (std::size_t k = 0; k < a.counts.size(); ++k) {
        d += b.counts[k] - a.counts[k];
        if (d < 0) return false;
    }
    return true;
}

bool leq_t(const Element& a, const Element& b) {
    if (a.parts.size() != b.parts.size()) throw std::invalid_argument("leq_t: elements of different posets");
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (!leq_t(a.parts[i], b.parts[i])) return false;
    }
    return true;
}

ComponentElement empty_component(int n) { return ComponentElement{std::vector<int>(n + 1, 0)}; }

ComponentElement full_component(int n, int r) {
    ComponentElement e{std::vector<int>(n + 1, 1)};
    e.counts[0] = r;
    return e;
}

Element bottom_element(const PosetSpec& spec) {
    Element e;
    for (int i = 0; i < spec.g(); ++i) e.parts.push_back(empty_component(spec.n[i]));
    return e;
}

Element top_element(const PosetSpec& spec) {
    Element e;
    for (int i = 0; i < spec.g(); ++i) e.parts.push_back(full_component(spec.n[i], spec.r[i]));
    return e;
}

bool conforms(const Element& e, const PosetSpec& spec) {
    if (static_cast<int>(e.parts.size()) != spec.g()) return false;
    for (int i = 0; i < spec.g(); ++i) {
        const auto& c = e.parts[i].counts;
        if (static_cast<int>(c.size()) != spec.n[i] + 1) return false;
        if (c[0] < 0 || c[0] > spec.r[i]) return false;
        for (std::size_t k = 1; k < c.size(); ++k) {
            if (c[k] < 0 || c[k] > 1) return false;
        }
    }
    return true;
}

Element complement(const Element& a, const PosetSpec& spec) {
    if (!conforms(a, spec)) throw std::invalid_argument("complement: element does not match spec");
    Element out = a;
    for (int i = 0; i < spec.g(); ++i) {
        auto& c = out.parts[i].counts;
        c[0] = spec.r[i] - c[0];
        for (std::size_t k = 1; k < c.size(); ++k) c[k] = 1 - c[k];
    }
    return out;
}

ComponentElement iso_n1_to_np1(const ComponentElement& a, int r) {
    if (r != 1) throw std::invalid_argument("iso_n1_to_np1 needs a component with r = 1");
    if (a.counts.at(0) > 1) throw std::invalid_argument("iso_n1_to_np1: element has more than one zero");
    ComponentElement out{std::vector<int>(a.counts.size() + 1, 0)};
    for (std::size_t k = 0; k < a.counts.size(); ++k) out.counts[k + 1] = a.counts[k];
    return out;
}

std::vector<Element> enumerate_elements(const PosetSpec& spec, std::size_t max_elements) {
    spec.validate();
    std::size_t total = 1;
    std::vector<std::vector<ComponentElement>> streams;
    for (int i = 0; i < spec.g(); ++i) {
        const int n = spec.n[i];
        const int r = spec.r[i];
        if (n >= 62) throw CapExceeded("poset component too large");
        const std::size_t count = static_cast<std::size_t>(r + 1) << n;
        if (count > max_elements || total > max_elements / count) {
            throw CapExceeded("poset " + spec.to_string() + " exceeds the element cap of " +
                              std::to_string(max_elements));
        }
        total *= count;
        // Reverse lexicographic: a_0 varies fastest, a_n slowest.
        std::vector<ComponentElement> stream;
        stream.reserve(count);
        for (std::size_t high = 0; high < (std::size_t{1} << n); ++high) {
            for (int zeros = 0; zeros <= r; ++zeros) {
                ComponentElement e = empty_component(n);
                e.counts[0] = zeros;
                for (int k = 1; k <= n; ++k) e.counts[k] = static_cast<int>((high >> (k - 1)) & 1U);
                stream.push_back(std::move(e));
            }
        }
        streams.push_back(std::move(stream));
    }
    std::vector<Element> out;
    out.reserve(total);
    std::vector<std::size_t> pos(streams.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Element e;
        for (std::size_t i = 0; i < streams.size(); ++i) e.parts.push_back(streams[i][pos[i]]);
        out.push_back(std::move(e));
        for (std::size_t i = streams.size(); i-- > 0;) {
            if (++pos[i] < streams[i].size()) break;
            pos[i] = 0;
        }
    }
    return out;
}

std::string render(const ComponentElement& a) {
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += ' ';
    };
    if (a.counts[0] == 1) {
        out += "0";
    } else if (a.counts[0] > 1) {
        out += "0^" + std::to_string(a.counts[0]);
    }
    for (std::size_t k = 1; k < a.counts.size(); ++k) {
        if (a.counts[k] > 0) {
            sep();
            out += std::to_string(k);
        }
    }
    return out.empty() ? "-" : out;
}

std::string render(const Element& e) {
    std::string out;
    for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += '|';
        out += render(e.parts[i]);
    }
    return out;
}

namespace {

int to_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed multiset entry '" + std::string(s) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

ComponentElement parse_component(std::string_view text, int n, int r) {
    text = trim(text);
    ComponentElement e = empty_component(n);
    if (text == "-" || text.empty()) return e;
    std::vector<std::pair<int, int>> entries;  // (entry, multiplicity)
    const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (spaced || n >= 10) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            const auto caret = tok.find('^');
            if (caret == std::string::npos) {
                entries.emplace_back(to_int(tok), 1);
            } else {
                entries.emplace_back(to_int(std::string_view(tok).substr(0, caret)),
                                     to_int(std::string_view(tok).substr(caret + 1)));
            }
        }
    } else {
        // Compact form: single-digit entries, single-digit powers.
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw std::invalid_argument("malformed multiset '" + std::string(text) + "'");
            }
            int mult = 1;
            if (i + 2 < text.size() && text[i + 1] == '^') {
                if (!std::isdigit(static_cast<unsigned char>(text[i + 2]))) {
                    throw std::invalid_argument("malformed power in '" + std::string(text) + "'");
                }
                mult = text[i + 2] - '0';
                entries.emplace_back(text[i] - '0', mult);
                i += 2;
                continue;
            }
            entries.emplace_back(text[i] - '0', mult);
        }
    }
    for (const auto& [entry, mult] : entries) {
        if (entry < 0 || entry > n || mult < 1) {
            throw std::invalid_argument("multiset entry " + std::to_string(entry) + " outside {0.." +
                                        std::to_string(n) + "}");
        }
        e.counts[entry] += mult;
    }
    if (e.counts[0] > r) throw std::invalid_argument("more than r zeros in '" + std::string(text) + "'");
    for (int k = 1; k <= n; ++k) {
        if (e.counts[k] > 1) throw std::invalid_argument("repeated positive entry in '" + std::string(text) + "'");
    }
    return e;
}

Element parse_element(std::string_view text, const PosetSpec& spec) {
    Element e;
    std::size_t start = 0;
    for (int i = 0; i < spec.g(); ++i) {
        const auto bar = text.find('|', start);
        if ((bar == std::string_view::npos) != (i == spec.g() - 1)) {
            throw std::invalid_argument("element '" + std::string(text) + "' needs " + std::to_string(spec.g()) +
                                        " components");
        }
        const auto part = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
        e.parts.push_back(parse_component(part, spec.n[i], spec.r[i]));
        start = bar + 1;
    }
    return e;
}

std::map<std::size_t, int> Multichain::multiplicities() const {
    std::map<std::size_t, int> m;
    for (auto i : items) ++m[i];
    return m;
}

std::vector<std::size_t> Multichain::support() const {
    std::vector<std::size_t> out;
    for (auto i : items) {
        if (out.empty() || out.back() != i) out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poset

namespace {
constexpr std::size_t kMatrixLimit = 4096;
}

Poset::Poset(PosetSpec spec, Caps caps) : spec_(std::move(spec)), caps_(caps) {
    spec_.validate();
    elements_ = enumerate_elements(spec_, caps_.max_elements);
    top_ = elements_.size() - 1;
    prefix_.reserve(elements_.size());
    for (const auto& e : elements_) {
        std::vector<int> p;
        for (const auto& part : e.parts) {
            int running = 0;
            for (int c : part.counts) {
                running += c;
                p.push_back(running);
            }
        }
        prefix_.push_back(std::move(p));
    }
    if (elements_.size() <= kMatrixLimit) {
        const auto size = elements_.size();
        matrix_.assign(size * size, 0);
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = 0; b < size; ++b) matrix_[a * size + b] = leq_slow(a, b) ? 1 : 0;
        }
    }
}

bool Poset::leq_slow(std::size_t a, std::size_t b) const {
    const auto& pa = prefix_[a];
    const auto& pb = prefix_[b];
    for (std::size_t k = 0; k < pa.size(); ++k) {
        if (pa[k] > pb[k]) return false;
    }
    return true;
}

bool Poset::leq(std::size_t a, std::size_t b) const {
    if (!matrix_.empty()) return matrix_[a * elements_.size() + b] != 0;
    return leq_slow(a, b);
}

std::size_t Poset::index_of(const Element& e) const {
    if (!conforms(e, spec_)) throw std::invalid_argument("element '" + render(e) + "' does not match the poset");
    // Invert the mixed-radix enumeration.
    std::size_t idx = 0;
    for (int i = 0; i < spec_.g(); ++i) {
        const auto& c = e.parts[i].counts;
        std::size_t high = 0;
        for (int k = spec_.n[i]; k >= 1; --k) high = (high << 1U) | static_cast<std::size_t>(c[k]);
        const std::size_t local = high * static_cast<std::size_t>(spec_.r[i] + 1) + static_cast<std::size_t>(c[0]);
        idx = idx * (static_cast<std::size_t>(spec_.r[i] + 1) << spec_.n[i]) + local;
    }
    return idx;
}

std::vector<std::size_t> Poset::interval(Interval kind) const {
    if (spec_.degenerate()) return {};
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (i == top_ && kind == Interval::Open) continue;
        out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> Poset::open_interval(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < elements_.size(); ++c) {
        if (less(a, c) && less(c, b)) out.push_back(c);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto size = elements_.size();
    for (std::size_t a = 0; a < size; ++a) {
        std::vector<std::size_t> above;
        for (std::size_t b = 0; b < size; ++b) {
            if (less(a, b)) above.push_back(b);
        }
        for (auto b : above) {
            const bool covered = std::none_of(above.begin(), above.end(), [&](std::size_t c) { return less(c, b); });
            if (covered) out.emplace_back(a, b);
        }
    }
    return out;
}

void Poset::for_each_chain_in(std::span<const std::size_t> pool, const ChainVisitor& visit) const {
    std::size_t emitted = 0;
    auto bump = [&] {
        if (++emitted > caps_.max_chains) {
            throw CapExceeded("chain enumeration exceeds the cap of " + std::to_string(caps_.max_chains));
        }
    };
    std::vector<std::size_t> chain;
    bump();
    visit(chain);
    // Depth-first per length keeps the (length, lexicographic) order.
    for (std::size_t length = 1; length <= pool.size(); ++length) {
        bool found = false;
        std::function<void(std::size_t)> extend = [&](std::size_t from) {
            if (chain.size() == length) {
                found = true;
                bump();
                visit(chain);
                return;
            }
            for (std::size_t p = from; p < pool.size(); ++p) {
                const auto c = pool[p];
                if (!chain.empty() && !less(chain.back(), c)) continue;
                chain.push_back(c);
                extend(0);
                chain.pop_back();
            }
        };
        extend(0);
        if (!found) break;
    }
}

void Poset::for_each_chain(Interval kind, const ChainVisitor& visit) const {
    const auto pool = interval(kind);
    for_each_chain_in(pool, visit);
}

std::vector<Chain> Poset::enumerate_chains(Interval kind) const {
    std::vector<Chain> out;
    for_each_chain(kind, [&](std::span<const std::size_t> c) {
        out.push_back(Chain{std::vector<std::size_t>(c.begin(), c.end()), kind});
    });
    return out;
}

void Poset::for_each_multichain(Interval kind, int max_length, const ChainVisitor& visit) const {
    if (max_length < 0) throw std::invalid_argument("multichain length bound must be nonnegative");
    const auto pool = interval(kind);
    std::size_t emitted = 0;
    std::vector<std::size_t> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t length) {
        if (chain.size() == length) {
            if (++emitted > caps_.max_chains) {
                throw CapExceeded("multichain enumeration exceeds the cap of " + std::to_string(caps_.max_chains));
            }
            visit(chain);
            return;
        }
        for (auto c : pool) {
            if (!chain.empty() && !leq(chain.back(), c)) continue;
            chain.push_back(c);
            extend(length);
            chain.pop_back();
        }
    };
    for (int length = 0; length <= max_length; ++length) {
        if (length > 0 && pool.empty()) break;
        extend(static_cast<std::size_t>(length));
    }
}

std::vector<Multichain> Poset::enumerate_multichains(Interval kind, int max_length) const {
    std::vector<Multichain> out;
    for_each_multichain(kind, max_length, [&](std::span<const std::size_t> c) {
        out.push_back(Multichain{std::vector<std::size_t>(c.begin(), c.end())});
    });
    return out;
}

std::string Poset::to_dot() const {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        out << "  n" << i << " [label=\"" << render(elements_[i]) << "\"];\n";
    }
    for (const auto& [a, b] : cover_relations()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string Poset::elements_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : elements_) {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& p : e.parts) parts.push_back(p.counts);
        arr.push_back(std::move(parts));
    }
    return arr.dump();
}

}  // namespace hlskit
