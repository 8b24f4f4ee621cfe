#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlskit {

/// Shape (n_1..n_g, r_1..r_g) of a product of tableau-order posets.
struct PosetSpec {
    std::vector<int> n;
    std::vector<int> r;

    int g() const { return static_cast<int>(n.size()); }
    /// Throws std::invalid_argument unless g >= 1, |n| = |r| and all entries >= 0.
    void validate() const;
    /// True when the bottom and top coincide (every n_i = r_i = 0).
    bool degenerate() const;
    std::string to_string() const;

    friend bool operator==(const PosetSpec&, const PosetSpec&) = default;
};

/// Characteristic vector (a_0, a_1, ..., a_n) of a sub-multiset of {0^r, 1, ..., n}.
struct ComponentElement {
    std::vector<int> counts;

    int n() const { return static_cast<int>(counts.size()) - 1; }
    int zeros() const { return counts.at(0); }
    int size() const;

    friend bool operator==(const ComponentElement&, const ComponentElement&) = default;
    friend auto operator<=>(const ComponentElement&, const ComponentElement&) = default;
};

/// A point of the product poset: one ComponentElement per component.
struct Element {
    std::vector<ComponentElement> parts;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Caps {
    std::size_t max_elements = std::size_t{1} << 18;
    std::size_t max_chains = 10'000'000;
    std::size_t max_subsets = std::size_t{1} << 12;
};

/// Prefix statistics: s_0 = C(a_0, 2) and s_i = a_0 + ... + a_{i-1} for 1 <= i <= n+1.
std::vector<int> s_vector(const ComponentElement& a);
/// Delta_i(a, b) = s_i(b) - s_i(a), 0 <= i <= n+1.
int delta(const ComponentElement& a, const ComponentElement& b, int i);

bool leq_t(const ComponentElement& a, const ComponentElement& b);
/// Product tableau order; throws std::invalid_argument on shape mismatch.
bool leq_t(const Element& a, const Element& b);

ComponentElement empty_component(int n);
ComponentElement full_component(int n, int r);
Element bottom_element(const PosetSpec& spec);
Element top_element(const PosetSpec& spec);
bool conforms(const Element& e, const PosetSpec& spec);

/// Componentwise complement inside E_{n_i, r_i}.
Element complement(const Element& a, const PosetSpec& spec);

/// P_{n,1} -> P_{n+1,0}: zero goes to 1 and i goes to i + 1.
ComponentElement iso_n1_to_np1(const ComponentElement& a, int r);

/// All elements; each component in reverse-lexicographic order, components
/// combined lexicographically (first component most significant).
std::vector<Element> enumerate_elements(const PosetSpec& spec, std::size_t max_elements = Caps{}.max_elements);

/// Multiset rendering such as "0^2 1 3", or "-" when empty.
std::string render(const ComponentElement& a);
/// Component renderings joined by "|".
std::string render(const Element& e);
/// Inverse of render(); entries may be space separated ("0^2 2 3") or, when
/// every entry is a single digit, written together ("0^223").
ComponentElement parse_component(std::string_view text, int n, int r);
Element parse_element(std::string_view text, const PosetSpec& spec);

enum class Interval { Open, HalfOpen };

struct Chain {
    std::vector<std::size_t> items;  ///< element indices, strictly increasing in the order
    Interval interval = Interval::HalfOpen;
};

struct Multichain {
    std::vector<std::size_t> items;  ///< element indices, weakly increasing in the order

    /// Multiplicity of each element occurring in the multichain.
    std::map<std::size_t, int> multiplicities() const;
    /// Distinct elements, in chain order.
    std::vector<std::size_t> support() const;
};

/// The poset P_{n,r} (product form) with elements indexed in enumeration order.
///
/// Immutable after construction. Comparisons go through a precomputed matrix
/// when the poset has at most 4096 elements and through prefix sums otherwise.
class Poset {
public:
    explicit Poset(PosetSpec spec, Caps caps = {});

    const PosetSpec& spec() const { return spec_; }
    const Caps& caps() const { return caps_; }
    std::size_t size() const { return elements_.size(); }
    const Element& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t index_of(const Element& e) const;
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return top_; }

    bool leq(std::size_t a, std::size_t b) const;
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    /// Elements of (0,1) or (0,1], in enumeration order.
    std::vector<std::size_t> interval(Interval kind) const;
    /// Elements strictly between a and b, in enumeration order.
    std::vector<std::size_t> open_interval(std::size_t a, std::size_t b) const;

    /// Pairs (a, b) with b covering a, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

    using ChainVisitor = std::function<void(std::span<const std::size_t>)>;

    /// Visits every strict chain drawn from `pool` (which must be sorted),
    /// the empty chain first, then by length and lexicographically.
    /// Throws CapExceeded past caps().max_chains.
    void for_each_chain_in(std::span<const std::size_t> pool, const ChainVisitor& visit) const;
    void for_each_chain(Interval kind, const ChainVisitor& visit) const;
    std::vector<Chain> enumerate_chains(Interval kind) const;

    /// Weakly increasing sequences of length <= max_length, same ordering.
    void for_each_multichain(Interval kind, int max_length, const ChainVisitor& visit) const;
    std::vector<Multichain> enumerate_multichains(Interval kind, int max_length) const;

    /// Graphviz rendering of the Hasse diagram, edges pointing upward.
    std::string to_dot() const;
    /// JSON array of elements, each an array of per-component vectors.
    std::string elements_json() const;

private:
    bool leq_slow(std::size_t a, std::size_t b) const;

    PosetSpec spec_;
    Caps caps_;
    std::vector<Element> elements_;
    std::size_t top_ = 0;
    std::vector<std::vector<int>> prefix_;  // per element: concatenated s_1..s_{n_i+1}
    std::vector<unsigned char> matrix_;    // size^2 when small, else empty
};

}  // namespace hlskit
