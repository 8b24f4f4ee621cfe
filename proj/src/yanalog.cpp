#include "hlskit/yanalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlskit {

namespace {

LaurentPoly one_minus_power(VarId v, int e) { return LaurentPoly(1) - LaurentPoly::var(v, e); }

}  // namespace

LaurentPoly y_integer(int n, VarId v) {
    if (n < 0) throw std::invalid_argument("y_integer: negative argument");
    std::vector<LaurentPoly::Term> terms;
    for (int i = 0; i < n; ++i) terms.emplace_back(Monomial::var(v, i), 1);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly y_factorial(int n, VarId v) {
    if (n < 0) throw std::invalid_argument("y_factorial: negative argument");
    LaurentPoly out(1);
    for (int i = 1; i <= n; ++i) out *= y_integer(i, v);
    return out;
}

LaurentPoly y_binomial(int n, int k, VarId v) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("y_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    }
    k = std::min(k, n - k);
    // Multiply one factor at a time: each partial product
    // prod_{i<=j} (1 - Y^{n-k+i}) / (1 - Y^i) is itself a Gaussian binomial
    // (of n-k+j over j), hence a polynomial, so every division is exact.
    LaurentPoly out(1);
    for (int i = 1; i <= k; ++i) {
        out = divide_exact(out * one_minus_power(v, n - k + i), one_minus_power(v, i));
    }
    return out;
}

LaurentPoly y_multinomial(int n, std::span<const int> multiset, VarId v) {
    if (n < 0) throw std::invalid_argument("y_multinomial: negative n");
    std::vector<int> e(multiset.begin(), multiset.end());
    for (int x : e) {
        if (x < 1 || x > n) {
            throw std::invalid_argument("y_multinomial: entry " + std::to_string(x) + " outside [" +
                                        std::to_string(n) + "]");
        }
    }
    std::sort(e.begin(), e.end());
    e.push_back(n);
    LaurentPoly out(1);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) out *= y_binomial(e[i + 1], e[i], v);
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace hlskit
