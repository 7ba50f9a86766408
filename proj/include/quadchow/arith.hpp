#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace quadchow {

using BigInt = mpz_class;

/// Generalized binomial a(a-1)...(a-k+1)/k! for any integer a and k >= 0.
/// Negative upper arguments go through the reflection
/// binom(a, k) = (-1)^k binom(k - a - 1, k).
BigInt binom_exact(std::int64_t a, std::int64_t k);

/// Parity of binom_exact(a, k) via Lucas' digit rule.
bool binom_mod2(std::int64_t a, std::int64_t k);

/// Non-negative residue of v modulo m (m > 0).
BigInt mod_floor(const BigInt& v, long m);

/// One-variable integer power series truncated above degree_bound.
/// Coefficient i is the coefficient of h^i.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree_bound);
    TruncatedSeries(int degree_bound, std::vector<BigInt> coeffs);

    static TruncatedSeries one(int degree_bound);
    /// (1 + c*h)^e for any integer exponent e.
    static TruncatedSeries binomial_power(int degree_bound, long c, long e);

    int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    BigInt& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    bool is_one() const;
    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; throws std::domain_error unless the constant term is 1.
TruncatedSeries series_inverse(const TruncatedSeries& s);

}  // namespace quadchow
