#include "quadchow/arith.hpp"

#include <stdexcept>
#include <string>

namespace quadchow {

BigInt binom_exact(std::int64_t a, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("binom_exact: negative lower argument " + std::to_string(k));
    if (a < 0) {
        BigInt r = binom_exact(k - a - 1, k);
        return (k % 2 == 0) ? r : BigInt(-r);
    }
    if (k > a)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return r;
}

bool binom_mod2(std::int64_t a, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("binom_mod2: negative lower argument " + std::to_string(k));
    if (a < 0)
        a = k - a - 1;  // sign is irrelevant mod 2
    // Lucas: every binary digit of k is dominated by the digit of a.
    return (static_cast<std::uint64_t>(k) & ~static_cast<std::uint64_t>(a)) == 0;
}

BigInt mod_floor(const BigInt& v, long m)
{
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

TruncatedSeries::TruncatedSeries(int degree_bound)
{
    if (degree_bound < 0)
        throw std::invalid_argument("TruncatedSeries: negative degree bound");
    coeffs_.assign(static_cast<std::size_t>(degree_bound) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(int degree_bound, std::vector<BigInt> coeffs) : TruncatedSeries(degree_bound)
{
    if (coeffs.size() > coeffs_.size())
        throw std::invalid_argument("TruncatedSeries: more coefficients than degree_bound + 1");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int degree_bound)
{
    TruncatedSeries s(degree_bound);
    s[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::binomial_power(int degree_bound, long c, long e)
{
    TruncatedSeries s(degree_bound);
    BigInt cp = 1;
    for (int i = 0; i <= degree_bound; ++i) {
        s[i] = binom_exact(e, i) * cp;
        cp *= c;
    }
    return s;
}

bool TruncatedSeries::is_one() const
{
    if (coeffs_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.degree_bound() != b.degree_bound())
        throw std::invalid_argument("series_mul: mismatched degree bounds");
    const int bound = a.degree_bound();
    TruncatedSeries r(bound);
    for (int i = 0; i <= bound; ++i) {
        if (a[i] == 0)
            continue;
        for (int k = 0; i + k <= bound; ++k)
            r[i + k] += a[i] * b[k];
    }
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& s)
{
    if (s[0] != 1)
        throw std::domain_error("series_inverse: constant term must be 1, got " + s[0].get_str());
    const int bound = s.degree_bound();
    TruncatedSeries t(bound);
    t[0] = 1;
    for (int i = 1; i <= bound; ++i) {
        BigInt acc = 0;
        for (int k = 1; k <= i; ++k)
            acc += s[k] * t[i - k];
        t[i] = -acc;
    }
    return t;
}

}  // namespace quadchow
