#include "quadchow/twisted_cycles.hpp"

#include <sstream>
#include <stdexcept>

namespace quadchow {

BigInt TwistedCycle::coeff(const QuadricBasisClass& q, const Monomial& m) const
{
    auto it = terms_.find({q, m});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void TwistedCycle::add(const QuadricBasisClass& q, const Monomial& m, const BigInt& coeff)
{
    if (coeff == 0)
        return;
    const int c = q.codim(ring_) + monomial_codim(m);
    if (c != codim_)
        throw std::invalid_argument("TwistedCycle: term " + q.to_string() + " x " + monomial_to_string(m) +
                                    " has codim " + std::to_string(c) + ", cycle has codim " +
                                    std::to_string(codim_));
    auto [it, inserted] = terms_.try_emplace({q, m}, coeff);
    if (!inserted)
        it->second += coeff;
    if (modulus_ == Modulus::Mod2)
        it->second = mod_floor(it->second, 2);
    if (it->second == 0)
        terms_.erase(it);
}

TwistedCycle& TwistedCycle::operator+=(const TwistedCycle& o)
{
    if (!(o.ring_ == ring_))
        throw std::invalid_argument("TwistedCycle: ring mismatch");
    if (o.modulus_ != modulus_)
        throw std::invalid_argument("TwistedCycle: cannot add integral and mod-2 cycles");
    for (const auto& [key, v] : o.terms_)
        add(key.first, key.second, v);
    return *this;
}

TwistedCycle& TwistedCycle::operator*=(const BigInt& s)
{
    Terms old;
    old.swap(terms_);
    for (const auto& [key, v] : old)
        add(key.first, key.second, v * s);
    return *this;
}

TwistedCycle TwistedCycle::reduced_mod2() const
{
    TwistedCycle r(ring_, codim_, Modulus::Mod2);
    for (const auto& [key, v] : terms_)
        r.add(key.first, key.second, v);
    return r;
}

TwistedCycle TwistedCycle::lifted(const LiftPolicy& policy) const
{
    TwistedCycle r(ring_, codim_, Modulus::Integral);
    for (const auto& [key, v] : terms_) {
        const auto lifted_mono = lift(key.second, policy);
        for (const auto& [mono, c] : lifted_mono.terms())
            r.add(key.first, mono, v * c);
    }
    return r;
}

TwistedCycle TwistedCycle::reduced_mod2(const LiftPolicy& policy) const
{
    TwistedCycle r(ring_, codim_, Modulus::Mod2);
    for (const auto& [key, v] : terms_) {
        if (mod_floor(v, 2) == 0)
            continue;
        const auto reduced = reduce_mod2(FormalPolynomial::monomial(key.second), policy);
        for (const auto& [mono, c] : reduced.terms())
            r.add(key.first, mono, c);
    }
    return r;
}

std::string TwistedCycle::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (v != 1)
            os << v.get_str() << "*";
        os << key.first.to_string() << " x " << monomial_to_string(key.second);
    }
    return os.str();
}

TwistedCycle operator+(TwistedCycle a, const TwistedCycle& b)
{
    a += b;
    return a;
}

TwistedCycle operator*(const BigInt& s, TwistedCycle c)
{
    c *= s;
    return c;
}

TwistedCycle external(const QuadricCycle& q, const FormalPolynomial& p, Modulus modulus)
{
    TwistedCycle r(q.ring(), q.codim() + p.codim(), modulus);
    for (const auto& [b, vb] : q.terms())
        for (const auto& [mono, vm] : p.terms())
            r.add(b, mono, vb * vm);
    return r;
}

TwistedCycle twisted_mul(const TwistedCycle& a, const TwistedCycle& b)
{
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("twisted_mul: ring mismatch");
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("twisted_mul: modulus mismatch");
    TwistedCycle r(a.ring(), a.codim() + b.codim(), a.modulus());
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            const auto q = mul(a.ring(), ka.first, kb.first);
            if (q.is_zero())
                continue;
            const auto mono = monomial_mul(ka.second, kb.second);
            for (const auto& [cls, vq] : q.terms())
                r.add(cls, mono, va * vb * vq);
        }
    }
    return r;
}

TwistedCycle cartan_sq(int r, const TwistedCycle& c, TopSquare top, const QuadricSteenrod& quadric_sq)
{
    if (c.modulus() != Modulus::Mod2)
        throw std::invalid_argument("cartan_sq: Steenrod squares act on mod-2 cycles only");
    if (r < 0)
        throw std::invalid_argument("cartan_sq: negative degree");
    TwistedCycle out(c.ring(), c.codim() + r, Modulus::Mod2);
    for (const auto& [key, v] : c.terms()) {
        const auto& [q, mono] = key;
        const auto formal = FormalPolynomial::monomial(mono);
        for (int l = 0; l <= r; ++l) {
            const auto qs = quadric_sq(c.ring(), r - l, q);
            if (qs.is_zero())
                continue;
            const auto ys = formal_steenrod(l, formal, top);
            if (ys.is_zero())
                continue;
            out += external(qs, ys, Modulus::Mod2);
        }
    }
    return out;
}

FormalPolynomial pr_star(const TwistedCycle& c)
{
    FormalPolynomial out(c.codim() - c.ring().n);
    for (const auto& [key, v] : c.terms())
        if (key.first == QuadricBasisClass::l(0))
            out.add(key.second, v);
    return c.modulus() == Modulus::Mod2 ? out.reduced_mod(2) : out;
}

void check_xbar_params(int n, int m, int j, XbarVariant variant)
{
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("violated " + what + " at (n=" + std::to_string(n) + ", m=" +
                                    std::to_string(m) + ", j=" + std::to_string(j) + ")");
    };
    if (n < 1)
        fail("n >= 1");
    if (j < 0)
        fail("j >= 0");
    if (j > m)
        fail("j <= m");
    if (variant == XbarVariant::Thm1 && !(2 * m < n + 2 * j))
        fail("m < n/2 + j");
    if (variant == XbarVariant::Prop2 && m != (n + 1) / 2 + j)
        fail("m = floor((n+1)/2) + j");
}

namespace {

TwistedCycle build_xbar(const QuadricRing& ring, int m, int j, XbarVariant variant, bool integral)
{
    check_xbar_params(ring.n, m, j, variant);
    const int half = ring.half();
    const Modulus mod = integral ? Modulus::Integral : Modulus::Mod2;
    TwistedCycle x(ring, m, mod);
    for (int k = 0; k <= std::min(half, m); ++k)
        x.add(QuadricBasisClass::h(k), {integral ? FormalSymbol::yint(m - k) : FormalSymbol::ymod2(m - k)}, 1);
    for (int k = 0; k <= j; ++k) {
        const int c = m + half - k - ring.n;
        if (half - k < 0 || c < 0)
            continue;
        x.add(QuadricBasisClass::l(half - k), {integral ? FormalSymbol::zint(c) : FormalSymbol::zmod2(c)}, 1);
    }
    return x;
}

}  // namespace

TwistedCycle generic_xbar(const QuadricRing& ring, int m, int j, XbarVariant variant)
{
    return build_xbar(ring, m, j, variant, false);
}

TwistedCycle integral_xbar(const QuadricRing& ring, int m, int j, XbarVariant variant)
{
    return build_xbar(ring, m, j, variant, true);
}

}  // namespace quadchow
