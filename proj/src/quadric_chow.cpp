#include "quadchow/quadric_chow.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace quadchow {

QuadricRing::QuadricRing(int dim, MiddleSquare convention) : n(dim), middle(convention)
{
    if (dim < 0)
        throw std::invalid_argument("QuadricRing: negative dimension " + std::to_string(dim));
}

std::string QuadricBasisClass::to_string() const
{
    return (kind == BasisKind::H ? "h^" : "l_") + std::to_string(index);
}

std::vector<QuadricBasisClass> basis(const QuadricRing& ring)
{
    std::vector<QuadricBasisClass> out;
    for (int k = 0; k <= ring.half(); ++k)
        out.push_back(QuadricBasisClass::h(k));
    for (int i = 0; i <= ring.half(); ++i)
        out.push_back(QuadricBasisClass::l(i));
    return out;
}

namespace {

void check_class(const QuadricRing& ring, const QuadricBasisClass& c)
{
    if (c.index < 0 || c.index > ring.half())
        throw std::out_of_range("basis class " + c.to_string() + " outside quadric of dimension " +
                                std::to_string(ring.n));
}

}  // namespace

QuadricCycle::QuadricCycle(QuadricRing ring, QuadricBasisClass c, BigInt coeff)
    : ring_(ring), codim_(c.codim(ring))
{
    add(c, coeff);
}

BigInt QuadricCycle::coeff(const QuadricBasisClass& c) const
{
    auto it = terms_.find(c);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void QuadricCycle::add(const QuadricBasisClass& c, const BigInt& coeff)
{
    check_class(ring_, c);
    if (c.codim(ring_) != codim_)
        throw std::invalid_argument("QuadricCycle: " + c.to_string() + " has codim " +
                                    std::to_string(c.codim(ring_)) + ", cycle has codim " +
                                    std::to_string(codim_));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QuadricCycle& QuadricCycle::operator+=(const QuadricCycle& o)
{
    if (!(o.ring_ == ring_))
        throw std::invalid_argument("QuadricCycle: ring mismatch");
    if (o.is_zero())
        return *this;
    if (is_zero())
        codim_ = o.codim_;
    for (const auto& [c, v] : o.terms_)
        add(c, v);
    return *this;
}

QuadricCycle& QuadricCycle::operator*=(const BigInt& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_)
        v *= s;
    return *this;
}

QuadricCycle QuadricCycle::reduced_mod2() const
{
    QuadricCycle r(ring_, codim_);
    for (const auto& [c, v] : terms_)
        r.add(c, mod_floor(v, 2));
    return r;
}

std::string QuadricCycle::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, v] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (v != 1)
            os << v.get_str() << "*";
        os << c.to_string();
    }
    return os.str();
}

QuadricCycle operator+(QuadricCycle a, const QuadricCycle& b)
{
    a += b;
    return a;
}

QuadricCycle operator*(const BigInt& s, QuadricCycle c)
{
    c *= s;
    return c;
}

QuadricCycle reduce_h_power(const QuadricRing& ring, int k)
{
    if (k < 0)
        throw std::invalid_argument("reduce_h_power: negative exponent");
    QuadricCycle r(ring, k);
    if (k <= ring.half())
        r.add(QuadricBasisClass::h(k), 1);
    else if (k <= ring.n)
        r.add(QuadricBasisClass::l(ring.n - k), 2);
    return r;
}

QuadricCycle mul(const QuadricRing& ring, const QuadricBasisClass& a, const QuadricBasisClass& b)
{
    check_class(ring, a);
    check_class(ring, b);
    const int codim = a.codim(ring) + b.codim(ring);
    if (a.kind == BasisKind::H && b.kind == BasisKind::H)
        return reduce_h_power(ring, a.index + b.index);
    QuadricCycle r(ring, codim);
    if (a.kind == BasisKind::L && b.kind == BasisKind::L) {
        if (ring.n % 2 == 0 && a.index == ring.half() && b.index == ring.half()) {
            const bool forced = ring.half() % 2 == 0;
            if (forced == (ring.middle == MiddleSquare::Forced))
                r.add(QuadricBasisClass::l(0), 1);
        }
        return r;
    }
    const auto& hc = a.kind == BasisKind::H ? a : b;
    const auto& lc = a.kind == BasisKind::H ? b : a;
    if (lc.index >= hc.index)
        r.add(QuadricBasisClass::l(lc.index - hc.index), 1);
    return r;
}

QuadricCycle mul(const QuadricCycle& a, const QuadricCycle& b)
{
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("mul: ring mismatch");
    QuadricCycle r(a.ring(), a.codim() + b.codim());
    for (const auto& [ca, va] : a.terms())
        for (const auto& [cb, vb] : b.terms())
            r += (va * vb) * mul(a.ring(), ca, cb);
    return r;
}

BigInt degree(const QuadricCycle& c)
{
    return c.coeff(QuadricBasisClass::l(0));
}

QuadricCycle steenrod_sq(const QuadricRing& ring, int a, const QuadricBasisClass& c)
{
    check_class(ring, c);
    if (a < 0)
        throw std::invalid_argument("steenrod_sq: negative degree");
    QuadricCycle r(ring, c.codim(ring) + a);
    if (c.kind == BasisKind::H) {
        // h^{k+a} is divisible by 2 once it leaves the h-range.
        if (c.index + a <= ring.half() && binom_mod2(c.index, a))
            r.add(QuadricBasisClass::h(c.index + a), 1);
    } else {
        if (c.index >= a && binom_mod2(ring.n + 1 - c.index, a))
            r.add(QuadricBasisClass::l(c.index - a), 1);
    }
    return r;
}

std::map<int, QuadricCycle> total_steenrod(const QuadricCycle& c)
{
    std::map<int, QuadricCycle> out;
    for (const auto& [b, v] : c.terms()) {
        if (mod_floor(v, 2) == 0)
            continue;
        for (int a = 0; a <= b.codim(c.ring()); ++a) {
            auto sq = steenrod_sq(c.ring(), a, b);
            auto [it, _] = out.try_emplace(sq.codim(), c.ring(), sq.codim());
            it->second += sq;
        }
    }
    for (auto& [k, v] : out)
        v = v.reduced_mod2();
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

ChernClasses chern_neg_tangent(int d, MiddleSquare middle)
{
    if (d < 1)
        throw std::invalid_argument("chern_neg_tangent: d must be >= 1");
    const QuadricRing sub(d, middle);
    // c(T_P) = (1+h)^{d+2} / (1+2h), so c(-T_P) = (1+2h) (1+h)^{-(d+2)}.
    auto tangent_inv = series_inverse(TruncatedSeries::binomial_power(d, 1, d + 2));
    auto series = series_mul(TruncatedSeries::binomial_power(d, 2, 1), tangent_inv);
    std::vector<QuadricCycle> classes;
    classes.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        classes.push_back(series[i] * reduce_h_power(sub, i));
    return {std::move(series), std::move(classes)};
}

QuadricCycle pushforward_embedding(const QuadricRing& sub, const QuadricRing& ambient, const QuadricCycle& c)
{
    if (!(c.ring() == sub))
        throw std::invalid_argument("pushforward_embedding: cycle does not live on the subquadric");
    if (sub.n > ambient.n)
        throw std::invalid_argument("pushforward_embedding: subquadric dimension exceeds ambient");
    const int shift = ambient.n - sub.n;
    QuadricCycle r(ambient, c.codim() + shift);
    for (const auto& [b, v] : c.terms()) {
        if (b.kind == BasisKind::H)
            r += v * reduce_h_power(ambient, shift + b.index);
        else
            r.add(QuadricBasisClass::l(b.index), v);
    }
    return r;
}

SubquadricDim subquadric_dim(int n)
{
    if (n < 1)
        throw std::invalid_argument("subquadric_dim: n must be >= 1");
    const int t = std::bit_width(static_cast<unsigned>(n + 1)) - 1;
    const int d = (1 << t) - 1;
    if (!(d <= n && n - d < (1 << t)))
        throw std::logic_error("subquadric_dim: remainder out of range");
    if (!(4 * d > n))
        throw std::logic_error("subquadric_dim: 2d > n/2 fails");
    return {t, d};
}

}  // namespace quadchow
