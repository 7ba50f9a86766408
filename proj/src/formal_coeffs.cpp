#include "quadchow/formal_coeffs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadchow {

FormalSymbol FormalSymbol::steenrod_of(const FormalSymbol& gen, int l)
{
    if (!gen.is_mod2_generator())
        throw std::invalid_argument("steenrod_of: base must be a mod-2 generator, got " + gen.to_string());
    return {SymbolKind::SteenrodOf, gen.kind, gen.first, l, gen.codim + l};
}

std::string FormalSymbol::to_string() const
{
    auto idx = [](const char* name, int a) { return std::string(name) + "(" + std::to_string(a) + ")"; };
    auto idx2 = [](const char* name, int a, int b) {
        return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    switch (kind) {
    case SymbolKind::Ymod2: return idx("y", first);
    case SymbolKind::Zmod2: return idx("z", first);
    case SymbolKind::Yint: return idx("Y", first);
    case SymbolKind::Zint: return idx("Z", first);
    case SymbolKind::Eps: return idx2("eps", first, second);
    case SymbolKind::Delta: return idx2("delta", first, second);
    case SymbolKind::Gamma: return idx2("gamma", first, second) + "[" + std::to_string(codim) + "]";
    case SymbolKind::SteenrodOf:
        return "S^" + std::to_string(second) + "(" + (base == SymbolKind::Ymod2 ? "y" : "z") + "(" +
               std::to_string(first) + "))";
    }
    return "?";
}

Monomial monomial_mul(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

int monomial_codim(const Monomial& m)
{
    int c = 0;
    for (const auto& s : m)
        c += s.codim;
    return c;
}

std::vector<std::string> monomial_strings(const Monomial& m)
{
    std::vector<std::string> out;
    out.reserve(m.size());
    for (const auto& s : m)
        out.push_back(s.to_string());
    return out;
}

std::string monomial_to_string(const Monomial& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += "*";
        out += m[i].to_string();
    }
    return out;
}

FormalPolynomial FormalPolynomial::constant(const BigInt& c)
{
    FormalPolynomial p(0);
    p.add({}, c);
    return p;
}

FormalPolynomial FormalPolynomial::generator(const FormalSymbol& s, const BigInt& coeff)
{
    FormalPolynomial p(s.codim);
    if (s.codim >= 0)
        p.add({s}, coeff);
    return p;
}

FormalPolynomial FormalPolynomial::monomial(const Monomial& m, const BigInt& coeff)
{
    Monomial sorted = m;
    std::sort(sorted.begin(), sorted.end());
    FormalPolynomial p(monomial_codim(sorted));
    if (std::none_of(sorted.begin(), sorted.end(), [](const FormalSymbol& s) { return s.codim < 0; }))
        p.add(sorted, coeff);
    return p;
}

BigInt FormalPolynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void FormalPolynomial::add(const Monomial& m, const BigInt& coeff)
{
    if (coeff == 0)
        return;
    if (!std::is_sorted(m.begin(), m.end()))
        throw std::invalid_argument("FormalPolynomial: unsorted monomial " + monomial_to_string(m));
    const int c = monomial_codim(m);
    if (terms_.empty())
        codim_ = c;
    else if (c != codim_)
        throw std::invalid_argument("FormalPolynomial: monomial " + monomial_to_string(m) + " has codim " +
                                    std::to_string(c) + ", polynomial has codim " + std::to_string(codim_));
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalPolynomial& FormalPolynomial::operator+=(const FormalPolynomial& o)
{
    for (const auto& [m, v] : o.terms_)
        add(m, v);
    return *this;
}

FormalPolynomial& FormalPolynomial::operator-=(const FormalPolynomial& o)
{
    for (const auto& [m, v] : o.terms_)
        add(m, -v);
    return *this;
}

FormalPolynomial& FormalPolynomial::operator*=(const BigInt& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= s;
    return *this;
}

FormalPolynomial FormalPolynomial::reduced_mod(long modulus) const
{
    FormalPolynomial r(codim_);
    for (const auto& [m, v] : terms_)
        r.add(m, mod_floor(v, modulus));
    return r;
}

std::string FormalPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (v != 1)
            os << v.get_str() << "*";
        os << monomial_to_string(m);
    }
    return os.str();
}

FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b)
{
    a += b;
    return a;
}

FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b)
{
    a -= b;
    return a;
}

FormalPolynomial operator*(const BigInt& s, FormalPolynomial p)
{
    p *= s;
    return p;
}

FormalPolynomial poly_mul(const FormalPolynomial& p, const FormalPolynomial& q)
{
    FormalPolynomial r(p.codim() + q.codim());
    for (const auto& [mp, vp] : p.terms())
        for (const auto& [mq, vq] : q.terms())
            r.add(monomial_mul(mp, mq), vp * vq);
    return r;
}

FormalPolynomial formal_steenrod(int l, const FormalSymbol& s, TopSquare top)
{
    if (!s.is_mod2_generator())
        throw std::invalid_argument("formal_steenrod: " + s.to_string() + " is not a mod-2 generator");
    if (l < 0)
        throw std::invalid_argument("formal_steenrod: negative degree");
    if (s.codim < 0 || l > s.codim)
        return FormalPolynomial(s.codim + l);
    if (l == 0)
        return FormalPolynomial::generator(s);
    if (l == s.codim && top == TopSquare::Expand)
        return FormalPolynomial::monomial({s, s});
    return FormalPolynomial::generator(FormalSymbol::steenrod_of(s, l));
}

FormalPolynomial formal_steenrod(int l, const FormalPolynomial& p, TopSquare top)
{
    if (l < 0)
        throw std::invalid_argument("formal_steenrod: negative degree");
    FormalPolynomial out(p.codim() + l);
    for (const auto& [mono, v] : p.terms()) {
        if (mod_floor(v, 2) == 0)
            continue;
        // Cartan: convolve the total squares of the factors, truncated at degree l.
        std::vector<FormalPolynomial> acc(static_cast<std::size_t>(l) + 1);
        acc[0] = FormalPolynomial::one();
        for (const auto& s : mono) {
            std::vector<FormalPolynomial> next(acc.size());
            for (int a = 0; a <= l; ++a) {
                next[static_cast<std::size_t>(a)] = FormalPolynomial(0);
                for (int b = 0; b <= a; ++b) {
                    const auto& lhs = acc[static_cast<std::size_t>(a - b)];
                    if (lhs.is_zero())
                        continue;
                    auto sq = formal_steenrod(b, s, top);
                    if (!sq.is_zero())
                        next[static_cast<std::size_t>(a)] += poly_mul(lhs, sq);
                }
            }
            acc = std::move(next);
        }
        out += acc[static_cast<std::size_t>(l)];
    }
    return out.reduced_mod(2);
}

FormalPolynomial eps_lift(const LiftPolicy& policy, int c, int l)
{
    const int k = policy.eps_k(c);
    if (c < 0 || l > c)
        return FormalPolynomial(c + l);
    if (l == 0)
        return FormalPolynomial::generator(FormalSymbol::yint(c));
    if (policy.midpoint_square_rule && (policy.m - policy.j) % 2 == 0 && 2 * k == policy.m - policy.j &&
        2 * l == policy.m + policy.j)
        return FormalPolynomial::monomial({FormalSymbol::yint(c), FormalSymbol::yint(c)});
    return FormalPolynomial::generator(FormalSymbol::eps(k, l, c + l));
}

FormalPolynomial delta_lift(const LiftPolicy& policy, int c, int l)
{
    if (c < 0 || l > c)
        return FormalPolynomial(c + l);
    if (l == 0)
        return FormalPolynomial::generator(FormalSymbol::zint(c));
    return FormalPolynomial::generator(FormalSymbol::delta(policy.delta_k(c), l, c + l));
}

namespace {

FormalPolynomial lift_symbol(const FormalSymbol& s, const LiftPolicy& policy)
{
    switch (s.kind) {
    case SymbolKind::Ymod2: return FormalPolynomial::generator(FormalSymbol::yint(s.first));
    case SymbolKind::Zmod2: return FormalPolynomial::generator(FormalSymbol::zint(s.first));
    case SymbolKind::SteenrodOf:
        return s.base == SymbolKind::Ymod2 ? eps_lift(policy, s.first, s.second)
                                           : delta_lift(policy, s.first, s.second);
    default: return FormalPolynomial::generator(s);  // already integral
    }
}

FormalPolynomial reduce_symbol(const FormalSymbol& s, const LiftPolicy& policy)
{
    auto steenrod = [](const FormalSymbol& gen, int l) {
        return l == 0 ? FormalPolynomial::generator(gen)
                      : FormalPolynomial::generator(FormalSymbol::steenrod_of(gen, l));
    };
    switch (s.kind) {
    case SymbolKind::Yint: return FormalPolynomial::generator(FormalSymbol::ymod2(s.first));
    case SymbolKind::Zint: return FormalPolynomial::generator(FormalSymbol::zmod2(s.first));
    case SymbolKind::Eps: return steenrod(FormalSymbol::ymod2(policy.m - s.first), s.second);
    case SymbolKind::Delta:
        return steenrod(FormalSymbol::zmod2(policy.m + policy.half() - policy.n - s.first), s.second);
    case SymbolKind::Gamma:
        throw std::domain_error("reduce_mod2: " + s.to_string() + " with odd coefficient has no mod-2 class");
    default: return FormalPolynomial::generator(s);
    }
}

}  // namespace

FormalPolynomial lift(const Monomial& m, const LiftPolicy& policy)
{
    FormalPolynomial r = FormalPolynomial::one();
    for (const auto& s : m) {
        r = poly_mul(r, lift_symbol(s, policy));
        if (r.is_zero())
            return FormalPolynomial(monomial_codim(m));
    }
    return r;
}

FormalPolynomial lift(const FormalPolynomial& p, const LiftPolicy& policy)
{
    FormalPolynomial out(p.codim());
    for (const auto& [mono, v] : p.terms())
        out += v * lift(mono, policy);
    return out;
}

FormalPolynomial reduce_mod2(const FormalPolynomial& p, const LiftPolicy& policy)
{
    FormalPolynomial out(p.codim());
    for (const auto& [mono, v] : p.terms()) {
        if (mod_floor(v, 2) == 0)
            continue;
        FormalPolynomial r = FormalPolynomial::one();
        for (const auto& s : mono)
            r = poly_mul(r, reduce_symbol(s, policy));
        out += r;
    }
    return out.reduced_mod(2);
}

FormalPolynomial residual_mod(const FormalPolynomial& p, const FormalPolynomial& target, long modulus)
{
    if (modulus != 2 && modulus != 4)
        throw std::invalid_argument("residual_mod: modulus must be 2 or 4");
    if (!p.is_zero() && !target.is_zero() && p.codim() != target.codim())
        throw std::invalid_argument("residual_mod: codim " + std::to_string(p.codim()) + " vs " +
                                    std::to_string(target.codim()));
    return (p - target).reduced_mod(modulus);
}

}  // namespace quadchow
