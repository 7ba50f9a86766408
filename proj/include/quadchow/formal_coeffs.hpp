#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quadchow/arith.hpp"

namespace quadchow {

enum class SymbolKind {
    Ymod2,      // y^i in Ch^i(Y)
    Zmod2,      // z^i in Ch^i(Y)
    Yint,       // integral lift of y^i
    Zint,       // integral lift of z^i
    Eps,        // integral representative of S^l(y^{m-k})
    Delta,      // integral representative of S^l(z^{m+half-k-n})
    Gamma,      // unknown integral cycle entering a lift as 2*gamma
    SteenrodOf  // unevaluated S^l(base) on a mod-2 generator
};

/// A graded formal generator for cycles on Y. Field meaning depends on kind:
///   Ymod2/Zmod2/Yint/Zint: first = i
///   Eps/Delta:             first = k, second = l
///   Gamma:                 first = i, second = slot
///   SteenrodOf:            base in {Ymod2, Zmod2}, first = base index, second = l
struct FormalSymbol {
    SymbolKind kind = SymbolKind::Ymod2;
    SymbolKind base = SymbolKind::Ymod2;
    int first = 0;
    int second = 0;
    int codim = 0;

    static FormalSymbol ymod2(int i) { return {SymbolKind::Ymod2, SymbolKind::Ymod2, i, 0, i}; }
    static FormalSymbol zmod2(int i) { return {SymbolKind::Zmod2, SymbolKind::Zmod2, i, 0, i}; }
    static FormalSymbol yint(int i) { return {SymbolKind::Yint, SymbolKind::Yint, i, 0, i}; }
    static FormalSymbol zint(int i) { return {SymbolKind::Zint, SymbolKind::Zint, i, 0, i}; }
    static FormalSymbol eps(int k, int l, int codim) { return {SymbolKind::Eps, SymbolKind::Eps, k, l, codim}; }
    static FormalSymbol delta(int k, int l, int codim) { return {SymbolKind::Delta, SymbolKind::Delta, k, l, codim}; }
    static FormalSymbol gamma(int i, int slot, int codim) { return {SymbolKind::Gamma, SymbolKind::Gamma, i, slot, codim}; }
    static FormalSymbol steenrod_of(const FormalSymbol& gen, int l);

    bool is_mod2_generator() const { return kind == SymbolKind::Ymod2 || kind == SymbolKind::Zmod2; }
    std::string to_string() const;

    auto operator<=>(const FormalSymbol&) const = default;
};

/// Commutative monomial: a sorted multiset of symbols. Empty is the unit.
using Monomial = std::vector<FormalSymbol>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
int monomial_codim(const Monomial& m);
std::vector<std::string> monomial_strings(const Monomial& m);
std::string monomial_to_string(const Monomial& m);

/// Homogeneous integer combination of monomials.
class FormalPolynomial {
public:
    using Terms = std::map<Monomial, BigInt>;

    explicit FormalPolynomial(int codim = 0) : codim_(codim) {}

    static FormalPolynomial one() { return constant(1); }
    static FormalPolynomial constant(const BigInt& c);
    /// The generator itself, or zero when its codimension is negative.
    static FormalPolynomial generator(const FormalSymbol& s, const BigInt& coeff = 1);
    static FormalPolynomial monomial(const Monomial& m, const BigInt& coeff = 1);

    int codim() const { return codim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(const Monomial& m) const;

    void add(const Monomial& m, const BigInt& coeff);
    FormalPolynomial& operator+=(const FormalPolynomial& o);
    FormalPolynomial& operator-=(const FormalPolynomial& o);
    FormalPolynomial& operator*=(const BigInt& s);

    /// Coefficients reduced into {0, ..., modulus-1}, zeros dropped.
    FormalPolynomial reduced_mod(long modulus) const;

    std::string to_string() const;
    bool operator==(const FormalPolynomial& o) const { return terms_ == o.terms_; }

private:
    int codim_;
    Terms terms_;
};

FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b);
FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b);
FormalPolynomial operator*(const BigInt& s, FormalPolynomial p);

FormalPolynomial poly_mul(const FormalPolynomial& p, const FormalPolynomial& q);

/// How S^c acts on a generator of codimension c.
enum class TopSquare {
    Expand,  // S^c(s) = s^2
    Keep     // S^c(s) stays the unevaluated SteenrodOf(s, c)
};

/// S^l of a mod-2 generator, with coefficients mod 2.
FormalPolynomial formal_steenrod(int l, const FormalSymbol& s, TopSquare top = TopSquare::Expand);

/// S^l of a mod-2 polynomial, expanded on monomials by the Cartan formula.
FormalPolynomial formal_steenrod(int l, const FormalPolynomial& p, TopSquare top = TopSquare::Expand);

/// Normalization rules for integral representatives of the mod-2 generators.
struct LiftPolicy {
    int n = 1;
    int m = 0;
    int j = 0;
    /// Choose eps_{(m-j)/2,(m+j)/2} = (Yint((m+j)/2))^2 when m - j is even.
    bool midpoint_square_rule = false;

    int half() const { return n / 2; }
    /// k such that y^{m-k} is the generator of codim c.
    int eps_k(int c) const { return m - c; }
    /// k such that z^{m+half-k-n} is the generator of codim c.
    int delta_k(int c) const { return m + half() - n - c; }
};

/// Canonical integral representative of S^l(y^c), resp. S^l(z^c).
FormalPolynomial eps_lift(const LiftPolicy& policy, int c, int l);
FormalPolynomial delta_lift(const LiftPolicy& policy, int c, int l);

/// Integral representative of a mod-2 polynomial.
FormalPolynomial lift(const FormalPolynomial& p, const LiftPolicy& policy);
FormalPolynomial lift(const Monomial& m, const LiftPolicy& policy);

/// Mod-2 class of an integral polynomial; Eps/Delta become SteenrodOf again.
/// Gamma symbols have no mod-2 name and are rejected unless their
/// coefficient is even.
FormalPolynomial reduce_mod2(const FormalPolynomial& p, const LiftPolicy& policy);

/// (p - target) reduced modulo 2 or 4. Empty means p == target mod modulus.
FormalPolynomial residual_mod(const FormalPolynomial& p, const FormalPolynomial& target, long modulus);

}  // namespace quadchow
