#pragma once

#include <map>
#include <string>
#include <utility>

#include "quadchow/formal_coeffs.hpp"
#include "quadchow/quadric_chow.hpp"

namespace quadchow {

enum class Modulus { Integral, Mod2 };

/// Element of CH(Q x Y) (or Ch, when tagged Mod2): a sum of external
/// products quadric class x monomial.
class TwistedCycle {
public:
    using Key = std::pair<QuadricBasisClass, Monomial>;
    using Terms = std::map<Key, BigInt>;

    TwistedCycle(QuadricRing ring, int codim, Modulus modulus = Modulus::Integral)
        : ring_(ring), codim_(codim), modulus_(modulus)
    {
    }

    const QuadricRing& ring() const { return ring_; }
    int codim() const { return codim_; }
    Modulus modulus() const { return modulus_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(const QuadricBasisClass& q, const Monomial& m) const;

    void add(const QuadricBasisClass& q, const Monomial& m, const BigInt& coeff);
    TwistedCycle& operator+=(const TwistedCycle& o);
    TwistedCycle& operator*=(const BigInt& s);

    TwistedCycle reduced_mod2() const;
    /// Termwise integral lift of the formal factors (quadric factors are already integral).
    TwistedCycle lifted(const LiftPolicy& policy) const;
    /// Mod-2 class of an integral cycle.
    TwistedCycle reduced_mod2(const LiftPolicy& policy) const;

    std::string to_string() const;
    bool operator==(const TwistedCycle& o) const
    {
        return ring_ == o.ring_ && modulus_ == o.modulus_ && terms_ == o.terms_;
    }

private:
    QuadricRing ring_;
    int codim_;
    Modulus modulus_;
    Terms terms_;
};

TwistedCycle operator+(TwistedCycle a, const TwistedCycle& b);
TwistedCycle operator*(const BigInt& s, TwistedCycle c);

TwistedCycle external(const QuadricCycle& q, const FormalPolynomial& p, Modulus modulus = Modulus::Integral);

/// Ring product (q1 x u1)(q2 x u2) = (q1 q2) x (u1 u2).
TwistedCycle twisted_mul(const TwistedCycle& a, const TwistedCycle& b);

/// S^r on a mod-2 cycle through the Cartan formula.
TwistedCycle cartan_sq(int r, const TwistedCycle& c, TopSquare top = TopSquare::Expand,
                       const QuadricSteenrod& quadric_sq = steenrod_sq);

/// Projection Q x Y -> Y: keeps the l_0 coefficients, lowers codim by n.
FormalPolynomial pr_star(const TwistedCycle& c);

enum class XbarVariant {
    Thm1,  // m < n/2 + j
    Prop2  // m = floor((n+1)/2) + j
};

/// sum_k h^k x y^{m-k} + sum_{k=0..j} l_{half-k} x z^{m+half-k-n}, dropping
/// terms whose Y-factor would have negative codimension.
TwistedCycle generic_xbar(const QuadricRing& ring, int m, int j, XbarVariant variant);
TwistedCycle integral_xbar(const QuadricRing& ring, int m, int j, XbarVariant variant = XbarVariant::Prop2);

/// Throws std::invalid_argument naming the violated inequality.
void check_xbar_params(int n, int m, int j, XbarVariant variant);

}  // namespace quadchow
