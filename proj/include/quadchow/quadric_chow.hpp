#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quadchow/arith.hpp"

namespace quadchow {

/// Integral value of l_{n/2} * l_{n/2} for even n. The mod-2 value is forced
/// by S^{n/2}(l_{n/2}) = l_{n/2}^2; the opposite choice exists only to show
/// that no verdict depends on it.
enum class MiddleSquare { Forced, Opposite };

/// Split smooth projective quadric of dimension n, modeled on the basis
/// h^0..h^half, l_0..l_half.
struct QuadricRing {
    int n = 1;
    MiddleSquare middle = MiddleSquare::Forced;

    QuadricRing() = default;
    explicit QuadricRing(int dim, MiddleSquare convention = MiddleSquare::Forced);

    int half() const { return n / 2; }
    bool operator==(const QuadricRing&) const = default;
};

enum class BasisKind { H, L };

struct QuadricBasisClass {
    BasisKind kind = BasisKind::H;
    int index = 0;

    static QuadricBasisClass h(int k) { return {BasisKind::H, k}; }
    static QuadricBasisClass l(int i) { return {BasisKind::L, i}; }

    int codim(const QuadricRing& ring) const { return kind == BasisKind::H ? index : ring.n - index; }
    std::string to_string() const;

    auto operator<=>(const QuadricBasisClass&) const = default;
};

/// All basis classes of the ring, h-powers first.
std::vector<QuadricBasisClass> basis(const QuadricRing& ring);

/// Homogeneous integer combination of basis classes.
class QuadricCycle {
public:
    using Terms = std::map<QuadricBasisClass, BigInt>;

    QuadricCycle(QuadricRing ring, int codim) : ring_(ring), codim_(codim) {}
    QuadricCycle(QuadricRing ring, QuadricBasisClass c, BigInt coeff = 1);

    const QuadricRing& ring() const { return ring_; }
    int codim() const { return codim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(const QuadricBasisClass& c) const;

    void add(const QuadricBasisClass& c, const BigInt& coeff);
    QuadricCycle& operator+=(const QuadricCycle& o);
    QuadricCycle& operator*=(const BigInt& s);
    QuadricCycle reduced_mod2() const;

    std::string to_string() const;
    bool operator==(const QuadricCycle& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

private:
    QuadricRing ring_;
    int codim_;
    Terms terms_;
};

QuadricCycle operator+(QuadricCycle a, const QuadricCycle& b);
QuadricCycle operator*(const BigInt& s, QuadricCycle c);

/// h^k in basis form: h^k for k <= half, 2 l_{n-k} for half < k <= n, 0 above n.
QuadricCycle reduce_h_power(const QuadricRing& ring, int k);

QuadricCycle mul(const QuadricCycle& a, const QuadricCycle& b);
QuadricCycle mul(const QuadricRing& ring, const QuadricBasisClass& a, const QuadricBasisClass& b);

/// Coefficient of l_0.
BigInt degree(const QuadricCycle& c);

/// S^a on Ch(Q), coefficients in {0, 1}.
QuadricCycle steenrod_sq(const QuadricRing& ring, int a, const QuadricBasisClass& c);

/// Quadric-side Steenrod square used by the Cartan formula. Swappable so the
/// harness can inject a mutated binomial.
using QuadricSteenrod = std::function<QuadricCycle(const QuadricRing&, int, const QuadricBasisClass&)>;

/// Total Steenrod square S = sum_a S^a of a mod-2 cycle, grouped by codimension.
std::map<int, QuadricCycle> total_steenrod(const QuadricCycle& c);

/// c(-T_P) for a smooth quadric P of dimension d: the series (1+2h)(1+h)^{-(d+2)}
/// truncated at degree d, and each c_i as a cycle on P.
struct ChernClasses {
    TruncatedSeries series;
    std::vector<QuadricCycle> classes;
};

ChernClasses chern_neg_tangent(int d, MiddleSquare middle = MiddleSquare::Forced);

/// Push forward along a smooth subquadric P of dimension d <= n.
QuadricCycle pushforward_embedding(const QuadricRing& sub, const QuadricRing& ambient, const QuadricCycle& c);

/// n = 2^t - 1 + s with 0 <= s < 2^t.
struct SubquadricDim {
    int t = 0;
    int d = 0;
};

SubquadricDim subquadric_dim(int n);

}  // namespace quadchow
