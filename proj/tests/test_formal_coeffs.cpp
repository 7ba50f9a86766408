#include <doctest.h>

#include <algorithm>
#include <random>

#include "quadchow/formal_coeffs.hpp"

using namespace quadchow;

namespace {

using S = FormalSymbol;

FormalPolynomial gen(const S& s, long c = 1)
{
    return FormalPolynomial::generator(s, c);
}

FormalPolynomial mono(Monomial m, long c = 1)
{
    return FormalPolynomial::monomial(std::move(m), c);
}

Monomial random_monomial(std::mt19937& rng, int max_codim)
{
    std::uniform_int_distribution<int> pick(0, 1), idx(0, 3);
    Monomial m;
    int codim = 0;
    while (true) {
        const int i = idx(rng);
        if (codim + i > max_codim || m.size() >= 4)
            break;
        m.push_back(pick(rng) ? S::ymod2(i) : S::zmod2(i));
        codim += i;
        if (pick(rng) == 0)
            break;
    }
    std::sort(m.begin(), m.end());
    return m;
}

bool positive_factors(const Monomial& m)
{
    return std::all_of(m.begin(), m.end(), [](const S& s) { return s.codim > 0; });
}

}  // namespace

TEST_CASE("symbol and monomial printing")
{
    CHECK(S::ymod2(3).to_string() == "y(3)");
    CHECK(S::zint(1).to_string() == "Z(1)");
    CHECK(S::eps(1, 1, 2).to_string() == "eps(1,1)");
    CHECK(S::gamma(2, 0, 4).to_string() == "gamma(2,0)[4]");
    CHECK(S::steenrod_of(S::zmod2(2), 1).to_string() == "S^1(z(2))");
    CHECK(S::steenrod_of(S::zmod2(2), 1).codim == 3);
    CHECK_THROWS_AS(S::steenrod_of(S::yint(2), 1), std::invalid_argument);
    CHECK(monomial_to_string({}) == "1");
}

TEST_CASE("poly_mul examples")
{
    CHECK(poly_mul(gen(S::yint(2)), gen(S::zint(1))) == mono({S::yint(2), S::zint(1)}));
    CHECK(poly_mul(gen(S::yint(2)), gen(S::zint(1))).codim() == 3);
    const auto sum = gen(S::yint(1)) + gen(S::zint(1));
    const auto sq = poly_mul(sum, sum);
    CHECK(sq.coeff({S::yint(1), S::zint(1)}) == 2);
    CHECK(sq.coeff({S::yint(1), S::yint(1)}) == 1);
    CHECK(poly_mul(FormalPolynomial::one(), sum) == sum);
}

TEST_CASE("negative codimension generators vanish")
{
    CHECK(gen(S::ymod2(-1)).is_zero());
    CHECK(mono({S::ymod2(2), S::zmod2(-1)}).is_zero());
    CHECK(gen(S::ymod2(0)) == FormalPolynomial::monomial({S::ymod2(0)}));
}

TEST_CASE("homogeneity is enforced")
{
    auto p = gen(S::yint(2));
    CHECK_THROWS_AS(p += gen(S::yint(3)), std::invalid_argument);
    FormalPolynomial q(2);
    CHECK_THROWS_AS(q.add({S::zint(1), S::yint(1)}, 1), std::invalid_argument);
}

TEST_CASE("formal_steenrod examples")
{
    CHECK(formal_steenrod(0, S::ymod2(3)) == gen(S::ymod2(3)));
    CHECK(formal_steenrod(4, S::ymod2(3)).is_zero());
    CHECK(formal_steenrod(3, S::ymod2(3)) == mono({S::ymod2(3), S::ymod2(3)}));
    CHECK(formal_steenrod(3, S::ymod2(3), TopSquare::Keep) == gen(S::steenrod_of(S::ymod2(3), 3)));
    CHECK(formal_steenrod(2, S::zmod2(3)) == gen(S::steenrod_of(S::zmod2(3), 2)));
    CHECK_THROWS_AS(formal_steenrod(1, S::yint(2)), std::invalid_argument);

    // S^1(y(1) z(1)) = y(1)^2 z(1) + y(1) z(1)^2
    const auto p = formal_steenrod(1, mono({S::ymod2(1), S::zmod2(1)}));
    FormalPolynomial want(3);
    want += mono({S::ymod2(1), S::ymod2(1), S::zmod2(1)});
    want += mono({S::ymod2(1), S::zmod2(1), S::zmod2(1)});
    CHECK(p == want);
    // coefficients are reduced mod 2
    CHECK(formal_steenrod(1, mono({S::ymod2(1), S::ymod2(1)})).is_zero());
}

TEST_CASE("formal_steenrod is multiplicative")
{
    std::mt19937 rng(7331);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_monomial(rng, 4), b = random_monomial(rng, 4);
        const auto pa = mono(a), pb = mono(b), pab = poly_mul(pa, pb);
        CHECK(formal_steenrod(pab.codim() + 1, pab).is_zero());
        CHECK(formal_steenrod(0, pab) == pab);
        for (auto top : {TopSquare::Expand, TopSquare::Keep}) {
            for (int l = 0; l <= pab.codim() + 1; ++l) {
                FormalPolynomial rhs(pab.codim() + l);
                for (int i = 0; i <= l; ++i)
                    rhs += poly_mul(formal_steenrod(i, pa, top), formal_steenrod(l - i, pb, top));
                CHECK(formal_steenrod(l, pab, top) == rhs.reduced_mod(2));
            }
        }
        // top square is the square; y(0) is formal, not the unit
        if (!positive_factors(a) || !positive_factors(b))
            continue;
        CHECK(formal_steenrod(pab.codim(), pab) == poly_mul(pab, pab).reduced_mod(2));
    }
}

TEST_CASE("eps_lift and delta_lift normalization")
{
    const LiftPolicy pol{5, 2, 0, false};
    CHECK(eps_lift(pol, 2, 0) == gen(S::yint(2)));
    CHECK(eps_lift(pol, 1, 1) == gen(S::eps(1, 1, 2)));
    CHECK(eps_lift(pol, 1, 2).is_zero());
    CHECK(delta_lift(pol, 1, 0) == gen(S::zint(1)));

    const LiftPolicy mid{4, 3, 1, true};
    // k = (m-j)/2 = 1, l = (m+j)/2 = 2
    CHECK(eps_lift(mid, 2, 2) == mono({S::yint(2), S::yint(2)}));
    const LiftPolicy off{4, 3, 1, false};
    CHECK(eps_lift(off, 2, 2) == gen(S::eps(1, 2, 4)));
    const LiftPolicy odd{4, 2, 1, true};
    CHECK(eps_lift(odd, 1, 1) == gen(S::eps(1, 1, 2)));
}

TEST_CASE("lift then reduce is the identity mod 2")
{
    std::mt19937 rng(4242);
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= 6; ++m)
            for (int j = 0; j <= m; ++j) {
                const LiftPolicy pol{n, m, j, false};
                for (int trial = 0; trial < 5; ++trial) {
                    const auto base = mono(random_monomial(rng, 6));
                    for (int l = 0; l <= 2; ++l) {
                        const auto p = formal_steenrod(l, base, TopSquare::Keep);
                        CHECK(reduce_mod2(lift(p, pol), pol) == p);
                    }
                }
            }
    // midpoint lift Y^2 reduces to y^2, the expanded top square
    const LiftPolicy mid{4, 3, 1, true};
    const auto top = gen(S::steenrod_of(S::ymod2(2), 2));
    CHECK(reduce_mod2(lift(top, mid), mid) == formal_steenrod(2, S::ymod2(2)));
}

TEST_CASE("reduce_mod2 rejects odd gamma")
{
    const LiftPolicy pol{5, 2, 0, false};
    CHECK_THROWS_AS(reduce_mod2(gen(S::gamma(1, 0, 2)), pol), std::domain_error);
    CHECK(reduce_mod2(gen(S::gamma(1, 0, 2), 2), pol).is_zero());
    CHECK(reduce_mod2(gen(S::eps(1, 1, 2)), pol) == gen(S::steenrod_of(S::ymod2(1), 1)));
}

TEST_CASE("residual_mod examples")
{
    const auto y2 = gen(S::yint(2));
    CHECK(residual_mod(2 * y2, 2 * y2, 4).is_zero());
    CHECK(residual_mod(6 * y2, 2 * y2, 4).is_zero());
    CHECK(residual_mod(4 * y2, 2 * y2, 4) == 2 * y2);
    CHECK(residual_mod(y2 + 2 * gen(S::eps(1, 1, 2)), y2, 2).is_zero());
    CHECK_THROWS_AS(residual_mod(y2, gen(S::yint(3)), 4), std::invalid_argument);
    CHECK_THROWS_AS(residual_mod(y2, y2, 3), std::invalid_argument);
    CHECK(residual_mod(FormalPolynomial(7), y2, 4) == 3 * y2);
}
