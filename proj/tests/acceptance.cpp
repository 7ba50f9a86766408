// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "quadchow/verify.hpp"

using namespace quadchow;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::vector<VerificationReport> run(std::set<std::string> checks, Range n, Range j, CheckOptions opts = {})
{
    SweepConfig cfg;
    cfg.n = n;
    cfg.j = j;
    cfg.checks = std::move(checks);
    cfg.options = opts;
    return sweep(cfg);
}

Outcome summarize(const std::vector<VerificationReport>& reps)
{
    std::size_t passed = 0;
    std::string first_fail;
    for (const auto& r : reps) {
        if (r.passed())
            ++passed;
        else if (first_fail.empty())
            first_fail = " first failure " + r.check + " (" + std::to_string(r.params.n) + "," +
                         std::to_string(r.params.m) + "," + std::to_string(r.params.j) + ")";
    }
    return {passed == reps.size() && !reps.empty(),
            std::to_string(passed) + "/" + std::to_string(reps.size()) + first_fail};
}

Outcome theorem_tuples(const std::string& check)
{
    // j <= m <= 20 allows j up to 20
    return summarize(run({check, "degree"}, {1, 24}, {0, 20}));
}

Outcome prop_and_case_split()
{
    auto out = summarize(run({"prop21", "lemma22"}, {1, 24}, {0, 8}));
    int split_bad = 0;
    for (int n = 1; n <= 24; ++n)
        for (int j = 0; j <= 8; ++j) {
            const int m = (n + 1) / 2 + j;
            auto yz = FormalPolynomial::monomial({FormalSymbol::yint(m), FormalSymbol::zint(j)}, 2);
            const bool empty = residual_mod(lemma_2_2_total(n, j), yz, 4).is_zero();
            if (empty != ((m - j) % 2 == 1))
                ++split_bad;
        }
    out.ok = out.ok && split_bad == 0;
    out.detail += ", case split mismatches " + std::to_string(split_bad);
    return out;
}

Outcome chern()
{
    std::vector<VerificationReport> reps;
    for (int d : {1, 3, 7, 15, 31})
        reps.push_back(verify_chern(d));
    return summarize(reps);
}

Outcome coeffsum()
{
    SweepConfig cfg;
    cfg.checks = {"coeffsum"};
    cfg.coeffsum_k_max = 10;
    return summarize(sweep(cfg));
}

Outcome wu()
{
    SweepConfig cfg;
    cfg.checks = {"wu"};
    cfg.wu_d_max = 7;
    cfg.wu_r_max = 10;
    return summarize(sweep(cfg));
}

Outcome axioms()
{
    long bad = 0, checked = 0;
    auto expect = [&](bool cond) {
        ++checked;
        bad += cond ? 0 : 1;
    };
    for (long a = 0; a <= 64; ++a)
        for (long k = 0; k <= 64; ++k)
            expect(binom_mod2(a, k) == (mod_floor(binom_exact(a, k), 2) == 1));
    for (auto conv : {MiddleSquare::Forced, MiddleSquare::Opposite})
        for (int n = 1; n <= 12; ++n) {
            const QuadricRing ring(n, conv);
            const auto bs = basis(ring);
            for (const auto& a : bs) {
                const QuadricCycle ca(ring, a);
                const int c = a.codim(ring);
                expect(steenrod_sq(ring, 0, a) == ca);
                expect(steenrod_sq(ring, c + 1, a).is_zero());
                // the opposite middle square breaks S^c(u) = u^2, which is what rules it out
                if (conv == MiddleSquare::Forced)
                    expect(steenrod_sq(ring, c, a) == mul(ring, a, a).reduced_mod2());
                for (const auto& b : bs) {
                    const QuadricCycle cb(ring, b);
                    expect(mul(ring, a, b) == mul(ring, b, a));
                    for (const auto& e : bs)
                        expect(mul(mul(ring, a, b), QuadricCycle(ring, e)) == mul(ca, mul(ring, b, e)));
                    // Cartan formula degree by degree
                    const auto lhs = total_steenrod(mul(ring, a, b));
                    for (int r = 0; r <= c + b.codim(ring); ++r) {
                        QuadricCycle rhs(ring, c + b.codim(ring) + r);
                        for (int i = 0; i <= r; ++i)
                            rhs += mul(steenrod_sq(ring, i, a), steenrod_sq(ring, r - i, b));
                        rhs = rhs.reduced_mod2();
                        auto it = lhs.find(c + b.codim(ring) + r);
                        expect(it == lhs.end() ? rhs.is_zero() : it->second == rhs);
                    }
                }
            }
        }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked)};
}

Outcome conventions_and_mutation()
{
    const std::set<std::string> all{"thm1", "lemma13", "prop21", "lemma22", "thm24", "degree"};
    CheckOptions opp;
    opp.middle = MiddleSquare::Opposite;
    const auto forced = run(all, {1, 24}, {0, 8});
    const auto opposite = run(all, {1, 24}, {0, 8}, opp);
    std::size_t diff = forced.size() == opposite.size() ? 0 : 1;
    for (std::size_t i = 0; i < std::min(forced.size(), opposite.size()); ++i)
        if (forced[i].status != opposite[i].status)
            ++diff;

    CheckOptions mut;
    mut.mutate_binomial = true;
    const auto mutated = run({"thm1"}, {1, 8}, {0, 2}, mut);
    std::size_t caught = 0;
    for (const auto& r : mutated)
        caught += r.passed() ? 0 : 1;

    CheckOptions shifted;
    shifted.ladder_shift = 1;
    const bool ladder_caught = !verify_lemma_1_3(ParamTuple::make(4, 3, 2), shifted).passed();

    return {diff == 0 && caught > 0 && ladder_caught,
            "convention verdict differences " + std::to_string(diff) + ", mutation failures " +
                std::to_string(caught) + "/" + std::to_string(mutated.size()) + ", ladder shift " +
                (ladder_caught ? "caught" : "missed")};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 thm1 mod-4 congruence, n<=24, j<=m<=20", [] { return theorem_tuples("thm1"); }},
        {"2 lemma13 ladder vanishing on the same tuples", [] { return theorem_tuples("lemma13"); }},
        {"3 prop21 / lemma22 and parity split", prop_and_case_split},
        {"4 thm24 pr_*(xbar h^[n/2]) = z^j", [] { return summarize(run({"thm24"}, {1, 24}, {0, 8})); }},
        {"5 Chern classes of -T_P, d in {1,3,7,15,31}", chern},
        {"6 coefficient sum, k<=10", coeffsum},
        {"7 Wu consistency, d<=7, r<=10", wu},
        {"8 quadric axioms n<=12, Lucas rule <=64", axioms},
        {"9 convention independence and mutation detection", conventions_and_mutation},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
