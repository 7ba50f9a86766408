#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "quadchow/twisted_cycles.hpp"

namespace quadchow {

struct ParamTuple {
    int n = 1;
    int m = 0;
    int j = 0;
    int t = 0;
    int d = 0;

    /// Fills t and d from n = 2^t - 1 + s.
    static ParamTuple make(int n, int m, int j);
    int s_remainder() const { return n - d; }
};

struct ResidualTerm {
    BigInt coeff;
    std::vector<std::string> monomial;
};

enum class Status { Pass, Fail };

struct VerificationReport {
    std::string check;
    ParamTuple params;
    /// Parameters outside (n, m, j, t, d): "r" for wu, "k" for coeffsum.
    std::map<std::string, int> extra;
    Status status = Status::Pass;
    std::vector<ResidualTerm> residual;
    long duration_ms = 0;
    std::vector<std::string> notes;

    bool passed() const { return status == Status::Pass; }
};

struct CheckOptions {
    MiddleSquare middle = MiddleSquare::Forced;
    /// Renames the injected gamma symbols; no verdict may depend on it.
    int gamma_salt = 0;
    /// Mutation-test mode: S^1(h^0) = h^1, i.e. binom(0, 1) flipped to 1.
    bool mutate_binomial = false;
    /// Corrupts the explicit B~_i ladder by shifting the l-index.
    int ladder_shift = 0;
};

/// Quadric Steenrod square honoring CheckOptions::mutate_binomial.
QuadricSteenrod quadric_steenrod_for(const CheckOptions& opts);

/// True iff (n, m, j) satisfies n >= 1, 0 <= j <= m and m < n/2 + j.
bool thm1_admissible(int n, int m, int j);

/// The generic integral cycle 2*gamma_i spread over every basis class of the ring.
TwistedCycle gamma_cycle(const QuadricRing& ring, int i, int codim, int salt);

VerificationReport verify_theorem_1_1(const ParamTuple& p, const CheckOptions& opts = {});
VerificationReport verify_lemma_1_3(const ParamTuple& p, const CheckOptions& opts = {});
VerificationReport verify_degree_vanishing(const ParamTuple& p, const CheckOptions& opts = {});
VerificationReport verify_wu_consistency(int d, int r, const CheckOptions& opts = {});
VerificationReport verify_coefficient_sum(int k, int d, int m, int j);
VerificationReport verify_lemma_2_2(int n, int j, const CheckOptions& opts = {});
VerificationReport verify_prop_2_1(int n, int j, const CheckOptions& opts = {});
VerificationReport verify_theorem_2_4(int n, int j, const CheckOptions& opts = {});
VerificationReport verify_chern(int d);

/// Raw pushforward totals, exposed for the case-split and independence checks.
FormalPolynomial theorem_1_1_total(const ParamTuple& p, const CheckOptions& opts = {});
FormalPolynomial lemma_2_2_total(int n, int j, const CheckOptions& opts = {});
FormalPolynomial prop_2_1_total(int n, int j, const CheckOptions& opts = {});

struct Range {
    int lo = 0;
    int hi = -1;  // inclusive; hi < lo is empty
    bool empty() const { return hi < lo; }
};

/// Parses "A..B".
Range parse_range(const std::string& text);

struct SweepConfig {
    Range n{1, 24};
    Range j{0, 8};
    int m_max = 20;
    std::set<std::string> checks;  // empty selects every check
    int wu_d_max = 7;
    int wu_r_max = 10;
    int coeffsum_k_max = 10;
    unsigned threads = 0;  // 0 picks hardware concurrency
    CheckOptions options;
};

const std::vector<std::string>& all_check_names();

/// Runs every selected check on every admissible tuple. Output is sorted by
/// (check, n, m, j, extra) regardless of scheduling.
std::vector<VerificationReport> sweep(const SweepConfig& config);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace quadchow
