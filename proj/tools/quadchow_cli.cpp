// Command-line front end for the verification harness.
//
//   quadchow thm1 --n 5 --m 2 --j 0
//   quadchow sweep --n-range 1..24 --j-range 0..8 --format markdown --out report.md
//
// Exit status is 0 iff every reported check passes.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "quadchow/report.hpp"
#include "quadchow/verify.hpp"

using namespace quadchow;

namespace {

struct Args {
    int n = 1;
    int m = 0;
    int j = 0;
    int d = 1;
    int r = 0;
    int k = 0;
    std::optional<std::string> n_range;
    std::optional<std::string> j_range;
    int m_max = 20;
    std::vector<std::string> checks;
    unsigned threads = 0;
    std::string format = "json";
    std::string out;
    bool mutation = false;
    bool opposite_middle = false;
};

int emit(const std::vector<VerificationReport>& reports, const Args& args)
{
    const std::string text =
        args.format == "markdown" ? to_markdown(reports) : to_json(reports).dump(2) + "\n";
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(args.out);
        if (!f) {
            std::cerr << "cannot write " << args.out << "\n";
            return 2;
        }
        f << text;
    }
    return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chow-ring and Steenrod-square congruence checker for split quadrics"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", args.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--out", args.out, "write the report to PATH instead of stdout");
        sub->add_flag("--mutation-test", args.mutation, "flip binom(0,1) in the quadric Steenrod squares");
        sub->add_flag("--opposite-middle", args.opposite_middle, "use the opposite l_{n/2}^2 convention");
    };
    auto add_nmj = [&](CLI::App* sub, bool with_m) {
        sub->add_option("--n", args.n, "quadric dimension")->required();
        if (with_m)
            sub->add_option("--m", args.m, "codimension of the cycle")->required();
        sub->add_option("--j", args.j, "Steenrod degree")->required();
        add_common(sub);
    };

    auto* thm1 = app.add_subcommand("thm1", "mod-4 congruence for pr_*(sum h^{n-d+i} s^{d+j-i})");
    add_nmj(thm1, true);
    auto* lemma13 = app.add_subcommand("lemma13", "vanishing of pr_*(h^{n-d+i} B~_i)");
    add_nmj(lemma13, true);
    auto* prop21 = app.add_subcommand("prop21", "boundary congruence, m = floor((n+1)/2) + j");
    add_nmj(prop21, false);
    auto* lemma22 = app.add_subcommand("lemma22", "mod-4 value of pr_*(h^{n+j-m} s^m)");
    add_nmj(lemma22, false);
    auto* thm24 = app.add_subcommand("thm24", "pr_*(xbar h^{[n/2]}) = z^j");
    add_nmj(thm24, false);

    auto* wu = app.add_subcommand("wu", "Wu formula on P x Y for the subquadric of dimension d");
    wu->add_option("--d", args.d, "subquadric dimension")->required();
    wu->add_option("--r", args.r, "Steenrod degree")->required();
    add_common(wu);

    auto* coeffsum = app.add_subcommand("coeffsum", "2 sum_i binom(k, d-i-k) = 2^{k+1}");
    coeffsum->add_option("--k", args.k)->required();
    coeffsum->add_option("--d", args.d)->required();
    coeffsum->add_option("--m", args.m)->required();
    coeffsum->add_option("--j", args.j)->required();
    add_common(coeffsum);

    auto* chern = app.add_subcommand("chern", "Chern classes of -T_P against binom(-d-2, i)");
    chern->add_option("--d", args.d)->required();
    add_common(chern);

    auto* sweep_cmd = app.add_subcommand("sweep", "run checks over parameter ranges");
    sweep_cmd->add_option("--n-range", args.n_range, "A..B (default 1..24)");
    sweep_cmd->add_option("--j-range", args.j_range, "A..B (default 0..8)");
    sweep_cmd->add_option("--m-max", args.m_max, "largest m for thm1/lemma13 tuples");
    sweep_cmd->add_option("--check", args.checks, "restrict to these checks (repeatable)");
    sweep_cmd->add_option("--threads", args.threads, "worker count, 0 = hardware");
    add_common(sweep_cmd);

    CLI11_PARSE(app, argc, argv);

    CheckOptions opts;
    opts.mutate_binomial = args.mutation;
    opts.middle = args.opposite_middle ? MiddleSquare::Opposite : MiddleSquare::Forced;

    try {
        std::vector<VerificationReport> reports;
        if (thm1->parsed())
            reports.push_back(verify_theorem_1_1(ParamTuple::make(args.n, args.m, args.j), opts));
        else if (lemma13->parsed())
            reports.push_back(verify_lemma_1_3(ParamTuple::make(args.n, args.m, args.j), opts));
        else if (prop21->parsed())
            reports.push_back(verify_prop_2_1(args.n, args.j, opts));
        else if (lemma22->parsed())
            reports.push_back(verify_lemma_2_2(args.n, args.j, opts));
        else if (thm24->parsed())
            reports.push_back(verify_theorem_2_4(args.n, args.j, opts));
        else if (wu->parsed())
            reports.push_back(verify_wu_consistency(args.d, args.r, opts));
        else if (coeffsum->parsed())
            reports.push_back(verify_coefficient_sum(args.k, args.d, args.m, args.j));
        else if (chern->parsed())
            reports.push_back(verify_chern(args.d));
        else {
            SweepConfig cfg;
            if (args.n_range)
                cfg.n = parse_range(*args.n_range);
            if (args.j_range)
                cfg.j = parse_range(*args.j_range);
            cfg.m_max = args.m_max;
            cfg.checks.insert(args.checks.begin(), args.checks.end());
            cfg.threads = args.threads;
            cfg.options = opts;
            reports = sweep(cfg);
        }
        return emit(reports, args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    }
}
