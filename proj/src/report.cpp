#include "quadchow/report.hpp"

#include <sstream>

namespace quadchow {

namespace {

nlohmann::ordered_json coeff_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

std::string residual_text(const VerificationReport& r)
{
    if (r.residual.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < r.residual.size(); ++i) {
        const auto& term = r.residual[i];
        if (i)
            out += " + ";
        out += term.coeff.get_str();
        for (const auto& s : term.monomial)
            out += " " + s;
    }
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json params{{"n", r.params.n}, {"m", r.params.m}, {"j", r.params.j},
                                  {"t", r.params.t}, {"d", r.params.d}};
    for (const auto& [k, v] : r.extra)
        params[k] = v;
    auto residual = nlohmann::ordered_json::array();
    for (const auto& term : r.residual)
        residual.push_back({{"coeff", coeff_json(term.coeff)}, {"monomial", term.monomial}});
    return {{"check", r.check},
            {"params", std::move(params)},
            {"status", r.passed() ? "pass" : "fail"},
            {"residual", std::move(residual)},
            {"duration_ms", r.duration_ms}};
}

nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

std::string to_markdown(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    std::string current;
    std::size_t passed = 0;
    for (const auto& r : reports) {
        if (r.check != current) {
            if (!current.empty())
                os << "\n";
            current = r.check;
            os << "## " << r.check << "\n\n";
            os << "| n | m | j | t | d | extra | status | residual | duration_ms |\n";
            os << "|---|---|---|---|---|---|---|---|---|\n";
        }
        std::string extra;
        for (const auto& [k, v] : r.extra)
            extra += (extra.empty() ? "" : ", ") + k + "=" + std::to_string(v);
        os << "| " << r.params.n << " | " << r.params.m << " | " << r.params.j << " | " << r.params.t << " | "
           << r.params.d << " | " << extra << " | " << (r.passed() ? "pass" : "fail") << " | `" << residual_text(r)
           << "` | " << r.duration_ms << " |\n";
        passed += r.passed() ? 1 : 0;
    }
    os << "\n**" << passed << " / " << reports.size() << " passed**\n";
    // Interpretation notes, one per check kind.
    std::string last;
    for (const auto& r : reports) {
        if (r.check == last || r.notes.empty() || r.check == "lemma22")
            continue;
        last = r.check;
        os << "\n- " << r.check << ": " << r.notes.front();
    }
    if (!last.empty())
        os << "\n";
    return os.str();
}

}  // namespace quadchow
