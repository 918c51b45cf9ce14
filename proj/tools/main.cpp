#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhowe/dualities.hpp"
#include "qhowe/spingroup.hpp"

using namespace qhowe;

namespace {

/// Prints reports in the selected format; returns the process exit code
/// (0 all verified, 1 otherwise).
int emit(const std::vector<VerificationReport>& reports, const std::string& format) {
    bool ok = true;
    if (format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < reports.size(); ++i)
            std::cout << (i ? "," : "") << "\n" << reports[i].to_json();
        std::cout << "\n]\n";
    } else if (format == "csv") {
        std::cout << VerificationReport::csv_header() << "\n";
        for (const auto& r : reports) std::cout << r.to_csv_row() << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
    }
    for (const auto& r : reports) ok = ok && r.verified;
    return ok ? 0 : 1;
}

StrictPartition parse_lambda(const std::string& text) {
    return StrictPartition::parse(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for q(n) dualities and Schur Q-functions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string lambda_text, word;
    int m = 0, n = 0, k = 0, vars = 0, degree = -1, criterion = 0;
    bool tamper = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_flag("--tamper", tamper)->group(""); // hidden negative control
    };

    auto* qfun = app.add_subcommand("qfun", "Print the Schur Q-function Q_lambda");
    qfun->add_option("--lambda", lambda_text, "Strict partition a,b,c")->required();
    qfun->add_option("--vars", vars, "Variable count")->required()->check(CLI::PositiveNumber);
    qfun->add_option("--degree", degree, "Truncation degree (default |lambda|)");
    add_common(qfun);

    auto* cauchy = app.add_subcommand("cauchy-check", "Cauchy identity for Q-functions");
    cauchy->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    cauchy->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    cauchy->add_option("--degree", degree, "Degree bound")->required()->check(CLI::PositiveNumber);
    add_common(cauchy);

    auto* serg = app.add_subcommand("sergeev-verify", "Sergeev duality on (C^{m|m})^k");
    serg->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    serg->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_common(serg);

    auto* howe = app.add_subcommand("howe-verify", "(q(m), q(n)) Howe duality on S^k");
    howe->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    howe->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    howe->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_common(howe);

    auto* sympow = app.add_subcommand("sympower-verify", "S^k(C^{m|m}) irreducibility");
    sympow->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    sympow->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_common(sympow);

    auto* zerow = app.add_subcommand("zero-weight", "Zero-weight space as T^lambda");
    zerow->add_option("--lambda", lambda_text)->required();
    add_common(zerow);

    auto* reg = app.add_subcommand("regular-verify", "Regular representation of H~_n");
    reg->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    add_common(reg);

    auto* hom = app.add_subcommand("hom-dim", "Graded endomorphisms of U^lambda");
    hom->add_option("--lambda", lambda_text)->required();
    hom->add_option("--m", m, "Rank (default 2)");
    add_common(hom);

    auto* center = app.add_subcommand("center-check", "Adjoint invariants of S^k(q(m))");
    center->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    center->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_common(center);

    auto* dims = app.add_subcommand("dims", "dim U^lambda_m and dim T^lambda");
    dims->add_option("--lambda", lambda_text)->required();
    dims->add_option("--m", m, "Rank (default l(lambda))");
    add_common(dims);

    auto* grid = app.add_subcommand("grid", "Run the acceptance grid");
    grid->add_option("--criterion", criterion, "Single criterion 1..12 (default: all)")
        ->check(CLI::Range(0, 12));
    add_common(grid);

    auto* mult = app.add_subcommand("spingroup-mult", "Normal form of a word in H~_k");
    mult->add_option("word", word, "Product like a1*a2*s1")->required();
    mult->add_option("--k", k, "Strand count (default: inferred)");
    add_common(mult);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    const VerifyOptions opts{.tamper = tamper};
    try {
        if (*qfun) {
            StrictPartition lam = parse_lambda(lambda_text);
            if (degree < 0) degree = static_cast<int>(lam.size());
            TruncatedPolynomial q = schur_q(lam, vars, degree);
            if (format == "json") {
                nlohmann::json out{{"lambda", lam.to_string()},
                                   {"vars", vars},
                                   {"degree", degree},
                                   {"qfun", q.to_string()}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << q.to_string() << "\n";
            }
            return 0;
        }
        if (*dims) {
            StrictPartition lam = parse_lambda(lambda_text);
            if (m == 0) m = lam.length();
            if (lam.length() > m) throw std::invalid_argument("dims: l(lambda) > m");
            const long du = dim_U(lam, m);
            const long dt = dim_T(lam, static_cast<int>(lam.size()));
            if (format == "json") {
                nlohmann::json out{{"lambda", lam.to_string()},
                                   {"m", m},
                                   {"dim_U", du},
                                   {"dim_T", dt}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "dim_U(" << lam.to_string() << ", " << m << ") = " << du << "\n"
                          << "dim_T(" << lam.to_string() << ") = " << dt << "\n";
            }
            return 0;
        }
        if (*mult) {
            if (k == 0)
                for (std::size_t i = 0; i < word.size(); ++i)
                    if (word[i] == 'a' || word[i] == 's') {
                        int idx = std::atoi(word.c_str() + i + 1);
                        k = std::max(k, word[i] == 's' ? idx + 1 : idx);
                    }
            if (k <= 0) throw std::invalid_argument("spingroup-mult: cannot infer k");
            SpinGroupElement g = parse_spin_element(k, word);
            if (format == "json") {
                nlohmann::json out{{"k", k}, {"word", word}, {"normal_form", g.to_string()}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << g.to_string() << "\n";
            }
            return 0;
        }

        std::vector<VerificationReport> reports;
        if (*cauchy) reports.push_back(cauchy_check(m, n, degree, opts));
        if (*serg) reports.push_back(verify_sergeev(m, k, opts));
        if (*howe) reports.push_back(verify_howe(m, n, k, opts));
        if (*sympow) reports.push_back(verify_symmetric_power(m, k, opts));
        if (*zerow) reports.push_back(verify_zero_weight(parse_lambda(lambda_text), opts));
        if (*reg) reports.push_back(verify_regular(n, opts));
        if (*hom) reports.push_back(verify_hom(parse_lambda(lambda_text), m ? m : 2, opts));
        if (*center) reports.push_back(center_check(m, k, opts));
        if (*grid) reports = acceptance_grid(criterion);
        return emit(reports, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
