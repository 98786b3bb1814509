#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <symshuf/json_io.hpp>

namespace {

using namespace symshuf;

std::vector<int> parse_content(const std::string& s, int n) {
    std::vector<int> content;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) content.push_back(std::stoi(cell));
    std::sort(content.rbegin(), content.rend());
    int total = std::accumulate(content.begin(), content.end(), 0);
    if (content.empty() || total != n)
        throw CLI::ValidationError("--content", "multiplicities must sum to n");
    for (int c : content)
        if (c < 1) throw CLI::ValidationError("--content", "multiplicities must be positive");
    return content;
}

// Exact rational from a decimal string such as "0.25" or "1/3".
Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    // Strip leading zeros: cpp_int would otherwise read "025" as octal.
    size_t first = digits.find_first_not_of('0');
    digits = (first == std::string::npos) ? "0" : digits.substr(first);
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rat(Int(digits), den);
}

void print_report(const SpectrumReport& rep, const std::string& format) {
    if (format == "table") {
        std::cout << "value multiplicity\n";
        for (auto& e : rep.eigenvalues)
            std::cout << e.value << " " << e.multiplicity << "\n";
    } else {
        std::cout << report_to_json(rep).dump(2) << "\n";
    }
}

std::string partition_label(const Partition& p) {
    return p.empty() ? "()" : p.to_string();
}

int cmd_table(const std::string& id) {
    if (id == "3.1") {
        for (auto& e : nu_spectrum(4, 1).eigenvalues)
            std::cout << e.value << " " << e.multiplicity << "\n";
    } else if (id == "3.2") {
        // k = 1 eigenvalues at n = 4 from horizontal strips lambda/mu with a
        // desarrangement-tableau count attached to mu.
        for (const Partition& lam : partitions_of(4)) {
            Int f = syt_count(lam);
            for (int inner_size = 0; inner_size <= 4; ++inner_size) {
                for (const Partition& mu : partitions_of(inner_size)) {
                    bool fits = mu.rows() <= lam.rows();
                    for (int r = 1; fits && r <= mu.rows(); ++r) fits = mu.row(r) <= lam.row(r);
                    if (!fits || !is_horizontal_strip(SkewShape(lam, mu))) continue;
                    Int d = desarrangement_count(mu);
                    if (d == 0) continue;
                    std::cout << "lambda=" << partition_label(lam) << " mu=" << partition_label(mu)
                              << " eig=" << skew_eigenvalue(SkewShape(lam, mu))
                              << " mult=" << f * d << "\n";
                }
            }
        }
    } else if (id == "3.5") {
        Partition mu({2, 2});
        for (const Partition& lam : partitions_of(4)) {
            Int k22 = kostka(lam, mu);
            if (k22 == 0) continue;
            for (const StandardTableau& t : enumerate_syt(lam))
                std::cout << "t=" << t.to_string() << " v2=" << nu_eigenvalue(t, 2)
                          << " kostka=" << k22 << "\n";
        }
    } else if (id == "3.6") {
        for (int n = 2; n <= 4; ++n)
            for (const Partition& lam : partitions_of(n))
                for (const StandardTableau& t : enumerate_syt(lam))
                    for (int k = 1; k <= tableau_type(t); ++k)
                        std::cout << "n=" << n << " t=" << t.to_string() << " k=" << k
                                  << " bound=" << nu_eigenvalue_upper_bound(t, k)
                                  << " value=" << nu_eigenvalue(t, k) << "\n";
    } else if (id == "5.1") {
        for (int n = 2; n <= 8; ++n) {
            std::cout << "n=" << n << ":";
            for (int k = 0; 2 * k <= n; ++k)
                std::cout << " " << gamma_eigenvalue(Partition({n}), k, n);
            std::cout << "\n";
        }
    } else if (id == "char-3" || id == "char-4") {
        int n = (id == "char-3") ? 3 : 4;
        auto shapes = partitions_of(n);
        std::cout << "classes:";
        for (auto& mu : shapes) std::cout << " " << partition_label(mu);
        std::cout << "\n";
        for (auto& lam : shapes) {
            std::cout << partition_label(lam) << ":";
            for (auto& mu : shapes) std::cout << " " << character(lam, mu);
            std::cout << "\n";
        }
    } else {
        std::cerr << "unknown table id: " << id << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra of symmetrized shuffling operators"};
    app.require_subcommand(1);

    std::string family = "nu", content_str, format = "json", table_id, out_file, threshold_str;
    int n = 0, k = 0, conj_id = 0, n_max = 0;
    bool rank_only = false;

    auto add_matrix_flags = [&](CLI::App* cmd, bool with_content = true) {
        cmd->add_option("--family", family)->check(CLI::IsMember({"nu", "gamma"}))->required();
        cmd->add_option("--n", n)->required();
        cmd->add_option("--k", k)->required();
        if (with_content) cmd->add_option("--content", content_str);
    };

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
    add_matrix_flags(spectrum);
    spectrum->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* verify = app.add_subcommand("verify", "certify the spectrum against the exact matrix");
    add_matrix_flags(verify);
    verify->add_flag("--rank-only", rank_only);

    auto* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("--id", table_id)->required();

    auto* conjecture = app.add_subcommand("conjecture", "scan a conjecture for violations");
    conjecture->add_option("--id", conj_id)->required();
    conjecture->add_option("--n-max", n_max)->required();

    auto* mixing = app.add_subcommand("mixing", "total-variation bound and mixing time");
    add_matrix_flags(mixing, false);
    mixing->add_option("--threshold", threshold_str)->required();

    auto* matrix = app.add_subcommand("matrix", "dump the operator matrix as CSV");
    add_matrix_flags(matrix);
    matrix->add_option("--out", out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(spectrum)) {
            if (family == "gamma") {
                if (!content_str.empty()) {
                    std::cerr << "gamma spectra are supported on the permutation basis only\n";
                    return 2;
                }
                if (k < 0 || 2 * k > n) {
                    std::cerr << "gamma requires 0 <= 2k <= n\n";
                    return 2;
                }
                print_report(gamma_spectrum(n, k), format);
            } else {
                if (k < 0 || k > n) {
                    std::cerr << "nu requires 0 <= k <= n\n";
                    return 2;
                }
                auto content = content_str.empty() ? std::vector<int>(n, 1)
                                                   : parse_content(content_str, n);
                print_report(nu_spectrum(n, k, content), format);
            }
            return 0;
        }
        if (app.got_subcommand(verify)) {
            SpectrumReport rep;
            ExactMatrix M;
            if (family == "gamma") {
                if (k < 0 || 2 * k > n) {
                    std::cerr << "gamma requires 0 <= 2k <= n\n";
                    return 2;
                }
                M = gamma_matrix(n, k);
                if (M.dim > spectra_budget() && !rank_only) {
                    std::cerr << "dimension " << M.dim
                              << " exceeds the certification budget; pass --rank-only\n";
                    return 2;
                }
                rep = gamma_spectrum(n, k);  // measured and certified in one step
                std::cout << "gamma multiplicities are measured from the matrix, "
                             "not predicted by a formula\n";
            } else {
                if (k < 0 || k > n) {
                    std::cerr << "nu requires 0 <= k <= n\n";
                    return 2;
                }
                auto content = content_str.empty() ? std::vector<int>(n, 1)
                                                   : parse_content(content_str, n);
                M = nu_matrix(n, k, content);
                if (M.dim > spectra_budget() && !rank_only) {
                    std::cerr << "dimension " << M.dim
                              << " exceeds the certification budget; pass --rank-only\n";
                    return 2;
                }
                rep = nu_spectrum(n, k, content);
            }
            auto cert = certify_spectrum(M, rep.claim(), rank_only);
            if (!cert.ok) {
                std::cout << "FAIL (" << cert.method << "): " << cert.detail << "\n";
                return 1;
            }
            std::cout << "OK (" << cert.method << "): dimension " << M.dim << ", "
                      << rep.eigenvalues.size() << " distinct eigenvalues\n";
            return 0;
        }
        if (app.got_subcommand(table)) return cmd_table(table_id);
        if (app.got_subcommand(conjecture)) {
            if (n_max < 1) {
                std::cerr << "--n-max must be positive\n";
                return 2;
            }
            ConjectureReport rep;
            try {
                rep = check_conjecture(conj_id, n_max);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            std::cout << rep.violations.size() << " violations\n";
            for (auto& v : rep.violations) std::cout << "violation: " << v << "\n";
            for (auto& w : rep.witnesses) std::cout << "witness: " << w << "\n";
            return rep.passed() ? 0 : 1;
        }
        if (app.got_subcommand(mixing)) {
            if (family != "nu") {
                std::cerr << "mixing bounds are provided for the nu family only\n";
                return 2;
            }
            if (k < 0 || k > n) {
                std::cerr << "nu requires 0 <= k <= n\n";
                return 2;
            }
            Rat threshold = parse_rational(threshold_str);
            if (threshold <= 0 || threshold >= 1) {
                std::cerr << "--threshold must be in (0,1)\n";
                return 2;
            }
            auto s = normalized_nu_spectrum(n, k);
            long long estimate = mixing_time_estimate(s, threshold);
            for (long long step = 1; step <= estimate; ++step)
                std::cout << "s=" << step << " bound=" << tv_bound_decimal(s, step) << "\n";
            std::cout << "mixing_time_estimate=" << estimate << "\n";
            return 0;
        }
        if (app.got_subcommand(matrix)) {
            ExactMatrix M;
            if (family == "gamma") {
                if (k < 0 || 2 * k > n) {
                    std::cerr << "gamma requires 0 <= 2k <= n\n";
                    return 2;
                }
                M = content_str.empty() ? gamma_matrix(n, k)
                                        : gamma_matrix(n, k, parse_content(content_str, n));
            } else {
                if (k < 0 || k > n) {
                    std::cerr << "nu requires 0 <= k <= n\n";
                    return 2;
                }
                M = content_str.empty() ? nu_matrix(n, k)
                                        : nu_matrix(n, k, parse_content(content_str, n));
            }
            if (out_file.empty()) {
                std::cout << matrix_to_csv(M);
            } else {
                std::ofstream out(out_file);
                if (!out) {
                    std::cerr << "cannot open " << out_file << "\n";
                    return 2;
                }
                out << matrix_to_csv(M);
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
