// Acceptance gate: one pass/fail line per criterion. argv[1] is the CLI
// binary, argv[2] the golden-file directory.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <symshuf/json_io.hpp>
#include <symshuf/markov.hpp>

using namespace symshuf;

namespace {

std::string cli_path, golden_dir;
int failures = 0;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = cli_path + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

void report(int id, bool ok, const std::string& note = "") {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::map<Int, Int> as_map(const SpectrumReport& rep) {
    std::map<Int, Int> m;
    for (auto& e : rep.eigenvalues) m[e.value] = e.multiplicity;
    return m;
}

std::map<Int, Int> sm(std::initializer_list<std::pair<long long, long long>> entries) {
    std::map<Int, Int> m;
    for (auto& [v, c] : entries) m[v] = c;
    return m;
}

Word wd(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

WordVector wv(std::initializer_list<std::pair<std::string, int>> terms) {
    WordVector v;
    for (auto& [s, c] : terms) add_term(v, wd(s), c);
    return v;
}

bool matrix_rows_equal(const ExactMatrix& M, const std::vector<std::vector<int>>& rows) {
    if (M.dim != rows.size()) return false;
    for (size_t i = 0; i < M.dim; ++i)
        for (size_t j = 0; j < M.dim; ++j)
            if (M.at(i, j) != rows[i][j]) return false;
    return true;
}

// Cached nu application for the identity suite.
const std::vector<std::vector<Int>>& noninv_tables(int n) {
    static std::map<int, std::vector<std::vector<Int>>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::vector<Int>> tabs;
        Permutation sigma = identity_perm(n);
        do tabs.push_back(noninv_table(sigma));
        while (std::next_permutation(sigma.begin(), sigma.end()));
        it = cache.emplace(n, std::move(tabs)).first;
    }
    return it->second;
}

WordVector nu_fast(int k, const Word& w) {
    int n = static_cast<int>(w.size());
    const auto& tabs = noninv_tables(n);
    WordVector r;
    Permutation sigma = identity_perm(n);
    size_t rank = 0;
    do {
        const Int& c = tabs[rank++][n - k];
        if (c != 0) add_term(r, act_positions(w, sigma), c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

WordVector nu_fast(int k, const WordVector& v) {
    WordVector r;
    for (auto& [w, c] : v)
        for (auto& [u, d] : nu_fast(k, w)) add_term(r, u, c * d);
    return r;
}

std::vector<Word> all_words(int n, int m) {
    std::vector<Word> out;
    Word w(n, 1);
    for (;;) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == m) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_1() {
    bool ok = as_map(nu_spectrum(4, 1)) == sm({{16, 1}, {10, 3}, {6, 6}, {4, 2}, {2, 3}, {0, 9}});
    auto cli = run_cli("spectrum --family nu --n 4 --k 1");
    ok = ok && cli.exit_code == 0;
    if (ok) {
        auto rep = report_from_json(nlohmann::json::parse(cli.out));
        ok = as_map(rep) == as_map(nu_spectrum(4, 1));
    }
    report(1, ok);
}

void criterion_2() {
    auto rep = nu_spectrum(4, 2);
    bool ok = as_map(rep) == sm({{72, 1}, {20, 3}, {4, 3}, {0, 17}});
    auto cert = detail::certify_exact(nu_matrix(4, 2), rep.claim());
    ok = ok && cert.ok;
    ok = ok && run_cli("verify --family nu --n 4 --k 2").exit_code == 0;
    report(2, ok);
}

void criterion_3() {
    auto rep = nu_spectrum(4, 2, {2, 2});
    bool ok = as_map(rep) == sm({{72, 1}, {20, 1}, {0, 4}});
    ok = ok && certify_spectrum(nu_matrix(4, 2, {2, 2}), rep.claim()).ok;
    report(3, ok);
}

void criterion_4() {
    bool ok = matrix_rows_equal(nu_matrix(3, 1),
                                {{3, 2, 2, 1, 1, 0},
                                 {2, 3, 1, 0, 2, 1},
                                 {2, 1, 3, 2, 0, 1},
                                 {1, 0, 2, 3, 1, 2},
                                 {1, 2, 0, 1, 3, 2},
                                 {0, 1, 1, 2, 2, 3}});
    std::vector<std::string> order{"1122", "1212", "2112", "1221", "2121", "2211"};
    ok = ok && matrix_rows_equal(reorder_basis(nu_matrix(4, 1, {2, 2}), order),
                                 {{8, 4, 2, 2, 0, 0},
                                  {4, 4, 3, 3, 2, 0},
                                  {2, 3, 6, 0, 3, 2},
                                  {2, 3, 0, 6, 3, 2},
                                  {0, 2, 3, 3, 4, 4},
                                  {0, 0, 2, 2, 4, 8}});
    ok = ok && matrix_rows_equal(reorder_basis(nu_matrix(4, 2, {2, 2}), order),
                                 {{20, 16, 12, 12, 8, 4},
                                  {16, 14, 12, 12, 10, 8},
                                  {12, 12, 12, 12, 12, 12},
                                  {12, 12, 12, 12, 12, 12},
                                  {8, 10, 12, 12, 14, 16},
                                  {4, 8, 12, 12, 16, 20}});
    ok = ok && pi_op(2, wd("1234")) ==
                   wv({{"1234", 1}, {"1243", 1}, {"1324", 1}, {"1342", 1}, {"1423", 1},
                       {"1432", 1}, {"2314", 1}, {"2341", 1}, {"2413", 1}, {"2431", 1},
                       {"3412", 1}, {"3421", 1}});
    ok = ok && gamma_op(2, wd("1234")) ==
                   wv({{"1234", 3}, {"1243", 2}, {"1324", 2}, {"1423", 1}, {"1342", 1},
                       {"2134", 2}, {"2143", 2}, {"2314", 1}, {"2413", 1}, {"3124", 1},
                       {"3142", 1}, {"3412", 1}});
    // CSV emission of the 6x6 matrix, byte-exact against the golden file.
    auto cli = run_cli("matrix --family nu --n 3 --k 1");
    ok = ok && cli.exit_code == 0 && cli.out == read_file(golden_dir + "/matrix-nu-3-1.csv");
    report(4, ok);
}

void criterion_5() {
    bool ok = true;
    std::string note;
    for (int n = 1; n <= 5 && ok; ++n)
        for (int k = 0; k <= n && ok; ++k) {
            auto rep = nu_spectrum(n, k);
            if (!certify_spectrum(nu_matrix(n, k), rep.claim()).ok) {
                ok = false;
                note = "permutations n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
    for (int n = 1; n <= 6 && ok; ++n)
        for (const Partition& mu : partitions_of(n))
            for (int k = 0; k <= n && ok; ++k) {
                auto rep = nu_spectrum(n, k, mu.parts);
                if (!certify_spectrum(nu_matrix(n, k, mu.parts), rep.claim()).ok) {
                    ok = false;
                    note = "content " + mu.to_string() + " k=" + std::to_string(k);
                }
            }
    report(5, ok, note);
}

void criterion_6() {
    bool ok = nu_kernel_dimension(4, 2, {1, 1, 1, 1}) == 17 &&
              nu_kernel_dimension(4, 1, {1, 1, 1, 1}) == 9;
    for (int n = 1; n <= 6 && ok; ++n)
        for (int k = 0; k <= n && ok; ++k) {
            Int expected = 0;
            for (const auto& lam : partitions_of(n))
                for (const auto& t : enumerate_syt(lam))
                    if (tableau_type(t) < k) expected += syt_count(lam);
            ok = nu_kernel_dimension(n, k, std::vector<int>(n, 1)) == expected;
        }
    report(6, ok);
}

void criterion_7() {
    bool ok = true;
    std::string note;
    const int m = 3;
    for (int n = 1; n <= 5 && ok; ++n) {
        for (const Word& w : all_words(n, m)) {
            if (!ok) break;
            for (int a = 1; a <= m && ok; ++a)
                for (int b = 1; b <= m && ok; ++b) {
                    WordOperator sa = [a](const Word& u) { return shift_op(a, u); };
                    WordOperator sb = [b](const Word& u) { return shift_op(b, u); };
                    WordOperator da = [a](const Word& u) { return delete_op(a, u); };
                    WordOperator db = [b](const Word& u) { return delete_op(b, u); };
                    if (apply_op(sa, shift_op(b, w)) != apply_op(sb, shift_op(a, w)) ||
                        apply_op(da, delete_op(b, w)) != apply_op(db, delete_op(a, w))) {
                        ok = false;
                        note = "insert/delete commutation";
                    }
                    WordVector lhs = apply_op(db, shift_op(a, w)) - apply_op(sa, delete_op(b, w));
                    WordVector rhs = theta_op(b, a, w);
                    if (a == b) add_term(rhs, w, n + 1);
                    if (lhs != rhs) {
                        ok = false;
                        note = "insert/delete commutator";
                    }
                    for (int c = 1; c <= m && ok; ++c) {
                        WordVector l2 =
                            apply_op([b, c](const Word& u) { return theta_op(b, c, u); },
                                     shift_op(a, w)) -
                            apply_op(sa, theta_op(b, c, w));
                        if (l2 != (a == b ? shift_op(c, w) : WordVector{})) {
                            ok = false;
                            note = "substitution commutator";
                        }
                    }
                }
            for (int k = 1; k <= n && ok; ++k) {
                WordVector lhs;
                for (int a = 1; a <= m; ++a) {
                    WordVector x = nu_fast(k - 1, delete_op(a, w));
                    for (auto& [u, c] : x)
                        for (auto& [v, d] : shift_op(a, u)) add_term(lhs, v, c * d);
                }
                if (lhs != scale(k, nu_fast(k, w))) {
                    ok = false;
                    note = "contraction recursion";
                }
                for (int a = 1; a <= m && ok; ++a) {
                    WordVector l = nu_fast(k, shift_op(a, w));
                    for (auto& [u, c] : nu_fast(k, w))
                        for (auto& [v, d] : shift_op(a, u)) add_term(l, v, -c * d);
                    WordVector r;
                    WordVector nk1 = nu_fast(k - 1, w);
                    for (auto& [u, c] : nk1)
                        for (auto& [v, d] : shift_op(a, u)) add_term(r, v, c * d * (n + 2 - k));
                    for (int b = 1; b <= m; ++b)
                        for (auto& [u, c] : nk1)
                            for (auto& [v, d] : theta_op(b, a, u))
                                for (auto& [x, e] : shift_op(b, v)) add_term(r, x, c * d * e);
                    if (l != r) {
                        ok = false;
                        note = "insertion commutator with nu";
                    }
                }
                if (k <= n - 1)
                    for (int a = 1; a <= m && ok; ++a) {
                        WordVector l;
                        for (auto& [u, c] : nu_fast(k, w))
                            for (auto& [v, d] : delete_op(a, u)) add_term(l, v, c * d);
                        l = l - nu_fast(k, delete_op(a, w));
                        WordVector r = scale(n + 1 - k, nu_fast(k - 1, delete_op(a, w)));
                        for (int b = 1; b <= m; ++b)
                            for (auto& [u, c] : nu_fast(k - 1, delete_op(b, w)))
                                for (auto& [v, d] : theta_op(a, b, u)) add_term(r, v, c * d);
                        if (l != r) {
                            ok = false;
                            note = "deletion commutator with nu";
                        }
                    }
            }
        }
    }
    // Insertion-form equivalence on every content with at most 3 letters.
    for (int n = 1; n <= 5 && ok; ++n)
        for (const Partition& mu : partitions_of(n)) {
            if (mu.rows() > 3) continue;
            for (int k = 0; k <= n && ok; ++k)
                if (nu_insertion_form_matrix(k, mu.parts) != nu_matrix(n, k, mu.parts)) {
                    ok = false;
                    note = "insertion form, content " + mu.to_string();
                }
        }
    report(7, ok, note);
}

void criterion_8() {
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        std::vector<ExactMatrix> mats;
        for (int k = 0; k <= n; ++k) mats.push_back(nu_matrix(n, k));
        for (size_t i = 0; i < mats.size() && ok; ++i)
            for (size_t j = i + 1; j < mats.size() && ok; ++j) ok = commutes(mats[i], mats[j]);
    }
    for (int n = 2; n <= 6 && ok; ++n) {
        std::vector<ExactMatrix> mats;
        for (int k = 0; 2 * k <= n; ++k) mats.push_back(gamma_matrix(n, k));
        for (size_t i = 0; i < mats.size() && ok; ++i)
            for (size_t j = i + 1; j < mats.size() && ok; ++j) ok = commutes(mats[i], mats[j]);
    }
    if (ok) {
        auto c140 = check_conjecture(140, 4);
        ok = c140.passed() && !c140.witnesses.empty();
        bool found = false;
        for (auto& w : c140.witnesses)
            found = found || w.find("(3,1) vs (2,2)") != std::string::npos ||
                    w.find("(2,2) vs (3,1)") != std::string::npos;
        ok = ok && found;
    }
    report(8, ok);
}

void criterion_9() {
    bool ok = true;
    std::vector<Partition> c3{Partition{1, 1, 1}, Partition{2, 1}, Partition{3}};
    std::vector<std::pair<Partition, std::vector<int>>> t3{
        {Partition{3}, {1, 1, 1}},
        {Partition{2, 1}, {2, 0, -1}},
        {Partition{1, 1, 1}, {1, -1, 1}},
    };
    for (auto& [lam, vals] : t3)
        for (size_t j = 0; j < c3.size(); ++j) ok = ok && character(lam, c3[j]) == vals[j];
    std::vector<Partition> c4{Partition{1, 1, 1, 1}, Partition{2, 1, 1}, Partition{2, 2},
                              Partition{3, 1}, Partition{4}};
    std::vector<std::pair<Partition, std::vector<int>>> t4{
        {Partition{4}, {1, 1, 1, 1, 1}},
        {Partition{3, 1}, {3, 1, -1, 0, -1}},
        {Partition{2, 2}, {2, 0, 2, -1, 0}},
        {Partition{2, 1, 1}, {3, -1, -1, 0, 1}},
        {Partition{1, 1, 1, 1}, {1, -1, 1, 1, -1}},
    };
    for (auto& [lam, vals] : t4)
        for (size_t j = 0; j < c4.size(); ++j) ok = ok && character(lam, c4[j]) == vals[j];

    auto class_size = [](const Partition& mu) {
        std::map<int, int> mult;
        for (int p : mu.parts) ++mult[p];
        Int z = 1;
        for (auto [len, cnt] : mult) {
            for (int j = 0; j < cnt; ++j) z *= len;
            z *= factorial(cnt);
        }
        return factorial(mu.size()) / z;
    };
    for (int n = 1; n <= 7 && ok; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lam : parts)
            for (const auto& kap : parts) {
                Int dot = 0;
                for (const auto& mu : parts)
                    dot += class_size(mu) * character(lam, mu) * character(kap, mu);
                ok = ok && dot == (lam == kap ? factorial(n) : Int(0));
            }
    }
    report(9, ok);
}

void criterion_10() {
    bool ok = gamma_eigenvalue(Partition{4}, 1, 4) == 72 &&
              gamma_eigenvalue(Partition{4}, 2, 4) == 18 &&
              gamma_eigenvalue(Partition{5}, 2, 5) == 450;
    for (int n = 1; n <= 8 && ok; ++n)
        for (int k = 0; 2 * k <= n && ok; ++k)
            ok = gamma_eigenvalue(Partition{std::vector<int>{n}}, k, n) ==
                 gamma_trivial_closed_form(n, k);
    for (int n = 2; n <= 5 && ok; ++n)
        for (int k = 1; 2 * k <= n && ok; ++k) {
            auto G = gamma_matrix(n, k);
            for (const auto& lam : partitions_of(n)) {
                Int c = gamma_eigenvalue(lam, k, n);
                if (c != 0 && exact_rank_shifted(G, c) >= G.dim) ok = false;
            }
        }
    for (int n = 2; n <= 6 && ok; ++n) ok = gamma_matrix(n, 1) == nu_matrix(n, n - 2);
    report(10, ok);
}

void criterion_11() {
    bool ok = hook_eigenvalue_closed_form(4, 4, 1) == 10 &&
              hook_eigenvalue_closed_form(4, 4, 2) == 20 &&
              nu_eigenvalue(hook_tableau(4, 4), 1) == 10 &&
              nu_eigenvalue(hook_tableau(4, 4), 2) == 20;
    for (int n = 2; n <= 12 && ok; ++n)
        for (int i = 2; i <= n && ok; ++i)
            for (int k = 0; k <= n && ok; ++k)
                ok = hook_eigenvalue_closed_form(i, n, k) == nu_eigenvalue(hook_tableau(i, n), k);
    for (int n = 2; n <= 12 && ok; ++n)
        for (int k = 0; k <= n && ok; ++k) ok = monotonicity_check(n, k);
    report(11, ok);
}

void criterion_12() {
    bool ok = check_conjecture(92, 10).passed() && check_conjecture(96, 10).passed() &&
              check_conjecture(142, 8).passed() && check_conjecture(143, 8).passed();
    // One frozen bound/value pair from the n=3 block: the one-row tableau at
    // k=2 has bound C(3,2) 3^2 = 27 and value 18.
    StandardTableau row3({{1, 2, 3}});
    ok = ok && nu_eigenvalue_upper_bound(row3, 2) == 27 && nu_eigenvalue(row3, 2) == 18;
    report(12, ok);
}

void criterion_13() {
    auto s = normalized_nu_spectrum(4, 1);
    bool ok = tv_bound_squared(s, 1) == Rat(35, 64) &&
              tv_bound_decimal(s, 1) == "0.739509972887";
    Rat prev = tv_bound_squared(s, 1);
    for (long long steps = 2; steps <= 8 && ok; ++steps) {
        Rat cur = tv_bound_squared(s, steps);
        ok = cur < prev;
        prev = cur;
    }
    ok = ok && mixing_time_estimate(s, Rat(1, 4)) == 3 && mixing_time_estimate(s, Rat(99, 100)) >= 1;
    if (ok) {
        auto cli = run_cli("mixing --family nu --n 4 --k 1 --threshold 0.25");
        ok = cli.exit_code == 0 && cli.out.find("mixing_time_estimate=3") != std::string::npos &&
             cli.out.find("0.739509972887") != std::string::npos;
    }
    report(13, ok);
}

void golden_files() {
    bool ok = true;
    std::string note;
    for (const std::string& id : {"3.1", "3.2", "3.5", "3.6", "5.1", "char-3", "char-4"}) {
        auto cli = run_cli("table --id " + id);
        std::string expected = read_file(golden_dir + "/table-" + id + ".txt");
        if (cli.exit_code != 0 || expected.empty() || cli.out != expected) {
            ok = false;
            note = "table " + id;
            break;
        }
    }
    std::cout << "golden files: " << (ok ? "PASS" : "FAIL");
    if (!ok) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <golden-dir>" << std::endl;
        return 2;
    }
    cli_path = argv[1];
    golden_dir = argv[2];
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    golden_files();
    return failures == 0 ? 0 : 1;
}
