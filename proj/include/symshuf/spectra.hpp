#pragma once

#include "linalg.hpp"

namespace symshuf {

// ---------------------------------------------------------------------------
// Eigenvalues of nu_k from tableau data
// ---------------------------------------------------------------------------

// v_k(t), by the evacuation recursion: with s = Delta(t) and n = |t|,
//   v_k(t) = v_k(s) + (n + 1 - k + diag(t/s)) * v_{k-1}(s)
// when type(t) >= k, and v_k(t) = 0 otherwise; v_0 = 1 on every tableau.
inline Int nu_eigenvalue(const StandardTableau& t, int k) {
    if (k == 0) return 1;
    if (t.size() == 0) return 0;
    static std::map<std::pair<std::string, int>, Int> memo;
    auto key = std::make_pair(t.to_string(), k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int result = 0;
    if (tableau_type(t) >= k) {
        StandardTableau s = schutzenberger_delta(t);
        int n = t.size();
        Int coeff = Int(n + 1 - k) + diag_index(SkewShape(t.shape(), s.shape()));
        result = nu_eigenvalue(s, k) + coeff * nu_eigenvalue(s, k - 1);
    }
    memo[key] = result;
    return result;
}

// The k = 1 eigenvalue attached to a skew shape:
// binom(|outer|+1, 2) - binom(|inner|+1, 2) + diag(outer/inner).
inline Int skew_eigenvalue(const SkewShape& shape) {
    return binomial(shape.outer.size() + 1, 2) - binomial(shape.inner.size() + 1, 2) +
           diag_index(shape);
}

// Closed form on hook tableaux: v_k(t_{i,n}) = k! binom(i-2, k) binom(2n-i+1, k).
inline Int hook_eigenvalue_closed_form(int i, int n, int k) {
    return factorial(k) * binomial(i - 2, k) * binomial(2 * n - i + 1, k);
}

// ---------------------------------------------------------------------------
// Spectrum reports
// ---------------------------------------------------------------------------

struct EigenvalueEntry {
    Int value;
    Int multiplicity;
    std::vector<std::string> tableaux;  // contributing standard tableaux
};

struct SpectrumReport {
    std::string family;        // "nu", "gamma", or "nu_lambda"
    int n = 0;
    int k = 0;
    std::vector<int> content;  // letter multiplicities of the word basis
    Int dimension;
    std::vector<EigenvalueEntry> eigenvalues;  // sorted by value, descending

    ClaimedSpectrum claim() const {
        ClaimedSpectrum c;
        for (auto& e : eigenvalues) c.eigenvalues.emplace_back(e.value, e.multiplicity);
        return c;
    }
};

// Complete spectrum of nu_k on words whose letter multiplicities are
// `content`. Every standard tableau t of size n contributes the eigenvalue
// v_k(t) with multiplicity K_{shape(t), content}; the permutation module is
// content (1,...,1), where the Kostka number is the number of standard
// tableaux of the shape.
inline SpectrumReport nu_spectrum(int n, int k, const std::vector<int>& content) {
    if (k < 0 || k > n) throw std::invalid_argument("nu_spectrum: need 0 <= k <= n");
    std::vector<int> sorted_content = content;
    std::sort(sorted_content.rbegin(), sorted_content.rend());
    Partition mu(sorted_content);
    if (mu.size() != n) throw std::invalid_argument("nu_spectrum: content does not sum to n");

    SpectrumReport rep;
    rep.family = "nu";
    rep.n = n;
    rep.k = k;
    rep.content = content;

    std::map<Int, EigenvalueEntry, std::greater<Int>> acc;
    Int dim = 0;
    for (const Partition& lambda : partitions_of(n)) {
        Int mult = kostka(lambda, mu);
        if (mult == 0) continue;
        for (const StandardTableau& t : enumerate_syt(lambda)) {
            Int v = nu_eigenvalue(t, k);
            auto& e = acc[v];
            e.value = v;
            e.multiplicity += mult;
            e.tableaux.push_back(t.to_string());
            dim += mult;
        }
    }
    rep.dimension = dim;
    for (auto& [v, e] : acc) rep.eigenvalues.push_back(std::move(e));
    return rep;
}

inline SpectrumReport nu_spectrum(int n, int k) {
    return nu_spectrum(n, k, std::vector<int>(n, 1));
}

// Kernel dimension of nu_k on the content basis; on permutations this is the
// sum of f^shape over tableaux of type < k.
inline Int nu_kernel_dimension(int n, int k, const std::vector<int>& content) {
    auto rep = nu_spectrum(n, k, content);
    for (auto& e : rep.eigenvalues)
        if (e.value == 0) return e.multiplicity;
    return 0;
}

// ---------------------------------------------------------------------------
// Eigenvalues of gamma_k via character sums
// ---------------------------------------------------------------------------

namespace detail {

// For each cycle type of S_n, the sum over its class of the k-matching
// statistic, for all k at once. One pass over the group.
inline const std::map<std::vector<int>, std::vector<Int>>& matching_class_sums(int n) {
    static std::map<int, std::map<std::vector<int>, std::vector<Int>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto& out = cache[n];
    Permutation sigma = identity_perm(n);
    do {
        auto table = increasing_matching_table(sigma);
        auto& acc = out[cycle_type(sigma).parts];
        if (acc.size() < table.size()) acc.resize(table.size(), 0);
        for (size_t k = 0; k < table.size(); ++k) acc[k] += table[k];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace detail

// c_k^lambda = sum over S_n of the k-matching statistic times the lambda
// character; the sum of the gamma_k eigenvalues attached to the module.
inline Int gamma_eigenvalue(const Partition& lambda, int k, int n) {
    if (lambda.size() != n) throw std::invalid_argument("gamma_eigenvalue: |lambda| != n");
    if (k < 0 || 2 * k > n) throw std::invalid_argument("gamma_eigenvalue: need 0 <= 2k <= n");
    Int total = 0;
    for (auto& [ct, sums] : detail::matching_class_sums(n))
        total += sums[k] * character(lambda, Partition(ct));
    return total;
}

// Closed form on the trivial module: c_k^{(n)} = (n!/2^k)^2 / (k! (n-2k)!).
inline Int gamma_trivial_closed_form(int n, int k) {
    Int half = factorial(n) / (Int(1) << k);
    return half * half / (factorial(k) * factorial(n - 2 * k));
}

// Spectrum of gamma_k on permutations. Eigenvalue candidates are the values
// c_k^lambda over all shapes (plus 0); multiplicities carry no tableau
// formula here, so they are measured as nullities of the matrix itself and
// the full claim is then certified (nullities + annihilating product).
inline SpectrumReport gamma_spectrum(int n, int k) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("gamma_spectrum: need 0 <= 2k <= n");
    SpectrumReport rep;
    rep.family = "gamma";
    rep.n = n;
    rep.k = k;
    rep.content.assign(n, 1);

    ExactMatrix M = gamma_matrix(n, k);
    rep.dimension = M.dim;
    std::set<Int, std::greater<Int>> candidates{Int(0)};
    for (const Partition& lambda : partitions_of(n)) candidates.insert(gamma_eigenvalue(lambda, k, n));

    Int total = 0;
    for (const Int& v : candidates) {
        Int nullity;
        if (M.dim <= 64) {
            nullity = Int(M.dim) - Int(exact_rank_shifted(M, v));
        } else {
            auto primes = modular::primes_below_2_30(1);
            uint32_t p = primes[0];
            std::vector<uint32_t> a(M.dim * M.dim);
            uint32_t vp = modular::reduce(v, p);
            for (size_t i = 0; i < M.dim; ++i)
                for (size_t j = 0; j < M.dim; ++j) {
                    uint32_t x = modular::reduce(M.at(i, j), p);
                    if (i == j) x = (x + p - vp) % p;
                    a[i * M.dim + j] = x;
                }
            nullity = Int(M.dim) - Int(modular::rank_mod(std::move(a), M.dim, p));
        }
        if (nullity == 0) continue;
        EigenvalueEntry e;
        e.value = v;
        e.multiplicity = nullity;
        rep.eigenvalues.push_back(std::move(e));
        total += nullity;
    }
    if (total != rep.dimension)
        throw std::logic_error("gamma_spectrum: measured multiplicities do not fill the space");
    auto cert = certify_spectrum(M, rep.claim());
    if (!cert.ok) throw std::logic_error("gamma_spectrum: certification failed: " + cert.detail);
    return rep;
}

// ---------------------------------------------------------------------------
// Isotypic projectors
// ---------------------------------------------------------------------------

// Rational matrix of the central idempotent p_lambda acting on the
// permutation basis (by right multiplication): entry (pi, tau) is
// (f^lambda / n!) chi^lambda(tau^{-1} pi).
struct RationalMatrix {
    size_t dim = 0;
    std::vector<Rat> a;
    Rat& at(size_t i, size_t j) { return a[i * dim + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * dim + j]; }
};

inline RationalMatrix isotypic_projector(const Partition& lambda, int n) {
    auto perms = all_permutations(n);
    Int f = syt_count(lambda);
    Int nf = factorial(n);
    std::map<std::vector<int>, Int> chi_by_type;
    RationalMatrix P;
    P.dim = perms.size();
    P.a.assign(P.dim * P.dim, Rat(0));
    for (size_t j = 0; j < perms.size(); ++j) {
        Permutation tinv = inverse(perms[j]);
        for (size_t i = 0; i < perms.size(); ++i) {
            auto ct = cycle_type(compose(tinv, perms[i])).parts;
            auto it = chi_by_type.find(ct);
            if (it == chi_by_type.end())
                it = chi_by_type.emplace(ct, character(lambda, Partition(ct))).first;
            P.at(i, j) = Rat(f * it->second, nf);
        }
    }
    return P;
}

// trace(M * P) for an integer matrix M and rational P of the same dimension.
inline Rat trace_product(const ExactMatrix& M, const RationalMatrix& P) {
    Rat tr = 0;
    for (size_t i = 0; i < M.dim; ++i)
        for (size_t j = 0; j < M.dim; ++j)
            if (M.at(i, j) != 0) tr += Rat(M.at(i, j)) * P.at(j, i);
    return tr;
}

// ---------------------------------------------------------------------------
// Conjectured bounds and ratios
// ---------------------------------------------------------------------------

// Second-largest eigenvalue of nu_k on permutations, conjectured to be
// k! binom(n-2, k) binom(n+1, k); equals the hook tableau value v_k(t_{n,n}).
inline Int nu_second_eigenvalue_formula(int n, int k) {
    return factorial(k) * binomial(n - 2, k) * binomial(n + 1, k);
}

// Conjectured upper bound v_k(t) <= binom(type, k) (n + lambda_1 - type)^k.
inline Int nu_eigenvalue_upper_bound(const StandardTableau& t, int k) {
    int ty = tableau_type(t);
    int n = t.size();
    Int base = n + t.shape().row(1) - ty;
    Int p = 1;
    for (int i = 0; i < k; ++i) p *= base;
    return binomial(ty, k) * p;
}

// True iff the hook eigenvalues are weakly increasing in i across 2..n.
inline bool monotonicity_check(int n, int k) {
    for (int i = 2; i < n; ++i)
        if (hook_eigenvalue_closed_form(i, n, k) > hook_eigenvalue_closed_form(i + 1, n, k))
            return false;
    return true;
}

struct ConjectureReport {
    int id = 0;
    int n_max = 0;
    std::vector<std::string> violations;  // empty = conjecture holds on the scanned range
    std::vector<std::string> witnesses;   // supporting evidence (id 140: non-commuting pairs)
    bool passed() const { return violations.empty(); }
};

// Scan a numbered conjecture up to n_max.
//   92: the second-largest nu_k eigenvalue is k! binom(n-2,k) binom(n+1,k)
//   96: v_k(t) <= binom(type,k) (n + lambda_1 - type)^k for every tableau
//  140: nu_lambda and nu_mu commute iff both shapes are hooks (n-k,1^k) or
//       both are of the form (2^k,1^(n-2k)); matrix scan capped at n = 5
//  142: for hook modules (n-m,1^m), c_k at n over c_k at n-1 equals
//       (n-m)n/(n-2k) for even m and (n-m-1)(n+1)/(n-2k) for odd m
//  143: consecutive nonzero columns of a hook module satisfy
//       c_{k+1}/c_k = binom(n-2k,2)/(2i), i = index among nonzero columns
inline ConjectureReport check_conjecture(int id, int n_max) {
    ConjectureReport rep;
    rep.id = id;
    rep.n_max = n_max;
    switch (id) {
        case 92: {
            for (int n = 2; n <= n_max; ++n)
                for (int k = 1; k <= n; ++k) {
                    auto spec = nu_spectrum(n, k);
                    Int second = 0;
                    bool found = false;
                    for (size_t i = 1; i < spec.eigenvalues.size(); ++i) {
                        second = spec.eigenvalues[i].value;
                        found = true;
                        break;
                    }
                    if (!found) continue;  // single eigenvalue, nothing to compare
                    Int expected = nu_second_eigenvalue_formula(n, k);
                    if (second != expected)
                        rep.violations.push_back("n=" + std::to_string(n) + " k=" +
                                                 std::to_string(k) + ": second eigenvalue " +
                                                 second.str() + " != " + expected.str());
                }
            break;
        }
        case 96: {
            for (int n = 1; n <= n_max; ++n)
                for (const Partition& lambda : partitions_of(n))
                    for (const StandardTableau& t : enumerate_syt(lambda))
                        for (int k = 1; k <= n; ++k) {
                            Int v = nu_eigenvalue(t, k);
                            Int b = nu_eigenvalue_upper_bound(t, k);
                            if (v > b)
                                rep.violations.push_back("t=" + t.to_string() + " k=" +
                                                         std::to_string(k) + ": value " + v.str() +
                                                         " exceeds bound " + b.str());
                        }
            break;
        }
        case 140: {
            auto is_hook = [](const Partition& p) {
                for (int r = 2; r <= p.rows(); ++r)
                    if (p.row(r) != 1) return false;
                return true;
            };
            auto is_pairs = [](const Partition& p) {
                for (int r = 1; r <= p.rows(); ++r)
                    if (p.row(r) > 2) return false;
                bool seen_one = false;
                for (int r = 1; r <= p.rows(); ++r) {
                    if (p.row(r) == 1) seen_one = true;
                    if (p.row(r) == 2 && seen_one) return false;
                }
                return true;
            };
            for (int n = 3; n <= std::min(n_max, 5); ++n) {
                // The statement excludes the shapes (n) and (1^n): nu_{(n)} is
                // a multiple of the all-ones matrix and commutes with every
                // operator with constant row sums.
                auto shapes = partitions_of(n);
                std::erase_if(shapes, [n](const Partition& p) {
                    return p.rows() == 1 || p.rows() == n;
                });
                std::vector<ExactMatrix> mats;
                for (auto& lam : shapes) mats.push_back(nu_lambda_matrix(n, lam));
                for (size_t i = 0; i < shapes.size(); ++i)
                    for (size_t j = i + 1; j < shapes.size(); ++j) {
                        bool same_family = (is_hook(shapes[i]) && is_hook(shapes[j])) ||
                                           (is_pairs(shapes[i]) && is_pairs(shapes[j]));
                        bool comm = commutes(mats[i], mats[j]);
                        std::string pair = "n=" + std::to_string(n) + " " +
                                           shapes[i].to_string() + " vs " + shapes[j].to_string();
                        if (comm != same_family)
                            rep.violations.push_back(pair + (comm ? ": unexpected commutation"
                                                                  : ": expected commutation"));
                        if (!comm) rep.witnesses.push_back(pair + ": does not commute");
                    }
            }
            break;
        }
        case 142: {
            for (int n = 3; n <= n_max; ++n)
                for (int m = 0; m <= n - 2; ++m) {
                    std::vector<int> big{n - m}, small{n - 1 - m};
                    for (int r = 0; r < m; ++r) big.push_back(1), small.push_back(1);
                    if (small.front() < 1) continue;
                    Partition lam_n(big), lam_prev(small);
                    if (lam_n.parts != big || lam_prev.parts != small) continue;
                    for (int k = 1; 2 * k <= n - 1; ++k) {
                        if (n - 2 * k == 0) continue;
                        Int prev = gamma_eigenvalue(lam_prev, k, n - 1);
                        if (prev == 0) continue;
                        Int cur = gamma_eigenvalue(lam_n, k, n);
                        Rat expected = (m % 2 == 0) ? Rat(Int(n - m) * n, n - 2 * k)
                                                    : Rat(Int(n - m - 1) * (n + 1), n - 2 * k);
                        if (Rat(cur, prev) != expected)
                            rep.violations.push_back("n=" + std::to_string(n) + " m=" +
                                                     std::to_string(m) + " k=" +
                                                     std::to_string(k) + ": ratio " + cur.str() +
                                                     "/" + prev.str());
                    }
                }
            break;
        }
        case 143: {
            for (int n = 2; n <= n_max; ++n)
                for (int m = 0; m < n; ++m) {
                    std::vector<int> p{n - m};
                    for (int r = 0; r < m; ++r) p.push_back(1);
                    Partition lam(p);
                    std::vector<Int> c;
                    for (int k = 0; 2 * k <= n; ++k) c.push_back(gamma_eigenvalue(lam, k, n));
                    int i = 0;  // index among nonzero columns, 1-based below
                    for (size_t k = 0; k + 1 < c.size(); ++k) {
                        if (c[k] == 0) continue;
                        ++i;
                        if (c[k + 1] == 0) continue;
                        Rat expected(binomial(n - 2 * static_cast<long long>(k), 2), 2 * i);
                        if (Rat(c[k + 1], c[k]) != expected)
                            rep.violations.push_back("n=" + std::to_string(n) + " m=" +
                                                     std::to_string(m) + " k=" +
                                                     std::to_string(k) + ": ratio " +
                                                     c[k + 1].str() + "/" + c[k].str());
                    }
                }
            break;
        }
        default:
            throw std::invalid_argument("check_conjecture: unknown id " + std::to_string(id));
    }
    return rep;
}

}  // namespace symshuf
