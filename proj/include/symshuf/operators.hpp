#pragma once

#include <bit>
#include <functional>

#include "tableaux.hpp"

namespace symshuf {

// ---------------------------------------------------------------------------
// Non-inversion statistics
// ---------------------------------------------------------------------------

// noninv_i(sigma) = number of increasing subsequences of length exactly i,
// for i = 0..n, returned as a table. noninv_0 = 1 by convention.
inline std::vector<Int> noninv_table(const Permutation& sigma) {
    int n = static_cast<int>(sigma.size());
    // dp[j][l] = increasing subsequences of length l ending at position j
    std::vector<std::vector<Int>> dp(n, std::vector<Int>(n + 1, 0));
    std::vector<Int> out(n + 1, 0);
    out[0] = 1;
    for (int j = 0; j < n; ++j) {
        dp[j][1] = 1;
        for (int i = 0; i < j; ++i)
            if (sigma[i] < sigma[j])
                for (int l = 1; l < n; ++l) dp[j][l + 1] += dp[i][l];
        for (int l = 1; l <= n; ++l) out[l] += dp[j][l];
    }
    return out;
}

inline Int noninv(const Permutation& sigma, int i) {
    if (i < 0 || i > static_cast<int>(sigma.size())) return 0;
    return noninv_table(sigma)[i];
}

// noninv_lambda(sigma): number of ways to partition the positions 1..n into
// increasing blocks (in both position and value) whose sizes form lambda.
// Blocks of equal size are unordered.
inline Int noninv_lambda(const Permutation& sigma, const Partition& lambda) {
    int n = static_cast<int>(sigma.size());
    if (lambda.size() != n) throw std::invalid_argument("noninv_lambda: size mismatch");
    int b = lambda.rows();
    std::vector<int> cap(lambda.parts), used(b, 0), last(b, 0);
    Int total = 0;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            ++total;
            return;
        }
        int v = sigma[pos];
        for (int j = 0; j < b; ++j) {
            if (used[j] == cap[j]) continue;
            if (used[j] > 0 && last[j] >= v) continue;
            // Equal-size empty blocks are interchangeable: only fill the
            // first empty one in each size class.
            if (used[j] == 0 && j > 0 && cap[j - 1] == cap[j] && used[j - 1] == 0) break;
            int keep = last[j];
            ++used[j];
            last[j] = v;
            self(self, pos + 1);
            --used[j];
            last[j] = keep;
        }
    };
    rec(rec, 0);
    return total;
}

// Table of k-matching counts: entry k = number of ways to pick k disjoint
// increasing pairs of positions. Equals noninv_{(2^k,1^{n-2k})}(sigma).
inline std::vector<Int> increasing_matching_table(const Permutation& sigma) {
    int n = static_cast<int>(sigma.size());
    if (n > 20) throw std::invalid_argument("increasing_matching_table: n too large");
    int kmax = n / 2;
    // dp over subsets of positions still available, lowest position either
    // skipped or paired with a later compatible position.
    std::vector<std::vector<long long>> memo(size_t(1) << n);
    auto rec = [&](auto&& self, unsigned s) -> const std::vector<long long>& {
        auto& res = memo[s];
        if (!res.empty()) return res;
        if (s == 0) {
            res = {1};
            return res;
        }
        int i = std::countr_zero(s);
        res = self(self, s & (s - 1));  // position i left as a singleton
        for (int j = i + 1; j < n; ++j) {
            if (!(s >> j & 1) || sigma[i] >= sigma[j]) continue;
            const auto& sub = self(self, s & ~(1u << i) & ~(1u << j));
            if (static_cast<int>(res.size()) < static_cast<int>(sub.size()) + 1)
                res.resize(sub.size() + 1, 0);
            for (size_t l = 0; l < sub.size(); ++l) res[l + 1] += sub[l];
        }
        return res;
    };
    const auto& full = rec(rec, (n ? (1u << n) - 1 : 0u));
    std::vector<Int> out(kmax + 1, 0);
    for (size_t l = 0; l < full.size() && l <= static_cast<size_t>(kmax); ++l) out[l] = full[l];
    return out;
}

// ---------------------------------------------------------------------------
// Exact integer matrices over a labelled basis
// ---------------------------------------------------------------------------

struct ExactMatrix {
    std::vector<std::string> basis;
    size_t dim = 0;
    std::vector<Int> a;  // row-major

    ExactMatrix() = default;
    explicit ExactMatrix(std::vector<std::string> b)
        : basis(std::move(b)), dim(basis.size()), a(dim * dim, 0) {}

    Int& at(size_t i, size_t j) { return a[i * dim + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * dim + j]; }

    bool operator==(const ExactMatrix& o) const { return basis == o.basis && a == o.a; }

    Int row_sum(size_t i) const {
        Int s = 0;
        for (size_t j = 0; j < dim; ++j) s += at(i, j);
        return s;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(basis);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    bool is_symmetric() const {
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i + 1; j < dim; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    ExactMatrix operator*(const ExactMatrix& o) const {
        if (dim != o.dim) throw std::invalid_argument("matrix product: dimension mismatch");
        ExactMatrix r(basis);
        for (size_t i = 0; i < dim; ++i)
            for (size_t k = 0; k < dim; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (size_t j = 0; j < dim; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }
};

// Whether AB = BA, with an int64 fast path when all entries are small enough
// for the products to fit.
inline bool commutes(const ExactMatrix& A, const ExactMatrix& B) {
    if (A.dim != B.dim) throw std::invalid_argument("commutes: dimension mismatch");
    size_t d = A.dim;
    Int maxa = 0, maxb = 0;
    for (const Int& v : A.a) maxa = std::max(maxa, Int(abs(v)));
    for (const Int& v : B.a) maxb = std::max(maxb, Int(abs(v)));
    if (maxa * maxb * static_cast<long long>(d) < Int("4611686018427387904")) {  // 2^62
        std::vector<long long> a(d * d), b(d * d);
        for (size_t i = 0; i < d * d; ++i) a[i] = static_cast<long long>(A.a[i]);
        for (size_t i = 0; i < d * d; ++i) b[i] = static_cast<long long>(B.a[i]);
        std::vector<long long> ab(d * d, 0), ba(d * d, 0);
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k) {
                long long va = a[i * d + k], vb = b[i * d + k];
                if (va)
                    for (size_t j = 0; j < d; ++j) ab[i * d + j] += va * b[k * d + j];
                if (vb)
                    for (size_t j = 0; j < d; ++j) ba[i * d + j] += vb * a[k * d + j];
            }
        return ab == ba;
    }
    return (A * B).a == (B * A).a;
}

// ---------------------------------------------------------------------------
// The shuffle operator matrices
// ---------------------------------------------------------------------------

// Basis of all words with the given letter multiplicities, lexicographic.
inline std::vector<Word> word_basis(const std::vector<int>& mult) {
    return words_with_multiplicities(mult);
}

namespace detail {

// Generic construction: entry (u, w) = sum over sigma in S_n with
// w . sigma = u of stat(sigma), where stat is indexed by permutation rank.
inline ExactMatrix operator_matrix(const std::vector<Word>& basis,
                                   const std::vector<Int>& stat_by_rank) {
    int n = basis.empty() ? 0 : static_cast<int>(basis.front().size());
    std::map<Word, size_t> index;
    std::vector<std::string> labels;
    for (size_t i = 0; i < basis.size(); ++i) {
        index[basis[i]] = i;
        labels.push_back(word_to_string(basis[i]));
    }
    ExactMatrix M(labels);
    Permutation sigma = identity_perm(n);
    size_t rank = 0;
    do {
        const Int& v = stat_by_rank[rank++];
        if (v != 0)
            for (size_t j = 0; j < basis.size(); ++j)
                M.at(index.at(act_positions(basis[j], sigma)), j) += v;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return M;
}

inline std::vector<int> ones_content(int n) { return std::vector<int>(n, 1); }

}  // namespace detail

// nu_k on words of the given content (multiplicities per letter); the
// permutation case is content (1,...,1). Entry (u,w) sums noninv_{n-k} over
// the permutations carrying w to u.
inline ExactMatrix nu_matrix(int n, int k, const std::vector<int>& content) {
    if (k < 0 || k > n) throw std::invalid_argument("nu_matrix: need 0 <= k <= n");
    auto basis = word_basis(content);
    std::vector<Int> stat;
    Permutation sigma = identity_perm(n);
    do stat.push_back(noninv_table(sigma)[n - k]);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return detail::operator_matrix(basis, stat);
}

inline ExactMatrix nu_matrix(int n, int k) { return nu_matrix(n, k, detail::ones_content(n)); }

// nu_lambda: entry (u,w) sums noninv_lambda.
inline ExactMatrix nu_lambda_matrix(int n, const Partition& lambda,
                                    const std::vector<int>& content) {
    auto basis = word_basis(content);
    std::vector<Int> stat;
    Permutation sigma = identity_perm(n);
    do stat.push_back(noninv_lambda(sigma, lambda));
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return detail::operator_matrix(basis, stat);
}

inline ExactMatrix nu_lambda_matrix(int n, const Partition& lambda) {
    return nu_lambda_matrix(n, lambda, detail::ones_content(n));
}

// gamma_k = nu_{(2^k, 1^{n-2k})}, via the matching-count statistic.
inline ExactMatrix gamma_matrix(int n, int k, const std::vector<int>& content) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("gamma_matrix: need 0 <= 2k <= n");
    auto basis = word_basis(content);
    std::vector<Int> stat;
    Permutation sigma = identity_perm(n);
    do stat.push_back(increasing_matching_table(sigma)[k]);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return detail::operator_matrix(basis, stat);
}

inline ExactMatrix gamma_matrix(int n, int k) {
    return gamma_matrix(n, k, detail::ones_content(n));
}

// Reorder a matrix to an explicitly given basis label order.
inline ExactMatrix reorder_basis(const ExactMatrix& M, const std::vector<std::string>& order) {
    if (order.size() != M.dim) throw std::invalid_argument("reorder_basis: size mismatch");
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < M.dim; ++i) pos[M.basis[i]] = i;
    std::vector<size_t> perm;
    for (const auto& lbl : order) {
        auto it = pos.find(lbl);
        if (it == pos.end()) throw std::invalid_argument("reorder_basis: unknown label " + lbl);
        perm.push_back(it->second);
    }
    ExactMatrix R(order);
    for (size_t i = 0; i < M.dim; ++i)
        for (size_t j = 0; j < M.dim; ++j) R.at(i, j) = M.at(perm[i], perm[j]);
    return R;
}

// ---------------------------------------------------------------------------
// Linear combinations of words, and the elementary word operators
// ---------------------------------------------------------------------------

using WordVector = std::map<Word, Int>;

inline void add_term(WordVector& v, const Word& w, const Int& c) {
    auto it = v.find(w);
    if (it == v.end()) {
        if (c != 0) v[w] = c;
    } else {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

inline WordVector operator+(const WordVector& x, const WordVector& y) {
    WordVector r = x;
    for (auto& [w, c] : y) add_term(r, w, c);
    return r;
}

inline WordVector operator-(const WordVector& x, const WordVector& y) {
    WordVector r = x;
    for (auto& [w, c] : y) add_term(r, w, -c);
    return r;
}

inline WordVector scale(const Int& c, const WordVector& x) {
    WordVector r;
    for (auto& [w, v] : x) add_term(r, w, c * v);
    return r;
}

using WordOperator = std::function<WordVector(const Word&)>;

inline WordVector apply_op(const WordOperator& op, const WordVector& x) {
    WordVector r;
    for (auto& [w, c] : x)
        for (auto& [u, d] : op(w)) add_term(r, u, c * d);
    return r;
}

// sh_a: insert letter a in each of the n+1 gaps.
inline WordVector shift_op(int a, const Word& w) {
    WordVector r;
    for (size_t i = 0; i <= w.size(); ++i) {
        Word u = w;
        u.insert(u.begin() + i, a);
        add_term(r, u, 1);
    }
    return r;
}

// del_a: remove one occurrence of a, each way.
inline WordVector delete_op(int a, const Word& w) {
    WordVector r;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != a) continue;
        Word u = w;
        u.erase(u.begin() + i);
        add_term(r, u, 1);
    }
    return r;
}

// theta_{a,b}: replace one occurrence of a by b, each way.
inline WordVector theta_op(int a, int b, const Word& w) {
    WordVector r;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != a) continue;
        Word u = w;
        u[i] = b;
        add_term(r, u, 1);
    }
    return r;
}

// nu_k applied to a single word: remove k letters (as a set of positions),
// keep the remainder in order, and reinsert the removed letters as a
// multiset; equivalently sum noninv_{n-k}(sigma) w.sigma over the group.
inline WordVector nu_op(int k, const Word& w) {
    int n = static_cast<int>(w.size());
    if (k < 0 || k > n) throw std::invalid_argument("nu_op: need 0 <= k <= n");
    WordVector r;
    Permutation sigma = identity_perm(n);
    do {
        Int c = noninv_table(sigma)[n - k];
        if (c != 0) add_term(r, act_positions(w, sigma), c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

// gamma_k applied to a single word.
inline WordVector gamma_op(int k, const Word& w) {
    int n = static_cast<int>(w.size());
    if (k < 0 || 2 * k > n) throw std::invalid_argument("gamma_op: need 0 <= 2k <= n");
    WordVector r;
    Permutation sigma = identity_perm(n);
    do {
        Int c = increasing_matching_table(sigma)[k];
        if (c != 0) add_term(r, act_positions(w, sigma), c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

// pi_k: remove k positions, keep the rest in order, and append the removed
// letters at the end in every order. nu_k = (1/k!) pi_k pi_k^T, and pi_k is
// determined by its value on one word per content.
inline WordVector pi_op(int k, const Word& w) {
    int n = static_cast<int>(w.size());
    if (k < 0 || k > n) throw std::invalid_argument("pi_op: need 0 <= k <= n");
    WordVector r;
    std::vector<int> idx(k);
    auto choose = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            Word kept, removed;
            size_t p = 0;
            for (int i = 0; i < n; ++i) {
                if (p < idx.size() && idx[p] == i) {
                    removed.push_back(w[i]);
                    ++p;
                } else {
                    kept.push_back(w[i]);
                }
            }
            // Append the removed letters in every ordering of the k chosen
            // positions (k! orderings, identical letters counted with
            // multiplicity).
            std::vector<int> pos(k);
            std::iota(pos.begin(), pos.end(), 0);
            std::sort(pos.begin(), pos.end());
            do {
                Word u = kept;
                for (int q : pos) u.push_back(removed[q]);
                add_term(r, u, 1);
            } while (std::next_permutation(pos.begin(), pos.end()));
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    choose(choose, 0, 0);
    return r;
}

// ---------------------------------------------------------------------------
// Group algebra elements
// ---------------------------------------------------------------------------

// Formal rational linear combination of permutations of a fixed degree.
struct GroupAlgebraElement {
    int n = 0;
    std::map<Permutation, Rat> coeffs;

    explicit GroupAlgebraElement(int degree) : n(degree) {}

    void add(const Permutation& p, const Rat& c) {
        auto it = coeffs.find(p);
        if (it == coeffs.end()) {
            if (c != 0) coeffs[p] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return n == o.n && coeffs == o.coeffs;
    }
};

inline GroupAlgebraElement identity_element(int n) {
    GroupAlgebraElement e(n);
    e.add(identity_perm(n), 1);
    return e;
}

// Convolution product: (x*y)(pi) = sum over sigma tau = pi of x(sigma) y(tau).
inline GroupAlgebraElement convolve(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (x.n != y.n) throw std::invalid_argument("convolve: degree mismatch");
    GroupAlgebraElement r(x.n);
    for (auto& [s, a] : x.coeffs)
        for (auto& [t, b] : y.coeffs) r.add(compose(s, t), a * b);
    return r;
}

// Matrix of right multiplication sigma -> sigma * z on the lexicographic
// permutation basis; requires integer coefficients.
inline ExactMatrix right_multiplication_matrix(const GroupAlgebraElement& z) {
    auto perms = all_permutations(z.n);
    std::vector<std::string> labels;
    for (auto& p : perms) labels.push_back(word_to_string(p));
    ExactMatrix M(labels);
    for (auto& [t, c] : z.coeffs) {
        if (denominator(c) != 1)
            throw std::invalid_argument("right_multiplication_matrix: non-integer coefficient");
        Int ci = numerator(c);
        for (size_t j = 0; j < perms.size(); ++j)
            M.at(perm_rank(compose(perms[j], t)), j) += ci;
    }
    return M;
}

// The move-k-to-top element: pick k positions of the identity word, keep the
// rest in order, and append the removed letters in every order.
inline GroupAlgebraElement pi_k_element(int n, int k) {
    GroupAlgebraElement z(n);
    for (auto& [w, c] : pi_op(k, identity_perm(n))) z.add(w, Rat(c));
    return z;
}

// Central idempotent (f^mu / n!) sum over sigma of chi^mu(sigma) sigma.
// Characters of the symmetric group are real integers, so no conjugation.
inline GroupAlgebraElement isotypic_idempotent(const Partition& mu) {
    int n = mu.size();
    GroupAlgebraElement e(n);
    Rat scale(syt_count(mu), factorial(n));
    std::map<std::vector<int>, Int> chi;
    Permutation sigma = identity_perm(n);
    do {
        auto ct = cycle_type(sigma).parts;
        auto it = chi.find(ct);
        if (it == chi.end()) it = chi.emplace(ct, character(mu, Partition(ct))).first;
        if (it->second != 0) e.add(sigma, scale * Rat(it->second));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return e;
}

// nu_k as the insertion form: sum over weakly increasing letter sequences
// a_1 <= ... <= a_k of sh_{a_1} ... sh_{a_k} del_{a_1} ... del_{a_k} divided
// by the factorials of the letter repetitions. Must equal nu_matrix on the
// same word basis.
inline ExactMatrix nu_insertion_form_matrix(int k, const std::vector<int>& content) {
    auto basis = word_basis(content);
    int m = static_cast<int>(content.size());
    std::map<Word, size_t> index;
    std::vector<std::string> labels;
    for (size_t i = 0; i < basis.size(); ++i) {
        index[basis[i]] = i;
        labels.push_back(word_to_string(basis[i]));
    }
    ExactMatrix M(labels);
    std::vector<std::map<Word, Rat>> cols(basis.size());
    std::vector<int> a(k);
    auto run = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            Rat coeff = 1;
            for (int j = 1; j <= m; ++j) {
                Int f = 1, reps = 0;
                for (int l : a)
                    if (l == j) f *= ++reps;
                coeff /= Rat(f);
            }
            for (size_t col = 0; col < basis.size(); ++col) {
                WordVector v;
                add_term(v, basis[col], 1);
                for (int l : a) v = apply_op([l](const Word& w) { return delete_op(l, w); }, v);
                for (int l : a) v = apply_op([l](const Word& w) { return shift_op(l, w); }, v);
                for (auto& [u, c] : v) cols[col][u] += coeff * Rat(c);
            }
            return;
        }
        for (int l = lo; l <= m; ++l) {
            a[pos] = l;
            self(self, pos + 1, l);
        }
    };
    run(run, 0, 1);
    for (size_t col = 0; col < basis.size(); ++col)
        for (auto& [u, c] : cols[col]) {
            if (denominator(c) != 1)
                throw std::logic_error("nu_insertion_form_matrix: non-integer entry");
            M.at(index.at(u), col) = numerator(c);
        }
    return M;
}

}  // namespace symshuf

