#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace symshuf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

// Weakly decreasing sequence of positive integers. The empty partition (of 0)
// is a first-class value. Row 1 is always the longest row; a box in row r,
// column c (both 1-based) has diagonal index c - r.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int rows() const { return static_cast<int>(parts.size()); }
    int row(int r) const { return (r >= 1 && r <= rows()) ? parts[r - 1] : 0; }
    bool empty() const { return parts.empty(); }

    // Column heights (conjugate partition parts).
    int col_height(int c) const {
        int h = 0;
        for (int p : parts) h += (p >= c) ? 1 : 0;
        return h;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (inner.rows() > outer.rows())
            throw std::invalid_argument("inner shape does not fit inside outer");
        for (int r = 1; r <= inner.rows(); ++r)
            if (inner.row(r) > outer.row(r))
                throw std::invalid_argument("inner shape does not fit inside outer");
    }

    int size() const { return outer.size() - inner.size(); }
};

// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominates: partitions must have equal size");
    int a = 0, b = 0;
    int rows = std::max(lam.rows(), mu.rows());
    for (int i = 1; i <= rows; ++i) {
        a += lam.row(i);
        b += mu.row(i);
        if (a < b) return false;
    }
    return true;
}

inline long long diag_index(const SkewShape& shape) {
    long long total = 0;
    for (int r = 1; r <= shape.outer.rows(); ++r)
        for (int c = shape.inner.row(r) + 1; c <= shape.outer.row(r); ++c)
            total += c - r;
    return total;
}

inline bool is_horizontal_strip(const SkewShape& shape) {
    // No column may contain two boxes: row r's boxes must start strictly
    // to the right of where row r-1's boxes end.
    for (int r = 2; r <= shape.outer.rows(); ++r)
        if (shape.outer.row(r) > shape.inner.row(r - 1)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Permutations (one-line notation, values 1..n)
// ---------------------------------------------------------------------------

using Permutation = std::vector<int>;
using Word = std::vector<int>;

inline Permutation identity_perm(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline Permutation inverse(const Permutation& p) {
    Permutation q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

// (p o q)(i) = p(q(i))
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: degree mismatch");
    Permutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i] - 1];
    return r;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Rank in lexicographic order via the Lehmer code; inverse of all_permutations order.
inline size_t perm_rank(const Permutation& p) {
    size_t n = p.size(), rank = 0;
    std::vector<size_t> fact(n + 1, 1);
    for (size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    for (size_t i = 0; i < n; ++i) {
        size_t smaller = 0;
        for (size_t j = i + 1; j < n; ++j) smaller += (p[j] < p[i]) ? 1 : 0;
        rank += smaller * fact[n - 1 - i];
    }
    return rank;
}

inline Partition cycle_type(const Permutation& sigma) {
    if (!is_permutation(sigma)) throw std::invalid_argument("cycle_type: not a permutation");
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = sigma[j] - 1) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

// ---------------------------------------------------------------------------
// Words and the two group actions
// ---------------------------------------------------------------------------

// Right action on positions: (w . sigma)_i = w_{sigma(i)}.
inline Word act_positions(const Word& w, const Permutation& sigma) {
    if (w.size() != sigma.size()) throw std::invalid_argument("act_positions: length mismatch");
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[sigma[i] - 1];
    return out;
}

// Left action on letters: (sigma . w)_i = sigma(w_i).
inline Word act_alphabet(const Permutation& sigma, const Word& w) {
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > static_cast<int>(sigma.size()))
            throw std::invalid_argument("act_alphabet: letter out of range");
        out[i] = sigma[w[i] - 1];
    }
    return out;
}

// Relabel an arbitrary-alphabet word to 1..m, most frequent letter first,
// ties broken by original alphabet order. Returns the relabeled word and its
// content partition.
template <typename T>
inline std::pair<Word, Partition> canonical_content(const std::vector<T>& w) {
    if (w.empty()) throw std::invalid_argument("canonical_content: empty word");
    std::map<T, int> freq;
    for (const T& c : w) ++freq[c];
    std::vector<std::pair<T, int>> order(freq.begin(), freq.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::map<T, int> relabel;
    std::vector<int> content;
    for (size_t i = 0; i < order.size(); ++i) {
        relabel[order[i].first] = static_cast<int>(i) + 1;
        content.push_back(order[i].second);
    }
    Word out;
    out.reserve(w.size());
    for (const T& c : w) out.push_back(relabel[c]);
    return {out, Partition(content)};
}

inline std::pair<Word, Partition> canonical_content(const std::string& s) {
    return canonical_content(std::vector<char>(s.begin(), s.end()));
}

// Content of a word already over 1..m, as a partition (multiplicities sorted).
inline Partition word_content(const Word& w) {
    std::map<int, int> freq;
    for (int c : w) ++freq[c];
    std::vector<int> m;
    for (auto& [_, v] : freq) m.push_back(v);
    std::sort(m.rbegin(), m.rend());
    return Partition(m);
}

// All words with the given letter multiplicities (mult[i] copies of letter
// i+1), in lexicographic order.
inline std::vector<Word> words_with_multiplicities(const std::vector<int>& mult) {
    Word w;
    for (size_t i = 0; i < mult.size(); ++i)
        for (int j = 0; j < mult[i]; ++j) w.push_back(static_cast<int>(i) + 1);
    std::sort(w.begin(), w.end());
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Set compositions
// ---------------------------------------------------------------------------

// Ordered list of disjoint nonempty blocks partitioning [n]; blocks kept sorted.
struct SetComposition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    SetComposition(int n_, std::vector<std::vector<int>> b) : n(n_), blocks(std::move(b)) {
        std::vector<bool> seen(n + 1, false);
        int total = 0;
        for (auto& blk : blocks) {
            if (blk.empty()) throw std::invalid_argument("set composition: empty block");
            std::sort(blk.begin(), blk.end());
            for (int v : blk) {
                if (v < 1 || v > n || seen[v])
                    throw std::invalid_argument("set composition: not a partition of [n]");
                seen[v] = true;
                ++total;
            }
        }
        if (total != n) throw std::invalid_argument("set composition: union is not [n]");
    }

    bool operator==(const SetComposition& o) const { return n == o.n && blocks == o.blocks; }
};

// Product b * c: refine each block of c by the blocks of b, dropping empties.
inline SetComposition set_composition_product(const SetComposition& b, const SetComposition& c) {
    if (b.n != c.n) throw std::invalid_argument("set_composition_product: ground-set mismatch");
    std::vector<std::vector<int>> out;
    for (const auto& cb : c.blocks) {
        std::set<int> cset(cb.begin(), cb.end());
        for (const auto& bb : b.blocks) {
            std::vector<int> inter;
            for (int v : bb)
                if (cset.count(v)) inter.push_back(v);
            if (!inter.empty()) out.push_back(std::move(inter));
        }
    }
    return SetComposition(b.n, std::move(out));
}

// ---------------------------------------------------------------------------
// Small numeric helpers
// ---------------------------------------------------------------------------

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    bool wide = false;
    for (int c : w) wide = wide || c > 9;
    for (size_t i = 0; i < w.size(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace symshuf
