#pragma once

#include <map>
#include <optional>

#include "combinatorics.hpp"

namespace symshuf {

// ---------------------------------------------------------------------------
// Standard Young tableaux
// ---------------------------------------------------------------------------

// Rows of entries; row 1 is the longest row. Entries 1..n, increasing along
// rows and down columns.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    int size() const {
        int s = 0;
        for (auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }

    Partition shape() const {
        std::vector<int> p;
        for (auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }

    bool valid() const {
        std::vector<bool> seen(size() + 1, false);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) return false;
            if (r + 1 < rows.size() && rows[r].size() < rows[r + 1].size()) return false;
            for (size_t c = 0; c < rows[r].size(); ++c) {
                int v = rows[r][c];
                if (v < 1 || v > size() || seen[v]) return false;
                seen[v] = true;
                if (c > 0 && rows[r][c - 1] >= v) return false;
                if (r > 0 && rows[r - 1][c] >= v) return false;
            }
        }
        return true;
    }

    // Row index (1-based) of a given entry, 0 if absent.
    int row_of(int v) const {
        for (size_t r = 0; r < rows.size(); ++r)
            for (int x : rows[r])
                if (x == v) return static_cast<int>(r) + 1;
        return 0;
    }

    // Row-reading word: rows concatenated top to bottom.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto& r : rows) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    // Stable textual key "1,2,5/3,4,7/6" -- used for memoization and reports.
    std::string to_string() const {
        std::string s;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r) s += '/';
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (c) s += ',';
                s += std::to_string(rows[r][c]);
            }
        }
        return s;
    }

    bool operator==(const StandardTableau& o) const { return rows == o.rows; }
    bool operator<(const StandardTableau& o) const { return reading_word() < o.reading_word(); }
};

// All standard Young tableaux of the given shape, sorted by row-reading word.
inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    int n = shape.size();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(shape.rows());
    std::vector<int> fill(shape.rows(), 0);  // boxes filled so far per row
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (int r = 0; r < shape.rows(); ++r) {
            int c = fill[r];
            if (c >= shape.row(r + 1)) continue;
            if (r > 0 && fill[r - 1] <= c) continue;  // box above must be filled
            rows[r].push_back(next);
            ++fill[r];
            self(self, next + 1);
            rows[r].pop_back();
            --fill[r];
        }
    };
    if (n == 0)
        out.emplace_back();
    else
        rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of SYT of a shape, by the hook length formula.
inline Int syt_count(const Partition& shape) {
    Int denom = 1;
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.row(r); ++c)
            denom *= (shape.row(r) - c) + (shape.col_height(c) - r) + 1;
    return factorial(shape.size()) / denom;
}

// ---------------------------------------------------------------------------
// Kostka numbers
// ---------------------------------------------------------------------------

// Number of semistandard tableaux of shape lambda and content mu, by peeling
// the horizontal strip of the largest letter.
inline Int kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    auto rec = [&](auto&& self, const std::vector<int>& lam, const std::vector<int>& m) -> Int {
        if (m.empty()) return lam.empty() ? 1 : 0;
        auto key = std::make_pair(lam, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int strip = m.back();
        std::vector<int> m2(m.begin(), m.end() - 1);
        Int total = 0;
        // Choose the inner shape left after removing a horizontal strip of
        // size `strip` from lam.
        std::vector<int> inner(lam.size(), 0);
        auto choose = [&](auto&& go, int r, int remaining) -> void {
            if (r == static_cast<int>(lam.size())) {
                if (remaining) return;
                std::vector<int> in;
                for (int v : inner)
                    if (v > 0) in.push_back(v);
                if (!std::is_sorted(in.begin(), in.end(), std::greater<int>())) return;
                total += self(self, in, m2);
                return;
            }
            int lo = (r + 1 < static_cast<int>(lam.size())) ? lam[r + 1] : 0;  // strip: no two in a column
            for (int v = lam[r]; v >= lo; --v) {
                if (lam[r] - v > remaining) break;
                inner[r] = v;
                go(go, r + 1, remaining - (lam[r] - v));
            }
            inner[r] = 0;
        };
        choose(choose, 0, strip);
        memo[key] = total;
        return total;
    };
    return rec(rec, lambda.parts, mu.parts);
}

// ---------------------------------------------------------------------------
// Irreducible characters of S_n (Murnaghan-Nakayama)
// ---------------------------------------------------------------------------

inline Int character(const Partition& lambda, const Partition& cycle_type_mu) {
    if (lambda.size() != cycle_type_mu.size())
        throw std::invalid_argument("character: size mismatch");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    auto rec = [&](auto&& self, std::vector<int> lam, std::vector<int> mu) -> Int {
        if (mu.empty()) return lam.empty() ? 1 : 0;
        auto key = std::make_pair(lam, mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int r = mu.front();
        std::vector<int> mu2(mu.begin() + 1, mu.end());
        Int total = 0;
        int rows = static_cast<int>(lam.size());
        // Remove a rim hook of length r spanning rows a..b (0-based).
        for (int a = 0; a < rows; ++a) {
            for (int b = a; b < rows; ++b) {
                std::vector<int> nl = lam;
                for (int k = a; k < b; ++k) nl[k] = lam[k + 1] - 1;
                nl[b] = lam[a] - r + (b - a);
                bool ok = nl[b] >= 0;
                // Recompute hook length to match r exactly: boxes removed.
                int removed = 0;
                for (int k = a; k <= b; ++k) removed += lam[k] - nl[k];
                ok = ok && removed == r;
                for (int k = 0; ok && k + 1 < rows; ++k) ok = nl[k] >= nl[k + 1];
                if (!ok) continue;
                std::vector<int> trimmed;
                for (int v : nl)
                    if (v > 0) trimmed.push_back(v);
                Int sub = self(self, trimmed, mu2);
                total += ((b - a) % 2 == 0) ? sub : -sub;
            }
        }
        memo[key] = total;
        return total;
    };
    return rec(rec, lambda.parts, cycle_type_mu.parts);
}

// ---------------------------------------------------------------------------
// Evacuation step (Schuetzenberger's Delta) and its partial inverse
// ---------------------------------------------------------------------------

// Remove entry 1, slide the hole outward (swapping with the smaller of the
// neighbours below and to the right), then relabel 2..n down to 1..n-1.
inline StandardTableau schutzenberger_delta(const StandardTableau& t) {
    if (t.size() == 0) throw std::invalid_argument("delta: empty tableau");
    std::vector<std::vector<int>> rows = t.rows;
    int r = 0, c = 0;  // entry 1 always sits at (0,0)
    for (;;) {
        bool has_down = r + 1 < static_cast<int>(rows.size()) &&
                        c < static_cast<int>(rows[r + 1].size());
        bool has_right = c + 1 < static_cast<int>(rows[r].size());
        if (!has_down && !has_right) break;
        bool go_down = has_down && (!has_right || rows[r + 1][c] < rows[r][c + 1]);
        if (go_down) {
            rows[r][c] = rows[r + 1][c];
            ++r;
        } else {
            rows[r][c] = rows[r][c + 1];
            ++c;
        }
    }
    rows[r].erase(rows[r].begin() + c);
    if (rows[r].empty()) rows.erase(rows.begin() + r);
    for (auto& row : rows)
        for (int& v : row) --v;
    return StandardTableau(rows);
}

// Inverse slide: relabel 1..n to 2..n+1, open a hole at the end of the given
// row (1-based), slide it inward to (1,1), and place 1 there. Throws if the
// resulting shape is not a partition shape.
inline StandardTableau delta_inverse(const StandardTableau& t, int grow_row) {
    std::vector<std::vector<int>> rows = t.rows;
    for (auto& row : rows)
        for (int& v : row) ++v;
    int r = grow_row - 1;
    if (r < 0 || r > static_cast<int>(rows.size()))
        throw std::invalid_argument("delta_inverse: bad row");
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    int c = static_cast<int>(rows[r].size());
    if (r > 0 && c >= static_cast<int>(rows[r - 1].size()))
        throw std::invalid_argument("delta_inverse: row would break the shape");
    rows[r].push_back(0);
    while (r > 0 || c > 0) {
        int up = (r > 0) ? rows[r - 1][c] : -1;
        int left = (c > 0) ? rows[r][c - 1] : -1;
        if (up >= left) {
            rows[r][c] = up;
            rows[r - 1][c] = 0;
            --r;
        } else {
            rows[r][c] = left;
            rows[r][c - 1] = 0;
            --c;
        }
    }
    rows[0][0] = 1;
    StandardTableau out(rows);
    if (!out.valid()) throw std::logic_error("delta_inverse: produced invalid tableau");
    return out;
}

// ---------------------------------------------------------------------------
// Ascents, desarrangement tableaux, and type
// ---------------------------------------------------------------------------

// i is an ascent of t when i = n or entry i+1 sits in a row no lower than i.
inline std::vector<int> ascents(const StandardTableau& t) {
    int n = t.size();
    std::vector<int> rowof(n + 2, 0);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int v : t.rows[r]) rowof[v] = static_cast<int>(r) + 1;
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (i == n || rowof[i + 1] <= rowof[i]) out.push_back(i);
    return out;
}

// Desarrangement tableau: empty, or smallest ascent is even.
inline bool is_desarrangement(const StandardTableau& t) {
    if (t.size() == 0) return true;
    auto a = ascents(t);
    return !a.empty() && a.front() % 2 == 0;
}

inline Int desarrangement_count(const Partition& shape) {
    Int c = 0;
    for (const auto& t : enumerate_syt(shape)) c += is_desarrangement(t) ? 1 : 0;
    return c;
}

// type(t): least j >= 0 such that Delta^j(t) is a desarrangement tableau.
inline int tableau_type(const StandardTableau& t) {
    StandardTableau cur = t;
    int j = 0;
    while (!is_desarrangement(cur)) {
        cur = schutzenberger_delta(cur);
        ++j;
    }
    return j;
}

// Skew diagram t / Delta(t): the single box vacated by one evacuation step.
inline SkewShape delta_skew(const StandardTableau& t) {
    return SkewShape(t.shape(), schutzenberger_delta(t).shape());
}

// Hook tableau t_{i,n}: shape (n-1,1) with entry i in the second row.
inline StandardTableau hook_tableau(int i, int n) {
    if (n < 2 || i < 2 || i > n) throw std::invalid_argument("hook_tableau: need 2 <= i <= n");
    std::vector<int> top, bot{i};
    for (int v = 1; v <= n; ++v)
        if (v != i) top.push_back(v);
    return StandardTableau({top, bot});
}

}  // namespace symshuf
