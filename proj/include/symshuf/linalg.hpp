#pragma once

#include <cstdlib>

#include "operators.hpp"

namespace symshuf {

// ---------------------------------------------------------------------------
// Exact rank (fraction-free Gaussian elimination, Bareiss)
// ---------------------------------------------------------------------------

inline size_t exact_rank(std::vector<Int> a, size_t dim) {
    Int prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < dim; ++col) {
        size_t piv = rank;
        while (piv < dim && a[piv * dim + col] == 0) ++piv;
        if (piv == dim) continue;
        if (piv != rank)
            for (size_t j = 0; j < dim; ++j) std::swap(a[piv * dim + j], a[rank * dim + j]);
        const Int p = a[rank * dim + col];
        for (size_t i = rank + 1; i < dim; ++i) {
            const Int f = a[i * dim + col];
            for (size_t j = col; j < dim; ++j)
                a[i * dim + j] = (p * a[i * dim + j] - f * a[rank * dim + j]) / prev;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

inline size_t exact_rank_shifted(const ExactMatrix& M, const Int& v) {
    std::vector<Int> a = M.a;
    for (size_t i = 0; i < M.dim; ++i) a[i * M.dim + i] -= v;
    return exact_rank(std::move(a), M.dim);
}

// ---------------------------------------------------------------------------
// Modular arithmetic helpers
// ---------------------------------------------------------------------------

namespace modular {

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Distinct primes just below 2^30, largest first.
inline std::vector<uint32_t> primes_below_2_30(size_t count) {
    std::vector<uint32_t> out;
    for (uint64_t p = (1u << 30) - 1; out.size() < count; p -= 2)
        if (is_prime(p)) out.push_back(static_cast<uint32_t>(p));
    return out;
}

inline uint32_t reduce(const Int& v, uint32_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

// C = A * B mod p, entries in [0,p) with p < 2^30. Accumulates products in a
// uint64 with periodic reduction so each term costs one multiply-add.
inline void matmul_mod(const std::vector<uint32_t>& A, const std::vector<uint32_t>& B,
                       std::vector<uint32_t>& C, size_t dim, uint32_t p) {
    std::fill(C.begin(), C.end(), 0u);
    std::vector<uint64_t> row(dim);
    for (size_t i = 0; i < dim; ++i) {
        std::fill(row.begin(), row.end(), 0ull);
        size_t since_reduce = 0;
        for (size_t k = 0; k < dim; ++k) {
            uint64_t v = A[i * dim + k];
            if (v) {
                const uint32_t* b = &B[k * dim];
                for (size_t j = 0; j < dim; ++j) row[j] += v * b[j];
                ++since_reduce;
            }
            // 15 accumulated products of < 2^60 stay below 2^64.
            if (since_reduce == 15 || k + 1 == dim) {
                for (size_t j = 0; j < dim; ++j) row[j] %= p;
                since_reduce = 0;
            }
        }
        for (size_t j = 0; j < dim; ++j) C[i * dim + j] = static_cast<uint32_t>(row[j]);
    }
}

inline size_t rank_mod(std::vector<uint32_t> a, size_t dim, uint32_t p) {
    auto inv = [&](uint64_t x) {
        uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < dim; ++col) {
        size_t piv = rank;
        while (piv < dim && a[piv * dim + col] == 0) ++piv;
        if (piv == dim) continue;
        if (piv != rank)
            for (size_t j = col; j < dim; ++j) std::swap(a[piv * dim + j], a[rank * dim + j]);
        uint64_t pinv = inv(a[rank * dim + col]);
        for (size_t i = rank + 1; i < dim; ++i) {
            uint64_t f = a[i * dim + col] * pinv % p;
            if (!f) continue;
            uint64_t neg = p - f;
            for (size_t j = col; j < dim; ++j)
                a[i * dim + j] =
                    static_cast<uint32_t>((a[i * dim + j] + neg * a[rank * dim + j]) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace modular

// ---------------------------------------------------------------------------
// Spectrum certification
// ---------------------------------------------------------------------------

struct ClaimedSpectrum {
    std::vector<std::pair<Int, Int>> eigenvalues;  // (value, multiplicity), values distinct
};

struct CertificationResult {
    bool ok = false;
    std::string method;  // "exact", "modular", "rank-only"
    std::string detail;  // first failure, if any
};

inline size_t spectra_budget() {
    if (const char* env = std::getenv("SHUFFLE_SPECTRA_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 720;
}

namespace detail {

// Exact certificate for small matrices: per-value Bareiss nullity plus the
// exact annihilating product over the distinct claimed values.
inline CertificationResult certify_exact(const ExactMatrix& M, const ClaimedSpectrum& claim) {
    CertificationResult res;
    res.method = "exact";
    for (auto& [v, mult] : claim.eigenvalues) {
        Int nullity = Int(M.dim) - Int(exact_rank_shifted(M, v));
        if (nullity != mult) {
            res.detail = "nullity mismatch at eigenvalue " + v.str() + ": got " + nullity.str() +
                         ", claimed " + mult.str();
            return res;
        }
    }
    ExactMatrix P(M.basis);
    for (size_t i = 0; i < M.dim; ++i) P.at(i, i) = 1;
    for (auto& [v, mult] : claim.eigenvalues) {
        ExactMatrix S = M;
        for (size_t i = 0; i < M.dim; ++i) S.at(i, i) -= v;
        P = P * S;
    }
    for (const Int& x : P.a)
        if (x != 0) {
            res.detail = "annihilating product is nonzero";
            return res;
        }
    res.ok = true;
    return res;
}

// Rigorous certificate for larger matrices. The annihilating product over the
// distinct claimed values is computed modulo enough 30-bit primes that, by an
// operator-norm bound on its entries, its exact value is forced to be zero.
// That product makes the matrix diagonalizable over Q with spectrum inside
// the claimed set, so the rational nullities sum to the dimension; a per-value
// nullity check modulo a single prime (rational nullity never exceeds the
// modular one, and the claimed multiplicities already sum to the dimension)
// then pins every multiplicity exactly.
inline CertificationResult certify_modular(const ExactMatrix& M, const ClaimedSpectrum& claim) {
    CertificationResult res;
    res.method = "modular";
    size_t dim = M.dim;

    Int total = 0;
    for (auto& [v, mult] : claim.eigenvalues) total += mult;
    if (total != Int(dim)) {
        res.detail = "claimed multiplicities sum to " + total.str() + ", dimension is " +
                     std::to_string(dim);
        return res;
    }

    // Entry bound: |M - vI| has infinity-norm at most norm(M) + |v|, and the
    // infinity-norm is submultiplicative.
    Int norm = 0;
    for (size_t i = 0; i < dim; ++i) {
        Int s = 0;
        for (size_t j = 0; j < dim; ++j) s += abs(M.at(i, j));
        norm = std::max(norm, s);
    }
    Int bound = 1;
    for (auto& [v, mult] : claim.eigenvalues) bound *= norm + abs(v);
    bound *= 2;  // entries lie in (-B, B); need the CRT modulus to exceed 2B

    size_t nprimes = 1;
    {
        Int mod = Int(1) << 30;
        while (mod <= bound) {
            mod <<= 30;
            ++nprimes;
        }
    }
    auto primes = modular::primes_below_2_30(nprimes + 4);

    // Per-value nullity modulo one prime; retry with further primes if a
    // claimed value collides with another modulo p.
    size_t prime_idx = 0;
    for (;; ++prime_idx) {
        if (prime_idx >= primes.size()) {
            res.detail = "could not find a prime separating the claimed eigenvalues";
            return res;
        }
        uint32_t p = primes[prime_idx];
        std::set<uint32_t> residues;
        bool distinct = true;
        for (auto& [v, mult] : claim.eigenvalues)
            distinct = distinct && residues.insert(modular::reduce(v, p)).second;
        if (!distinct) continue;
        bool all_ok = true;
        for (auto& [v, mult] : claim.eigenvalues) {
            std::vector<uint32_t> a(dim * dim);
            uint32_t vp = modular::reduce(v, p);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j) {
                    uint32_t x = modular::reduce(M.at(i, j), p);
                    if (i == j) x = (x + p - vp) % p;
                    a[i * dim + j] = x;
                }
            Int nullity = Int(dim) - Int(modular::rank_mod(std::move(a), dim, p));
            if (nullity != mult) {
                res.detail = "modular nullity mismatch at eigenvalue " + v.str() + ": got " +
                             nullity.str() + ", claimed " + mult.str();
                all_ok = false;
                break;
            }
        }
        if (all_ok) break;
        return res;
    }

    // Annihilating product modulo each prime.
    for (size_t pi = 0; pi < nprimes; ++pi) {
        uint32_t p = primes[pi];
        std::vector<uint32_t> Mp(dim * dim);
        for (size_t i = 0; i < dim * dim; ++i) Mp[i] = modular::reduce(M.a[i], p);
        std::vector<uint32_t> P(dim * dim, 0), S(dim * dim), tmp(dim * dim);
        bool first = true;
        for (auto& [v, mult] : claim.eigenvalues) {
            S = Mp;
            uint32_t vp = modular::reduce(v, p);
            for (size_t i = 0; i < dim; ++i) S[i * dim + i] = (S[i * dim + i] + p - vp) % p;
            if (first) {
                P = S;
                first = false;
            } else {
                modular::matmul_mod(P, S, tmp, dim, p);
                P.swap(tmp);
            }
        }
        for (uint32_t x : P)
            if (x != 0) {
                res.detail = "annihilating product nonzero mod " + std::to_string(p);
                return res;
            }
    }
    res.ok = true;
    return res;
}

}  // namespace detail

// Certify that the claimed (value, multiplicity) list is the complete exact
// spectrum of M and that M is diagonalizable. Exact Bareiss route for
// dimensions up to 64; a rigorous multi-prime certificate up to the budget
// (default 720, override with SHUFFLE_SPECTRA_BUDGET); beyond that, and up to
// 5040 when rank_only is set, per-value modular nullities alone are checked.
inline CertificationResult certify_spectrum(const ExactMatrix& M, const ClaimedSpectrum& claim,
                                            bool rank_only = false) {
    if (M.dim <= 64 && !rank_only) return detail::certify_exact(M, claim);
    if (M.dim <= spectra_budget() && !rank_only) return detail::certify_modular(M, claim);
    CertificationResult res;
    res.method = "rank-only";
    if (M.dim > 5040) {
        res.detail = "dimension exceeds the rank-only limit of 5040";
        return res;
    }
    auto primes = modular::primes_below_2_30(1);
    uint32_t p = primes[0];
    size_t dim = M.dim;
    for (auto& [v, mult] : claim.eigenvalues) {
        std::vector<uint32_t> a(dim * dim);
        uint32_t vp = modular::reduce(v, p);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                uint32_t x = modular::reduce(M.at(i, j), p);
                if (i == j) x = (x + p - vp) % p;
                a[i * dim + j] = x;
            }
        Int nullity = Int(dim) - Int(modular::rank_mod(std::move(a), dim, p));
        if (nullity != mult) {
            res.detail = "modular nullity mismatch at eigenvalue " + v.str();
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace symshuf
