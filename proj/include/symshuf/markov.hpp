#pragma once

#include "spectra.hpp"

namespace symshuf {

// ---------------------------------------------------------------------------
// Markov-chain normalization and mixing bounds
// ---------------------------------------------------------------------------

// The constant row sum making the operator a transition matrix (up to the
// normalizer): k! binom(n,k)^2 for nu_k, (n!/2^k)^2/(k!(n-2k)!) for gamma_k.
inline Int normalizer(const std::string& family, int n, int k) {
    if (family == "nu") {
        if (k < 0 || k > n) throw std::invalid_argument("normalizer: need 0 <= k <= n");
        Int b = binomial(n, k);
        return factorial(k) * b * b;
    }
    if (family == "gamma") {
        if (k < 0 || 2 * k > n) throw std::invalid_argument("normalizer: need 0 <= 2k <= n");
        return gamma_trivial_closed_form(n, k);
    }
    throw std::invalid_argument("normalizer: unknown family " + family);
}

// Spectrum of nu_k on permutations divided by the normalizer; the Perron
// ratio 1 has multiplicity 1 and every ratio lies in [0,1].
struct NormalizedSpectrum {
    Int normalizer;
    std::vector<std::pair<Rat, Int>> ratios;  // (eigenvalue/normalizer, multiplicity)
};

inline NormalizedSpectrum normalized_nu_spectrum(int n, int k) {
    NormalizedSpectrum s;
    s.normalizer = normalizer("nu", n, k);
    for (auto& e : nu_spectrum(n, k).eigenvalues)
        s.ratios.emplace_back(Rat(e.value, s.normalizer), e.multiplicity);
    return s;
}

// Exact value of (1/4) sum over non-Perron eigenvalues of f * ratio^(2s):
// the square of the total-variation upper bound after s steps.
inline Rat tv_bound_squared(const NormalizedSpectrum& s, long long steps) {
    if (steps < 1) throw std::invalid_argument("tv_bound_squared: steps must be positive");
    Rat total = 0;
    for (auto& [ratio, mult] : s.ratios) {
        if (ratio == 1) continue;  // Perron term excluded
        Rat p = 1;
        for (long long i = 0; i < 2 * steps; ++i) p *= ratio;
        total += Rat(mult) * p;
    }
    return total / 4;
}

// Decimal rendering of sqrt(x) for a nonnegative rational x, to `digits`
// digits after the point, truncated.
inline std::string sqrt_decimal(const Rat& x, int digits) {
    if (x < 0) throw std::invalid_argument("sqrt_decimal: negative input");
    Int num = numerator(x), den = denominator(x);
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // sqrt(num/den) = sqrt(num*den)/den; floor at the requested precision.
    Int shifted = num * den * scale * scale;
    Int root = sqrt(shifted);  // floor square root
    Int whole = root / (den * scale);
    Int frac = root / den % scale;
    std::string f = frac.str();
    return whole.str() + "." + std::string(digits - f.size(), '0') + f;
}

// Upper bound on total-variation distance after `steps` iterations, rendered
// to 12 decimal digits from the exact rational under the radical.
inline std::string tv_bound_decimal(const NormalizedSpectrum& s, long long steps,
                                    int digits = 12) {
    return sqrt_decimal(tv_bound_squared(s, steps), digits);
}

// Least step count whose bound falls strictly below the threshold. The bound
// is monotone decreasing and tends to zero, so the scan terminates.
inline long long mixing_time_estimate(const NormalizedSpectrum& s, const Rat& threshold) {
    if (threshold <= 0 || threshold >= 1)
        throw std::invalid_argument("mixing_time_estimate: threshold must be in (0,1)");
    Rat t2 = threshold * threshold;
    for (long long steps = 1;; ++steps)
        if (tv_bound_squared(s, steps) < t2) return steps;
}

}  // namespace symshuf
