#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/slope.hpp"

namespace m3fill {

/// Positive continued fraction [a0; a1, ..., am] of a non-negative rational:
/// a0 >= 0, middle terms >= 1, and am >= 2 whenever m >= 1. This form is
/// unique, and the plain Euclidean algorithm produces it directly.
struct PositiveCF {
    std::vector<std::int64_t> coefficients;

    std::int64_t norm() const {
        std::int64_t n = 0;
        for (std::int64_t a : coefficients) n += a;
        return n;
    }

    /// Evaluate the nested fraction back to p/q.
    Slope value() const {
        // Walk the convergent recurrence h_k = a_k h_{k-1} + h_{k-2}.
        std::int64_t h1 = 1, h0 = 0;  // numerators: h_{-1}=1, h_{-2}=0
        std::int64_t k1 = 0, k0 = 1;  // denominators
        for (std::int64_t a : coefficients) {
            std::int64_t h = a * h1 + h0;
            std::int64_t k = a * k1 + k0;
            h0 = h1; h1 = h;
            k0 = k1; k1 = k;
        }
        return Slope(h1, k1);
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            if (i == 1) out += ";";
            else if (i > 1) out += ",";
            out += std::to_string(coefficients[i]);
        }
        // Display single-coefficient CFs as "[a0]" and longer ones "[a0;a1,...]".
        out += "]";
        return out;
    }
};

/// Positive continued fraction of |p/q| for a finite slope.
inline PositiveCF positive_cf(const Slope& s) {
    if (s.is_infinite()) throw InfiniteSlope("positive_cf");
    std::int64_t p = s.p() < 0 ? -s.p() : s.p();
    std::int64_t q = s.q();
    PositiveCF cf;
    while (true) {
        cf.coefficients.push_back(p / q);
        std::int64_t r = p % q;
        if (r == 0) break;
        p = q;
        q = r;
    }
    return cf;
}

/// The norm ||p/q||: coefficient sum of the positive CF of |p/q|.
inline std::int64_t slope_norm(const Slope& s) {
    if (s.is_infinite()) throw InfiniteSlope("norm");
    return positive_cf(s).norm();
}

/// Signed continued fraction [a0; a1, ..., am] with a0 = floor(p/q) allowed to
/// be any integer and the tail in positive canonical form. Used to read off
/// penultimate convergents of a primary filling slope.
struct SignedCF {
    std::vector<std::int64_t> coefficients;

    /// Convergent p_k/q_k after consuming the first k+1 coefficients;
    /// k = -1 yields 1/0.
    std::pair<std::int64_t, std::int64_t> convergent(int k) const {
        std::int64_t h1 = 1, h0 = 0;
        std::int64_t k1 = 0, k0 = 1;
        for (int i = 0; i <= k; ++i) {
            std::int64_t a = coefficients[static_cast<std::size_t>(i)];
            std::int64_t h = a * h1 + h0;
            std::int64_t kk = a * k1 + k0;
            h0 = h1; h1 = h;
            k0 = k1; k1 = kk;
        }
        return {h1, k1};
    }
};

inline SignedCF signed_cf(const Slope& s) {
    if (s.is_infinite()) throw InfiniteSlope("signed_cf");
    std::int64_t p = s.p(), q = s.q();
    SignedCF cf;
    // floor division
    std::int64_t a0 = (p >= 0) ? p / q : -((-p + q - 1) / q);
    cf.coefficients.push_back(a0);
    std::int64_t r = p - a0 * q;  // 0 <= r < q
    if (r != 0) {
        // tail = positive CF of q/r, which starts with a coefficient >= 1
        std::int64_t a = q, b = r;
        while (true) {
            cf.coefficients.push_back(a / b);
            std::int64_t rr = a % b;
            if (rr == 0) break;
            a = b;
            b = rr;
        }
    }
    return cf;
}

}  // namespace m3fill
