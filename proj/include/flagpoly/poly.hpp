#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagpoly/errors.hpp"

namespace flagpoly {

// Overflow-checked 64-bit arithmetic. Any overflow is a hard error.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "integer addition overflowed");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "integer multiplication overflowed");
    return r;
}

// Polynomial with exact integer coefficients, stored by ascending degree
// with no trailing zeros. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static IntPolynomial constant(std::int64_t v) { return IntPolynomial({v}); }

    // degree of the zero polynomial is -1
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    std::int64_t coeff(int i) const {
        if (i < 0 || i >= int(c_.size())) return 0;
        return c_[std::size_t(i)];
    }

    const std::vector<std::int64_t>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = checked_add(coeff(int(i)), o.coeff(int(i)));
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = checked_add(coeff(int(i)), checked_mul(-1, o.coeff(int(i))));
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntPolynomial();
        std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
        return IntPolynomial(std::move(r));
    }

    // multiply by t^k
    IntPolynomial shift_up(int k) const {
        if (is_zero()) return IntPolynomial();
        std::vector<std::int64_t> r(c_.size() + std::size_t(k), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + std::size_t(k)] = c_[i];
        return IntPolynomial(std::move(r));
    }

    std::int64_t eval_at_one() const {
        std::int64_t s = 0;
        for (std::int64_t x : c_) s = checked_add(s, x);
        return s;
    }

    bool operator==(const IntPolynomial& o) const = default;

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::int64_t> c_;
};

// Face counts f_0..f_n of an n-polytope; f_n = 1 is the polytope itself.
struct FVector {
    int n = 0;
    std::vector<std::int64_t> f; // size n+1

    std::int64_t facet_count() const { return n >= 1 ? f[std::size_t(n) - 1] : 0; }
    bool operator==(const FVector&) const = default;
};

IntPolynomial f_polynomial(const FVector& fv);

// h(t) = f(t-1)
IntPolynomial f_to_h(const FVector& fv);

bool is_palindromic(const IntPolynomial& h, int n);

// Unique gamma with h(t) = sum_i gamma_i t^i (1+t)^(n-2i).
// Throws NotPalindromic when h fails Dehn-Sommerville reciprocity.
IntPolynomial h_to_gamma(const IntPolynomial& h, int n);

// Re-expand a gamma polynomial into the h basis; inverse of h_to_gamma.
IntPolynomial gamma_to_h(const IntPolynomial& gamma, int n);

// Gal nonnegativity: all coefficients >= 0.
bool gal_check(const IntPolynomial& gamma);

} // namespace flagpoly
