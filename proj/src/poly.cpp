#include "flagpoly/poly.hpp"

#include <sstream>

namespace flagpoly {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::InvalidDiagonal: return "InvalidDiagonal";
        case ErrorKind::InvalidRank: return "InvalidRank";
        case ErrorKind::SimplicityViolation: return "SimplicityViolation";
        case ErrorKind::NotPalindromic: return "NotPalindromic";
        case ErrorKind::NotAClique: return "NotAClique";
        case ErrorKind::NotAdjacent: return "NotAdjacent";
        case ErrorKind::NotAMember: return "NotAMember";
        case ErrorKind::FullSet: return "FullSet";
        case ErrorKind::InvalidBuildingSet: return "InvalidBuildingSet";
        case ErrorKind::NotFlag: return "NotFlag";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::StepBudget: return "StepBudget";
        case ErrorKind::SearchFailed: return "SearchFailed";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Error";
}

std::string IntPolynomial::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << ")";
    return os.str();
}

IntPolynomial f_polynomial(const FVector& fv) {
    return IntPolynomial(fv.f);
}

IntPolynomial f_to_h(const FVector& fv) {
    // h = sum_i f_i (t-1)^i, built with an incrementally updated power of (t-1)
    IntPolynomial h;
    IntPolynomial pow = IntPolynomial::constant(1);
    const IntPolynomial t_minus_1({-1, 1});
    for (int i = 0; i <= fv.n; ++i) {
        if (fv.f[std::size_t(i)] != 0)
            h = h + pow * IntPolynomial::constant(fv.f[std::size_t(i)]);
        pow = pow * t_minus_1;
    }
    return h;
}

bool is_palindromic(const IntPolynomial& h, int n) {
    for (int i = 0; i <= n; ++i)
        if (h.coeff(i) != h.coeff(n - i)) return false;
    return true;
}

IntPolynomial h_to_gamma(const IntPolynomial& h, int n) {
    if (h.degree() > n)
        throw Error(ErrorKind::BadInput, "h-polynomial degree exceeds declared dimension");
    if (!is_palindromic(h, n))
        throw Error(ErrorKind::NotPalindromic,
                    "h-polynomial fails h_i = h_{n-i}; input is not a simple polytope");

    // Peel layers: gamma_i is the t^i coefficient once lower layers are removed.
    IntPolynomial rem = h;
    std::vector<std::int64_t> gamma;
    const IntPolynomial one_plus_t({1, 1});
    for (int i = 0; i <= n / 2; ++i) {
        std::int64_t gi = rem.coeff(i);
        gamma.push_back(gi);
        if (gi != 0) {
            IntPolynomial layer = IntPolynomial::constant(gi);
            for (int k = 0; k < n - 2 * i; ++k) layer = layer * one_plus_t;
            rem = rem - layer.shift_up(i);
        }
    }
    if (!rem.is_zero())
        throw Error(ErrorKind::NotPalindromic, "gamma expansion left a nonzero remainder");
    return IntPolynomial(std::move(gamma));
}

IntPolynomial gamma_to_h(const IntPolynomial& gamma, int n) {
    IntPolynomial h;
    const IntPolynomial one_plus_t({1, 1});
    for (int i = 0; i <= gamma.degree(); ++i) {
        if (gamma.coeff(i) == 0) continue;
        IntPolynomial layer = IntPolynomial::constant(gamma.coeff(i));
        for (int k = 0; k < n - 2 * i; ++k) layer = layer * one_plus_t;
        h = h + layer.shift_up(i);
    }
    return h;
}

bool gal_check(const IntPolynomial& gamma) {
    for (std::int64_t c : gamma.coeffs())
        if (c < 0) return false;
    return true;
}

} // namespace flagpoly
