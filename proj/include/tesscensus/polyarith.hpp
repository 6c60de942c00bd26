#ifndef TESSCENSUS_POLYARITH_HPP
#define TESSCENSUS_POLYARITH_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tesscensus/errors.hpp"

namespace tesscensus {

using BigInt = mpz_class;
using BigRational = mpq_class;

/**
 * Univariate polynomial with arbitrary-precision integer coefficients.
 *
 * Coefficient i multiplies z^i. The representation is always trimmed: the
 * highest stored coefficient is nonzero, and the zero polynomial is the empty
 * sequence with degree -1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// c * z^power.
    static IntPoly monomial(const BigInt& c, std::size_t power);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of z^i; zero beyond the degree.
    BigInt coeff(std::size_t i) const;
    const BigInt& leading() const;

    BigRational eval(const BigRational& x) const;
    IntPoly derivative() const;
    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    BigInt content() const;

    /// Human-readable form such as "1 - 3z + z^2".
    std::string to_string(char var = 'z') const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const BigInt& c);

/// Quotient of an exact division over the integers. Throws NotDivisible when
/// b does not divide a in Z[z], and std::domain_error when b is zero.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);

/// a divided by its content, with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& a);

/// Primitive greatest common divisor (positive leading coefficient), computed
/// with a primitive pseudo-remainder sequence. gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return poly_add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return poly_sub(a, b); }
inline IntPoly operator-(const IntPoly& a) { return poly_neg(a); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return poly_mul(a, b); }

class RationalGF;
RationalGF gf_normalize(const IntPoly& num, const IntPoly& den);

/**
 * Reduced rational function P(z)/Q(z) with Q(0) = 1.
 *
 * Only gf_normalize constructs nonzero values, so every instance is in
 * canonical form and structural equality is equality of rational functions.
 */
class RationalGF {
public:
    /// The zero function 0/1.
    RationalGF() : den_{1} {}

    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    std::string to_string(char var = 'z') const;

    friend bool operator==(const RationalGF& a, const RationalGF& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RationalGF(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    friend RationalGF gf_normalize(const IntPoly& num, const IntPoly& den);

    IntPoly num_;
    IntPoly den_;
};

RationalGF gf_add(const RationalGF& a, const RationalGF& b);

/// Taylor coefficients 0..n_max of gf.num / gf.den.
std::vector<BigInt> series_coeffs(const RationalGF& gf, std::size_t n_max);

/// Same expansion for an arbitrary pair with den(0) != 0. Throws NotDivisible
/// if a coefficient would leave the integers.
std::vector<BigInt> series_coeffs(const IntPoly& num, const IntPoly& den, std::size_t n_max);

}  // namespace tesscensus

#endif  // TESSCENSUS_POLYARITH_HPP
