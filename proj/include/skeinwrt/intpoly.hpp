#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace skeinwrt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in one variable over arbitrary-precision integers.
/// Coefficient vector is always trimmed: empty means zero, otherwise the
/// leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v) : IntPoly(BigInt(v)) {}
    explicit IntPoly(BigInt v);

    static IntPoly monomial(BigInt c, int k);
    static IntPoly from_coeffs(std::vector<BigInt> coeffs);

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Lowest nonzero exponent; -1 for the zero polynomial.
    int valuation() const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Exactly one nonzero term.
    bool is_monomial_term() const;

    const BigInt& coeff(int k) const;
    const BigInt& lead() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly times(const BigInt& c) const;

    /// Multiply by x^k (k >= 0).
    IntPoly shifted(int k) const;
    /// Divide by x^k; requires valuation() >= k.
    IntPoly unshifted(int k) const;

    /// Exact division; throws InternalError if the remainder is nonzero.
    IntPoly exact_div(const IntPoly& d) const;

    /// gcd over Z (content times primitive gcd), normalized to positive
    /// leading coefficient. gcd(0, b) = |b|-normalized b.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    IntPoly primitive_part() const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    bool operator<(const IntPoly& o) const;

    /// Sparse canonical form: terms "c*A^k" in descending k joined by " + ";
    /// "0" for zero.
    std::string to_string(const std::string& var = "A") const;

private:
    std::vector<BigInt> c_;
    void trim();
};

/// The 2N-th cyclotomic polynomial Phi_2N (memoized).
const IntPoly& cyclotomic_polynomial(int two_n);

} // namespace skeinwrt
