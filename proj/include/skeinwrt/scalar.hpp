#pragma once

#include "skeinwrt/intpoly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace skeinwrt {

/// Element of Q(A): a reduced fraction of integer polynomials in A.
/// Negative powers of A live in the denominator (A^-k == 1/A^k).
/// Canonical form: gcd(num, den) = 1, den has positive leading coefficient,
/// zero is 0/1. Equality is structural.
class GenericScalar {
public:
    GenericScalar() : num_(), den_(1) {}
    GenericScalar(long v) : num_(v), den_(1) {}
    explicit GenericScalar(BigInt v) : num_(std::move(v)), den_(1) {}
    GenericScalar(IntPoly num, IntPoly den);

    static GenericScalar a_power(long k);
    static GenericScalar from_rational(const Rational& q);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    GenericScalar operator-() const;
    friend GenericScalar operator+(const GenericScalar& a, const GenericScalar& b);
    friend GenericScalar operator-(const GenericScalar& a, const GenericScalar& b);
    friend GenericScalar operator*(const GenericScalar& a, const GenericScalar& b);
    friend GenericScalar operator/(const GenericScalar& a, const GenericScalar& b);

    bool operator==(const GenericScalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const GenericScalar& o) const { return !(*this == o); }
    bool operator<(const GenericScalar& o) const;

    std::string to_string() const;

private:
    IntPoly num_, den_;
    void reduce();
};

/// Element of the cyclotomic field Q[A]/Phi_2N(A), stored as the canonical
/// representative of degree < phi(2N) with rational coefficients.
class CycScalar {
public:
    CycScalar(int n, std::vector<Rational> coeffs); // reduced mod Phi_2N by caller
    static CycScalar from_poly(int n, const IntPoly& p);
    static CycScalar integer(int n, const BigInt& v);
    static CycScalar from_rational(int n, const Rational& q);
    static CycScalar a_power(int n, long k);

    int level() const { return n_; } // N: the root is a primitive 2N-th root
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    CycScalar operator-() const;
    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
    CycScalar inverse() const;

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }
    bool operator<(const CycScalar& o) const;

    std::string to_string() const;

private:
    int n_;
    std::vector<Rational> c_; // fixed length deg Phi_2N
};

/// Which exact coefficient ring a computation runs in. All scalars in one
/// computation share a single mode.
struct ScalarRing {
    enum class Mode { Generic, Cyclotomic };
    Mode mode = Mode::Generic;
    int N = 0; // meaningful in cyclotomic mode only

    static ScalarRing generic() { return {Mode::Generic, 0}; }
    static ScalarRing cyclotomic(int N);

    bool is_generic() const { return mode == Mode::Generic; }
    bool operator==(const ScalarRing& o) const {
        return mode == o.mode && (mode == Mode::Generic || N == o.N);
    }
    bool operator!=(const ScalarRing& o) const { return !(*this == o); }
    std::string to_string() const;
};

/// Exact coefficient: an element of Q(A) or of Q[A]/Phi_2N, depending on the
/// ring it was created in. Immutable value type with structural equality.
class Scalar {
public:
    Scalar() : v_(GenericScalar()) {}
    Scalar(GenericScalar g) : v_(std::move(g)) {}
    Scalar(CycScalar c) : v_(std::move(c)) {}

    static Scalar zero(const ScalarRing& ring) { return integer(0, ring); }
    static Scalar one(const ScalarRing& ring) { return integer(1, ring); }
    static Scalar integer(const BigInt& v, const ScalarRing& ring);
    static Scalar integer(long v, const ScalarRing& ring) { return integer(BigInt(v), ring); }
    static Scalar rational(const Rational& q, const ScalarRing& ring);
    /// A^k, any integer k.
    static Scalar a_power(long k, const ScalarRing& ring);

    ScalarRing ring() const;
    bool is_zero() const;
    bool is_generic() const { return std::holds_alternative<GenericScalar>(v_); }
    const GenericScalar& generic() const;
    const CycScalar& cyc() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order for deterministic containers, not a mathematical order.
    bool operator<(const Scalar& o) const;

    std::string to_string() const;

private:
    std::variant<GenericScalar, CycScalar> v_;
};

/// Quantum integer [n] = (A^2n - A^-2n)/(A^2 - A^-2) as the closed Laurent
/// sum A^{2(n-1)} + A^{2(n-3)} + ... + A^{-2(n-1)}; generic mode never divides.
Scalar quantum_integer(int n, const ScalarRing& ring);

/// [n]! = [1][2]...[n]; [0]! = 1.
Scalar quantum_factorial(int n, const ScalarRing& ring);

/// delta = -A^2 - A^-2, the value of a trivial loop.
Scalar loop_value(const ScalarRing& ring);

/// Image under A -> primitive 2N-th root of unity; reduction mod Phi_2N.
/// Throws DenominatorVanishes if the expression has a pole there.
Scalar specialize(const Scalar& x, int N);

} // namespace skeinwrt
