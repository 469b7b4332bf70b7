#pragma once

#include "skeinwrt/scalar.hpp"

#include <map>

namespace skeinwrt {

/// The skein algebra of the annulus: polynomials in the core curve class z
/// with Scalar coefficients. Stored over the monomial basis; the Chebyshev
/// S-basis view is an exact change of basis.
class AnnulusElement {
public:
    explicit AnnulusElement(ScalarRing ring) : ring_(ring) {}

    static AnnulusElement zero(const ScalarRing& ring) { return AnnulusElement(ring); }
    static AnnulusElement constant(const Scalar& c, const ScalarRing& ring);
    static AnnulusElement monomial(int k, const ScalarRing& ring); // z^k

    const ScalarRing& ring() const { return ring_; }
    const std::map<int, Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    Scalar coeff(int k) const;
    void add_term(int k, const Scalar& c);

    AnnulusElement operator+(const AnnulusElement& o) const;
    AnnulusElement operator-(const AnnulusElement& o) const;
    AnnulusElement operator*(const AnnulusElement& o) const;
    AnnulusElement scaled(const Scalar& c) const;
    bool operator==(const AnnulusElement& o) const { return c_ == o.c_; }
    bool operator!=(const AnnulusElement& o) const { return !(*this == o); }

    /// Exact expansion over the Chebyshev S_n basis (S-degree -> coefficient).
    std::map<int, Scalar> to_s_basis() const;
    static AnnulusElement from_s_basis(const std::map<int, Scalar>& s, const ScalarRing& ring);

    std::string to_string() const;

private:
    ScalarRing ring_;
    std::map<int, Scalar> c_; // degree -> coefficient, zero terms pruned
};

enum class ChebKind { T, S };

/// Chebyshev polynomials by the shared recurrence P_n = x P_{n-1} - P_{n-2}:
/// T_0 = 2, T_1 = x (first kind); S_0 = 1, S_1 = x (second kind).
AnnulusElement chebyshev(ChebKind kind, int n, const ScalarRing& ring);

/// Threading P along `copies` parallel core curves: P(z)^copies.
AnnulusElement thread_polynomial(const AnnulusElement& p, int copies = 1);

/// Canonical form in the WRT quotient for odd N, supported on the admissible
/// S-colors {0, 2, ..., N-3}: rewrites S_{N-1} -> 0, S_m -> S_{N-2-m} for
/// m > (N-2)/2, and extends to negative indices by S_{-1} = 0,
/// S_{-m-2} = -S_m. Throws EvenN when N is even.
AnnulusElement reduce_wrt(const AnnulusElement& x, int N);

/// Coefficients of reduce_wrt(P(z) * S_w(z)) over the admissible S-basis.
/// For even N only the single truncation rule S_{N/2-1} -> 0 is asserted;
/// indices beyond it throw EvenN.
std::map<int, Scalar> curve_action(int w, const AnnulusElement& p, int N);

/// Computes curve_action(w, T_N, N); asserts the result is {w: -2} and
/// returns that scalar. Throws ShadowMismatch otherwise (a bug, not a math
/// outcome) and EvenN for even N.
Scalar shadow_check(int w, int N, const ScalarRing& ring);

} // namespace skeinwrt
