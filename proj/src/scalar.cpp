#include "skeinwrt/scalar.hpp"

#include "skeinwrt/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace skeinwrt {

// ---------------------------------------------------------------------------
// GenericScalar

GenericScalar::GenericScalar(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("GenericScalar with zero denominator");
    reduce();
}

void GenericScalar::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    // Strip the common power of A.
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        num_ = num_.unshifted(v);
        den_ = den_.unshifted(v);
    }
    // Strip the common integer content.
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.exact_div(IntPoly(g));
        den_ = den_.exact_div(IntPoly(g));
    }
    // Monomial denominators (Laurent values) need no polynomial gcd.
    if (!den_.is_monomial_term()) {
        IntPoly d = IntPoly::gcd(num_, den_);
        if (!d.is_one()) {
            num_ = num_.exact_div(d);
            den_ = den_.exact_div(d);
        }
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

GenericScalar GenericScalar::a_power(long k) {
    GenericScalar r;
    if (k >= 0) {
        r.num_ = IntPoly::monomial(1, static_cast<int>(k));
        r.den_ = IntPoly(1);
    } else {
        r.num_ = IntPoly(1);
        r.den_ = IntPoly::monomial(1, static_cast<int>(-k));
    }
    return r;
}

GenericScalar GenericScalar::from_rational(const Rational& q) {
    return GenericScalar(IntPoly(numerator(q)), IntPoly(denominator(q)));
}

GenericScalar GenericScalar::operator-() const {
    GenericScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

GenericScalar operator+(const GenericScalar& a, const GenericScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return GenericScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

GenericScalar operator-(const GenericScalar& a, const GenericScalar& b) {
    return a + (-b);
}

GenericScalar operator*(const GenericScalar& a, const GenericScalar& b) {
    if (a.is_zero() || b.is_zero()) return GenericScalar();
    return GenericScalar(a.num_ * b.num_, a.den_ * b.den_);
}

GenericScalar operator/(const GenericScalar& a, const GenericScalar& b) {
    if (b.is_zero()) throw DomainError("division by zero scalar");
    return GenericScalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool GenericScalar::operator<(const GenericScalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::string GenericScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (cyclotomic arithmetic internals)

namespace {

using RatVec = std::vector<Rational>;

void rat_trim(RatVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int rat_deg(const RatVec& p) { return static_cast<int>(p.size()) - 1; }

RatVec rat_mul(const RatVec& a, const RatVec& b) {
    if (a.empty() || b.empty()) return {};
    RatVec r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rat_trim(r);
    return r;
}

RatVec rat_sub(RatVec a, const RatVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rat_trim(a);
    return a;
}

RatVec rat_scale(RatVec a, const Rational& c) {
    for (auto& x : a) x *= c;
    rat_trim(a);
    return a;
}

// a mod m, m monic-leading nonzero.
RatVec rat_mod(RatVec a, const RatVec& m) {
    rat_trim(a);
    int dm = rat_deg(m);
    while (rat_deg(a) >= dm) {
        Rational c = a.back() / m.back();
        int k = rat_deg(a) - dm;
        for (int i = 0; i <= dm; ++i) a[static_cast<size_t>(i + k)] -= c * m[static_cast<size_t>(i)];
        rat_trim(a);
    }
    return a;
}

RatVec rat_divmod(RatVec a, const RatVec& m, RatVec& q_out) {
    rat_trim(a);
    int dm = rat_deg(m);
    RatVec q;
    if (rat_deg(a) >= dm) q.assign(static_cast<size_t>(rat_deg(a) - dm) + 1, Rational(0));
    while (rat_deg(a) >= dm) {
        Rational c = a.back() / m.back();
        int k = rat_deg(a) - dm;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= dm; ++i) a[static_cast<size_t>(i + k)] -= c * m[static_cast<size_t>(i)];
        rat_trim(a);
    }
    rat_trim(q);
    q_out = std::move(q);
    return a;
}

RatVec to_ratvec(const IntPoly& p) {
    RatVec r;
    r.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) r.push_back(Rational(p.coeff(i)));
    rat_trim(r);
    return r;
}

const RatVec& phi_ratvec(int n) {
    static std::map<int, RatVec> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, to_ratvec(cyclotomic_polynomial(2 * n))).first;
    return it->second;
}

// Inverse of a mod m via extended Euclid over Q[x]. a nonzero mod m,
// gcd(a, m) = 1 since Phi_2N is irreducible over Q.
RatVec rat_inverse_mod(RatVec a, const RatVec& m) {
    RatVec r0 = m, r1 = std::move(a);
    RatVec t0, t1 = {Rational(1)};
    while (!r1.empty()) {
        RatVec q;
        RatVec r2 = rat_divmod(r0, r1, q);
        RatVec t2 = rat_sub(t0, rat_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a nonzero constant); t0 * a == r0 (mod m)
    if (rat_deg(r0) != 0)
        throw InternalError("rat_inverse_mod: modulus not irreducible?");
    return rat_scale(std::move(t0), Rational(1) / r0[0]);
}

} // namespace

// ---------------------------------------------------------------------------
// CycScalar

CycScalar::CycScalar(int n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
    size_t want = static_cast<size_t>(rat_deg(phi_ratvec(n)));
    c_.resize(want, Rational(0));
}

CycScalar CycScalar::from_poly(int n, const IntPoly& p) {
    RatVec v = rat_mod(to_ratvec(p), phi_ratvec(n));
    return CycScalar(n, std::move(v));
}

CycScalar CycScalar::integer(int n, const BigInt& v) {
    return CycScalar(n, {Rational(v)});
}

CycScalar CycScalar::from_rational(int n, const Rational& q) {
    return CycScalar(n, {q});
}

CycScalar CycScalar::a_power(int n, long k) {
    long m = 2L * n;
    long r = ((k % m) + m) % m;
    return from_poly(n, IntPoly::monomial(1, static_cast<int>(r)));
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.n_ != b.n_) throw ScalarModeMismatch("cyclotomic levels differ");
    CycScalar r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.n_ != b.n_) throw ScalarModeMismatch("cyclotomic levels differ");
    RatVec prod = rat_mul(a.c_, b.c_);
    RatVec red = rat_mod(std::move(prod), phi_ratvec(a.n_));
    return CycScalar(a.n_, std::move(red));
}

CycScalar CycScalar::inverse() const {
    RatVec me = c_;
    rat_trim(me);
    if (me.empty()) throw DomainError("inverse of zero in cyclotomic field");
    return CycScalar(n_, rat_inverse_mod(std::move(me), phi_ratvec(n_)));
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) {
    return a * b.inverse();
}

bool CycScalar::operator==(const CycScalar& o) const {
    return n_ == o.n_ && c_ == o.c_;
}

bool CycScalar::operator<(const CycScalar& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return c_ < o.c_;
}

std::string CycScalar::to_string() const {
    std::ostringstream out;
    out << "cyc(N=" << n_ << ")[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ", ";
        out << c_[i];
    }
    out << "]";
    return out.str();
}

// ---------------------------------------------------------------------------
// ScalarRing / Scalar

ScalarRing ScalarRing::cyclotomic(int N) {
    if (N < 3) throw DomainError("cyclotomic ring requires N >= 3");
    return {Mode::Cyclotomic, N};
}

std::string ScalarRing::to_string() const {
    if (is_generic()) return "generic";
    return "cyclotomic(N=" + std::to_string(N) + ")";
}

Scalar Scalar::integer(const BigInt& v, const ScalarRing& ring) {
    if (ring.is_generic()) return Scalar(GenericScalar(v));
    return Scalar(CycScalar::integer(ring.N, v));
}

Scalar Scalar::rational(const Rational& q, const ScalarRing& ring) {
    if (ring.is_generic()) return Scalar(GenericScalar::from_rational(q));
    return Scalar(CycScalar::from_rational(ring.N, q));
}

Scalar Scalar::a_power(long k, const ScalarRing& ring) {
    if (ring.is_generic()) return Scalar(GenericScalar::a_power(k));
    return Scalar(CycScalar::a_power(ring.N, k));
}

ScalarRing Scalar::ring() const {
    if (is_generic()) return ScalarRing::generic();
    return ScalarRing::cyclotomic(std::get<CycScalar>(v_).level());
}

bool Scalar::is_zero() const {
    if (is_generic()) return std::get<GenericScalar>(v_).is_zero();
    return std::get<CycScalar>(v_).is_zero();
}

const GenericScalar& Scalar::generic() const {
    if (!is_generic()) throw ScalarModeMismatch("expected generic scalar");
    return std::get<GenericScalar>(v_);
}

const CycScalar& Scalar::cyc() const {
    if (is_generic()) throw ScalarModeMismatch("expected cyclotomic scalar");
    return std::get<CycScalar>(v_);
}

Scalar Scalar::operator-() const {
    if (is_generic()) return Scalar(-std::get<GenericScalar>(v_));
    return Scalar(-std::get<CycScalar>(v_));
}

namespace {

void check_modes(const Scalar& a, const Scalar& b) {
    if (a.is_generic() != b.is_generic())
        throw ScalarModeMismatch("mixing generic and cyclotomic scalars");
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_modes(a, b);
    if (a.is_generic()) return Scalar(a.generic() + b.generic());
    return Scalar(a.cyc() + b.cyc());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    check_modes(a, b);
    if (a.is_generic()) return Scalar(a.generic() - b.generic());
    return Scalar(a.cyc() - b.cyc());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_modes(a, b);
    if (a.is_generic()) return Scalar(a.generic() * b.generic());
    return Scalar(a.cyc() * b.cyc());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    check_modes(a, b);
    if (a.is_generic()) return Scalar(a.generic() / b.generic());
    return Scalar(a.cyc() / b.cyc());
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_generic() != o.is_generic()) return false;
    if (is_generic()) return generic() == o.generic();
    return cyc() == o.cyc();
}

bool Scalar::operator<(const Scalar& o) const {
    if (is_generic() != o.is_generic()) return is_generic();
    if (is_generic()) return generic() < o.generic();
    return cyc() < o.cyc();
}

std::string Scalar::to_string() const {
    if (is_generic()) return generic().to_string();
    return cyc().to_string();
}

// ---------------------------------------------------------------------------
// Quantum integers and friends

Scalar quantum_integer(int n, const ScalarRing& ring) {
    if (n < 0) throw DomainError("quantum_integer: n must be nonnegative");
    // [n] = sum_{i=0}^{n-1} A^{4i - 2(n-1)} = (sum A^{4i}) / A^{2(n-1)}
    IntPoly num;
    for (int i = 0; i < n; ++i) num += IntPoly::monomial(1, 4 * i);
    GenericScalar g(std::move(num), IntPoly::monomial(1, 2 * (n - 1 > 0 ? n - 1 : 0)));
    if (ring.is_generic()) return Scalar(std::move(g));
    return specialize(Scalar(std::move(g)), ring.N);
}

Scalar quantum_factorial(int n, const ScalarRing& ring) {
    if (n < 0) throw DomainError("quantum_factorial: n must be nonnegative");
    struct Key {
        ScalarRing::Mode mode;
        int N, n;
        bool operator<(const Key& o) const {
            if (mode != o.mode) return mode < o.mode;
            if (N != o.N) return N < o.N;
            return n < o.n;
        }
    };
    static std::map<Key, Scalar> cache;
    static std::mutex mtx;
    Key key{ring.mode, ring.is_generic() ? 0 : ring.N, n};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Scalar r = Scalar::one(ring);
    for (int k = 2; k <= n; ++k) r = r * quantum_integer(k, ring);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(r)).first->second;
}

Scalar loop_value(const ScalarRing& ring) {
    return -(Scalar::a_power(2, ring) + Scalar::a_power(-2, ring));
}

Scalar specialize(const Scalar& x, int N) {
    if (!x.is_generic()) {
        if (x.cyc().level() != N)
            throw ScalarModeMismatch("specialize: scalar already at a different level");
        return x;
    }
    CycScalar num = CycScalar::from_poly(N, x.generic().num());
    CycScalar den = CycScalar::from_poly(N, x.generic().den());
    if (den.is_zero())
        throw DenominatorVanishes("denominator vanishes at the primitive 2N-th root, N=" +
                                  std::to_string(N));
    return Scalar(num / den);
}

} // namespace skeinwrt
