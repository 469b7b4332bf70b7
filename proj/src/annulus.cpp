#include "skeinwrt/annulus.hpp"

#include "skeinwrt/errors.hpp"
#include "skeinwrt/recoupling.hpp"

#include <sstream>

namespace skeinwrt {

AnnulusElement AnnulusElement::constant(const Scalar& c, const ScalarRing& ring) {
    AnnulusElement r(ring);
    r.add_term(0, c);
    return r;
}

AnnulusElement AnnulusElement::monomial(int k, const ScalarRing& ring) {
    if (k < 0) throw DomainError("annulus monomial with negative degree");
    AnnulusElement r(ring);
    r.add_term(k, Scalar::one(ring));
    return r;
}

Scalar AnnulusElement::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Scalar::zero(ring_) : it->second;
}

void AnnulusElement::add_term(int k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

AnnulusElement AnnulusElement::operator+(const AnnulusElement& o) const {
    AnnulusElement r = *this;
    for (const auto& [k, c] : o.c_) r.add_term(k, c);
    return r;
}

AnnulusElement AnnulusElement::operator-(const AnnulusElement& o) const {
    AnnulusElement r = *this;
    for (const auto& [k, c] : o.c_) r.add_term(k, -c);
    return r;
}

AnnulusElement AnnulusElement::operator*(const AnnulusElement& o) const {
    AnnulusElement r(ring_);
    for (const auto& [i, a] : c_)
        for (const auto& [j, b] : o.c_) r.add_term(i + j, a * b);
    return r;
}

AnnulusElement AnnulusElement::scaled(const Scalar& c) const {
    AnnulusElement r(ring_);
    for (const auto& [k, x] : c_) r.add_term(k, x * c);
    return r;
}

std::map<int, Scalar> AnnulusElement::to_s_basis() const {
    // subtract leading S_k terms; S_k is monic of degree k
    AnnulusElement rest = *this;
    std::map<int, Scalar> out;
    while (!rest.is_zero()) {
        int k = rest.degree();
        Scalar c = rest.coeff(k);
        out.emplace(k, c);
        rest = rest - chebyshev(ChebKind::S, k, ring_).scaled(c);
        if (!rest.is_zero() && rest.degree() >= k)
            throw InternalError("S-basis conversion failed to reduce degree");
    }
    return out;
}

AnnulusElement AnnulusElement::from_s_basis(const std::map<int, Scalar>& s,
                                            const ScalarRing& ring) {
    AnnulusElement r(ring);
    for (const auto& [k, c] : s) r = r + chebyshev(ChebKind::S, k, ring).scaled(c);
    return r;
}

std::string AnnulusElement::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) out << " + ";
        out << "(" << it->second.to_string() << ")*z^" << it->first;
        first = false;
    }
    return out.str();
}

AnnulusElement chebyshev(ChebKind kind, int n, const ScalarRing& ring) {
    if (n < 0) throw DomainError("chebyshev: n must be nonnegative");
    AnnulusElement p0(ring), p1(ring);
    p0.add_term(0, Scalar::integer(kind == ChebKind::T ? 2 : 1, ring));
    p1.add_term(1, Scalar::one(ring));
    if (n == 0) return p0;
    if (n == 1) return p1;
    AnnulusElement z = AnnulusElement::monomial(1, ring);
    for (int k = 2; k <= n; ++k) {
        AnnulusElement next = z * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

AnnulusElement thread_polynomial(const AnnulusElement& p, int copies) {
    if (copies < 0) throw DomainError("thread_polynomial: copies must be nonnegative");
    AnnulusElement r = AnnulusElement::constant(Scalar::one(p.ring()), p.ring());
    for (int i = 0; i < copies; ++i) r = r * p;
    return r;
}

namespace {

// Normalize an S-index into the admissible window for odd N.
// Returns (sign, index); sign 0 encodes the zero class.
std::pair<int, int> normalize_s_index(int m, int N) {
    if (m == -1) return {0, 0};
    if (m < -1) {
        auto [s, k] = normalize_s_index(-m - 2, N);
        return {-s, k};
    }
    if (m == N - 1) return {0, 0};
    if (m > N - 1) return normalize_s_index(N - 2 - m, N);
    if (m % 2 == 1) return normalize_s_index(N - 2 - m, N); // lands on the even partner
    return {1, m};
}

} // namespace

AnnulusElement reduce_wrt(const AnnulusElement& x, int N) {
    if (N % 2 == 0) throw EvenN("reduce_wrt: reduction rules are only asserted for odd N");
    if (N < 3) throw DomainError("reduce_wrt: N >= 3 required");
    const ScalarRing& ring = x.ring();
    std::map<int, Scalar> s = x.to_s_basis();
    AnnulusElement out(ring);
    std::map<int, Scalar> acc;
    for (const auto& [m, c] : s) {
        auto [sign, k] = normalize_s_index(m, N);
        if (sign == 0) continue;
        Scalar v = sign == 1 ? c : -c;
        auto [it, inserted] = acc.emplace(k, v);
        if (!inserted) it->second += v;
    }
    for (const auto& [k, c] : acc) {
        if (c.is_zero()) continue;
        out = out + chebyshev(ChebKind::S, k, ring).scaled(c);
    }
    return out;
}

std::map<int, Scalar> curve_action(int w, const AnnulusElement& p, int N) {
    const ScalarRing& ring = p.ring();
    if (!admissible_color(w, N))
        throw DomainError("curve_action: color " + std::to_string(w) +
                          " is not admissible at N=" + std::to_string(N));
    AnnulusElement prod = p * chebyshev(ChebKind::S, w, ring);
    if (N % 2 == 1) return reduce_wrt(prod, N).to_s_basis();

    // Even N: only the truncation S_{N/2-1} -> 0 is available.
    std::map<int, Scalar> s = prod.to_s_basis();
    std::map<int, Scalar> out;
    for (const auto& [m, c] : s) {
        int k = m;
        Scalar v = c;
        if (k == -1) continue;
        if (k < -1) {
            k = -k - 2;
            v = -v;
        }
        if (k == N / 2 - 1) continue;
        if (k > N / 2 - 1)
            throw EvenN("curve_action: S-index " + std::to_string(k) +
                        " exceeds the even-N truncation rule");
        out[k] = out.count(k) ? out[k] + v : v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Scalar shadow_check(int w, int N, const ScalarRing& ring) {
    if (N % 2 == 0) throw EvenN("shadow_check: the classical shadow needs odd N");
    if (!admissible_color(w, N))
        throw DomainError("shadow_check: inadmissible color " + std::to_string(w));
    auto action = curve_action(w, chebyshev(ChebKind::T, N, ring), N);
    Scalar minus_two = Scalar::integer(-2, ring);
    bool ok = action.size() == 1 && action.count(w) && action.at(w) == minus_two;
    if (!ok)
        throw ShadowMismatch("threading T_N on a color-" + std::to_string(w) +
                             " curve did not reduce to -2 times itself (N=" +
                             std::to_string(N) + ")");
    return minus_two;
}

} // namespace skeinwrt
