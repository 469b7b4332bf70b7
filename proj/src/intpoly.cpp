#include "skeinwrt/intpoly.hpp"

#include "skeinwrt/errors.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace skeinwrt {

IntPoly::IntPoly(BigInt v) {
    if (v != 0) c_.push_back(std::move(v));
}

IntPoly IntPoly::monomial(BigInt c, int k) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, BigInt(0));
    p.c_[static_cast<size_t>(k)] = std::move(c);
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> coeffs) {
    IntPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

bool IntPoly::is_monomial_term() const {
    if (c_.empty()) return false;
    for (size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const BigInt& IntPoly::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

const BigInt& IntPoly::lead() const {
    if (c_.empty()) throw InternalError("lead() of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::times(const BigInt& c) const {
    if (c == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

IntPoly IntPoly::unshifted(int k) const {
    if (k == 0) return *this;
    if (valuation() < k) throw InternalError("unshifted() below valuation");
    IntPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    IntPoly rem = *this;
    int dd = d.degree();
    if (degree() < dd) throw InternalError("exact_div: non-exact division");
    std::vector<BigInt> q(static_cast<size_t>(degree() - dd) + 1, BigInt(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        BigInt c = rem.lead() / d.lead();
        if (c * d.lead() != rem.lead())
            throw InternalError("exact_div: leading coefficient not divisible");
        int k = rem.degree() - dd;
        q[static_cast<size_t>(k)] = c;
        rem -= d.times(c).shifted(k);
    }
    if (!rem.is_zero()) throw InternalError("exact_div: non-exact division");
    return from_coeffs(std::move(q));
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& x : c_) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    IntPoly r = *this;
    for (auto& x : r.c_) x /= g;
    if (r.lead() < 0)
        for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

// Fraction-free reduction of a modulo b (deg a >= deg b); the result is a
// scalar multiple of the true remainder, which is all a primitive PRS needs.
IntPoly pseudo_reduce(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        IntPoly next = a.times(b.lead()) - b.times(a.lead()).shifted(k);
        a = std::move(next);
    }
    return a;
}

} // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.lead() < 0 ? -b : b;
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_reduce(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.times(cont);
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        if (!first) out << " + ";
        out << c << "*" << var << "^" << k;
        first = false;
    }
    return out.str();
}

const IntPoly& cyclotomic_polynomial(int m) {
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw DomainError("cyclotomic_polynomial: m must be positive");

    // x^m - 1 divided by the product of Phi_d for proper divisors d of m.
    std::function<const IntPoly&(int)> phi = [&](int n) -> const IntPoly& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        IntPoly num = IntPoly::monomial(1, n) - IntPoly(1);
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            num = num.exact_div(phi(d));
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return phi(m);
}

} // namespace skeinwrt
