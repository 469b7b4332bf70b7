#include "skeinwrt/tl.hpp"

#include "skeinwrt/errors.hpp"

#include <mutex>
#include <sstream>

namespace skeinwrt {

// ---------------------------------------------------------------------------
// PlanarMatching

PlanarMatching::PlanarMatching(std::vector<int> pairing) : pair_(std::move(pairing)) {
    int k = static_cast<int>(pair_.size());
    if (k % 2 != 0) throw InternalError("matching on an odd number of points");
    for (int i = 0; i < k; ++i) {
        int j = pair_[static_cast<size_t>(i)];
        if (j < 0 || j >= k || j == i || pair_[static_cast<size_t>(j)] != i)
            throw InternalError("pairing is not a fixed-point-free involution");
    }
    // Noncrossing in the circular point order.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int pi = pair_[static_cast<size_t>(i)], pj = pair_[static_cast<size_t>(j)];
            if (pi <= j || pj <= i) continue;
            bool j_inside = (j > i && j < pi);
            bool pj_inside = (pj > i && pj < pi);
            if (j_inside != pj_inside) throw InternalError("crossing matching");
        }
    }
}

PlanarMatching PlanarMatching::identity(int n) {
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        p[static_cast<size_t>(j)] = 2 * n - 1 - j;
        p[static_cast<size_t>(2 * n - 1 - j)] = j;
    }
    return PlanarMatching(std::move(p));
}

PlanarMatching PlanarMatching::cupcap(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("cupcap index out of range");
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        p[static_cast<size_t>(j)] = 2 * n - 1 - j;
        p[static_cast<size_t>(2 * n - 1 - j)] = j;
    }
    auto link = [&](int a, int b) {
        p[static_cast<size_t>(a)] = b;
        p[static_cast<size_t>(b)] = a;
    };
    link(i - 1, i);
    link(2 * n - i, 2 * n - 1 - i);
    return PlanarMatching(std::move(p));
}

std::string PlanarMatching::to_string() const {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (int i = 0; i < points(); ++i) {
        if (partner(i) < i) continue;
        if (!first) out << " ";
        out << i << "-" << partner(i);
        first = false;
    }
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// TLElement

TLElement TLElement::identity(int n, const ScalarRing& ring) {
    return single(PlanarMatching::identity(n), Scalar::one(ring), ring);
}

TLElement TLElement::generator(int n, int i, const ScalarRing& ring) {
    return single(PlanarMatching::cupcap(n, i), Scalar::one(ring), ring);
}

TLElement TLElement::single(PlanarMatching m, Scalar coeff, const ScalarRing& ring) {
    TLElement e(m.strands(), ring);
    e.add_term(m, coeff);
    return e;
}

Scalar TLElement::coefficient(const PlanarMatching& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Scalar::zero(ring_);
    return it->second;
}

void TLElement::add_term(const PlanarMatching& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (n_ != o.n_) throw StrandMismatch("adding TL elements of different sizes");
    TLElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
    if (n_ != o.n_) throw StrandMismatch("subtracting TL elements of different sizes");
    TLElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

TLElement TLElement::scaled(const Scalar& c) const {
    TLElement r(n_, ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
}

std::string TLElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << "  +  ";
        out << "(" << c.to_string() << ") " << m.to_string();
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Gluing

void follow_paths(const std::vector<int>& match, const std::vector<int>& seam,
                  std::vector<int>& ext_pair, int& loops) {
    size_t k = match.size();
    std::vector<char> seen(k, 0);
    ext_pair.assign(k, -1);
    loops = 0;
    for (size_t i = 0; i < k; ++i) {
        if (seen[i] || seam[i] != -1) continue;
        // walk: matching edge, then seam, alternating, until a seamless node
        int cur = static_cast<int>(i);
        seen[i] = 1;
        for (;;) {
            int j = match[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(j)] = 1;
            if (seam[static_cast<size_t>(j)] == -1) {
                ext_pair[i] = j;
                ext_pair[static_cast<size_t>(j)] = static_cast<int>(i);
                break;
            }
            cur = seam[static_cast<size_t>(j)];
            seen[static_cast<size_t>(cur)] = 1;
        }
    }
    // remaining components are closed loops
    for (size_t i = 0; i < k; ++i) {
        if (seen[i]) continue;
        ++loops;
        int cur = static_cast<int>(i);
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            int j = match[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(j)] = 1;
            cur = seam[static_cast<size_t>(j)];
        }
    }
}

TLElement compose(const TLElement& x, const TLElement& y) {
    if (x.strands() != y.strands())
        throw StrandMismatch("compose: " + std::to_string(x.strands()) + " vs " +
                             std::to_string(y.strands()) + " strands");
    int n = x.strands();
    const ScalarRing& ring = x.ring();
    TLElement result(n, ring);
    if (x.is_zero() || y.is_zero()) return result;

    Scalar delta = loop_value(ring);
    std::vector<Scalar> delta_pow = {Scalar::one(ring)};

    // node layout: 0..2n-1 from x, 2n..4n-1 from y
    std::vector<int> match(static_cast<size_t>(4 * n));
    std::vector<int> seam(static_cast<size_t>(4 * n), -1);
    for (int j = 0; j < n; ++j) {
        seam[static_cast<size_t>(2 * n - 1 - j)] = 2 * n + j;
        seam[static_cast<size_t>(2 * n + j)] = 2 * n - 1 - j;
    }
    std::vector<int> ext_pair;
    int loops = 0;

    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            for (int p = 0; p < 2 * n; ++p) match[static_cast<size_t>(p)] = mx.partner(p);
            for (int q = 0; q < 2 * n; ++q) match[static_cast<size_t>(2 * n + q)] = 2 * n + my.partner(q);
            follow_paths(match, seam, ext_pair, loops);
            // externals: x bottom 0..n-1 -> result 0..n-1; y top 2n+n..2n+2n-1 -> result n..2n-1
            std::vector<int> res(static_cast<size_t>(2 * n));
            auto to_result = [n](int node) {
                return node < 2 * n ? node : node - 2 * n;
            };
            for (int p = 0; p < n; ++p) {
                int q = ext_pair[static_cast<size_t>(p)];
                res[static_cast<size_t>(p)] = to_result(q);
            }
            for (int q = 3 * n; q < 4 * n; ++q) {
                int p = ext_pair[static_cast<size_t>(q)];
                res[static_cast<size_t>(q - 2 * n)] = to_result(p);
            }
            while (static_cast<int>(delta_pow.size()) <= loops)
                delta_pow.push_back(delta_pow.back() * delta);
            result.add_term(PlanarMatching(std::move(res)),
                            cx * cy * delta_pow[static_cast<size_t>(loops)]);
        }
    }
    return result;
}

TLElement tensor(const TLElement& x, const TLElement& y) {
    int nx = x.strands(), ny = y.strands();
    int n = nx + ny;
    TLElement result(n, x.ring());
    auto map_x = [nx, ny](int p) { return p < nx ? p : p + 2 * ny; };
    auto map_y = [nx](int q) { return nx + q; };
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            std::vector<int> res(static_cast<size_t>(2 * n));
            for (int p = 0; p < 2 * nx; ++p)
                res[static_cast<size_t>(map_x(p))] = map_x(mx.partner(p));
            for (int q = 0; q < 2 * ny; ++q)
                res[static_cast<size_t>(map_y(q))] = map_y(my.partner(q));
            result.add_term(PlanarMatching(std::move(res)), cx * cy);
        }
    }
    return result;
}

Scalar close_trace(const TLElement& x) {
    int n = x.strands();
    const ScalarRing& ring = x.ring();
    Scalar delta = loop_value(ring);
    Scalar total = Scalar::zero(ring);
    std::vector<int> match(static_cast<size_t>(2 * n));
    std::vector<int> seam(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        seam[static_cast<size_t>(j)] = 2 * n - 1 - j;
        seam[static_cast<size_t>(2 * n - 1 - j)] = j;
    }
    std::vector<int> ext_pair;
    for (const auto& [m, c] : x.terms()) {
        for (int p = 0; p < 2 * n; ++p) match[static_cast<size_t>(p)] = m.partner(p);
        int loops = 0;
        if (n == 0) {
            loops = 0;
        } else {
            follow_paths(match, seam, ext_pair, loops);
        }
        Scalar term = c;
        for (int i = 0; i < loops; ++i) term = term * delta;
        total += term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Jones-Wenzl idempotents

namespace {

struct JwKey {
    ScalarRing::Mode mode;
    int N, n;
    bool operator<(const JwKey& o) const {
        if (mode != o.mode) return mode < o.mode;
        if (N != o.N) return N < o.N;
        return n < o.n;
    }
};

void check_jw_range(int n, const ScalarRing& ring) {
    if (n < 0) throw DomainError("jones_wenzl: negative strand count");
    if (ring.is_generic()) return;
    int N = ring.N;
    bool ok = (N % 2 == 1) ? (n < N) : (n < N / 2);
    if (!ok)
        throw NotDefined("Jones-Wenzl idempotent JW_" + std::to_string(n) +
                         " is not defined at a primitive " + std::to_string(2 * N) +
                         "-th root of unity");
}

TLElement compute_jw(int n, const ScalarRing& ring) {
    if (n == 0) {
        return TLElement::single(PlanarMatching(std::vector<int>{}), Scalar::one(ring), ring);
    }
    if (n == 1) return TLElement::identity(1, ring);
    const TLElement& prev = jones_wenzl(n - 1, ring);
    TLElement p = tensor(prev, TLElement::identity(1, ring));
    Scalar coeff = quantum_integer(n - 1, ring) / quantum_integer(n, ring);
    TLElement pep = compose(p, compose(TLElement::generator(n, n - 1, ring), p));
    return p + pep.scaled(coeff);
}

} // namespace

const TLElement& jones_wenzl(int n, const ScalarRing& ring) {
    check_jw_range(n, ring);
    static std::map<JwKey, TLElement> cache;
    static std::mutex mtx;
    JwKey key{ring.mode, ring.is_generic() ? 0 : ring.N, n};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TLElement jw = compute_jw(n, ring);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(jw)).first->second;
}

const TLElement& cleared_jones_wenzl(int n, const ScalarRing& ring) {
    static std::map<JwKey, TLElement> cache;
    static std::mutex mtx;
    JwKey key{ring.mode, ring.is_generic() ? 0 : ring.N, n};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TLElement jw = jones_wenzl(n, ring).scaled(quantum_factorial(n, ring));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(jw)).first->second;
}

const Scalar& quantum_dimension(int n, const ScalarRing& ring) {
    static std::map<JwKey, Scalar> cache;
    static std::mutex mtx;
    JwKey key{ring.mode, ring.is_generic() ? 0 : ring.N, n};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Scalar d = close_trace(jones_wenzl(n, ring));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(d)).first->second;
}

} // namespace skeinwrt
