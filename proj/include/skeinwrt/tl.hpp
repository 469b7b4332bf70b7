#pragma once

#include "skeinwrt/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace skeinwrt {

/// A perfect noncrossing matching on the 2n boundary points of a square
/// n-strand diagram. Points are numbered counterclockwise around the disk:
/// bottom row 0..n-1 left to right, then top row n..2n-1 right to left, so
/// the top point above bottom column j is 2n-1-j. The pairing vector is the
/// canonical encoding; equality is structural.
class PlanarMatching {
public:
    explicit PlanarMatching(std::vector<int> pairing);

    static PlanarMatching identity(int n);
    /// The cup-cap generator e_i, 1 <= i <= n-1.
    static PlanarMatching cupcap(int n, int i);

    int strands() const { return static_cast<int>(pair_.size()) / 2; }
    int points() const { return static_cast<int>(pair_.size()); }
    int partner(int p) const { return pair_[static_cast<size_t>(p)]; }
    const std::vector<int>& pairing() const { return pair_; }

    bool operator==(const PlanarMatching& o) const { return pair_ == o.pair_; }
    bool operator<(const PlanarMatching& o) const { return pair_ < o.pair_; }

    std::string to_string() const;

private:
    std::vector<int> pair_;
};

/// Formal linear combination of planar matchings with Scalar coefficients;
/// the n-strand Temperley-Lieb algebra over the chosen ring. Zero terms are
/// pruned, so equality is structural.
class TLElement {
public:
    TLElement(int n, ScalarRing ring) : n_(n), ring_(ring) {}

    static TLElement zero(int n, const ScalarRing& ring) { return TLElement(n, ring); }
    static TLElement identity(int n, const ScalarRing& ring);
    /// e_i as an element, 1 <= i <= n-1.
    static TLElement generator(int n, int i, const ScalarRing& ring);
    static TLElement single(PlanarMatching m, Scalar coeff, const ScalarRing& ring);

    int strands() const { return n_; }
    const ScalarRing& ring() const { return ring_; }
    const std::map<PlanarMatching, Scalar>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const PlanarMatching& m) const;

    void add_term(const PlanarMatching& m, const Scalar& c);
    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scaled(const Scalar& c) const;

    bool operator==(const TLElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int n_;
    ScalarRing ring_;
    std::map<PlanarMatching, Scalar> terms_;
};

/// Diagrammatic stacking, x at the bottom and y on top; each closed loop
/// contributes a factor loop_value(). Throws StrandMismatch if strand counts
/// differ.
TLElement compose(const TLElement& x, const TLElement& y);

/// Side-by-side juxtaposition, x on the left.
TLElement tensor(const TLElement& x, const TLElement& y);

/// Markov closure: joins top point above column j to bottom point j around
/// the annulus; each term contributes coefficient * delta^loops.
Scalar close_trace(const TLElement& x);

/// The n-th Jones-Wenzl idempotent via the Wenzl recursion
///   JW_n = JW_{n-1}x1 + ([n-1]/[n]) (JW_{n-1}x1) e_{n-1} (JW_{n-1}x1),
/// the unique idempotent killed by all cup-caps (with loop value -A^2-A^-2
/// the recursion coefficient is +[n-1]/[n]). Memoized per ring. Throws
/// NotDefined outside the validity range at a root of unity (n < N for odd N,
/// n < N/2 for even N).
const TLElement& jones_wenzl(int n, const ScalarRing& ring);

/// [n]! * JW_n. All coefficients are Laurent polynomials in A, which keeps
/// network evaluation free of polynomial gcds. Memoized per ring.
const TLElement& cleared_jones_wenzl(int n, const ScalarRing& ring);

/// Quantum dimension Delta_n = close_trace(JW_n), computed by direct
/// expansion (the diagrammatic route; the closed form lives in recoupling).
const Scalar& quantum_dimension(int n, const ScalarRing& ring);

/// Shared path-following primitive: nodes 0..K-1 carry a perfect matching
/// `match` and an optional involutive seam (-1 where absent). Fills
/// `ext_pair` with the induced pairing on seamless nodes and counts closed
/// loops.
void follow_paths(const std::vector<int>& match, const std::vector<int>& seam,
                  std::vector<int>& ext_pair, int& loops);

} // namespace skeinwrt
