#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cages/errors.hpp"

namespace cages {

/// An element of GF(q) in its canonical integer encoding: the element with
/// coefficient digits (c0, ..., c_{n-1}) over GF(p), low degree first, has
/// index sum(c_i * p^i) in [0, q).  Index 0 is the additive identity and
/// index 1 the multiplicative identity.
using FieldElem = std::uint32_t;

/// Exact arithmetic in GF(q) = GF(p^n) for a prime power q.
///
/// Extension fields are represented as GF(p)[t] modulo a monic irreducible
/// polynomial of degree n.  The modulus is taken from a fixed table for a
/// handful of common orders and otherwise is the lexicographically smallest
/// (by low-to-high coefficient sequence) monic irreducible found by search,
/// so element encodings are reproducible across runs and platforms.
class Field {
  public:
    /// Throws NotAPrimePower unless q = p^n for a prime p, and TooLarge for
    /// q > 2^20.
    explicit Field(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }

    /// Modulus coefficients, low-to-high, length n+1 with leading 1.
    /// Empty for prime fields (n == 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem add(FieldElem x, FieldElem y) const;
    FieldElem sub(FieldElem x, FieldElem y) const;
    FieldElem neg(FieldElem x) const;
    FieldElem mul(FieldElem x, FieldElem y) const;
    /// Throws DivisionByZero for x == 0.
    FieldElem inv(FieldElem x) const;
    /// x + x; identically zero in characteristic 2.
    FieldElem twice(FieldElem x) const { return add(x, x); }

    /// All q elements in ascending index order; [0] is 0 and [1] is 1.
    std::vector<FieldElem> elements() const;

    /// Coefficient digits of x over GF(p), low degree first, length n.
    std::vector<std::uint32_t> coeffs(FieldElem x) const;
    FieldElem from_coeffs(std::span<const std::uint32_t> digits) const;

    bool operator==(const Field& other) const {
        return q_ == other.q_ && modulus_ == other.modulus_;
    }

  private:
    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pw_;  // pw_[i] = p^i, i = 0..n
};

/// True iff f (coefficients low-to-high, nonzero leading coefficient) is
/// irreducible over GF(p).  Trial division against every monic polynomial of
/// degree at most deg(f)/2.
bool is_irreducible(std::span<const std::uint32_t> f, std::uint32_t p);

/// The lexicographically smallest (by low-to-high coefficient sequence)
/// monic irreducible polynomial of degree n over GF(p).
std::vector<std::uint32_t> lex_min_irreducible(std::uint32_t p, std::uint32_t n);

}  // namespace cages
