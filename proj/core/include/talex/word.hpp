// Free group words, integral group-ring elements, and the Fox derivative.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

/// One letter of a free-group word: a generator index with exponent +-1.
struct Letter {
    std::int32_t gen = 0;
    std::int32_t sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group. Construction reduces, so no adjacent
/// letter pair x x^-1 or x^-1 x survives.
class Word {
  public:
    Word() = default;

    static Word generator(int gen, int sign = 1);
    static Word from_letters(std::span<const Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    /// First k letters (a subword of a reduced word is reduced).
    Word prefix(std::size_t k) const;
    /// Raises to an integer power; negative exponents invert.
    Word power(int e) const;

    friend Word concat(const Word& u, const Word& v);
    friend Word operator*(const Word& u, const Word& v) { return concat(u, v); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) { return u.letters_ <=> v.letters_; }

  private:
    void push_reduced(const Letter& l);
    std::vector<Letter> letters_;
};

/// Finite Z-linear combination of free-group words.
class GroupRingElement {
  public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return of(Word{}); }
    static GroupRingElement of(const Word& w, const mpz_class& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, mpz_class>& terms() const { return terms_; }

    GroupRingElement operator-() const;
    friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y);
    /// Convolution product extending the group multiplication.
    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
    GroupRingElement& operator+=(const GroupRingElement& y) { return *this = *this + y; }
    GroupRingElement& operator-=(const GroupRingElement& y) { return *this = *this - y; }

    friend GroupRingElement operator*(const Word& w, const GroupRingElement& y) { return of(w) * y; }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  private:
    void add_term(const Word& w, const mpz_class& c);
    std::map<Word, mpz_class> terms_;  // no zero coefficients
};

/// Fox derivative with respect to generator `gen`: the Z-linear map with
/// d(x_i)/d(x_j) = delta_ij and d(uv) = d(u) + u d(v). Computed letterwise:
/// a positive occurrence of x_j at position i contributes +prefix(i-1), a
/// negative one contributes -prefix(i).
GroupRingElement fox_derivative(const Word& w, int gen);
GroupRingElement fox_derivative(const GroupRingElement& e, int gen);

/// Image of w under the abelianization sending generator g to z^{abel[g]}.
/// Throws std::invalid_argument when a letter has no assigned exponent.
std::int64_t abelian_degree(const Word& w, std::span<const int> abel);

}  // namespace talex
