// Exact arithmetic for multivariate Laurent polynomials over the integers.
//
// All symbolic data in the library lives in Z[t^{+-1}, z^{+-1}, a^{+-1}] or a
// subring of it; the variable table is global and totally ordered, so exponent
// vectors of any two values are directly comparable.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace talex {

/// Base class for errors raised by the library's own contracts (as opposed
/// to misuse of an API, which throws std::invalid_argument).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kNumVars = 3;
inline constexpr std::array<char, kNumVars> kVarNames{'t', 'z', 'a'};
inline constexpr int kVarT = 0;
inline constexpr int kVarZ = 1;
inline constexpr int kVarA = 2;

/// An ordered subset of the global variable list {t, z, a}.
class VarSet {
  public:
    constexpr VarSet() = default;

    static constexpr VarSet of(std::initializer_list<int> vars) {
        VarSet s;
        for (int v : vars) s.mask_ |= bit(v);
        return s;
    }
    static constexpr VarSet all() { return of({kVarT, kVarZ, kVarA}); }
    static constexpr VarSet none() { return VarSet{}; }

    constexpr bool contains(int var) const { return (mask_ & bit(var)) != 0; }
    constexpr bool subset_of(VarSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr VarSet united(VarSet other) const {
        VarSet s;
        s.mask_ = static_cast<std::uint8_t>(mask_ | other.mask_);
        return s;
    }
    constexpr int count() const {
        int c = 0;
        for (int v = 0; v < kNumVars; ++v) c += contains(v) ? 1 : 0;
        return c;
    }
    constexpr bool empty() const { return mask_ == 0; }

    /// Space-separated variable names in global order, e.g. "t z a".
    std::string to_string() const;

    friend constexpr bool operator==(VarSet, VarSet) = default;

  private:
    static constexpr std::uint8_t bit(int var) {
        if (var < 0 || var >= kNumVars) throw std::invalid_argument("VarSet: variable index out of range");
        return static_cast<std::uint8_t>(1u << var);
    }
    std::uint8_t mask_ = 0;
};

/// Exponent vector over the global variable table. Entries may be negative.
struct Monomial {
    std::array<std::int32_t, kNumVars> exp{0, 0, 0};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v, std::int32_t e = 1) {
        Monomial m;
        m.exp[static_cast<std::size_t>(v)] = e;
        return m;
    }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_one() const { return exp[0] == 0 && exp[1] == 0 && exp[2] == 0; }

    Monomial inverse() const {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.exp[static_cast<std::size_t>(i)] = -exp[static_cast<std::size_t>(i)];
        return m;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i)
            m.exp[static_cast<std::size_t>(i)] = a.exp[static_cast<std::size_t>(i)] + b.exp[static_cast<std::size_t>(i)];
        return m;
    }
    /// True when b divides a entrywise with all exponents of a/b nonnegative.
    bool divides_into(const Monomial& a) const {
        for (int i = 0; i < kNumVars; ++i)
            if (a.exp[static_cast<std::size_t>(i)] < exp[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Canonical term order: ascending total degree, ties broken
    // lexicographically on the exponent vector (t before z before a).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.exp <=> b.exp;
    }
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
/// Terms are kept sorted in canonical order with no zero coefficients, so
/// equality, hashing of the printed form, and rendering are all stable.
class LaurentPoly {
  public:
    struct Term {
        Monomial mono;
        mpz_class coeff;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(VarSet vars) : vars_(vars) {}

    static LaurentPoly constant(VarSet vars, const mpz_class& c);
    static LaurentPoly constant(VarSet vars, long c) { return constant(vars, mpz_class(c)); }
    static LaurentPoly variable(VarSet vars, int var, std::int32_t e = 1);
    static LaurentPoly term(VarSet vars, const mpz_class& coeff, const Monomial& mono);
    /// Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
    static LaurentPoly from_terms(VarSet vars, std::vector<Term> terms);

    VarSet vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Same polynomial viewed in a larger variable set.
    LaurentPoly promoted(VarSet target) const;

    /// Least term under the canonical order (the one printed first).
    const Term& low_term() const;
    /// Greatest term under the canonical order (used as division leader).
    const Term& high_term() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
    LaurentPoly& operator-=(const LaurentPoly& q) { return *this = *this - q; }
    LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        if (p.vars_ != q.vars_) return false;
        if (p.terms_.size() != q.terms_.size()) return false;
        for (std::size_t i = 0; i < p.terms_.size(); ++i)
            if (p.terms_[i].mono != q.terms_[i].mono || p.terms_[i].coeff != q.terms_[i].coeff) return false;
        return true;
    }

    /// Canonical text form, e.g. "1 + t*z^3", "-1 + z - z^2", "0".
    std::string str() const;

  private:
    friend class PolyBuilder;
    void check_vars(const Monomial& m) const;

    VarSet vars_;
    std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// Decomposition p = sign * monomial * part where part has nonnegative
/// exponents, no variable dividing every term, and a positive least
/// coefficient. The part of a nonzero polynomial is the canonical
/// representative of its associate class.
struct MonomialSplit {
    int sign = 1;  // +1 or -1
    Monomial monomial;
    LaurentPoly part;
};

MonomialSplit monomial_split(const LaurentPoly& p);

/// monomial_split(p).part, i.e. p normalized up to a unit.
LaurentPoly normal_form(const LaurentPoly& p);

/// True when p = +-(single monomial), the units of the Laurent ring.
bool is_unit(const LaurentPoly& p);

/// True when p and q generate the same ideal (differ by a unit factor).
bool associates(const LaurentPoly& p, const LaurentPoly& q);

/// Greatest common divisor in the UFD, returned in normal form.
/// gcd(p, 0) is the normal form of p; gcd(0, 0) throws.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient p/d. Throws talex::error when d does not divide p; a
/// failure here means a caller broke a divisibility guarantee.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Writes p/d to out and returns true when the division is exact.
bool try_exact_div(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& out);

}  // namespace talex
