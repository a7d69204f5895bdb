// Exact dense linear algebra over the Laurent ring: determinants by
// fraction-free elimination, minors, and enumeration of row selections.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, VarSet vars);

    static PolyMatrix identity(int n, VarSet vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    VarSet vars() const { return vars_; }

    LaurentPoly& at(int r, int c) { return entries_[index(r, c)]; }
    const LaurentPoly& at(int r, int c) const { return entries_[index(r, c)]; }

    PolyMatrix promoted(VarSet target) const;
    bool row_is_zero(int r) const;
    bool is_identity() const;

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    PolyMatrix scaled(const LaurentPoly& f) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("PolyMatrix: index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
    int rows_ = 0, cols_ = 0;
    VarSet vars_;
    std::vector<LaurentPoly> entries_;
};

/// Exact determinant. Fraction-free Bareiss elimination; Laurent monomial
/// content is factored off each row first so the elimination runs on
/// ordinary polynomials, where every intermediate division is exact.
LaurentPoly det(const PolyMatrix& m);

/// Independent determinant oracle: cofactor expansion along the sparsest
/// row. Guarded to dimension <= 10.
LaurentPoly det_cofactor(const PolyMatrix& m);

/// Submatrix selected by strictly increasing 0-based row/column index sets.
PolyMatrix minor_matrix(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols);

/// Binomial coefficient as an arbitrary-precision integer.
mpz_class binomial(int n, int k);

/// A deterministic, randomly accessible stream of k-element subsets of
/// {0..n-1}, each returned in increasing order. Random access makes the
/// stream restartable and splittable across workers.
class RowSetStream {
  public:
    /// All C(n, k) subsets in lexicographic order (requires n <= 64).
    static RowSetStream exhaustive(int n, int k);
    /// `count` pseudo-random subsets, reproducible from the seed; entry i
    /// depends only on (seed, i).
    static RowSetStream sampled(int n, int k, std::uint64_t seed, std::uint64_t count);
    /// A caller-provided list of subsets (validated: strictly increasing,
    /// in range, correct size).
    static RowSetStream explicit_sets(int n, int k, std::vector<std::vector<int>> sets);

    std::uint64_t size() const { return size_; }
    int universe() const { return n_; }
    int take() const { return k_; }
    std::vector<int> at(std::uint64_t index) const;

  private:
    enum class Kind { exhaustive, sampled, explicit_list };
    Kind kind_ = Kind::exhaustive;
    int n_ = 0, k_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::vector<int>> sets_;
};

}  // namespace talex
