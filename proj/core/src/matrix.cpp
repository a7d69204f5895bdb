#include "talex/matrix.hpp"

#include <algorithm>
#include <set>

namespace talex {

PolyMatrix::PolyMatrix(int rows, int cols, VarSet vars) : rows_(rows), cols_(cols), vars_(vars) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), LaurentPoly(vars));
}

PolyMatrix PolyMatrix::identity(int n, VarSet vars) {
    PolyMatrix m(n, n, vars);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(vars, 1);
    return m;
}

PolyMatrix PolyMatrix::promoted(VarSet target) const {
    PolyMatrix m(rows_, cols_, target);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].promoted(target);
    return m;
}

bool PolyMatrix::row_is_zero(int r) const {
    for (int c = 0; c < cols_; ++c)
        if (!at(r, c).is_zero()) return false;
    return true;
}

bool PolyMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, vars_);
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch in add");
    PolyMatrix m = x;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += y.entries_[i];
    return m;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) { return x + (-y); }

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in mul");
    PolyMatrix m(x.rows_, y.cols_, x.vars_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) {
                if (y.at(k, j).is_zero()) continue;
                m.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return m;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& f) const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = e * f;
    return m;
}

namespace {

// Extracts the monomial content of each row so elimination runs on ordinary
// polynomials. Returns false when some row is identically zero.
bool extract_row_content(PolyMatrix& m, Monomial& content) {
    content = Monomial::one();
    for (int r = 0; r < m.rows(); ++r) {
        bool any = false;
        Monomial row_min;
        for (int c = 0; c < m.cols(); ++c) {
            const LaurentPoly& e = m.at(r, c);
            if (e.is_zero()) continue;
            for (int v = 0; v < kNumVars; ++v) {
                std::int32_t lo = e.terms().front().mono.exp[static_cast<std::size_t>(v)];
                for (const auto& t : e.terms()) lo = std::min(lo, t.mono.exp[static_cast<std::size_t>(v)]);
                row_min.exp[static_cast<std::size_t>(v)] =
                    any ? std::min(row_min.exp[static_cast<std::size_t>(v)], lo) : lo;
            }
            // All variables were folded above in one pass per entry.
            any = true;
        }
        if (!any) return false;
        if (!row_min.is_one()) {
            LaurentPoly shift = LaurentPoly::term(m.vars(), 1, row_min.inverse());
            for (int c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero()) m.at(r, c) = m.at(r, c) * shift;
            content = content * row_min;
        }
    }
    return true;
}

}  // namespace

LaurentPoly det(const PolyMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("det: matrix is not square");
    const int n = input.rows();
    VarSet vars = input.vars();
    if (n == 0) return LaurentPoly::constant(vars, 1);

    PolyMatrix m = input;
    Monomial content;
    if (!extract_row_content(m, content)) return LaurentPoly(vars);

    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(vars, 1);
    for (int k = 0; k + 1 < n; ++k) {
        // Full pivoting with a Markowitz-style cost: prefer entries with few
        // terms in sparse rows and columns. Keeps the fill-in of structured
        // block matrices close to their block pattern.
        std::vector<int> row_nonzero(static_cast<std::size_t>(n), 0), col_nonzero(static_cast<std::size_t>(n), 0);
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (!m.at(i, j).is_zero()) {
                    ++row_nonzero[static_cast<std::size_t>(i)];
                    ++col_nonzero[static_cast<std::size_t>(j)];
                }
        int pivot_row = -1, pivot_col = -1;
        std::uint64_t pivot_cost = 0;
        for (int i = k; i < n; ++i) {
            for (int j = k; j < n; ++j) {
                const LaurentPoly& e = m.at(i, j);
                if (e.is_zero()) continue;
                std::uint64_t fill = static_cast<std::uint64_t>(row_nonzero[static_cast<std::size_t>(i)] - 1) *
                                     static_cast<std::uint64_t>(col_nonzero[static_cast<std::size_t>(j)] - 1);
                std::uint64_t cost = (fill + 1) * e.term_count();
                if (pivot_row < 0 || cost < pivot_cost) {
                    pivot_row = i;
                    pivot_col = j;
                    pivot_cost = cost;
                }
            }
        }
        if (pivot_row < 0) return LaurentPoly(vars);
        if (pivot_row != k) {
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot_row, c));
            sign = -sign;
        }
        if (pivot_col != k) {
            for (int r = 0; r < n; ++r) std::swap(m.at(r, k), m.at(r, pivot_col));
            sign = -sign;
        }
        const LaurentPoly& pivot = m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) {
                // Row already eliminated; still needs the Bareiss rescale.
                for (int j = k + 1; j < n; ++j)
                    if (!m.at(i, j).is_zero()) m.at(i, j) = exact_div(m.at(i, j) * pivot, prev);
                continue;
            }
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * pivot - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = LaurentPoly(vars);
        }
        prev = pivot;
        if (prev.is_zero()) return LaurentPoly(vars);
    }
    LaurentPoly d = m.at(n - 1, n - 1) * LaurentPoly::term(vars, sign, content);
    return d;
}

LaurentPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: matrix is not square");
    if (m.rows() > 10) throw std::invalid_argument("det_cofactor: dimension guard exceeded (max 10)");
    const int n = m.rows();
    if (n == 0) return LaurentPoly::constant(m.vars(), 1);
    if (n == 1) return m.at(0, 0);

    // Expand along the row with the fewest nonzero entries.
    int best = 0, best_nonzero = n + 1;
    for (int r = 0; r < n; ++r) {
        int nz = 0;
        for (int c = 0; c < n; ++c) nz += m.at(r, c).is_zero() ? 0 : 1;
        if (nz < best_nonzero) {
            best = r;
            best_nonzero = nz;
        }
    }
    LaurentPoly result(m.vars());
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
        if (r != best) rows.push_back(r);
    for (int c = 0; c < n; ++c) {
        if (m.at(best, c).is_zero()) continue;
        std::vector<int> cols;
        for (int cc = 0; cc < n; ++cc)
            if (cc != c) cols.push_back(cc);
        LaurentPoly cof = m.at(best, c) * det_cofactor(minor_matrix(m, rows, cols));
        if ((best + c) % 2 == 1) cof = -cof;
        result += cof;
    }
    return result;
}

PolyMatrix minor_matrix(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || rows[i] >= m.rows()) throw std::invalid_argument("minor_matrix: row index out of range");
        if (i > 0 && rows[i] <= rows[i - 1]) throw std::invalid_argument("minor_matrix: row indices must strictly increase");
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= m.cols()) throw std::invalid_argument("minor_matrix: column index out of range");
        if (j > 0 && cols[j] <= cols[j - 1])
            throw std::invalid_argument("minor_matrix: column indices must strictly increase");
    }
    PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.vars());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    return out;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

namespace {

std::uint64_t binomial_u64(int n, int k) {
    mpz_class b = binomial(n, k);
    if (!b.fits_ulong_p()) throw std::invalid_argument("RowSetStream: combination count exceeds 64 bits");
    return static_cast<std::uint64_t>(b.get_ui());
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform draw from [0, bound) by 128-bit multiply-shift.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(splitmix64(state)) * bound) >> 64);
}

}  // namespace

RowSetStream RowSetStream::exhaustive(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("RowSetStream: need 0 <= k <= n");
    if (n > 64) throw std::invalid_argument("RowSetStream: exhaustive enumeration limited to n <= 64");
    RowSetStream s;
    s.kind_ = Kind::exhaustive;
    s.n_ = n;
    s.k_ = k;
    s.size_ = binomial_u64(n, k);
    return s;
}

RowSetStream RowSetStream::sampled(int n, int k, std::uint64_t seed, std::uint64_t count) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("RowSetStream: need 0 <= k <= n");
    RowSetStream s;
    s.kind_ = Kind::sampled;
    s.n_ = n;
    s.k_ = k;
    s.seed_ = seed;
    s.size_ = count;
    return s;
}

RowSetStream RowSetStream::explicit_sets(int n, int k, std::vector<std::vector<int>> sets) {
    RowSetStream s;
    s.kind_ = Kind::explicit_list;
    s.n_ = n;
    s.k_ = k;
    for (const auto& set : sets) {
        if (static_cast<int>(set.size()) != k) throw std::invalid_argument("RowSetStream: explicit set has wrong size");
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 0 || set[i] >= n) throw std::invalid_argument("RowSetStream: explicit index out of range");
            if (i > 0 && set[i] <= set[i - 1])
                throw std::invalid_argument("RowSetStream: explicit set must strictly increase");
        }
    }
    s.size_ = sets.size();
    s.sets_ = std::move(sets);
    return s;
}

std::vector<int> RowSetStream::at(std::uint64_t index) const {
    if (index >= size_) throw std::invalid_argument("RowSetStream: index out of range");
    switch (kind_) {
        case Kind::explicit_list:
            return sets_[static_cast<std::size_t>(index)];
        case Kind::sampled: {
            // Partial Fisher-Yates over a lazily materialized identity map;
            // each sample depends only on (seed, index).
            std::uint64_t state = seed_ ^ (0x12c8f7a3u + index * 0x9e3779b97f4a7c15ull);
            std::vector<int> pool(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) pool[static_cast<std::size_t>(i)] = i;
            std::vector<int> pick;
            for (int i = 0; i < k_; ++i) {
                auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(bounded(state, static_cast<std::uint64_t>(n_ - i)));
                std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
                pick.push_back(pool[static_cast<std::size_t>(i)]);
            }
            std::sort(pick.begin(), pick.end());
            return pick;
        }
        case Kind::exhaustive: {
            // Lexicographic unranking.
            std::vector<int> set;
            std::uint64_t rank = index;
            int next = 0, remaining = k_;
            while (remaining > 0) {
                std::uint64_t with_next = binomial_u64(n_ - next - 1, remaining - 1);
                if (rank < with_next) {
                    set.push_back(next);
                    --remaining;
                } else {
                    rank -= with_next;
                }
                ++next;
            }
            return set;
        }
    }
    throw std::logic_error("RowSetStream: unreachable");
}

}  // namespace talex
