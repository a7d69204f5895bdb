// Matrix representations over the Laurent ring, the built-in braid and
// welded-braid families, and the evaluation map Phi sending a free word w to
// rho(w) * z^alpha(w), extended linearly to the group ring.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "talex/matrix.hpp"
#include "talex/presentation.hpp"

namespace talex {

/// A homomorphism from a presented group into GL_n over the Laurent ring,
/// given by one invertible matrix per generator. Inverses are computed once
/// (adjugate over the unit determinant) and cached; the object is immutable
/// afterwards, so concurrent reads are safe.
class MatrixRep {
  public:
    MatrixRep(std::string name, VarSet vars, int dimension, std::vector<PolyMatrix> generator_matrices);

    const std::string& name() const { return name_; }
    VarSet vars() const { return vars_; }
    int dimension() const { return dim_; }
    int generator_count() const { return static_cast<int>(matrices_.size()); }
    const PolyMatrix& matrix(int gen) const;
    const PolyMatrix& inverse(int gen) const;
    /// Unit determinant of each generator matrix.
    const LaurentPoly& unit_det(int gen) const;

  private:
    std::string name_;
    VarSet vars_;
    int dim_;
    std::vector<PolyMatrix> matrices_;
    std::vector<PolyMatrix> inverses_;
    std::vector<LaurentPoly> dets_;
};

/// Tong-Yang-Ma representation of the braid group: the i-th generator acts
/// by the 2x2 block (0 1; t 0) at position i inside the identity.
MatrixRep tym(int n);

/// Unreduced Burau representation: block (0 t; 1 1-t).
MatrixRep burau_unreduced(int n);

/// Reduced Burau representation in its standard (n-1)-dimensional
/// convention; requires n >= 3.
MatrixRep burau_reduced(int n);

/// Welded extension of Tong-Yang-Ma over Z[t^{+-1}, a^{+-1}]: s_i acts by
/// (0 1; t 0) and t_i by (0 a^-1; a 0).
MatrixRep wtym(int n);

/// Checks that every relator maps to the identity matrix and every generator
/// determinant is a unit; failures are listed per relator.
ValidationReport validate_rep(const Presentation& p, const MatrixRep& rep);

/// rho(w): letterwise product of generator matrices, cached inverses for
/// negative letters.
PolyMatrix rho(const MatrixRep& rep, const Word& w);

/// Phi(e) = sum over words of coeff * rho(w) * z^{abelian_degree(w)}.
/// The result lives over rep.vars() united with {z}.
PolyMatrix phi_eval(const GroupRingElement& e, const MatrixRep& rep, std::span<const int> abel);

/// Phi(1 - x_gen), the denominator block of the invariant.
PolyMatrix phi_one_minus(const MatrixRep& rep, std::span<const int> abel, int gen);

/// Phi of all Fox derivatives of one relator at once, sharing the letter
/// prefix products of the relator word across generators.
std::vector<PolyMatrix> fox_phi_row(const Word& relator, const MatrixRep& rep, std::span<const int> abel);

/// Closed-form block Phi(d r/d s_gen) for the braid-group relator indexed by
/// the pair [i, j] (1-based, i < j <= n-1) under the Tong-Yang-Ma
/// representation. Serves as a direct generator and as an independent oracle
/// against the generic Fox pipeline.
PolyMatrix braid_tym_block(int n, int i, int j, int gen);

}  // namespace talex
