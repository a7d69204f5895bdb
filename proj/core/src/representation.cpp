#include "talex/representation.hpp"

#include <utility>

namespace talex {

namespace {

// Inverse of a unit +-monomial.
LaurentPoly unit_inverse(const LaurentPoly& u) {
    const auto& t = u.terms().front();
    return LaurentPoly::term(u.vars(), t.coeff, t.mono.inverse());
}

PolyMatrix adjugate(const PolyMatrix& m) {
    const int n = m.rows();
    PolyMatrix adj(n, n, m.vars());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != i) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            LaurentPoly cof = det(minor_matrix(m, rows, cols));
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = std::move(cof);
        }
    return adj;
}

}  // namespace

MatrixRep::MatrixRep(std::string name, VarSet vars, int dimension, std::vector<PolyMatrix> generator_matrices)
    : name_(std::move(name)), vars_(vars), dim_(dimension), matrices_(std::move(generator_matrices)) {
    if (dim_ <= 0) throw std::invalid_argument("MatrixRep: dimension must be positive");
    inverses_.reserve(matrices_.size());
    dets_.reserve(matrices_.size());
    for (std::size_t g = 0; g < matrices_.size(); ++g) {
        const PolyMatrix& m = matrices_[g];
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("MatrixRep: generator matrix has wrong shape");
        if (m.vars() != vars_) throw std::invalid_argument("MatrixRep: generator matrix has wrong variable set");
        LaurentPoly d = det(m);
        if (!is_unit(d))
            throw error("MatrixRep '" + name_ + "': generator " + std::to_string(g + 1) + " has non-unit determinant " +
                        d.str() + "; the matrix is not invertible over the Laurent ring");
        PolyMatrix inv = adjugate(m).scaled(unit_inverse(d));
        if (!(inv * m).is_identity())
            throw error("MatrixRep '" + name_ + "': inverse verification failed for generator " + std::to_string(g + 1));
        inverses_.push_back(std::move(inv));
        dets_.push_back(std::move(d));
    }
}

const PolyMatrix& MatrixRep::matrix(int gen) const {
    if (gen < 0 || static_cast<std::size_t>(gen) >= matrices_.size())
        throw std::invalid_argument("MatrixRep: unknown generator");
    return matrices_[static_cast<std::size_t>(gen)];
}

const PolyMatrix& MatrixRep::inverse(int gen) const {
    if (gen < 0 || static_cast<std::size_t>(gen) >= inverses_.size())
        throw std::invalid_argument("MatrixRep: unknown generator");
    return inverses_[static_cast<std::size_t>(gen)];
}

const LaurentPoly& MatrixRep::unit_det(int gen) const {
    if (gen < 0 || static_cast<std::size_t>(gen) >= dets_.size())
        throw std::invalid_argument("MatrixRep: unknown generator");
    return dets_[static_cast<std::size_t>(gen)];
}

namespace {

// Places a 2x2 block at diagonal position i (1-based) inside the identity.
PolyMatrix block2(int n, VarSet vars, int i, const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                  const LaurentPoly& d) {
    PolyMatrix m = PolyMatrix::identity(n, vars);
    m.at(i - 1, i - 1) = a;
    m.at(i - 1, i) = b;
    m.at(i, i - 1) = c;
    m.at(i, i) = d;
    return m;
}

}  // namespace

MatrixRep tym(int n) {
    if (n < 2) throw std::invalid_argument("tym: n must be >= 2");
    VarSet vars = VarSet::of({kVarT});
    LaurentPoly zero(vars), one = LaurentPoly::constant(vars, 1), t = LaurentPoly::variable(vars, kVarT);
    std::vector<PolyMatrix> mats;
    for (int i = 1; i < n; ++i) mats.push_back(block2(n, vars, i, zero, one, t, zero));
    return MatrixRep("tym" + std::to_string(n), vars, n, std::move(mats));
}

MatrixRep burau_unreduced(int n) {
    if (n < 2) throw std::invalid_argument("burau_unreduced: n must be >= 2");
    VarSet vars = VarSet::of({kVarT});
    LaurentPoly zero(vars), one = LaurentPoly::constant(vars, 1), t = LaurentPoly::variable(vars, kVarT);
    std::vector<PolyMatrix> mats;
    for (int i = 1; i < n; ++i) mats.push_back(block2(n, vars, i, zero, t, one, one - t));
    return MatrixRep("burau" + std::to_string(n), vars, n, std::move(mats));
}

MatrixRep burau_reduced(int n) {
    if (n < 3) throw std::invalid_argument("burau_reduced: n must be >= 3");
    VarSet vars = VarSet::of({kVarT});
    LaurentPoly one = LaurentPoly::constant(vars, 1), t = LaurentPoly::variable(vars, kVarT);
    const int d = n - 1;
    std::vector<PolyMatrix> mats;
    for (int i = 1; i <= d; ++i) {
        PolyMatrix m = PolyMatrix::identity(d, vars);
        if (i >= 2) m.at(i - 1, i - 2) = t;
        m.at(i - 1, i - 1) = -t;
        if (i <= d - 1) m.at(i - 1, i) = one;
        mats.push_back(std::move(m));
    }
    return MatrixRep("rburau" + std::to_string(n), vars, d, std::move(mats));
}

MatrixRep wtym(int n) {
    if (n < 2) throw std::invalid_argument("wtym: n must be >= 2");
    VarSet vars = VarSet::of({kVarT, kVarA});
    LaurentPoly zero(vars), one = LaurentPoly::constant(vars, 1);
    LaurentPoly t = LaurentPoly::variable(vars, kVarT);
    LaurentPoly a = LaurentPoly::variable(vars, kVarA);
    LaurentPoly a_inv = LaurentPoly::variable(vars, kVarA, -1);
    std::vector<PolyMatrix> mats;
    for (int i = 1; i < n; ++i) mats.push_back(block2(n, vars, i, zero, one, t, zero));
    for (int i = 1; i < n; ++i) mats.push_back(block2(n, vars, i, zero, a_inv, a, zero));
    return MatrixRep("wtym" + std::to_string(n), vars, n, std::move(mats));
}

ValidationReport validate_rep(const Presentation& p, const MatrixRep& rep) {
    ValidationReport report;
    report.generators = p.generator_count();
    report.relators = p.relator_count();
    report.degenerate = p.relator_count() < p.generator_count() - 1;
    if (p.generator_count() != rep.generator_count()) {
        report.ok = false;
        report.failures.push_back("generator count mismatch: presentation has " + std::to_string(p.generator_count()) +
                                  ", representation has " + std::to_string(rep.generator_count()));
        return report;
    }
    for (int g = 0; g < rep.generator_count(); ++g) {
        if (!is_unit(rep.unit_det(g))) {
            report.ok = false;
            report.failures.push_back("generator '" + p.generator_names()[static_cast<std::size_t>(g)] +
                                      "' has non-unit determinant");
        }
    }
    for (int i = 0; i < p.relator_count(); ++i) {
        if (!rho(rep, p.relators()[static_cast<std::size_t>(i)]).is_identity()) {
            report.ok = false;
            report.failures.push_back("relator " + std::to_string(i + 1) + " does not map to the identity matrix");
        }
    }
    return report;
}

PolyMatrix rho(const MatrixRep& rep, const Word& w) {
    PolyMatrix m = PolyMatrix::identity(rep.dimension(), rep.vars());
    for (const Letter& l : w.letters()) m = m * (l.sign > 0 ? rep.matrix(l.gen) : rep.inverse(l.gen));
    return m;
}

PolyMatrix phi_eval(const GroupRingElement& e, const MatrixRep& rep, std::span<const int> abel) {
    VarSet out_vars = rep.vars().united(VarSet::of({kVarZ}));
    PolyMatrix acc(rep.dimension(), rep.dimension(), out_vars);
    for (const auto& [w, coeff] : e.terms()) {
        auto deg = abelian_degree(w, abel);
        LaurentPoly factor = LaurentPoly::term(out_vars, coeff, Monomial::var(kVarZ, static_cast<std::int32_t>(deg)));
        acc = acc + rho(rep, w).promoted(out_vars).scaled(factor);
    }
    return acc;
}

PolyMatrix phi_one_minus(const MatrixRep& rep, std::span<const int> abel, int gen) {
    return phi_eval(GroupRingElement::one() - GroupRingElement::of(Word::generator(gen)), rep, abel);
}

std::vector<PolyMatrix> fox_phi_row(const Word& relator, const MatrixRep& rep, std::span<const int> abel) {
    VarSet out_vars = rep.vars().united(VarSet::of({kVarZ}));
    const auto& letters = relator.letters();

    // rho and abelian degree of every letter prefix, computed once and
    // shared by the Fox derivatives of all generators.
    std::vector<PolyMatrix> prefix_rho;
    std::vector<std::int64_t> prefix_deg;
    prefix_rho.reserve(letters.size() + 1);
    prefix_deg.reserve(letters.size() + 1);
    prefix_rho.push_back(PolyMatrix::identity(rep.dimension(), rep.vars()));
    prefix_deg.push_back(0);
    for (const Letter& l : letters) {
        prefix_rho.push_back(prefix_rho.back() * (l.sign > 0 ? rep.matrix(l.gen) : rep.inverse(l.gen)));
        prefix_deg.push_back(prefix_deg.back() +
                             static_cast<std::int64_t>(l.sign) * abel[static_cast<std::size_t>(l.gen)]);
    }

    std::vector<PolyMatrix> blocks(static_cast<std::size_t>(rep.generator_count()),
                                   PolyMatrix(rep.dimension(), rep.dimension(), out_vars));
    for (std::size_t idx = 0; idx < letters.size(); ++idx) {
        const Letter& l = letters[idx];
        const std::size_t cut = l.sign > 0 ? idx : idx + 1;
        mpz_class coeff = l.sign > 0 ? 1 : -1;
        LaurentPoly factor =
            LaurentPoly::term(out_vars, coeff, Monomial::var(kVarZ, static_cast<std::int32_t>(prefix_deg[cut])));
        auto& block = blocks[static_cast<std::size_t>(l.gen)];
        block = block + prefix_rho[cut].promoted(out_vars).scaled(factor);
    }
    return blocks;
}

namespace {

LaurentPoly tz_poly(std::initializer_list<std::array<int, 3>> terms) {
    // Each triple is (coefficient, t-exponent, z-exponent).
    VarSet vars = VarSet::of({kVarT, kVarZ});
    LaurentPoly p(vars);
    for (const auto& [c, et, ez] : terms) {
        Monomial m;
        m.exp[kVarT] = et;
        m.exp[kVarZ] = ez;
        p += LaurentPoly::term(vars, c, m);
    }
    return p;
}

}  // namespace

PolyMatrix braid_tym_block(int n, int i, int j, int gen) {
    if (n < 3 || i < 1 || j <= i || j > n - 1 || gen < 1 || gen > n - 1)
        throw std::invalid_argument("braid_tym_block: invalid relator pair or generator index");
    VarSet vars = VarSet::of({kVarT, kVarZ});
    PolyMatrix m(n, n, vars);
    auto fill_diag = [&](const LaurentPoly& v, int lo, int hi) {
        // 1-based inclusive diagonal range.
        for (int d = lo; d <= hi; ++d)
            if (d >= 1 && d <= n) m.at(d - 1, d - 1) = v;
    };
    auto put = [&](int r, int c, const LaurentPoly& v) { m.at(r - 1, c - 1) = v; };

    if (j == i + 1 && gen == i) {
        // Braid relator, derivative in its first generator.
        LaurentPoly outer = tz_poly({{1, 0, 0}, {-1, 0, 1}, {1, 0, 2}});
        fill_diag(outer, 1, i - 1);
        fill_diag(outer, i + 3, n);
        put(i, i, tz_poly({{1, 0, 0}, {-1, 0, 1}}));
        put(i, i + 2, tz_poly({{1, 0, 2}}));
        put(i + 1, i, tz_poly({{1, 1, 2}}));
        put(i + 1, i + 1, tz_poly({{1, 0, 0}}));
        put(i + 1, i + 2, tz_poly({{-1, 0, 1}}));
        put(i + 2, i + 1, tz_poly({{-1, 1, 1}, {1, 1, 2}}));
        put(i + 2, i + 2, tz_poly({{1, 0, 0}}));
        return m;
    }
    if (j == i + 1 && gen == j) {
        // Braid relator, derivative in its second generator.
        LaurentPoly outer = tz_poly({{-1, 0, 0}, {1, 0, 1}, {-1, 0, 2}});
        fill_diag(outer, 1, j - 2);
        fill_diag(outer, j + 2, n);
        put(j - 1, j - 1, tz_poly({{-1, 0, 0}}));
        put(j - 1, j, tz_poly({{1, 0, 1}, {-1, 0, 2}}));
        put(j, j - 1, tz_poly({{1, 1, 1}}));
        put(j, j, tz_poly({{-1, 0, 0}}));
        put(j, j + 1, tz_poly({{-1, 0, 2}}));
        put(j + 1, j - 1, tz_poly({{-1, 2, 2}}));
        put(j + 1, j + 1, tz_poly({{-1, 0, 0}, {1, 0, 1}}));
        return m;
    }
    if (j >= i + 2 && gen == i) {
        // Commutation relator, derivative in its first generator: 1 - s_j.
        LaurentPoly outer = tz_poly({{1, 0, 0}, {-1, 0, 1}});
        fill_diag(outer, 1, j - 1);
        fill_diag(outer, j + 2, n);
        put(j, j, tz_poly({{1, 0, 0}}));
        put(j, j + 1, tz_poly({{-1, 0, 1}}));
        put(j + 1, j, tz_poly({{-1, 1, 1}}));
        put(j + 1, j + 1, tz_poly({{1, 0, 0}}));
        return m;
    }
    if (j >= i + 2 && gen == j) {
        // Commutation relator, derivative in its second generator: s_i - 1.
        LaurentPoly outer = tz_poly({{-1, 0, 0}, {1, 0, 1}});
        fill_diag(outer, 1, i - 1);
        fill_diag(outer, i + 2, n);
        put(i, i, tz_poly({{-1, 0, 0}}));
        put(i, i + 1, tz_poly({{1, 0, 1}}));
        put(i + 1, i, tz_poly({{1, 1, 1}}));
        put(i + 1, i + 1, tz_poly({{-1, 0, 0}}));
        return m;
    }
    return m;  // generator not involved: zero block
}

}  // namespace talex
