#include "talex/invariant.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace talex {

AlexanderMatrix::AlexanderMatrix(Presentation presentation, MatrixRep rep)
    : presentation_(std::move(presentation)), rep_(std::move(rep)) {
    const int n = rep_.dimension();
    const int m = presentation_.relator_count();
    const int l = presentation_.generator_count();
    VarSet vars = rep_.vars().united(VarSet::of({kVarZ}));
    matrix_ = PolyMatrix(m * n, l * n, vars);
    for (int i = 0; i < m; ++i) {
        auto blocks = fox_phi_row(presentation_.relators()[static_cast<std::size_t>(i)], rep_,
                                  presentation_.abelianization());
        for (int j = 0; j < l; ++j)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    matrix_.at(i * n + r, j * n + c) = blocks[static_cast<std::size_t>(j)].at(r, c);
    }
}

PolyMatrix AlexanderMatrix::block(int relator, int gen) const {
    const int n = block_dim();
    std::vector<int> rows, cols;
    for (int r = 0; r < n; ++r) rows.push_back(relator * n + r);
    for (int c = 0; c < n; ++c) cols.push_back(gen * n + c);
    return minor_matrix(matrix_, rows, cols);
}

PolyMatrix AlexanderMatrix::without_column(int gen) const {
    const int n = block_dim();
    if (gen < 0 || gen >= presentation_.generator_count())
        throw std::invalid_argument("AlexanderMatrix: column index out of range");
    std::vector<int> rows, cols;
    for (int r = 0; r < matrix_.rows(); ++r) rows.push_back(r);
    for (int c = 0; c < matrix_.cols(); ++c)
        if (c / n != gen) cols.push_back(c);
    return minor_matrix(matrix_, rows, cols);
}

AlexanderMatrix alexander_matrix(const Presentation& p, const MatrixRep& rep) {
    ValidationReport pres_report = validate(p);
    if (!pres_report.ok) throw std::invalid_argument("alexander_matrix: invalid presentation\n" + pres_report.summary());
    ValidationReport rep_report = validate_rep(p, rep);
    if (!rep_report.ok)
        throw std::invalid_argument("alexander_matrix: representation does not satisfy the relators\n" +
                                    rep_report.summary());
    return AlexanderMatrix(p, rep);
}

int choose_column(const Presentation& p, const MatrixRep& rep) {
    for (int j = 0; j < p.generator_count(); ++j)
        if (!det(phi_one_minus(rep, p.abelianization(), j)).is_zero()) return j;
    throw error("choose_column: det Phi(1 - x_j) vanishes for every generator; no column can be removed");
}

MinorGcdResult minor_gcd(const PolyMatrix& mj, const GcdStrategy& strategy) {
    const int take = mj.cols();
    if (mj.rows() < take) throw std::invalid_argument("minor_gcd: matrix has fewer rows than columns");

    std::vector<RowSetStream> streams;
    if (strategy.mode == GcdStrategy::Mode::exhaustive) {
        streams.push_back(RowSetStream::exhaustive(mj.rows(), take));
    } else {
        if (!strategy.seed_sets.empty())
            streams.push_back(RowSetStream::explicit_sets(mj.rows(), take, strategy.seed_sets));
        if (strategy.samples > 0)
            streams.push_back(RowSetStream::sampled(mj.rows(), take, strategy.seed, strategy.samples));
        if (streams.empty()) throw std::invalid_argument("minor_gcd: seeded strategy has no seed sets and no samples");
    }

    std::vector<bool> zero_row(static_cast<std::size_t>(mj.rows()));
    for (int r = 0; r < mj.rows(); ++r) zero_row[static_cast<std::size_t>(r)] = mj.row_is_zero(r);
    std::vector<int> all_cols(static_cast<std::size_t>(take));
    for (int c = 0; c < take; ++c) all_cols[static_cast<std::size_t>(c)] = c;

    std::uint64_t total = 0;
    for (const auto& s : streams) total += s.size();

    std::mutex fold_mutex;
    LaurentPoly acc(mj.vars());
    bool have_acc = false;
    std::uint64_t evaluated = 0, skipped = 0;
    std::atomic<std::uint64_t> cursor{0};
    std::atomic<bool> stop{false};
    const bool allow_early_exit = strategy.mode == GcdStrategy::Mode::exhaustive;

    auto worker = [&] {
        LaurentPoly local(mj.vars());
        bool have_local = false;
        std::uint64_t local_evaluated = 0, local_skipped = 0;
        auto flush = [&] {
            std::lock_guard<std::mutex> lock(fold_mutex);
            if (have_local) {
                acc = have_acc ? gcd(acc, local) : std::move(local);
                have_acc = true;
                if (allow_early_exit && is_unit(acc)) stop.store(true, std::memory_order_relaxed);
            }
            evaluated += local_evaluated;
            skipped += local_skipped;
            local = LaurentPoly(mj.vars());
            have_local = false;
            local_evaluated = local_skipped = 0;
        };
        while (true) {
            std::uint64_t idx = cursor.fetch_add(1, std::memory_order_relaxed);
            if (idx >= total || stop.load(std::memory_order_relaxed)) break;
            std::uint64_t offset = idx;
            const RowSetStream* stream = nullptr;
            for (const auto& s : streams) {
                if (offset < s.size()) {
                    stream = &s;
                    break;
                }
                offset -= s.size();
            }
            std::vector<int> rows = stream->at(offset);
            if (std::any_of(rows.begin(), rows.end(),
                            [&](int r) { return zero_row[static_cast<std::size_t>(r)]; })) {
                ++local_skipped;
                continue;
            }
            LaurentPoly d = det(minor_matrix(mj, rows, all_cols));
            ++local_evaluated;
            if (!d.is_zero()) {
                local = have_local ? gcd(local, d) : normal_form(d);
                have_local = true;
            }
            if (local_evaluated + local_skipped >= 16) flush();
        }
        flush();
    };

    const int jobs = std::max(1, strategy.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    MinorGcdResult result;
    result.value = have_acc ? normal_form(acc) : LaurentPoly(mj.vars());
    result.evaluated = evaluated;
    result.skipped_zero = skipped;
    if (strategy.mode == GcdStrategy::Mode::exhaustive) {
        result.flag = Certification::exact;
    } else if (strategy.divisor && !result.value.is_zero() &&
               associates(result.value, strategy.divisor->promoted(mj.vars()))) {
        // The divisor divides the full gcd by the supplied theorem, and the
        // full gcd divides any subset gcd; associate equality closes the
        // sandwich.
        result.flag = Certification::exact;
    } else {
        result.flag = Certification::subset_upper_bound;
    }
    return result;
}

std::string InvariantResult::delta_string() const {
    if (reduced_num.is_zero()) return "0";
    if (is_unit(reduced_den)) return reduced_num.str();
    return reduced_num.str() + " / (" + reduced_den.str() + ")";
}

InvariantResult twisted_alexander(const Presentation& p, const MatrixRep& rep, const GcdStrategy& strategy,
                                  std::optional<int> drop_column) {
    ValidationReport pres_report = validate(p);
    if (!pres_report.ok) throw std::invalid_argument("twisted_alexander: invalid presentation\n" + pres_report.summary());
    ValidationReport rep_report = validate_rep(p, rep);
    if (!rep_report.ok)
        throw std::invalid_argument("twisted_alexander: representation does not satisfy the relators\n" +
                                    rep_report.summary());

    InvariantResult result;
    VarSet vars = rep.vars().united(VarSet::of({kVarZ}));
    if (p.relator_count() < p.generator_count() - 1) {
        result.degenerate = true;
        result.numerator = LaurentPoly(vars);
        result.denominator = LaurentPoly::constant(vars, 1);
        result.reduced_num = result.numerator;
        result.reduced_den = result.denominator;
        return result;
    }

    AlexanderMatrix am = alexander_matrix(p, rep);
    int column;
    LaurentPoly den;
    if (drop_column) {
        column = *drop_column;
        if (column < 0 || column >= p.generator_count())
            throw std::invalid_argument("twisted_alexander: dropped column out of range");
        den = det(phi_one_minus(rep, p.abelianization(), column));
        if (den.is_zero())
            throw error("twisted_alexander: det Phi(1 - x_j) = 0 for the requested column '" +
                        p.generator_names()[static_cast<std::size_t>(column)] + "'");
    } else {
        column = choose_column(p, rep);
        den = det(phi_one_minus(rep, p.abelianization(), column));
    }

    MinorGcdResult g = minor_gcd(am.without_column(column), strategy);
    result.column = column;
    result.flag = g.flag;
    result.minors_evaluated = g.evaluated;
    result.minors_skipped = g.skipped_zero;
    result.numerator = g.value;
    result.denominator = den;

    if (result.numerator.is_zero()) {
        result.reduced_num = LaurentPoly(vars);
        result.reduced_den = LaurentPoly::constant(vars, 1);
        return result;
    }
    LaurentPoly quotient;
    if (try_exact_div(result.numerator, den, quotient)) {
        result.reduced_num = normal_form(quotient);
        result.reduced_den = LaurentPoly::constant(vars, 1);
    } else {
        LaurentPoly common = gcd(result.numerator, den);
        result.reduced_num = normal_form(exact_div(result.numerator, common));
        result.reduced_den = normal_form(exact_div(den, common));
    }
    return result;
}

bool equal_up_to_unit(const LaurentPoly& num1, const LaurentPoly& den1, const LaurentPoly& num2,
                      const LaurentPoly& den2) {
    if (den1.is_zero() || den2.is_zero()) throw std::invalid_argument("equal_up_to_unit: zero denominator");
    LaurentPoly lhs = num1 * den2;
    LaurentPoly rhs = num2 * den1;
    return associates(lhs, rhs);
}

bool equal_up_to_unit(const InvariantResult& r1, const InvariantResult& r2) {
    return equal_up_to_unit(r1.reduced_num, r1.reduced_den, r2.reduced_num, r2.reduced_den);
}

bool equal_up_to_unit(const InvariantResult& r, const LaurentPoly& expected) {
    VarSet vars = r.reduced_num.vars().united(expected.vars());
    return equal_up_to_unit(r.reduced_num.promoted(vars), r.reduced_den.promoted(vars), expected.promoted(vars),
                            LaurentPoly::constant(vars, 1));
}

std::string CrossValidateReport::summary() const {
    std::ostringstream out;
    out << (ok ? "pass" : "FAIL") << ": valid_columns=" << valid_columns << " identity_checks=" << identity_checks
        << " strict_plus=" << (strict_plus ? "yes" : "no");
    for (const auto& f : failures) out << "\n  - " << f;
    return out.str();
}

CrossValidateReport cross_validate(const Presentation& p, const MatrixRep& rep, const CrossValidateOptions& options) {
    CrossValidateReport report;
    AlexanderMatrix am = alexander_matrix(p, rep);

    std::vector<int> valid;
    std::vector<LaurentPoly> dens(static_cast<std::size_t>(p.generator_count()), LaurentPoly());
    for (int j = 0; j < p.generator_count(); ++j) {
        LaurentPoly d = det(phi_one_minus(rep, p.abelianization(), j));
        if (!d.is_zero()) {
            valid.push_back(j);
            dens[static_cast<std::size_t>(j)] = d;
        }
    }
    report.valid_columns = static_cast<int>(valid.size());
    if (valid.size() < 2) {
        report.failures.push_back("fewer than two valid columns; nothing to cross-validate");
        report.ok = false;
        return report;
    }

    const int take = (p.generator_count() - 1) * rep.dimension();
    const bool even_dim = rep.dimension() % 2 == 0;
    for (std::size_t a = 0; a < valid.size(); ++a) {
        for (std::size_t b = a + 1; b < valid.size(); ++b) {
            int j = valid[a], k = valid[b];
            PolyMatrix mj = am.without_column(j);
            PolyMatrix mk = am.without_column(k);
            RowSetStream sets = RowSetStream::sampled(mj.rows(), take, options.seed, options.sampled_sets);
            std::vector<int> all_cols(static_cast<std::size_t>(take));
            for (int c = 0; c < take; ++c) all_cols[static_cast<std::size_t>(c)] = c;
            for (std::uint64_t s = 0; s < sets.size(); ++s) {
                std::vector<int> rows = sets.at(s);
                LaurentPoly lhs = det(minor_matrix(mj, rows, all_cols)) * dens[static_cast<std::size_t>(k)];
                LaurentPoly rhs = det(minor_matrix(mk, rows, all_cols)) * dens[static_cast<std::size_t>(j)];
                ++report.identity_checks;
                if (lhs == rhs) continue;
                if (lhs == -rhs) {
                    report.strict_plus = false;
                    if (even_dim) {
                        report.ok = false;
                        report.failures.push_back("even-dimensional representation produced a '-' sign in the minor identity");
                    }
                    continue;
                }
                report.ok = false;
                report.failures.push_back("minor identity failed for columns (" + std::to_string(j + 1) + ", " +
                                          std::to_string(k + 1) + ")");
            }
        }
    }

    // Full invariants per column, when tractable.
    mpz_class count = binomial(am.matrix().rows(), take);
    if (count <= options.invariant_ceiling) {
        GcdStrategy strategy = GcdStrategy::exhaustive_scan(options.jobs);
        std::vector<InvariantResult> results;
        for (int j : valid) results.push_back(twisted_alexander(p, rep, strategy, j));
        for (std::size_t i = 1; i < results.size(); ++i) {
            if (!equal_up_to_unit(results[0], results[i])) {
                report.ok = false;
                report.failures.push_back("invariant differs between columns " + std::to_string(valid[0] + 1) + " and " +
                                          std::to_string(valid[i] + 1));
            }
        }
    }
    return report;
}

int braid_relator_index(int n, int i, int j) {
    if (i < 1 || j <= i || j > n - 1) throw std::invalid_argument("braid_relator_index: invalid pair");
    int index = 0;
    for (int p = 1; p < i; ++p) index += (n - 1) - p;
    return index + (j - i - 1);
}

std::vector<std::vector<int>> BraidSeedRows::all() const {
    std::vector<std::vector<int>> sets;
    if (!adjacent.empty()) sets.push_back(adjacent);
    if (!last_generator.empty()) sets.push_back(last_generator);
    if (!row_swapped.empty()) sets.push_back(row_swapped);
    return sets;
}

BraidSeedRows braid_seed_rows(int n) {
    if (n < 4) throw std::invalid_argument("braid_seed_rows: n must be >= 4");
    BraidSeedRows out;
    auto block_rows = [&](int relator, std::vector<int>& into, bool skip_last = false) {
        for (int r = 0; r < n; ++r) {
            if (skip_last && r == n - 1) continue;
            into.push_back(relator * n + r);
        }
    };

    for (int j = 1; j <= n - 2; ++j) block_rows(braid_relator_index(n, j, j + 1), out.adjacent);
    std::sort(out.adjacent.begin(), out.adjacent.end());

    if (n >= 5) {
        for (int k = 1; k <= n - 3; ++k) block_rows(braid_relator_index(n, k, n - 1), out.last_generator);
        block_rows(braid_relator_index(n, 1, n - 2), out.last_generator);
        std::sort(out.last_generator.begin(), out.last_generator.end());
    }

    for (int k = 1; k <= n - 3; ++k) {
        block_rows(braid_relator_index(n, k, n - 1), out.row_swapped, /*skip_last=*/true);
        out.row_swapped.push_back(braid_relator_index(n, k, n - 2) * n + (n - 1));
    }
    block_rows(braid_relator_index(n, n - 2, n - 1), out.row_swapped);
    std::sort(out.row_swapped.begin(), out.row_swapped.end());

    return out;
}

}  // namespace talex
