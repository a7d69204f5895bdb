#include "talex/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace talex {

Presentation::Presentation(std::string name, std::vector<std::string> generator_names, std::vector<Word> relators,
                           std::vector<int> abelianization)
    : name_(std::move(name)),
      generator_names_(std::move(generator_names)),
      relators_(std::move(relators)),
      abelianization_(std::move(abelianization)) {
    if (abelianization_.size() != generator_names_.size())
        throw std::invalid_argument("Presentation: abelianization size must match generator count");
    for (const Word& r : relators_)
        for (const Letter& l : r.letters())
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generator_names_.size())
                throw std::invalid_argument("Presentation: relator uses an unknown generator index");
}

std::optional<int> Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generator_names_.size(); ++i)
        if (generator_names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

// left * right^-1 as a freely reduced relator.
Word relator_of(const Word& left, const Word& right) { return concat(left, right.inverse()); }

}  // namespace

Presentation braid_group(int n) {
    if (n < 2) throw std::invalid_argument("braid_group: n must be >= 2");
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
    std::vector<Word> relators;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n - 1; ++j) {
            Word si = Word::generator(i), sj = Word::generator(j);
            if (j == i + 1) {
                relators.push_back(relator_of(si * sj * si, sj * si * sj));
            } else {
                relators.push_back(relator_of(si * sj, sj * si));
            }
        }
    }
    return Presentation("b" + std::to_string(n), std::move(names), std::move(relators),
                        std::vector<int>(static_cast<std::size_t>(n - 1), 1));
}

Presentation welded_braid_group(int n) {
    if (n < 2) throw std::invalid_argument("welded_braid_group: n must be >= 2");
    const int k = n - 1;  // generators per family
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("s" + std::to_string(i));
    for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
    auto s = [&](int i) { return Word::generator(i); };
    auto t = [&](int i) { return Word::generator(k + i); };

    std::vector<Word> relators;
    // Distant commutation within the s family, then the s braid triples.
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) relators.push_back(relator_of(s(i) * s(j), s(j) * s(i)));
    for (int i = 0; i + 1 < k; ++i) relators.push_back(relator_of(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)));
    // Same two families for t.
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) relators.push_back(relator_of(t(i) * t(j), t(j) * t(i)));
    for (int i = 0; i + 1 < k; ++i) relators.push_back(relator_of(t(i) * t(i + 1) * t(i), t(i + 1) * t(i) * t(i + 1)));
    // Involutions t_i^2.
    for (int i = 0; i < k; ++i) relators.push_back(t(i) * t(i));
    // Mixed distant commutation s_i t_j = t_j s_i, |i - j| >= 2.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (std::abs(i - j) >= 2) relators.push_back(relator_of(s(i) * t(j), t(j) * s(i)));
    // Mixed triples s_i t_{i+1} t_i = t_{i+1} t_i s_{i+1} and
    // t_i s_{i+1} s_i = s_{i+1} s_i t_{i+1}.
    for (int i = 0; i + 1 < k; ++i) relators.push_back(relator_of(s(i) * t(i + 1) * t(i), t(i + 1) * t(i) * s(i + 1)));
    for (int i = 0; i + 1 < k; ++i) relators.push_back(relator_of(t(i) * s(i + 1) * s(i), s(i + 1) * s(i) * t(i + 1)));

    std::vector<int> abel(static_cast<std::size_t>(2 * k), 0);
    for (int i = 0; i < k; ++i) abel[static_cast<std::size_t>(i)] = 1;
    return Presentation("wb" + std::to_string(n), std::move(names), std::move(relators), std::move(abel));
}

ValidationReport validate(const Presentation& p) {
    ValidationReport report;
    report.generators = p.generator_count();
    report.relators = p.relator_count();
    report.degenerate = p.relator_count() < p.generator_count() - 1;

    std::set<std::string> seen;
    for (const auto& name : p.generator_names()) {
        if (!seen.insert(name).second) {
            report.ok = false;
            report.failures.push_back("duplicate generator name '" + name + "'");
        }
    }
    for (int i = 0; i < p.relator_count(); ++i) {
        auto deg = abelian_degree(p.relators()[static_cast<std::size_t>(i)], p.abelianization());
        if (deg != 0) {
            report.ok = false;
            report.failures.push_back("relator " + std::to_string(i + 1) + " has abelian degree " + std::to_string(deg) +
                                      "; the abelianization does not kill it");
        }
    }
    return report;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    out << (ok ? "valid" : "INVALID") << ": generators=" << generators << " relators=" << relators;
    if (degenerate) out << " (relators < generators - 1, invariant is 0 by definition)";
    for (const auto& f : failures) out << "\n  - " << f;
    return out.str();
}

}  // namespace talex
