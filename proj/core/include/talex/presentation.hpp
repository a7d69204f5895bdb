// Finitely presented groups carrying a surjection onto <z>, plus builders
// for the braid and welded braid families.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "talex/word.hpp"

namespace talex {

class Presentation {
  public:
    Presentation(std::string name, std::vector<std::string> generator_names, std::vector<Word> relators,
                 std::vector<int> abelianization);

    const std::string& name() const { return name_; }
    int generator_count() const { return static_cast<int>(generator_names_.size()); }
    int relator_count() const { return static_cast<int>(relators_.size()); }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<Word>& relators() const { return relators_; }
    /// z-exponent assigned to each generator by the abelianization.
    const std::vector<int>& abelianization() const { return abelianization_; }

    std::optional<int> generator_index(std::string_view name) const;

  private:
    std::string name_;
    std::vector<std::string> generator_names_;
    std::vector<Word> relators_;
    std::vector<int> abelianization_;
};

/// Artin presentation of the braid group on n strands: generators s1..s(n-1),
/// one relator per pair [i, j] (i < j) in lexicographic order, the
/// three-letter braid relator when j = i + 1 and the commutator otherwise.
/// The abelianization sends every generator to z.
Presentation braid_group(int n);

/// Welded braid group on n strands: generators s1..s(n-1), t1..t(n-1) with
/// the eight relation families (braid and commutation relations for s and t
/// separately, t_i^2 = 1, mixed commutation, and the two mixed triples),
/// each relation recorded as left * right^-1. The abelianization sends s to z
/// and t to 1.
Presentation welded_braid_group(int n);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    int generators = 0;
    int relators = 0;
    /// True when the relator count is below generators - 1, the case where
    /// the twisted Alexander invariant is 0 by definition.
    bool degenerate = false;

    std::string summary() const;
};

/// Checks name uniqueness and that the abelianization kills every relator.
ValidationReport validate(const Presentation& p);

}  // namespace talex
