#pragma once
// Built-in catalogue of the tight corner-orbit designs (the three
// classification tables), with closed-form radii/weights, concrete
// instantiation, and cross-checking against the exhaustive search.

#include "orbitdesigns/designs.hpp"

#include <functional>

namespace orbitdesigns {

// Symmetry producing a distinct mirror row: the A_n diagram flip
// k -> n+1-k, or the D_n half-spinor swap n-1 <-> n.
enum class DualKind { none, diagram, spinor };

struct CatalogueRow {
    GroupType type = GroupType::A;
    bool any_n = false;     // row exists at every rank >= n
    int n = 0;              // fixed rank, or the minimum rank when any_n
    int t = 0;
    std::vector<int> J;     // for any_n rows, entries are resolved by j_at
    bool family = false;    // one free squared radius
    int free_k = 0;         // orbit index whose squared radius is the parameter
    DualKind dual = DualKind::none;

    // Closed forms at rank n and family parameter s = r_{free_k}^2
    // (s is ignored for fixed rows).
    std::function<std::vector<int>(int)> j_at;
    std::function<std::map<int, Scalar>(int, const Rational&)> radius2_at;
    std::function<std::map<int, Scalar>(int, const Rational&)> weight_at;
    std::function<bool(const Rational&)> valid;

    std::string radii_text;   // printable closed forms
    std::string weight_text;
    std::string note;
};

// The table for one group type, in (t, n, J) order.
const std::vector<CatalogueRow>& catalogue(GroupType type);

struct CatalogueInstance {
    GroupType type = GroupType::A;
    int n = 0, t = 0;
    std::vector<int> J;
    bool family = false;
    bool is_dual = false;
    Rational s = Rational(0);    // family parameter used (0 for fixed rows)
    std::string label;
    std::map<int, Scalar> radius2, weight;
    WeightedDesign design() const;
};

std::vector<Rational> default_family_samples();

// Concrete designs for every catalogue row (and its dual, when distinct)
// with rank in [n_lo, n_hi]; family rows are instantiated at up to three
// valid parameter values from family_samples.
std::vector<CatalogueInstance> catalogue_instances(
    GroupType type, int n_lo, int n_hi,
    const std::vector<Rational>& family_samples = default_family_samples());

struct CatalogueCheck {
    bool ok = true;
    int matched = 0;
    std::vector<std::string> problems;  // missing rows, extra rows, mismatches
};

// Compare exhaustive-search output against the catalogue over ranks up to
// n_max.  For type D the search output is first restricted to index sets
// meeting {n-1, n}: subsets of {1..n-2} coincide with type-B point sets and
// are outside the table's scope.
CatalogueCheck check_against_catalogue(GroupType type,
                                       const std::vector<ClassifiedDesign>& found,
                                       int n_max);

}  // namespace orbitdesigns
