#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lgkit {

using RationalRow = std::vector<mpq_class>;

/// Central arrangement in C^d given by linear forms (the hyperplanes are their
/// kernels). Hyperplanes are ordered as given; the order matters for NBC sets.
class Arrangement {
public:
    /// Throws DomainError for zero or pairwise proportional forms and
    /// DimensionError when a form's length differs from d.
    Arrangement(std::size_t d, std::vector<RationalRow> forms);

    /// The d coordinate hyperplanes.
    static Arrangement boolean(std::size_t d);

    std::size_t dimension() const { return d_; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<RationalRow>& forms() const { return forms_; }

private:
    std::size_t d_;
    std::vector<RationalRow> forms_;
};

/// One form per line, whitespace-separated rationals ("1 -1 0", "1/2 3").
/// Blank lines and text after '#' are ignored. ParseError carries line/column.
Arrangement parse_arrangement(std::string_view text);

/// Rank of a list of rational rows.
std::size_t rational_rank(std::vector<RationalRow> rows);

struct Flat {
    /// Reduced row-echelon basis of the forms vanishing on the flat; a canonical
    /// key for the subspace (its annihilator).
    std::vector<RationalRow> conormal;
    std::size_t codim = 0;
    /// Indices of every hyperplane containing the flat.
    std::vector<std::size_t> hyperplanes;
};

struct IntersectionLattice {
    std::vector<Flat> flats;  // ordered by codim, then by hyperplane set; flats[0] is C^d
    /// covers[i]: indices of the flats covering flats[i] (one codim higher).
    std::vector<std::vector<std::size_t>> covers;

    /// F <= G in reverse inclusion, i.e. G is contained in F.
    bool below(std::size_t f, std::size_t g) const;
    std::size_t rank() const { return flats.empty() ? 0 : flats.back().codim; }
};

IntersectionLattice intersection_lattice(const Arrangement& arr);

/// mu(C^d, F) for every flat, indexed like lattice.flats.
std::vector<std::int64_t> mobius_table(const IntersectionLattice& lattice);

/// Coefficients of sum_F |mu(F)| t^codim(F), lowest degree first.
std::vector<std::int64_t> poincare_polynomial(const IntersectionLattice& lattice);
std::vector<std::int64_t> poincare_polynomial(const Arrangement& arr);

/// Number of no-broken-circuit subsets of each size, found from linear
/// dependencies among the forms alone (no lattice involved).
std::vector<std::int64_t> os_ranks(const Arrangement& arr);

struct H2Report {
    std::int64_t rank = 0;
    /// True when H^2 of the complement is nonzero, so nontrivial line bundles
    /// (and elementary factorizations built from them) exist.
    bool supports_nontrivial_elementary = false;
};

H2Report h2_rank(const Arrangement& arr);

}  // namespace lgkit
