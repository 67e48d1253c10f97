#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "lgkit/linalg.hpp"
#include "lgkit/poly.hpp"

namespace lgkit {

/// rows x cols matrix of polynomials; entry [r][c] maps component c to component r.
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Largest total degree among the entries (0 for an all-zero matrix).
unsigned max_entry_degree(const PolyMatrix& m);

/// Complex of free modules over the polynomial ring in `nvars` variables.
///
/// differentials[k] maps position k to position k+1. A periodic complex has
/// one differential per position, the last one wrapping around to position 0.
struct FreeComplex {
    std::size_t nvars = 0;
    std::vector<int> labels;          // display label per position
    std::vector<std::size_t> ranks;   // free rank per position
    std::vector<PolyMatrix> differentials;
    bool periodic = false;

    std::size_t positions() const { return ranks.size(); }
    /// Throws DimensionError when differential shapes disagree with the ranks.
    void validate() const;
    /// True when every composite of consecutive differentials is the zero matrix.
    bool squares_to_zero() const;
};

/// Finite-dimensional slice of a FreeComplex. maps[k] sends position k with
/// polynomial degrees <= truncation_degree to position k+1 with degrees
/// <= truncation_degree + max_entry_degree(differentials[k]).
struct TruncatedComplex {
    unsigned truncation_degree = 0;
    std::vector<std::size_t> source_dims;
    std::vector<SparseMatrix> maps;
};

struct TruncationOptions {
    /// Largest admissible matrix side; ResourceLimitError beyond it.
    std::size_t max_matrix_dim = 400000;
};

/// Reads LGKIT_MAX_MATRIX_DIM when set.
TruncationOptions truncation_options_from_env();

/// Matrix of a polynomial map restricted to source degree <= source_cap, with
/// rows indexed by (component, monomial of degree <= target_cap).
SparseMatrix truncate_map(const PolyMatrix& map, std::size_t nvars, std::size_t source_components,
                          unsigned source_cap, unsigned target_cap, const TruncationOptions& options = {});

TruncatedComplex truncate(const FreeComplex& complex, unsigned degree, const TruncationOptions& options = {});

/// Cohomology dimension at every position for cap D:
///   dim ker(out map on degree <= D)
///   - dim(image of degree <= D + s_in sources) intersected with degree <= D,
/// where s_in is the degree shift of the incoming map.
std::vector<std::size_t> truncated_cohomology(const FreeComplex& complex, unsigned degree,
                                              const TruncationOptions& options = {});

struct CohomologyReport {
    std::vector<int> positions;
    std::map<unsigned, std::vector<std::size_t>> dims_per_cap;
    bool stabilized = false;  // the two largest caps agree at every position
    unsigned cap_used = 0;    // largest cap computed

    const std::vector<std::size_t>& dims() const { return dims_per_cap.at(cap_used); }
};

/// Runs truncated_cohomology for each cap (sorted ascending, deduplicated).
CohomologyReport stabilized_cohomology(const FreeComplex& complex, std::span<const unsigned> caps,
                                       const TruncationOptions& options = {});

}  // namespace lgkit
