#include "lgkit/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lgkit/errors.hpp"

namespace lgkit {

unsigned max_entry_degree(const PolyMatrix& m) {
    int d = 0;
    for (const auto& row : m)
        for (const auto& p : row) d = std::max(d, p.degree());
    return static_cast<unsigned>(d);
}

namespace {

std::size_t next_position(const FreeComplex& c, std::size_t k) { return (k + 1) % c.positions(); }

bool has_out(const FreeComplex& c, std::size_t k) { return c.periodic || k + 1 < c.positions(); }
bool has_in(const FreeComplex& c, std::size_t k) { return c.periodic || k > 0; }
std::size_t in_index(const FreeComplex& c, std::size_t k) { return k == 0 ? c.positions() - 1 : k - 1; }

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars, std::size_t inner) {
    const std::size_t rows = a.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    PolyMatrix out(rows, std::vector<Poly>(cols, Poly(nvars)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < inner; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Monomials up to a degree with their indices; a prefix of the list is the
// set of monomials up to any smaller degree.
struct MonomialTable {
    std::vector<Monomial> monos;
    std::map<Monomial, std::size_t> index;
    std::vector<std::size_t> count_up_to;  // count_up_to[d] = #monomials of degree <= d

    MonomialTable(std::size_t nvars, unsigned max_degree) : monos(monomials_up_to_degree(nvars, max_degree)) {
        count_up_to.assign(max_degree + 1, 0);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            index.emplace(monos[i], i);
            for (unsigned d = monos[i].degree(); d <= max_degree; ++d) ++count_up_to[d];
        }
    }
};

}  // namespace

void FreeComplex::validate() const {
    if (labels.size() != ranks.size()) throw DimensionError("complex labels and ranks differ in length");
    const std::size_t expected = periodic ? ranks.size() : (ranks.empty() ? 0 : ranks.size() - 1);
    if (differentials.size() != expected) throw DimensionError("complex has the wrong number of differentials");
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        const auto& m = differentials[k];
        const std::size_t target = ranks[next_position(*this, k)];
        if (m.size() != target) throw DimensionError("differential row count disagrees with target rank");
        for (const auto& row : m) {
            if (row.size() != ranks[k]) throw DimensionError("differential column count disagrees with source rank");
            for (const auto& p : row)
                if (p.nvars() != nvars) throw DimensionError("differential entry has wrong variable count");
        }
    }
}

bool FreeComplex::squares_to_zero() const {
    const std::size_t L = differentials.size();
    const std::size_t count = periodic ? L : (L ? L - 1 : 0);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t k2 = (k + 1) % L;
        const PolyMatrix prod = multiply(differentials[k2], differentials[k], nvars, ranks[next_position(*this, k)]);
        for (const auto& row : prod)
            for (const auto& p : row)
                if (!p.is_zero()) return false;
    }
    return true;
}

TruncationOptions truncation_options_from_env() {
    TruncationOptions opts;
    if (const char* v = std::getenv("LGKIT_MAX_MATRIX_DIM")) opts.max_matrix_dim = std::stoul(v);
    return opts;
}

SparseMatrix truncate_map(const PolyMatrix& map, std::size_t nvars, std::size_t source_components,
                          unsigned source_cap, unsigned target_cap, const TruncationOptions& options) {
    const MonomialTable table(nvars, std::max(source_cap, target_cap));
    const std::size_t n_src = table.count_up_to[source_cap];
    const std::size_t n_tgt = table.count_up_to[target_cap];
    const std::size_t target_components = map.size();
    if (n_src * source_components > options.max_matrix_dim || n_tgt * target_components > options.max_matrix_dim)
        throw ResourceLimitError("truncated matrix exceeds " + std::to_string(options.max_matrix_dim) +
                                 " rows or columns");

    SparseMatrix out;
    out.rows = n_tgt * target_components;
    out.columns.reserve(n_src * source_components);
    for (std::size_t c = 0; c < source_components; ++c) {
        for (std::size_t mi = 0; mi < n_src; ++mi) {
            const Monomial& m = table.monos[mi];
            std::map<std::size_t, GaussianRational> acc;
            for (std::size_t r = 0; r < target_components; ++r) {
                for (const auto& [tm, tc] : map[r][c].terms()) {
                    const Monomial prod = tm * m;
                    if (prod.degree() > target_cap)
                        throw DomainError("target truncation too small for the map's degree shift");
                    acc[r * n_tgt + table.index.at(prod)] += tc;
                }
            }
            SparseVector col;
            for (auto& [idx, v] : acc)
                if (!v.is_zero()) col.emplace_back(idx, std::move(v));
            out.columns.push_back(std::move(col));
        }
    }
    return out;
}

TruncatedComplex truncate(const FreeComplex& complex, unsigned degree, const TruncationOptions& options) {
    complex.validate();
    TruncatedComplex out;
    out.truncation_degree = degree;
    const MonomialTable table(complex.nvars, degree);
    for (std::size_t k = 0; k < complex.positions(); ++k) out.source_dims.push_back(complex.ranks[k] * table.monos.size());
    for (std::size_t k = 0; k < complex.differentials.size(); ++k) {
        const auto& m = complex.differentials[k];
        out.maps.push_back(truncate_map(m, complex.nvars, complex.ranks[k], degree, degree + max_entry_degree(m), options));
    }
    return out;
}

std::vector<std::size_t> truncated_cohomology(const FreeComplex& complex, unsigned degree,
                                              const TruncationOptions& options) {
    complex.validate();
    std::vector<std::size_t> dims;
    const std::size_t n = complex.nvars;
    for (std::size_t k = 0; k < complex.positions(); ++k) {
        const std::size_t rank_k = complex.ranks[k];
        if (rank_k == 0) {
            dims.push_back(0);
            continue;
        }
        std::size_t kernel;
        if (has_out(complex, k)) {
            const auto& out = complex.differentials[k];
            const SparseMatrix M = truncate_map(out, n, rank_k, degree, degree + max_entry_degree(out), options);
            kernel = M.cols() - rank(M);
        } else {
            kernel = rank_k * MonomialTable(n, degree).monos.size();
        }

        std::size_t boundary = 0;
        if (has_in(complex, k)) {
            const std::size_t src = in_index(complex, k);
            const auto& in = complex.differentials[src];
            const unsigned shift = max_entry_degree(in);
            const unsigned target_cap = degree + 2 * shift;
            const SparseMatrix M = truncate_map(in, n, complex.ranks[src], degree + shift, target_cap, options);
            const MonomialTable table(n, target_cap);
            const std::size_t n_tgt = table.count_up_to[target_cap];
            const std::size_t low = table.count_up_to[degree];
            // Rows of degree > D are those with monomial index >= count_up_to[D].
            const std::size_t high_rank = rank_of_rows(M, [&](std::size_t row) { return row % n_tgt >= low; });
            boundary = rank(M) - high_rank;
        }
        dims.push_back(kernel - boundary);
    }
    return dims;
}

CohomologyReport stabilized_cohomology(const FreeComplex& complex, std::span<const unsigned> caps,
                                       const TruncationOptions& options) {
    std::vector<unsigned> sorted(caps.begin(), caps.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw DomainError("at least one truncation cap is required");

    CohomologyReport report;
    report.positions = complex.labels;
    for (unsigned cap : sorted) report.dims_per_cap[cap] = truncated_cohomology(complex, cap, options);
    report.cap_used = sorted.back();
    report.stabilized =
        sorted.size() >= 2 && report.dims_per_cap.at(sorted.back()) == report.dims_per_cap.at(sorted[sorted.size() - 2]);
    return report;
}

}  // namespace lgkit
