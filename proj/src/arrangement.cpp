#include "lgkit/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

// Reduced row-echelon form with zero rows removed.
std::vector<RationalRow> rref(std::vector<RationalRow> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const mpq_class inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || sgn(rows[k][c]) == 0) continue;
            const mpq_class f = rows[k][c];
            for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool in_span(const std::vector<RationalRow>& basis, const RationalRow& v) {
    if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return sgn(q) == 0; });
    std::vector<RationalRow> rows = basis;
    rows.push_back(v);
    return rational_rank(std::move(rows)) == basis.size();
}

std::vector<RationalRow> pick(const Arrangement& arr, const std::vector<std::size_t>& idx) {
    std::vector<RationalRow> rows;
    for (std::size_t i : idx) rows.push_back(arr.forms()[i]);
    return rows;
}

}  // namespace

std::size_t rational_rank(std::vector<RationalRow> rows) { return rref(std::move(rows)).size(); }

Arrangement::Arrangement(std::size_t d, std::vector<RationalRow> forms) : d_(d), forms_(std::move(forms)) {
    if (d_ == 0) throw DimensionError("arrangement needs ambient dimension >= 1");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (forms_[i].size() != d_)
            throw DimensionError("form " + std::to_string(i + 1) + " has " + std::to_string(forms_[i].size()) +
                                 " coefficients, expected " + std::to_string(d_));
        for (auto& q : forms_[i]) q.canonicalize();
        if (rational_rank({forms_[i]}) == 0) throw DomainError("form " + std::to_string(i + 1) + " is zero");
        for (std::size_t j = 0; j < i; ++j)
            if (rational_rank({forms_[i], forms_[j]}) < 2)
                throw DomainError("forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                  " define the same hyperplane");
    }
}

Arrangement Arrangement::boolean(std::size_t d) {
    std::vector<RationalRow> forms;
    for (std::size_t i = 0; i < d; ++i) {
        RationalRow r(d, 0);
        r[i] = 1;
        forms.push_back(std::move(r));
    }
    return {d, std::move(forms)};
}

Arrangement parse_arrangement(std::string_view text) {
    std::vector<RationalRow> forms;
    std::size_t d = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        RationalRow row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::string token(line.substr(start, i - start));
            if (!token.empty() && token.front() == '+') token.erase(0, 1);
            mpq_class q;
            if (token.empty() || token.find_first_not_of("-0123456789/") != std::string::npos ||
                q.set_str(token, 10) != 0 || sgn(q.get_den()) == 0)
                throw ParseError("invalid rational coefficient '" + std::string(line.substr(start, i - start)) + "'",
                                 line_no, start + 1);
            q.canonicalize();
            row.push_back(q);
        }
        if (!row.empty()) {
            if (d == 0) d = row.size();
            if (row.size() != d)
                throw ParseError("expected " + std::to_string(d) + " coefficients, found " + std::to_string(row.size()),
                                 line_no, 1);
            forms.push_back(std::move(row));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (forms.empty()) throw ParseError("arrangement file contains no forms", line_no, 1);
    return {d, std::move(forms)};
}

bool IntersectionLattice::below(std::size_t f, std::size_t g) const {
    const auto& a = flats[f].hyperplanes;
    const auto& b = flats[g].hyperplanes;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntersectionLattice intersection_lattice(const Arrangement& arr) {
    IntersectionLattice L;
    std::map<std::vector<std::size_t>, std::size_t> index;
    L.flats.push_back(Flat{{}, 0, {}});
    index.emplace(std::vector<std::size_t>{}, 0);
    L.covers.emplace_back();

    // Every flat of codim k+1 is a flat of codim k cut by one more hyperplane,
    // so a breadth-first sweep meets all of them and records the covers.
    std::size_t level_begin = 0;
    while (level_begin < L.flats.size()) {
        const std::size_t level_end = L.flats.size();
        std::vector<std::vector<std::size_t>> fresh;
        std::vector<std::vector<RationalRow>> fresh_basis;
        for (std::size_t f = level_begin; f < level_end; ++f) {
            const Flat& F = L.flats[f];
            for (std::size_t h = 0; h < arr.size(); ++h) {
                if (std::binary_search(F.hyperplanes.begin(), F.hyperplanes.end(), h)) continue;
                std::vector<RationalRow> rows = F.conormal;
                rows.push_back(arr.forms()[h]);
                std::vector<RationalRow> basis = rref(std::move(rows));
                std::vector<std::size_t> hs;
                for (std::size_t k = 0; k < arr.size(); ++k)
                    if (in_span(basis, arr.forms()[k])) hs.push_back(k);
                if (index.count(hs) == 0) {
                    index.emplace(hs, static_cast<std::size_t>(-1));
                    fresh.push_back(hs);
                    fresh_basis.push_back(std::move(basis));
                }
            }
        }
        // Deterministic order within a codim: by hyperplane set.
        std::vector<std::size_t> order(fresh.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fresh[a] < fresh[b]; });
        for (std::size_t k : order) {
            index[fresh[k]] = L.flats.size();
            const std::size_t codim = fresh_basis[k].size();
            L.flats.push_back(Flat{std::move(fresh_basis[k]), codim, fresh[k]});
            L.covers.emplace_back();
        }
        for (std::size_t f = level_begin; f < level_end; ++f) {
            for (std::size_t g = level_end; g < L.flats.size(); ++g)
                if (L.below(f, g)) L.covers[f].push_back(g);
        }
        level_begin = level_end;
    }
    return L;
}

std::vector<std::int64_t> mobius_table(const IntersectionLattice& lattice) {
    const std::size_t n = lattice.flats.size();
    std::vector<std::int64_t> mu(n, 0);
    if (n == 0) return mu;
    mu[0] = 1;
    for (std::size_t f = 1; f < n; ++f) {
        std::int64_t s = 0;
        for (std::size_t g = 0; g < n; ++g)
            if (g != f && lattice.flats[g].codim < lattice.flats[f].codim && lattice.below(g, f)) s += mu[g];
        mu[f] = -s;
    }
    return mu;
}

std::vector<std::int64_t> poincare_polynomial(const IntersectionLattice& lattice) {
    const auto mu = mobius_table(lattice);
    std::vector<std::int64_t> coeffs(lattice.rank() + 1, 0);
    for (std::size_t f = 0; f < lattice.flats.size(); ++f)
        coeffs[lattice.flats[f].codim] += mu[f] < 0 ? -mu[f] : mu[f];
    return coeffs;
}

std::vector<std::int64_t> poincare_polynomial(const Arrangement& arr) {
    return poincare_polynomial(intersection_lattice(arr));
}

std::vector<std::int64_t> os_ranks(const Arrangement& arr) {
    const std::size_t n = arr.size();
    std::vector<std::int64_t> counts{1};

    // An independent set S contains a broken circuit exactly when some
    // nonempty T inside S has a hyperplane h < min(T) whose form lies in span(T).
    auto has_broken_circuit = [&](const std::vector<std::size_t>& S) {
        const std::size_t k = S.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::size_t> T;
            for (std::size_t b = 0; b < k; ++b)
                if (mask >> b & 1) T.push_back(S[b]);
            const auto basis = rref(pick(arr, T));
            for (std::size_t h = 0; h < T.front(); ++h)
                if (in_span(basis, arr.forms()[h])) return true;
        }
        return false;
    };

    std::vector<std::size_t> S;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t h = start; h < n; ++h) {
            S.push_back(h);
            if (rational_rank(pick(arr, S)) == S.size() && !has_broken_circuit(S)) {
                if (counts.size() <= S.size()) counts.resize(S.size() + 1, 0);
                ++counts[S.size()];
                self(self, h + 1);
            }
            S.pop_back();
        }
    };
    extend(extend, 0);
    return counts;
}

H2Report h2_rank(const Arrangement& arr) {
    const auto p = poincare_polynomial(arr);
    H2Report r;
    r.rank = p.size() > 2 ? p[2] : 0;
    r.supports_nontrivial_elementary = r.rank > 0;
    return r;
}

}  // namespace lgkit
