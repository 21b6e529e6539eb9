#include "rmj/harmonic.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "rmj/combin.hpp"

namespace rmj {

using json = nlohmann::ordered_json;

Rat SubsetFn::value(const std::vector<std::uint32_t>& subset) const {
    auto it = values_.find(subset);
    return it == values_.end() ? Rat(0) : it->second;
}

void SubsetFn::set(std::vector<std::uint32_t> subset, Rat v) {
    v.canonicalize();
    if (subset.size() != k_) throw input_error("subset size must equal the function degree");
    for (auto i : subset)
        if (i >= n_) throw input_error("subset index out of range");
    if (!std::is_sorted(subset.begin(), subset.end()))
        std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw input_error("subset has repeated indices");
    if (v == 0)
        values_.erase(subset);
    else
        values_[std::move(subset)] = std::move(v);
}

void SubsetFn::add(std::vector<std::uint32_t> subset, const Rat& v) {
    if (v == 0) return;
    auto it = values_.find(subset);
    if (it == values_.end()) {
        set(std::move(subset), v);
        return;
    }
    it->second += v;
    if (it->second == 0) values_.erase(it);
}

std::string SubsetFn::to_json() const {
    json j;
    j["n"] = n_;
    j["k"] = k_;
    j["values"] = json::array();
    for (const auto& [s, v] : values_)
        j["values"].push_back({{"subset", s}, {"value", rat_to_string(v)}});
    return j.dump();
}

SubsetFn SubsetFn::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("n") || !j.contains("k"))
        throw input_error("malformed subset-function JSON");
    SubsetFn f(j["n"].get<std::uint32_t>(), j["k"].get<std::uint32_t>());
    for (const auto& e : j.at("values"))
        f.set(e.at("subset").get<std::vector<std::uint32_t>>(),
              rat_from_string(e.at("value").get<std::string>()));
    return f;
}

SubsetFn gamma(const SubsetFn& f) {
    if (f.degree() < 1) throw input_error("gamma needs degree >= 1");
    SubsetFn out(f.points(), f.degree() - 1);
    for (const auto& [z, v] : f.values()) {
        std::vector<std::uint32_t> y(z.size() - 1);
        for (std::size_t drop = 0; drop < z.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < z.size(); ++i)
                if (i != drop) y[w++] = z[i];
            out.add(y, v);
        }
    }
    return out;
}

Rat tilde(const SubsetFn& f, std::span<const std::uint32_t> u_sorted) {
    Rat total(0);
    for (const auto& [z, v] : f.values()) {
        // z subset of u? both sorted
        std::size_t i = 0;
        bool ok = true;
        for (auto e : z) {
            while (i < u_sorted.size() && u_sorted[i] < e) ++i;
            if (i == u_sorted.size() || u_sorted[i] != e) {
                ok = false;
                break;
            }
            ++i;
        }
        if (ok) total += v;
    }
    return total;
}

HarmonicFn::HarmonicFn(SubsetFn f) : f_(std::move(f)) {
    if (f_.degree() < 1) throw input_error("harmonic functions have degree >= 1");
    if (!gamma(f_).is_zero()) throw verification_error("gamma(f) != 0: not harmonic");
}

namespace {

std::vector<std::vector<std::uint32_t>> lex_subsets(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    for_each_subset(n, k, [&](const std::vector<std::uint32_t>& s) { out.push_back(s); });
    return out;
}

}  // namespace

std::vector<HarmonicFn> harm_basis(std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
    if (k < 1 || k > n) throw input_error("harm_basis needs 1 <= k <= n");
    if (binomial_u64(n, k) > cap)
        throw capacity_error("C(n,k) exceeds the harmonic basis cap");

    const auto cols = lex_subsets(n, k);
    const auto rows = lex_subsets(n, k - 1);
    const std::size_t nc = cols.size(), nr = rows.size();

    std::map<std::vector<std::uint32_t>, std::size_t> row_index;
    for (std::size_t r = 0; r < nr; ++r) row_index.emplace(rows[r], r);

    // Incidence matrix of the differentiation operator: rows (k-1)-subsets,
    // columns k-subsets, entry 1 iff row is contained in column.
    std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc));
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& z = cols[c];
        std::vector<std::uint32_t> y(k - 1);
        for (std::size_t drop = 0; drop < k; ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (i != drop) y[w++] = z[i];
            m[row_index.at(y)][c] = 1;
        }
    }

    // Exact Gauss-Jordan over the rationals; pivots taken in column order,
    // first nonzero row wins.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t p = rank;
        while (p < nr && m[p][col] == 0) ++p;
        if (p == nr) continue;
        std::swap(m[rank], m[p]);
        const Rat inv = 1 / m[rank][col];
        if (inv != 1)
            for (std::size_t j = col; j < nc; ++j)
                if (m[rank][j] != 0) m[rank][j] *= inv;
        for (std::size_t q = 0; q < nr; ++q) {
            if (q == rank || m[q][col] == 0) continue;
            const Rat f = m[q][col];
            for (std::size_t j = col; j < nc; ++j)
                if (m[rank][j] != 0) m[q][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<HarmonicFn> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        // kernel vector: 1 at the free column, -RREF entry at each pivot column
        std::vector<std::pair<std::size_t, Rat>> entries;
        entries.emplace_back(f, Rat(1));
        for (std::size_t r = 0; r < rank; ++r)
            if (m[r][f] != 0) entries.emplace_back(pivot_col[r], -m[r][f]);

        // scale to integer entries with content 1
        Int lcm_den(1);
        for (const auto& [idx, v] : entries)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
        Int content(0);
        std::vector<std::pair<std::size_t, Int>> scaled;
        scaled.reserve(entries.size());
        for (const auto& [idx, v] : entries) {
            Int num = v.get_num() * (lcm_den / v.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
            scaled.emplace_back(idx, std::move(num));
        }
        SubsetFn fn(n, k);
        for (auto& [idx, num] : scaled) fn.set(cols[idx], Rat(num / content));
        basis.emplace_back(std::move(fn));
    }

    const std::int64_t expect =
        static_cast<std::int64_t>(binomial_u64(n, k)) -
        static_cast<std::int64_t>(binomial_u64(n, k - 1));
    if (static_cast<std::int64_t>(basis.size()) != std::max<std::int64_t>(expect, 0))
        throw verification_error("harmonic basis has unexpected dimension");
    return basis;
}

Poly4 hwe(const BinaryCode& c, const HarmonicFn& f) {
    if (f.points() != c.length())
        throw input_error("harmonic function and code have different point counts");
    const std::uint32_t n = c.length();
    std::map<std::uint32_t, Rat> by_weight;
    for_each_codeword(c, [&](const BitVec& word) {
        const auto supp = word.support();
        Rat v = tilde(f.fn(), supp);
        if (v != 0) by_weight[word.popcount()] += v;
    });
    Poly4 p;
    for (const auto& [wt, v] : by_weight)
        if (v != 0) p = p + Poly4::monomial(Monomial{0, 0, n - wt, wt}, v);
    return p;
}

Poly4 bachoc_transform(const Poly4& wcf, std::uint32_t n, std::uint32_t k, const Int& code_size) {
    if (code_size <= 0) throw input_error("code size must be positive");
    // peel off (xy)^k and check homogeneity of the quotient
    Poly4 zpoly;
    for (const auto& [mono, coeff] : wcf.terms()) {
        if (mono.w || mono.z) throw input_error("harmonic enumerator must involve x,y only");
        if (mono.x < k || mono.y < k)
            throw input_error("enumerator not divisible by (xy)^k: f not harmonic or wrong k");
        if (mono.x + mono.y != n)
            throw input_error("enumerator is not homogeneous of degree n");
        zpoly = zpoly + Poly4::monomial(Monomial{0, 0, mono.x - k, mono.y - k}, coeff);
    }
    Poly4 dual_z = macwilliams_substitute(zpoly);
    Rat scale = Rat(pow2(k)) / Rat(code_size);
    if (k & 1) scale = -scale;
    dual_z = dual_z.scale(scale);
    return dual_z * Poly4::monomial(Monomial{0, 0, k, k});
}

Subspace3 make_subspace3(int m, std::array<std::uint32_t, 3> basis) {
    if (m < 3) throw input_error("3-dimensional subspace needs m >= 3");
    const std::uint32_t n = std::uint32_t{1} << m;
    std::set<std::uint32_t> span;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::uint32_t v = 0;
        for (unsigned i = 0; i < 3; ++i)
            if ((mask >> i) & 1) v ^= basis[i];
        if (v >= n) throw input_error("subspace basis vector out of range");
        span.insert(v);
    }
    if (span.size() != 8) throw input_error("subspace basis vectors are not independent");
    Subspace3 u;
    u.m = m;
    u.basis = basis;
    u.points.assign(span.begin(), span.end());
    return u;
}

std::pair<BinaryCode, std::map<BitVec, std::uint64_t>> restrict_to_subspace(const BinaryCode& c,
                                                                            const Subspace3& u) {
    if (c.length() != (std::uint32_t{1} << u.m))
        throw input_error("code length does not match the subspace's ambient space");
    const std::uint32_t half = std::uint32_t{1} << (u.m - 1);

    std::set<BitVec> image;
    std::map<BitVec, std::uint64_t> fiber;
    for_each_codeword(c, [&](const BitVec& word) {
        BitVec r(8);
        for (std::uint32_t i = 0; i < 8; ++i)
            if (word.get(u.points[i])) r.set(i);
        image.insert(r);
        if (r.popcount() == 4 && word.popcount() == half) ++fiber[r];
    });

    const BinaryCode h8 = extended_hamming(3);
    std::set<BitVec> h8_words;
    for_each_codeword(h8, [&](const BitVec& word) { h8_words.insert(word); });
    if (image != h8_words)
        throw verification_error("restriction image differs from H_8 (bad subspace?)");

    std::vector<BitVec> rows(image.begin(), image.end());
    return {BinaryCode::from_rows(8, rows), std::move(fiber)};
}

BlockSet hamming8_weight4_blocks() { return shell(extended_hamming(3), 4); }

HarmonicFn corollary_f(std::pair<std::uint32_t, std::uint32_t> tau,
                       const std::optional<Subspace3>& u) {
    if (tau.first == tau.second || tau.first >= 8 || tau.second >= 8)
        throw input_error("tau must be a transposition of two distinct indices in 0..7");

    const BlockSet b = hamming8_weight4_blocks();
    auto apply_tau = [&](const std::vector<std::uint32_t>& block) {
        std::vector<std::uint32_t> out;
        out.reserve(block.size());
        for (auto i : block)
            out.push_back(i == tau.first ? tau.second : i == tau.second ? tau.first : i);
        std::sort(out.begin(), out.end());
        return out;
    };

    std::map<std::vector<std::uint32_t>, Rat> values;
    for (const auto& block : b.blocks) {
        values[block] += 1;
        values[apply_tau(block)] -= 1;
    }

    std::size_t common = 0;
    for (const auto& block : b.blocks) {
        auto moved = apply_tau(block);
        if (std::binary_search(b.blocks.begin(), b.blocks.end(), moved)) ++common;
    }
    if (common != 6)
        throw verification_error("expected |B ∩ B^tau| = 6, got " + std::to_string(common));

    std::uint32_t npoints = 8;
    std::vector<std::uint32_t> embed{0, 1, 2, 3, 4, 5, 6, 7};
    if (u) {
        npoints = std::uint32_t{1} << u->m;
        embed.assign(u->points.begin(), u->points.end());
    }
    SubsetFn f(npoints, 4);
    for (const auto& [block, v] : values) {
        if (v == 0) continue;
        std::vector<std::uint32_t> mapped;
        mapped.reserve(4);
        for (auto i : block) mapped.push_back(embed[i]);
        f.set(std::move(mapped), v);
    }
    return HarmonicFn(std::move(f));
}

std::pair<Poly4, Poly4> rm1_subspace_hwe_closed(int m, std::uint32_t k, const Rat& s) {
    if (m < 3) throw input_error("closed harmonic enumerator needs m >= 3");
    if (k < 1 || k > 4) throw input_error("degree k must be in 1..4");
    const std::uint32_t half = std::uint32_t{1} << (m - 1);
    Poly4 primal;
    if (s != 0)
        primal = Poly4::monomial(Monomial{0, 0, half, half}, Rat(pow2(static_cast<unsigned>(m - 3))) * s);
    const Poly4 dual =
        bachoc_transform(primal, std::uint32_t{1} << m, k, pow2(static_cast<unsigned>(m + 1)));
    return {primal, dual};
}

}  // namespace rmj
