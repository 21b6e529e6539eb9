#include "rmj/gf2code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace rmj {

namespace {

// Gray code of i; successive values differ in bit countr_zero(i+1).
inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

std::vector<BitVec> rref(std::uint32_t n, std::vector<BitVec> rows,
                         std::vector<std::uint32_t>* pivots_out) {
    std::vector<BitVec> basis;
    std::vector<std::uint32_t> pivots;
    for (auto& row : rows) {
        if (row.size() != n) throw input_error("generator row length mismatch");
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (row.get(pivots[i])) row ^= basis[i];
        if (row.is_zero()) continue;
        const std::uint32_t p = row.first_set();
        // keep rows sorted by pivot and fully reduced
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        basis.insert(basis.begin() + pos, row);
        pivots.insert(pivots.begin() + pos, p);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (i != pos && basis[i].get(p)) basis[i] ^= basis[pos];
    }
    if (pivots_out) *pivots_out = pivots;
    return basis;
}

void check_enum_capacity(const BinaryCode& c) {
    if (c.dimension() > kMaxEnumDimension)
        throw capacity_error("codeword enumeration needs k <= " +
                             std::to_string(kMaxEnumDimension) + " (k = " +
                             std::to_string(c.dimension()) +
                             "); use the MacWilliams-type transform instead");
}

// Single-word meet-in-the-middle enumeration: the span of the low `b`
// generators is tabulated once, then each prefix of the remaining generators
// is pushed through the joint-histogram kernel over the whole table.
std::vector<std::uint64_t> joint_hist_single_word(const BinaryCode& c, std::uint64_t tmask,
                                                  unsigned threads) {
    const auto& gens = c.generators();
    const unsigned k = c.dimension();
    const std::uint32_t n = c.length();
    const std::size_t cols = static_cast<std::size_t>(std::popcount(tmask)) + 1;
    std::vector<std::uint64_t> hist((n + 1) * cols, 0);

    const unsigned b = std::min(k, 16u);
    std::vector<std::uint64_t> table(std::size_t{1} << b);
    std::uint64_t cur = 0;
    table[0] = 0;
    for (std::uint64_t i = 1; i < table.size(); ++i) {
        cur ^= gens[static_cast<unsigned>(std::countr_zero(i))].word(0);
        table[i] = cur;
    }

    const unsigned rest = k - b;
    const std::uint64_t outer = std::uint64_t{1} << rest;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& h) {
        const auto& ker = kernels::active();
        std::uint64_t prefix = 0;
        const std::uint64_t g = gray(lo);
        for (unsigned j = 0; j < rest; ++j)
            if ((g >> j) & 1) prefix ^= gens[b + j].word(0);
        for (std::uint64_t i = lo; i < hi; ++i) {
            ker.joint_hist(table.data(), table.size(), prefix, tmask, cols, h.data());
            if (i + 1 < hi)
                prefix ^= gens[b + static_cast<unsigned>(std::countr_zero(i + 1))].word(0);
        }
    };

    unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
    if (nthreads <= 1 || outer < 8) {
        run_range(0, outer, hist);
        return hist;
    }
    nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, outer));
    std::vector<std::vector<std::uint64_t>> parts(nthreads,
                                                  std::vector<std::uint64_t>(hist.size(), 0));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        const std::uint64_t lo = outer * t / nthreads;
        const std::uint64_t hi = outer * (t + 1) / nthreads;
        pool.emplace_back(run_range, lo, hi, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
    return hist;
}

}  // namespace

BinaryCode BinaryCode::from_rows(std::uint32_t n, const std::vector<BitVec>& rows) {
    BinaryCode c;
    c.n_ = n;
    c.gens_ = rref(n, rows, &c.pivots_);
    return c;
}

BinaryCode make_code(std::uint32_t n, const std::vector<BitVec>& rows) {
    return BinaryCode::from_rows(n, rows);
}

BinaryCode BinaryCode::dual() const {
    // Nullspace basis from the RREF: one generator per free column.
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<BitVec> rows;
    rows.reserve(n_ - dimension());
    for (std::uint32_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        BitVec h(n_);
        h.set(f);
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].get(f)) h.set(pivots_[i]);
        rows.push_back(std::move(h));
    }
    return from_rows(n_, rows);
}

bool BinaryCode::contains(const BitVec& word) const {
    if (word.size() != n_) return false;
    BitVec r = word;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (r.get(pivots_[i])) r ^= gens_[i];
    return r.is_zero();
}

BinaryCode reed_muller_1(int m) {
    if (m < 1) throw input_error("reed_muller_1 requires m >= 1");
    if (m > 20) throw capacity_error("reed_muller_1 limited to m <= 20");
    const std::uint32_t n = std::uint32_t{1} << m;
    std::vector<BitVec> rows;
    for (int i = 0; i < m; ++i) {
        BitVec r(n);
        for (std::uint32_t j = 0; j < n; ++j)
            if ((j >> i) & 1) r.set(j);
        rows.push_back(std::move(r));
    }
    BitVec ones(n);
    for (std::uint32_t j = 0; j < n; ++j) ones.set(j);
    rows.push_back(std::move(ones));
    BinaryCode c = BinaryCode::from_rows(n, rows);
    if (c.dimension() != static_cast<std::uint32_t>(m + 1))
        throw verification_error("RM(1,m) generators are not independent");
    return c;
}

BinaryCode extended_hamming(int m) {
    if (m < 2) throw input_error("extended_hamming requires m >= 2");
    return reed_muller_1(m).dual();
}

void for_each_codeword(const BinaryCode& c, const std::function<void(const BitVec&)>& fn) {
    check_enum_capacity(c);
    const auto& gens = c.generators();
    const std::uint64_t total = std::uint64_t{1} << c.dimension();
    BitVec cur(c.length());
    fn(cur);
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= gens[static_cast<unsigned>(std::countr_zero(i))];
        fn(cur);
    }
}

std::vector<std::uint64_t> joint_weight_histogram(const BinaryCode& c, const BitVec& tmask,
                                                  unsigned threads) {
    check_enum_capacity(c);
    if (tmask.size() != c.length()) throw input_error("mask length mismatch");
    const std::uint32_t n = c.length();
    const std::size_t cols = tmask.popcount() + 1;

    if (n <= 64 && c.dimension() >= 1)
        return joint_hist_single_word(c, tmask.word(0), threads);

    std::vector<std::uint64_t> hist((n + 1) * cols, 0);
    for_each_codeword(c, [&](const BitVec& word) {
        const std::uint32_t wt = word.popcount();
        const std::uint32_t wi = word.and_popcount(tmask);
        ++hist[wt * cols + wi];
    });
    return hist;
}

Poly4 weight_enumerator(const BinaryCode& c, unsigned threads) {
    const auto hist = joint_weight_histogram(c, BitVec(c.length()), threads);
    const std::uint32_t n = c.length();
    Poly4 p;
    for (std::uint32_t wt = 0; wt <= n; ++wt)
        if (hist[wt])
            p = p + Poly4::monomial(Monomial{0, 0, n - wt, wt}, Rat(Int(hist[wt])));
    return p;
}

BlockSet shell(const BinaryCode& c, std::uint32_t ell) {
    if (ell > c.length()) throw input_error("shell weight exceeds code length");
    BlockSet b;
    b.n = c.length();
    for_each_codeword(c, [&](const BitVec& word) {
        if (word.popcount() == ell && ell > 0) b.blocks.push_back(word.support());
    });
    if (ell == 0) b.blocks.push_back({});  // support of the zero word
    std::sort(b.blocks.begin(), b.blocks.end());
    return b;
}

std::string generator_matrix_to_text(const BinaryCode& c) {
    std::ostringstream out;
    out << c.length() << " " << c.dimension() << "\n";
    for (const auto& g : c.generators()) out << g.to_string() << "\n";
    return out.str();
}

BinaryCode generator_matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::uint32_t n = 0, k = 0;
    if (!(in >> n >> k)) throw input_error("matrix file: expected 'n k' header");
    std::vector<BitVec> rows;
    std::string line;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (!(in >> line) || line.size() != n)
            throw input_error("matrix file: expected " + std::to_string(k) + " rows of length " +
                              std::to_string(n));
        rows.push_back(BitVec::from_string(line));
    }
    return BinaryCode::from_rows(n, rows);
}

std::string blockset_to_text(const BlockSet& b) {
    std::ostringstream out;
    for (const auto& block : b.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
        out << "\n";
    }
    return out.str();
}

BlockSet blockset_from_text(const std::string& text, std::uint32_t n) {
    BlockSet b;
    b.n = n;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::uint32_t> block;
        std::uint32_t idx;
        while (ls >> idx) {
            if (idx >= n) throw input_error("block index out of range");
            block.push_back(idx);
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        b.blocks.push_back(std::move(block));
    }
    std::sort(b.blocks.begin(), b.blocks.end());
    return b;
}

}  // namespace rmj
