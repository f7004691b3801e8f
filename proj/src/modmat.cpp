#include "sharp/modmat.hpp"

#include <string>

namespace sharp {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

namespace {

void check_modulus(std::uint32_t p) {
    if (p == 2) throw InvalidPrime("prime must be odd; the GF(2) stage is separate");
    if (p >= (1u << 16)) throw InvalidPrime("prime must be below 65536");
    if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
}

}  // namespace

void validate_prime(std::uint32_t p, int degree) {
    check_modulus(p);
    if (degree != 0 && static_cast<std::uint32_t>(degree < 0 ? -degree : degree) % p == 0) {
        throw InvalidPrime("prime must not divide degree");
    }
}

BitColumns::BitColumns(int rows) : rows_(rows), words_(rows <= 0 ? 1 : (static_cast<std::size_t>(rows) + 63) / 64) {}

BitColumns BitColumns::from_columns(std::span<const ColumnVector> cols) {
    BitColumns out(cols.empty() ? 0 : static_cast<int>(cols.front().size()));
    for (const auto& c : cols) out.push(c);
    return out;
}

void BitColumns::push(const ColumnVector& col) {
    if (static_cast<int>(col.size()) != rows_) throw std::invalid_argument("column length mismatch");
    std::vector<std::uint64_t> w(words_, 0);
    for (std::size_t j = 0; j < col.size(); ++j) {
        if (mpz_odd_p(col[j].get_mpz_t())) w[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    push_bits(w);
}

void BitColumns::push_bits(std::span<const std::uint64_t> words) {
    if (words.size() != words_) throw std::invalid_argument("word count mismatch");
    data_.insert(data_.end(), words.begin(), words.end());
}

bool full_column_rank_mod2(const BitColumns& cols) {
    const std::size_t w = cols.words_per_column();
    if (cols.count() > static_cast<std::size_t>(cols.rows())) return false;

    // basis vectors and their pivot (word index, bit mask)
    std::vector<std::uint64_t> basis;
    std::vector<std::pair<std::size_t, std::uint64_t>> pivots;
    std::vector<std::uint64_t> cur(w);
    for (std::size_t c = 0; c < cols.count(); ++c) {
        auto src = cols.column(c);
        cur.assign(src.begin(), src.end());
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (cur[pivots[i].first] & pivots[i].second) {
                const std::uint64_t* v = basis.data() + i * w;
                for (std::size_t k = 0; k < w; ++k) cur[k] ^= v[k];
            }
        }
        std::size_t k = 0;
        while (k < w && cur[k] == 0) ++k;
        if (k == w) return false;
        pivots.emplace_back(k, cur[k] & (~cur[k] + 1));
        basis.insert(basis.end(), cur.begin(), cur.end());
    }
    return true;
}

std::uint64_t pack_mod2(const ColumnVector& col) {
    if (col.size() > 64) throw std::invalid_argument("single-word packing needs at most 64 rows");
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < col.size(); ++j) {
        if (mpz_odd_p(col[j].get_mpz_t())) w |= std::uint64_t{1} << j;
    }
    return w;
}

std::vector<std::uint32_t> residues(const ColumnVector& col, std::uint32_t prime) {
    std::vector<std::uint32_t> out(col.size());
    for (std::size_t j = 0; j < col.size(); ++j) {
        out[j] = static_cast<std::uint32_t>(mpz_fdiv_ui(col[j].get_mpz_t(), prime));
    }
    return out;
}

ModMatrix::ModMatrix(std::uint32_t prime, int rows) : prime_(prime), rows_(rows) {
    if (rows <= 0) throw std::invalid_argument("matrix needs at least one row");
}

ModMatrix ModMatrix::from_columns(std::span<const ColumnVector> cols, std::uint32_t prime) {
    if (cols.empty()) throw std::invalid_argument("no columns");
    ModMatrix m(prime, static_cast<int>(cols.front().size()));
    for (const auto& c : cols) m.push(c);
    return m;
}

void ModMatrix::push(const ColumnVector& col) {
    if (static_cast<int>(col.size()) != rows_) throw std::invalid_argument("column length mismatch");
    auto r = residues(col, prime_);
    data_.insert(data_.end(), r.begin(), r.end());
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and small
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

GfpBasis::GfpBasis(std::uint32_t prime, int rows)
    : p_(prime), rows_(static_cast<std::size_t>(rows)), scratch_(static_cast<std::size_t>(rows)) {
    check_modulus(prime);
}

bool GfpBasis::reduce(std::span<std::uint32_t> col) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::uint32_t f = col[pivots_[i]];
        if (f == 0) continue;
        const std::uint32_t* v = vecs_.data() + i * rows_;
        const std::uint32_t neg = p_ - f;
        for (std::size_t r = pivots_[i]; r < rows_; ++r) {
            if (v[r]) col[r] = static_cast<std::uint32_t>((col[r] + std::uint64_t{neg} * v[r]) % p_);
        }
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        if (col[r]) return true;
    }
    return false;
}

bool GfpBasis::push(std::span<const std::uint32_t> col) {
    scratch_.assign(col.begin(), col.end());
    if (!reduce(scratch_)) return false;
    std::size_t pivot = 0;
    while (scratch_[pivot] == 0) ++pivot;
    const std::uint64_t inv = inverse_mod(scratch_[pivot], p_);
    for (std::size_t r = pivot; r < rows_; ++r) scratch_[r] = static_cast<std::uint32_t>(scratch_[r] * inv % p_);
    vecs_.insert(vecs_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(pivot);
    return true;
}

void GfpBasis::truncate(std::size_t n) {
    pivots_.resize(n);
    vecs_.resize(n * rows_);
}

bool full_column_rank_modp(const ModMatrix& m) {
    check_modulus(m.prime());
    if (m.cols() > static_cast<std::size_t>(m.rows())) return false;
    GfpBasis basis(m.prime(), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!basis.push(m.column(c))) return false;
    }
    return true;
}

ModularVerdict modular_verdict(std::span<const ColumnVector> a_cols, const ColumnVector& t, std::uint32_t prime,
                               ModularStages stages) {
    std::vector<ColumnVector> augmented(a_cols.begin(), a_cols.end());
    augmented.push_back(t);
    if (stages.mod2 && full_column_rank_mod2(BitColumns::from_columns(augmented))) {
        return ModularVerdict::RejectedMod2;
    }
    if (stages.modp && full_column_rank_modp(ModMatrix::from_columns(augmented, prime))) {
        return ModularVerdict::RejectedModP;
    }
    return ModularVerdict::Undecided;
}

bool reject_by_modular_stages(std::span<const ColumnVector> a_cols, const ColumnVector& t, std::uint32_t prime,
                              ModularStages stages) {
    return modular_verdict(a_cols, t, prime, stages) != ModularVerdict::Undecided;
}

}  // namespace sharp
