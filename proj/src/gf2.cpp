#include "gradedroots/gf2.hpp"

#include <cassert>

namespace gradedroots {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<size_t>(rows) * words_, 0) {}

bool Gf2Matrix::get(int r, int c) const {
    return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool value) {
    uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
    uint64_t bit = uint64_t(1) << (c % 64);
    if (value)
        w |= bit;
    else
        w &= ~bit;
}

void Gf2Matrix::xor_row(int dst, int src) {
    for (int w = 0; w < words_; ++w)
        data_[static_cast<size_t>(dst) * words_ + w] ^= data_[static_cast<size_t>(src) * words_ + w];
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
    assert(cols_ == other.rows_);
    Gf2Matrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (get(i, k))
                for (int w = 0; w < other.words_; ++w)
                    out.data_[static_cast<size_t>(i) * out.words_ + w] ^=
                        other.data_[static_cast<size_t>(k) * other.words_ + w];
    return out;
}

std::vector<bool> Gf2Matrix::apply(const std::vector<bool>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<bool> out(rows_, false);
    for (int i = 0; i < rows_; ++i) {
        bool acc = false;
        for (int c = 0; c < cols_; ++c)
            if (v[c] && get(i, c)) acc = !acc;
        out[i] = acc;
    }
    return out;
}

namespace {

struct Echelon {
    std::vector<std::vector<uint64_t>> rows;  // reduced rows (possibly augmented)
    std::vector<int> pivot_col;               // pivot column per reduced row
};

Echelon reduce(std::vector<std::vector<uint64_t>> rows, int cols) {
    Echelon e;
    int words = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    auto bit = [&](const std::vector<uint64_t>& r, int c) { return (r[c / 64] >> (c % 64)) & 1u; };
    size_t next = 0;
    for (int c = 0; c < cols && next < rows.size(); ++c) {
        size_t piv = next;
        while (piv < rows.size() && !bit(rows[piv], c)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != next && bit(rows[i], c))
                for (int w = 0; w < words; ++w) rows[i][w] ^= rows[next][w];
        }
        e.pivot_col.push_back(c);
        ++next;
    }
    rows.resize(next);
    e.rows = std::move(rows);
    return e;
}

}  // namespace

int Gf2Matrix::rank() const {
    std::vector<std::vector<uint64_t>> rows(rows_);
    for (int i = 0; i < rows_; ++i)
        rows[i].assign(data_.begin() + static_cast<size_t>(i) * words_,
                       data_.begin() + static_cast<size_t>(i + 1) * words_);
    return static_cast<int>(reduce(std::move(rows), cols_).pivot_col.size());
}

std::vector<std::vector<bool>> Gf2Matrix::null_space() const {
    std::vector<std::vector<uint64_t>> rows(rows_);
    for (int i = 0; i < rows_; ++i)
        rows[i].assign(data_.begin() + static_cast<size_t>(i) * words_,
                       data_.begin() + static_cast<size_t>(i + 1) * words_);
    Echelon e = reduce(std::move(rows), cols_);

    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_col) is_pivot[c] = true;

    auto bit = [](const std::vector<uint64_t>& r, int c) { return ((r[c / 64] >> (c % 64)) & 1u) != 0; };

    std::vector<std::vector<bool>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<bool> v(cols_, false);
        v[free] = true;
        for (size_t r = 0; r < e.rows.size(); ++r)
            if (bit(e.rows[r], free)) v[e.pivot_col[r]] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<bool>> Gf2Matrix::solve(const std::vector<bool>& b) const {
    assert(static_cast<int>(b.size()) == rows_);
    // augment with b as an extra column
    int aug_cols = cols_ + 1;
    int words = (aug_cols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(rows_, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < rows_; ++i) {
        for (int c = 0; c < cols_; ++c)
            if (get(i, c)) rows[i][c / 64] |= uint64_t(1) << (c % 64);
        if (b[i]) rows[i][cols_ / 64] |= uint64_t(1) << (cols_ % 64);
    }
    Echelon e = reduce(std::move(rows), cols_);  // do not pivot on the augmented column

    auto bit = [](const std::vector<uint64_t>& r, int c) { return ((r[c / 64] >> (c % 64)) & 1u) != 0; };

    // inconsistent iff some fully-reduced leftover row is 0 = 1; rows below the
    // pivot rows were all eliminated, so re-check residual rows explicitly.
    std::vector<bool> x(cols_, false);
    for (size_t r = 0; r < e.rows.size(); ++r) x[e.pivot_col[r]] = bit(e.rows[r], cols_);
    // verify
    std::vector<bool> ax = apply(x);
    if (ax != b) return std::nullopt;
    return x;
}

}  // namespace gradedroots
