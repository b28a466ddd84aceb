#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gpi {

// Dense exact matrices. Rows are plain vectors of field elements; all
// elimination is Gauss-Jordan with normalized pivots, so the reduced form
// is canonical for a given row space.
template <class K>
struct Matrix {
    using Elem = typename K::Elem;

    std::size_t cols = 0;
    std::vector<std::vector<Elem>> rows;

    Matrix() = default;
    explicit Matrix(std::size_t ncols) : cols(ncols) {}
    Matrix(std::size_t nrows, std::size_t ncols, const K& field) : cols(ncols) {
        rows.assign(nrows, std::vector<Elem>(ncols, field.zero()));
    }

    std::size_t nrows() const { return rows.size(); }
};

namespace detail {
template <class K>
void scale_row(const K& f, std::vector<typename K::Elem>& row, const typename K::Elem& c) {
    for (auto& x : row) x = f.mul(x, c);
}

// row -= c * other
template <class K>
void axpy(const K& f, std::vector<typename K::Elem>& row,
          const typename K::Elem& c, const std::vector<typename K::Elem>& other) {
    for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = f.sub(row[j], f.mul(c, other[j]));
}
}  // namespace detail

// In-place reduced row echelon form; returns the pivot columns in order.
template <class K>
std::vector<std::size_t> rref_in_place(const K& field, Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.nrows(); ++c) {
        std::size_t sel = r;
        while (sel < m.nrows() && field.is_zero(m.rows[sel][c])) ++sel;
        if (sel == m.nrows()) continue;
        std::swap(m.rows[r], m.rows[sel]);
        detail::scale_row(field, m.rows[r], field.inv(m.rows[r][c]));
        for (std::size_t i = 0; i < m.nrows(); ++i) {
            if (i != r && !field.is_zero(m.rows[i][c]))
                detail::axpy(field, m.rows[i], m.rows[i][c], m.rows[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows.resize(r);  // drop zero rows; rref is canonical
    return pivots;
}

template <class K>
struct LinearSolveResult {
    std::size_t rank = 0;
    std::vector<std::vector<typename K::Elem>> kernel_basis;
    Matrix<K> rref;
};

// Rank, kernel basis and canonical rref of M. rank + |kernel| = cols.
template <class K>
LinearSolveResult<K> solve_linear(const K& field, Matrix<K> m) {
    LinearSolveResult<K> out;
    auto pivots = rref_in_place(field, m);
    out.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename K::Elem> v(m.cols, field.zero());
        v[c] = field.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = field.neg(m.rows[i][c]);
        out.kernel_basis.push_back(std::move(v));
    }
    out.rref = std::move(m);
    return out;
}

// Incrementally maintained row space in reduced echelon form. This is the
// workhorse behind every span/intersection computation: rows are kept fully
// reduced with unit pivots, so equal subspaces have identical row lists.
template <class K>
class RowSpan {
public:
    using Elem = typename K::Elem;
    using Row = std::vector<Elem>;

    RowSpan(const K& field, std::size_t ncols) : field_(field), cols_(ncols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduces v against the current rows (in place). Returns the column of
    // the leading nonzero entry, or cols() if v reduced to zero.
    std::size_t reduce(Row& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem& c = v[pivots_[i]];
            if (!field_.is_zero(c)) detail::axpy(field_, v, c, rows_[i]);
        }
        for (std::size_t j = 0; j < cols_; ++j)
            if (!field_.is_zero(v[j])) return j;
        return cols_;
    }

    bool contains(Row v) const { return reduce(v) == cols_; }

    // Inserts v if independent of the span; returns true when the dimension grew.
    bool add(Row v) {
        std::size_t lead = reduce(v);
        if (lead == cols_) return false;
        detail::scale_row(field_, v, field_.inv(v[lead]));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem& c = rows_[i][lead];
            if (!field_.is_zero(c)) detail::axpy(field_, rows_[i], c, v);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        pivots_.insert(pivots_.begin() + pos, lead);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    bool same_span(const RowSpan& other) const {
        return pivots_ == other.pivots_ && equal_rows(other);
    }

private:
    bool equal_rows(const RowSpan& other) const {
        if (rows_.size() != other.rows_.size()) return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(field_.sub(rows_[i][j], other.rows_[i][j]))) return false;
        return true;
    }

    K field_;
    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace gpi
