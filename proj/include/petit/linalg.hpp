#pragma once

#include <span>
#include <vector>

#include "petit/fields.hpp"

namespace petit {

/// Dense matrix over a FiniteField; entries are element codes.
class Mat {
   public:
    Mat(std::shared_ptr<const FiniteField> field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Mat identity(std::shared_ptr<const FiniteField> field, std::size_t n) {
        Mat m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_->one();
        return m;
    }

    const FiniteField& field() const { return *field_; }
    std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Mat& other) const {
        return field_.get() == other.field_.get() && rows_ == other.rows_ && cols_ == other.cols_ &&
               data_ == other.data_;
    }

    Mat operator+(const Mat& other) const {
        Mat out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], other.data_[i]);
        return out;
    }

    Mat scaled(std::uint32_t c) const {
        Mat out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->mul(data_[i], c);
        return out;
    }

    Mat operator*(const Mat& other) const {
        Mat out(field_, rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint32_t a = at(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out.at(i, j) = field_->add(out.at(i, j), field_->mul(a, other.at(k, j)));
            }
        return out;
    }

    std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const {
        std::vector<std::uint32_t> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = field_->add(out[i], field_->mul(at(i, j), v[j]));
        return out;
    }

    bool is_zero() const {
        for (auto v : data_)
            if (v) return false;
        return true;
    }

    std::size_t rank() const {
        Mat tmp = *this;
        return tmp.eliminate();
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Reduced row echelon form.
    Mat rref() const {
        Mat tmp = *this;
        tmp.eliminate();
        return tmp;
    }

   private:
    /// In-place Gauss-Jordan; returns the rank.
    std::size_t eliminate() {
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
            std::uint32_t inv = field_->inv(at(row, col));
            for (std::size_t j = 0; j < cols_; ++j) at(row, j) = field_->mul(at(row, j), inv);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                std::uint32_t f = at(r, col);
                if (!f) continue;
                for (std::size_t j = 0; j < cols_; ++j) at(r, j) = field_->sub(at(r, j), field_->mul(f, at(row, j)));
            }
            ++row;
        }
        return row;
    }

    std::shared_ptr<const FiniteField> field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// Incrementally row-reduces constraint rows; at most `cols` survive.
/// Used to build nullspaces of large stacked systems without storing them.
class RowReducer {
   public:
    RowReducer(std::shared_ptr<const FiniteField> field, std::size_t cols)
        : field_(std::move(field)), cols_(cols) {}

    void add_row(std::vector<std::uint32_t> row) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t f = row[pivots_[i]];
            if (!f) continue;
            for (std::size_t j = 0; j < cols_; ++j) row[j] = field_->sub(row[j], field_->mul(f, rows_[i][j]));
        }
        std::size_t pivot = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (row[j]) {
                pivot = j;
                break;
            }
        if (pivot == cols_) return;
        std::uint32_t inv = field_->inv(row[pivot]);
        for (std::size_t j = 0; j < cols_; ++j) row[j] = field_->mul(row[j], inv);
        // keep earlier rows reduced against the new pivot
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t f = rows_[i][pivot];
            if (!f) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                rows_[i][j] = field_->sub(rows_[i][j], field_->mul(f, row[j]));
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(pivot);
        // maintain pivot order
        for (std::size_t i = rows_.size(); i-- > 1;) {
            if (pivots_[i - 1] > pivots_[i]) {
                std::swap(pivots_[i - 1], pivots_[i]);
                std::swap(rows_[i - 1], rows_[i]);
            } else {
                break;
            }
        }
    }

    std::size_t rank() const { return rows_.size(); }
    bool full_rank() const { return rows_.size() == cols_; }

    /// Reduced echelon rows spanning the row space, pivots in increasing order.
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

    /// Basis of {x : Rx = 0} in reduced echelon form, one vector per row.
    std::vector<std::vector<std::uint32_t>> nullspace() const {
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<std::vector<std::uint32_t>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::uint32_t> v(cols_, 0);
            v[free] = field_->one();
            for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = field_->neg(rows_[i][free]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

   private:
    std::shared_ptr<const FiniteField> field_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of the span of `vectors`: rows of the RREF.
inline std::vector<std::vector<std::uint32_t>> canonical_span_basis(
    const std::shared_ptr<const FiniteField>& field, const std::vector<std::vector<std::uint32_t>>& vectors,
    std::size_t cols) {
    RowReducer red(field, cols);
    for (const auto& v : vectors) red.add_row(v);
    return red.rows();
}

}  // namespace petit
