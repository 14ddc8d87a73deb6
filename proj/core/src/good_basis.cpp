#include "dynrank/good_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynrank {

namespace {

void require_residues(std::span<const std::uint64_t> values, std::uint64_t p, const char* what) {
    for (std::uint64_t v : values) {
        if (v >= p) throw std::invalid_argument(std::string(what) + ": entry is not reduced mod p");
    }
}

// Rank of a column-major square matrix over Z_p; destroys its argument.
std::size_t square_rank(std::vector<std::uint64_t> cols_major, std::size_t dim, std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < dim; ++c) {
        std::size_t pivot = dim;
        for (std::size_t r = rank; r < dim; ++r) {
            if (cols_major[c * dim + r] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == dim) continue;
        for (std::size_t cc = 0; cc < dim; ++cc) {
            std::swap(cols_major[cc * dim + pivot], cols_major[cc * dim + rank]);
        }
        const std::uint64_t inv = mod_inverse(cols_major[c * dim + rank], p);
        for (std::size_t r = rank + 1; r < dim; ++r) {
            const std::uint64_t f = mul_mod(cols_major[c * dim + r], inv, p);
            if (f == 0) continue;
            for (std::size_t cc = c; cc < dim; ++cc) {
                cols_major[cc * dim + r] =
                    sub_mod(cols_major[cc * dim + r], mul_mod(f, cols_major[cc * dim + rank], p), p);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

GoodBasis::GoodBasis(std::size_t rows, std::size_t cols, Prime p)
    : rows_(rows),
      cols_(cols),
      p_(p),
      matrix_(rows * cols, 0),
      basis_(cols * cols, 0),
      image_(cols * rows, 0),
      column_nnz_(cols, 0),
      row_nnz_(rows, 0),
      kernel_count_(cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("GoodBasis: dimensions must be >= 1");
    for (std::size_t v = 0; v < cols; ++v) basis_[v * cols + v] = 1;
}

GoodBasis GoodBasis::from_matrix_and_basis(std::size_t rows, std::size_t cols, Prime p,
                                           std::span<const std::uint64_t> matrix,
                                           std::span<const std::uint64_t> basis) {
    std::vector<std::uint64_t> image(cols * rows, 0);
    if (matrix.size() == rows * cols && basis.size() == cols * cols) {
        for (std::size_t v = 0; v < cols; ++v) {
            for (std::size_t r = 0; r < rows; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t c = 0; c < cols; ++c) {
                    acc = add_mod(acc, mul_mod(matrix[r * cols + c] % p, basis[v * cols + c] % p, p), p);
                }
                image[v * rows + r] = acc;
            }
        }
    }
    return restore(rows, cols, p, matrix, basis, image);
}

GoodBasis GoodBasis::restore(std::size_t rows, std::size_t cols, Prime p,
                             std::span<const std::uint64_t> matrix,
                             std::span<const std::uint64_t> basis,
                             std::span<const std::uint64_t> image) {
    if (matrix.size() != rows * cols || basis.size() != cols * cols || image.size() != cols * rows) {
        throw std::invalid_argument("GoodBasis::restore: shape mismatch");
    }
    require_residues(matrix, p, "matrix");
    require_residues(basis, p, "basis");
    require_residues(image, p, "image");
    GoodBasis state(rows, cols, p);
    state.matrix_.assign(matrix.begin(), matrix.end());
    state.basis_.assign(basis.begin(), basis.end());
    state.image_.assign(image.begin(), image.end());
    state.rebuild_counts();
    return state;
}

void GoodBasis::rebuild_counts() {
    std::fill(column_nnz_.begin(), column_nnz_.end(), 0);
    std::fill(row_nnz_.begin(), row_nnz_.end(), 0);
    kernel_count_ = 0;
    for (std::size_t v = 0; v < cols_; ++v) {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (image_at(v, r) != 0) {
                ++column_nnz_[v];
                ++row_nnz_[r];
            }
        }
        if (column_nnz_[v] == 0) ++kernel_count_;
    }
}

void GoodBasis::set_image(std::size_t col, std::size_t row, std::uint64_t value) {
    std::uint64_t& slot = image_[col * rows_ + row];
    const bool was = slot != 0;
    const bool now = value != 0;
    slot = value;
    if (was == now) return;
    if (now) {
        ++row_nnz_[row];
        if (column_nnz_[col]++ == 0) --kernel_count_;
    } else {
        --row_nnz_[row];
        if (--column_nnz_[col] == 0) ++kernel_count_;
    }
}

void GoodBasis::subtract_multiple(std::size_t target, std::size_t pivot, std::uint64_t factor) {
    const std::uint64_t p = p_;
    std::uint64_t* dst = basis_ptr(target);
    const std::uint64_t* src = basis_ptr(pivot);
    for (std::size_t r = 0; r < cols_; ++r) {
        if (src[r] != 0) dst[r] = sub_mod(dst[r], mul_mod(factor, src[r], p), p);
    }
    const std::uint64_t* src_img = image_ptr(pivot);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (src_img[r] != 0) {
            set_image(target, r, sub_mod(image_at(target, r), mul_mod(factor, src_img[r], p), p));
        }
    }
    ++stats_.replacements;
    stats_.field_ops += cols_ + rows_;
}

void GoodBasis::eliminate_row(std::size_t row, std::size_t pivot, std::span<const std::size_t> targets) {
    const std::uint64_t inv = mod_inverse(image_at(pivot, row), p_);
    for (std::size_t x : targets) {
        subtract_multiple(x, pivot, mul_mod(image_at(x, row), inv, p_));
    }
}

std::optional<std::size_t> GoodBasis::unique_column_at(std::size_t row) const {
    if (row_nnz_[row] != 1) return std::nullopt;
    for (std::size_t v = 0; v < cols_; ++v) {
        if (image_at(v, row) != 0) return v;
    }
    return std::nullopt;
}

std::optional<std::size_t> GoodBasis::principal_component(std::size_t col) const {
    if (col >= cols_) throw std::out_of_range("GoodBasis::principal_component: column out of range");
    for (std::size_t r = 0; r < rows_; ++r) {
        if (image_at(col, r) != 0 && row_nnz_[r] == 1) return r;
    }
    return std::nullopt;
}

std::vector<std::size_t> GoodBasis::kernel_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < cols_; ++v) {
        if (column_nnz_[v] == 0) out.push_back(v);
    }
    return out;
}

void GoodBasis::set_entry(std::size_t row, std::size_t col, std::uint64_t value) {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("GoodBasis::set_entry: index out of range");
    if (value >= p_) throw std::invalid_argument("GoodBasis::set_entry: value is not reduced mod p");
    const std::size_t i = row;
    const std::uint64_t old = matrix_[i * cols_ + col];
    if (old == value) return;
    ++stats_.updates;

    // The column u with pc(u) = i, with respect to the old matrix.
    std::optional<std::size_t> u;
    if (auto c = unique_column_at(i); c && principal_component(*c) == i) u = c;

    was_kernel_.resize(cols_);
    for (std::size_t v = 0; v < cols_; ++v) was_kernel_[v] = column_nnz_[v] == 0;

    // Only coordinate i of each image moves: (A'v)_i = (Av)_i + delta * v_col.
    matrix_[i * cols_ + col] = value;
    const std::uint64_t delta = sub_mod(value, old, p_);
    for (std::size_t v = 0; v < cols_; ++v) {
        const std::uint64_t coeff = basis_[v * cols_ + col];
        if (coeff != 0) set_image(v, i, add_mod(image_at(v, i), mul_mod(delta, coeff, p_), p_));
    }
    stats_.field_ops += cols_;

    const bool u_keeps_row = u && image_at(*u, i) != 0;  // U = {u}
    kernel_hits_.clear();                                 // V
    others_.clear();                                      // W
    for (std::size_t v = 0; v < cols_; ++v) {
        if (image_at(v, i) == 0) continue;
        if (was_kernel_[v]) {
            kernel_hits_.push_back(v);
        } else if (!u || v != *u) {
            others_.push_back(v);
        }
    }

    std::optional<std::size_t> u_hat;
    if (u_keeps_row || !kernel_hits_.empty()) {
        const std::size_t v_hat = kernel_hits_.empty() ? *u : kernel_hits_.front();
        targets_.assign(others_.begin(), others_.end());
        if (!kernel_hits_.empty()) {
            targets_.insert(targets_.end(), kernel_hits_.begin() + 1, kernel_hits_.end());
            if (u_keeps_row) {
                targets_.push_back(*u);
                u_hat = u;
            }
        }
        eliminate_row(i, v_hat, targets_);
    }
    if (u && !u_keeps_row) u_hat = u;

    if (u_hat && column_nnz_[*u_hat] != 0) {
        std::size_t k = 0;
        while (image_at(*u_hat, k) == 0) ++k;
        targets_.clear();
        for (std::size_t v = 0; v < cols_; ++v) {
            if (v != *u_hat && image_at(v, k) != 0) targets_.push_back(v);
        }
        eliminate_row(k, *u_hat, targets_);
    }
}

bool GoodBasis::is_a_good() const {
    const std::uint64_t p = p_;
    if (matrix_.size() != rows_ * cols_ || basis_.size() != cols_ * cols_ || image_.size() != cols_ * rows_) {
        return false;
    }
    if (square_rank(basis_, cols_, p) != cols_) return false;

    std::vector<std::uint64_t> fresh(cols_ * rows_, 0);
    for (std::size_t v = 0; v < cols_; ++v) {
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                acc = add_mod(acc, mul_mod(matrix_[r * cols_ + c], basis_[v * cols_ + c], p), p);
            }
            fresh[v * rows_ + r] = acc;
        }
    }
    if (fresh != image_) return false;

    for (std::size_t v = 0; v < cols_; ++v) {
        bool nonzero = false;
        bool unique_somewhere = false;
        for (std::size_t r = 0; r < rows_ && !unique_somewhere; ++r) {
            if (fresh[v * rows_ + r] == 0) continue;
            nonzero = true;
            bool alone = true;
            for (std::size_t w = 0; w < cols_ && alone; ++w) {
                if (w != v && fresh[w * rows_ + r] != 0) alone = false;
            }
            unique_somewhere = alone;
        }
        if (nonzero && !unique_somewhere) return false;
    }

    GoodBasis recount = *this;
    recount.rebuild_counts();
    return recount.column_nnz_ == column_nnz_ && recount.row_nnz_ == row_nnz_ &&
           recount.kernel_count_ == kernel_count_;
}

}  // namespace dynrank
