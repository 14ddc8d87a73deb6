#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynrank/modp.hpp"

namespace dynrank {

/// Work performed by GoodBasis::set_entry, cumulative since construction.
struct UpdateStats {
    std::uint64_t updates = 0;
    /// Basis-column replacements x <- x - c*y.
    std::uint64_t replacements = 0;
    /// Scalar multiply-subtract operations spent on basis and image columns.
    std::uint64_t field_ops = 0;
};

/// Rank of an n x m matrix A over Z_p, maintained under single-entry
/// changes.
///
/// The state is a basis B = {b_0 .. b_{m-1}} of Z_p^m together with the
/// cached images A*b_v. The basis is kept "A-good": every column b_v whose
/// image is nonzero is *row-unique* somewhere, i.e. there is a row r where
/// (A b_v)_r != 0 while (A b_w)_r = 0 for every other column w. Under that
/// invariant the columns with zero image form a basis of ker(A), hence
/// rank(A) = m - #{v : A b_v = 0}.
///
/// Each set_entry touches a single row of every cached image and then
/// restores A-goodness with at most two elimination phases, each
/// replacing columns in place (column indices are stable).
class GoodBasis {
public:
    GoodBasis(std::size_t rows, std::size_t cols, Prime p);

    /// Builds a state from an explicit matrix (row-major, rows x cols) and
    /// basis (column-major, cols x cols). The image cache is computed.
    /// Throws std::invalid_argument on shape mismatch or unreduced residues.
    static GoodBasis from_matrix_and_basis(std::size_t rows, std::size_t cols, Prime p,
                                           std::span<const std::uint64_t> matrix,
                                           std::span<const std::uint64_t> basis);

    /// Like from_matrix_and_basis but takes the image cache (column-major,
    /// cols x rows) verbatim. Nothing is verified; is_a_good() reports
    /// whether the triple is consistent.
    static GoodBasis restore(std::size_t rows, std::size_t cols, Prime p,
                             std::span<const std::uint64_t> matrix,
                             std::span<const std::uint64_t> basis,
                             std::span<const std::uint64_t> image);

    /// A[row][col] <- value. value must be a residue in [0, p).
    /// Setting the current value again is a no-op.
    void set_entry(std::size_t row, std::size_t col, std::uint64_t value);

    std::size_t rank() const noexcept { return cols_ - kernel_count_; }

    /// Verifies every invariant from scratch: B invertible, cached images
    /// equal A*B, each non-kernel column row-unique, bookkeeping counts
    /// consistent.
    bool is_a_good() const;

    /// Smallest row at which column `col` is row-unique, if any.
    std::optional<std::size_t> principal_component(std::size_t col) const;

    std::vector<std::size_t> kernel_columns() const;
    bool in_kernel(std::size_t col) const { return column_nnz_[col] == 0; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Prime prime() const noexcept { return p_; }

    std::uint64_t entry(std::size_t row, std::size_t col) const { return matrix_[row * cols_ + col]; }
    /// Row-major copy of A.
    std::span<const std::uint64_t> matrix() const noexcept { return matrix_; }
    std::span<const std::uint64_t> basis_column(std::size_t col) const {
        return {basis_.data() + col * cols_, cols_};
    }
    std::span<const std::uint64_t> image_column(std::size_t col) const {
        return {image_.data() + col * rows_, rows_};
    }

    const UpdateStats& stats() const noexcept { return stats_; }

    friend bool operator==(const GoodBasis& a, const GoodBasis& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.matrix_ == b.matrix_ &&
               a.basis_ == b.basis_ && a.image_ == b.image_;
    }

private:
    std::uint64_t* basis_ptr(std::size_t col) { return basis_.data() + col * cols_; }
    std::uint64_t* image_ptr(std::size_t col) { return image_.data() + col * rows_; }
    std::uint64_t image_at(std::size_t col, std::size_t row) const { return image_[col * rows_ + row]; }

    void set_image(std::size_t col, std::size_t row, std::uint64_t value);
    /// b_target <- b_target - factor * b_pivot, together with its image.
    void subtract_multiple(std::size_t target, std::size_t pivot, std::uint64_t factor);
    /// Makes `pivot` unique at `row` by clearing that row from every other
    /// column in `targets`.
    void eliminate_row(std::size_t row, std::size_t pivot, std::span<const std::size_t> targets);
    std::optional<std::size_t> unique_column_at(std::size_t row) const;
    void rebuild_counts();

    std::size_t rows_;
    std::size_t cols_;
    Prime p_;
    std::vector<std::uint64_t> matrix_;  // rows x cols, row-major
    std::vector<std::uint64_t> basis_;   // cols columns of length cols
    std::vector<std::uint64_t> image_;   // cols columns of length rows
    std::vector<std::size_t> column_nnz_;
    std::vector<std::size_t> row_nnz_;
    std::size_t kernel_count_;
    UpdateStats stats_;

    // Scratch for set_entry, kept to avoid per-update allocation.
    std::vector<char> was_kernel_;
    std::vector<std::size_t> kernel_hits_;
    std::vector<std::size_t> others_;
    std::vector<std::size_t> targets_;
};

}  // namespace dynrank
