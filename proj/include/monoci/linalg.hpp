#ifndef MONOCI_LINALG_HPP
#define MONOCI_LINALG_HPP

#include <cstdint>
#include <vector>

#include "monoci/ring.hpp"

namespace monoci {

/// Integer matrix in triplet form. Duplicate (row, col) entries are summed.
class SparseMatrix {
public:
    struct Entry {
        std::uint32_t row;
        std::uint32_t col;
        std::int64_t value;
    };

    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    void add(std::size_t row, std::size_t col, std::int64_t value);

    /// this * other, exactly over the integers.
    SparseMatrix multiply(const SparseMatrix& other) const;
    bool is_zero() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
};

/// Exact rank over the given field: fraction-free elimination for the
/// rationals, modular elimination for GF(q). Pivots follow a Markowitz-style
/// minimal-fill rule.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

}  // namespace monoci

#endif
