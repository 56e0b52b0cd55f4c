#ifndef PRODTOP_INTEGER_MATRIX_HPP
#define PRODTOP_INTEGER_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace prodtop {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int gcd_nonneg(Int a, Int b);

/// Dense integer matrix, row-major.  All arithmetic is exact; helpers throw
/// std::overflow_error if an entry would leave the 64-bit range.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    IntegerMatrix transposed() const;

    bool operator==(const IntegerMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Exact determinant (Bareiss fraction-free elimination); square input only.
Int determinant(const IntegerMatrix& a);

/// U * source * V == D with U, V unimodular and D diagonal, entries >= 0,
/// each dividing the next while both are nonzero.
struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    IntegerMatrix source;

    std::vector<Int> diagonal() const;          // all min(rows,cols) entries
    std::vector<Int> nonzero_diagonal() const;  // d1 | d2 | ... , di > 0
};

SmithForm smith_normal_form(const IntegerMatrix& a);

std::size_t integer_rank(const IntegerMatrix& a);

/// Inverse of a matrix with determinant +-1; throws otherwise.
IntegerMatrix invert_unimodular(const IntegerMatrix& u);

/// Does v lie in the column span of `relations` over the integers?
bool lattice_contains(const IntegerMatrix& relations, const std::vector<Int>& v);

} // namespace prodtop

#endif
