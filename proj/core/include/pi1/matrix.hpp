#pragma once

#include "pi1/ints.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace pi1 {

using IntVec = std::vector<Int>;

// Dense matrix of arbitrary-precision integers. Value type, row-major.
// Vectors are columns; a homomorphism Z^m -> Z^n is an n x m matrix acting by
// left multiplication.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    // n x 1 column from a vector
    static IntMatrix column(const IntVec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntVec apply(const IntVec& v) const;  // matrix * column vector

    bool is_zero() const;
    bool is_identity() const;

    IntVec col(int j) const;
    IntVec row(int i) const;
    void set_col(int j, const IntVec& v);

    // Concatenation: [A | B] and [A ; B].
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
    // Block diagonal of m copies of a.
    static IntMatrix block_diag_power(const IntMatrix& a, int m);
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    IntMatrix submatrix(int r0, int c0, int nrows, int ncols) const;
    IntMatrix cols_slice(int c0, int ncols) const { return submatrix(0, c0, rows_, ncols); }

    // Elementary operations (used by the normal-form routines).
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void add_row_multiple(int dst, int src, const Int& c);  // row dst += c * row src
    void add_col_multiple(int dst, int src, const Int& c);

    Int determinant() const;  // fraction-free Gaussian elimination

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
IntVec concat(const IntVec& a, const IntVec& b);

}  // namespace pi1
