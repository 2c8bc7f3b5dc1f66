#include "pi1/matrix.hpp"

#include <sstream>
#include <utility>

namespace pi1 {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.resize(static_cast<size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& r : init) {
        if (static_cast<int>(r.size()) != cols_) throw InputError("ragged matrix initializer");
        int j = 0;
        for (long long v : r) (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v) {
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("matrix apply shape mismatch");
    IntVec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
        out[i] = std::move(s);
    }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntVec IntMatrix::col(int j) const {
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntVec IntMatrix::row(int i) const {
    IntVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void IntMatrix::set_col(int j, const IntVec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw InputError("hcat row mismatch");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw InputError("vcat column mismatch");
    IntMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) out(a.rows_ + i, j) = b(i, j);
    return out;
}

IntMatrix IntMatrix::block_diag_power(const IntMatrix& a, int m) {
    IntMatrix out(a.rows_ * m, a.cols_ * m);
    for (int b = 0; b < m; ++b)
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) out(b * a.rows_ + i, b * a.cols_ + j) = a(i, j);
    return out;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
    return out;
}

IntMatrix IntMatrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    IntMatrix out(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k)
        if ((*this)(src, k) != 0) (*this)(dst, k) += c * (*this)(src, k);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < rows_; ++k)
        if ((*this)(k, src) != 0) (*this)(k, dst) += c * (*this)(k, src);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec scale(const Int& c, const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("dot product size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVec concat(const IntVec& a, const IntVec& b) {
    IntVec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace pi1
