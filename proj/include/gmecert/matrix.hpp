#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gmecert {

using cplx = std::complex<double>;

// Dense complex matrix with row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const cplx& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    std::span<const cplx> entries() const { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        return lhs += rhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        return lhs -= rhs;
    }
    friend ComplexMatrix operator*(cplx scale, ComplexMatrix m) { return m *= scale; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;

    cplx trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    // max |m(i,j) - conj(m(j,i))|; requires a square matrix
    double hermiticity_deviation() const;
    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(a * b) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace gmecert
