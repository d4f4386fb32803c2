#include "rsq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rsq {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::jordan_block(int m, const Scalar& lambda) {
    Matrix j(m, m);
    for (int i = 0; i < m; ++i) {
        j.at(i, i) = lambda;
        if (i + 1 < m) j.at(i, i + 1) = Scalar(1);
    }
    return j;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch in sum");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch in difference");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& x) const {
    if ((int)x.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * x[j];
    return r;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
    Matrix m = *this;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int piv = -1;
        for (int i = lead; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        Scalar inv = m.at(lead, col).inv();
        for (int j = col; j < cols_; ++j) m.at(lead, j) = m.at(lead, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == lead || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return m;
}

int Matrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return (int)piv.size();
}

std::vector<Vec> Matrix::nullspace_basis() const {
    std::vector<int> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_);
        v[free] = Scalar(1);
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at((int)k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("matrix: inverse of non-square");
    Matrix aug = hstack(*this, identity(rows_));
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    for (int k = 0; k < rows_; ++k)
        if (k >= (int)piv.size() || piv[k] != k) throw std::domain_error("matrix: singular");
    Matrix inv(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) inv.at(i, j) = r.at(i, rows_ + j);
    return inv;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw std::domain_error("matrix: determinant of non-square");
    Matrix m = *this;
    Scalar d(1);
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        Scalar inv = m.at(col, col).inv();
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("matrix: hstack row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("matrix: vstack column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
    Matrix r(rows, (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j) {
        if ((int)cols[j].size() != rows) throw std::invalid_argument("matrix: column length mismatch");
        for (int i = 0; i < rows; ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

Vec Matrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

bool solve_linear(const Matrix& A, const Vec& b, Vec& x) {
    Matrix aug = Matrix::hstack(A, Matrix::from_columns({b}, A.rows()));
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    for (int c : piv)
        if (c == A.cols()) return false; // pivot in the augmented column
    x.assign(A.cols(), Scalar(0));
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at((int)k, A.cols());
    return true;
}

bool in_column_span(const Matrix& B, const Vec& v, Vec* coords) {
    Vec x;
    if (!solve_linear(B, v, x)) return false;
    if (coords) *coords = x;
    return true;
}

Matrix column_space_basis(const Matrix& A) {
    std::vector<int> piv;
    A.rref(&piv);
    Matrix r(A.rows(), (int)piv.size());
    for (int j = 0; j < (int)piv.size(); ++j)
        for (int i = 0; i < A.rows(); ++i) r.at(i, j) = A.at(i, piv[j]);
    return r;
}

} // namespace rsq
