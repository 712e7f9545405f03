#include "vilab/linalg.hpp"

namespace vilab {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, Scalar::zero(p)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n, std::uint32_t p) {
    ScalarMatrix m(n, n, p);
    for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = Scalar::one(p);
    return m;
}

Scalar& ScalarMatrix::at(std::size_t i, std::size_t j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw InputError("matrix index out of range");
    return data_[(i - 1) * cols_ + (j - 1)];
}

const Scalar& ScalarMatrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw InputError("matrix index out of range");
    return data_[(i - 1) * cols_ + (j - 1)];
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw InputError("matrix product shape/characteristic mismatch");
    ScalarMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t k = 1; k <= cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 1; j <= o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(cols_, rows_, p_);
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Gauss-Jordan on a working copy; returns (rank, det-if-square). Optionally
// carries an augmented block that receives the same row operations.
struct Elimination {
    ScalarMatrix a;
    ScalarMatrix aug;
    bool has_aug = false;
    Scalar det;
    std::size_t rank = 0;

    explicit Elimination(const ScalarMatrix& m, const ScalarMatrix* augment = nullptr)
        : a(m), det(Scalar::one(m.characteristic())) {
        if (augment) {
            aug = *augment;
            has_aug = true;
        }
        run();
    }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t j = 1; j <= a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
        if (has_aug)
            for (std::size_t j = 1; j <= aug.cols(); ++j) std::swap(aug.at(r1, j), aug.at(r2, j));
        det = -det;
    }

    void scale_row(std::size_t r, const Scalar& c) {
        for (std::size_t j = 1; j <= a.cols(); ++j) a.at(r, j) *= c;
        if (has_aug)
            for (std::size_t j = 1; j <= aug.cols(); ++j) aug.at(r, j) *= c;
    }

    void add_multiple(std::size_t dst, std::size_t src, const Scalar& c) {
        if (c.is_zero()) return;
        for (std::size_t j = 1; j <= a.cols(); ++j) a.at(dst, j) += c * a.at(src, j);
        if (has_aug)
            for (std::size_t j = 1; j <= aug.cols(); ++j) aug.at(dst, j) += c * aug.at(src, j);
    }

    void run() {
        std::size_t row = 1;
        for (std::size_t col = 1; col <= a.cols() && row <= a.rows(); ++col) {
            std::size_t pivot = 0;
            for (std::size_t r = row; r <= a.rows(); ++r)
                if (!a.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot == 0) continue;
            if (pivot != row) swap_rows(row, pivot);
            Scalar lead = a.at(row, col);
            det *= lead;
            scale_row(row, lead.inverse());
            for (std::size_t r = 1; r <= a.rows(); ++r)
                if (r != row && !a.at(r, col).is_zero()) add_multiple(r, row, -a.at(r, col));
            ++row;
            ++rank;
        }
    }
};

}  // namespace

Scalar ScalarMatrix::det() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    Elimination e(*this);
    if (e.rank < rows_) return Scalar::zero(p_);
    return e.det;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
    ScalarMatrix id = identity(rows_, p_);
    Elimination e(*this, &id);
    if (e.rank < rows_) throw InputError("matrix is singular");
    return e.aug;
}

std::size_t ScalarMatrix::rank() const { return Elimination(*this).rank; }

std::vector<Scalar> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw InputError("solve shape mismatch");
    ScalarMatrix rhs(rows_, 1, p_);
    for (std::size_t i = 1; i <= rows_; ++i) rhs.at(i, 1) = b[i - 1];
    Elimination e(*this, &rhs);
    if (e.rank < rows_) throw InputError("matrix is singular");
    std::vector<Scalar> x;
    x.reserve(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) x.push_back(e.aug.at(i, 1));
    return x;
}

std::vector<std::vector<Scalar>> ScalarMatrix::null_space() const {
    Elimination e(*this);
    const ScalarMatrix& r = e.a;  // reduced row echelon form
    std::vector<std::size_t> pivot_of_col(cols_ + 1, 0);  // 1-based; 0 = free
    std::size_t row = 1;
    for (std::size_t col = 1; col <= cols_ && row <= rows_; ++col)
        if (!r.at(row, col).is_zero()) pivot_of_col[col] = row++;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 1; free <= cols_; ++free) {
        if (pivot_of_col[free] != 0) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(p_));
        v[free - 1] = Scalar::one(p_);
        for (std::size_t col = 1; col <= cols_; ++col) {
            std::size_t pr = pivot_of_col[col];
            if (pr != 0) v[col - 1] = -r.at(pr, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
}

std::string ScalarMatrix::str() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + "@" + std::to_string(p_) + ":";
    for (const auto& v : data_) s += v.str() + ",";
    return s;
}

}  // namespace vilab
