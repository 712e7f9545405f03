#ifndef VILAB_LINALG_HPP
#define VILAB_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vilab/scalar.hpp"

namespace vilab {

// Dense exact matrix over Scalar. Row/column indices are 1-based in the
// accessors to match the ring conventions used everywhere else.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    static ScalarMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t characteristic() const { return p_; }

    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix transpose() const;
    Scalar det() const;
    // InputError if singular
    ScalarMatrix inverse() const;
    std::size_t rank() const;
    // solves A x = b for square A; InputError if singular
    std::vector<Scalar> solve(const std::vector<Scalar>& b) const;
    // basis of {x : A x = 0}, one vector per free column
    std::vector<std::vector<Scalar>> null_space() const;

    bool operator==(const ScalarMatrix& o) const;
    std::string str() const;  // canonical, usable as a map key

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace vilab

#endif
