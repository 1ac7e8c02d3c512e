#pragma once

#include <vector>

#include "borelreg/bigint.hpp"
#include "borelreg/errors.hpp"
#include "borelreg/field.hpp"

namespace borelreg {

/// Dense matrix over an exact scalar type. No floating point anywhere.
template <class Scalar>
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar(0)) {
        if (rows < 0 || cols < 0)
            throw DomainError("Matrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return data_[index(r, c)]; }
    const Scalar& operator()(int r, int c) const { return data_[index(r, c)]; }

    void swap_rows(int a, int b) {
        for (int c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(int a, int b) {
        for (int r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int rows_;
    int cols_;
    std::vector<Scalar> data_;
};

using ExactMatrix = Matrix<Int>;

/// Exact rank over Q by fraction-free (Bareiss) elimination on the integer
/// entries; all divisions are exact, no rationals are formed.
int rank_over_rationals(ExactMatrix m);

/// Exact rank over F_p by Gaussian elimination on entries reduced mod p.
int rank_mod_prime(const ExactMatrix& m, std::uint32_t p);

/// Rank over the requested field.
int rank(const ExactMatrix& m, const FieldSpec& field);

}  // namespace borelreg
