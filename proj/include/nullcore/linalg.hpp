#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nullcore {

using Integer = mpz_class;
using Rational = mpq_class;

class dimension_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    Integer trace() const;

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend bool operator==(const IntMatrix &a, const IntMatrix &b);

    // Row-major nested vectors of decimal strings; small values fit in long.
    std::vector<std::vector<long>> to_longs() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Exact rational vector; entries are kept canonical (lowest terms).
class RatVector {
   public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : entries_(dim) {}
    explicit RatVector(std::vector<Rational> entries);
    static RatVector from_integers(std::span<const Integer> values);

    std::size_t dim() const { return entries_.size(); }
    const Rational &operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, Rational value);
    bool is_zero() const;
    const std::vector<Rational> &entries() const { return entries_; }

    friend bool operator==(const RatVector &a, const RatVector &b) = default;

   private:
    std::vector<Rational> entries_;
};

using IntVector = std::vector<Integer>;

// Canonical integer basis of a matrix kernel: one primitive vector per free
// column of the reduced row echelon form, ordered by free column, with the
// first non-zero entry positive.
struct KernelBasis {
    std::size_t dim = 0;
    std::vector<IntVector> vectors;

    std::size_t nullity() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
    // Indices where at least one basis vector is non-zero.
    std::vector<std::size_t> support() const;

    friend bool operator==(const KernelBasis &a, const KernelBasis &b) = default;
};

// Monic characteristic polynomial det(xI - M); coefficients[k] multiplies x^k.
struct CharPoly {
    std::vector<Integer> coefficients;

    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    Integer evaluate(const Integer &x) const;

    friend bool operator==(const CharPoly &a, const CharPoly &b) = default;
};

// Result of fraction-free Gauss-Jordan elimination. Every pivot row carries the
// same pivot value `scale`; dividing by it yields the reduced row echelon form.
struct EchelonForm {
    IntMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    Integer scale = 1;
};

EchelonForm fraction_free_reduce(const IntMatrix &m);

std::size_t rank(const IntMatrix &m);
KernelBasis nullspace_basis(const IntMatrix &m);
Integer det(const IntMatrix &m);
bool is_nonsingular(const IntMatrix &m);
CharPoly char_poly(const IntMatrix &m);

RatVector mat_vec(const IntMatrix &m, const RatVector &v);
IntVector mat_vec(const IntMatrix &m, std::span<const Integer> v);

// Scales an integer vector to a primitive one whose first non-zero entry is positive.
IntVector primitive(IntVector v);

// Polynomial helpers over Z, coefficient k multiplies x^k.
std::vector<Integer> poly_mul(std::span<const Integer> a, std::span<const Integer> b);

std::string to_string(const CharPoly &p);

}  // namespace nullcore
