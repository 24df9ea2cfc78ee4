#include "nullcore/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace nullcore {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw dimension_error("IntMatrix: entry count does not match rows*cols");
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>> &rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw dimension_error("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

Integer IntMatrix::trace() const {
    if (!is_square()) throw dimension_error("trace: matrix is not square");
    Integer t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_) throw dimension_error("matrix product: inner dimensions differ");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer &aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
        }
    }
    return p;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<long>> IntMatrix::to_longs() const {
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Integer &e = (*this)(i, j);
            if (!e.fits_slong_p()) throw std::overflow_error("IntMatrix::to_longs: entry exceeds long");
            out[i][j] = e.get_si();
        }
    return out;
}

RatVector::RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (auto &e : entries_) e.canonicalize();
}

RatVector RatVector::from_integers(std::span<const Integer> values) {
    std::vector<Rational> e;
    e.reserve(values.size());
    for (const auto &v : values) e.emplace_back(v);
    return RatVector(std::move(e));
}

void RatVector::set(std::size_t i, Rational value) {
    value.canonicalize();
    entries_.at(i) = std::move(value);
}

bool RatVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational &q) { return sgn(q) == 0; });
}

std::vector<std::size_t> KernelBasis::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < dim; ++i) {
        for (const auto &v : vectors) {
            if (sgn(v[i]) != 0) {
                s.push_back(i);
                break;
            }
        }
    }
    return s;
}

Integer CharPoly::evaluate(const Integer &x) const {
    Integer acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

void divexact_inplace(Integer &value, const Integer &divisor) {
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

}  // namespace

// Fraction-free Gauss-Jordan (Bareiss variant). After processing k pivots every
// entry is a (k+1)-order minor of the input, so each division is exact.
EchelonForm fraction_free_reduce(const IntMatrix &m) {
    EchelonForm out;
    out.reduced = m;
    IntMatrix &a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Integer prev = 1;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols && k < rows; ++j) {
        std::size_t p = k;
        while (p < rows && sgn(a(p, j)) == 0) ++p;
        if (p == rows) continue;
        if (p != k)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(p, c), a(k, c));
        const Integer pivot = a(k, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == k) continue;
            const Integer factor = a(i, j);
            for (std::size_t c = 0; c < cols; ++c) {
                if (c == j) continue;
                Integer v = pivot * a(i, c) - factor * a(k, c);
                divexact_inplace(v, prev);
                a(i, c) = std::move(v);
            }
            a(i, j) = 0;
        }
        prev = pivot;
        out.pivot_cols.push_back(j);
        ++k;
    }
    out.scale = prev;
    return out;
}

std::size_t rank(const IntMatrix &m) {
    if (m.empty()) return 0;
    // Forward-only Bareiss; rank is the number of pivots found.
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Integer prev = 1;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols && k < rows; ++j) {
        std::size_t p = k;
        while (p < rows && sgn(a(p, j)) == 0) ++p;
        if (p == rows) continue;
        if (p != k)
            for (std::size_t c = j; c < cols; ++c) std::swap(a(p, c), a(k, c));
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t c = j + 1; c < cols; ++c) {
                Integer v = a(k, j) * a(i, c) - a(i, j) * a(k, c);
                divexact_inplace(v, prev);
                a(i, c) = std::move(v);
            }
            a(i, j) = 0;
        }
        prev = a(k, j);
        ++k;
    }
    return k;
}

IntVector primitive(IntVector v) {
    Integer g = 0;
    for (const auto &e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 0) return v;
    auto first = std::find_if(v.begin(), v.end(), [](const Integer &e) { return sgn(e) != 0; });
    if (sgn(*first) < 0) g = -g;
    for (auto &e : v) divexact_inplace(e, g);
    return v;
}

KernelBasis nullspace_basis(const IntMatrix &m) {
    KernelBasis basis;
    basis.dim = m.cols();
    const EchelonForm ef = fraction_free_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ef.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        // x_f = scale, x_{pivot(r)} = -reduced(r, f): scale times the RREF solution.
        IntVector v(m.cols(), Integer(0));
        v[f] = ef.scale;
        for (std::size_t r = 0; r < ef.pivot_cols.size(); ++r) v[ef.pivot_cols[r]] = -ef.reduced(r, f);
        basis.vectors.push_back(primitive(std::move(v)));
    }
    return basis;
}

Integer det(const IntMatrix &m) {
    if (!m.is_square()) throw dimension_error("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a(p, k)) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a(p, c), a(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t c = k + 1; c < n; ++c) {
                Integer v = a(k, k) * a(i, c) - a(i, k) * a(k, c);
                divexact_inplace(v, prev);
                a(i, c) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_nonsingular(const IntMatrix &m) { return sgn(det(m)) != 0; }

// Faddeev-LeVerrier: B_k = M B_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M B_k) / k.
// With integer M every trace is divisible by k.
CharPoly char_poly(const IntMatrix &m) {
    if (!m.is_square()) throw dimension_error("char_poly: matrix is not square");
    const std::size_t n = m.rows();
    CharPoly p;
    p.coefficients.assign(n + 1, Integer(0));
    p.coefficients[n] = 1;
    IntMatrix b(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = m * b;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += p.coefficients[n - k + 1];
        b = std::move(next);
        Integer tr = (m * b).trace();
        if (tr % static_cast<unsigned long>(k) != 0) {
            throw std::logic_error("char_poly: non-integral Faddeev-LeVerrier trace");
        }
        p.coefficients[n - k] = -tr / static_cast<unsigned long>(k);
    }
    return p;
}

RatVector mat_vec(const IntMatrix &m, const RatVector &v) {
    if (m.cols() != v.dim()) throw dimension_error("mat_vec: dimension mismatch");
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) out[i] += m(i, j) * v[j];
    return RatVector(std::move(out));
}

IntVector mat_vec(const IntMatrix &m, std::span<const Integer> v) {
    if (m.cols() != v.size()) throw dimension_error("mat_vec: dimension mismatch");
    IntVector out(m.rows(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) out[i] += m(i, j) * v[j];
    return out;
}

std::vector<Integer> poly_mul(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::string to_string(const CharPoly &p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.coefficients.size(); k-- > 0;) {
        const Integer &c = p.coefficients[k];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace nullcore
