#include "prodtop/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prodtop {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int gcd_nonneg(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntegerMatrix: entries length must equal rows * cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Int>& d) {
    IntegerMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Int x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " [");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
    IntegerMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b.at(k, j)));
        }
    return r;
}

Int determinant(const IntegerMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(m.at(i, j), m.at(k, k)),
                                      checked_mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = m.at(k, k);
    }
    return checked_mul(sign, m.at(n - 1, n - 1));
}

namespace {

// Row/column operations applied simultaneously to the working matrix and the
// accumulated unimodular transforms.
struct SmithWork {
    IntegerMatrix d, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(a, c), d.at(b, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(a, c), u.at(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, a), d.at(r, b));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, a), v.at(r, b));
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < d.cols(); ++c) d.at(r, c) = checked_neg(d.at(r, c));
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(r, c) = checked_neg(u.at(r, c));
    }
    // row[a] -= q * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, Int q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < d.cols(); ++c)
            d.at(a, c) = checked_sub(d.at(a, c), checked_mul(q, d.at(b, c)));
        for (std::size_t c = 0; c < u.cols(); ++c)
            u.at(a, c) = checked_sub(u.at(a, c), checked_mul(q, u.at(b, c)));
    }
    // col[a] -= q * col[b]
    void add_col_multiple(std::size_t a, std::size_t b, Int q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < d.rows(); ++r)
            d.at(r, a) = checked_sub(d.at(r, a), checked_mul(q, d.at(r, b)));
        for (std::size_t r = 0; r < v.rows(); ++r)
            v.at(r, a) = checked_sub(v.at(r, a), checked_mul(q, v.at(r, b)));
    }
};

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithWork w{a, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: minimal-absolute-value nonzero entry of the remaining block,
        // scanned row-major so ties resolve deterministically.  A unit entry
        // is already minimal, so the scan may stop there.
        std::size_t pr = t, pc = t;
        Int best = 0;
        for (std::size_t i = t; i < m && best != 1; ++i)
            for (std::size_t j = t; j < n; ++j) {
                Int x = w.d.at(i, j);
                if (x == 0) continue;
                Int ax = x < 0 ? -x : x;
                if (best == 0 || ax < best) {
                    best = ax;
                    pr = i;
                    pc = j;
                    if (best == 1) break;
                }
            }
        if (best == 0) break;  // remaining block is zero
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            // Clear the pivot column, then the pivot row.  When a remainder
            // survives it is strictly smaller than the pivot, so swapping it
            // into the pivot slot makes progress.
            bool again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = w.d.at(i, t) / w.d.at(t, t);
                w.add_row_multiple(i, t, q);
                if (w.d.at(i, t) != 0) {
                    w.swap_rows(t, i);
                    again = true;
                }
            }
            if (again) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = w.d.at(t, j) / w.d.at(t, t);
                w.add_col_multiple(j, t, q);
                if (w.d.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    again = true;
                }
            }
            if (again) continue;

            // Divisibility: the pivot must divide every entry of the rest of
            // the block (a unit pivot trivially does).  Folding an offending
            // row into the pivot row shrinks the pivot gcd, so this
            // terminates.
            if (w.d.at(t, t) == 1 || w.d.at(t, t) == -1) break;
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.add_row_multiple(t, i, -1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }

    return SmithForm{w.u, w.d, w.v, a};
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D.at(i, i));
    return out;
}

std::vector<Int> SmithForm::nonzero_diagonal() const {
    std::vector<Int> out;
    for (Int d : diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

std::size_t integer_rank(const IntegerMatrix& a) {
    return smith_normal_form(a).nonzero_diagonal().size();
}

IntegerMatrix invert_unimodular(const IntegerMatrix& u) {
    if (!u.is_square()) throw std::invalid_argument("invert_unimodular: matrix must be square");
    SmithForm s = smith_normal_form(u);
    if (s.D != IntegerMatrix::identity(u.rows()))
        throw std::invalid_argument("invert_unimodular: matrix is not unimodular");
    // U' * u * V' = I  =>  u^{-1} = V' * U'
    return s.V * s.U;
}

bool lattice_contains(const IntegerMatrix& relations, const std::vector<Int>& v) {
    if (v.size() != relations.rows())
        throw std::invalid_argument("lattice_contains: vector length must equal row count");
    SmithForm s = smith_normal_form(relations);
    std::vector<Int> w(relations.rows(), 0);
    for (std::size_t i = 0; i < relations.rows(); ++i)
        for (std::size_t j = 0; j < relations.rows(); ++j)
            w[i] = checked_add(w[i], checked_mul(s.U.at(i, j), v[j]));
    const std::size_t diag = std::min(relations.rows(), relations.cols());
    for (std::size_t i = 0; i < relations.rows(); ++i) {
        Int d = i < diag ? s.D.at(i, i) : 0;
        if (d == 0) {
            if (w[i] != 0) return false;
        } else if (w[i] % d != 0) {
            return false;
        }
    }
    return true;
}

} // namespace prodtop
