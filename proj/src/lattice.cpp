#include "mnp/lattice.hpp"

#include "mnp/errors.hpp"

#include <utility>

namespace mnp {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
    if (v.size() != m.cols_) throw DomainError("dimension mismatch in matrix-vector product");
    IntVector out(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("dimension mismatch in matrix product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

IntVector SmithForm::invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
    return out;
}

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& a)
        : d_(a), left_(IntMatrix::identity(a.rows())), right_(IntMatrix::identity(a.cols())) {}

    SmithForm run() {
        const std::size_t m = d_.rows();
        const std::size_t n = d_.cols();
        std::size_t t = 0;
        for (; t < m && t < n; ++t) {
            if (!select_pivot(t)) break;
            while (true) {
                bool changed = clear_column(t) | clear_row(t);
                if (changed) continue;
                // Enforce divisibility of the remaining block by the pivot.
                auto bad = find_non_multiple(t);
                if (!bad) break;
                add_row(t, *bad, 1);
            }
            if (d_(t, t) < 0) negate_row(t);
        }
        return {d_, left_, right_, t};
    }

private:
    IntMatrix d_;
    IntMatrix left_;
    IntMatrix right_;

    bool select_pivot(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t r = t; r < d_.rows(); ++r) {
            for (std::size_t c = t; c < d_.cols(); ++c) {
                if (d_(r, c) == 0) continue;
                if (!best || abs(d_(r, c)) < abs(d_(best->first, best->second))) best = {r, c};
            }
        }
        if (!best) return false;
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        return true;
    }

    // Row operations below the pivot; returns true if the pivot was replaced.
    bool clear_column(std::size_t t) {
        bool replaced = false;
        for (std::size_t r = t + 1; r < d_.rows(); ++r) {
            while (d_(r, t) != 0) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d_(r, t).get_mpz_t(), d_(t, t).get_mpz_t());
                add_row(r, t, -q);
                if (d_(r, t) != 0) {
                    swap_rows(t, r);
                    replaced = true;
                }
            }
        }
        return replaced;
    }

    bool clear_row(std::size_t t) {
        bool replaced = false;
        for (std::size_t c = t + 1; c < d_.cols(); ++c) {
            while (d_(t, c) != 0) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d_(t, c).get_mpz_t(), d_(t, t).get_mpz_t());
                add_col(c, t, -q);
                if (d_(t, c) != 0) {
                    swap_cols(t, c);
                    replaced = true;
                }
            }
        }
        // A swapped-in pivot may have reintroduced entries below it.
        if (replaced) return true;
        for (std::size_t r = t + 1; r < d_.rows(); ++r) {
            if (d_(r, t) != 0) return true;
        }
        return false;
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const {
        for (std::size_t r = t + 1; r < d_.rows(); ++r) {
            for (std::size_t c = t + 1; c < d_.cols(); ++c) {
                if (!mpz_divisible_p(d_(r, c).get_mpz_t(), d_(t, t).get_mpz_t())) return r;
            }
        }
        return std::nullopt;
    }

    // row_dst += s * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& s) {
        for (std::size_t c = 0; c < d_.cols(); ++c) d_(dst, c) += s * d_(src, c);
        for (std::size_t c = 0; c < left_.cols(); ++c) left_(dst, c) += s * left_(src, c);
    }

    void add_col(std::size_t dst, std::size_t src, const Integer& s) {
        for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, dst) += s * d_(r, src);
        for (std::size_t r = 0; r < right_.rows(); ++r) right_(r, dst) += s * right_(r, src);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
        for (std::size_t c = 0; c < left_.cols(); ++c) std::swap(left_(a, c), left_(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
        for (std::size_t r = 0; r < right_.rows(); ++r) std::swap(right_(r, a), right_(r, b));
    }

    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < d_.cols(); ++c) d_(r, c) = -d_(r, c);
        for (std::size_t c = 0; c < left_.cols(); ++c) left_(r, c) = -left_(r, c);
    }
};

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool congruent_zero(const Integer& x, const Integer& q) {
    if (q == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()) != 0;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

bool verify_certificate(const IntMatrix& a, const IntVector& b, const InfeasibilityCertificate& cert) {
    if (cert.multiplier.size() != a.rows() || b.size() != a.rows()) return false;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (!congruent_zero(dot(cert.multiplier, a.column(c)), cert.modulus)) return false;
    }
    return !congruent_zero(dot(cert.multiplier, b), cert.modulus);
}

SolveResult integer_solve(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw DomainError("right-hand side length does not match matrix rows");
    SmithForm snf = smith_normal_form(a);
    IntVector c = snf.left * b;
    IntVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer q = i < snf.rank ? snf.diagonal(i, i) : Integer(0);
        if (!congruent_zero(c[i], q)) {
            return {std::nullopt, InfeasibilityCertificate{snf.left.row(i), q}};
        }
        if (i < snf.rank) y[i] = c[i] / q;
    }
    IntegerSolution sol;
    sol.particular = snf.right * y;
    for (std::size_t j = snf.rank; j < a.cols(); ++j) sol.kernel.push_back(snf.right.column(j));
    return {std::move(sol), std::nullopt};
}

}  // namespace mnp
