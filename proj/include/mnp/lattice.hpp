#pragma once

#include "mnp/integer.hpp"

#include <optional>
#include <vector>

namespace mnp {

using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    friend IntVector operator*(const IntMatrix& m, const IntVector& v);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// D = left * A * right with D diagonal, d_1 | d_2 | ... | d_rank, all positive,
/// and left/right unimodular.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix right;
    std::size_t rank = 0;

    IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Proof that A x = b has no integral solution: y A = 0 (mod q) while y b != 0 (mod q).
/// A modulus of 0 means the congruences are equalities.
struct InfeasibilityCertificate {
    IntVector multiplier;
    Integer modulus;
};

bool verify_certificate(const IntMatrix& a, const IntVector& b, const InfeasibilityCertificate& cert);

struct IntegerSolution {
    IntVector particular;
    std::vector<IntVector> kernel;
};

struct SolveResult {
    std::optional<IntegerSolution> solution;
    std::optional<InfeasibilityCertificate> certificate;

    bool feasible() const { return solution.has_value(); }
};

/// Solves A x = b exactly over the integers.
SolveResult integer_solve(const IntMatrix& a, const IntVector& b);

}  // namespace mnp
