#pragma once

#include "sph/base.hpp"

namespace sph {

// Dense matrix over exact rationals.
struct mat {
    int rows = 0, cols = 0;
    std::vector<rat> a;

    mat() = default;
    mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    rat& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const rat& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    static mat identity(int n);

    mat operator*(const mat& o) const;
    mat operator+(const mat& o) const;
    mat operator-(const mat& o) const;
    mat scaled(const rat& c) const;
    bool is_zero() const;
    bool operator==(const mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    std::vector<rat> apply(const std::vector<rat>& v) const;  // this * v
    std::vector<rat> row(int i) const;
};

inline mat commutator(const mat& x, const mat& y) { return x * y - y * x; }

// Incremental row-echelon basis of a subspace of Q^cols.  Optionally tracks,
// for every stored row, its expansion over the original inserted vectors so
// callers can express reducible vectors in terms of what they inserted.
struct echelon {
    int cols = 0;
    bool track = false;
    std::vector<std::vector<rat>> rows;    // reduced rows, pivot normalized to 1
    std::vector<int> pivots;               // pivot column per row
    std::vector<std::vector<rat>> combos;  // expansion over inserted vectors (if track)
    int inserted = 0;

    echelon() = default;
    explicit echelon(int c, bool track_combos = false) : cols(c), track(track_combos) {}

    int rank() const { return int(rows.size()); }

    // Reduce v against the basis; combo (if requested) receives the
    // coefficients over the previously inserted vectors.
    std::vector<rat> reduce(std::vector<rat> v, std::vector<rat>* combo = nullptr) const;

    // Insert v; returns true if it enlarged the span.
    bool add(std::vector<rat> v);

    bool contains(const std::vector<rat>& v) const;

    // If v lies in the span, write its expansion over inserted vectors.
    bool express(const std::vector<rat>& v, std::vector<rat>& coeffs) const;

    // Coordinates not used as pivots (complement used as quotient coords).
    std::vector<int> free_columns() const;
};

// Kernel basis of A (vectors x with A x = 0), deterministic order.
std::vector<std::vector<rat>> kernel_basis(const mat& A);

int rank_of(mat A);

// One solution of A x = b; returns false if inconsistent.
bool solve_linear(const mat& A, const std::vector<rat>& b, std::vector<rat>& x);

}  // namespace sph
