#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvhom {

using BigInt = boost::multiprecision::cpp_int;

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMat& other) const {
        return rows == other.rows && cols == other.cols && a == other.a;
    }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
IntMat identity_mat(int n);
bool is_zero_mat(const IntMat& m);

// u * m * v = d with d diagonal, successive diagonal entries dividing each
// other, u and v unimodular. The factorization is re-verified by
// multiplication before returning.
struct SnfResult {
    IntMat d;
    IntMat u;
    IntMat v;
    int rank = 0;                          // nonzero diagonal entries
    std::vector<BigInt> invariant_factors; // the nonzero diagonal, in order
};

SnfResult smith_normal_form(const IntMat& m);

// Basis of the integer kernel of m: the columns of v whose image column is
// zero. Each vector is in the column coordinates of m.
std::vector<std::vector<BigInt>> kernel_basis(const SnfResult& snf);

} // namespace mvhom
