#include "mvhom/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvhom {

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::logic_error("mat_mul: shape mismatch");
    IntMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const BigInt& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const BigInt& yv = y.at(k, j);
                if (yv != 0) out.at(i, j) += xv * yv;
            }
        }
    return out;
}

IntMat identity_mat(int n) {
    IntMat out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

bool is_zero_mat(const IntMat& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const BigInt& v) { return v == 0; });
}

namespace {

void swap_rows(IntMat& m, IntMat& u, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(r1, j), u.at(r2, j));
}

void swap_cols(IntMat& m, IntMat& v, int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, c1), v.at(i, c2));
}

// row r1 -= q * row r2
void row_op(IntMat& m, IntMat& u, int r1, int r2, const BigInt& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols; ++j) m.at(r1, j) -= q * m.at(r2, j);
    for (int j = 0; j < u.cols; ++j) u.at(r1, j) -= q * u.at(r2, j);
}

void col_op(IntMat& m, IntMat& v, int c1, int c2, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows; ++i) m.at(i, c1) -= q * m.at(i, c2);
    for (int i = 0; i < v.rows; ++i) v.at(i, c1) -= q * v.at(i, c2);
}

void negate_row(IntMat& m, IntMat& u, int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
}

} // namespace

SnfResult smith_normal_form(const IntMat& input) {
    SnfResult res;
    res.d = input;
    res.u = identity_mat(input.rows);
    res.v = identity_mat(input.cols);
    IntMat& d = res.d;

    const int bound = std::min(input.rows, input.cols);
    for (int s = 0; s < bound; ++s) {
        // Pick the smallest nonzero entry of the trailing submatrix as pivot.
        int pr = -1, pc = -1;
        for (int i = s; i < d.rows; ++i)
            for (int j = s; j < d.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                if (pr < 0 || abs(d.at(i, j)) < abs(d.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break; // submatrix is zero
        swap_rows(d, res.u, s, pr);
        swap_cols(d, res.v, s, pc);

        for (;;) {
            bool reduced = true;
            for (int i = s + 1; i < d.rows; ++i) {
                BigInt q = d.at(i, s) / d.at(s, s);
                row_op(d, res.u, i, s, q);
                if (d.at(i, s) != 0) {
                    swap_rows(d, res.u, s, i);
                    reduced = false;
                }
            }
            for (int j = s + 1; j < d.cols; ++j) {
                BigInt q = d.at(s, j) / d.at(s, s);
                col_op(d, res.v, j, s, q);
                if (d.at(s, j) != 0) {
                    swap_cols(d, res.v, s, j);
                    reduced = false;
                }
            }
            if (!reduced) continue;
            // Enforce divisibility: fold any non-multiple into the pivot row.
            bool divides = true;
            for (int i = s + 1; i < d.rows && divides; ++i)
                for (int j = s + 1; j < d.cols && divides; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        for (int c = 0; c < d.cols; ++c) d.at(s, c) += d.at(i, c);
                        for (int c = 0; c < res.u.cols; ++c) res.u.at(s, c) += res.u.at(i, c);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(s, s) < 0) negate_row(d, res.u, s);
    }

    for (int s = 0; s < bound; ++s)
        if (d.at(s, s) != 0) {
            res.invariant_factors.push_back(d.at(s, s));
            res.rank++;
        }

    if (!(mat_mul(mat_mul(res.u, input), res.v) == res.d))
        throw std::logic_error("smith_normal_form: factorization failed re-verification");
    return res;
}

std::vector<std::vector<BigInt>> kernel_basis(const SnfResult& snf) {
    std::vector<std::vector<BigInt>> basis;
    for (int j = snf.rank; j < snf.d.cols; ++j) {
        std::vector<BigInt> vec(static_cast<size_t>(snf.v.rows));
        for (int i = 0; i < snf.v.rows; ++i) vec[static_cast<size_t>(i)] = snf.v.at(i, j);
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace mvhom
