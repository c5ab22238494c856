/*
   Copyright 2026 The bbs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BBS_MATRIX_HPP
#define BBS_MATRIX_HPP

#include <vector>

#include "bbs/polynomial.hpp"

namespace bbs {

/// Dense rectangular matrix of polynomials sharing one ring context.
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols, const Ring& ring);
    static PolyMatrix identity(int n, const Ring& ring);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    const Polynomial& at(int r, int c) const { return data_[r * cols_ + c]; }
    Polynomial& at(int r, int c) { return data_[r * cols_ + c]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const Polynomial& f) const;
    PolyMatrix transposed() const;
    bool operator==(const PolyMatrix& o) const;

    std::vector<Polynomial> column(int c) const;
    void set_column(int c, const std::vector<Polynomial>& col);
    /// Vertical stack.
    static PolyMatrix stack(const std::vector<PolyMatrix>& blocks);

    bool row_is_zero(int r) const;

  private:
    int rows_, cols_;
    Ring ring_;
    std::vector<Polynomial> data_;
};

/// Exact determinant. Laplace expansion with memoized minors for small
/// matrices, fraction-free Bareiss with exact division above the cutoff.
Polynomial matrix_det(const PolyMatrix& M);
/// Force one algorithm (exposed for cross-checking).
Polynomial matrix_det_laplace(const PolyMatrix& M);
Polynomial matrix_det_bareiss(const PolyMatrix& M);

/// adj(M) with M*adj(M) = det(M)*Id.
PolyMatrix matrix_adjugate(const PolyMatrix& M);

/// All k x k minors in lexicographic (row-subset, column-subset) order.
/// Zero rows inside the chosen subset are skipped early; syntactic zeros are
/// dropped and duplicates removed, preserving first-occurrence order.
std::vector<Polynomial> matrix_minors(const PolyMatrix& M, int k);

/// Exact quotient f/g in the polynomial ring; MathError if not divisible.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace bbs

#endif
