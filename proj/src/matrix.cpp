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

#include "bbs/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bbs {

PolyMatrix::PolyMatrix(int rows, int cols, const Ring& ring)
    : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols, Polynomial::zero(ring)) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int n, const Ring& ring) {
    PolyMatrix m(n, n, ring);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::from_int(1, ring);
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in add");
    PolyMatrix m(rows_, cols_, ring_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in sub");
    PolyMatrix m(rows_, cols_, ring_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix shape mismatch in mul");
    PolyMatrix m(rows_, o.cols_, ring_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Polynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Polynomial& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) += a * b;
            }
        }
    }
    return m;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
    PolyMatrix m(rows_, cols_, ring_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * f;
    return m;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix m(cols_, rows_, ring_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

std::vector<Polynomial> PolyMatrix::column(int c) const {
    std::vector<Polynomial> col;
    col.reserve(rows_);
    for (int r = 0; r < rows_; ++r) col.push_back(at(r, c));
    return col;
}

void PolyMatrix::set_column(int c, const std::vector<Polynomial>& col) {
    for (int r = 0; r < rows_; ++r) at(r, c) = col[r];
}

PolyMatrix PolyMatrix::stack(const std::vector<PolyMatrix>& blocks) {
    if (blocks.empty()) throw InputError("stack of no blocks");
    int cols = blocks[0].cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw InputError("stack blocks must share a column count");
        rows += b.rows();
    }
    PolyMatrix m(rows, cols, blocks[0].ring());
    int r0 = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) m.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows();
    }
    return m;
}

bool PolyMatrix::row_is_zero(int r) const {
    for (int c = 0; c < cols_; ++c)
        if (!at(r, c).is_zero()) return false;
    return true;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw MathError("exact division by zero");
    Polynomial q = Polynomial::zero(f.ring());
    if (f.is_zero()) return q;
    TermOrdering ord = TermOrdering::degrevlex(f.ring().nvars());
    auto [lg, cg] = g.leading_term(ord);
    Polynomial r = f;
    while (!r.is_zero()) {
        auto [lr, cr] = r.leading_term(ord);
        if (!lg.divides(lr)) throw MathError("non-exact polynomial division");
        Polynomial m = Polynomial::monomial(cr / cg, lg.quotient_into(lr), f.ring());
        q += m;
        r -= m * g;
    }
    return q;
}

namespace {

// Laplace expansion over column subsets, minors memoized by (row offset is
// implicit: rows used are the first popcount(mask) rows of the selection).
class LaplaceDet {
  public:
    LaplaceDet(const PolyMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols)
        : m_(M), rows_(rows), cols_(cols) {}

    Polynomial run() {
        if (rows_.empty()) return Polynomial::from_int(1, m_.ring());
        return minor_of((1u << cols_.size()) - 1);
    }

  private:
    Polynomial minor_of(unsigned mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        int size = __builtin_popcount(mask);
        int row = rows_[rows_.size() - size];  // expand along the topmost unused row
        Polynomial det = Polynomial::zero(m_.ring());
        int sign = 1;
        for (size_t k = 0; k < cols_.size(); ++k) {
            if (!(mask & (1u << k))) continue;
            const Polynomial& entry = m_.at(row, cols_[k]);
            if (!entry.is_zero()) {
                if (size == 1) {
                    det = entry;
                } else {
                    Polynomial sub = minor_of(mask & ~(1u << k));
                    Polynomial contrib = entry * sub;
                    det = sign > 0 ? det + contrib : det - contrib;
                }
            }
            sign = -sign;
        }
        memo_.emplace(mask, det);
        return det;
    }

    const PolyMatrix& m_;
    std::vector<int> rows_, cols_;
    std::map<unsigned, Polynomial> memo_;
};

Polynomial det_on(const PolyMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    return LaplaceDet(M, rows, cols).run();
}

constexpr int kBareissCutoff = 9;

}  // namespace

Polynomial matrix_det_laplace(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("determinant of a non-square matrix");
    std::vector<int> idx(M.rows());
    for (int i = 0; i < M.rows(); ++i) idx[i] = i;
    return det_on(M, idx, idx);
}

Polynomial matrix_det_bareiss(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("determinant of a non-square matrix");
    int n = M.rows();
    if (n == 0) return Polynomial::from_int(1, M.ring());
    PolyMatrix a = M;
    Polynomial prev = Polynomial::from_int(1, M.ring());
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a.at(r, k).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Polynomial::zero(M.ring());
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = divide_exact(num, prev);
            }
            a.at(i, k) = Polynomial::zero(M.ring());
        }
        prev = a.at(k, k);
    }
    Polynomial det = a.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

Polynomial matrix_det(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("determinant of a non-square matrix");
    if (M.rows() <= kBareissCutoff) return matrix_det_laplace(M);
    return matrix_det_bareiss(M);
}

PolyMatrix matrix_adjugate(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw InputError("adjugate of a non-square matrix");
    int n = M.rows();
    PolyMatrix adj(n, n, M.ring());
    if (n == 0) return adj;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);  // cofactor C_{ji} goes to adj(i,j)
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            Polynomial minor = det_on(M, rows, cols);
            adj.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return adj;
}

std::vector<Polynomial> matrix_minors(const PolyMatrix& M, int k) {
    if (k < 1 || k > std::min(M.rows(), M.cols()))
        throw InputError("minor size out of range");
    std::vector<bool> zero_row(M.rows());
    for (int r = 0; r < M.rows(); ++r) zero_row[r] = M.row_is_zero(r);

    std::vector<Polynomial> out;
    std::set<std::string> seen;
    std::vector<int> rows(k), cols(k);
    // Lexicographic enumeration of k-subsets.
    auto next_subset = [](std::vector<int>& s, int n) {
        int k = static_cast<int>(s.size());
        for (int i = k - 1; i >= 0; --i) {
            if (s[i] < n - k + i) {
                ++s[i];
                for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
        bool skip = false;
        for (int r : rows)
            if (zero_row[r]) {
                skip = true;
                break;
            }
        if (skip) continue;
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            Polynomial d = det_on(M, rows, cols);
            if (d.is_zero()) continue;
            std::string key = d.to_string();
            if (seen.insert(key).second) out.push_back(d);
        } while (next_subset(cols, M.cols()));
    } while (next_subset(rows, M.rows()));
    return out;
}

}  // namespace bbs
