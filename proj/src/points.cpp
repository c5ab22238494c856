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

#include "bbs/points.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace bbs {

namespace {

std::map<int, FieldElem> grid_assignment(const SchemeContext& S, const SchemePoint& gamma) {
    std::map<int, FieldElem> values;
    for (int i = 0; i < S.mu(); ++i)
        for (int j = 0; j < S.nu(); ++j) values.emplace(S.cvar(i, j), gamma.at(i, j));
    return values;
}

}  // namespace

Polynomial specialize(const Polynomial& f, const SchemeContext& S, const SchemePoint& gamma) {
    return f.evaluated(grid_assignment(S, gamma));
}

PolyMatrix specialize(const PolyMatrix& M, const SchemeContext& S, const SchemePoint& gamma) {
    auto values = grid_assignment(S, gamma);
    PolyMatrix out(M.rows(), M.cols(), M.ring());
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) out.at(r, c) = M.at(r, c).evaluated(values);
    return out;
}

std::vector<Polynomial> specialize(const Ideal& I, const SchemeContext& S, const SchemePoint& gamma) {
    auto values = grid_assignment(S, gamma);
    std::vector<Polynomial> out;
    for (const auto& g : I.generators()) out.push_back(g.evaluated(values));
    return out;
}

bool on_scheme(const SchemeContext& S, const SchemePoint& gamma) {
    for (const auto& g : specialize(S.defining_ideal(Flavor::Full), S, gamma))
        if (!g.is_zero()) return false;
    return true;
}

Ideal ideal_of_point(const SchemePoint& gamma, const Ring& xring) {
    const OrderIdeal& O = gamma.O;
    std::vector<Polynomial> gens;
    for (int j = 0; j < O.nu(); ++j) {
        Polynomial g = Polynomial::term(O.border_term(j), xring);
        for (int i = 0; i < O.mu(); ++i)
            g -= Polynomial::monomial(gamma.at(i, j), O.term(i), xring);
        gens.push_back(std::move(g));
    }
    return Ideal(std::move(gens), xring);
}

OrderIdeal degree_filtered_basis(const Ideal& I, const Budget& budget) {
    const Ring& ring = I.ring();
    int n = ring.nvars();
    TermOrdering ord = TermOrdering::degrevlex(n);
    const auto& gb = I.groebner(ord, budget);
    if (gb.size() == 1 && gb[0].is_one()) throw MathError("quotient ring is zero (unit ideal)");
    std::vector<Term> lts;
    for (const auto& g : gb) lts.push_back(g.leading_term(ord).first);
    // Zero-dimensionality: every variable has a pure power among the LTs.
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const Term& lt : lts) {
            bool pure = lt.exponent(v) > 0;
            for (int w = 0; w < n && pure; ++w)
                if (w != v && lt.exponent(w) > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) throw MathError("ideal is not zero-dimensional (no pure power of " + ring.var_name(v) + ")");
    }
    // Collect the complement of LT(I) degree by degree; within a degree the
    // list ascends in the ordering (matching the degree filtration order).
    std::vector<Term> basis;
    for (int d = 0;; ++d) {
        std::vector<Term> level;
        for (const Term& t : terms_of_degree(d, n)) {
            bool reducible = false;
            for (const Term& lt : lts)
                if (lt.divides(t)) {
                    reducible = true;
                    break;
                }
            if (!reducible) level.push_back(t);
        }
        if (level.empty()) break;
        std::sort(level.begin(), level.end(),
                  [&](const Term& a, const Term& b) { return ord.less(a, b); });
        basis.insert(basis.end(), level.begin(), level.end());
    }
    return OrderIdeal::make_with_term_order(std::move(basis), ring.var_names());
}

Ideal degree_form_ideal(const Ideal& I, const Budget& budget) {
    TermOrdering ord = TermOrdering::degrevlex(I.ring().nvars());
    const auto& gb = I.groebner(ord, budget);
    std::vector<Polynomial> gens;
    for (const auto& g : gb) gens.push_back(g.degree_form());
    return Ideal(std::move(gens), I.ring());
}

namespace {

// Multiplication matrix of t on P/DF(I) in the basis O (scalar entries kept
// as constant polynomials of the x-ring).
PolyMatrix scalar_mult_matrix(const Term& t, const OrderIdeal& O, const Ideal& df,
                              const TermOrdering& ord, const Budget& budget) {
    const Ring& ring = df.ring();
    int mu = O.mu();
    PolyMatrix M(mu, mu, ring);
    for (int col = 0; col < mu; ++col) {
        Polynomial image = df.normal_form(Polynomial::term(t * O.term(col), ring), ord, budget);
        for (const auto& [u, c] : image.terms()) {
            int row = O.index_of(u);
            if (row < 0) throw MathError("normal form left the quotient basis");
            M.at(row, col) = Polynomial::constant(c, ring);
        }
    }
    return M;
}

// Exact rank by Gaussian elimination on constant entries.
int scalar_rank(const PolyMatrix& M) {
    int rows = M.rows(), cols = M.cols();
    std::vector<std::vector<FieldElem>> a(rows, std::vector<FieldElem>(cols));
    Field k = M.ring().field();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const Polynomial& e = M.at(r, c);
            if (!e.is_constant() && !e.is_zero()) throw MathError("rank of a non-scalar matrix");
            a[r][c] = e.is_zero() ? FieldElem::zero(k) : e.terms()[0].second;
        }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        FieldElem inv = a[rank][c].inverse();
        for (int cc = c; cc < cols; ++cc) a[rank][cc] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            FieldElem f = a[r][c];
            for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

FieldElem scalar_det(const PolyMatrix& M) {
    Polynomial d = matrix_det(M);
    if (d.is_zero()) return FieldElem::zero(M.ring().field());
    if (!d.is_constant()) throw MathError("det of a non-scalar matrix");
    return d.terms()[0].second;
}

}  // namespace

CheckResult check_scb(const Ideal& I, const Budget& budget) {
    OrderIdeal O = degree_filtered_basis(I, budget);
    Ideal df = degree_form_ideal(I, budget);
    TermOrdering ord = TermOrdering::degrevlex(I.ring().nvars());
    int mu = O.mu();
    int delta = O.top_degree_count();
    std::vector<PolyMatrix> mult;
    for (int i = 0; i < mu; ++i) mult.push_back(scalar_mult_matrix(O.term(i), O, df, ord, budget));
    std::vector<PolyMatrix> blocks;
    for (int j = 0; j < delta; ++j) {
        PolyMatrix V(mu, mu, I.ring());
        for (int i = 0; i < mu; ++i)
            for (int r = 0; r < mu; ++r) V.at(r, i) = mult[i].at(mu - delta + j, r);
        blocks.push_back(std::move(V));
    }
    PolyMatrix W = PolyMatrix::stack(blocks);
    std::optional<FieldElem> det;
    bool nonzero_minor;
    if (delta == 1) {
        det = scalar_det(blocks[0]);
        nonzero_minor = !det->is_zero();
    } else {
        nonzero_minor = scalar_rank(W) == mu;
    }
    return CheckResult{nonzero_minor, std::move(O), std::move(det), std::move(W)};
}

CheckResult check_sgor(const Ideal& I, const Budget& budget) {
    OrderIdeal O = degree_filtered_basis(I, budget);
    if (!AffineHF::of_order_ideal(O).symmetric()) {
        return CheckResult{false, std::move(O), std::nullopt, PolyMatrix(0, 0, I.ring())};
    }
    return check_scb(I, budget);
}

BMResult buchberger_moller(const std::vector<std::vector<FieldElem>>& points, const Ring& xring,
                           const std::optional<OrderIdeal>& O_target) {
    int n = xring.nvars();
    size_t s = points.size();
    if (s == 0) throw InputError("no points");
    for (const auto& p : points)
        if (p.size() != static_cast<size_t>(n)) throw InputError("point arity mismatch");
    for (size_t a = 0; a < s; ++a)
        for (size_t b = a + 1; b < s; ++b) {
            bool same = true;
            for (int k = 0; k < n && same; ++k)
                if (!(points[a][k] == points[b][k])) same = false;
            if (same) throw InputError("duplicate point at positions " + std::to_string(a) + " and " +
                                       std::to_string(b));
        }
    TermOrdering ord = TermOrdering::degrevlex(n);
    Field field = xring.field();
    const FieldElem zero = FieldElem::zero(field);

    auto eval_term = [&](const Term& t, const std::vector<FieldElem>& p) {
        FieldElem v = FieldElem::one(field);
        for (int k = 0; k < n; ++k)
            for (int e = 0; e < t.exponent(k); ++e) v *= p[k];
        return v;
    };

    // rows: for each accepted basis term, its (reduced) evaluation vector
    // and the expression of that reduction over the basis terms.
    std::vector<Term> basis_terms;
    std::vector<std::vector<FieldElem>> rows;      // reduced evaluation vectors
    std::vector<int> pivot_col;                    // pivot position per row
    std::vector<Polynomial> row_expr;              // combination achieving the row
    std::vector<Term> lt_found;
    std::vector<Polynomial> gb;

    // Enumerate terms ascending; skip multiples of found leading terms. Once
    // a whole degree level is reducible, so is everything above it.
    for (int d = 0;; ++d) {
        if (d > static_cast<int>(s) * n + 1) throw MathError("Buchberger-Moller failed to terminate");
        std::vector<Term> level = terms_of_degree(d, n);
        std::sort(level.begin(), level.end(), [&](const Term& a, const Term& b) { return ord.less(a, b); });
        bool all_reducible = true;
        for (const Term& t : level) {
            bool reducible = false;
            for (const Term& lt : lt_found)
                if (lt.divides(t)) {
                    reducible = true;
                    break;
                }
            if (reducible) continue;
            all_reducible = false;
            // Evaluate and reduce against the pivot rows.
            std::vector<FieldElem> v(s, zero);
            for (size_t p = 0; p < s; ++p) v[p] = eval_term(t, points[p]);
            Polynomial expr = Polynomial::term(t, xring);
            for (size_t r = 0; r < rows.size(); ++r) {
                FieldElem c = v[pivot_col[r]];  // by value: the loop zeroes the slot
                if (c.is_zero()) continue;
                for (size_t p = 0; p < s; ++p) v[p] -= c * rows[r][p];
                expr -= row_expr[r] * c;
            }
            int piv = -1;
            for (size_t p = 0; p < s; ++p)
                if (!v[p].is_zero()) {
                    piv = static_cast<int>(p);
                    break;
                }
            if (piv < 0) {
                // t - (reduction tail) vanishes on all points.
                gb.push_back(expr);
                lt_found.push_back(t);
            } else {
                FieldElem inv = v[piv].inverse();
                for (size_t p = 0; p < s; ++p) v[p] *= inv;
                basis_terms.push_back(t);
                rows.push_back(std::move(v));
                pivot_col.push_back(piv);
                row_expr.push_back(expr * inv);
            }
        }
        if (all_reducible && d > 0) break;
    }

    // Interreduce tails: rewrite each generator's non-leading terms to their
    // normal form (they are already supported on the basis terms, which are
    // irreducible, so the basis is reduced by construction).
    Ideal I(gb, xring);
    OrderIdeal quotient = OrderIdeal::make_with_term_order(basis_terms, xring.var_names());

    BMResult result{I, quotient, std::nullopt};
    if (O_target) result.point = border_basis_point(I, *O_target);
    return result;
}

SchemePoint border_basis_point(const Ideal& I, const OrderIdeal& O, const Budget& budget) {
    const Ring& ring = I.ring();
    TermOrdering ord = TermOrdering::degrevlex(ring.nvars());
    OrderIdeal quotient = degree_filtered_basis(I, budget);
    int mu = O.mu();
    if (quotient.mu() != mu)
        throw InputError("order ideal size differs from the quotient dimension");
    // Change of basis: columns = NF of O's terms over the quotient basis.
    PolyMatrix M(mu, mu, ring);
    for (int i = 0; i < mu; ++i) {
        Polynomial nf = I.normal_form(Polynomial::term(O.term(i), ring), ord, budget);
        for (const auto& [u, c] : nf.terms()) {
            int row = quotient.index_of(u);
            if (row < 0) throw MathError("normal form outside the quotient basis");
            M.at(row, i) = Polynomial::constant(c, ring);
        }
    }
    Polynomial detM = matrix_det(M);
    if (detM.is_zero()) throw InputError("the requested order ideal is not a quotient basis");
    PolyMatrix adj = matrix_adjugate(M);
    FieldElem det = detM.terms()[0].second;

    SchemePoint gamma{O, ring.field(), std::vector<std::vector<FieldElem>>(
                                           mu, std::vector<FieldElem>(O.nu(), FieldElem::zero(ring.field())))};
    for (int j = 0; j < O.nu(); ++j) {
        Polynomial nf = I.normal_form(Polynomial::term(O.border_term(j), ring), ord, budget);
        std::vector<FieldElem> coords(mu, FieldElem::zero(ring.field()));
        for (const auto& [u, c] : nf.terms()) coords[quotient.index_of(u)] = c;
        // gamma column = M^{-1} * coords = adj * coords / det.
        for (int i = 0; i < mu; ++i) {
            FieldElem v = FieldElem::zero(ring.field());
            for (int k = 0; k < mu; ++k) {
                const Polynomial& a = adj.at(i, k);
                if (a.is_zero() || coords[k].is_zero()) continue;
                v += a.terms()[0].second * coords[k];
            }
            gamma.gamma[i][j] = v / det;
        }
    }
    return gamma;
}

std::vector<SchemePoint> enumerate_points(const OrderIdeal& O, long p, long long state_budget,
                                          int threads) {
    Field field = Field::prime(p);
    SchemeContext S(O, field);
    int cells = S.ncvars();
    double states = 1;
    for (int i = 0; i < cells; ++i) {
        states *= p;
        if (states > static_cast<double>(state_budget))
            throw ResourceLimitError("enumerate_points",
                                     "p^(mu*nu) exceeds the state budget of " + std::to_string(state_budget));
    }
    const auto& gens = S.defining_ideal(Flavor::Full).generators();
    // For each generator, the last grid cell it mentions (in cell order).
    std::vector<std::vector<int>> by_depth(cells);
    for (size_t g = 0; g < gens.size(); ++g) {
        int last = -1;
        for (int v : gens[g].support_vars()) last = std::max(last, v);
        if (last >= 0) by_depth[last].push_back(static_cast<int>(g));
    }

    auto search = [&](long first_value_lo, long first_value_hi, std::vector<SchemePoint>& out) {
        std::vector<FieldElem> assignment(cells, FieldElem::zero(field));
        std::map<int, FieldElem> partial;
        std::function<void(int)> rec = [&](int depth) {
            if (depth == cells) {
                SchemePoint pt{O, field,
                               std::vector<std::vector<FieldElem>>(
                                   S.mu(), std::vector<FieldElem>(S.nu(), FieldElem::zero(field)))};
                for (int i = 0; i < S.mu(); ++i)
                    for (int j = 0; j < S.nu(); ++j) pt.gamma[i][j] = assignment[S.cvar(i, j)];
                out.push_back(std::move(pt));
                return;
            }
            long lo = depth == 0 ? first_value_lo : 0;
            long hi = depth == 0 ? first_value_hi : p;
            for (long v = lo; v < hi; ++v) {
                assignment[depth] = FieldElem::from_int(v, field);
                partial[depth] = assignment[depth];
                bool ok = true;
                for (int g : by_depth[depth]) {
                    if (!gens[g].evaluated(partial).is_zero()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) rec(depth + 1);
                partial.erase(depth);
            }
        };
        rec(0);
    };

    std::vector<SchemePoint> out;
    if (cells == 0) return out;
    threads = std::max(1, std::min<int>(threads, static_cast<int>(p)));
    if (threads == 1) {
        search(0, p, out);
        return out;
    }
    // Partition the first cell's value range across workers.
    std::vector<std::vector<SchemePoint>> results(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        long lo = p * w / threads, hi = p * (w + 1) / threads;
        pool.emplace_back([&, w, lo, hi] { search(lo, hi, results[w]); });
    }
    for (auto& t : pool) t.join();
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

AffineHF hf_of_point(const SchemeContext& S, const SchemePoint& gamma) {
    // Rank sequence of the coordinate columns of all terms of degree <= i.
    int mu = S.mu();
    std::vector<long> prefix;
    for (int d = 0;; ++d) {
        std::vector<Term> terms = terms_up_to_degree(d, S.n());
        PolyMatrix M(mu, static_cast<int>(terms.size()), S.cring());
        for (size_t l = 0; l < terms.size(); ++l) M.set_column(static_cast<int>(l), S.coordinates_of_term(terms[l]));
        PolyMatrix Ms = specialize(M, S, gamma);
        int rank = scalar_rank(Ms);
        prefix.push_back(rank);
        if (rank == mu) break;
        if (d > mu + 1) throw MathError("Hilbert function failed to stabilize (point not on the scheme?)");
    }
    return AffineHF::from_prefix(std::move(prefix));
}

}  // namespace bbs
