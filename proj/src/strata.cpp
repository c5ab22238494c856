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

#include "bbs/strata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bbs {

AffineHF AffineHF::from_prefix(std::vector<long> prefix) {
    if (prefix.empty()) throw InputError("empty Hilbert function prefix");
    for (long v : prefix)
        if (v < 0) throw InputError("negative Hilbert function value");
    AffineHF h;
    h.prefix_ = std::move(prefix);
    while (h.prefix_.size() > 1 && h.prefix_[h.prefix_.size() - 2] == h.prefix_.back())
        h.prefix_.pop_back();
    return h;
}

AffineHF AffineHF::of_order_ideal(const OrderIdeal& O) {
    int top = O.max_degree();
    std::vector<long> prefix(top + 1, 0);
    for (const Term& t : O.terms())
        for (int i = t.degree(); i <= top; ++i) ++prefix[i];
    return from_prefix(std::move(prefix));
}

AffineHF AffineHF::generic(int n, long mu) {
    if (n < 1 || mu < 1) throw InputError("generic HF needs n, mu >= 1");
    std::vector<long> prefix;
    long binom = 1;  // C(n+i, n) at i=0
    for (int i = 0;; ++i) {
        prefix.push_back(std::min(mu, binom));
        if (binom >= mu) break;
        binom = binom * (n + i + 1) / (i + 1);
    }
    return from_prefix(std::move(prefix));
}

AffineHF AffineHF::parse(const std::string& csv) {
    std::vector<long> prefix;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        prefix.push_back(std::stol(item));
    }
    return from_prefix(std::move(prefix));
}

long AffineHF::value(int i) const {
    if (i < 0) return 0;
    if (i >= static_cast<int>(prefix_.size())) return prefix_.back();
    return prefix_[i];
}

int AffineHF::regularity() const {
    for (int i = 0; i < static_cast<int>(prefix_.size()); ++i)
        if (prefix_[i] == prefix_.back()) return i;
    return 0;
}

std::vector<long> AffineHF::castelnuovo() const {
    std::vector<long> h;
    for (int i = 0; i <= regularity(); ++i) h.push_back(value(i) - value(i - 1));
    return h;
}

bool AffineHF::symmetric() const {
    std::vector<long> h = castelnuovo();
    int rho = static_cast<int>(h.size()) - 1;
    while (rho > 0 && h[rho] == 0) --rho;
    for (int i = 0; i <= rho; ++i)
        if (h[i] != h[rho - i]) return false;
    return true;
}

bool AffineHF::is_valid_hf() const {
    if (prefix_[0] != 1) return false;
    for (size_t i = 1; i < prefix_.size(); ++i)
        if (prefix_[i] < prefix_[i - 1]) return false;
    return true;
}

bool AffineHF::dominates(const AffineHF& o) const {
    int len = std::max(prefix_.size(), o.prefix_.size());
    for (int i = 0; i < len; ++i)
        if (value(i) < o.value(i)) return false;
    return true;
}

AffineHF AffineHF::decremented(int i) const {
    std::vector<long> prefix = prefix_;
    if (i >= static_cast<int>(prefix.size())) prefix.resize(i + 1, prefix_.back());
    if (prefix[i] == 0) throw MathError("cannot decrement a zero Hilbert value");
    --prefix[i];
    // keep at least one stable entry after position i
    if (i + 1 == static_cast<int>(prefix.size())) prefix.push_back(prefix_.back());
    return from_prefix(std::move(prefix));
}

std::string AffineHF::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < prefix_.size(); ++i) {
        if (i) os << ",";
        os << prefix_[i];
    }
    return os.str();
}

AffineHF hf_of_order_ideal(const OrderIdeal& O) { return AffineHF::of_order_ideal(O); }
bool dominates(const AffineHF& H, const AffineHF& Hp) { return H.dominates(Hp); }
AffineHF generic_hf(int n, long mu) { return AffineHF::generic(n, mu); }

Ideal bound_ideal(const SchemeContext& S, int k, long N, const Budget& budget) {
    if (k < 0 || N < 1) throw InputError("bound_ideal needs k >= 0 and N >= 1");
    const Ideal& base = S.defining_ideal(Flavor::Full);
    std::vector<Term> terms = terms_up_to_degree(k, S.n());
    int m = static_cast<int>(terms.size());
    if (N + 1 > std::min<long>(S.mu(), m)) return base;  // no minors of that size
    PolyMatrix M(S.mu(), m, S.cring());
    for (int l = 0; l < m; ++l) {
        budget.check_time("bound_ideal");
        M.set_column(l, S.coordinates_of_term(terms[l]));
    }
    std::vector<Polynomial> minors = matrix_minors(M, static_cast<int>(N) + 1);
    return base.plus(minors);
}

Ideal closure_stratum_ideal(const SchemeContext& S, const AffineHF& H, const Budget& budget) {
    AffineHF hf_o = AffineHF::of_order_ideal(S.order_ideal());
    if (!H.dominates(hf_o))
        throw DominationError("H = " + H.to_string() + " does not dominate HF^a_O = " + hf_o.to_string());
    int rho = H.regularity();
    std::vector<Polynomial> gens;
    std::set<std::string> seen;
    auto push = [&](const Polynomial& g) {
        if (!g.is_zero() && seen.insert(g.to_string()).second) gens.push_back(g);
    };
    for (const auto& g : S.defining_ideal(Flavor::Full).generators()) push(g);
    for (int i = 1; i <= rho - 1; ++i) {
        Ideal bi = bound_ideal(S, i, H.value(i), budget);
        for (const auto& g : bi.generators()) push(g);
    }
    return Ideal(std::move(gens), S.cring());
}

Ideal boundary_ideal(const SchemeContext& S, const AffineHF& H, const Budget& budget) {
    AffineHF hf_o = AffineHF::of_order_ideal(S.order_ideal());
    if (!H.dominates(hf_o))
        throw DominationError("H = " + H.to_string() + " does not dominate HF^a_O = " + hf_o.to_string());
    int rho = H.regularity();
    std::vector<Ideal> parts;
    for (int i = 1; i <= rho; ++i) {
        if (H.value(i) - 1 >= hf_o.value(i)) {
            parts.push_back(closure_stratum_ideal(S, H.decremented(i), budget));
        }
        // else J_i = <1>, dropped from the intersection
    }
    if (parts.empty()) return Ideal::unit(S.cring());
    Ideal result = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) result = ideal_intersection(result, parts[i], budget);
    return result;
}

namespace {
std::vector<OrderIdeal> enumerate_order_ideals(const AffineHF& H, int n,
                                               const std::vector<std::string>& xvars, bool first_only);
}

bool is_admissible(const AffineHF& H, int n) {
    if (!H.is_valid_hf()) return false;
    if (!AffineHF::generic(n, H.mu()).dominates(H)) return false;
    return !enumerate_order_ideals(H, n, {}, /*first_only=*/true).empty();
}

std::vector<AffineHF> all_strata(const OrderIdeal& O) {
    AffineHF lower = AffineHF::of_order_ideal(O);
    AffineHF top = AffineHF::generic(O.n(), O.mu());
    std::set<AffineHF> seen;
    std::vector<AffineHF> queue{top};
    seen.insert(top);
    while (!queue.empty()) {
        AffineHF h = queue.back();
        queue.pop_back();
        int rho = h.regularity();
        for (int i = 1; i <= rho; ++i) {
            if (h.value(i) - 1 < lower.value(i)) continue;
            AffineHF next = h.decremented(i);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<AffineHF> out;
    for (const auto& h : seen)
        if (is_admissible(h, O.n())) out.push_back(h);
    // generic first: descending prefix order
    std::sort(out.begin(), out.end(), [](const AffineHF& a, const AffineHF& b) {
        return b.prefix() < a.prefix();
    });
    return out;
}

namespace {

std::vector<OrderIdeal> enumerate_order_ideals(const AffineHF& H, int n,
                                               const std::vector<std::string>& xvars, bool first_only) {
    std::vector<std::string> names = xvars;
    if (names.empty()) {
        static const char* defaults[] = {"x", "y", "z", "w", "u", "v"};
        for (int i = 0; i < n; ++i)
            names.push_back(i < 6 ? defaults[i] : "x" + std::to_string(i + 1));
    }
    std::vector<OrderIdeal> out;
    if (!H.is_valid_hf()) return out;
    std::vector<long> h;
    int rho = H.regularity();
    for (int i = 0; i <= rho; ++i) h.push_back(H.value(i) - H.value(i - 1));
    if (h[0] != 1) return out;

    std::vector<Term> chosen{Term::one(n)};
    std::set<Term> chosen_set{Term::one(n)};

    std::function<bool(int)> rec = [&](int level) -> bool {
        if (level > rho) {
            out.push_back(OrderIdeal::make(chosen, names));
            return first_only;
        }
        long want = h[level];
        // Candidates: degree-level terms whose one-step divisors were chosen.
        std::vector<Term> candidates;
        for (const Term& t : terms_of_degree(level, n)) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
                if (t.exponent(k) == 0) continue;
                if (!chosen_set.count(Term::variable(k, n).quotient_into(t))) ok = false;
            }
            if (ok) candidates.push_back(t);
        }
        long m = static_cast<long>(candidates.size());
        if (want > m) return false;
        if (want == 0) {
            // Hilbert function ends here; nothing may be chosen later either.
            bool later = false;
            for (int i = level; i <= rho; ++i)
                if (h[i] > 0) later = true;
            if (later) return false;
            out.push_back(OrderIdeal::make(chosen, names));
            return first_only;
        }
        // Subsets in lexicographic order over the descending candidate list.
        std::vector<int> idx(want);
        for (long i = 0; i < want; ++i) idx[i] = static_cast<int>(i);
        auto advance = [&]() {
            for (long i = want - 1; i >= 0; --i) {
                if (idx[i] < m - want + i) {
                    ++idx[i];
                    for (long j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (long i = 0; i < want; ++i) {
                chosen.push_back(candidates[idx[i]]);
                chosen_set.insert(candidates[idx[i]]);
            }
            bool stop = rec(level + 1);
            for (long i = 0; i < want; ++i) {
                chosen_set.erase(chosen.back());
                chosen.pop_back();
            }
            if (stop) return true;
        } while (advance());
        return false;
    };
    rec(1);
    return out;
}

}  // namespace

std::vector<OrderIdeal> order_ideals_with_hf(const AffineHF& H, int n,
                                             const std::vector<std::string>& xvars) {
    return enumerate_order_ideals(H, n, xvars, false);
}

}  // namespace bbs
