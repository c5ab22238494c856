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

#include "bbs/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bbs {

Ring::Ring(std::vector<std::string> vars, Field field) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw InputError("empty variable name");
        if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
    }
    auto d = std::make_shared<Data>();
    d->vars = std::move(vars);
    d->field = field;
    data_ = std::move(d);
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (data_->vars[i] == name) return i;
    return -1;
}

bool Ring::compatible_with(const Ring& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    return data_->vars == other.data_->vars && data_->field == other.data_->field;
}

void Ring::require_compatible(const Ring& other, const std::string& where) const {
    if (!compatible_with(other)) throw ContextError("ring context mismatch in " + where);
}

Ring Ring::extended(const std::vector<std::string>& extra_vars) const {
    std::vector<std::string> vars = data_->vars;
    vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());
    return Ring(std::move(vars), data_->field);
}

void Term::recompute_cache() {
    deg_ = 0;
    mask_ = 0;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 0) throw InputError("negative exponent in term");
        deg_ += e_[i];
        if (e_[i]) mask_ |= 1ull << (i & 63);
    }
}

Term::Term(std::vector<int> exps) : e_(std::move(exps)) { recompute_cache(); }

Term Term::variable(int i, int nvars) {
    Term t(nvars);
    t.e_[i] = 1;
    t.deg_ = 1;
    t.mask_ = 1ull << (i & 63);
    return t;
}

Term Term::operator*(const Term& o) const {
    Term t(*this);
    for (int i = 0; i < nvars(); ++i) t.e_[i] += o.e_[i];
    t.deg_ += o.deg_;
    t.mask_ |= o.mask_;
    return t;
}

Term Term::quotient_into(const Term& o) const {
    Term t(o);
    for (int i = 0; i < nvars(); ++i) t.e_[i] -= e_[i];
    t.recompute_cache();
    return t;
}

Term Term::lcm(const Term& o) const {
    Term t(*this);
    t.deg_ = 0;
    t.mask_ |= o.mask_;
    for (int i = 0; i < nvars(); ++i) {
        t.e_[i] = std::max(e_[i], o.e_[i]);
        t.deg_ += t.e_[i];
    }
    return t;
}

Term Term::gcd(const Term& o) const {
    Term t(*this);
    for (int i = 0; i < nvars(); ++i) t.e_[i] = std::min(e_[i], o.e_[i]);
    t.recompute_cache();
    return t;
}

bool Term::coprime(const Term& o) const {
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Term Term::power(int k) const {
    Term t(*this);
    for (int i = 0; i < nvars(); ++i) t.e_[i] *= k;
    t.deg_ *= k;
    return t;
}

std::string Term::to_string(const Ring& ring) const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << "*";
        os << ring.var_name(i);
        if (e_[i] > 1) os << "^" << e_[i];
        first = false;
    }
    return os.str();
}

TermOrdering::TermOrdering(Kind kind, int nvars, std::vector<int> priority, std::vector<int> block)
    : kind_(kind), nvars_(nvars), priority_(std::move(priority)), block_(std::move(block)) {
    if (priority_.empty()) {
        priority_.resize(nvars_);
        std::iota(priority_.begin(), priority_.end(), 0);
    }
    if (static_cast<int>(priority_.size()) != nvars_)
        throw InputError("ordering priority permutation has wrong length");
    identity_priority_ = true;
    for (int i = 0; i < nvars_; ++i)
        if (priority_[i] != i) identity_priority_ = false;
    if (kind_ == Kind::Elim) {
        std::vector<bool> in_block(nvars_, false);
        for (int b : block_) in_block[b] = true;
        for (int i = 0; i < nvars_; ++i)
            if (!in_block[i]) rest_.push_back(i);
    }
}

TermOrdering TermOrdering::degrevlex(int nvars, std::vector<int> priority) {
    return TermOrdering(Kind::DegRevLex, nvars, std::move(priority), {});
}
TermOrdering TermOrdering::deglex(int nvars, std::vector<int> priority) {
    return TermOrdering(Kind::DegLex, nvars, std::move(priority), {});
}
TermOrdering TermOrdering::lex(int nvars, std::vector<int> priority) {
    return TermOrdering(Kind::Lex, nvars, std::move(priority), {});
}
TermOrdering TermOrdering::elim(int nvars, std::vector<int> block) {
    return TermOrdering(Kind::Elim, nvars, {}, std::move(block));
}

int TermOrdering::compare_block(const Term& a, const Term& b, const std::vector<int>& pri, Kind kind) const {
    long da = 0, db = 0;
    for (int v : pri) {
        da += a.exponent(v);
        db += b.exponent(v);
    }
    if (kind != Kind::Lex) {
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind == Kind::DegRevLex) {
        // Same degree: the rightmost (lowest-priority) nonzero difference
        // decides, with a negative difference meaning "greater".
        for (int k = static_cast<int>(pri.size()) - 1; k >= 0; --k) {
            int d = a.exponent(pri[k]) - b.exponent(pri[k]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    // Lex / DegLex tail: leftmost nonzero difference.
    for (int v : pri) {
        int d = a.exponent(v) - b.exponent(v);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

int TermOrdering::compare(const Term& a, const Term& b) const {
    // Fast path: DegRevLex with declaration-order priority (the common case).
    if (kind_ == Kind::DegRevLex && identity_priority_) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        for (int k = nvars_ - 1; k >= 0; --k) {
            int d = ea[k] - eb[k];
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    if (kind_ == Kind::Elim) {
        int c = compare_block(a, b, block_, Kind::DegRevLex);
        if (c != 0) return c;
        return compare_block(a, b, rest_, Kind::DegRevLex);
    }
    return compare_block(a, b, priority_, kind_);
}

std::string TermOrdering::name() const {
    switch (kind_) {
        case Kind::DegRevLex: return "DegRevLex";
        case Kind::DegLex: return "DegLex";
        case Kind::Lex: return "Lex";
        case Kind::Elim: return "Elim";
    }
    return "?";
}

std::string TermOrdering::key() const {
    std::ostringstream os;
    os << name() << "/" << nvars_ << "/";
    for (int p : priority_) os << p << ",";
    os << "/";
    for (int b : block_) os << b << ",";
    return os.str();
}

TermOrdering TermOrdering::parse(const std::string& name, int nvars) {
    if (name == "DegRevLex" || name == "degrevlex" || name.empty()) return degrevlex(nvars);
    if (name == "DegLex" || name == "deglex") return deglex(nvars);
    if (name == "Lex" || name == "lex") return lex(nvars);
    throw InputError("unknown term ordering '" + name + "'");
}

}  // namespace bbs
