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

#ifndef BBS_RING_HPP
#define BBS_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "bbs/coeff.hpp"
#include "bbs/error.hpp"

namespace bbs {

/// Ring context: a named variable universe over a coefficient field.
/// One ring may hold several blocks (x-variables, c-variables, auxiliaries);
/// operations declare which block they use by variable index.
class Ring {
  public:
    Ring() = default;
    Ring(std::vector<std::string> vars, Field field);

    int nvars() const { return static_cast<int>(data_->vars.size()); }
    const std::string& var_name(int i) const { return data_->vars[i]; }
    const std::vector<std::string>& var_names() const { return data_->vars; }
    const Field& field() const { return data_->field; }
    /// Index of a named variable, or -1.
    int var_index(const std::string& name) const;

    /// Same underlying context (pointer identity or identical content).
    bool compatible_with(const Ring& other) const;
    void require_compatible(const Ring& other, const std::string& where) const;

    /// A ring with the given variables appended (names must be fresh).
    Ring extended(const std::vector<std::string>& extra_vars) const;

    bool valid() const { return data_ != nullptr; }

  private:
    struct Data {
        std::vector<std::string> vars;
        Field field;
    };
    std::shared_ptr<const Data> data_;
};

/// A power product over a ring's variable list: dense exponent vector with
/// cached total degree and a folded support mask (divisibility prescreen).
/// Ring context is implicit (vector length).
class Term {
  public:
    Term() : deg_(0), mask_(0) {}
    explicit Term(int nvars) : e_(nvars, 0), deg_(0), mask_(0) {}
    explicit Term(std::vector<int> exps);

    static Term variable(int i, int nvars);
    static Term one(int nvars) { return Term(nvars); }

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exponent(int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Term operator*(const Term& o) const;
    /// Componentwise <=.
    bool divides(const Term& o) const {
        if (deg_ > o.deg_ || (mask_ & ~o.mask_)) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// Exact quotient; requires divides.
    Term quotient_into(const Term& o) const;
    Term lcm(const Term& o) const;
    Term gcd(const Term& o) const;
    bool coprime(const Term& o) const;
    Term power(int k) const;

    bool operator==(const Term& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Term& o) const { return !(*this == o); }
    /// Storage order only (plain lex on the exponent vector); not a term ordering.
    bool operator<(const Term& o) const { return e_ < o.e_; }

    std::string to_string(const Ring& ring) const;

  private:
    void recompute_cache();
    std::vector<int> e_;
    int deg_;
    uint64_t mask_;
};

/// A total multiplication-compatible term ordering. DegRevLex and DegLex are
/// degree compatible. Elim(block) makes every term meeting the block exceed
/// every term without (block compared by DegRevLex, then the rest).
class TermOrdering {
  public:
    enum class Kind { DegRevLex, DegLex, Lex, Elim };

    /// Priority lists rank variables from highest to lowest; defaults to
    /// declaration order.
    static TermOrdering degrevlex(int nvars, std::vector<int> priority = {});
    static TermOrdering deglex(int nvars, std::vector<int> priority = {});
    static TermOrdering lex(int nvars, std::vector<int> priority = {});
    /// Eliminates the given variable block.
    static TermOrdering elim(int nvars, std::vector<int> block);

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<int>& priority() const { return priority_; }
    const std::vector<int>& elim_block() const { return block_; }
    bool degree_compatible() const { return kind_ == Kind::DegRevLex || kind_ == Kind::DegLex; }

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Term& a, const Term& b) const;
    bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }
    bool greater(const Term& a, const Term& b) const { return compare(a, b) > 0; }

    /// Stable identity for GB caching.
    std::string key() const;
    std::string name() const;
    static TermOrdering parse(const std::string& name, int nvars);

  private:
    TermOrdering(Kind kind, int nvars, std::vector<int> priority, std::vector<int> block);
    int compare_block(const Term& a, const Term& b, const std::vector<int>& pri, Kind kind) const;

    Kind kind_;
    int nvars_;
    bool identity_priority_ = false;
    std::vector<int> priority_;   // ranks: priority_[0] = highest variable index
    std::vector<int> block_;      // Elim: first block (variable indices)
    std::vector<int> rest_;       // Elim: complement, in declaration order
};

}  // namespace bbs

#endif
