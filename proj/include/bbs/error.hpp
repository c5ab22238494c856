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

#ifndef BBS_ERROR_HPP
#define BBS_ERROR_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace bbs {

/// Bad user input (unparsable term, invalid order ideal, duplicate points, ...).
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched ring or field contexts between operands.
class ContextError : public std::runtime_error {
  public:
    explicit ContextError(const std::string& what) : std::runtime_error(what) {}
};

/// Undefined mathematical operation (leading term of 0, division by zero, ...).
class MathError : public std::runtime_error {
  public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// A Hilbert function fails to dominate where an algorithm requires it.
class DominationError : public std::runtime_error {
  public:
    explicit DominationError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured degree cap or wall-clock budget was exceeded. The computation
/// is restartable with higher limits; `where` names the offending call.
class ResourceLimitError : public std::runtime_error {
  public:
    ResourceLimitError(const std::string& where, const std::string& detail)
        : std::runtime_error("resource limit in " + where + ": " + detail), where_(where) {}
    const std::string& where() const { return where_; }

  private:
    std::string where_;
};

/// Per-computation resource budget. Degree cap bounds the degree of any
/// S-polynomial lcm handled by Buchberger; seconds bound wall-clock time.
struct Budget {
    std::optional<int> max_degree;
    std::optional<double> seconds;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    static Budget unlimited() { return Budget{}; }
    static Budget of(std::optional<int> deg, std::optional<double> secs) {
        Budget b;
        b.max_degree = deg;
        b.seconds = secs;
        return b;
    }

    void check_time(const std::string& where) const {
        if (!seconds) return;
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > *seconds)
            throw ResourceLimitError(where, "wall-clock budget of " + std::to_string(*seconds) + " s exceeded");
    }
    void check_degree(int deg, const std::string& where) const {
        if (max_degree && deg > *max_degree)
            throw ResourceLimitError(where, "degree " + std::to_string(deg) + " exceeds cap " +
                                                std::to_string(*max_degree));
    }
};

}  // namespace bbs

#endif
