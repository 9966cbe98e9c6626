// Copyright 2026 The qexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qexact/rng.hpp"

namespace qexact {

/// Largest supported input dimension. Truth tables are dense, so 2^16
/// entries is the practical ceiling.
inline constexpr unsigned kMaxVariables = 16;

/// An n-bit input word. Bit i is variable i. Also used as the index set
/// 1_u of a monomial or filter generator.
class Mask {
public:
    constexpr Mask() = default;
    Mask(std::uint32_t bits, unsigned n);

    static Mask zero(unsigned n) { return Mask(0, n); }
    static Mask full(unsigned n) { return Mask((1u << n) - 1u, n); }

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr unsigned n() const noexcept { return n_; }
    unsigned weight() const noexcept;
    constexpr bool test(unsigned i) const noexcept { return ((bits_ >> i) & 1u) != 0; }

    Mask flipped(unsigned i) const { return Mask(bits_ ^ (1u << i), n_); }

    /// Bit string with variable 0 first, e.g. "101" for bits {0, 2}.
    std::string to_string() const;

    friend constexpr auto operator<=>(const Mask&, const Mask&) = default;

private:
    unsigned n_ = 1;
    std::uint32_t bits_ = 0;
};

/// A total function on n-bit inputs, stored as a packed truth table
/// indexed by the integer value of the input mask.
class BooleanFunction {
public:
    /// The constant-zero function on n variables.
    explicit BooleanFunction(unsigned n);

    /// values[x] is f(x); values.size() must be 2^n.
    static BooleanFunction from_values(unsigned n, std::span<const int> values);
    static BooleanFunction from_values(unsigned n, std::initializer_list<int> values);

    template <typename Predicate>
    static BooleanFunction from_predicate(unsigned n, Predicate&& pred) {
        BooleanFunction f(n);
        for (std::uint32_t x = 0; x < f.size(); ++x)
            if (pred(x)) f.set(x, true);
        return f;
    }

    /// Uniformly random truth table.
    static BooleanFunction random(unsigned n, Rng& rng);

    /// Parse the "n=<n>;tt=0x<hex>" form produced by to_string().
    static BooleanFunction parse(std::string_view text);

    unsigned n() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }

    bool at(std::uint32_t x) const { return ((words_[x >> 6] >> (x & 63)) & 1u) != 0; }
    void set(std::uint32_t x, bool value);
    bool operator()(Mask x) const;

    std::size_t count_ones() const noexcept;
    bool is_zero() const noexcept;
    /// f(0) = 0.
    bool is_positive() const noexcept { return !at(0); }

    BooleanFunction& operator^=(const BooleanFunction& other);
    friend BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) { return a ^= b; }
    /// Pointwise complement.
    BooleanFunction operator~() const;

    /// "n=3;tt=0x6A": truth table as hex, entry x at bit x.
    std::string to_string() const;

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    void clear_padding() noexcept;

    unsigned n_;
    std::vector<std::uint64_t> words_;
};

/// Algebraic normal form: f equals the XOR of the monomials m_u.
struct Anf {
    unsigned n = 1;
    std::set<Mask> monomials;

    friend bool operator==(const Anf&, const Anf&) = default;
};

bool eval(const BooleanFunction& f, Mask x);

/// m_u(x) = 1 iff every bit of u is set in x, i.e. x lies in the filter of u.
bool monomial_eval(Mask u, Mask x);

/// Truth table of the monomial m_u.
BooleanFunction monomial(Mask u);

Anf anf_of(const BooleanFunction& f);
BooleanFunction function_of(const Anf& a);

/// The inputs on which c and h disagree, in increasing order.
std::vector<Mask> error_set(const BooleanFunction& c, const BooleanFunction& h);

/// Indices i such that flipping bit i changes f somewhere, ascending.
std::vector<unsigned> relevant_variables(const BooleanFunction& f);

/// Random function in the positive k-junta class: a uniformly random
/// k-subset of variables and a uniformly random nonzero table on it that
/// vanishes at the all-zero input. Requires 1 <= k < n.
BooleanFunction random_positive_kjunta(unsigned n, unsigned k, Rng& rng);

/// Throws std::invalid_argument when n is outside [1, kMaxVariables].
void check_dimension(unsigned n);

} // namespace qexact
