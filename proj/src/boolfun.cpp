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

#include "qexact/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace qexact {

void check_dimension(unsigned n) {
    if (n < 1 || n > kMaxVariables)
        throw std::invalid_argument(fmt::format("dimension {} outside [1, {}]", n, kMaxVariables));
}

namespace {

void check_same_dimension(unsigned a, unsigned b) {
    if (a != b) throw std::invalid_argument(fmt::format("dimension mismatch: {} vs {}", a, b));
}

std::size_t word_count(unsigned n) { return std::max<std::size_t>(1, (std::size_t{1} << n) / 64); }

} // namespace

Mask::Mask(std::uint32_t bits, unsigned n) : n_(n), bits_(bits) {
    check_dimension(n);
    if (bits >= (1u << n)) throw std::invalid_argument(fmt::format("mask {} does not fit in {} bits", bits, n));
}

unsigned Mask::weight() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

std::string Mask::to_string() const {
    std::string s(n_, '0');
    for (unsigned i = 0; i < n_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

BooleanFunction::BooleanFunction(unsigned n) : n_(n) {
    check_dimension(n);
    words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_values(unsigned n, std::span<const int> values) {
    BooleanFunction f(n);
    if (values.size() != f.size())
        throw std::invalid_argument(fmt::format("truth table needs {} entries, got {}", f.size(), values.size()));
    for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, values[x] != 0);
    return f;
}

BooleanFunction BooleanFunction::from_values(unsigned n, std::initializer_list<int> values) {
    return from_values(n, std::span<const int>(values.begin(), values.size()));
}

BooleanFunction BooleanFunction::random(unsigned n, Rng& rng) {
    BooleanFunction f(n);
    for (auto& w : f.words_) w = rng.next();
    f.clear_padding();
    return f;
}

void BooleanFunction::set(std::uint32_t x, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (value)
        words_[x >> 6] |= bit;
    else
        words_[x >> 6] &= ~bit;
}

bool BooleanFunction::operator()(Mask x) const {
    check_same_dimension(n_, x.n());
    return at(x.bits());
}

std::size_t BooleanFunction::count_ones() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BooleanFunction::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& other) {
    check_same_dimension(n_, other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BooleanFunction BooleanFunction::operator~() const {
    BooleanFunction f = *this;
    for (auto& w : f.words_) w = ~w;
    f.clear_padding();
    return f;
}

void BooleanFunction::clear_padding() noexcept {
    if (n_ < 6) words_[0] &= (std::uint64_t{1} << size()) - 1;
}

std::string BooleanFunction::to_string() const {
    // most significant nibble first
    const std::size_t nibbles = std::max<std::size_t>(1, size() / 4);
    std::string hex;
    hex.reserve(nibbles);
    for (std::size_t i = nibbles; i-- > 0;) {
        const unsigned nib = static_cast<unsigned>((words_[i / 16] >> ((i % 16) * 4)) & 0xF);
        hex.push_back("0123456789ABCDEF"[nib]);
    }
    return fmt::format("n={};tt=0x{}", n_, hex);
}

BooleanFunction BooleanFunction::parse(std::string_view text) {
    const auto fail = [&] { return std::invalid_argument(fmt::format("malformed function '{}'", text)); };
    if (!text.starts_with("n=")) throw fail();
    const auto semi = text.find(";tt=0x");
    if (semi == std::string_view::npos) throw fail();
    unsigned n = 0;
    const auto n_text = text.substr(2, semi - 2);
    auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    if (ec != std::errc{} || ptr != n_text.data() + n_text.size()) throw fail();
    BooleanFunction f(n);
    const auto hex = text.substr(semi + 6);
    const std::size_t nibbles = std::max<std::size_t>(1, f.size() / 4);
    if (hex.size() != nibbles) throw fail();
    for (std::size_t pos = 0; pos < nibbles; ++pos) {
        const char ch = hex[pos];
        unsigned nib = 0;
        if (ch >= '0' && ch <= '9')
            nib = static_cast<unsigned>(ch - '0');
        else if (ch >= 'A' && ch <= 'F')
            nib = static_cast<unsigned>(ch - 'A' + 10);
        else if (ch >= 'a' && ch <= 'f')
            nib = static_cast<unsigned>(ch - 'a' + 10);
        else
            throw fail();
        const std::size_t i = nibbles - 1 - pos;
        f.words_[i / 16] |= std::uint64_t{nib} << ((i % 16) * 4);
    }
    const auto before = f.words_;
    f.clear_padding();
    if (before != f.words_) throw fail();
    return f;
}

bool eval(const BooleanFunction& f, Mask x) { return f(x); }

bool monomial_eval(Mask u, Mask x) {
    check_same_dimension(u.n(), x.n());
    return (u.bits() & ~x.bits()) == 0;
}

BooleanFunction monomial(Mask u) {
    return BooleanFunction::from_predicate(u.n(), [u](std::uint32_t x) { return (u.bits() & ~x) == 0; });
}

namespace {

// In-place Moebius transform over GF(2); it is its own inverse.
void moebius(std::vector<std::uint8_t>& a, unsigned n) {
    for (unsigned i = 0; i < n; ++i) {
        const std::uint32_t bit = 1u << i;
        for (std::uint32_t x = 0; x < a.size(); ++x)
            if (x & bit) a[x] ^= a[x ^ bit];
    }
}

} // namespace

Anf anf_of(const BooleanFunction& f) {
    std::vector<std::uint8_t> coeff(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) coeff[x] = f.at(x) ? 1 : 0;
    moebius(coeff, f.n());
    Anf a{f.n(), {}};
    for (std::uint32_t u = 0; u < coeff.size(); ++u)
        if (coeff[u]) a.monomials.emplace_hint(a.monomials.end(), u, f.n());
    return a;
}

BooleanFunction function_of(const Anf& a) {
    check_dimension(a.n);
    std::vector<std::uint8_t> values(std::size_t{1} << a.n, 0);
    for (const auto& u : a.monomials) {
        check_same_dimension(a.n, u.n());
        values[u.bits()] = 1;
    }
    moebius(values, a.n);
    BooleanFunction f(a.n);
    for (std::uint32_t x = 0; x < values.size(); ++x)
        if (values[x]) f.set(x, true);
    return f;
}

std::vector<Mask> error_set(const BooleanFunction& c, const BooleanFunction& h) {
    const BooleanFunction diff = c ^ h;
    std::vector<Mask> out;
    out.reserve(diff.count_ones());
    for (std::uint32_t x = 0; x < diff.size(); ++x)
        if (diff.at(x)) out.emplace_back(x, c.n());
    return out;
}

std::vector<unsigned> relevant_variables(const BooleanFunction& f) {
    std::vector<unsigned> vars;
    for (unsigned i = 0; i < f.n(); ++i) {
        const std::uint32_t bit = 1u << i;
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            if (!(x & bit) && f.at(x) != f.at(x | bit)) {
                vars.push_back(i);
                break;
            }
        }
    }
    return vars;
}

BooleanFunction random_positive_kjunta(unsigned n, unsigned k, Rng& rng) {
    check_dimension(n);
    if (k < 1 || k >= n) throw std::invalid_argument(fmt::format("junta arity {} outside [1, {})", k, n));

    // partial Fisher-Yates for a uniform k-subset
    std::vector<unsigned> vars(n);
    for (unsigned i = 0; i < n; ++i) vars[i] = i;
    for (unsigned i = 0; i < k; ++i) std::swap(vars[i], vars[i + rng.below(n - i)]);
    std::vector<unsigned> support(vars.begin(), vars.begin() + k);

    // restricted table g on k bits with g(0) = 0 and g != 0
    const std::uint32_t restricted = 1u << k;
    std::vector<bool> g(restricted, false);
    bool nonzero = false;
    while (!nonzero) {
        for (std::uint32_t r = 1; r < restricted; ++r) {
            g[r] = rng.bit();
            nonzero = nonzero || g[r];
        }
    }

    return BooleanFunction::from_predicate(n, [&](std::uint32_t x) {
        std::uint32_t r = 0;
        for (unsigned j = 0; j < k; ++j)
            if ((x >> support[j]) & 1u) r |= 1u << j;
        return static_cast<bool>(g[r]);
    });
}

} // namespace qexact
