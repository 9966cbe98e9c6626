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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qexact/boolfun.hpp"
#include "qexact/rng.hpp"

using namespace qexact;

namespace {

Mask m(unsigned bits, unsigned n) { return Mask(bits, n); }

// Bit strings in these tests list variable 0 first, as Mask::to_string does.
Mask from_string(const char* s) {
    unsigned bits = 0, n = 0;
    for (; s[n]; ++n)
        if (s[n] == '1') bits |= 1u << n;
    return Mask(bits, n);
}

const auto and2 = BooleanFunction::from_values(2, {0, 0, 0, 1});
const auto parity2 = BooleanFunction::from_values(2, {0, 1, 1, 0});

} // namespace

TEST_CASE("mask construction and accessors") {
    const Mask u = from_string("101");
    CHECK(u.bits() == 5u);
    CHECK(u.n() == 3u);
    CHECK(u.weight() == 2u);
    CHECK(u.test(0));
    CHECK_FALSE(u.test(1));
    CHECK(u.to_string() == "101");
    CHECK(u.flipped(1).to_string() == "111");
    CHECK(Mask::full(4).bits() == 15u);
    CHECK(Mask::zero(4).weight() == 0u);
    CHECK_THROWS_AS(Mask(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(Mask(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Mask(0, kMaxVariables + 1), std::invalid_argument);
}

TEST_CASE("eval on small tables") {
    CHECK(eval(and2, from_string("11")));
    CHECK_FALSE(eval(and2, from_string("10")));
    CHECK_FALSE(eval(BooleanFunction(3), m(5, 3)));
    CHECK(eval(parity2, from_string("10")));
    CHECK_THROWS_AS(eval(and2, m(1, 3)), std::invalid_argument);
}

TEST_CASE("monomial_eval is the filter test") {
    CHECK(monomial_eval(from_string("101"), from_string("111")));
    CHECK_FALSE(monomial_eval(from_string("101"), from_string("011")));
    for (unsigned x = 0; x < 8; ++x) CHECK(monomial_eval(m(0, 3), m(x, 3)));
    CHECK_THROWS_AS(monomial_eval(m(1, 2), m(1, 3)), std::invalid_argument);
}

TEST_CASE("filter transitivity, exhaustive for n <= 5") {
    std::size_t failures = 0;
    for (unsigned n = 1; n <= 5; ++n) {
        const unsigned size = 1u << n;
        for (unsigned u = 0; u < size; ++u)
            for (unsigned v = 0; v < size; ++v) {
                if (!monomial_eval(m(u, n), m(v, n))) continue;
                for (unsigned w = 0; w < size; ++w)
                    if (monomial_eval(m(v, n), m(w, n)) && !monomial_eval(m(u, n), m(w, n))) ++failures;
            }
    }
    CHECK(failures == 0);
}

TEST_CASE("truth table round trips through the hex form") {
    const auto f = BooleanFunction::from_values(3, {0, 1, 0, 1, 0, 1, 1, 0});
    CHECK(f.to_string() == "n=3;tt=0x6A");
    CHECK(BooleanFunction::parse("n=3;tt=0x6A") == f);
    CHECK(BooleanFunction::parse("n=3;tt=0x6a") == f);
    Rng rng(11);
    for (unsigned n = 1; n <= 10; ++n) {
        const auto g = BooleanFunction::random(n, rng);
        CHECK(BooleanFunction::parse(g.to_string()) == g);
    }
    CHECK_THROWS_AS(BooleanFunction::parse("n=3;tt=0x16A"), std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction::parse("n=2;tt=0x1F"), std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction::parse("tt=0x6A"), std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction::parse("n=3;tt=0xZZ"), std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction::parse("n=1;tt=0x4"), std::invalid_argument);
}

TEST_CASE("function algebra") {
    CHECK((and2 ^ parity2) == BooleanFunction::from_values(2, {0, 1, 1, 1}));
    CHECK((~and2) == BooleanFunction::from_values(2, {1, 1, 1, 0}));
    CHECK((~BooleanFunction(7)).count_ones() == 128u);
    CHECK(BooleanFunction(7).is_zero());
    CHECK(and2.is_positive());
    CHECK_FALSE((~and2).is_positive());
    CHECK(parity2.count_ones() == 2u);
    CHECK_THROWS_AS(BooleanFunction::from_values(2, {0, 1, 1}), std::invalid_argument);
    BooleanFunction a(3);
    CHECK_THROWS_AS(a ^= and2, std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction(kMaxVariables + 1), std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction(0), std::invalid_argument);
}

TEST_CASE("anf of small functions") {
    CHECK(anf_of(parity2).monomials == std::set<Mask>{from_string("10"), from_string("01")});
    CHECK(anf_of(and2).monomials == std::set<Mask>{from_string("11")});
    CHECK(anf_of(BooleanFunction(4)).monomials.empty());
    const auto or2 = BooleanFunction::from_values(2, {0, 1, 1, 1});
    CHECK(anf_of(or2).monomials == std::set<Mask>{m(1, 2), m(2, 2), m(3, 2)});
}

TEST_CASE("Moebius transform agrees with the XOR-expansion oracle for n <= 6") {
    Rng rng(3);
    for (unsigned n = 1; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            const auto f = BooleanFunction::random(n, rng);
            const auto a = anf_of(f);
            CHECK(a.monomials == oracle::anf(f));
            CHECK(BooleanFunction::from_values(n, oracle::expand(n, a.monomials)) == f);
        }
}

TEST_CASE("Moebius round trip for n <= 12 and exhaustively for n <= 3") {
    Rng rng(5);
    for (unsigned n = 1; n <= 12; ++n)
        for (int t = 0; t < 4; ++t) {
            const auto f = BooleanFunction::random(n, rng);
            CHECK(function_of(anf_of(f)) == f);
        }
    std::size_t failures = 0;
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned tt = 0; tt < (1u << (1u << n)); ++tt) {
            const auto f = BooleanFunction::from_predicate(n, [tt](std::uint32_t x) { return (tt >> x) & 1u; });
            const auto a = anf_of(f);
            failures += function_of(a) != f;
            failures += f.is_positive() == a.monomials.contains(Mask::zero(n));
        }
    CHECK(failures == 0);
}

TEST_CASE("error sets") {
    CHECK(error_set(parity2, parity2).empty());
    CHECK(error_set(parity2, BooleanFunction(2)) == std::vector<Mask>{m(1, 2), m(2, 2)});
    CHECK(error_set(and2, ~and2).size() == 4u);
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        const auto c = BooleanFunction::random(5, rng), h = BooleanFunction::random(5, rng);
        const auto e = error_set(c, h);
        CHECK(e.size() == (c ^ h).count_ones());
        CHECK(std::is_sorted(e.begin(), e.end()));
        for (const auto& x : e) CHECK(c(x) != h(x));
    }
    CHECK_THROWS_AS(error_set(and2, BooleanFunction(3)), std::invalid_argument);
}

TEST_CASE("relevant variables") {
    CHECK(relevant_variables(BooleanFunction(4)).empty());
    CHECK(relevant_variables(and2) == std::vector<unsigned>{0, 1});
    const auto x3 = BooleanFunction::from_predicate(5, [](std::uint32_t x) { return (x >> 3) & 1u; });
    CHECK(relevant_variables(x3) == std::vector<unsigned>{3});
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        const auto f = BooleanFunction::random(6, rng);
        const auto r = relevant_variables(f);
        CHECK(std::set<unsigned>(r.begin(), r.end()) == oracle::relevant(f));
    }
}

TEST_CASE("random positive k-juntas") {
    Rng rng(2024);
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = 1; k < n; ++k)
            for (int t = 0; t < 10; ++t) {
                const auto f = random_positive_kjunta(n, k, rng);
                CHECK(f.is_positive());
                CHECK_FALSE(f.is_zero());
                const auto rho = oracle::relevant(f);
                CHECK(rho.size() <= k);
                for (const auto& u : anf_of(f).monomials) {
                    CHECK(u.weight() <= k);
                    CHECK(u.bits() != 0u);
                    for (unsigned i = 0; i < n; ++i)
                        if (u.test(i)) CHECK(rho.contains(i));
                }
            }
    Rng a(77), b(77);
    CHECK(random_positive_kjunta(6, 3, a) == random_positive_kjunta(6, 3, b));
    CHECK_THROWS_AS(random_positive_kjunta(5, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_positive_kjunta(5, 0, rng), std::invalid_argument);
}

TEST_CASE("odd-filter characterization of positive juntas, n <= 6") {
    Rng rng(8);
    std::size_t failures = 0;
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned k = 1; k < n; ++k)
            for (int t = 0; t < 10; ++t) {
                const auto c = random_positive_kjunta(n, k, rng);
                const auto principals = anf_of(c).monomials;
                for (std::uint32_t v = 0; v < c.size(); ++v) {
                    unsigned count = 0;
                    for (const auto& u : principals) count += monomial_eval(u, Mask(v, n));
                    failures += c.at(v) != (count % 2 == 1);
                }
            }
    CHECK(failures == 0);
}

TEST_CASE("toggling m_v on a one of c flips exactly the filter of v, n <= 5") {
    std::size_t failures = 0;
    Rng rng(12);
    for (unsigned n = 1; n <= 5; ++n)
        for (int t = 0; t < 12; ++t) {
            const auto c = BooleanFunction::random(n, rng);
            for (std::uint32_t v = 0; v < c.size(); ++v) {
                if (!c.at(v)) continue;
                const auto toggled = c ^ monomial(Mask(v, n));
                for (std::uint32_t w = 0; w < c.size(); ++w) {
                    const bool above = oracle::subset(v, w);
                    failures += toggled.at(w) != (above ? !c.at(w) : c.at(w));
                }
            }
        }
    CHECK(failures == 0);
}
