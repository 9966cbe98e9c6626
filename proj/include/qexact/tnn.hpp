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

#include <set>
#include <string>
#include <string_view>

#include "qexact/boolfun.hpp"

namespace qexact {

/// The tunable network. Each active gate G_u XORs the monomial m_u onto the
/// read-out register, so the network expresses h = XOR of m_u over active u,
/// and acts on examples as T(h)|x, b> = |x, b ^ h(x)>.
class Network {
public:
    explicit Network(unsigned n);

    unsigned n() const noexcept { return n_; }
    const std::set<Mask>& active_gates() const noexcept { return active_; }
    bool is_active(Mask u) const { return active_.contains(u); }

    /// Flip the membership of u. A second toggle of the same u undoes the first.
    void toggle(Mask u);

    /// Toggle every distinct mask in the range once; duplicates collapse.
    template <typename Range>
    void toggle_distinct(const Range& masks) {
        const std::set<Mask> distinct(std::begin(masks), std::end(masks));
        for (const auto& u : distinct) toggle(u);
    }

    BooleanFunction hypothesis() const;

    /// Sorted mask integers separated by spaces, e.g. "1 2 3".
    std::string to_string() const;
    static Network parse(unsigned n, std::string_view text);

    friend bool operator==(const Network&, const Network&) = default;

private:
    unsigned n_;
    std::set<Mask> active_;
};

Network toggle_gate(Network net, Mask u);
BooleanFunction hypothesis(const Network& net);

} // namespace qexact
