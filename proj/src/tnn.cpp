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

#include "qexact/tnn.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace qexact {

Network::Network(unsigned n) : n_(n) { check_dimension(n); }

void Network::toggle(Mask u) {
    if (u.n() != n_) throw std::invalid_argument(fmt::format("gate width {} on a {}-input network", u.n(), n_));
    if (auto it = active_.find(u); it != active_.end())
        active_.erase(it);
    else
        active_.insert(u);
}

BooleanFunction Network::hypothesis() const { return function_of(Anf{n_, active_}); }

std::string Network::to_string() const {
    std::vector<std::uint32_t> bits;
    bits.reserve(active_.size());
    for (const auto& u : active_) bits.push_back(u.bits());
    return fmt::format("{}", fmt::join(bits, " "));
}

Network Network::parse(unsigned n, std::string_view text) {
    Network net(n);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        std::uint32_t bits = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), bits);
        if (ec != std::errc{}) throw std::invalid_argument(fmt::format("malformed gate list '{}'", text));
        const Mask u(bits, n);
        if (net.is_active(u)) throw std::invalid_argument(fmt::format("duplicate gate {} in '{}'", bits, text));
        net.toggle(u);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    return net;
}

Network toggle_gate(Network net, Mask u) {
    net.toggle(u);
    return net;
}

BooleanFunction hypothesis(const Network& net) { return net.hypothesis(); }

} // namespace qexact
