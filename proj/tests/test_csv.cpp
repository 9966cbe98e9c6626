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

#include <sstream>
#include <stdexcept>

#include "qexact/csv.hpp"

using namespace qexact;

TEST_CASE("writer uses CRLF and quotes only when needed") {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.write("a", 1, 2.5);
    csv.row({"x,y", "say \"hi\"", "line\nbreak", ""});
    CHECK(out.str() == "a,1,2.5\r\n\"x,y\",\"say \"\"hi\"\"\",\"line\nbreak\",\r\n");
}

TEST_CASE("parse round trip") {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.row({"name", "value"});
    csv.row({"plain", "1"});
    csv.row({"has,comma", "\"quoted\""});
    csv.row({"multi\r\nline", ""});
    const auto t = parse_csv(out.str());
    REQUIRE(t.rows.size() == 3u);
    CHECK(t.header == std::vector<std::string>{"name", "value"});
    CHECK(t.rows[1] == std::vector<std::string>{"has,comma", "\"quoted\""});
    CHECK(t.rows[2][0] == "multi\r\nline");
    CHECK(t.rows[2][1].empty());
    CHECK(t.column("value") == 1u);
    CHECK_THROWS_AS(t.column("missing"), std::out_of_range);
}

TEST_CASE("LF-only input and a missing trailing newline") {
    const auto t = parse_csv("a,b\n1,2\n3,4");
    CHECK(t.rows.size() == 2u);
    CHECK(t.rows[1][1] == "4");
    CHECK(parse_csv("").header.empty());
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_csv("a,b\r\n1\r\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("a\r\n\"open\r\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_csv("/nonexistent/file.csv"), std::runtime_error);
}
