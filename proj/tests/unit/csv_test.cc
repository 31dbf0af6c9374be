// Copyright 2026 The cqbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqbench/csv.h"

#include <gtest/gtest.h>

#include "cqbench/common.h"

namespace cqbench {
namespace {

TEST(CsvTest, QuotedFieldsAndLineNumbers) {
  auto rows = parse_csv("a,b,c\n\"x,1\",\"say \"\"hi\"\"\",\n\nlast,,z\n", "t");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].fields,
            (std::vector<std::string>{"x,1", "say \"hi\"", ""}));
  EXPECT_EQ(rows[1].line, 2);
  EXPECT_EQ(rows[2].line, 4);
}

TEST(CsvTest, EmbeddedNewline) {
  auto rows = parse_csv("\"two\nlines\",b\nc,d\n", "t");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].fields[0], "two\nlines");
  EXPECT_EQ(rows[1].line, 3);
}

TEST(CsvTest, EscapeRoundTrip) {
  std::vector<std::string> fields{"plain", "com,ma", "quo\"te", "new\nline"};
  auto rows = parse_csv(csv_line(fields), "t");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].fields, fields);
  EXPECT_EQ(csv_escape("plain"), "plain");
}

TEST(CsvTest, UnterminatedQuoteIsAnError) {
  EXPECT_THROW(parse_csv("a,\"b\n", "t"), ParseError);
}

TEST(CsvTest, HeaderLookup) {
  auto rows = parse_csv("cq_id,qp\n", "t");
  CsvHeader header(rows[0]);
  EXPECT_EQ(header.find("qp"), 1u);
  EXPECT_FALSE(header.find("nope").has_value());
  EXPECT_THROW(header.require("nope", "t"), ParseError);
}

}  // namespace
}  // namespace cqbench
