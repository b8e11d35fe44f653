// Copyright 2026 The fifo-routes Authors
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

#ifndef FIFO_ROUTES_CSV_H_
#define FIFO_ROUTES_CSV_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fifo_routes {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Comma-separated records with RFC 4180 quoting ("" escapes, quoted commas
// and line breaks). A leading UTF-8 byte-order mark is skipped. Line endings
// may be LF or CRLF.
class CsvReader {
 public:
  explicit CsvReader(std::string_view data);

  // Reads the next record into `fields`. Returns false at end of input.
  // Throws CsvError on an unterminated quoted field.
  bool next(std::vector<std::string>& fields);

  // 1-based line number where the last returned record started.
  std::size_t line() const { return record_line_; }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_CSV_H_
