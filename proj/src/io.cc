// Copyright 2026 The skirt Authors
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

#include "skirt/io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "skirt/error.h"

namespace skirt {
namespace {

// Reads lines, skipping blanks and '#' comments, tracking line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

[[noreturn]] void fail(const LineReader& reader, const std::string& what) {
  throw IoError("line " + std::to_string(reader.number()) + ": " + what);
}

int parse_int(const LineReader& reader, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 9) {
    fail(reader, "expected a non-negative integer, got '" + text + "'");
  }
  return std::stoi(text);
}

// "<keyword> k=v k=v ..." into a map; rejects unknown keys.
std::map<std::string, int> parse_header(const LineReader& reader,
                                        const std::string& line,
                                        const std::string& keyword,
                                        const std::vector<std::string>& allowed) {
  std::istringstream tokens(line);
  std::string word;
  tokens >> word;
  if (word != keyword) fail(reader, "expected a '" + keyword + "' header");
  std::map<std::string, int> values;
  while (tokens >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) fail(reader, "malformed header entry '" + word + "'");
    const std::string key = word.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(reader, "unknown header key '" + key + "'");
    }
    values[key] = parse_int(reader, word.substr(eq + 1));
  }
  return values;
}

Word parse_row(const LineReader& reader, const std::string& line, int n, int q,
               int offset) {
  std::istringstream tokens(line);
  std::vector<Symbol> symbols;
  std::string token;
  while (tokens >> token) {
    const int value = parse_int(reader, token) - offset;
    if (value < 0 || value >= q) {
      fail(reader, "symbol " + token + " outside the alphabet");
    }
    symbols.push_back(static_cast<Symbol>(value));
  }
  if (static_cast<int>(symbols.size()) != n) {
    fail(reader, "expected " + std::to_string(n) + " symbols, got " +
                     std::to_string(symbols.size()));
  }
  return Word(q, std::move(symbols));
}

}  // namespace

ParsedSet read_tuple_set(std::istream& in, bool one_based) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw IoError("empty tuple-set input");
  const auto header = parse_header(reader, line, "set", {"n", "q"});
  if (!header.contains("n") || !header.contains("q")) {
    fail(reader, "set header needs n= and q=");
  }
  const int n = header.at("n");
  const int q = header.at("q");
  if (n < 1 || q < 2) fail(reader, "set header needs n >= 1 and q >= 2");
  const int offset = one_based ? 1 : 0;
  ParsedSet parsed{.set = TupleSet(n, q), .offset = offset};
  while (reader.next(line)) {
    parsed.set.insert(parse_row(reader, line, n, q, offset));
  }
  parsed.duplicates = parsed.set.duplicates_dropped();
  return parsed;
}

void write_tuple_set(const TupleSet& set, std::ostream& out, int offset) {
  out << "set n=" << set.n() << " q=" << set.q() << '\n';
  for (const Word& w : set.words()) out << to_string(w, offset) << '\n';
  if (!out) throw IoError("failed writing tuple set");
}

ParsedArray read_array(std::istream& in, bool one_based) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw IoError("empty array input");
  const auto header = parse_header(reader, line, "array", {"N", "n", "q", "t"});
  for (const char* key : {"N", "n", "q"}) {
    if (!header.contains(key)) fail(reader, std::string("array header needs ") + key + "=");
  }
  const int rows = header.at("N");
  const int n = header.at("n");
  const int q = header.at("q");
  if (rows < 1 || n < 1 || q < 2) {
    fail(reader, "array header needs N >= 1, n >= 1, q >= 2");
  }
  const int offset = one_based ? 1 : 0;
  std::vector<Word> words;
  while (reader.next(line)) words.push_back(parse_row(reader, line, n, q, offset));
  if (static_cast<int>(words.size()) != rows) {
    throw IoError("array header declares N=" + std::to_string(rows) + " but " +
                  std::to_string(words.size()) + " rows follow");
  }
  ParsedArray parsed{.array = SkirtArray(n, q, std::move(words)), .offset = offset};
  if (header.contains("t")) parsed.claimed_strength = header.at("t");
  return parsed;
}

void write_array(const SkirtArray& array, std::ostream& out, int offset,
                 std::optional<int> strength) {
  out << "array N=" << array.num_rows() << " n=" << array.n() << " q=" << array.q();
  if (strength) out << " t=" << *strength;
  out << '\n';
  for (const Word& row : array.rows()) out << to_string(row, offset) << '\n';
  if (!out) throw IoError("failed writing array");
}

ParsedSet read_tuple_set_file(const std::string& path, bool one_based) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_tuple_set(in, one_based);
}

ParsedArray read_array_file(const std::string& path, bool one_based) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_array(in, one_based);
}

}  // namespace skirt
