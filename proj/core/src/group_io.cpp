// Copyright 2026 The kgeodetic Authors
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

#include "kgeodetic/group_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "kgeodetic/error.hpp"

namespace kgeodetic {

namespace {

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == '(' || c == ')') {
      flush();
      out.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

class Tokens {
 public:
  Tokens(std::vector<std::string> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  bool done() const { return pos_ == toks_.size(); }
  const std::string& peek() const {
    if (done()) {
      fail("unexpected end of line");
    }
    return toks_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }
  std::int64_t integer() {
    std::string t = next();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) {
      fail("expected an integer, got '" + t + "'");
    }
    return v;
  }
  void expect(std::string_view t) {
    std::string got = next();
    if (got != t) {
      fail("expected '" + std::string(t) + "', got '" + got + "'");
    }
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }
  std::size_t line() const { return line_; }

 private:
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

bool is_integer(const std::string& t) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  return ec == std::errc() && p == t.data() + t.size();
}

std::vector<std::uint64_t> parse_orders(std::string_view list, const Tokens& toks) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    std::string_view item = list.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
      toks.fail("bad factor order list '" + std::string(list) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

GroupSpec parse_plain(Tokens& toks) {
  std::size_t rank = 0;
  std::vector<std::uint64_t> orders;
  while (!toks.done() && (toks.peek().starts_with("Z=") || toks.peek().starts_with("factors="))) {
    std::string t = toks.next();
    if (t.starts_with("Z=")) {
      std::string_view v = std::string_view(t).substr(2);
      std::size_t r = 0;
      auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), r);
      if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
        toks.fail("bad free rank '" + t + "'");
      }
      rank = r;
    } else {
      orders = parse_orders(std::string_view(t).substr(8), toks);
    }
  }
  return GroupSpec::plain(rank, std::move(orders));
}

GroupSpec parse_simple_spec(Tokens& toks) {
  std::string kind = toks.next();
  if (kind == "cyclic") {
    std::int64_t n = toks.integer();
    if (n < 0) {
      toks.fail("cyclic order must be nonnegative");
    }
    return GroupSpec::cyclic(static_cast<std::uint64_t>(n));
  }
  if (kind == "plain") {
    return parse_plain(toks);
  }
  toks.fail("unknown group kind '" + kind + "'");
}

Element parse_expr(const GroupSpec& spec, Tokens& toks) {
  std::string head = toks.next();
  try {
    if (head == "id") {
      return spec.identity();
    }
    if (head == "pow") {
      return spec.cyclic_element(toks.integer());
    }
    if (head == "idx") {
      std::int64_t i = toks.integer();
      if (i < 0) {
        toks.fail("negative table index");
      }
      return spec.table_element(static_cast<std::uint32_t>(i));
    }
    if (head == "syl") {
      std::vector<Syllable> syls;
      while (!toks.done() && toks.peek() != ")") {
        std::int64_t f = toks.integer();
        std::int64_t e = toks.integer();
        if (f < 0) {
          toks.fail("negative factor index");
        }
        syls.push_back({static_cast<std::size_t>(f), e});
      }
      return spec.plain_element(syls);
    }
    if (head == "tuple") {
      if (spec.kind() != GroupSpec::Kind::product) {
        toks.fail("'tuple' needs a product group");
      }
      const auto& factors = spec.factors();
      std::vector<Element> parts;
      for (const auto& f : factors) {
        if (is_integer(toks.peek())) {
          parts.push_back(f.cyclic_element(toks.integer()));
        } else {
          toks.expect("(");
          parts.push_back(parse_expr(f, toks));
          toks.expect(")");
        }
      }
      return spec.product_element(parts);
    }
  } catch (const InvalidArgument& e) {
    toks.fail(e.what());
  }
  toks.fail("unknown element expression '" + head + "'");
}

}  // namespace

Element parse_element(const GroupSpec& spec, std::string_view expr) {
  Tokens toks(tokenize(expr), 0);
  Element e = parse_expr(spec, toks);
  if (!toks.done()) {
    toks.fail("trailing tokens in element expression");
  }
  return e;
}

GroupFile parse_group(std::istream& in, std::uint64_t seed) {
  std::optional<GroupSpec> spec;
  std::vector<std::pair<std::string, std::vector<std::string>>> gen_lines;
  std::vector<std::size_t> gen_line_numbers;
  std::optional<std::size_t> radius;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    Tokens toks(tokenize(raw), line);
    if (toks.done()) {
      continue;
    }
    std::string keyword = toks.next();
    if (keyword == "group") {
      if (spec) {
        toks.fail("duplicate group line");
      }
      std::string kind = toks.peek();
      const std::size_t group_line = line;
      try {
        if (kind == "product") {
          toks.next();
          std::vector<GroupSpec> factors;
          while (!toks.done()) {
            factors.push_back(parse_simple_spec(toks));
          }
          spec = GroupSpec::product(std::move(factors));
        } else if (kind == "table") {
          toks.next();
          std::int64_t n = toks.integer();
          if (n <= 0) {
            toks.fail("table size must be positive");
          }
          std::vector<std::vector<std::uint32_t>> rows;
          while (rows.size() < static_cast<std::size_t>(n)) {
            if (!std::getline(in, raw)) {
              throw ParseError("table ends early", line);
            }
            ++line;
            Tokens row(tokenize(raw), line);
            if (row.done()) {
              continue;
            }
            std::vector<std::uint32_t> r;
            while (!row.done()) {
              std::int64_t x = row.integer();
              if (x < 0 || x >= n) {
                row.fail("table entry out of range");
              }
              r.push_back(static_cast<std::uint32_t>(x));
            }
            if (r.size() != static_cast<std::size_t>(n)) {
              row.fail("table row has wrong length");
            }
            rows.push_back(std::move(r));
          }
          spec = GroupSpec::table(rows, seed);
        } else {
          spec = parse_simple_spec(toks);
        }
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), group_line);
      }
      if (!toks.done()) {
        toks.fail("trailing tokens after group description");
      }
    } else if (keyword == "gen") {
      std::string label = toks.next();
      std::vector<std::string> rest;
      while (!toks.done()) {
        rest.push_back(toks.next());
      }
      gen_lines.emplace_back(std::move(label), std::move(rest));
      gen_line_numbers.push_back(line);
    } else if (keyword == "ball") {
      std::string t = toks.next();
      if (!t.starts_with("R=")) {
        toks.fail("expected 'ball R=<radius>'");
      }
      std::string_view v = std::string_view(t).substr(2);
      std::size_t r = 0;
      auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), r);
      if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
        toks.fail("bad radius '" + t + "'");
      }
      radius = r;
    } else {
      toks.fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!spec) {
    throw ParseError("missing 'group' line");
  }
  if (gen_lines.empty()) {
    return GroupFile{*spec, standard_generators(*spec), radius};
  }
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < gen_lines.size(); ++i) {
    Tokens toks(gen_lines[i].second, gen_line_numbers[i]);
    Element e = parse_expr(*spec, toks);
    if (!toks.done()) {
      toks.fail("trailing tokens in element expression");
    }
    gens.push_back({gen_lines[i].first, std::move(e)});
  }
  try {
    return GroupFile{*spec, validate_genset(*spec, std::move(gens)), radius};
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

GroupFile parse_group(std::string_view text, std::uint64_t seed) {
  std::istringstream in{std::string(text)};
  return parse_group(in, seed);
}

GroupFile read_group_file(const std::string& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open group file '" + path + "'");
  }
  return parse_group(in, seed);
}

}  // namespace kgeodetic
