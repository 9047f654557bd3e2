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

#include "kgeodetic/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <variant>

#include <boost/container_hash/hash.hpp>

#include "kgeodetic/error.hpp"

namespace kgeodetic {

namespace {

struct CyclicImpl {
  std::uint64_t n;  // 0 = Z
};

struct TableImpl {
  std::size_t n;
  std::vector<std::uint32_t> mult;  // row-major n x n
  std::vector<std::uint32_t> inv;
  std::uint32_t identity;
};

struct ProductImpl {
  std::vector<GroupSpec> factors;
};

struct PlainImpl {
  std::size_t free_rank;
  std::vector<std::uint64_t> orders;

  std::size_t factor_count() const { return free_rank + orders.size(); }
  bool is_free(std::size_t f) const { return f < free_rank; }
  std::int64_t order_of(std::size_t f) const {
    return static_cast<std::int64_t>(orders[f - free_rank]);
  }
  // Normalises an exponent of factor f; 0 means trivial.
  std::int64_t reduce(std::size_t f, std::int64_t e) const {
    if (is_free(f)) {
      return e;
    }
    std::int64_t o = order_of(f);
    return ((e % o) + o) % o;
  }
};

std::int64_t mod(std::int64_t a, std::uint64_t n) {
  auto m = static_cast<std::int64_t>(n);
  return ((a % m) + m) % m;
}

std::string letter_name(std::size_t i) {
  if (i < 26) {
    return std::string(1, static_cast<char>('a' + i));
  }
  return "s" + std::to_string(i);
}

// Appends one plain syllable to `out`, merging with the last syllable.
void push_syllable(const PlainImpl& p, std::vector<std::int64_t>& out, std::size_t f,
                   std::int64_t e) {
  e = p.reduce(f, e);
  if (e == 0) {
    return;
  }
  if (!out.empty() && static_cast<std::size_t>(out[out.size() - 2]) == f) {
    std::int64_t merged = p.reduce(f, out.back() + e);
    if (merged == 0) {
      out.pop_back();
      out.pop_back();
    } else {
      out.back() = merged;
    }
    return;
  }
  out.push_back(static_cast<std::int64_t>(f));
  out.push_back(e);
}

std::vector<Element> split_product(const std::vector<std::int64_t>& code, std::size_t count) {
  std::vector<Element> out;
  out.reserve(count);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (pos >= code.size() || code[pos] < 0 ||
        pos + 1 + static_cast<std::size_t>(code[pos]) > code.size()) {
      throw InvalidArgument("malformed product element");
    }
    auto len = static_cast<std::size_t>(code[pos]);
    out.push_back(Element{{code.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                           code.begin() + static_cast<std::ptrdiff_t>(pos + 1 + len)}});
    pos += 1 + len;
  }
  if (pos != code.size()) {
    throw InvalidArgument("malformed product element");
  }
  return out;
}

Element join_product(const std::vector<Element>& parts) {
  Element out;
  for (const Element& p : parts) {
    out.code.push_back(static_cast<std::int64_t>(p.code.size()));
    out.code.insert(out.code.end(), p.code.begin(), p.code.end());
  }
  return out;
}

std::uint64_t lcm_or_throw(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace

struct GroupSpec::Impl {
  std::variant<CyclicImpl, TableImpl, ProductImpl, PlainImpl> v;
};

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  return boost::hash_range(e.code.begin(), e.code.end());
}

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  return GroupSpec(std::make_shared<const Impl>(Impl{CyclicImpl{n}}));
}

GroupSpec GroupSpec::table(const std::vector<std::vector<std::uint32_t>>& mult,
                           std::uint64_t seed) {
  std::size_t n = mult.size();
  if (n == 0) {
    throw InvalidArgument("multiplication table is empty");
  }
  TableImpl t{n, {}, std::vector<std::uint32_t>(n), 0};
  t.mult.reserve(n * n);
  for (const auto& row : mult) {
    if (row.size() != n) {
      throw InvalidArgument("multiplication table is not square");
    }
    for (std::uint32_t x : row) {
      if (x >= n) {
        throw InvalidArgument("multiplication table entry out of range");
      }
      t.mult.push_back(x);
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return t.mult[i * n + j]; };
  std::optional<std::uint32_t> id;
  for (std::uint32_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      ok = at(e, x) == x && at(x, e) == x;
    }
    if (ok) {
      id = e;
    }
  }
  if (!id) {
    throw InvalidArgument("multiplication table has no identity");
  }
  t.identity = *id;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::optional<std::uint32_t> inv;
    for (std::uint32_t y = 0; y < n && !inv; ++y) {
      if (at(x, y) == *id && at(y, x) == *id) {
        inv = y;
      }
    }
    if (!inv) {
      throw InvalidArgument("element " + std::to_string(x) + " has no inverse");
    }
    t.inv[x] = *inv;
  }
  auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
    return at(at(a, b), c) == at(a, at(b, c));
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!associative(a, b, c)) {
            throw InvalidArgument("multiplication table is not associative");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 1000; ++i) {
      if (!associative(pick(rng), pick(rng), pick(rng))) {
        throw InvalidArgument("multiplication table is not associative");
      }
    }
  }
  return GroupSpec(std::make_shared<const Impl>(Impl{std::move(t)}));
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty()) {
    throw InvalidArgument("direct product needs at least one factor");
  }
  return GroupSpec(std::make_shared<const Impl>(Impl{ProductImpl{std::move(factors)}}));
}

GroupSpec GroupSpec::plain(std::size_t free_rank, std::vector<std::uint64_t> orders) {
  for (auto o : orders) {
    if (o < 2) {
      throw InvalidArgument("finite factor orders of a plain group must be at least 2");
    }
  }
  return GroupSpec(std::make_shared<const Impl>(Impl{PlainImpl{free_rank, std::move(orders)}}));
}

GroupSpec::Kind GroupSpec::kind() const noexcept { return static_cast<Kind>(impl_->v.index()); }

Element GroupSpec::identity() const {
  return std::visit(
      [](const auto& s) -> Element {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          return Element{{0}};
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return Element{{s.identity}};
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          std::vector<Element> parts;
          for (const auto& f : s.factors) {
            parts.push_back(f.identity());
          }
          return join_product(parts);
        } else {
          return Element{};
        }
      },
      impl_->v);
}

bool GroupSpec::contains(const Element& a) const {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          return a.code.size() == 1 && (s.n == 0 || (a.code[0] >= 0 &&
                                                     static_cast<std::uint64_t>(a.code[0]) < s.n));
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return a.code.size() == 1 && a.code[0] >= 0 &&
                 static_cast<std::size_t>(a.code[0]) < s.n;
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          try {
            auto parts = split_product(a.code, s.factors.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
              if (!s.factors[i].contains(parts[i])) {
                return false;
              }
            }
            return true;
          } catch (const InvalidArgument&) {
            return false;
          }
        } else {
          if (a.code.size() % 2 != 0) {
            return false;
          }
          for (std::size_t i = 0; i < a.code.size(); i += 2) {
            std::int64_t f = a.code[i];
            std::int64_t e = a.code[i + 1];
            if (f < 0 || static_cast<std::size_t>(f) >= s.factor_count()) {
              return false;
            }
            if (e == 0 || s.reduce(static_cast<std::size_t>(f), e) != e) {
              return false;
            }
            if (i >= 2 && a.code[i - 2] == f) {
              return false;
            }
          }
          return true;
        }
      },
      impl_->v);
}

namespace {

void require(const GroupSpec& spec, const Element& a) {
  if (!spec.contains(a)) {
    throw InvalidArgument("element does not belong to group " + spec.describe());
  }
}

}  // namespace

Element GroupSpec::multiply(const Element& a, const Element& b) const {
  require(*this, a);
  require(*this, b);
  return std::visit(
      [&](const auto& s) -> Element {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          std::int64_t r = a.code[0] + b.code[0];
          return Element{{s.n == 0 ? r : mod(r, s.n)}};
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return Element{{s.mult[static_cast<std::size_t>(a.code[0]) * s.n +
                                 static_cast<std::size_t>(b.code[0])]}};
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          auto pa = split_product(a.code, s.factors.size());
          auto pb = split_product(b.code, s.factors.size());
          for (std::size_t i = 0; i < pa.size(); ++i) {
            pa[i] = s.factors[i].multiply(pa[i], pb[i]);
          }
          return join_product(pa);
        } else {
          Element out = a;
          for (std::size_t i = 0; i < b.code.size(); i += 2) {
            push_syllable(s, out.code, static_cast<std::size_t>(b.code[i]), b.code[i + 1]);
          }
          return out;
        }
      },
      impl_->v);
}

Element GroupSpec::inverse(const Element& a) const {
  require(*this, a);
  return std::visit(
      [&](const auto& s) -> Element {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          return Element{{s.n == 0 ? -a.code[0] : mod(-a.code[0], s.n)}};
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return Element{{s.inv[static_cast<std::size_t>(a.code[0])]}};
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          auto pa = split_product(a.code, s.factors.size());
          for (std::size_t i = 0; i < pa.size(); ++i) {
            pa[i] = s.factors[i].inverse(pa[i]);
          }
          return join_product(pa);
        } else {
          Element out;
          for (std::size_t i = a.code.size(); i >= 2; i -= 2) {
            auto f = static_cast<std::size_t>(a.code[i - 2]);
            out.code.push_back(a.code[i - 2]);
            out.code.push_back(s.reduce(f, -a.code[i - 1]));
          }
          return out;
        }
      },
      impl_->v);
}

Element GroupSpec::power(const Element& a, std::int64_t n) const {
  Element base = n < 0 ? inverse(a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element out = identity();
  while (e > 0) {
    if (e & 1u) {
      out = multiply(out, base);
    }
    e >>= 1u;
    if (e > 0) {
      base = multiply(base, base);
    }
  }
  return out;
}

std::optional<std::uint64_t> GroupSpec::order() const {
  return std::visit(
      [](const auto& s) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          if (s.n == 0) {
            return std::nullopt;
          }
          return s.n;
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          std::uint64_t total = 1;
          for (const auto& f : s.factors) {
            auto o = f.order();
            if (!o) {
              return std::nullopt;
            }
            total *= *o;
          }
          return total;
        } else {
          if (s.free_rank > 0 || s.orders.size() > 1) {
            return std::nullopt;
          }
          return s.orders.empty() ? 1 : s.orders.front();
        }
      },
      impl_->v);
}

std::optional<std::uint64_t> GroupSpec::element_order(const Element& a) const {
  require(*this, a);
  return std::visit(
      [&](const auto& s) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          auto r = static_cast<std::uint64_t>(a.code[0] < 0 ? -a.code[0] : a.code[0]);
          if (s.n == 0) {
            return r == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
          }
          return s.n / std::gcd(r, s.n);
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          std::uint64_t k = 1;
          auto x = static_cast<std::uint32_t>(a.code[0]);
          auto cur = x;
          while (cur != s.identity) {
            cur = s.mult[cur * s.n + x];
            ++k;
          }
          return k;
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          auto parts = split_product(a.code, s.factors.size());
          std::uint64_t total = 1;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            auto o = s.factors[i].element_order(parts[i]);
            if (!o) {
              return std::nullopt;
            }
            total = lcm_or_throw(total, *o);
          }
          return total;
        } else {
          // Cyclically reduce: an element of a free product has finite order
          // iff it is conjugate into a finite factor.
          Element w = a;
          while (w.code.size() >= 4 && w.code.front() == w.code[w.code.size() - 2]) {
            Element first{{w.code[0], w.code[1]}};
            w = multiply(multiply(inverse(first), w), first);
          }
          if (w.code.empty()) {
            return 1;
          }
          if (w.code.size() > 2) {
            return std::nullopt;
          }
          auto f = static_cast<std::size_t>(w.code[0]);
          if (s.is_free(f)) {
            return std::nullopt;
          }
          auto o = static_cast<std::uint64_t>(s.order_of(f));
          return o / std::gcd(static_cast<std::uint64_t>(w.code[1]), o);
        }
      },
      impl_->v);
}

Element GroupSpec::cyclic_element(std::int64_t exponent) const {
  const auto* c = std::get_if<CyclicImpl>(&impl_->v);
  if (!c) {
    throw InvalidArgument("'pow' elements need a cyclic group");
  }
  return Element{{c->n == 0 ? exponent : mod(exponent, c->n)}};
}

Element GroupSpec::table_element(std::uint32_t index) const {
  const auto* t = std::get_if<TableImpl>(&impl_->v);
  if (!t) {
    throw InvalidArgument("'idx' elements need a table group");
  }
  if (index >= t->n) {
    throw InvalidArgument("table element index out of range");
  }
  return Element{{index}};
}

Element GroupSpec::product_element(const std::vector<Element>& components) const {
  const auto* p = std::get_if<ProductImpl>(&impl_->v);
  if (!p) {
    throw InvalidArgument("tuple elements need a direct product");
  }
  if (components.size() != p->factors.size()) {
    throw InvalidArgument("tuple has " + std::to_string(components.size()) +
                          " components, product has " + std::to_string(p->factors.size()));
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    require(p->factors[i], components[i]);
  }
  return join_product(components);
}

Element GroupSpec::plain_element(const std::vector<Syllable>& syllables) const {
  const auto* p = std::get_if<PlainImpl>(&impl_->v);
  if (!p) {
    throw InvalidArgument("syllable elements need a plain group");
  }
  Element out;
  for (const auto& syl : syllables) {
    if (syl.factor >= p->factor_count()) {
      throw InvalidArgument("syllable factor " + std::to_string(syl.factor) + " out of range");
    }
    push_syllable(*p, out.code, syl.factor, syl.exponent);
  }
  return out;
}

std::vector<Element> GroupSpec::components(const Element& a) const {
  const auto* p = std::get_if<ProductImpl>(&impl_->v);
  if (!p) {
    throw InvalidArgument("components() needs a direct product");
  }
  return split_product(a.code, p->factors.size());
}

const std::vector<GroupSpec>& GroupSpec::factors() const {
  const auto* p = std::get_if<ProductImpl>(&impl_->v);
  if (!p) {
    throw InvalidArgument("factors() needs a direct product");
  }
  return p->factors;
}

std::size_t GroupSpec::free_rank() const {
  const auto* p = std::get_if<PlainImpl>(&impl_->v);
  if (!p) {
    throw InvalidArgument("free_rank() needs a plain group");
  }
  return p->free_rank;
}

const std::vector<std::uint64_t>& GroupSpec::finite_orders() const {
  const auto* p = std::get_if<PlainImpl>(&impl_->v);
  if (!p) {
    throw InvalidArgument("finite_orders() needs a plain group");
  }
  return p->orders;
}

std::string GroupSpec::format(const Element& a) const {
  require(*this, a);
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          return std::to_string(a.code[0]);
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return "g" + std::to_string(a.code[0]);
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          auto parts = split_product(a.code, s.factors.size());
          std::string out = "(";
          for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) {
              out += ",";
            }
            out += s.factors[i].format(parts[i]);
          }
          return out + ")";
        } else {
          if (a.code.empty()) {
            return "1";
          }
          std::string out;
          for (std::size_t i = 0; i < a.code.size(); i += 2) {
            out += letter_name(static_cast<std::size_t>(a.code[i]));
            if (a.code[i + 1] != 1) {
              out += "^" + std::to_string(a.code[i + 1]);
            }
          }
          return out;
        }
      },
      impl_->v);
}

std::string GroupSpec::describe() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicImpl>) {
          return s.n == 0 ? "Z" : "Z_" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, TableImpl>) {
          return "table(" + std::to_string(s.n) + ")";
        } else if constexpr (std::is_same_v<T, ProductImpl>) {
          std::string out;
          for (std::size_t i = 0; i < s.factors.size(); ++i) {
            out += (i ? " x " : "") + s.factors[i].describe();
          }
          return out;
        } else {
          std::vector<std::string> parts(s.free_rank, "Z");
          for (auto o : s.orders) {
            parts.push_back("Z_" + std::to_string(o));
          }
          if (parts.empty()) {
            return "1";
          }
          std::string out;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            out += (i ? " * " : "") + parts[i];
          }
          return out;
        }
      },
      impl_->v);
}

GenSet validate_genset(const GroupSpec& spec, std::vector<Generator> gens) {
  Element id = spec.identity();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.label.empty()) {
      throw InvalidArgument("generator with empty label");
    }
    if (!spec.contains(g.element)) {
      throw InvalidArgument("generator '" + g.label + "' is not an element of " + spec.describe());
    }
    if (g.element == id) {
      throw InvalidArgument("identity in S (generator '" + g.label + "')");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gens[j].label == g.label) {
        throw InvalidArgument("duplicate generator label '" + g.label + "'");
      }
      if (gens[j].element == g.element) {
        throw InvalidArgument("generators '" + gens[j].label + "' and '" + g.label +
                              "' are the same element");
      }
    }
    labels.push_back(g.label);
  }
  std::vector<Letter> inverse(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element inv = spec.inverse(gens[i].element);
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const Generator& h) { return h.element == inv; });
    if (it == gens.end()) {
      throw InvalidArgument("not inverse-closed: no inverse for '" + gens[i].label + "'");
    }
    inverse[i] = static_cast<Letter>(it - gens.begin());
  }
  GenSet out;
  out.alphabet_ = Alphabet(std::move(labels), std::move(inverse));
  out.gens_ = std::move(gens);
  return out;
}

namespace {

// Standard generators of `spec`, with letter names starting at `next`.
// Elements are mapped through `embed` into the outermost spec.
void append_standard(const GroupSpec& spec, std::size_t& next,
                     const std::function<Element(const Element&)>& embed,
                     std::vector<Generator>& out) {
  switch (spec.kind()) {
    case GroupSpec::Kind::cyclic: {
      std::string name = letter_name(next++);
      Element one = spec.cyclic_element(1);
      if (spec.is_identity(one)) {
        break;
      }
      out.push_back({name, embed(one)});
      Element minus = spec.cyclic_element(-1);
      if (minus != one) {
        out.push_back({name + "'", embed(minus)});
      }
      break;
    }
    case GroupSpec::Kind::table: {
      std::string name = letter_name(next++);
      auto n = *spec.order();
      for (std::uint32_t i = 0; i < n; ++i) {
        Element e = spec.table_element(i);
        if (!spec.is_identity(e)) {
          out.push_back({name + std::to_string(i), embed(e)});
        }
      }
      break;
    }
    case GroupSpec::Kind::product: {
      const auto& factors = spec.factors();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto inner = [&, i](const Element& e) {
          std::vector<Element> parts;
          for (std::size_t j = 0; j < factors.size(); ++j) {
            parts.push_back(j == i ? e : factors[j].identity());
          }
          return embed(spec.product_element(parts));
        };
        append_standard(factors[i], next, inner, out);
      }
      break;
    }
    case GroupSpec::Kind::plain: {
      std::size_t rank = spec.free_rank();
      const auto& orders = spec.finite_orders();
      for (std::size_t f = 0; f < rank + orders.size(); ++f) {
        std::string name = letter_name(next++);
        if (f < rank) {
          out.push_back({name, embed(spec.plain_element({{f, 1}}))});
          out.push_back({name + "'", embed(spec.plain_element({{f, -1}}))});
          continue;
        }
        auto o = static_cast<std::int64_t>(orders[f - rank]);
        for (std::int64_t e = 1; e < o; ++e) {
          std::string label = e == 1 ? name : (e == o - 1 ? name + "'" : name + "^" + std::to_string(e));
          out.push_back({label, embed(spec.plain_element({{f, e}}))});
        }
      }
      break;
    }
  }
}

}  // namespace

GenSet standard_generators(const GroupSpec& spec) {
  std::vector<Generator> gens;
  std::size_t next = 0;
  append_standard(spec, next, [](const Element& e) { return e; }, gens);
  return validate_genset(spec, std::move(gens));
}

Element word_to_element(const GroupSpec& spec, const GenSet& gens, const Word& w) {
  Element out = spec.identity();
  for (Letter l : w.letters) {
    if (l >= gens.size()) {
      throw InvalidArgument("unknown letter id " + std::to_string(l));
    }
    out = spec.multiply(out, gens.element(l));
  }
  return out;
}

std::optional<Vertex> CayleyBall::vertex(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<double> CayleyBall::reached_fraction() const {
  auto o = spec_.order();
  if (!o) {
    return std::nullopt;
  }
  return static_cast<double>(size()) / static_cast<double>(*o);
}

PairFilter CayleyBall::trusted_filter() const {
  return [this](Vertex u, Vertex v) { return trusted(u, v); };
}

std::optional<Vertex> CayleyBall::step(Vertex v, Letter s) const {
  if (v >= size() || s >= gens_.size()) {
    throw InvalidArgument("step: vertex or letter out of range");
  }
  Vertex w = step_[static_cast<std::size_t>(v) * gens_.size() + s];
  if (w == kNoVertex) {
    return std::nullopt;
  }
  return w;
}

std::optional<Vertex> CayleyBall::walk(const Word& w, Vertex start) const {
  Vertex cur = start;
  for (Letter l : w.letters) {
    auto next = step(cur, l);
    if (!next) {
      return std::nullopt;
    }
    cur = *next;
  }
  return cur;
}

PathSeq CayleyBall::path_of(const Word& w, Vertex start) const {
  PathSeq p{{start}};
  for (Letter l : w.letters) {
    auto next = step(p.back(), l);
    if (!next) {
      throw OutsideBall("word leaves the ball of radius " + std::to_string(radius_));
    }
    p.vertices.push_back(*next);
  }
  return p;
}

Word CayleyBall::word_of(const PathSeq& p) const {
  Word w;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto l = graph_.arc_label(p.vertices[i], p.vertices[i + 1]);
    if (!l) {
      throw InvalidArgument("path is not a walk in the ball");
    }
    w.letters.push_back(*l);
  }
  return w;
}

CayleyBall cayley_ball(const GroupSpec& spec, const GenSet& gens, std::size_t radius,
                       std::size_t budget) {
  CayleyBall ball(spec, gens);
  ball.radius_ = radius;
  Element id = spec.identity();
  ball.elements_.push_back(id);
  ball.norm_.push_back(0);
  ball.index_.emplace(id, 0);
  std::size_t level_begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    std::size_t level_end = ball.elements_.size();
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (Letter s = 0; s < gens.size(); ++s) {
        Element w = spec.multiply(ball.elements_[v], gens.element(s));
        if (ball.index_.contains(w)) {
          continue;
        }
        if (ball.elements_.size() >= budget) {
          throw BudgetExceeded("ball of radius " + std::to_string(radius) + " exceeds budget of " +
                               std::to_string(budget) + " vertices");
        }
        auto id_w = static_cast<Vertex>(ball.elements_.size());
        ball.index_.emplace(w, id_w);
        ball.elements_.push_back(std::move(w));
        ball.norm_.push_back(static_cast<Dist>(r + 1));
      }
    }
    level_begin = level_end;
    if (level_begin == ball.elements_.size()) {
      break;
    }
  }

  std::size_t n = ball.elements_.size();
  ball.step_.assign(n * gens.size(), kNoVertex);
  ball.complete_ = true;
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) {
    for (Letter s = 0; s < gens.size(); ++s) {
      auto it = ball.index_.find(spec.multiply(ball.elements_[v], gens.element(s)));
      if (it == ball.index_.end()) {
        ball.complete_ = false;
        continue;
      }
      ball.step_[static_cast<std::size_t>(v) * gens.size() + s] = it->second;
      arcs.push_back({v, it->second, s});
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : ball.elements_) {
    labels.push_back(spec.format(e));
  }
  ball.graph_ = build_labelled_graph(n, arcs, std::move(labels));
  return ball;
}

Dist element_norm(const CayleyBall& ball, const Element& g) {
  auto v = ball.vertex(g);
  if (!v) {
    throw OutsideBall("element " + ball.spec().format(g) + " is outside the ball of radius " +
                      std::to_string(ball.radius()));
  }
  return ball.norm(*v);
}

}  // namespace kgeodetic
