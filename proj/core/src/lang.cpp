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

#include "kgeodetic/lang.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "kgeodetic/dot.hpp"
#include "kgeodetic/error.hpp"

namespace kgeodetic {

namespace {

void require_radius(const CayleyBall& ball, std::size_t length, const char* what) {
  if (length > ball.radius()) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(length) +
                          " exceeds the ball radius " + std::to_string(ball.radius()));
  }
}

// The walk spelled by a word of length <= radius never leaves the ball.
Vertex end_vertex(const CayleyBall& ball, const Word& w) {
  auto v = ball.walk(w);
  if (!v) {
    throw OutsideBall("word leaves the ball");
  }
  return *v;
}

}  // namespace

bool is_geodesic_word(const CayleyBall& ball, const Word& w) {
  require_radius(ball, w.size(), "word length");
  return ball.norm(end_vertex(ball, w)) == w.size();
}

ForbiddenSet minimal_forbidden_factors(const CayleyBall& ball, std::size_t e) {
  require_radius(ball, e, "forbidden factor length");
  ForbiddenSet out;
  out.e = e;
  const std::size_t letters = ball.gens().size();
  std::vector<std::pair<Word, Vertex>> level{{Word{}, 0}};
  for (std::size_t len = 1; len <= e && !level.empty(); ++len) {
    std::vector<std::pair<Word, Vertex>> next;
    for (const auto& [w, v] : level) {
      for (Letter l = 0; l < letters; ++l) {
        auto to = ball.step(v, l);
        if (!to) {
          throw OutsideBall("word leaves the ball");
        }
        Word u = w + Word{l};
        if (ball.norm(*to) == len) {
          next.emplace_back(std::move(u), *to);
        } else if (is_geodesic_word(ball, u.suffix(len - 1))) {
          out.words.push_back(std::move(u));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.words.begin(), out.words.end(), ShortlexLess{});
  return out;
}

void write_forbidden(std::ostream& out, const ForbiddenSet& f, const Alphabet& alphabet) {
  out << "forbidden e=" << f.e << '\n';
  for (const auto& w : f.words) {
    out << alphabet.format(w) << '\n';
  }
}

ForbiddenSet parse_forbidden(std::istream& in, const Alphabet& alphabet) {
  ForbiddenSet out;
  bool header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) {
      continue;
    }
    std::string extra;
    if (!header) {
      if (tok != "forbidden" || !(tokens >> extra) || extra.rfind("e=", 0) != 0) {
        throw ParseError("expected header 'forbidden e=<e>'", lineno);
      }
      std::string_view v = std::string_view(extra).substr(2);
      auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out.e);
      if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
        throw ParseError("bad value in '" + extra + "'", lineno);
      }
      if (tokens >> extra) {
        throw ParseError("trailing tokens", lineno);
      }
      header = true;
      continue;
    }
    if (tokens >> extra) {
      throw ParseError("trailing tokens", lineno);
    }
    Word w;
    try {
      w = alphabet.parse(tok);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), lineno);
    }
    if (w.size() > out.e) {
      throw ParseError("word '" + tok + "' longer than e", lineno);
    }
    out.words.push_back(std::move(w));
  }
  if (!header) {
    throw ParseError("missing header 'forbidden e=<e>'", lineno);
  }
  std::sort(out.words.begin(), out.words.end(), ShortlexLess{});
  out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
  return out;
}

bool FactorAutomaton::accepts(const Word& w) const {
  std::size_t s = start;
  for (Letter l : w.letters) {
    if (l >= alphabet_size) {
      throw InvalidArgument("letter outside the automaton alphabet");
    }
    s = next(s, l);
  }
  return s != dead;
}

Count FactorAutomaton::count_accepted(std::size_t length) const {
  std::vector<Count> cur(states);
  cur[start] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Count> nxt(states);
    for (std::size_t s = 0; s < states; ++s) {
      if (cur[s] == 0) {
        continue;
      }
      for (Letter l = 0; l < alphabet_size; ++l) {
        nxt[next(s, l)] += cur[s];
      }
    }
    cur = std::move(nxt);
  }
  Count total = 0;
  for (std::size_t s = 0; s < states; ++s) {
    if (s != dead) {
      total += cur[s];
    }
  }
  return total;
}

FactorAutomaton build_factor_automaton(const ForbiddenSet& f, std::size_t alphabet_size) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t n = alphabet_size;
  // Trie.
  std::vector<std::vector<std::size_t>> go{std::vector<std::size_t>(n, kNone)};
  std::vector<bool> bad{false};
  for (const auto& w : f.words) {
    std::size_t s = 0;
    for (Letter l : w.letters) {
      if (l >= n) {
        throw InvalidArgument("forbidden word uses a letter outside the alphabet");
      }
      if (go[s][l] == kNone) {
        go[s][l] = go.size();
        go.emplace_back(n, kNone);
        bad.push_back(false);
      }
      s = go[s][l];
    }
    bad[s] = true;
  }
  // Failure links, completing the goto function in BFS order.
  std::vector<std::size_t> fail(go.size(), 0);
  std::vector<std::size_t> order{0};
  std::queue<std::size_t> queue;
  for (Letter l = 0; l < n; ++l) {
    if (go[0][l] == kNone) {
      go[0][l] = 0;
    } else {
      fail[go[0][l]] = 0;
      bad[go[0][l]] = bad[go[0][l]] || bad[0];
      queue.push(go[0][l]);
    }
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop();
    order.push_back(s);
    bad[s] = bad[s] || bad[fail[s]];
    for (Letter l = 0; l < n; ++l) {
      std::size_t c = go[s][l];
      if (c == kNone) {
        go[s][l] = go[fail[s]][l];
        continue;
      }
      fail[c] = go[fail[s]][l];
      bad[c] = bad[c] || bad[s];
      queue.push(c);
    }
  }

  FactorAutomaton a;
  a.alphabet_size = n;
  std::vector<std::size_t> renumber(go.size(), kNone);
  std::size_t live = 0;
  for (std::size_t s : order) {
    if (!bad[s]) {
      renumber[s] = live++;
    }
  }
  a.states = live + 1;
  a.dead = live;
  a.start = bad[0] ? a.dead : renumber[0];
  a.delta.assign(a.states * n, a.dead);
  for (std::size_t s : order) {
    if (bad[s]) {
      continue;
    }
    for (Letter l = 0; l < n; ++l) {
      std::size_t t = go[s][l];
      a.delta[renumber[s] * n + l] = bad[t] ? a.dead : renumber[t];
    }
  }
  return a;
}

void write_transition_table(std::ostream& out, const FactorAutomaton& a, const Alphabet& alphabet) {
  out << "automaton states=" << a.states << " live=" << a.live_states() << " start=" << a.start
      << " dead=" << a.dead << '\n';
  for (std::size_t s = 0; s < a.states; ++s) {
    for (Letter l = 0; l < a.alphabet_size; ++l) {
      out << s << ' ' << (l < alphabet.size() ? alphabet.label(l) : std::to_string(l)) << " -> "
          << a.next(s, l) << '\n';
    }
  }
}

std::string automaton_to_dot(const FactorAutomaton& a, const Alphabet& alphabet,
                             const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t s = 0; s < a.states; ++s) {
    out << "  " << s;
    if (s == a.dead) {
      out << " [label=\"dead\", shape=box]";
    } else if (s == a.start) {
      out << " [shape=doublecircle]";
    } else {
      out << " [shape=circle]";
    }
    out << ";\n";
  }
  for (std::size_t s = 0; s < a.states; ++s) {
    std::map<std::size_t, std::string> labels;
    for (Letter l = 0; l < a.alphabet_size; ++l) {
      auto& lab = labels[a.next(s, l)];
      lab += (lab.empty() ? "" : ",") + (l < alphabet.size() ? alphabet.label(l) : std::to_string(l));
    }
    for (const auto& [t, lab] : labels) {
      out << "  " << s << " -> " << t << " [label=" << dot_quote(lab) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

ExclusionCheck check_locally_excluding(const CayleyBall& ball, const ForbiddenSet& f,
                                       std::size_t test_len) {
  require_radius(ball, test_len, "test length");
  const std::size_t letters = ball.gens().size();
  FactorAutomaton a = build_factor_automaton(f, letters);
  ExclusionCheck out;
  out.words_checked = 1;
  if (a.start == a.dead) {
    out.holds = false;
    out.counterexample = Word{};
    out.counterexample_geodesic = true;
    return out;
  }
  struct Item {
    Word w;
    Vertex v;
    std::size_t state;
  };
  std::vector<Item> level{{Word{}, 0, a.start}};
  for (std::size_t len = 1; len <= test_len && !level.empty(); ++len) {
    std::vector<Item> next;
    for (const auto& it : level) {
      for (Letter l = 0; l < letters; ++l) {
        ++out.words_checked;
        auto to = ball.step(it.v, l);
        if (!to) {
          throw OutsideBall("word leaves the ball");
        }
        std::size_t state = a.next(it.state, l);
        bool geodesic = ball.norm(*to) == len;
        bool excluded = state == a.dead;
        if (geodesic == excluded) {
          out.holds = false;
          out.counterexample = it.w + Word{l};
          out.counterexample_geodesic = geodesic;
          return out;
        }
        if (geodesic) {
          next.push_back({it.w + Word{l}, *to, state});
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::size_t PowerLanguageReport::max_multiplicity() const {
  std::size_t m = 0;
  for (const auto& l : languages) {
    m = std::max(m, l.size());
  }
  return m;
}

std::vector<Word> reconstruct(const Stabilization& st, std::size_t n) {
  if (n < st.n_star) {
    throw InvalidArgument("reconstruct needs n >= n_star");
  }
  Word middle = power(st.t + st.s, st.q + (n - st.n_star)) + st.t;
  std::vector<Word> out;
  for (const auto& a : st.alpha_set) {
    for (const auto& g : st.gamma_set) {
      out.push_back(a + middle + g);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Word> distinct_slices(const std::vector<Word>& words, std::size_t begin,
                                  std::size_t end_from_back) {
  std::set<Word> s;
  for (const auto& w : words) {
    s.insert(w.slice(begin, w.size() - end_from_back));
  }
  return {s.begin(), s.end()};
}

std::optional<Stabilization> try_stabilize(const PowerLanguageReport& r, std::size_t ns,
                                           std::size_t a, std::size_t c) {
  const std::size_t last = r.languages.size() - 1;
  const auto& l0 = r.languages[ns];
  const auto& l1 = r.languages[ns + 1];
  const std::size_t p = r.lengths[ns + 1] - r.lengths[ns];
  auto alphas = distinct_slices(l1, 0, l1.front().size() - a);
  auto gammas = distinct_slices(l1, l1.front().size() - c, 0);
  if (alphas.size() * gammas.size() != l1.size()) {
    return std::nullopt;
  }
  auto mid1 = distinct_slices(l1, a, c);
  auto mid0 = distinct_slices(l0, a, c);
  if (mid1.size() != 1 || mid0.size() != 1) {
    return std::nullopt;
  }
  const Word& beta1 = mid1.front();
  const Word& beta0 = mid0.front();
  Word x = beta1.suffix(p);
  Word y = beta1.prefix(p);
  if (beta0 + x != beta1 || y + beta0 != beta1) {
    return std::nullopt;
  }
  LSDecomposition ls = solve_zx_eq_yz(x, y, beta0);
  Stabilization st{ns, std::move(alphas), std::move(gammas), ls.t, ls.s, ls.q, 0};
  for (std::size_t n = ns; n <= last; ++n) {
    if (reconstruct(st, n) != r.languages[n]) {
      return std::nullopt;
    }
  }
  st.confirmations = last - ns;
  return st;
}

}  // namespace

PowerLanguageReport power_language(const CayleyBall& ball, const Word& g_word, std::size_t n_max,
                                   std::size_t limit) {
  const GroupSpec& spec = ball.spec();
  Element g = word_to_element(spec, ball.gens(), g_word);
  if (auto o = spec.element_order(g)) {
    throw InvalidArgument("element " + spec.format(g) + " has finite order " + std::to_string(*o));
  }
  PowerLanguageReport r;
  r.g_word = g_word;
  Element cur = spec.identity();
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto v = ball.vertex(cur);
    if (!v) {
      throw OutsideBall("power " + std::to_string(n) + " of " + spec.format(g) +
                        " lies outside the ball of radius " + std::to_string(ball.radius()));
    }
    GeodesicList list = enumerate_geodesics(ball.graph(), 0, *v, limit);
    r.truncated = r.truncated || list.truncated;
    std::vector<Word> words;
    for (const auto& p : list.paths) {
      words.push_back(ball.word_of(p));
    }
    std::sort(words.begin(), words.end());
    r.languages.push_back(std::move(words));
    r.lengths.push_back(ball.norm(*v));
    cur = spec.multiply(cur, g);
  }

  const std::size_t count = r.languages.size();
  const std::size_t half = count / 2;
  std::size_t first = 0;
  std::size_t second = 0;
  for (std::size_t n = 0; n < count; ++n) {
    (n < half ? first : second) = std::max(n < half ? first : second, r.languages[n].size());
  }
  r.multiplicity_growing = half > 0 && second > first;

  if (r.truncated || n_max < 2) {
    return r;
  }
  for (std::size_t ns = 0; ns + 2 <= n_max; ++ns) {
    if (r.lengths[ns + 1] <= r.lengths[ns]) {
      continue;
    }
    const std::size_t p = r.lengths[ns + 1] - r.lengths[ns];
    bool linear = true;
    for (std::size_t n = ns; n <= n_max; ++n) {
      linear = linear && r.lengths[n] == r.lengths[ns] + (n - ns) * p;
    }
    if (!linear) {
      continue;
    }
    const std::size_t l0 = r.lengths[ns];
    for (std::size_t sum = 0; sum <= l0; ++sum) {
      for (std::size_t a = 0; a <= sum; ++a) {
        if (auto st = try_stabilize(r, ns, a, sum - a)) {
          r.stabilization = std::move(st);
          return r;
        }
      }
    }
  }
  return r;
}

void write_power_report(std::ostream& out, const PowerLanguageReport& r, const Alphabet& alphabet,
                        bool verbose) {
  out << "g = " << alphabet.format(r.g_word) << '\n';
  for (std::size_t n = 0; n < r.languages.size(); ++n) {
    out << "L_" << n << " length=" << r.lengths[n] << " count=" << r.languages[n].size();
    if (verbose) {
      out << " words=";
      for (std::size_t i = 0; i < r.languages[n].size(); ++i) {
        out << (i ? "," : "") << alphabet.format(r.languages[n][i]);
      }
    }
    out << '\n';
  }
  auto join = [&](const std::vector<Word>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      s += (i ? "," : "") + alphabet.format(ws[i]);
    }
    return s;
  };
  if (r.stabilization) {
    const auto& st = *r.stabilization;
    out << "stabilized n_star=" << st.n_star << " t=" << alphabet.format(st.t)
        << " s=" << alphabet.format(st.s) << " q=" << st.q << " alpha={" << join(st.alpha_set)
        << "} gamma={" << join(st.gamma_set) << "} multiplicity="
        << st.alpha_set.size() * st.gamma_set.size() << " confirmations=" << st.confirmations
        << '\n';
  } else {
    out << "not stabilized within n_max=" << (r.languages.size() - 1) << '\n';
  }
  out << "max multiplicity=" << r.max_multiplicity()
      << " growing=" << (r.multiplicity_growing ? "true" : "false")
      << " truncated=" << (r.truncated ? "true" : "false") << '\n';
}

std::vector<Element> centraliser_in_ball(const CayleyBall& ball, const Element& g) {
  if (!ball.vertex(g)) {
    throw OutsideBall("element " + ball.spec().format(g) + " is not in the ball");
  }
  const GroupSpec& spec = ball.spec();
  std::vector<Element> out;
  for (Vertex v = 0; v < ball.size(); ++v) {
    const Element& h = ball.element(v);
    if (spec.multiply(g, h) == spec.multiply(h, g)) {
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace kgeodetic
