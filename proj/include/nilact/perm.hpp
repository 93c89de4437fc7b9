#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "nilact/error.hpp"

namespace nilact {

/// A permutation of {0, ..., d-1}, stored as the image sequence.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int degree) {
    Permutation p;
    p.images.resize(static_cast<size_t>(degree));
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[static_cast<size_t>(x)]; }

  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const { return images < other.images; }
};

inline bool is_bijection(const Permutation& p) {
  std::vector<char> seen(p.images.size(), 0);
  for (int img : p.images) {
    if (img < 0 || img >= p.degree() || seen[static_cast<size_t>(img)]) return false;
    seen[static_cast<size_t>(img)] = 1;
  }
  return true;
}

inline void require_permutation(const Permutation& p, int degree) {
  if (p.degree() != degree)
    throw InvalidPermutation("permutation degree " + std::to_string(p.degree()) +
                             " does not match expected degree " + std::to_string(degree));
  if (!is_bijection(p)) throw InvalidPermutation("image sequence is not a bijection");
}

/// compose(f, g) applies g first: (f*g)(x) = f(g(x)).
inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation r;
  r.images.resize(g.images.size());
  for (size_t x = 0; x < g.images.size(); ++x)
    r.images[x] = f.images[static_cast<size_t>(g.images[x])];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images.resize(p.images.size());
  for (size_t x = 0; x < p.images.size(); ++x)
    r.images[static_cast<size_t>(p.images[x])] = static_cast<int>(x);
  return r;
}

inline bool is_identity(const Permutation& p) {
  for (size_t x = 0; x < p.images.size(); ++x)
    if (p.images[x] != static_cast<int>(x)) return false;
  return true;
}

/// Cycle notation, fixed points omitted; the identity prints as "()".
inline std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.images.size(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[static_cast<size_t>(start)] || p(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!done[static_cast<size_t>(x)]) {
      done[static_cast<size_t>(x)] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = p(x);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

/// Parses one permutation of the stated degree from juxtaposed cycles,
/// e.g. "(0 1)(2 3)". "()" is the identity.
inline Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = Permutation::identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidPermutation("expected '(' in cycle list: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw InvalidPermutation("expected point index in cycle: " + text);
      int v = std::stoi(text.substr(i, j - i));
      if (v >= degree) throw InvalidPermutation("point " + std::to_string(v) + " out of range");
      cycle.push_back(v);
      i = j;
      // tolerate comma separators inside a cycle
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
      skip_ws();
    }
    if (i == text.size()) throw InvalidPermutation("unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (p.images[static_cast<size_t>(from)] != from)
        throw InvalidPermutation("point " + std::to_string(from) + " repeated across cycles");
      p.images[static_cast<size_t>(from)] = to;
    }
    skip_ws();
  }
  if (!is_bijection(p)) throw InvalidPermutation("cycles do not define a bijection: " + text);
  return p;
}

}  // namespace nilact
