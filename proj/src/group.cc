#include "glp/group.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace glp {
namespace {

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

const Scalar& as_scalar(const GroupElement& a) {
  if (const auto* s = std::get_if<Scalar>(&a.payload())) return *s;
  throw GroupMismatch("expected a scalar group element");
}

const Permutation& as_permutation(const GroupElement& a) {
  if (const auto* p = std::get_if<Permutation>(&a.payload())) return *p;
  throw GroupMismatch("expected a permutation group element");
}

const Word& as_word(const GroupElement& a) {
  if (const auto* w = std::get_if<Word>(&a.payload())) return *w;
  throw GroupMismatch("expected a free group word");
}

// Appends `letter` to a reduced word, cancelling against its tail.
void push_reduced(std::vector<int>& word, int letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer '" + std::string(text) +
                                "'");
  }
  return value;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
  GroupSpec spec;
  spec.kind_ = GroupKind::kCyclic;
  spec.modulus_ = modulus;
  return spec;
}

GroupSpec GroupSpec::integers() {
  GroupSpec spec;
  spec.kind_ = GroupKind::kInteger;
  return spec;
}

GroupSpec GroupSpec::symmetric(int degree) {
  if (degree < 1) throw std::invalid_argument("symmetric degree must be >= 1");
  GroupSpec spec;
  spec.kind_ = GroupKind::kSymmetric;
  spec.degree_ = degree;
  return spec;
}

GroupSpec GroupSpec::free(std::vector<std::string> generators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (g == "e") {
      throw std::invalid_argument("'e' is reserved for the identity word");
    }
    for (char c : g) {
      if (c == '.' || c == '\'' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("invalid character in generator '" + g +
                                    "'");
      }
    }
    if (!seen.insert(g).second) {
      throw std::invalid_argument("duplicate generator '" + g + "'");
    }
  }
  GroupSpec spec;
  spec.kind_ = GroupKind::kFree;
  spec.generators_ = std::move(generators);
  return spec;
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return "cyclic " + std::to_string(modulus_);
    case GroupKind::kInteger:
      return "integer";
    case GroupKind::kSymmetric:
      return "symmetric " + std::to_string(degree_);
    case GroupKind::kFree: {
      std::string out = "free";
      for (const auto& g : generators_) out += " " + g;
      return out;
    }
  }
  return {};
}

GroupElement identity(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::kCyclic:
    case GroupKind::kInteger:
      return GroupElement(Scalar{0});
    case GroupKind::kSymmetric: {
      Permutation p;
      p.image.resize(spec.degree());
      std::iota(p.image.begin(), p.image.end(), 0);
      return GroupElement(std::move(p));
    }
    case GroupKind::kFree:
      return GroupElement(Word{});
  }
  return {};
}

bool is_member(const GroupSpec& spec, const GroupElement& a) {
  switch (spec.kind()) {
    case GroupKind::kCyclic: {
      const auto* s = std::get_if<Scalar>(&a.payload());
      return s && s->value >= 0 && s->value < spec.modulus();
    }
    case GroupKind::kInteger:
      return std::holds_alternative<Scalar>(a.payload());
    case GroupKind::kSymmetric: {
      const auto* p = std::get_if<Permutation>(&a.payload());
      if (!p || static_cast<int>(p->image.size()) != spec.degree()) {
        return false;
      }
      std::vector<bool> hit(p->image.size(), false);
      for (int x : p->image) {
        if (x < 0 || x >= spec.degree() || hit[x]) return false;
        hit[x] = true;
      }
      return true;
    }
    case GroupKind::kFree: {
      const auto* w = std::get_if<Word>(&a.payload());
      if (!w) return false;
      const int k = static_cast<int>(spec.generators().size());
      for (std::size_t i = 0; i < w->letters.size(); ++i) {
        int l = w->letters[i];
        if (l == 0 || l > k || l < -k) return false;
        if (i > 0 && w->letters[i - 1] == -l) return false;
      }
      return true;
    }
  }
  return false;
}

void check_member(const GroupSpec& spec, const GroupElement& a) {
  if (!is_member(spec, a)) {
    throw GroupMismatch("element does not belong to group " +
                        spec.to_string());
  }
}

GroupElement mul(const GroupSpec& spec, const GroupElement& a,
                 const GroupElement& b) {
  check_member(spec, a);
  check_member(spec, b);
  switch (spec.kind()) {
    case GroupKind::kCyclic:
      return GroupElement(Scalar{
          floor_mod(as_scalar(a).value + as_scalar(b).value, spec.modulus())});
    case GroupKind::kInteger:
      return GroupElement(Scalar{as_scalar(a).value + as_scalar(b).value});
    case GroupKind::kSymmetric: {
      const auto& pa = as_permutation(a).image;
      const auto& pb = as_permutation(b).image;
      Permutation out;
      out.image.resize(pa.size());
      for (std::size_t x = 0; x < pa.size(); ++x) out.image[x] = pa[pb[x]];
      return GroupElement(std::move(out));
    }
    case GroupKind::kFree: {
      Word out = as_word(a);
      for (int l : as_word(b).letters) push_reduced(out.letters, l);
      return GroupElement(std::move(out));
    }
  }
  return {};
}

GroupElement inv(const GroupSpec& spec, const GroupElement& a) {
  check_member(spec, a);
  switch (spec.kind()) {
    case GroupKind::kCyclic:
      return GroupElement(
          Scalar{floor_mod(-as_scalar(a).value, spec.modulus())});
    case GroupKind::kInteger:
      return GroupElement(Scalar{-as_scalar(a).value});
    case GroupKind::kSymmetric: {
      const auto& p = as_permutation(a).image;
      Permutation out;
      out.image.resize(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) {
        out.image[p[x]] = static_cast<int>(x);
      }
      return GroupElement(std::move(out));
    }
    case GroupKind::kFree: {
      Word out;
      const auto& w = as_word(a).letters;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.letters.push_back(-*it);
      }
      return GroupElement(std::move(out));
    }
  }
  return {};
}

bool is_identity(const GroupSpec& spec, const GroupElement& a) {
  return a == identity(spec);
}

bool equal(const GroupSpec& spec, const GroupElement& a,
           const GroupElement& b) {
  return is_identity(spec, mul(spec, a, inv(spec, b)));
}

GroupElement make_scalar(const GroupSpec& spec, std::int64_t value) {
  switch (spec.kind()) {
    case GroupKind::kCyclic:
      return GroupElement(Scalar{floor_mod(value, spec.modulus())});
    case GroupKind::kInteger:
      return GroupElement(Scalar{value});
    default:
      throw GroupMismatch("group " + spec.to_string() +
                          " has no integer elements");
  }
}

GroupElement make_permutation(const GroupSpec& spec,
                              const std::vector<int>& images) {
  if (spec.kind() != GroupKind::kSymmetric) {
    throw GroupMismatch("group " + spec.to_string() + " is not symmetric");
  }
  Permutation p;
  for (int x : images) p.image.push_back(x - 1);
  GroupElement out(std::move(p));
  if (!is_member(spec, out)) {
    throw std::invalid_argument("not a permutation of 1.." +
                                std::to_string(spec.degree()));
  }
  return out;
}

GroupElement make_cycles(const GroupSpec& spec,
                         const std::vector<std::vector<int>>& cycles) {
  if (spec.kind() != GroupKind::kSymmetric) {
    throw GroupMismatch("group " + spec.to_string() + " is not symmetric");
  }
  GroupElement out = identity(spec);
  for (const auto& cycle : cycles) {
    std::vector<int> images(spec.degree());
    std::iota(images.begin(), images.end(), 1);
    std::set<int> seen;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int x = cycle[i];
      if (x < 1 || x > spec.degree()) {
        throw std::invalid_argument("cycle entry " + std::to_string(x) +
                                    " out of range");
      }
      if (!seen.insert(x).second) {
        throw std::invalid_argument("repeated entry in cycle");
      }
      images[x - 1] = cycle[(i + 1) % cycle.size()];
    }
    out = mul(spec, out, make_permutation(spec, images));
  }
  return out;
}

GroupElement make_word(const GroupSpec& spec, const std::vector<int>& letters) {
  if (spec.kind() != GroupKind::kFree) {
    throw GroupMismatch("group " + spec.to_string() + " is not free");
  }
  const int k = static_cast<int>(spec.generators().size());
  Word w;
  for (int l : letters) {
    if (l == 0 || l > k || l < -k) {
      throw std::invalid_argument("letter out of range");
    }
    push_reduced(w.letters, l);
  }
  return GroupElement(std::move(w));
}

GroupElement parse_element(const GroupSpec& spec, std::string_view text) {
  switch (spec.kind()) {
    case GroupKind::kCyclic:
    case GroupKind::kInteger:
      return make_scalar(spec, parse_int(text));
    case GroupKind::kSymmetric: {
      if (text == "id") return identity(spec);
      std::vector<std::vector<int>> cycles;
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (text[pos] != '(') {
          throw std::invalid_argument("expected '(' in permutation '" +
                                      std::string(text) + "'");
        }
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) {
          throw std::invalid_argument("unterminated cycle in '" +
                                      std::string(text) + "'");
        }
        std::vector<int> cycle;
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        std::size_t start = 0;
        while (start <= body.size()) {
          std::size_t comma = body.find(',', start);
          if (comma == std::string_view::npos) comma = body.size();
          cycle.push_back(static_cast<int>(
              parse_int(body.substr(start, comma - start))));
          start = comma + 1;
        }
        cycles.push_back(std::move(cycle));
        pos = close + 1;
      }
      if (cycles.empty()) {
        throw std::invalid_argument("empty permutation text");
      }
      return make_cycles(spec, cycles);
    }
    case GroupKind::kFree: {
      if (text == "e") return identity(spec);
      std::vector<int> letters;
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        if (dot == std::string_view::npos) dot = text.size();
        std::string_view token = text.substr(start, dot - start);
        int sign = 1;
        if (!token.empty() && token.back() == '\'') {
          sign = -1;
          token.remove_suffix(1);
        }
        const auto& gens = spec.generators();
        auto it = std::find(gens.begin(), gens.end(), token);
        if (it == gens.end()) {
          throw std::invalid_argument("unknown generator '" +
                                      std::string(token) + "'");
        }
        letters.push_back(sign * static_cast<int>(it - gens.begin() + 1));
        start = dot + 1;
      }
      return make_word(spec, letters);
    }
  }
  return {};
}

std::string format_element(const GroupSpec& spec, const GroupElement& a) {
  check_member(spec, a);
  switch (spec.kind()) {
    case GroupKind::kCyclic:
    case GroupKind::kInteger:
      return std::to_string(as_scalar(a).value);
    case GroupKind::kSymmetric: {
      const auto& p = as_permutation(a).image;
      std::string out;
      std::vector<bool> done(p.size(), false);
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (done[x] || p[x] == static_cast<int>(x)) continue;
        out += "(";
        std::size_t y = x;
        bool first = true;
        while (!done[y]) {
          done[y] = true;
          if (!first) out += ",";
          out += std::to_string(y + 1);
          first = false;
          y = static_cast<std::size_t>(p[y]);
        }
        out += ")";
      }
      return out.empty() ? "id" : out;
    }
    case GroupKind::kFree: {
      const auto& w = as_word(a).letters;
      if (w.empty()) return "e";
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ".";
        out += spec.generators()[std::abs(w[i]) - 1];
        if (w[i] < 0) out += "'";
      }
      return out;
    }
  }
  return {};
}

GroupSpec parse_group_spec(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("missing group kind");
  const std::string& kind = tokens[0];
  auto expect_count = [&](std::size_t n) {
    if (tokens.size() != n) {
      throw std::invalid_argument("group " + kind + " expects " +
                                  std::to_string(n - 1) + " parameter(s)");
    }
  };
  if (kind == "cyclic") {
    expect_count(2);
    return GroupSpec::cyclic(parse_int(tokens[1]));
  }
  if (kind == "integer") {
    expect_count(1);
    return GroupSpec::integers();
  }
  if (kind == "symmetric") {
    expect_count(2);
    return GroupSpec::symmetric(static_cast<int>(parse_int(tokens[1])));
  }
  if (kind == "free") {
    if (tokens.size() < 2) {
      throw std::invalid_argument("group free needs at least one generator");
    }
    return GroupSpec::free({tokens.begin() + 1, tokens.end()});
  }
  throw std::invalid_argument("unsupported group kind '" + kind + "'");
}

}  // namespace glp
