#pragma once
#include <map>
#include <set>
#include <vector>

#include "uqgl/generators.hpp"
#include "uqgl/rational.hpp"

namespace uqgl {

using Word = std::vector<GeneratorKey>;

// words ordered by length first, then lexicographically by letter
struct WordLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

int word_parity(const Word& w);
std::string word_str(const Word& w);

// element of the free superalgebra: finite F-linear combination of words.
// multiplication is concatenation — Koszul signs live in tensor products and
// brackets, never here
class SuperElement {
 public:
  using Terms = std::map<Word, RF, WordLess>;

  SuperElement() = default;
  static SuperElement unit();  // empty word with coefficient 1
  static SuperElement letter(GeneratorKey g);
  static SuperElement word(const Word& w);
  static SuperElement scalar(const RF& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const RF& c);  // accumulate, prunes zeros

  SuperElement operator-() const;
  SuperElement operator+(const SuperElement& o) const;
  SuperElement operator-(const SuperElement& o) const;
  SuperElement operator*(const SuperElement& o) const;
  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement& operator*=(const SuperElement& o);
  bool operator==(const SuperElement& o) const = default;

  SuperElement scaled(const RF& c) const;

  // 0 or 1; ParityError when the element mixes parities
  int parity() const;

  std::string str() const;
  json to_json() const;
  static SuperElement from_json(const json& j);

 private:
  Terms terms_;
};

// [a,b} = ab - (-1)^{P(a)P(b)} ba on homogeneous elements
SuperElement super_bracket(const SuperElement& a, const SuperElement& b);
SuperElement anti_commutator(const SuperElement& a, const SuperElement& b);
SuperElement commutator(const SuperElement& a, const SuperElement& b);

// homomorphic extension of a letter replacement; letters not in the map stay
// fixed. Images must match the parity of the letter they replace.
SuperElement substitute_letters(const SuperElement& e,
                                const std::map<GeneratorKey, SuperElement>& images);

// adjacent inverse-pair cancellation. The table lists ordered pairs (a, b)
// whose product rewrites to the empty word; reduction is confluent because
// rules only erase adjacent fixed pairs
struct CancelTable {
  std::set<std::pair<GeneratorKey, GeneratorKey>> pairs;
  void add_mutual(GeneratorKey x, GeneratorKey xinv);  // both orders
  bool cancels(GeneratorKey l, GeneratorKey r) const;
};
Word rew_word(const Word& w, const CancelTable& t);
SuperElement rew(const SuperElement& e, const CancelTable& t);

// homogeneous tensor square with Koszul multiplication:
// (u1 (x) u2)(v1 (x) v2) = (-1)^{P(u2)P(v1)} u1 v1 (x) u2 v2
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& x, const Key& y) const {
      WordLess wl;
      if (x.first != y.first) return wl(x.first, y.first);
      return wl(x.second, y.second);
    }
  };
  using Terms = std::map<Key, RF, KeyLess>;

  TensorElement() = default;
  static TensorElement unit();
  static TensorElement of(const SuperElement& a, const SuperElement& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w1, const Word& w2, const RF& c);

  TensorElement operator-() const;
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const TensorElement& o);
  bool operator==(const TensorElement& o) const = default;

  TensorElement scaled(const RF& c) const;
  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace uqgl
