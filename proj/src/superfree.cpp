#include "uqgl/superfree.hpp"

#include <sstream>

#include "uqgl/errors.hpp"

namespace uqgl {

// --------------------------------------------------------------------------
// GeneratorKey

static uint64_t pack(GenKind k, int a, int b, int sign, uint32_t mode) {
  return (static_cast<uint64_t>(k) << 60) | (static_cast<uint64_t>(a & 0xF) << 56) |
         (static_cast<uint64_t>(b & 0xF) << 52) | (static_cast<uint64_t>(sign & 0xF) << 48) |
         mode;
}

GeneratorKey GeneratorKey::lmode(int i, int j, int sign, int mode) {
  if (i < 1 || i > 2 || j < 1 || j > 2 || (sign != SignPlus && sign != SignMinus) || mode < 0)
    throw InvalidArgument("lmode: bad arguments");
  return {pack(GenKind::LMode, i, j, sign, static_cast<uint32_t>(mode))};
}

GeneratorKey GeneratorKey::gauss(GaussWhich which, int sign, int mode) {
  if ((sign != SignPlus && sign != SignMinus) || mode < 0)
    throw InvalidArgument("gauss: bad arguments");
  return {pack(GenKind::GaussMode, static_cast<int>(which), 0, sign, static_cast<uint32_t>(mode))};
}

GeneratorKey GeneratorKey::current(CurrentWhich which, int sign, int var) {
  if (var != VarZ && var != VarW) throw InvalidArgument("current: bad variable");
  return {pack(GenKind::CurrentSym, static_cast<int>(which), 0, sign, static_cast<uint32_t>(var))};
}

GeneratorKey GeneratorKey::inv(GeneratorKey letter) {
  if (letter.parity() != 0 || letter.mode() != 0)
    throw InvalidArgument("inv: inverse letters only for even zero-mode letters");
  GenKind k = letter.kind();
  if (k != GenKind::LMode && k != GenKind::GaussMode)
    throw InvalidArgument("inv: unsupported letter kind");
  return {pack(GenKind::InvLetter, static_cast<int>(k) << 2 | letter.a(), letter.b(),
               letter.sign(), 0)};
}

GeneratorKey GeneratorKey::helper_inv(int id) {
  if (id < 0) throw InvalidArgument("helper_inv: bad id");
  return {pack(GenKind::HelperInv, 0, 0, 0, static_cast<uint32_t>(id))};
}

GeneratorKey GeneratorKey::inverted_letter() const {
  if (kind() != GenKind::InvLetter) throw InvalidArgument("inverted_letter: not an inverse");
  GenKind wrapped = static_cast<GenKind>(a() >> 2);
  int wa = a() & 3;
  if (wrapped == GenKind::LMode) return lmode(wa, b(), sign(), 0);
  return gauss(static_cast<GaussWhich>(wa), sign(), 0);
}

int GeneratorKey::parity() const {
  switch (kind()) {
    case GenKind::LMode:
      return (a() + b()) % 2;  // off-diagonal entries are odd
    case GenKind::GaussMode: {
      auto w = static_cast<GaussWhich>(a());
      return (w == GaussWhich::E || w == GaussWhich::F) ? 1 : 0;
    }
    case GenKind::CurrentSym: {
      auto w = static_cast<CurrentWhich>(a());
      return (w == CurrentWhich::E || w == CurrentWhich::F) ? 1 : 0;
    }
    default:
      return 0;
  }
}

std::string GeneratorKey::str() const {
  std::ostringstream os;
  const char* pm = sign() == SignPlus ? "+" : "-";
  switch (kind()) {
    case GenKind::LMode:
      os << "l" << a() << b() << pm << "[" << mode() << "]";
      break;
    case GenKind::GaussMode: {
      static const char* names[4] = {"e", "f", "k1", "k2"};
      os << names[a()] << pm << "[" << mode() << "]";
      break;
    }
    case GenKind::CurrentSym: {
      static const char* names[6] = {"E", "F", "K1", "K2", "K1inv", "K2inv"};
      os << names[a()] << pm << "(" << var_name(mode()) << ")";
      break;
    }
    case GenKind::InvLetter:
      os << inverted_letter().str() << "^-1";
      break;
    case GenKind::HelperInv:
      os << "hinv#" << mode();
      break;
  }
  return os.str();
}

// --------------------------------------------------------------------------
// words

int word_parity(const Word& w) {
  int p = 0;
  for (auto& g : w) p ^= g.parity();
  return p;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += w[i].str();
  }
  return s;
}

// --------------------------------------------------------------------------
// SuperElement

SuperElement SuperElement::unit() { return word({}); }

SuperElement SuperElement::letter(GeneratorKey g) { return word({g}); }

SuperElement SuperElement::word(const Word& w) {
  SuperElement e;
  e.terms_[w] = RF::constant(1);
  return e;
}

SuperElement SuperElement::scalar(const RF& c) {
  SuperElement e;
  if (!c.is_zero()) e.terms_[{}] = c;
  return e;
}

void SuperElement::add(const Word& w, const RF& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperElement SuperElement::operator-() const {
  SuperElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
  SuperElement r = *this;
  for (auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

SuperElement SuperElement::operator-(const SuperElement& o) const {
  SuperElement r = *this;
  for (auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

SuperElement SuperElement::operator*(const SuperElement& o) const {
  SuperElement r;
  for (auto& [w1, c1] : terms_)
    for (auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add(w, c1 * c2);
    }
  return r;
}

SuperElement& SuperElement::operator+=(const SuperElement& o) { return *this = *this + o; }
SuperElement& SuperElement::operator-=(const SuperElement& o) { return *this = *this - o; }
SuperElement& SuperElement::operator*=(const SuperElement& o) { return *this = *this * o; }

SuperElement SuperElement::scaled(const RF& c) const {
  SuperElement r;
  if (c.is_zero()) return r;
  for (auto& [w, cc] : terms_) r.terms_[w] = cc * c;
  return r;
}

int SuperElement::parity() const {
  if (terms_.empty()) return 0;
  int p = word_parity(terms_.begin()->first);
  for (auto& [w, c] : terms_)
    if (word_parity(w) != p)
      throw ParityError("parity of inhomogeneous element: " + str());
  return p;
}

std::string SuperElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << word_str(w);
  }
  return os.str();
}

json SuperElement::to_json() const {
  json arr = json::array();
  for (auto& [w, c] : terms_) {
    json letters = json::array();
    for (auto& g : w) letters.push_back(g.v);
    arr.push_back(json{{"w", letters}, {"c", c.to_json()}});
  }
  return arr;
}

SuperElement SuperElement::from_json(const json& j) {
  SuperElement e;
  for (auto& t : j) {
    Word w;
    for (auto& l : t.at("w")) w.push_back(GeneratorKey{l.get<uint64_t>()});
    e.add(w, RF::from_json(t.at("c")));
  }
  return e;
}

SuperElement super_bracket(const SuperElement& a, const SuperElement& b) {
  int s = a.parity() * b.parity();
  SuperElement ba = b * a;
  return s % 2 ? a * b + ba : a * b - ba;
}

SuperElement anti_commutator(const SuperElement& a, const SuperElement& b) {
  return a * b + b * a;
}

SuperElement commutator(const SuperElement& a, const SuperElement& b) {
  return a * b - b * a;
}

SuperElement substitute_letters(const SuperElement& e,
                                const std::map<GeneratorKey, SuperElement>& images) {
  for (auto& [g, img] : images)
    if (!img.is_zero() && img.parity() != g.parity())
      throw ParityError("substitution image changes parity of " + g.str());
  SuperElement out;
  for (auto& [w, c] : e.terms()) {
    SuperElement prod = SuperElement::scalar(c);
    for (auto& g : w) {
      auto it = images.find(g);
      prod *= (it != images.end()) ? it->second : SuperElement::letter(g);
    }
    out += prod;
  }
  return out;
}

// --------------------------------------------------------------------------
// inverse-pair rewriting

void CancelTable::add_mutual(GeneratorKey x, GeneratorKey xinv) {
  pairs.insert({x, xinv});
  pairs.insert({xinv, x});
}

bool CancelTable::cancels(GeneratorKey l, GeneratorKey r) const {
  return pairs.count({l, r}) > 0;
}

Word rew_word(const Word& w, const CancelTable& t) {
  Word stack;
  stack.reserve(w.size());
  for (auto& g : w) {
    if (!stack.empty() && t.cancels(stack.back(), g))
      stack.pop_back();
    else
      stack.push_back(g);
  }
  return stack;
}

SuperElement rew(const SuperElement& e, const CancelTable& t) {
  SuperElement r;
  for (auto& [w, c] : e.terms()) r.add(rew_word(w, t), c);
  return r;
}

// --------------------------------------------------------------------------
// TensorElement

TensorElement TensorElement::unit() {
  TensorElement t;
  t.terms_[{{}, {}}] = RF::constant(1);
  return t;
}

TensorElement TensorElement::of(const SuperElement& a, const SuperElement& b) {
  TensorElement t;
  for (auto& [w1, c1] : a.terms())
    for (auto& [w2, c2] : b.terms()) t.add(w1, w2, c1 * c2);
  return t;
}

void TensorElement::add(const Word& w1, const Word& w2, const RF& c) {
  if (c.is_zero()) return;
  Key k{w1, w2};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = *this;
  for (auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r = *this;
  for (auto& [k, c] : o.terms_) r.add(k.first, k.second, -c);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  TensorElement r;
  for (auto& [k1, c1] : terms_)
    for (auto& [k2, c2] : o.terms_) {
      int sgn = word_parity(k1.second) * word_parity(k2.first);
      Word left = k1.first;
      left.insert(left.end(), k2.first.begin(), k2.first.end());
      Word right = k1.second;
      right.insert(right.end(), k2.second.begin(), k2.second.end());
      RF c = c1 * c2;
      r.add(left, right, sgn % 2 ? -c : c);
    }
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) { return *this = *this + o; }
TensorElement& TensorElement::operator-=(const TensorElement& o) { return *this = *this - o; }
TensorElement& TensorElement::operator*=(const TensorElement& o) { return *this = *this * o; }

TensorElement TensorElement::scaled(const RF& c) const {
  TensorElement r;
  if (c.is_zero()) return r;
  for (auto& [k, cc] : terms_) r.terms_[k] = cc * c;
  return r;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << word_str(k.first) << " (x) " << word_str(k.second);
  }
  return os.str();
}

}  // namespace uqgl
