#include "uqgl/verifier.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "uqgl/errors.hpp"

namespace uqgl {

std::string relation_id(const Relation& r) {
  std::ostringstream os;
  os << r.slug << '[';
  for (std::size_t i = 0; i < r.idx.size(); ++i) {
    if (i) os << ',';
    os << r.idx[i];
  }
  os << ']';
  return os.str();
}

std::vector<Axiom> to_axioms(const RelationSet& rs) {
  std::vector<Axiom> out;
  out.reserve(rs.size());
  for (auto& r : rs) out.push_back({relation_id(r), r.el});
  return out;
}

bool Certificate::operator==(const Certificate& o) const {
  if (target != o.target || terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto& a = terms[i];
    auto& b = o.terms[i];
    if (a.axiom != b.axiom || a.left != b.left || a.right != b.right || !(a.coeff == b.coeff))
      return false;
  }
  return true;
}

namespace {

json word_to_json(const Word& w) {
  json a = json::array();
  for (auto g : w) a.push_back(g.v);
  return a;
}

Word word_from_json(const json& j) {
  Word w;
  for (auto& x : j) w.push_back(GeneratorKey{x.get<std::uint64_t>()});
  return w;
}

}  // namespace

json Certificate::to_json() const {
  json ts = json::array();
  for (auto& t : terms)
    ts.push_back({{"axiom", t.axiom},
                  {"left", word_to_json(t.left)},
                  {"right", word_to_json(t.right)},
                  {"coeff", t.coeff.to_json()}});
  return {{"target", target}, {"terms", ts}};
}

Certificate Certificate::from_json(const json& j) {
  Certificate c;
  c.target = j.at("target").get<std::string>();
  for (auto& t : j.at("terms"))
    c.terms.push_back({t.at("axiom").get<std::string>(), word_from_json(t.at("left")),
                       word_from_json(t.at("right")), RF::from_json(t.at("coeff"))});
  return c;
}

namespace {

Word concat3(const Word& u, const Word& m, const Word& v) {
  Word w;
  w.reserve(u.size() + m.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), m.begin(), m.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

struct Cand {
  int axiom;
  Word u, v;
};

// mode-blind identity of a letter, shared with its designated inverse
std::uint64_t base_code(GeneratorKey g) {
  if (g.kind() == GenKind::InvLetter) g = g.inverted_letter();
  if (g.kind() == GenKind::GaussMode || g.kind() == GenKind::LMode)
    return g.v & ~0xFFFFFFFFULL;  // drop the mode
  return g.v;
}

// target-seeded workspace closure: every word of every admitted candidate
// joins the workspace and is scanned for further matches in turn
struct Closure {
  const std::vector<Axiom>& ax;
  const VerifierOptions& opt;
  int L;
  std::vector<int> ax_maxlen;

  std::map<Word, int, WordLess> rows;
  std::vector<Word> row_words;
  std::queue<int> agenda;
  std::vector<Cand> cands;
  std::set<std::tuple<int, Word, Word>> seen;
  std::vector<std::set<std::uint64_t>> ax_bases;

  Closure(const std::vector<Axiom>& a, const VerifierOptions& o, int len) : ax(a), opt(o), L(len) {
    ax_maxlen.reserve(ax.size());
    ax_bases.resize(ax.size());
    for (std::size_t i = 0; i < ax.size(); ++i) {
      std::size_t m = 0;
      for (auto& [w, c] : ax[i].el.terms()) {
        m = std::max(m, w.size());
        for (auto g : w) ax_bases[i].insert(base_code(g));
      }
      ax_maxlen.push_back(static_cast<int>(m));
    }
  }

  int row_of(const Word& w) {
    auto it = rows.find(w);
    if (it != rows.end()) return it->second;
    if (rows.size() >= opt.word_budget)
      throw BudgetError("workspace exceeded the word budget", rows.size(), cands.size());
    int id = static_cast<int>(row_words.size());
    rows.emplace(w, id);
    row_words.push_back(w);
    agenda.push(id);
    return id;
  }

  void try_candidate(int ai, Word u, Word v) {
    if (static_cast<int>(u.size() + v.size()) + ax_maxlen[ai] > L) return;
    if (!seen.emplace(ai, u, v).second) return;
    if (cands.size() >= opt.cand_budget)
      throw BudgetError("search exceeded the candidate budget", rows.size(), cands.size());
    for (auto& [w, c] : ax[ai].el.terms()) row_of(concat3(u, w, v));
    cands.push_back({ai, std::move(u), std::move(v)});
  }

  void scan(int ri) {
    Word s = row_words[ri];  // copy: row_words grows during try_candidate
    for (int ai = 0; ai < static_cast<int>(ax.size()); ++ai) {
      for (auto& [rho, c] : ax[ai].el.terms()) {
        std::size_t m = rho.size();
        if (m > s.size()) continue;
        for (std::size_t i = 0; i + m <= s.size(); ++i) {
          if (m == 0 && opt.adjacent_insertions && i > 0 && i < s.size() &&
              !ax_bases[ai].count(base_code(s[i - 1])) && !ax_bases[ai].count(base_code(s[i])))
            continue;
          if (!std::equal(rho.begin(), rho.end(), s.begin() + i)) continue;
          try_candidate(ai, Word(s.begin(), s.begin() + i), Word(s.begin() + i + m, s.end()));
        }
      }
    }
  }

  void run(const SuperElement& target) {
    for (auto& [w, c] : target.terms()) row_of(w);
    while (!agenda.empty()) {
      int ri = agenda.front();
      agenda.pop();
      scan(ri);
    }
  }
};

// sparse row-echelon dictionary over a field K; tracks how each stored
// vector combines the original columns
template <class K>
struct Dict {
  struct Vec {
    std::map<int, K> ent;    // row -> value
    std::map<int, K> combo;  // column -> coefficient
  };
  std::map<int, Vec> by_pivot;

  static bool nz(const K& v);
  static K one();
  static void axpy(std::map<int, K>& dst, const K& a, const std::map<int, K>& src) {
    for (auto& [i, v] : src) {
      auto it = dst.find(i);
      if (it == dst.end()) {
        K nv = a * v;
        if (nz(nv)) dst.emplace(i, std::move(nv));
      } else {
        it->second += a * v;
        if (!nz(it->second)) dst.erase(it);
      }
    }
  }

  // reduce in place; returns false when the vector vanished
  bool reduce(Vec& x) const {
    while (!x.ent.empty()) {
      int lead = x.ent.begin()->first;
      auto it = by_pivot.find(lead);
      if (it == by_pivot.end()) return true;
      K a = -x.ent.begin()->second;  // pivots are normalized to 1
      axpy(x.ent, a, it->second.ent);
      axpy(x.combo, a, it->second.combo);
      x.ent.erase(lead);  // guard against residue from inexact pruning
    }
    return false;
  }

  void insert(Vec x) {
    if (!reduce(x)) return;
    int lead = x.ent.begin()->first;
    K inv = one() / x.ent.begin()->second;
    for (auto& [i, v] : x.ent) v = inv * v;
    for (auto& [i, v] : x.combo) v = inv * v;
    by_pivot.emplace(lead, std::move(x));
  }
};

template <>
bool Dict<mpq_class>::nz(const mpq_class& v) {
  return v != 0;
}
template <>
bool Dict<RF>::nz(const RF& v) {
  return !v.is_zero();
}
template <>
mpq_class Dict<mpq_class>::one() {
  return 1;
}
template <>
RF Dict<RF>::one() {
  return RF::from_mpq(1);
}

std::array<mpq_class, kNumVars> sample_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(2, 23);
  std::array<mpq_class, kNumVars> pt;
  for (int i = 0; i < kNumVars; ++i) {
    int a = num(rng), b = num(rng);
    while (b == a) b = num(rng);  // keep |value| away from 1
    mpq_class v(a, b);
    v.canonicalize();
    pt[i] = v;
  }
  return pt;
}

}  // namespace

Verifier::Verifier(std::vector<Axiom> axioms, VerifierOptions opt)
    : ax_(std::move(axioms)), opt_(opt) {
  for (auto& a : ax_) {
    if (a.el.is_zero()) throw InvalidArgument("axiom " + a.id + " is the zero element");
    if (!by_id_.emplace(a.id, a.el).second)
      throw InvalidArgument("duplicate axiom id " + a.id);
  }
}

DeriveResult Verifier::derive(const SuperElement& target, const std::string& target_id) const {
  DeriveResult res;
  if (target.is_zero()) {
    res.ok = true;
    if (opt_.mode == ModeSymbolic) res.cert = Certificate{target_id, {}};
    return res;
  }

  int L = opt_.max_len;
  if (L <= 0) {
    std::size_t longest = 0;
    for (auto& [w, c] : target.terms()) longest = std::max(longest, w.size());
    L = static_cast<int>(longest) + 4;
  }

  Closure cl(ax_, opt_, L);
  cl.run(target);
  res.stats.words = cl.rows.size();
  res.stats.candidates = cl.cands.size();
  if (cl.cands.empty()) return res;

  // column sparsity pattern shared by both solve stages
  std::vector<std::vector<std::pair<int, const RF*>>> cols(cl.cands.size());
  for (std::size_t j = 0; j < cl.cands.size(); ++j) {
    auto& cd = cl.cands[j];
    for (auto& [w, c] : ax_[cd.axiom].el.terms())
      cols[j].push_back({cl.rows.at(concat3(cd.u, w, cd.v)), &c});
  }

  std::mt19937_64 rng(opt_.seed);
  int usable = 0, sampled = 0;
  while (usable < opt_.points && sampled < 4 * opt_.points + 4) {
    ++sampled;
    auto pt = sample_point(rng);

    Dict<mpq_class> dict;
    Dict<mpq_class>::Vec tv;
    try {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        Dict<mpq_class>::Vec x;
        for (auto& [r, c] : cols[j]) x.ent[r] += c->eval(pt);
        for (auto it = x.ent.begin(); it != x.ent.end();)
          it = it->second == 0 ? x.ent.erase(it) : std::next(it);
        x.combo[static_cast<int>(j)] = 1;
        dict.insert(std::move(x));
      }
      for (auto& [w, c] : target.terms()) {
        mpq_class v = c.eval(pt);
        if (v != 0) tv.ent[cl.rows.at(w)] = v;
      }
    } catch (const DomainError&) {
      continue;  // point hit a coefficient pole: resample, consume no attempt
    }
    ++usable;
    ++res.stats.attempts;
    if (dict.reduce(tv)) {
      // residue left: the point solved nothing, so membership fails unless a
      // later point proves this one degenerate
      if (opt_.mode == ModeEval) return res;
      continue;
    }
    if (opt_.mode == ModeEval) continue;

    // exact re-solve restricted to the support the point located
    std::vector<int> supp;
    for (auto& [j, v] : tv.combo)
      if (v != 0) supp.push_back(j);
    Dict<RF> fdict;
    for (int j : supp) {
      Dict<RF>::Vec x;
      for (auto& [r, c] : cols[j]) {
        auto it = x.ent.find(r);
        if (it == x.ent.end())
          x.ent.emplace(r, *c);
        else {
          it->second += *c;
          if (it->second.is_zero()) x.ent.erase(it);
        }
      }
      x.combo[j] = RF::from_mpq(1);
      fdict.insert(std::move(x));
    }
    Dict<RF>::Vec ft;
    for (auto& [w, c] : target.terms()) ft.ent[cl.rows.at(w)] = c;
    if (fdict.reduce(ft)) continue;  // unlucky support; try another point

    // reduce keeps ent - sum(combo*col) fixed, so ent==0 means
    // target = -sum(combo*col)
    Certificate cert;
    cert.target = target_id;
    for (auto& [j, v] : ft.combo) {
      if (v.is_zero()) continue;
      auto& cd = cl.cands[j];
      cert.terms.push_back({ax_[cd.axiom].id, cd.u, cd.v, -v});
    }
    res.stats.support = cert.terms.size();
    if (!validate_certificate(cert, by_id_, target))
      throw IntegrityError("derived certificate failed exact replay for " + target_id);
    res.ok = true;
    res.cert = std::move(cert);
    return res;
  }

  if (opt_.mode == ModeEval) res.ok = usable == opt_.points && opt_.points > 0;
  return res;
}

bool validate_certificate(const Certificate& c, const std::map<std::string, SuperElement>& axioms,
                          const SuperElement& target) {
  SuperElement acc;
  for (auto& t : c.terms) {
    auto it = axioms.find(t.axiom);
    if (it == axioms.end()) return false;
    acc += (SuperElement::word(t.left) * it->second * SuperElement::word(t.right)).scaled(t.coeff);
  }
  return acc == target;
}

Certificate flatten_certificate(const Certificate& c,
                                const std::map<std::string, Certificate>& expansions) {
  Certificate cur = c;
  for (int depth = 0;; ++depth) {
    if (depth > 64)
      throw InvalidArgument("certificate expansion does not terminate (cyclic expansions?)");
    bool changed = false;
    std::vector<CertTerm> out;
    for (auto& t : cur.terms) {
      auto it = expansions.find(t.axiom);
      if (it == expansions.end()) {
        out.push_back(t);
        continue;
      }
      changed = true;
      for (auto& s : it->second.terms) {
        Word l = t.left, r = s.right;
        l.insert(l.end(), s.left.begin(), s.left.end());
        r.insert(r.end(), t.right.begin(), t.right.end());
        out.push_back({s.axiom, std::move(l), std::move(r), t.coeff * s.coeff});
      }
    }
    cur.terms = std::move(out);
    if (!changed) break;
  }

  std::map<std::tuple<std::string, Word, Word>, RF> acc;
  for (auto& t : cur.terms) {
    auto key = std::make_tuple(t.axiom, t.left, t.right);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(std::move(key), t.coeff);
    else
      it->second += t.coeff;
  }
  Certificate flat;
  flat.target = cur.target;
  for (auto& [k, v] : acc) {
    if (v.is_zero()) continue;
    flat.terms.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  }
  return flat;
}

}  // namespace uqgl
