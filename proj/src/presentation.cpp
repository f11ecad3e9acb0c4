#include "uqgl/presentation.hpp"

#include <algorithm>
#include <map>

#include "uqgl/errors.hpp"

namespace uqgl {

namespace {

int dir_of(int sign) { return sign == SignPlus ? 1 : -1; }
int flip(int sign) { return sign == SignPlus ? SignMinus : SignPlus; }
// gamma exponent carried by the sign-decorated argument z_{sign}
int gexp(int sign) { return sign == SignPlus ? 1 : -1; }

SuperElement el_letter(GeneratorKey k) { return SuperElement::letter(k); }

}  // namespace

CSeries cur_gauss(int var, GaussWhich which, int sign, int n) {
  return CSeries::half_line(var, dir_of(sign), n, [=](long m) {
    return el_letter(GeneratorKey::gauss(which, sign, static_cast<int>(m)));
  });
}

CSeries cur_gauss_inv(int var, GaussWhich which, int sign, int n) {
  if (which != GaussWhich::K1 && which != GaussWhich::K2)
    throw InvalidArgument("cur_gauss_inv: only the diagonal currents are invertible");
  GeneratorKey zero = GeneratorKey::gauss(which, sign, 0);
  return cur_gauss(var, which, sign, n).inverted(var, el_letter(GeneratorKey::inv(zero)));
}

CSeries cur_xplus(int var, int n) {
  return cur_gauss(var, GaussWhich::E, SignPlus, n).scale_arg(var, rf_g(-1)) -
         cur_gauss(var, GaussWhich::E, SignMinus, n).scale_arg(var, rf_g(1));
}

CSeries cur_xminus(int var, int n) {
  return cur_gauss(var, GaussWhich::F, SignPlus, n).scale_arg(var, rf_g(1)) -
         cur_gauss(var, GaussWhich::F, SignMinus, n).scale_arg(var, rf_g(-1));
}

CSeries cur_pair(int var, int sign, int n) {
  return cur_gauss_inv(var, GaussWhich::K1, sign, n) * cur_gauss(var, GaussWhich::K2, sign, n);
}

CSeries cur_bige(int var, int n) { return cur_xplus(var, n).scale_arg(var, rf_q()); }
CSeries cur_bigf(int var, int n) { return cur_xminus(var, n).scale_arg(var, rf_q()); }
CSeries cur_bigk(int var, int sign, int n) {
  return cur_pair(var, sign, n).scale_arg(var, rf_q());
}
CSeries cur_bigh(int var, int sign, int n) {
  return cur_gauss(var, GaussWhich::K2, sign, n).scale_arg(var, rf_q()) *
         cur_gauss(var, GaussWhich::K1, sign, n).scale_arg(var, rf_q(-1));
}

MatrixCurrent build_L_raw(int var, int sign, int n) {
  MatrixCurrent L;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++)
      L.e[i][j] = CSeries::half_line(var, dir_of(sign), n, [=](long m) {
        return el_letter(GeneratorKey::lmode(i + 1, j + 1, sign, static_cast<int>(m)));
      });
  return L;
}

MatrixCurrent build_L_gauss(int var, int sign, int n) {
  CSeries k1 = cur_gauss(var, GaussWhich::K1, sign, n);
  CSeries k2 = cur_gauss(var, GaussWhich::K2, sign, n);
  CSeries e = cur_gauss(var, GaussWhich::E, sign, n);
  CSeries f = cur_gauss(var, GaussWhich::F, sign, n);
  MatrixCurrent L;
  L.e[0][0] = k1;
  L.e[0][1] = k1 * e;
  L.e[1][0] = f * k1;
  L.e[1][1] = k2 + f * k1 * e;
  return L;
}

MatrixCurrent build_L_gauss_inv(int var, int sign, int n) {
  CSeries k1i = cur_gauss_inv(var, GaussWhich::K1, sign, n);
  CSeries k2i = cur_gauss_inv(var, GaussWhich::K2, sign, n);
  CSeries e = cur_gauss(var, GaussWhich::E, sign, n);
  CSeries f = cur_gauss(var, GaussWhich::F, sign, n);
  MatrixCurrent L;
  L.e[0][0] = k1i + e * k2i * f;
  L.e[0][1] = -(e * k2i);
  L.e[1][0] = -(k2i * f);
  L.e[1][1] = k2i;
  return L;
}

GaussParts gauss_decompose(const MatrixCurrent& L, int var, const SuperElement& corner_inv) {
  GaussParts p;
  p.k1 = L.e[0][0];
  CSeries k1i = L.e[0][0].inverted(var, corner_inv);
  p.e = k1i * L.e[0][1];
  p.f = L.e[1][0] * k1i;
  p.k2 = L.e[1][1] - L.e[1][0] * k1i * L.e[0][1];
  return p;
}

SuperElement normalize_primitive(const SuperElement& e) {
  if (e.is_zero()) return e;
  std::vector<RF> cs;
  cs.reserve(e.terms().size());
  for (const auto& [w, c] : e.terms()) cs.push_back(c);
  Cleared cl = clear_denominators(cs);
  Poly g;
  for (const Poly& p : cl.numerators) g = Poly::gcd(g, p);
  SuperElement out;
  size_t i = 0;
  for (const auto& [w, c] : e.terms()) {
    auto q = Poly::try_divide(cl.numerators[i++], g);
    if (!q) throw DomainError("normalize_primitive: gcd does not divide");
    out.add(w, RF(*q));
  }
  if (std::prev(out.terms().end())->second.num().leading().second < 0) out = -out;
  return out;
}

RelationSet inverse_pair_axioms() {
  RelationSet out;
  SuperElement one = SuperElement::unit();
  for (GaussWhich w : {GaussWhich::K1, GaussWhich::K2})
    for (int sign : {SignPlus, SignMinus}) {
      GeneratorKey x = GeneratorKey::gauss(w, sign, 0);
      SuperElement lx = el_letter(x), li = el_letter(GeneratorKey::inv(x));
      long which = w == GaussWhich::K1 ? 1 : 2;
      out.push_back({"cancel", {which, sign, 0}, lx * li - one});
      out.push_back({"cancel", {which, sign, 1}, li * lx - one});
    }
  return out;
}

CancelTable inverse_pair_table() {
  CancelTable t;
  for (GaussWhich w : {GaussWhich::K1, GaussWhich::K2})
    for (int sign : {SignPlus, SignMinus}) {
      GeneratorKey x = GeneratorKey::gauss(w, sign, 0);
      t.add_mutual(x, GeneratorKey::inv(x));
    }
  return t;
}

namespace {

void extract_rows(RelationSet& out, const CSeries& s, const std::string& slug,
                  const std::vector<long>& idx, long cap) {
  Iv za = s.known_modes(VarZ), wa = s.known_modes(VarW);
  if (cap >= 0) {
    za = Iv::inter(za, Iv::of(-cap, cap));
    wa = Iv::inter(wa, Iv::of(-cap, cap));
  }
  if (za.empty() || wa.empty()) return;
  for (long a = za.lo; a <= za.hi; a++)
    for (long b = wa.lo; b <= wa.hi; b++) {
      SuperElement el = s.at(a, b);
      if (el.is_zero()) continue;
      Relation r{slug, idx, normalize_primitive(el)};
      r.idx.push_back(a);
      r.idx.push_back(b);
      out.push_back(std::move(r));
    }
}

// one summand of a relation: scalar coefficient times a product of currents
struct TermSpec {
  RF c;
  std::vector<CSeries> fs;
};

// clear the coefficients' denominators and sum the cleared products
CSeries assemble(const std::vector<TermSpec>& terms) {
  std::vector<RF> cs;
  cs.reserve(terms.size());
  for (const auto& t : terms) cs.push_back(t.c);
  Cleared cl = clear_denominators(cs);
  CSeries sum;
  for (size_t i = 0; i < terms.size(); i++) {
    if (cl.numerators[i].is_zero()) continue;
    CSeries prod = CSeries::from_scalar(RF(cl.numerators[i]));
    for (const CSeries& f : terms[i].fs) prod = prod * f;
    sum = sum + prod;
  }
  return sum;
}

void extract_delta_rows(RelationSet& out, const std::string& slug, const CSeries& lhs,
                        const std::vector<DeltaSeries>& rhs, long cap) {
  Iv za = lhs.known_modes(VarZ), wa = lhs.known_modes(VarW);
  if (cap >= 0) {
    za = Iv::inter(za, Iv::of(-cap, cap));
    wa = Iv::inter(wa, Iv::of(-cap, cap));
  }
  if (za.empty() || wa.empty()) return;
  for (long a = za.lo; a <= za.hi; a++)
    for (long b = wa.lo; b <= wa.hi; b++) {
      bool ok = true;
      for (const auto& d : rhs) ok = ok && d.known(a, b);
      if (!ok) continue;
      SuperElement el = lhs.at(a, b);
      for (const auto& d : rhs) el -= d.at(a, b);
      if (el.is_zero()) continue;
      out.push_back({slug, {a, b}, normalize_primitive(el)});
    }
}

const std::map<std::string, std::vector<std::string>>& reading_table() {
  static const std::map<std::string, std::vector<std::string>> t = {
      {"k2invf-braid-x", {"", "uniform-pole"}},
      {"k2conj-xp", {"", "self-arg"}},
      {"ef-mix", {"", "w-weight"}},
  };
  return t;
}

}  // namespace

std::vector<std::string> family_readings(const std::string& slug) {
  auto it = reading_table().find(slug);
  if (it != reading_table().end()) return it->second;
  return {""};
}

namespace {

struct RllSetup {
  MatrixCurrent L1, L2;
  Mat RL, RR;
  RF dpoly;
  std::string slug;
};

RllSetup rll_setup(int sign1, int sign2, int n_gen, bool raw, bool inverse) {
  RllSetup s;
  if (inverse) {
    s.L1 = build_L_gauss_inv(VarZ, sign1, n_gen);
    s.L2 = build_L_gauss_inv(VarW, sign2, n_gen);
  } else {
    s.L1 = raw ? build_L_raw(VarZ, sign1, n_gen) : build_L_gauss(VarZ, sign1, n_gen);
    s.L2 = raw ? build_L_raw(VarW, sign2, n_gen) : build_L_gauss(VarW, sign2, n_gen);
  }
  RF x = rf_z() * rf_w(-1);
  RF xl = x, xr = x;
  s.dpoly = rf_z() * rf_q() - rf_w() * rf_q(-1);
  if (sign1 != sign2) {
    int u = sign1 == SignPlus ? -2 : 2;  // left spectral shift z_{s1}/w_{s2}
    xl = x * rf_g(u);
    xr = x * rf_g(-u);
    s.dpoly = (rf_z() * rf_g(-2) * rf_q() - rf_w() * rf_q(-1)) *
              (rf_z() * rf_g(2) * rf_q() - rf_w() * rf_q(-1));
  }
  s.slug = std::string(inverse ? "rllinv-" : "rll-") + (sign1 == SignPlus ? "p" : "m") +
           (sign2 == SignPlus ? "p" : "m");
  if (inverse) {
    // inverting swaps the sides the spectral arguments live on and clears
    // the mirrored poles
    s.dpoly = rf_w() * rf_q() - rf_z() * rf_q(-1);
    if (sign1 != sign2)
      s.dpoly = (rf_w() * rf_g(-2) * rf_q() - rf_z() * rf_q(-1)) *
                (rf_w() * rf_g(2) * rf_q() - rf_z() * rf_q(-1));
    Mat P = perm4_plain();
    s.RL = P * rmatrix(xr.inverse()) * P;
    s.RR = P * rmatrix(xl.inverse()) * P;
  } else {
    s.RL = rmatrix(xl);
    s.RR = rmatrix(xr);
  }
  return s;
}

std::vector<SeriesInstance> rll_instances(const RllSetup& s) {
  std::vector<SeriesInstance> out;
  for (int i = 0; i < 2; i++)
    for (int k = 0; k < 2; k++)
      for (int j = 0; j < 2; j++)
        for (int l = 0; l < 2; l++) {
          CSeries lhs, rhs;
          for (int a = 0; a < 2; a++)
            for (int b = 0; b < 2; b++) {
              RF rl = s.RL.at(pair_index(i, k), pair_index(a, b)) * s.dpoly;
              if (!rl.is_zero()) {
                int sg = parity2(j) * (parity2(b) + parity2(l));
                if (sg % 2) rl = -rl;
                lhs = lhs + CSeries::from_scalar(rl) * s.L1.e[a][j] * s.L2.e[b][l];
              }
              RF rr = s.RR.at(pair_index(a, b), pair_index(j, l)) * s.dpoly;
              if (!rr.is_zero()) {
                int sg = parity2(i) * (parity2(k) + parity2(b));
                if (sg % 2) rr = -rr;
                rhs = rhs + s.L2.e[k][b] * s.L1.e[i][a] * CSeries::from_scalar(rr);
              }
            }
          out.push_back({{pair_index(i, k), pair_index(j, l)}, lhs - rhs});
        }
  return out;
}

}  // namespace

RelationSet build_rll(int sign1, int sign2, int n_gen, long cap, bool raw) {
  RllSetup s = rll_setup(sign1, sign2, n_gen, raw, false);
  RelationSet out;
  for (auto& inst : rll_instances(s)) extract_rows(out, inst.s, s.slug, inst.idx, cap);
  return out;
}

RelationSet build_rll_inv(int sign1, int sign2, int n_gen, long cap) {
  RllSetup s = rll_setup(sign1, sign2, n_gen, false, true);
  RelationSet out;
  for (auto& inst : rll_instances(s)) extract_rows(out, inst.s, s.slug, inst.idx, cap);
  return out;
}

std::vector<SeriesInstance> build_rll_series(int sign1, int sign2, int n_gen, bool inverse) {
  return rll_instances(rll_setup(sign1, sign2, n_gen, false, inverse));
}

static RelationSet family_rows(const std::string& slug, int n, long cap,
                               const std::string& reading,
                               std::vector<SeriesInstance>* series_out) {
  auto rds = family_readings(slug);
  if (std::find(rds.begin(), rds.end(), reading) == rds.end())
    throw InvalidArgument("build_family: unknown reading '" + reading + "' for " + slug);

  const RF Q = rf_q(), Qi = rf_q(-1), dq = rf_qdiff(), one = RF::constant(1);
  const RF z = rf_z(), w = rf_w();
  auto gz = [](int e) { return rf_z() * rf_g(e); };
  auto gw = [](int e) { return rf_w() * rf_g(e); };
  auto E_ = [&](int var, int s) { return cur_gauss(var, GaussWhich::E, s, n); };
  auto F_ = [&](int var, int s) { return cur_gauss(var, GaussWhich::F, s, n); };
  auto K1 = [&](int var, int s) { return cur_gauss(var, GaussWhich::K1, s, n); };
  auto K2 = [&](int var, int s) { return cur_gauss(var, GaussWhich::K2, s, n); };
  auto K1i = [&](int var, int s) { return cur_gauss_inv(var, GaussWhich::K1, s, n); };
  auto K2i = [&](int var, int s) { return cur_gauss_inv(var, GaussWhich::K2, s, n); };
  auto XP = [&](int var) { return cur_xplus(var, n); };
  auto XM = [&](int var) { return cur_xminus(var, n); };
  auto C_ = [&](int var, int s) { return cur_pair(var, s, n); };
  auto L22 = [&](int var, int s) { return K2(var, s) + F_(var, s) * K1(var, s) * E_(var, s); };
  auto arg = [](CSeries c, int var, int e) { return c.scale_arg(var, rf_g(e)); };

  RelationSet out;
  auto emit = [&](const std::vector<TermSpec>& terms, std::vector<long> idx) {
    if (series_out)
      series_out->push_back({std::move(idx), assemble(terms)});
    else
      extract_rows(out, assemble(terms), slug, idx, cap);
  };

  // two-variable commutator families ------------------------------------
  if (slug == "k1-comm") {
    for (int s1 : {SignPlus, SignMinus})
      for (int s2 : {SignPlus, SignMinus})
        emit({{one, {K1(VarZ, s1), K1(VarW, s2)}}, {-one, {K1(VarW, s2), K1(VarZ, s1)}}},
             {s1, s2});
    return out;
  }
  if (slug == "k2-comm") {
    for (int s : {SignPlus, SignMinus})
      emit({{one, {K2(VarZ, s), K2(VarW, s)}}, {-one, {K2(VarW, s), K2(VarZ, s)}}}, {s});
    return out;
  }
  if (slug == "k1-k2-comm") {
    for (int s : {SignPlus, SignMinus})
      emit({{one, {K1(VarZ, s), K2(VarW, s)}}, {-one, {K2(VarW, s), K1(VarZ, s)}}}, {s});
    return out;
  }
  if (slug == "k2inv-comm") {
    for (int s : {SignPlus, SignMinus})
      emit({{one, {K2i(VarZ, s), K2i(VarW, s)}}, {-one, {K2i(VarW, s), K2i(VarZ, s)}}}, {s});
    return out;
  }
  if (slug == "k2inv-exchange-x") {
    emit({{(gw(1) * Q - gz(-1) * Qi) / (gz(-1) * Q - gw(1) * Qi),
           {K2i(VarZ, SignPlus), K2i(VarW, SignMinus)}},
          {-(gw(-1) * Q - gz(1) * Qi) / (gz(1) * Q - gw(-1) * Qi),
           {K2i(VarW, SignMinus), K2i(VarZ, SignPlus)}}},
         {});
    return out;
  }
  if (slug == "k1-k2inv-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{(gz(s) - gw(-s)) / (gz(s) * Q - gw(-s) * Qi), {K1(VarZ, p), K2i(VarW, flip(p))}},
            {-(gz(-s) - gw(s)) / (gz(-s) * Q - gw(s) * Qi), {K2i(VarW, flip(p)), K1(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2inv-k1-x") {
    emit({{(gw(1) - gz(-1)) / (gw(1) * Q - gz(-1) * Qi),
           {K2i(VarZ, SignPlus), K1(VarW, SignMinus)}},
          {-(gw(-1) - gz(1)) / (gw(-1) * Q - gz(1) * Qi),
           {K1(VarW, SignMinus), K2i(VarZ, SignPlus)}}},
         {});
    return out;
  }

  // triple-product braid families ----------------------------------------
  if (slug == "k1-k1e-braid") {
    for (int s : {SignPlus, SignMinus}) {
      RF D = z * Q - w * Qi;
      emit({{one, {K1(VarZ, s), K1(VarW, s), E_(VarW, s)}},
            {-(z - w) / D, {K1(VarW, s), E_(VarW, s), K1(VarZ, s)}},
            {-w * dq / D, {K1(VarW, s), K1(VarZ, s), E_(VarZ, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "k1-k1e-braid-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D = gz(s) * Q - gw(-s) * Qi;
      emit({{one, {K1(VarZ, p), K1(VarW, o), E_(VarW, o)}},
            {-(gz(s) - gw(-s)) / D, {K1(VarW, o), E_(VarW, o), K1(VarZ, p)}},
            {-gw(-s) * dq / D, {K1(VarW, o), K1(VarZ, p), E_(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "fk1-k1-braid") {
    for (int s : {SignPlus, SignMinus}) {
      RF D = z * Q - w * Qi;
      emit({{one, {F_(VarW, s), K1(VarW, s), K1(VarZ, s)}},
            {-(z - w) / D, {K1(VarZ, s), F_(VarW, s), K1(VarW, s)}},
            {-z * dq / D, {F_(VarZ, s), K1(VarZ, s), K1(VarW, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "fk1-k1-braid-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D = gz(-s) * Q - gw(s) * Qi;
      emit({{one, {F_(VarW, o), K1(VarW, o), K1(VarZ, p)}},
            {-(gz(-s) - gw(s)) / D, {K1(VarZ, p), F_(VarW, o), K1(VarW, o)}},
            {-gz(-s) * dq / D, {F_(VarZ, p), K1(VarZ, p), K1(VarW, o)}}},
           {p});
    }
    return out;
  }
  if (slug == "ek2inv-braid") {
    for (int s : {SignPlus, SignMinus}) {
      RF D = z * Q - w * Qi;
      emit({{(w * Q - z * Qi) / D, {E_(VarZ, s), K2i(VarZ, s), K2i(VarW, s)}},
            {(z - w) / D, {K2i(VarW, s), E_(VarZ, s), K2i(VarZ, s)}},
            {-z * dq / D, {E_(VarW, s), K2i(VarW, s), K2i(VarZ, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "ek2inv-braid-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D1 = gz(-s) * Q - gw(s) * Qi, D2 = gz(s) * Q - gw(-s) * Qi;
      emit({{(gw(s) * Q - gz(-s) * Qi) / D1, {E_(VarZ, p), K2i(VarZ, p), K2i(VarW, o)}},
            {(gz(s) - gw(-s)) / D2, {K2i(VarW, o), E_(VarZ, p), K2i(VarZ, p)}},
            {-gz(s) * dq / D2, {E_(VarW, o), K2i(VarW, o), K2i(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2invf-braid") {
    for (int s : {SignPlus, SignMinus}) {
      RF D = z * Q - w * Qi;
      emit({{(z - w) / D, {K2i(VarZ, s), F_(VarZ, s), K2i(VarW, s)}},
            {-w * dq / D, {K2i(VarZ, s), K2i(VarW, s), F_(VarW, s)}},
            {(w * Q - z * Qi) / D, {K2i(VarW, s), K2i(VarZ, s), F_(VarZ, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "k2invf-braid-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D1 = gz(-s) * Q - gw(s) * Qi, D2 = gz(s) * Q - gw(-s) * Qi;
      RF third = reading == "uniform-pole" ? (gw(s) * Q - gz(-s) * Qi) / D1
                                           : (gw(-s) * Q - gz(s) * Qi) / D2;
      emit({{(gz(-s) - gw(s)) / D1, {K2i(VarZ, p), F_(VarZ, p), K2i(VarW, o)}},
            {-gw(s) * dq / D1, {K2i(VarZ, p), K2i(VarW, o), F_(VarW, o)}},
            {third, {K2i(VarW, o), K2i(VarZ, p), F_(VarZ, p)}}},
           {p});
    }
    return out;
  }

  // diagonal-conjugation families ----------------------------------------
  if (slug == "k1conj-e") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{gz(s) - w, {K1i(VarZ, p), arg(E_(VarW, p), VarW, -s), K1(VarZ, p)}},
            {-(gz(s) * Q - w * Qi), {arg(E_(VarW, p), VarW, -s)}},
            {w * dq, {E_(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1conj-e-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      emit({{gz(s) - w, {K1i(VarZ, p), arg(E_(VarW, o), VarW, s), K1(VarZ, p)}},
            {-(gz(s) * Q - w * Qi), {arg(E_(VarW, o), VarW, s)}},
            {w * dq, {E_(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1conj-f") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{z - gw(s), {K1(VarZ, p), arg(F_(VarW, p), VarW, s), K1i(VarZ, p)}},
            {z * dq, {F_(VarZ, p)}},
            {-(z * Q - gw(s) * Qi), {arg(F_(VarW, p), VarW, s)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1conj-f-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      emit({{gz(-s) - w, {K1(VarZ, p), arg(F_(VarW, o), VarW, -s), K1i(VarZ, p)}},
            {gz(-s) * dq, {F_(VarZ, p)}},
            {-(gz(-s) * Q - w * Qi), {arg(F_(VarW, o), VarW, -s)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1conj-xp") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{gz(s) - w, {K1i(VarZ, p), XP(VarW), K1(VarZ, p)}},
            {-(gz(s) * Q - w * Qi), {XP(VarW)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1conj-xm") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{z - gw(s), {K1(VarZ, p), XM(VarW), K1i(VarZ, p)}},
            {-(z * Q - gw(s) * Qi), {XM(VarW)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2conj-e") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{gw(s) * Q - z * Qi, {arg(E_(VarZ, p), VarZ, -s)}},
            {z - gw(s), {K2i(VarW, p), arg(E_(VarZ, p), VarZ, -s), K2(VarW, p)}},
            {-z * dq, {E_(VarW, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2conj-e-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      emit({{gw(-s) * Q - z * Qi, {arg(E_(VarZ, p), VarZ, -s)}},
            {z - gw(-s), {K2i(VarW, o), arg(E_(VarZ, p), VarZ, -s), K2(VarW, o)}},
            {-z * dq, {E_(VarW, o)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2conj-f") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{gz(s) - w, {K2(VarW, p), arg(F_(VarZ, p), VarZ, s), K2i(VarW, p)}},
            {-w * dq, {F_(VarW, p)}},
            {w * Q - gz(s) * Qi, {arg(F_(VarZ, p), VarZ, s)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2conj-f-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      emit({{gz(-s) - w, {K2(VarW, o), arg(F_(VarZ, p), VarZ, s), K2i(VarW, o)}},
            {-w * dq, {F_(VarW, o)}},
            {w * Q - gz(-s) * Qi, {arg(F_(VarZ, p), VarZ, s)}}},
           {p});
    }
    return out;
  }
  if (slug == "k2conj-xp") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      CSeries rhs = reading == "self-arg" ? XP(VarZ) : XP(VarW);
      emit({{gz(s) - w, {K2i(VarZ, p), XP(VarW), K2(VarZ, p)}},
            {-(gz(s) * Q - w * Qi), {rhs}}},
           {p});
    }
    return out;
  }
  if (slug == "k2conj-xm") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{z - gw(s), {K2(VarZ, p), XM(VarW), K2i(VarZ, p)}},
            {-(z * Q - gw(s) * Qi), {XM(VarW)}}},
           {p});
    }
    return out;
  }

  // step-current braids and mixed products --------------------------------
  if (slug == "ee-braid") {
    for (int s : {SignPlus, SignMinus})
      emit({{z * Q - w * Qi, {K1(VarZ, s), E_(VarZ, s), K1(VarW, s), E_(VarW, s)}},
            {-(w * Q - z * Qi), {K1(VarW, s), E_(VarW, s), K1(VarZ, s), E_(VarZ, s)}}},
           {s});
    return out;
  }
  if (slug == "ee-braid-x") {
    emit({{gz(1) * Q - gw(-1) * Qi,
           {K1(VarZ, SignPlus), E_(VarZ, SignPlus), K1(VarW, SignMinus), E_(VarW, SignMinus)}},
          {-(gw(-1) * Q - gz(1) * Qi),
           {K1(VarW, SignMinus), E_(VarW, SignMinus), K1(VarZ, SignPlus), E_(VarZ, SignPlus)}}},
         {});
    return out;
  }
  if (slug == "ff-braid") {
    for (int s : {SignPlus, SignMinus})
      emit({{w * Q - z * Qi, {F_(VarZ, s), K1(VarZ, s), F_(VarW, s), K1(VarW, s)}},
            {-(z * Q - w * Qi), {F_(VarW, s), K1(VarW, s), F_(VarZ, s), K1(VarZ, s)}}},
           {s});
    return out;
  }
  if (slug == "ff-braid-x") {
    emit({{gw(1) * Q - gz(-1) * Qi,
           {F_(VarZ, SignPlus), K1(VarZ, SignPlus), F_(VarW, SignMinus), K1(VarW, SignMinus)}},
          {gw(1) * Qi - gz(-1) * Q,
           {F_(VarW, SignMinus), K1(VarW, SignMinus), F_(VarZ, SignPlus), K1(VarZ, SignPlus)}}},
         {});
    return out;
  }
  if (slug == "xp-anticomm") {
    emit({{one, {XP(VarZ), XP(VarW)}}, {one, {XP(VarW), XP(VarZ)}}}, {});
    return out;
  }
  if (slug == "xm-anticomm") {
    emit({{one, {XM(VarZ), XM(VarW)}}, {one, {XM(VarW), XM(VarZ)}}}, {});
    return out;
  }
  if (slug == "ef-mix") {
    for (int s : {SignPlus, SignMinus}) {
      RF fourth = reading == "w-weight" ? w : z;
      emit({{-(z - w), {K1(VarZ, s), E_(VarZ, s), F_(VarW, s), K1(VarW, s)}},
            {-(z - w), {F_(VarW, s), K1(VarW, s), K1(VarZ, s), E_(VarZ, s)}},
            {z * dq, {L22(VarZ, s), K1(VarW, s)}},
            {-fourth * dq, {L22(VarW, s), K1(VarZ, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "ef-mix-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D1 = gz(-s) * Q - gw(s) * Qi, D2 = gz(s) * Q - gw(-s) * Qi;
      emit({{(gz(-s) - gw(s)) / D1, {K1(VarZ, p), E_(VarZ, p), F_(VarW, o), K1(VarW, o)}},
            {(gz(s) - gw(-s)) / D2, {F_(VarW, o), K1(VarW, o), K1(VarZ, p), E_(VarZ, p)}},
            {-gz(-s) * dq / D1, {L22(VarZ, p), K1(VarW, o)}},
            {gz(s) * dq / D2, {L22(VarW, o), K1(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1e-reorder") {
    for (int s : {SignPlus, SignMinus}) {
      RF D = z * Q - w * Qi;
      emit({{one, {K1(VarZ, s), E_(VarZ, s), K1(VarW, s)}},
            {-z * dq / D, {K1(VarW, s), E_(VarW, s), K1(VarZ, s)}},
            {-(z - w) / D, {K1(VarW, s), K1(VarZ, s), E_(VarZ, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "k1f-reorder") {
    for (int s : {SignPlus, SignMinus}) {
      RF D = z * Q - w * Qi;
      emit({{(z - w) / D, {K1(VarZ, s), F_(VarW, s), K1(VarW, s)}},
            {-one, {F_(VarW, s), K1(VarW, s), K1(VarZ, s)}},
            {z * dq / D, {F_(VarZ, s), K1(VarZ, s), K1(VarW, s)}}},
           {s});
    }
    return out;
  }
  if (slug == "k1e-reorder-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D = gz(s) * Q - gw(-s) * Qi;
      emit({{one, {K1(VarZ, p), E_(VarZ, p), K1(VarW, o)}},
            {-gz(s) * dq / D, {K1(VarW, o), E_(VarW, o), K1(VarZ, p)}},
            {-(gz(s) - gw(-s)) / D, {K1(VarW, o), K1(VarZ, p), E_(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "k1f-reorder-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      RF D = gz(-s) * Q - gw(s) * Qi;
      emit({{(gz(-s) - gw(s)) / D, {K1(VarZ, p), F_(VarW, o), K1(VarW, o)}},
            {-one, {F_(VarW, o), K1(VarW, o), K1(VarZ, p)}},
            {gz(-s) * dq / D, {F_(VarZ, p), K1(VarZ, p), K1(VarW, o)}}},
           {p});
    }
    return out;
  }
  if (slug == "ef-pair") {
    for (int s : {SignPlus, SignMinus})
      emit({{z - w, {E_(VarZ, s), F_(VarW, s)}},
            {z - w, {F_(VarW, s), E_(VarZ, s)}},
            {-z * dq, {C_(VarZ, s)}},
            {z * dq, {C_(VarW, s)}}},
           {s});
    return out;
  }
  if (slug == "ef-pair-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      emit({{gz(-s) - gw(s), {E_(VarZ, p), F_(VarW, o)}},
            {gz(-s) - gw(s), {F_(VarW, o), E_(VarZ, p)}},
            {-gz(-s) * dq, {C_(VarZ, p)}},
            {(gz(-s) - gw(s)) / (gz(s) - gw(-s)) * gz(s) * dq, {C_(VarW, o)}}},
           {p});
    }
    return out;
  }
  if (slug == "xp-xm-delta") {
    if (series_out) throw InvalidArgument(slug + " is delta-supported; no single-series form");
    CSeries lhs = assemble({{one, {XP(VarZ), XM(VarW)}}, {one, {XM(VarW), XP(VarZ)}}});
    DeltaSeries d1{rf_g(-2), {{0, dq}}, C_(VarZ, SignMinus).scale_arg(VarZ, rf_g(1)), VarZ};
    DeltaSeries d2{rf_g(2), {{0, -dq}}, C_(VarW, SignPlus).scale_arg(VarW, rf_g(1)), VarW};
    extract_delta_rows(out, slug, lhs, {d1, d2}, cap);
    return out;
  }

  // rescaled-current corollaries ------------------------------------------
  auto BK = [&](int var, int s) { return cur_bigk(var, s, n); };
  auto BH = [&](int var, int s) { return cur_bigh(var, s, n); };
  auto BE = [&](int var) { return cur_bige(var, n); };
  auto BF = [&](int var) { return cur_bigf(var, n); };
  if (slug == "tr-kk") {
    for (int s1 : {SignPlus, SignMinus})
      for (int s2 : {SignPlus, SignMinus})
        emit({{one, {BK(VarZ, s1), BK(VarW, s2)}}, {-one, {BK(VarW, s2), BK(VarZ, s1)}}},
             {s1, s2});
    return out;
  }
  if (slug == "tr-hh") {
    for (int s : {SignPlus, SignMinus})
      emit({{one, {BH(VarZ, s), BH(VarW, s)}}, {-one, {BH(VarW, s), BH(VarZ, s)}}}, {s});
    return out;
  }
  if (slug == "tr-kh") {
    for (int s : {SignPlus, SignMinus})
      emit({{one, {BK(VarZ, s), BH(VarW, s)}}, {-one, {BH(VarW, s), BK(VarZ, s)}}}, {s});
    return out;
  }
  if (slug == "tr-hh-x") {
    RF c1 = (gz(1) * Q - gw(-1) * Qi) * (gz(-1) * Qi - gw(1) * Q);
    RF c2 = (gz(-1) * Q - gw(1) * Qi) * (gz(1) * Qi - gw(-1) * Q);
    emit({{c1 * c1, {BH(VarZ, SignPlus), BH(VarW, SignMinus)}},
          {-c2 * c2, {BH(VarW, SignMinus), BH(VarZ, SignPlus)}}},
         {});
    return out;
  }
  if (slug == "tr-kh-x") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p), o = flip(p);
      emit({{(gw(s) * Q - gz(-s) * Qi) * (gz(s) * Q - gw(-s) * Qi), {BK(VarZ, p), BH(VarW, o)}},
            {-(gw(-s) * Q - gz(s) * Qi) * (gz(-s) * Q - gw(s) * Qi), {BH(VarW, o), BK(VarZ, p)}}},
           {p});
    }
    return out;
  }
  if (slug == "tr-ke") {
    for (int p : {SignPlus, SignMinus})
      emit({{one, {BK(VarZ, p), BE(VarW)}}, {-one, {BE(VarW), BK(VarZ, p)}}}, {p});
    return out;
  }
  if (slug == "tr-kf") {
    for (int p : {SignPlus, SignMinus})
      emit({{one, {BK(VarZ, p), BF(VarW)}}, {-one, {BF(VarW), BK(VarZ, p)}}}, {p});
    return out;
  }
  if (slug == "tr-eh") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{gz(s) * Qi - w * Q, {BE(VarW), BH(VarZ, p)}},
            {-(gz(s) * Q - w * Qi), {BH(VarZ, p), BE(VarW)}}},
           {p});
    }
    return out;
  }
  if (slug == "tr-fh") {
    for (int p : {SignPlus, SignMinus}) {
      int s = gexp(p);
      emit({{gz(-s) * Q - w * Qi, {BF(VarW), BH(VarZ, p)}},
            {-(gz(-s) * Qi - w * Q), {BH(VarZ, p), BF(VarW)}}},
           {p});
    }
    return out;
  }
  if (slug == "tr-ee") {
    emit({{one, {BE(VarZ), BE(VarW)}}, {one, {BE(VarW), BE(VarZ)}}}, {});
    return out;
  }
  if (slug == "tr-ff") {
    emit({{one, {BF(VarZ), BF(VarW)}}, {one, {BF(VarW), BF(VarZ)}}}, {});
    return out;
  }
  if (slug == "tr-ef-delta") {
    if (series_out) throw InvalidArgument(slug + " is delta-supported; no single-series form");
    CSeries lhs = assemble({{one, {BE(VarZ), BF(VarW)}}, {one, {BF(VarW), BE(VarZ)}}});
    DeltaSeries d1{rf_g(-2), {{0, dq}}, cur_bigk(VarZ, SignMinus, n).scale_arg(VarZ, rf_g(1)),
                   VarZ};
    DeltaSeries d2{rf_g(2), {{0, -dq}}, cur_bigk(VarW, SignPlus, n).scale_arg(VarW, rf_g(1)),
                   VarW};
    extract_delta_rows(out, slug, lhs, {d1, d2}, cap);
    return out;
  }

  throw InvalidArgument("build_family: unknown family " + slug);
}

RelationSet build_family(const std::string& slug, int n, long cap, const std::string& reading) {
  return family_rows(slug, n, cap, reading, nullptr);
}

std::vector<SeriesInstance> build_family_series(const std::string& slug, int n,
                                                const std::string& reading) {
  std::vector<SeriesInstance> v;
  family_rows(slug, n, -1, reading, &v);
  return v;
}

UnitMatch match_up_to_unit(const CSeries& fam, const CSeries& comp) {
  // equality up to a q,g scalar on the overlap of the determined boxes
  auto eq_scaled = [](const CSeries& a, const CSeries& b, RF& unit) {
    Iv za = Iv::inter(a.known_modes(VarZ), b.known_modes(VarZ));
    Iv wa = Iv::inter(a.known_modes(VarW), b.known_modes(VarW));
    if (za.empty() || wa.empty()) return false;
    bool pinned = false;
    for (long m1 = za.lo; m1 <= za.hi; m1++)
      for (long m2 = wa.lo; m2 <= wa.hi; m2++) {
        SuperElement ea = a.at(m1, m2), eb = b.at(m1, m2);
        if (ea.is_zero() != eb.is_zero()) return false;
        if (ea.is_zero()) continue;
        if (!pinned) {
          auto& [w0, c0] = *ea.terms().begin();
          auto it = eb.terms().find(w0);
          if (it == eb.terms().end()) return false;
          unit = it->second / c0;
          pinned = true;
        }
        if (!(ea.scaled(unit) == eb)) return false;
      }
    return pinned;  // a vacuous overlap proves nothing
  };

  const RF Q = rf_q(), Qi = rf_q(-1);
  std::vector<RF> factors = {RF::constant(1),
                             rf_z() * Q - rf_w() * Qi,
                             rf_z() * rf_g(-2) * Q - rf_w() * Qi,
                             rf_z() * rf_g(2) * Q - rf_w() * Qi,
                             rf_w() * Q - rf_z() * Qi,
                             rf_w() * rf_g(-2) * Q - rf_z() * Qi,
                             rf_w() * rf_g(2) * Q - rf_z() * Qi};
  UnitMatch m;
  for (int side = 0; side < 2; side++)
    for (const RF& f : factors) {
      if (side == 1 && f == RF::constant(1)) continue;  // mirror of the side-0 check
      const CSeries& base = side == 0 ? fam : comp;
      const CSeries& other = side == 0 ? comp : fam;
      CSeries lifted = f == RF::constant(1) ? base : base * CSeries::from_scalar(f);
      RF unit;
      if (eq_scaled(lifted, other, unit)) {
        m.ok = true;
        m.side = side;
        m.factor = f;
        m.unit = unit;
        return m;
      }
    }
  return m;
}

std::vector<std::string> family_slugs() {
  return {
      "k1-comm",        "k2-comm",        "k1-k2-comm",      "k2inv-comm",
      "k2inv-exchange-x", "k1-k2inv-x",   "k2inv-k1-x",      "k1-k1e-braid",
      "k1-k1e-braid-x", "fk1-k1-braid",   "fk1-k1-braid-x",  "k1conj-e",
      "k1conj-e-x",     "k1conj-f",       "k1conj-f-x",      "k1conj-xp",
      "k1conj-xm",      "ek2inv-braid",   "ek2inv-braid-x",  "k2invf-braid",
      "k2invf-braid-x", "k2conj-e",       "k2conj-e-x",      "k2conj-f",
      "k2conj-f-x",     "k2conj-xp",      "k2conj-xm",       "ee-braid",
      "ee-braid-x",     "ff-braid",       "ff-braid-x",      "xp-anticomm",
      "xm-anticomm",    "ef-mix",         "ef-mix-x",        "k1e-reorder",
      "k1f-reorder",    "k1e-reorder-x",  "k1f-reorder-x",   "ef-pair",
      "ef-pair-x",      "xp-xm-delta",    "tr-kk",           "tr-hh",
      "tr-kh",          "tr-hh-x",        "tr-kh-x",         "tr-ke",
      "tr-kf",          "tr-eh",          "tr-fh",           "tr-ee",
      "tr-ff",          "tr-ef-delta",
  };
}

std::vector<std::string> drinfeld_slugs() {
  return {"k1-comm",    "k2-comm",    "k1-k2-comm", "k2inv-comm", "k2inv-exchange-x",
          "k1-k2inv-x", "k2inv-k1-x", "k1conj-xp",  "k1conj-xm",  "k2conj-xp",
          "k2conj-xm",  "xp-anticomm", "xm-anticomm", "xp-xm-delta"};
}

std::vector<std::string> translated_slugs() {
  return {"tr-kk", "tr-hh", "tr-kh", "tr-hh-x", "tr-kh-x", "tr-ke",
          "tr-kf", "tr-eh", "tr-fh", "tr-ee",   "tr-ff",   "tr-ef-delta"};
}

}  // namespace uqgl
