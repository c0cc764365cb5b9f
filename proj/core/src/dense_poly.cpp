#include "dense_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace airycoef::detail {

bool is_zero(const DPoly& p, int l) { return l == 0 ? p.n == 0 : p.c.empty(); }

int degree(const DPoly& p, int l) { return l == 0 ? (p.n == 0 ? -1 : 0) : static_cast<int>(p.c.size()) - 1; }

DPoly constant(const Integer& k, int l) {
  DPoly p;
  if (l == 0) {
    p.n = k;
  } else if (k != 0) {
    p.c.push_back(constant(k, l - 1));
  }
  return p;
}

void trim(DPoly& p, int l) {
  if (l == 0) return;
  while (!p.c.empty() && is_zero(p.c.back(), l - 1)) p.c.pop_back();
}

namespace {

void add_to(DPoly& acc, const DPoly& x, int l, bool subtract) {
  if (l == 0) {
    if (subtract) {
      acc.n -= x.n;
    } else {
      acc.n += x.n;
    }
    return;
  }
  if (acc.c.size() < x.c.size()) acc.c.resize(x.c.size());
  for (std::size_t i = 0; i < x.c.size(); ++i) add_to(acc.c[i], x.c[i], l - 1, subtract);
  trim(acc, l);
}

// acc += x * y (or -=).
void addmul(DPoly& acc, const DPoly& x, const DPoly& y, int l, bool subtract) {
  if (l == 0) {
    if (subtract) {
      mpz_submul(acc.n.get_mpz_t(), x.n.get_mpz_t(), y.n.get_mpz_t());
    } else {
      mpz_addmul(acc.n.get_mpz_t(), x.n.get_mpz_t(), y.n.get_mpz_t());
    }
    return;
  }
  if (x.c.empty() || y.c.empty()) return;
  const std::size_t need = x.c.size() + y.c.size() - 1;
  if (acc.c.size() < need) acc.c.resize(need);
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (is_zero(x.c[i], l - 1)) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) {
      if (is_zero(y.c[j], l - 1)) continue;
      addmul(acc.c[i + j], x.c[i], y.c[j], l - 1, subtract);
    }
  }
  trim(acc, l);
}

void scale_in_place(DPoly& p, const Integer& k, int l) {
  if (l == 0) {
    p.n *= k;
    return;
  }
  for (auto& ch : p.c) scale_in_place(ch, k, l - 1);
}

void divexact_in_place(DPoly& p, const Integer& k, int l) {
  if (l == 0) {
    mpz_divexact(p.n.get_mpz_t(), p.n.get_mpz_t(), k.get_mpz_t());
    return;
  }
  for (auto& ch : p.c) divexact_in_place(ch, k, l - 1);
}

void negate_in_place(DPoly& p, int l) {
  if (l == 0) {
    p.n = -p.n;
    return;
  }
  for (auto& ch : p.c) negate_in_place(ch, l - 1);
}

bool is_one_or_minus_one(const DPoly& p, int l) {
  if (l == 0) return p.n == 1 || p.n == -1;
  return p.c.size() == 1 && is_one_or_minus_one(p.c[0], l - 1);
}

}  // namespace

DPoly add(const DPoly& a, const DPoly& b, int l) {
  DPoly r = a;
  add_to(r, b, l, false);
  return r;
}

DPoly sub(const DPoly& a, const DPoly& b, int l) {
  DPoly r = a;
  add_to(r, b, l, true);
  return r;
}

DPoly mul(const DPoly& a, const DPoly& b, int l) {
  DPoly r;
  if (l == 0) {
    r.n = a.n * b.n;
    return r;
  }
  addmul(r, a, b, l, false);
  return r;
}

DPoly neg(DPoly p, int l) {
  negate_in_place(p, l);
  return p;
}

DPoly mul_scalar(DPoly p, const Integer& k, int l) {
  if (k == 0) return {};
  scale_in_place(p, k, l);
  return p;
}

DPoly divexact_scalar(DPoly p, const Integer& k, int l) {
  divexact_in_place(p, k, l);
  return p;
}

Integer max_norm(const DPoly& p, int l) {
  if (l == 0) return abs(p.n);
  Integer m = 0;
  for (const auto& ch : p.c) {
    Integer x = max_norm(ch, l - 1);
    if (x > m) m = x;
  }
  return m;
}

namespace {

void content_into(Integer& g, const DPoly& p, int l) {
  if (g == 1) return;
  if (l == 0) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.n.get_mpz_t());
    return;
  }
  for (const auto& ch : p.c) content_into(g, ch, l - 1);
}

}  // namespace

Integer int_content(const DPoly& p, int l) {
  Integer g = 0;
  content_into(g, p, l);
  return g;
}

const Integer& leading_int(const DPoly& p, int l) {
  if (l == 0) return p.n;
  if (p.c.empty()) throw std::logic_error("leading_int of zero polynomial");
  return leading_int(p.c.back(), l - 1);
}

bool divide(const DPoly& a, const DPoly& b, int l, DPoly* q) {
  if (is_zero(b, l)) return false;
  if (l == 0) {
    if (!mpz_divisible_p(a.n.get_mpz_t(), b.n.get_mpz_t())) return false;
    if (q) {
      q->n = 0;
      mpz_divexact(q->n.get_mpz_t(), a.n.get_mpz_t(), b.n.get_mpz_t());
    }
    return true;
  }
  if (is_zero(a, l)) {
    if (q) *q = DPoly{};
    return true;
  }
  const int da = degree(a, l);
  const int db = degree(b, l);
  if (da < db) return false;
  const DPoly& lcb = b.c.back();
  DPoly r = a;
  DPoly quo;
  quo.c.resize(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    const int dr = degree(r, l);
    if (dr < db + k) continue;
    DPoly qk;
    if (!divide(r.c[static_cast<std::size_t>(db + k)], lcb, l - 1, &qk)) return false;
    for (int j = 0; j <= db; ++j) {
      addmul(r.c[static_cast<std::size_t>(j + k)], qk, b.c[static_cast<std::size_t>(j)], l - 1, true);
    }
    trim(r, l);
    quo.c[static_cast<std::size_t>(k)] = std::move(qk);
  }
  if (!is_zero(r, l)) return false;
  if (q) {
    trim(quo, l);
    *q = std::move(quo);
  }
  return true;
}

namespace {

DPoly normalize_sign(DPoly p, int l) {
  if (!is_zero(p, l) && leading_int(p, l) < 0) negate_in_place(p, l);
  return p;
}

DPoly eval_main(const DPoly& p, const Integer& x, int l) {
  // l >= 1; result has level l - 1.
  if (p.c.empty()) return {};
  DPoly r = p.c.back();
  for (std::size_t i = p.c.size() - 1; i-- > 0;) {
    scale_in_place(r, x, l - 1);
    add_to(r, p.c[i], l - 1, false);
  }
  return r;
}

void symmetric_mod_in_place(DPoly& p, const Integer& x, const Integer& half, int l) {
  if (l == 0) {
    mpz_fdiv_r(p.n.get_mpz_t(), p.n.get_mpz_t(), x.get_mpz_t());
    if (p.n > half) p.n -= x;
    return;
  }
  for (auto& ch : p.c) symmetric_mod_in_place(ch, x, half, l - 1);
  trim(p, l);
}

// Recovers a level-l polynomial from its image at main variable = x via
// x-adic expansion with symmetric digits.
DPoly interpolate(DPoly h, const Integer& x, int l) {
  DPoly out;
  const Integer half = x / 2;
  while (!is_zero(h, l - 1)) {
    DPoly digit = h;
    symmetric_mod_in_place(digit, x, half, l - 1);
    add_to(h, digit, l - 1, true);
    divexact_in_place(h, x, l - 1);
    out.c.push_back(std::move(digit));
  }
  trim(out, l);
  return normalize_sign(std::move(out), l);
}

DPoly primitive_int(DPoly p, int l) {
  if (is_zero(p, l)) return p;
  const Integer g = int_content(p, l);
  if (g != 1) divexact_in_place(p, g, l);
  return p;
}

constexpr int kHeuristicAttempts = 6;

// Char-Geddes-Gonnet heuristic gcd. Returns false when it gives up.
bool heu_gcd(const DPoly& f0, const DPoly& g0, int l, DPoly& h, DPoly& cff, DPoly& cfg) {
  if (l == 0) {
    h.n = gcd(f0.n, g0.n);
    if (h.n == 0) {
      cff.n = 0;
      cfg.n = 0;
      return true;
    }
    cff.n = f0.n / h.n;
    cfg.n = g0.n / h.n;
    return true;
  }
  if (is_zero(f0, l) || is_zero(g0, l)) return false;

  const Integer cont = gcd(int_content(f0, l), int_content(g0, l));
  const DPoly f = divexact_scalar(f0, cont, l);
  const DPoly g = divexact_scalar(g0, cont, l);

  const Integer fn = max_norm(f, l);
  const Integer gn = max_norm(g, l);
  const Integer bound = 2 * std::min(fn, gn) + 29;
  Integer x = std::max(Integer(std::min(bound, Integer(99 * sqrt(bound)))),
                       Integer(2 * std::min(Integer(fn / abs(leading_int(f, l))), Integer(gn / abs(leading_int(g, l)))) + 2));

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    const DPoly ff = eval_main(f, x, l);
    const DPoly gg = eval_main(g, x, l);
    if (!is_zero(ff, l - 1) && !is_zero(gg, l - 1)) {
      DPoly hh;
      DPoly cf;
      DPoly cg;
      if (heu_gcd(ff, gg, l - 1, hh, cf, cg)) {
        DPoly cand = primitive_int(interpolate(hh, x, l), l);
        if (divide(f, cand, l, &cff) && divide(g, cand, l, &cfg)) {
          h = mul_scalar(std::move(cand), cont, l);
          return true;
        }
        DPoly cofactor = interpolate(cf, x, l);
        if (divide(f, cofactor, l, &cand) && divide(g, cand, l, &cfg)) {
          cff = std::move(cofactor);
          h = mul_scalar(std::move(cand), cont, l);
          return true;
        }
        cofactor = interpolate(cg, x, l);
        if (divide(g, cofactor, l, &cand) && divide(f, cand, l, &cff)) {
          cfg = std::move(cofactor);
          h = mul_scalar(std::move(cand), cont, l);
          return true;
        }
      }
    }
    x = 73794 * x * Integer(sqrt(Integer(sqrt(x)))) / 27011;
  }
  return false;
}

DPoly content_main(const DPoly& p, int l) {
  DPoly g;
  for (const auto& ch : p.c) {
    g = gcd(g, ch, l - 1);
    if (is_one_or_minus_one(g, l - 1)) break;
  }
  return g;
}

DPoly primitive_main(const DPoly& p, const DPoly& cont, int l) {
  if (is_one_or_minus_one(cont, l - 1)) return p;
  DPoly r;
  r.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (!divide(p.c[i], cont, l - 1, &r.c[i])) throw std::logic_error("content does not divide coefficient");
  }
  return r;
}

DPoly pseudo_remainder(DPoly r, const DPoly& b, int l) {
  const int db = degree(b, l);
  const DPoly& lcb = b.c.back();
  while (!is_zero(r, l) && degree(r, l) >= db) {
    const int shift = degree(r, l) - db;
    const DPoly lr = r.c.back();
    for (auto& ch : r.c) ch = mul(ch, lcb, l - 1);
    for (int j = 0; j <= db; ++j) {
      addmul(r.c[static_cast<std::size_t>(j + shift)], lr, b.c[static_cast<std::size_t>(j)], l - 1, true);
    }
    trim(r, l);
  }
  return r;
}

// Primitive polynomial remainder sequence; slow but always succeeds.
DPoly gcd_prs(const DPoly& a, const DPoly& b, int l) {
  const DPoly ca = content_main(a, l);
  const DPoly cb = content_main(b, l);
  DPoly c = gcd(ca, cb, l - 1);
  DPoly pa = primitive_main(a, ca, l);
  DPoly pb = primitive_main(b, cb, l);
  if (degree(pa, l) < degree(pb, l)) std::swap(pa, pb);
  while (!is_zero(pb, l)) {
    DPoly r = pseudo_remainder(pa, pb, l);
    pa = std::move(pb);
    if (is_zero(r, l)) break;
    pb = primitive_main(r, content_main(r, l), l);
  }
  DPoly result;
  if (degree(pa, l) == 0) {
    result.c.push_back(std::move(c));
  } else {
    pa = primitive_main(pa, content_main(pa, l), l);
    for (auto& ch : pa.c) ch = mul(ch, c, l - 1);
    result = std::move(pa);
  }
  trim(result, l);
  return normalize_sign(std::move(result), l);
}

}  // namespace

DPoly gcd(const DPoly& a, const DPoly& b, int l) {
  if (l == 0) {
    DPoly r;
    r.n = gcd(a.n, b.n);
    return r;
  }
  if (is_zero(a, l)) return normalize_sign(b, l);
  if (is_zero(b, l)) return normalize_sign(a, l);
  if (is_one_or_minus_one(a, l) || is_one_or_minus_one(b, l)) return constant(1, l);
  if (degree(a, l) == 0 && degree(b, l) == 0) {
    DPoly r;
    r.c.push_back(gcd(a.c[0], b.c[0], l - 1));
    return r;
  }
  DPoly h;
  DPoly cff;
  DPoly cfg;
  if (heu_gcd(a, b, l, h, cff, cfg)) return normalize_sign(std::move(h), l);
  return gcd_prs(a, b, l);
}

DenseLayout DenseLayout::for_polys(std::initializer_list<const MultiPoly*> ps) {
  unsigned mask = 0;
  for (const auto* p : ps) mask |= p->variable_mask();
  std::vector<Var> vars;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (mask & (1u << i)) vars.emplace_back(static_cast<std::uint8_t>(i));
  }
  return DenseLayout(std::move(vars));
}

DPoly DenseLayout::to_dense(const MultiPoly& p) const {
  DPoly root;
  const int l = levels();
  for (const auto& term : p.terms()) {
    if (term.coef.get_den() != 1) throw std::logic_error("to_dense: non-integral coefficient");
    DPoly* node = &root;
    for (int i = 0; i < l; ++i) {
      const unsigned e = term.mono[vars_[static_cast<std::size_t>(i)]];
      if (node->c.size() <= e) node->c.resize(e + 1);
      node = &node->c[e];
    }
    node->n += term.coef.get_num();
  }
  return root;
}

namespace {

void collect(const DPoly& p, int level, int l, const std::vector<Var>& vars, Monomial& mono,
             std::vector<MultiPoly::Term>& out) {
  if (level == l) {
    if (p.n != 0) out.push_back({mono, Rational(p.n)});
    return;
  }
  const Var v = vars[static_cast<std::size_t>(level)];
  for (std::size_t e = 0; e < p.c.size(); ++e) {
    mono.exp[v.index()] = static_cast<std::uint16_t>(e);
    collect(p.c[e], level + 1, l, vars, mono, out);
  }
  mono.exp[v.index()] = 0;
}

}  // namespace

MultiPoly DenseLayout::to_sparse(const DPoly& p) const {
  std::vector<MultiPoly::Term> terms;
  Monomial mono;
  collect(p, 0, levels(), vars_, mono, terms);
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace airycoef::detail
