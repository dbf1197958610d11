#include "assoc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace assoc {

VarSet::VarSet(std::vector<std::string> ns) : names(std::move(ns)) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (n.empty() || !seen.insert(n).second) fail(Errc::BadInput, "variable names must be distinct and nonempty");
}

int VarSet::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return (int)i;
  return -1;
}

VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.vars() || !b.vars() || !(*a.vars() == *b.vars()))
    fail(Errc::VarSetMismatch, "operands live over different variable sets");
}

}  // namespace

LaurentPoly from_term_list(VarSetPtr vars, std::vector<Term>&& ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
  std::vector<Term> merged;
  merged.reserve(ts.size());
  for (auto& t : ts) {
    if (!merged.empty() && merged.back().e == t.e)
      merged.back().c += t.c;
    else
      merged.push_back(std::move(t));
    if (!merged.empty() && merged.back().c == 0) merged.pop_back();
  }
  LaurentPoly p(std::move(vars));
  p.terms_ = std::move(merged);
  return p;
}

LaurentPoly LaurentPoly::constant(VarSetPtr vars, Int c) {
  Exps e(vars->size(), 0);
  return monomial(std::move(vars), std::move(e), std::move(c));
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, const std::string& name, int power) {
  int idx = vars->index_of(name);
  if (idx < 0) fail(Errc::VarSetMismatch, "unknown variable '" + name + "'");
  Exps e(vars->size(), 0);
  e[idx] = power;
  return monomial(std::move(vars), std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, Exps e, Int c) {
  if (e.size() != vars->size()) fail(Errc::VarSetMismatch, "exponent vector length mismatch");
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1 || terms_[0].c != 1) return false;
  for (auto x : terms_[0].e)
    if (x != 0) return false;
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    if (a.terms_[i].e < b.terms_[j].e)
      out.push_back(a.terms_[i++]);
    else if (b.terms_[j].e < a.terms_[i].e)
      out.push_back(b.terms_[j++]);
    else {
      Int c = a.terms_[i].c + b.terms_[j].c;
      if (c != 0) out.push_back({a.terms_[i].e, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  LaurentPoly r(a.vars_);
  r.terms_ = std::move(out);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly::zero(a.vars_);
  const size_t nv = a.vars_->size();
  if (b.is_monomial() || a.is_monomial()) {
    const LaurentPoly& poly = b.is_monomial() ? a : b;
    const Term& m = (b.is_monomial() ? b : a).terms_[0];
    LaurentPoly r(a.vars_);
    r.terms_.reserve(poly.terms_.size());
    for (const auto& t : poly.terms_) {
      Exps e(nv);
      for (size_t v = 0; v < nv; ++v) e[v] = t.e[v] + m.e[v];
      r.terms_.push_back({std::move(e), t.c * m.c});
    }
    return r;  // order is preserved by a uniform shift
  }
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Exps e(nv);
      for (size_t v = 0; v < nv; ++v) e[v] = ta.e[v] + tb.e[v];
      prods.push_back({std::move(e), ta.c * tb.c});
    }
  return from_term_list(a.vars_, std::move(prods));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (!vars_ || !o.vars_) return terms_.empty() && o.terms_.empty();
  return *vars_ == *o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(long long k) const {
  if (k == 0) return constant(vars_, 1);
  if (k < 0) {
    if (!is_monomial() || (terms_[0].c != 1 && terms_[0].c != -1))
      fail(Errc::NonMonomialImage, "negative power of a non-unit");
    Exps e = terms_[0].e;
    for (auto& x : e) x = (int32_t)(x * k);
    Int c = (terms_[0].c == -1 && (k % 2 != 0)) ? -1 : 1;
    return monomial(vars_, std::move(e), std::move(c));
  }
  LaurentPoly acc = constant(vars_, 1), base = *this;
  long long m = k;
  while (m > 0) {
    if (m & 1) acc = acc * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return acc;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b);
  if (b.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly::zero(a.vars());
  const size_t nv = a.vars()->size();

  if (b.is_monomial()) {
    const Term& m = b.terms()[0];
    std::vector<Term> out;
    out.reserve(a.term_count());
    for (const auto& t : a.terms()) {
      if (t.c % m.c != 0) fail(Errc::NotDivisible, "coefficient not divisible");
      Exps e(nv);
      for (size_t v = 0; v < nv; ++v) e[v] = t.e[v] - m.e[v];
      out.push_back({std::move(e), t.c / m.c});
    }
    return from_term_list(a.vars(), std::move(out));
  }

  // Shift both operands into ordinary polynomials (all exponents >= 0),
  // divide by leading terms there, then shift the quotient back.
  Exps amin(nv), bmin(nv);
  for (size_t v = 0; v < nv; ++v) {
    amin[v] = a.terms()[0].e[v];
    bmin[v] = b.terms()[0].e[v];
  }
  for (const auto& t : a.terms())
    for (size_t v = 0; v < nv; ++v) amin[v] = std::min(amin[v], t.e[v]);
  for (const auto& t : b.terms())
    for (size_t v = 0; v < nv; ++v) bmin[v] = std::min(bmin[v], t.e[v]);

  auto shifted = [&](const LaurentPoly& p, const Exps& mins) {
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) {
      Exps e(nv);
      for (size_t v = 0; v < nv; ++v) e[v] = t.e[v] - mins[v];
      ts.push_back({std::move(e), t.c});
    }
    return from_term_list(p.vars(), std::move(ts));
  };
  LaurentPoly r = shifted(a, amin), bs = shifted(b, bmin);

  const Term& lead_b = bs.terms().back();
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& lead_r = r.terms().back();
    Exps e(nv);
    for (size_t v = 0; v < nv; ++v) {
      e[v] = lead_r.e[v] - lead_b.e[v];
      if (e[v] < 0) fail(Errc::NotDivisible, "leading monomial not divisible");
    }
    if (lead_r.c % lead_b.c != 0) fail(Errc::NotDivisible, "leading coefficient not divisible");
    Term t{std::move(e), lead_r.c / lead_b.c};
    r = r - bs * LaurentPoly::monomial(a.vars(), t.e, t.c);
    quot.push_back(std::move(t));
  }
  LaurentPoly q = from_term_list(a.vars(), std::move(quot));
  Exps back(nv);
  for (size_t v = 0; v < nv; ++v) back[v] = amin[v] - bmin[v];
  return q * LaurentPoly::monomial(a.vars(), std::move(back), 1);
}

LaurentPoly substitute(const LaurentPoly& f, VarSetPtr target,
                       const std::vector<LaurentPoly>& images) {
  const size_t ns = f.vars() ? f.vars()->size() : 0;
  if (images.size() != ns) fail(Errc::VarSetMismatch, "one image per source variable required");
  const size_t nt = target->size();
  std::vector<Exps> mat(ns);
  std::vector<int> sign(ns, 1);
  std::vector<Int> mag(ns, 1);
  for (size_t v = 0; v < ns; ++v) {
    const LaurentPoly& im = images[v];
    if (!(*im.vars() == *target)) fail(Errc::VarSetMismatch, "image over the wrong variable set");
    if (!im.is_monomial()) fail(Errc::NonMonomialImage, "image of '" + f.vars()->names[v] + "' has several terms");
    mat[v] = im.terms()[0].e;
    const Int& c = im.terms()[0].c;
    if (c < 0) sign[v] = -1;
    mag[v] = abs(c);
  }
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Exps e(nt, 0);
    Int c = t.c;
    for (size_t v = 0; v < ns; ++v) {
      if (t.e[v] == 0) continue;
      for (size_t u = 0; u < nt; ++u) e[u] += t.e[v] * mat[v][u];
      if (sign[v] < 0 && (t.e[v] % 2 != 0)) c = -c;
      if (mag[v] != 1) {
        if (t.e[v] < 0) fail(Errc::NonMonomialImage, "non-unit image raised to a negative power");
        for (int32_t k = 0; k < t.e[v]; ++k) c *= mag[v];
      }
    }
    out.push_back({std::move(e), std::move(c)});
  }
  return from_term_list(std::move(target), std::move(out));
}

Exps tropical_exponents(const LaurentPoly& f, const std::vector<char>& observed) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "tropical evaluation of zero");
  const size_t nv = f.vars()->size();
  Exps mins(nv, 0);
  for (size_t v = 0; v < nv; ++v) {
    if (!observed[v]) continue;
    int32_t m = f.terms()[0].e[v];
    for (const auto& t : f.terms()) m = std::min(m, t.e[v]);
    mins[v] = m;
  }
  return mins;
}

LaurentPoly tropical_eval(const LaurentPoly& f, const std::vector<std::string>& observed) {
  const auto& names = f.vars()->names;
  std::vector<char> flags(names.size(), 0);
  for (const auto& nm : observed) {
    int idx = f.vars()->index_of(nm);
    if (idx < 0) fail(Errc::VarSetMismatch, "observed variable '" + nm + "' not present");
    flags[idx] = 1;
  }
  Exps mins = tropical_exponents(f, flags);
  VarSetPtr sub = make_varset(observed);
  Exps e(observed.size());
  for (size_t k = 0; k < observed.size(); ++k) e[k] = mins[f.vars()->index_of(observed[k])];
  return LaurentPoly::monomial(std::move(sub), std::move(e), 1);
}

LaurentPoly set_vars_to_one(const LaurentPoly& f, const std::vector<std::string>& kill) {
  const auto& names = f.vars()->names;
  std::vector<char> dead(names.size(), 0);
  for (const auto& nm : kill) {
    int idx = f.vars()->index_of(nm);
    if (idx < 0) fail(Errc::VarSetMismatch, "variable '" + nm + "' not present");
    dead[idx] = 1;
  }
  std::vector<std::string> keep;
  std::vector<int> keep_idx;
  for (size_t v = 0; v < names.size(); ++v)
    if (!dead[v]) {
      keep.push_back(names[v]);
      keep_idx.push_back((int)v);
    }
  VarSetPtr target = make_varset(keep);
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Exps e(keep_idx.size());
    for (size_t v = 0; v < keep_idx.size(); ++v) e[v] = t.e[keep_idx[v]];
    out.push_back({std::move(e), t.c});
  }
  return from_term_list(std::move(target), std::move(out));
}

std::vector<Exps> newton_points(const LaurentPoly& f, const std::vector<std::string>& chosen) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "Newton points of zero");
  std::vector<int> idx;
  for (const auto& nm : chosen) {
    int v = f.vars()->index_of(nm);
    if (v < 0) fail(Errc::VarSetMismatch, "variable '" + nm + "' not present");
    idx.push_back(v);
  }
  std::set<Exps> pts;
  for (const auto& t : f.terms()) {
    Exps e(idx.size());
    for (size_t v = 0; v < idx.size(); ++v) e[v] = t.e[idx[v]];
    pts.insert(std::move(e));
  }
  return {pts.begin(), pts.end()};
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  const auto& names = f.vars()->names;
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Term& t = *it;
    bool neg = t.c < 0;
    Int mag = neg ? Int(-t.c) : t.c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (size_t v = 0; v < names.size(); ++v) {
      if (t.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (t.e[v] != 1) mono += "^" + std::to_string(t.e[v]);
    }
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

namespace {

struct Parser {
  VarSetPtr vars;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long parse_int() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      fail(Errc::BadInput, "integer expected at offset " + std::to_string(pos));
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  LaurentPoly parse_factor() {
    skip();
    if (peek() == '(') {
      eat('(');
      LaurentPoly e = parse_expr();
      if (!eat(')')) fail(Errc::BadInput, "missing ')'");
      return maybe_pow(std::move(e));
    }
    if (std::isdigit((unsigned char)peek())) {
      Int c = parse_int();
      return maybe_pow(LaurentPoly::constant(vars, std::move(c)));
    }
    if (std::isalpha((unsigned char)peek()) || peek() == '_') {
      std::string name;
      while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        name += s[pos++];
      if (vars->index_of(name) < 0) fail(Errc::VarSetMismatch, "unknown variable '" + name + "'");
      return maybe_pow(LaurentPoly::variable(vars, name));
    }
    fail(Errc::BadInput, "unexpected character '" + std::string(1, peek()) + "'");
  }

  LaurentPoly maybe_pow(LaurentPoly base) {
    if (eat('^')) return base.pow(parse_int());
    return base;
  }

  LaurentPoly parse_term() {
    LaurentPoly acc = parse_factor();
    for (;;) {
      if (eat('*'))
        acc = acc * parse_factor();
      else if (eat('/')) {
        LaurentPoly d = parse_factor();
        if (!d.is_monomial()) fail(Errc::NonMonomialImage, "divisor must be a monomial");
        acc = acc * d.pow(-1);
      } else
        break;
    }
    return acc;
  }

  LaurentPoly parse_expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    LaurentPoly acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        break;
    }
    return acc;
  }
};

}  // namespace

LaurentPoly parse_poly(VarSetPtr vars, const std::string& text) {
  Parser p{std::move(vars), text};
  LaurentPoly r = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) fail(Errc::BadInput, "trailing input in polynomial at offset " + std::to_string(p.pos));
  return r;
}

}  // namespace assoc
