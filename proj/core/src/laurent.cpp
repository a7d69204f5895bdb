#include "talex/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace talex {

namespace {

void require_same_vars(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
    if (p.vars() != q.vars())
        throw std::invalid_argument(std::string(op) + ": operands have different variable sets (" +
                                    p.vars().to_string() + " vs " + q.vars().to_string() + ")");
}

}  // namespace

std::string VarSet::to_string() const {
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        if (!contains(v)) continue;
        if (!s.empty()) s += ' ';
        s += kVarNames[static_cast<std::size_t>(v)];
    }
    return s;
}

void LaurentPoly::check_vars(const Monomial& m) const {
    for (int v = 0; v < kNumVars; ++v)
        if (m.exp[static_cast<std::size_t>(v)] != 0 && !vars_.contains(v))
            throw std::invalid_argument(std::string("LaurentPoly: variable '") + kVarNames[static_cast<std::size_t>(v)] +
                                        "' not in variable set (" + vars_.to_string() + ")");
}

LaurentPoly LaurentPoly::constant(VarSet vars, const mpz_class& c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.push_back(Term{Monomial::one(), c});
    return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, int var, std::int32_t e) {
    return term(vars, 1, Monomial::var(var, e));
}

LaurentPoly LaurentPoly::term(VarSet vars, const mpz_class& coeff, const Monomial& mono) {
    LaurentPoly p(vars);
    p.check_vars(mono);
    if (coeff != 0) p.terms_.push_back(Term{mono, coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(VarSet vars, std::vector<Term> terms) {
    LaurentPoly p(vars);
    for (const Term& t : terms) p.check_vars(t.mono);
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.mono < y.mono; });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

LaurentPoly LaurentPoly::promoted(VarSet target) const {
    if (!vars_.subset_of(target))
        throw std::invalid_argument("LaurentPoly::promoted: target does not contain current variable set");
    LaurentPoly p = *this;
    p.vars_ = target;
    return p;
}

const LaurentPoly::Term& LaurentPoly::low_term() const {
    if (terms_.empty()) throw std::invalid_argument("LaurentPoly: zero polynomial has no terms");
    return terms_.front();
}

const LaurentPoly::Term& LaurentPoly::high_term() const {
    if (terms_.empty()) throw std::invalid_argument("LaurentPoly: zero polynomial has no terms");
    return terms_.back();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_vars(p, q, "add");
    LaurentPoly r(p.vars_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        auto c = p.terms_[i].mono <=> q.terms_[j].mono;
        if (c < 0) {
            r.terms_.push_back(p.terms_[i++]);
        } else if (c > 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            mpz_class s = p.terms_[i].coeff + q.terms_[j].coeff;
            if (s != 0) r.terms_.push_back(LaurentPoly::Term{p.terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_vars(p, q, "mul");
    LaurentPoly r(p.vars_);
    if (p.terms_.empty() || q.terms_.empty()) return r;
    if (p.terms_.size() == 1 || q.terms_.size() == 1) {
        // Monomial times polynomial keeps the sorted order.
        const LaurentPoly& big = p.terms_.size() == 1 ? q : p;
        const LaurentPoly::Term& t = (p.terms_.size() == 1 ? p : q).terms_.front();
        r.terms_.reserve(big.terms_.size());
        for (const auto& u : big.terms_) r.terms_.push_back(LaurentPoly::Term{u.mono * t.mono, u.coeff * t.coeff});
        return r;
    }
    std::map<Monomial, mpz_class> acc;
    for (const auto& a : p.terms_) {
        for (const auto& b : q.terms_) {
            auto it = acc.try_emplace(a.mono * b.mono).first;
            mpz_addmul(it->second.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [mono, coeff] : acc)
        if (coeff != 0) r.terms_.push_back(LaurentPoly::Term{mono, std::move(coeff)});
    return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
    LaurentPoly acc = LaurentPoly::constant(p.vars(), 1);
    LaurentPoly base = p;
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e != 0) base = base * base;
    }
    return acc;
}

MonomialSplit monomial_split(const LaurentPoly& p) {
    if (p.is_zero()) throw error("monomial_split: zero polynomial");
    Monomial content;
    for (int v = 0; v < kNumVars; ++v) {
        std::int32_t m = p.terms().front().mono.exp[static_cast<std::size_t>(v)];
        for (const auto& t : p.terms()) m = std::min(m, t.mono.exp[static_cast<std::size_t>(v)]);
        content.exp[static_cast<std::size_t>(v)] = m;
    }
    MonomialSplit s;
    s.monomial = content;
    std::vector<LaurentPoly::Term> shifted;
    shifted.reserve(p.term_count());
    Monomial inv = content.inverse();
    for (const auto& t : p.terms()) shifted.push_back(LaurentPoly::Term{t.mono * inv, t.coeff});
    s.sign = sgn(shifted.front().coeff) < 0 ? -1 : 1;
    if (s.sign < 0)
        for (auto& t : shifted) t.coeff = -t.coeff;
    s.part = LaurentPoly::from_terms(p.vars(), std::move(shifted));
    return s;
}

LaurentPoly normal_form(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return monomial_split(p).part;
}

bool is_unit(const LaurentPoly& p) {
    if (p.term_count() != 1) return false;
    const auto& c = p.terms().front().coeff;
    return c == 1 || c == -1;
}

bool associates(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.vars() != q.vars()) return false;
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return normal_form(p) == normal_form(q);
}

namespace {

// --- exact multivariate division -----------------------------------------
//
// Works on polynomials with nonnegative exponents. The loop cancels the
// greatest term under the canonical order; that order is multiplicative, so
// when the divisor divides the dividend every step succeeds.
bool divide_ordinary(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& quotient) {
    LaurentPoly rem = p;
    std::vector<LaurentPoly::Term> qterms;
    const LaurentPoly::Term& lead = d.high_term();
    while (!rem.is_zero()) {
        const LaurentPoly::Term& top = rem.high_term();
        if (!lead.mono.divides_into(top.mono)) return false;
        if (!mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) return false;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), top.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
        Monomial qm = top.mono * lead.mono.inverse();
        qterms.push_back(LaurentPoly::Term{qm, qc});
        rem = rem - d * LaurentPoly::term(d.vars(), qc, qm);
    }
    quotient = LaurentPoly::from_terms(p.vars(), std::move(qterms));
    return true;
}

// --- primitive pseudo-remainder-sequence gcd ------------------------------

int top_variable(const LaurentPoly& p) {
    int top = -1;
    for (const auto& t : p.terms())
        for (int v = 0; v < kNumVars; ++v)
            if (t.mono.exp[static_cast<std::size_t>(v)] != 0) top = std::max(top, v);
    return top;
}

std::int32_t degree_in(const LaurentPoly& p, int v) {
    std::int32_t d = 0;
    for (const auto& t : p.terms()) d = std::max(d, t.mono.exp[static_cast<std::size_t>(v)]);
    return d;
}

// Coefficients of p viewed as a univariate polynomial in v.
std::vector<LaurentPoly> coefficients_in(const LaurentPoly& p, int v) {
    std::vector<LaurentPoly> out(static_cast<std::size_t>(degree_in(p, v)) + 1, LaurentPoly(p.vars()));
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        auto e = static_cast<std::size_t>(m.exp[static_cast<std::size_t>(v)]);
        m.exp[static_cast<std::size_t>(v)] = 0;
        out[e] += LaurentPoly::term(p.vars(), t.coeff, m);
    }
    return out;
}

LaurentPoly gcd_ordinary(const LaurentPoly& p, const LaurentPoly& q);

// gcd of the univariate-in-v coefficients; this is the content of p wrt v.
LaurentPoly content_in(const LaurentPoly& p, int v) {
    LaurentPoly c(p.vars());
    for (const auto& coeff : coefficients_in(p, v)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? normal_form(coeff) : gcd_ordinary(c, coeff);
        if (c.term_count() == 1 && c.terms().front().coeff == 1 && c.terms().front().mono.is_one()) break;
    }
    return c;
}

LaurentPoly exact_div_ordinary(const LaurentPoly& p, const LaurentPoly& d) {
    LaurentPoly q(p.vars());
    if (p.is_zero()) return q;
    if (!divide_ordinary(p, d, q)) throw error("exact_div: division is not exact");
    return q;
}

// One pseudo-remainder step: eliminates the leading v-power of a against b.
LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, int v) {
    std::int32_t db = degree_in(b, v);
    LaurentPoly lcb = coefficients_in(b, v)[static_cast<std::size_t>(db)];
    LaurentPoly r = a;
    while (!r.is_zero()) {
        std::int32_t dr = degree_in(r, v);
        if (dr < db) break;
        LaurentPoly lcr = coefficients_in(r, v)[static_cast<std::size_t>(dr)];
        LaurentPoly shift = LaurentPoly::variable(r.vars(), v, dr - db);
        r = r * lcb - b * (lcr * shift);
    }
    return r;
}

// gcd for polynomials with nonnegative exponents, recursing on the highest
// variable present: strip contents, run a primitive PRS on the primitive
// parts, then reattach the content gcd.
LaurentPoly gcd_ordinary(const LaurentPoly& p, const LaurentPoly& q) {
    int v = std::max(top_variable(p), top_variable(q));
    if (v < 0) {
        // Both are integers.
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.terms().front().coeff.get_mpz_t(), q.terms().front().coeff.get_mpz_t());
        return LaurentPoly::constant(p.vars(), g);
    }
    LaurentPoly cp = content_in(p, v);
    LaurentPoly cq = content_in(q, v);
    LaurentPoly a = exact_div_ordinary(p, cp);
    LaurentPoly b = exact_div_ordinary(q, cq);
    LaurentPoly cg = gcd_ordinary(cp, cq);
    if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = pseudo_remainder(a, b, v);
        a = std::move(b);
        if (r.is_zero()) {
            b = LaurentPoly(p.vars());
        } else {
            b = exact_div_ordinary(r, content_in(r, v));
        }
    }
    if (degree_in(a, v) == 0) return cg;  // primitive and v-free, hence a unit
    return cg * normal_form(a);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_vars(p, q, "gcd");
    if (p.is_zero() && q.is_zero()) throw error("gcd(0, 0) is undefined");
    if (p.is_zero()) return normal_form(q);
    if (q.is_zero()) return normal_form(p);
    LaurentPoly g = gcd_ordinary(normal_form(p), normal_form(q));
    return normal_form(g);
}

bool try_exact_div(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& out) {
    require_same_vars(p, d, "exact_div");
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    if (p.is_zero()) {
        out = LaurentPoly(p.vars());
        return true;
    }
    MonomialSplit sp = monomial_split(p);
    MonomialSplit sd = monomial_split(d);
    LaurentPoly q(p.vars());
    if (!divide_ordinary(sp.part, sd.part, q)) return false;
    Monomial shift = sp.monomial * sd.monomial.inverse();
    LaurentPoly unit = LaurentPoly::term(p.vars(), sp.sign * sd.sign, shift);
    out = q * unit;
    return true;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    LaurentPoly q;
    if (!try_exact_div(p, d, q)) throw error("exact_div: '" + d.str() + "' does not divide '" + p.str() + "'");
    return q;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        const bool negative = sgn(t.coeff) < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        mpz_class mag = abs(t.coeff);
        bool printed = false;
        if (mag != 1 || t.mono.is_one()) {
            out << mag.get_str();
            printed = true;
        }
        for (int v = 0; v < kNumVars; ++v) {
            std::int32_t e = t.mono.exp[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (printed) out << '*';
            out << kVarNames[static_cast<std::size_t>(v)];
            if (e != 1) out << '^' << e;
            printed = true;
        }
    }
    return out.str();
}

}  // namespace talex
