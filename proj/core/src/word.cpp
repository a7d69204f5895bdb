#include "talex/word.hpp"

#include <cstdlib>

namespace talex {

void Word::push_reduced(const Letter& l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign) {
        letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

Word Word::generator(int gen, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("Word::generator: sign must be +-1");
    Word w;
    w.letters_.push_back(Letter{gen, sign});
    return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
    Word w;
    for (const Letter& l : letters) {
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("Word: letter sign must be +-1");
        w.push_reduced(l);
    }
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(Letter{it->gen, -it->sign});
    return w;
}

Word Word::prefix(std::size_t k) const {
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(k, letters_.size())));
    return w;
}

Word Word::power(int e) const {
    Word base = e < 0 ? inverse() : *this;
    Word acc;
    for (int i = 0; i < std::abs(e); ++i) acc = concat(acc, base);
    return acc;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    for (const Letter& l : v.letters_) w.push_reduced(l);
    return w;
}

GroupRingElement GroupRingElement::of(const Word& w, const mpz_class& coeff) {
    GroupRingElement e;
    if (coeff != 0) e.terms_.emplace(w, coeff);
    return e;
}

void GroupRingElement::add_term(const Word& w, const mpz_class& c) {
    auto it = terms_.try_emplace(w, 0).first;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement e = *this;
    for (auto& [w, c] : e.terms_) c = -c;
    return e;
}

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement e = x;
    for (const auto& [w, c] : y.terms_) e.add_term(w, c);
    return e;
}

GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) { return x + (-y); }

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement e;
    for (const auto& [u, cu] : x.terms_)
        for (const auto& [v, cv] : y.terms_) e.add_term(concat(u, v), cu * cv);
    return e;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
    GroupRingElement d;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].gen != gen) continue;
        if (ls[i].sign > 0) {
            d += GroupRingElement::of(w.prefix(i));
        } else {
            d -= GroupRingElement::of(w.prefix(i + 1));
        }
    }
    return d;
}

GroupRingElement fox_derivative(const GroupRingElement& e, int gen) {
    GroupRingElement d;
    for (const auto& [w, c] : e.terms()) {
        GroupRingElement dw = fox_derivative(w, gen);
        for (const auto& [u, cu] : dw.terms()) d += GroupRingElement::of(u, c * cu);
    }
    return d;
}

std::int64_t abelian_degree(const Word& w, std::span<const int> abel) {
    std::int64_t deg = 0;
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= abel.size())
            throw std::invalid_argument("abelian_degree: letter has no assigned exponent");
        deg += static_cast<std::int64_t>(l.sign) * abel[static_cast<std::size_t>(l.gen)];
    }
    return deg;
}

}  // namespace talex
