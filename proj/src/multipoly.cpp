#include "relnls/multipoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace relnls {

namespace {

struct Registry {
    std::vector<std::string> names{"x", "t", "hbar", "m", "eps", "kappa2", "p"};
    std::mutex mu;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

SymbolId declare_symbol(const std::string& name) {
    Registry& r = registry();
    std::scoped_lock lock(r.mu);
    for (std::size_t k = 0; k < r.names.size(); ++k)
        if (r.names[k] == name) return static_cast<SymbolId>(k);
    r.names.push_back(name);
    return static_cast<SymbolId>(r.names.size() - 1);
}

const std::string& symbol_name(SymbolId id) {
    Registry& r = registry();
    std::scoped_lock lock(r.mu);
    return r.names.at(static_cast<std::size_t>(id));
}

SymbolId lookup_symbol(const std::string& name) {
    Registry& r = registry();
    std::scoped_lock lock(r.mu);
    for (std::size_t k = 0; k < r.names.size(); ++k)
        if (r.names[k] == name) return static_cast<SymbolId>(k);
    return -1;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(SymbolId s, int exp) {
    Monomial m;
    if (exp != 0) m.exps_.emplace_back(s, exp);
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (const auto& [s, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(SymbolId s) const {
    for (const auto& [sym, e] : exps_)
        if (sym == s) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
            out.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
            out.exps_.push_back(o.exps_[j++]);
        } else {
            int e = exps_[i].second + o.exps_[j].second;
            if (e != 0) out.exps_.emplace_back(exps_[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial Monomial::without(SymbolId s) const {
    Monomial out;
    for (const auto& pe : exps_)
        if (pe.first != s) out.exps_.push_back(pe);
    return out;
}

Monomial Monomial::shifted(SymbolId s, int delta) const {
    return times(Monomial::of(s, delta));
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.exps_.size() || j < b.exps_.size()) {
        SymbolId sa = i < a.exps_.size() ? a.exps_[i].first : 1 << 30;
        SymbolId sb = j < b.exps_.size() ? b.exps_[j].first : 1 << 30;
        SymbolId s = std::min(sa, sb);
        int ea = sa == s ? a.exps_[i].second : 0;
        int eb = sb == s ? b.exps_[j].second : 0;
        if (ea != eb) return ea < eb ? -1 : 1;
        if (sa == s) ++i;
        if (sb == s) ++j;
    }
    return 0;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [sym, e] : exps_) {
        if (!s.empty()) s += "*";
        s += symbol_name(sym);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial::unit(), c);
}

MultiPoly MultiPoly::symbol(SymbolId s, int exp) {
    MultiPoly p;
    p.terms_.emplace(Monomial::of(s, exp), GaussianRational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GaussianRational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial::unit());
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

GaussianRational MultiPoly::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& mono, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
    MultiPoly acc(GaussianRational(1));
    for (int k = 0; k < e; ++k) acc = acc * (*this);
    return acc;
}

MultiPoly MultiPoly::div_monomial(const GaussianRational& c, const Monomial& mono) const {
    GaussianRational inv = c.inverse();
    Monomial minv;
    for (const auto& [s, e] : mono.exps()) minv = minv.shifted(s, -e);
    MultiPoly out;
    for (const auto& [mo, co] : terms_) out.terms_.emplace(mo.times(minv), co * inv);
    return out;
}

MultiPoly MultiPoly::conj() const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c.conj());
    return out;
}

MultiPoly MultiPoly::derivative(SymbolId s) const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
        int e = mono.exponent(s);
        if (e == 0) continue;
        out.add_term(mono.shifted(s, -1), c * GaussianRational(e));
    }
    return out;
}

MultiPoly MultiPoly::substitute(SymbolId s, const GaussianRational& value) const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
        int e = mono.exponent(s);
        if (e == 0) {
            out.add_term(mono, c);
            continue;
        }
        if (value.is_zero()) {
            if (e < 0)
                throw std::domain_error("MultiPoly::substitute: zero for symbol with negative exponent");
            continue;  // positive power of zero
        }
        out.add_term(mono.without(s), c * value.pow(e));
    }
    return out;
}

MultiPoly MultiPoly::truncate_above(SymbolId s, int max_exp) const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_)
        if (mono.exponent(s) <= max_exp) out.terms_.emplace(mono, c);
    return out;
}

bool MultiPoly::depends_on(SymbolId s) const {
    for (const auto& [mono, c] : terms_)
        if (mono.exponent(s) != 0) return true;
    return false;
}

int MultiPoly::max_exponent(SymbolId s) const {
    int best = 0;
    for (const auto& [mono, c] : terms_) best = std::max(best, mono.exponent(s));
    return best;
}

int MultiPoly::min_exponent(SymbolId s) const {
    int best = 0;
    for (const auto& [mono, c] : terms_) best = std::min(best, mono.exponent(s));
    return best;
}

std::map<int, MultiPoly> MultiPoly::collect(SymbolId s) const {
    std::map<int, MultiPoly> out;
    for (const auto& [mono, c] : terms_)
        out[mono.exponent(s)].add_term(mono.without(s), c);
    return out;
}

std::complex<double> MultiPoly::eval(
    const std::map<SymbolId, std::complex<double>>& values) const {
    std::complex<double> acc = 0.0;
    for (const auto& [mono, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (const auto& [s, e] : mono.exps()) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::invalid_argument("MultiPoly::eval: no value for symbol " + symbol_name(s));
            term *= std::pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Leading (largest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        std::string piece;
        if (mono.is_unit()) {
            piece = c.to_string();
            if (!c.is_real() && c.re() != 0) piece = "(" + piece + ")";
        } else if (c.is_one()) {
            piece = mono.to_string();
        } else if (c == GaussianRational(-1)) {
            piece = "-" + mono.to_string();
        } else {
            std::string cs = c.to_string();
            if (!c.is_real() && c.re() != 0) cs = "(" + cs + ")";
            piece = cs + "*" + mono.to_string();
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace relnls
