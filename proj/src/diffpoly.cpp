#include "relnls/diffpoly.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "relnls/errors.hpp"

namespace relnls {

namespace {

struct FieldRegistry {
    std::vector<std::string> names{"psi", "psibar", "V", "Vt"};
    std::mutex mu;
};

FieldRegistry& fields() {
    static FieldRegistry r;
    return r;
}

}  // namespace

int declare_field(const std::string& name) {
    FieldRegistry& r = fields();
    std::scoped_lock lock(r.mu);
    for (std::size_t k = 0; k < r.names.size(); ++k)
        if (r.names[k] == name) return static_cast<int>(k);
    r.names.push_back(name);
    return static_cast<int>(r.names.size() - 1);
}

const std::string& field_name(int id) {
    FieldRegistry& r = fields();
    std::scoped_lock lock(r.mu);
    return r.names.at(static_cast<std::size_t>(id));
}

int lookup_field(const std::string& name) {
    FieldRegistry& r = fields();
    std::scoped_lock lock(r.mu);
    for (std::size_t k = 0; k < r.names.size(); ++k)
        if (r.names[k] == name) return static_cast<int>(k);
    return -1;
}

// ---------------------------------------------------------------------------
// Marker

Marker::Marker(const DiffPoly& g)
    : g_(std::make_shared<DiffPoly>(g)), key_(g.to_string()) {
    if (!g.is_local())
        throw std::invalid_argument("Marker: nested nonlocal markers exceed depth 1");
}

// ---------------------------------------------------------------------------
// DiffMonomial

long DiffMonomial::degree() const {
    long d = 0;
    for (const auto& [j, e] : jets) d += e;
    return d + static_cast<long>(markers.size());
}

int DiffMonomial::exponent(const Jet& j) const {
    for (const auto& [jet, e] : jets)
        if (jet == j) return e;
    return 0;
}

int DiffMonomial::order_degree(int order) const {
    int d = 0;
    for (const auto& [j, e] : jets)
        if (j.order == order) d += e;
    return d;
}

int DiffMonomial::max_order() const {
    int best = -1;
    for (const auto& [j, e] : jets) best = std::max(best, j.order);
    return best;
}

DiffMonomial DiffMonomial::times(const DiffMonomial& o) const {
    DiffMonomial out;
    std::size_t i = 0, j = 0;
    while (i < jets.size() || j < o.jets.size()) {
        if (j == o.jets.size() || (i < jets.size() && jets[i].first < o.jets[j].first)) {
            out.jets.push_back(jets[i++]);
        } else if (i == jets.size() || o.jets[j].first < jets[i].first) {
            out.jets.push_back(o.jets[j++]);
        } else {
            int e = jets[i].second + o.jets[j].second;
            if (e != 0) out.jets.emplace_back(jets[i].first, e);
            ++i;
            ++j;
        }
    }
    out.markers = markers;
    out.markers.insert(out.markers.end(), o.markers.begin(), o.markers.end());
    std::sort(out.markers.begin(), out.markers.end());
    return out;
}

DiffMonomial DiffMonomial::shifted(const Jet& j, int delta) const {
    DiffMonomial one;
    one.jets.emplace_back(j, delta);
    return times(one);
}

DiffMonomial DiffMonomial::without_one_marker(std::size_t index) const {
    DiffMonomial out = *this;
    out.markers.erase(out.markers.begin() + static_cast<long>(index));
    return out;
}

int DiffMonomial::compare(const DiffMonomial& a, const DiffMonomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // lex over jets in (field, order) order
    std::size_t i = 0, j = 0;
    while (i < a.jets.size() && j < b.jets.size()) {
        if (a.jets[i].first < b.jets[j].first) return 1;   // a has the smaller jet -> larger
        if (b.jets[j].first < a.jets[i].first) return -1;
        if (a.jets[i].second != b.jets[j].second)
            return a.jets[i].second < b.jets[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < a.jets.size()) return 1;
    if (j < b.jets.size()) return -1;
    // markers by key
    std::size_t k = 0;
    while (k < a.markers.size() && k < b.markers.size()) {
        if (a.markers[k].key() != b.markers[k].key())
            return a.markers[k].key() < b.markers[k].key() ? -1 : 1;
        ++k;
    }
    if (k < a.markers.size()) return 1;
    if (k < b.markers.size()) return -1;
    return 0;
}

std::string DiffMonomial::to_string() const {
    std::string s;
    for (const auto& [j, e] : jets) {
        if (!s.empty()) s += "*";
        s += field_name(j.field) + "[" + std::to_string(j.order) + "]";
        if (e != 1) s += "^" + std::to_string(e);
    }
    for (std::size_t k = 0; k < markers.size();) {
        std::size_t r = k;
        while (r < markers.size() && markers[r].key() == markers[k].key()) ++r;
        if (!s.empty()) s += "*";
        s += "Int(" + markers[k].key() + ")";
        if (r - k > 1) s += "^" + std::to_string(r - k);
        k = r;
    }
    return s;
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly::DiffPoly(MultiPoly c) {
    if (!c.is_zero()) terms_.emplace(DiffMonomial{}, std::move(c));
}

DiffPoly DiffPoly::jet(int f, int order, int exp) {
    DiffPoly out;
    DiffMonomial mono;
    if (exp != 0) mono.jets.emplace_back(Jet{f, order}, exp);
    out.terms_.emplace(std::move(mono), MultiPoly(1));
    return out;
}

DiffPoly DiffPoly::nonlocal(const DiffPoly& g) {
    DiffPoly out;
    DiffMonomial mono;
    mono.markers.emplace_back(Marker(g));
    out.terms_.emplace(std::move(mono), MultiPoly(1));
    return out;
}

bool DiffPoly::is_local() const {
    for (const auto& [mono, c] : terms_)
        if (!mono.markers.empty()) return false;
    return true;
}

int DiffPoly::max_jet_order() const {
    int best = -1;
    for (const auto& [mono, c] : terms_) best = std::max(best, mono.max_order());
    return best;
}

void DiffPoly::add_term(const DiffMonomial& mono, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

DiffPoly operator*(const MultiPoly& c, const DiffPoly& a) {
    DiffPoly out;
    for (const auto& [mono, co] : a.terms_) out.add_term(mono, c * co);
    return out;
}

bool DiffPoly::operator==(const DiffPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    }
    return true;
}

DiffPoly DiffPoly::total_x_derivative() const {
    DiffPoly out;
    for (const auto& [mono, c] : terms_) {
        // explicit x in the coefficient
        out.add_term(mono, c.derivative(sym::x));
        // jet prolongation
        for (const auto& [j, e] : mono.jets) {
            DiffMonomial m2 = mono.shifted(j, -1).shifted(Jet{j.field, j.order + 1}, 1);
            out.add_term(m2, c * MultiPoly(GaussianRational(e)));
        }
        // D_x Int(g) = g
        for (std::size_t k = 0; k < mono.markers.size(); ++k) {
            if (k > 0 && mono.markers[k].key() == mono.markers[k - 1].key()) continue;
            std::size_t mult = 0;
            for (const auto& mk : mono.markers)
                if (mk.key() == mono.markers[k].key()) ++mult;
            DiffPoly rest;
            rest.terms_.emplace(mono.without_one_marker(k),
                                c * MultiPoly(GaussianRational(static_cast<long>(mult))));
            out += rest * mono.markers[k].integrand();
        }
    }
    return out;
}

DiffPoly DiffPoly::partial(const Jet& j) const {
    DiffPoly out;
    for (const auto& [mono, c] : terms_) {
        int e = mono.exponent(j);
        if (e == 0) continue;
        out.add_term(mono.shifted(j, -1), c * MultiPoly(GaussianRational(e)));
    }
    return out;
}

DiffPoly DiffPoly::formal_integrate(IntegrateMode mode) const {
    DiffPoly work, residue;
    for (const auto& [mono, c] : terms_) {
        if (mono.markers.empty()) {
            work.add_term(mono, c);
        } else {
            residue.add_term(mono, c);
        }
    }
    if (work.coeffs_depend_on(sym::x))
        throw std::invalid_argument(
            "formal_integrate: x-dependent coefficients are not supported");

    DiffPoly result;
    while (!work.is_zero()) {
        int order = work.max_jet_order();
        if (order <= 0) {
            // pure 0-jets / constants are never total derivatives
            residue += work;
            break;
        }
        // terms where order-`order` jets enter nonlinearly cannot come from
        // D_x of a lower-order polynomial
        DiffPoly clean;
        for (const auto& [mono, c] : work.terms_) {
            if (mono.order_degree(order) >= 2) {
                residue.add_term(mono, c);
            } else {
                clean.add_term(mono, c);
            }
        }
        // reconstruct the order-(order-1) layer of the antiderivative from
        // its partials, dividing each monomial by its Euler degree in that layer
        DiffPoly vtimes;
        std::vector<int> fields_seen;
        for (const auto& [mono, c] : clean.terms_)
            for (const auto& [j, e] : mono.jets)
                if (j.order == order &&
                    std::find(fields_seen.begin(), fields_seen.end(), j.field) ==
                        fields_seen.end())
                    fields_seen.push_back(j.field);
        for (int f : fields_seen)
            vtimes += DiffPoly::jet(f, order - 1) * clean.partial(Jet{f, order});
        DiffPoly layer;
        for (const auto& [mono, c] : vtimes.terms_) {
            int d = mono.order_degree(order - 1);
            layer.add_term(mono, c * MultiPoly(GaussianRational::ratio(1, d)));
        }
        result += layer;
        work = clean - layer.total_x_derivative();
        // anything still carrying an order-`order` jet is not exact
        DiffPoly next;
        for (const auto& [mono, c] : work.terms_) {
            bool has_top = false;
            for (const auto& [j, e] : mono.jets) has_top |= (j.order >= order);
            if (has_top) {
                residue.add_term(mono, c);
            } else {
                next.add_term(mono, c);
            }
        }
        work = next;
    }

    if (residue.is_zero()) return result;
    if (mode == IntegrateMode::Strict)
        throw NotExactDerivative("formal_integrate: non-exact residue " + residue.to_string());
    return result + DiffPoly::nonlocal(residue);
}

DiffPoly DiffPoly::conj() const {
    DiffPoly out;
    for (const auto& [mono, c] : terms_) {
        DiffMonomial m2;
        for (const auto& [j, e] : mono.jets) {
            int f = j.field;
            if (f == field::psi) {
                f = field::psibar;
            } else if (f == field::psibar) {
                f = field::psi;
            } else {
                throw std::invalid_argument("conj: only defined on the psi/psibar algebra");
            }
            m2.jets.emplace_back(Jet{f, j.order}, e);
        }
        std::sort(m2.jets.begin(), m2.jets.end());
        for (const auto& mk : mono.markers) m2.markers.emplace_back(Marker(mk.integrand().conj()));
        std::sort(m2.markers.begin(), m2.markers.end());
        out.add_term(m2, c.conj());
    }
    return out;
}

DiffPoly DiffPoly::substitute_param(SymbolId s, const GaussianRational& value) const {
    DiffPoly out;
    for (const auto& [mono, c] : terms_) {
        if (!mono.markers.empty()) {
            DiffMonomial m2;
            m2.jets = mono.jets;
            for (const auto& mk : mono.markers)
                m2.markers.emplace_back(Marker(mk.integrand().substitute_param(s, value)));
            std::sort(m2.markers.begin(), m2.markers.end());
            out.add_term(m2, c.substitute(s, value));
        } else {
            out.add_term(mono, c.substitute(s, value));
        }
    }
    return out;
}

DiffPoly DiffPoly::truncate_param_above(SymbolId s, int max_exp) const {
    DiffPoly out;
    for (const auto& [mono, c] : terms_) out.add_term(mono, c.truncate_above(s, max_exp));
    return out;
}

bool DiffPoly::coeffs_depend_on(SymbolId s) const {
    for (const auto& [mono, c] : terms_)
        if (c.depends_on(s)) return true;
    return false;
}

std::map<int, DiffPoly> DiffPoly::collect_param(SymbolId s) const {
    std::map<int, DiffPoly> out;
    for (const auto& [mono, c] : terms_)
        for (const auto& [e, part] : c.collect(s)) out[e].add_term(mono, part);
    return out;
}

DiffPoly DiffPoly::time_derivative(const std::map<int, DiffPoly>& flows) const {
    // cache of D_x^k applied to each flow
    std::map<std::pair<int, int>, DiffPoly> dcache;
    auto flow_derivative = [&](int f, int order) -> const DiffPoly& {
        auto key = std::make_pair(f, order);
        auto it = dcache.find(key);
        if (it != dcache.end()) return it->second;
        if (order == 0) {
            auto fit = flows.find(f);
            if (fit == flows.end())
                throw std::invalid_argument("time_derivative: no flow for field " + field_name(f));
            return dcache.emplace(key, fit->second).first->second;
        }
        DiffPoly d = flow_derivative(f, order - 1).total_x_derivative();
        return dcache.emplace(key, std::move(d)).first->second;
    };

    DiffPoly out;
    for (const auto& [mono, c] : terms_) {
        if (!mono.markers.empty())
            throw std::invalid_argument("time_derivative: nonlocal terms unsupported");
        out.add_term(mono, c.derivative(sym::t));
        for (const auto& [j, e] : mono.jets) {
            DiffPoly rest;
            rest.add_term(mono.shifted(j, -1), c * MultiPoly(GaussianRational(e)));
            out += rest * flow_derivative(j.field, j.order);
        }
    }
    return out;
}

MultiPoly DiffPoly::as_multipoly() const {
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
        if (!mono.is_unit())
            throw std::invalid_argument("as_multipoly: polynomial has jet content");
        out += c;
    }
    return out;
}

std::string DiffPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, c] = *it;
        std::string piece;
        if (mono.is_unit()) {
            piece = c.to_string();
            if (c.term_count() > 1) piece = "(" + piece + ")";
        } else if (c.term_count() > 1) {
            piece = "(" + c.to_string() + ")*" + mono.to_string();
        } else {
            // single-term coefficient: inline like a MultiPoly term
            MultiPoly one(1);
            if (c == one) {
                piece = mono.to_string();
            } else if (c == -one) {
                piece = "-" + mono.to_string();
            } else {
                piece = c.to_string() + "*" + mono.to_string();
            }
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
