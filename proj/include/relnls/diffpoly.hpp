#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "relnls/multipoly.hpp"

namespace relnls {

class DiffPoly;

// Field symbols carried by the jet algebra.
namespace field {
inline constexpr int psi = 0;
inline constexpr int psibar = 1;
inline constexpr int V = 2;   // complex velocity of the Burgers picture
inline constexpr int Vt = 3;  // its unresolved time derivative
}  // namespace field

int declare_field(const std::string& name);
const std::string& field_name(int id);
int lookup_field(const std::string& name);

// k-th x-derivative of a field: field^(order).
struct Jet {
    int field = 0;
    int order = 0;
    friend bool operator==(const Jet& a, const Jet& b) {
        return a.field == b.field && a.order == b.order;
    }
    friend bool operator<(const Jet& a, const Jet& b) {
        return a.field != b.field ? a.field < b.field : a.order < b.order;
    }
};

// Unevaluated antiderivative Int(g) of a local DiffPoly g (depth 1 only).
class Marker {
  public:
    explicit Marker(const DiffPoly& g);
    const DiffPoly& integrand() const { return *g_; }
    const std::string& key() const { return key_; }
    friend bool operator==(const Marker& a, const Marker& b) { return a.key_ == b.key_; }
    friend bool operator<(const Marker& a, const Marker& b) { return a.key_ < b.key_; }

  private:
    std::shared_ptr<const DiffPoly> g_;
    std::string key_;
};

// Product of jet powers and nonlocal markers (markers repeated by
// multiplicity). Sorted, canonical.
struct DiffMonomial {
    std::vector<std::pair<Jet, int>> jets;
    std::vector<Marker> markers;

    bool is_unit() const { return jets.empty() && markers.empty(); }
    long degree() const;
    int exponent(const Jet& j) const;
    int order_degree(int order) const;  // total exponent of jets with this x-order
    int max_order() const;              // -1 if no jets
    DiffMonomial times(const DiffMonomial& o) const;
    DiffMonomial shifted(const Jet& j, int delta) const;
    DiffMonomial without_one_marker(std::size_t index) const;
    static int compare(const DiffMonomial& a, const DiffMonomial& b);
    bool operator==(const DiffMonomial& o) const { return compare(*this, o) == 0; }
    std::string to_string() const;
};

struct DiffMonomialLess {
    bool operator()(const DiffMonomial& a, const DiffMonomial& b) const {
        return DiffMonomial::compare(a, b) < 0;
    }
};

enum class IntegrateMode { Strict, Symbolic };

// Differential polynomial: MultiPoly coefficients times jet/marker monomials.
class DiffPoly {
  public:
    using TermMap = std::map<DiffMonomial, MultiPoly, DiffMonomialLess>;

    DiffPoly() = default;
    DiffPoly(MultiPoly c);       // NOLINT(google-explicit-constructor)
    DiffPoly(long c) : DiffPoly(MultiPoly(c)) {}  // NOLINT

    static DiffPoly jet(int field, int order, int exp = 1);
    // Int(g); throws std::invalid_argument if g already carries markers.
    static DiffPoly nonlocal(const DiffPoly& g);

    bool is_zero() const { return terms_.empty(); }
    bool is_local() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int max_jet_order() const;  // -1 if no jets anywhere

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const MultiPoly& c, const DiffPoly& a);
    bool operator==(const DiffPoly& o) const;
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    // Total derivative D_x: prolongs jets, differentiates coefficients in x,
    // and resolves D_x Int(g) = g.
    DiffPoly total_x_derivative() const;

    // Antiderivative with integration constant zero. Strict mode throws
    // NotExactDerivative when the input is not a total derivative; symbolic
    // mode wraps the non-exact residue in Int(...).
    DiffPoly formal_integrate(IntegrateMode mode) const;

    // Formal partial derivative with respect to one jet variable.
    DiffPoly partial(const Jet& j) const;

    // Formal conjugation: i -> -i on coefficients, psi <-> psibar.
    // Throws std::invalid_argument for jets of other fields.
    DiffPoly conj() const;

    DiffPoly substitute_param(SymbolId s, const GaussianRational& value) const;
    DiffPoly truncate_param_above(SymbolId s, int max_exp) const;
    bool coeffs_depend_on(SymbolId s) const;

    // Splits by the power of a scalar symbol in the coefficients.
    std::map<int, DiffPoly> collect_param(SymbolId s) const;

    // d/dt with field time-derivatives supplied by `flows` (field -> f_t);
    // coefficients are differentiated in the explicit t.
    DiffPoly time_derivative(const std::map<int, DiffPoly>& flows) const;

    // The coefficient algebra view of a jet-free polynomial; throws if any
    // jets or markers are present.
    MultiPoly as_multipoly() const;

    std::string to_string() const;
    static DiffPoly parse(const std::string& text);

  private:
    void add_term(const DiffMonomial& mono, const MultiPoly& c);

    TermMap terms_;
};

}  // namespace relnls
