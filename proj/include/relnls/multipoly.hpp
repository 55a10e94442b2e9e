#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relnls/gaussian_rational.hpp"

namespace relnls {

using SymbolId = int;

// Process-wide symbol registry. The built-in scalar symbols come first and
// have fixed ids; user symbols can be declared at any time.
namespace sym {
inline constexpr SymbolId x = 0;
inline constexpr SymbolId t = 1;
inline constexpr SymbolId hbar = 2;
inline constexpr SymbolId m = 3;
inline constexpr SymbolId eps = 4;     // 1/c^2
inline constexpr SymbolId kappa2 = 5;  // kappa^2
inline constexpr SymbolId p = 6;       // spectral parameter / momentum
}  // namespace sym

SymbolId declare_symbol(const std::string& name);
const std::string& symbol_name(SymbolId id);
// Returns -1 if the name is unknown.
SymbolId lookup_symbol(const std::string& name);

// Sparse exponent vector, sorted by symbol id, no zero exponents.
// Exponents may be negative (Laurent monomials); the dispersion and
// E-polynomial constructors keep eps, kappa2, p non-negative.
class Monomial {
  public:
    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial of(SymbolId s, int exp = 1);

    bool is_unit() const { return exps_.empty(); }
    long degree() const;
    int exponent(SymbolId s) const;
    const std::vector<std::pair<SymbolId, int>>& exps() const { return exps_; }

    Monomial times(const Monomial& o) const;
    // Drops the given symbol entirely.
    Monomial without(SymbolId s) const;
    // Adds delta to the exponent of s (removing a resulting zero).
    Monomial shifted(SymbolId s, int delta) const;

    // Graded-lex: higher total degree first; ties broken by the first
    // differing exponent in symbol-id order (larger exponent = larger).
    static int compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    std::string to_string() const;

  private:
    std::vector<std::pair<SymbolId, int>> exps_;
};

struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) < 0;
    }
};

// Sparse multivariate polynomial over GaussianRational in the registered
// symbols. Canonical: graded-lex ordered terms, no zero coefficients.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialGrlexLess>;

    MultiPoly() = default;
    MultiPoly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(GaussianRational(c)) {}  // NOLINT

    static MultiPoly symbol(SymbolId s, int exp = 1);
    static MultiPoly i() { return MultiPoly(GaussianRational::i()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    GaussianRational constant_term() const;
    GaussianRational coefficient(const Monomial& mono) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const;  // e >= 0
    // Exact division by a single-term polynomial (coefficient * monomial).
    MultiPoly div_monomial(const GaussianRational& c, const Monomial& mono) const;
    MultiPoly conj() const;

    MultiPoly derivative(SymbolId s) const;
    // Substitutes an exact constant for a symbol. Throws std::domain_error if
    // the value is zero and the symbol occurs with a negative exponent.
    MultiPoly substitute(SymbolId s, const GaussianRational& value) const;
    // Drops all terms whose exponent of s exceeds max_exp.
    MultiPoly truncate_above(SymbolId s, int max_exp) const;

    bool depends_on(SymbolId s) const;
    int max_exponent(SymbolId s) const;  // 0 for the zero polynomial
    int min_exponent(SymbolId s) const;

    // Splits into { exponent-of-s -> polynomial free of s }.
    std::map<int, MultiPoly> collect(SymbolId s) const;

    std::complex<double> eval(const std::map<SymbolId, std::complex<double>>& values) const;

    std::string to_string() const;
    static MultiPoly parse(const std::string& text);

  private:
    void add_term(const Monomial& mono, const GaussianRational& c);
    friend class DiffPoly;

    TermMap terms_;
};

}  // namespace relnls
