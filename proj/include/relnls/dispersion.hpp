#pragma once

#include <complex>
#include <map>
#include <string>

#include "relnls/multipoly.hpp"

namespace relnls {

enum class DispersionKind { NonRelativistic, SemiRelativistic };

// Truncated dispersion E(p) = E0 + sum_N E_N p^N with exact MultiPoly
// coefficients in (hbar, m, eps). The shifted series Etilde = E - E0 is what
// all operator expansions use; the rest energy is kept separately.
class DispersionSeries {
  public:
    static DispersionSeries nonrelativistic();
    // Binomial expansion of m c^2 (sqrt(1 + p^2 eps / m^2) - 1), keeping
    // every term with eps-order <= eps_order and p-degree <= degree_cap.
    // Rest energy m c^2 = m/eps is stored separately.
    static DispersionSeries semirelativistic(int eps_order, int degree_cap);

    DispersionKind kind() const { return kind_; }
    int eps_order() const { return eps_order_; }
    int max_degree() const { return max_degree_; }
    const MultiPoly& rest_energy() const { return rest_energy_; }

    // Shifted coefficients: N -> E_N (N >= 1, zero entries absent).
    const std::map<int, MultiPoly>& coeffs() const { return coeffs_; }
    MultiPoly coeff(int n) const;

    // Term-wise derivative: N -> N * E_N, i.e. Etilde'(p) = sum c_N p^(N-1).
    std::map<int, MultiPoly> derivative_coeffs() const;

    // Etilde as a polynomial in the symbol p.
    MultiPoly shifted_polynomial() const;

    // Numeric evaluation of Etilde(p) for given parameter values.
    std::complex<double> eval_shifted(std::complex<double> p, double m, double eps) const;

    std::string describe() const;

  private:
    DispersionKind kind_ = DispersionKind::NonRelativistic;
    int eps_order_ = 0;
    int max_degree_ = 2;
    std::map<int, MultiPoly> coeffs_;
    MultiPoly rest_energy_;
};

}  // namespace relnls
