#include "relnls/dispersion.hpp"

#include <stdexcept>

namespace relnls {

DispersionSeries DispersionSeries::nonrelativistic() {
    DispersionSeries d;
    d.kind_ = DispersionKind::NonRelativistic;
    d.eps_order_ = 0;
    d.max_degree_ = 2;
    // E2 = 1/(2m)
    d.coeffs_[2] = MultiPoly(GaussianRational::ratio(1, 2)) * MultiPoly::symbol(sym::m, -1);
    d.rest_energy_ = MultiPoly();
    return d;
}

DispersionSeries DispersionSeries::semirelativistic(int eps_order, int degree_cap) {
    if (eps_order < 0 || degree_cap < 2)
        throw std::invalid_argument("semirelativistic: need eps_order >= 0, degree_cap >= 2");
    DispersionSeries d;
    d.kind_ = DispersionKind::SemiRelativistic;
    d.eps_order_ = eps_order;
    d.max_degree_ = degree_cap;
    d.rest_energy_ = MultiPoly::symbol(sym::m) * MultiPoly::symbol(sym::eps, -1);

    // m c^2 [ (1 + p^2 eps/m^2)^(1/2) - 1 ]
    //   term j >= 1: binom(1/2, j) m^(1-2j) eps^(j-1) p^(2j)
    GaussianRational binom(1);  // binom(1/2, j), built incrementally
    for (int j = 1; 2 * j <= degree_cap && j - 1 <= eps_order; ++j) {
        // binom(1/2, j) = binom(1/2, j-1) * (1/2 - (j-1)) / j
        binom = binom * (GaussianRational::ratio(1, 2) - GaussianRational(j - 1)) /
                GaussianRational(j);
        MultiPoly c = MultiPoly(binom) * MultiPoly::symbol(sym::m, 1 - 2 * j);
        if (j > 1) c = c * MultiPoly::symbol(sym::eps, j - 1);
        d.coeffs_[2 * j] = c;
    }
    return d;
}

MultiPoly DispersionSeries::coeff(int n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? MultiPoly() : it->second;
}

std::map<int, MultiPoly> DispersionSeries::derivative_coeffs() const {
    std::map<int, MultiPoly> out;
    for (const auto& [n, c] : coeffs_)
        if (n >= 1) out[n] = MultiPoly(GaussianRational(n)) * c;
    return out;
}

MultiPoly DispersionSeries::shifted_polynomial() const {
    MultiPoly out;
    for (const auto& [n, c] : coeffs_) out += c * MultiPoly::symbol(sym::p, n);
    return out;
}

std::complex<double> DispersionSeries::eval_shifted(std::complex<double> p, double m,
                                                    double eps) const {
    std::map<SymbolId, std::complex<double>> vals{{sym::m, m}, {sym::eps, eps}};
    std::complex<double> acc = 0.0;
    for (const auto& [n, c] : coeffs_) acc += c.eval(vals) * std::pow(p, n);
    return acc;
}

std::string DispersionSeries::describe() const {
    if (kind_ == DispersionKind::NonRelativistic) return "nonrelativistic";
    return "semirelativistic(eps_order=" + std::to_string(eps_order_) +
           ",degree_cap=" + std::to_string(max_degree_) + ")";
}

}  // namespace relnls
