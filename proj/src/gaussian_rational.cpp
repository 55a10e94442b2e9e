#include "relnls/gaussian_rational.hpp"

#include <stdexcept>

namespace relnls {

GaussianRational GaussianRational::ratio(long num, long den) {
    if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(1);
    GaussianRational base = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

namespace {

std::string imag_part_str(const mpq_class& b) {
    if (b == 1) return "i";
    if (b == -1) return "-i";
    return b.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return imag_part_str(im_);
    std::string s = re_.get_str();
    if (im_ > 0) {
        s += "+" + imag_part_str(im_);
    } else {
        s += "-" + imag_part_str(mpq_class(-im_));
    }
    return s;
}

}  // namespace relnls
