#include "hybridop/polynomial.hpp"

#include <stdexcept>

namespace hybridop {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (size_t j = coeffs_.size(); j-- > 0;) v = v * x + coeffs_[j];
    return v;
}

Polynomial Polynomial::derivative() const {
    std::vector<double> d;
    for (size_t j = 1; j < coeffs_.size(); ++j) d.push_back(static_cast<double>(j) * coeffs_[j]);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> out(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) out[j] += coeffs_[j];
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[j] += o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<double> out(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) out[j] += coeffs_[j];
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[j] -= o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<double> out(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(double s) const {
    std::vector<double> out = coeffs_;
    for (double& c : out) c *= s;
    return Polynomial(std::move(out));
}

}  // namespace hybridop
