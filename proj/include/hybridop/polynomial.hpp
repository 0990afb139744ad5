#pragma once

#include <cstddef>
#include <vector>

namespace hybridop {

/// Dense polynomial in plain coefficient form, coefficient of x^j at index j.
class Polynomial {
  public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double v) { return Polynomial({v}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(j)]
                                                                : 0.0;
    }

    double operator()(double x) const;  // Horner
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(double s) const;

  private:
    void trim();
    std::vector<double> coeffs_;
};

}  // namespace hybridop
