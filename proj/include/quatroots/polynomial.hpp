#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "quatroots/quaternion.hpp"

namespace quatroots {

// Polynomial with real coefficients, ascending powers. The zero polynomial is
// the empty coefficient list. Real polynomials are central in H[x]: they
// commute with every quaternionic polynomial under the star product.
class RealPoly {
  public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
    RealPoly(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial, which has no degree.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const double> coeffs() const { return c_; }
    double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

    friend bool operator==(const RealPoly&, const RealPoly&) = default;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
    }
    std::vector<double> c_;
};

RealPoly add(const RealPoly& a, const RealPoly& b);
RealPoly mul(const RealPoly& a, const RealPoly& b);
double eval(const RealPoly& p, double t);
// Real coefficients commute with the argument, so plain Horner applies.
Quaternion eval(const RealPoly& p, const Quaternion& q);

// Left polynomial over H: coefficients multiply powers from the left,
// p(x) = a_n x^n + ... + a_0, stored ascending. Addition is coefficient-wise;
// the ring product is the star product (coefficient convolution), under which
// evaluation is NOT multiplicative.
class HPoly {
  public:
    HPoly() = default;
    explicit HPoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) { trim(); }
    HPoly(std::initializer_list<Quaternion> coeffs) : c_(coeffs) { trim(); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial, which has no degree.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const Quaternion> coeffs() const { return c_; }
    Quaternion operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Quaternion{}; }
    Quaternion leading() const { return c_.empty() ? Quaternion{} : c_.back(); }

    friend bool operator==(const HPoly&, const HPoly&) = default;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == Quaternion{}) c_.pop_back();
    }
    std::vector<Quaternion> c_;
};

HPoly to_hpoly(const RealPoly& p);

HPoly add(const HPoly& a, const HPoly& b);
HPoly sub(const HPoly& a, const HPoly& b);

// Star product: c_k = sum_j a_j * b_{k-j}, quaternion factors in that order.
HPoly star_mul(const HPoly& a, const HPoly& b);
HPoly star_mul(const RealPoly& a, const HPoly& b);
HPoly star_mul(const HPoly& a, const RealPoly& b);

// Coefficient-wise conjugation; anti-homomorphism of the star product.
HPoly conj_poly(const HPoly& p);

// Horner evaluation r <- r*q + a_k: coefficients enter on the left, the
// argument multiplies on the right.
Quaternion eval(const HPoly& p, const Quaternion& q);

// Evaluate (l * r) at q without expanding the product: h = r(q); the result
// is 0 when h = 0 and l(h q h^-1) h otherwise.
Quaternion eval_left_product(const HPoly& l, const HPoly& r, const Quaternion& q);

// Characteristic polynomial of the congruence class of q:
// x^2 - 2 Re(q) x + |q|^2. Its zero set is exactly that class.
RealPoly char_poly(const Quaternion& q);

// p * conj(p), which is real in exact arithmetic. Throws RealityViolation if
// the imaginary residue exceeds 1e-10 relative to the coefficient scale.
RealPoly p_times_pbar(const HPoly& p);

// Monic product (x - t_n) * ... * (x - t_1) for terms = [t_1, ..., t_n]:
// the first term is the rightmost factor and is always a zero of the result.
HPoly from_factors(std::span<const Quaternion> terms);

// Left-multiply by the inverse of the leading coefficient. Preserves the
// zero set; the result's leading coefficient is exactly 1.
HPoly monicize(const HPoly& p);

// Divide by a monic real quadratic c: returns (quotient, remainder) with
// p = quotient * c + remainder and deg(remainder) <= 1. Restricted to real
// divisors because one-sided division by non-real polynomials does not give
// a remainder usable by the spherical-zero criterion.
std::pair<HPoly, HPoly> divide_by_real_quadratic(const HPoly& p, const RealPoly& c);

// max_k |c_k|: coefficient scale used for relative tolerances.
double coeff_scale(const HPoly& p);
double coeff_scale(const RealPoly& p);

}  // namespace quatroots
