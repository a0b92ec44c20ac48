#pragma once

#include <string>
#include <vector>

#include "qsl/exact.hpp"

namespace qsl {

// Polynomial in the family parameter k with arbitrary-precision integer
// coefficients, stored in ascending powers with trailing zeros stripped.
class PolyK {
public:
    PolyK() = default;
    PolyK(long long c) : coeffs_{Int(c)} { normalize(); }
    PolyK(Int c) : coeffs_{std::move(c)} { normalize(); }
    explicit PolyK(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static PolyK k() { return PolyK(std::vector<Int>{0, 1}); }
    // a*k + b, the shape of every quotient-matrix entry
    static PolyK affine(long long a, long long b) { return PolyK(std::vector<Int>{b, a}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Int(0);
    }

    Int eval(const Int& k) const;
    Rat eval(const Rat& k) const;

    PolyK operator-() const;
    PolyK operator+(const PolyK& o) const;
    PolyK operator-(const PolyK& o) const;
    PolyK operator*(const PolyK& o) const;
    bool operator==(const PolyK& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PolyK& o) const { return !(*this == o); }

    // Canonical ASCII form, descending powers: "2*k^2 - 3*k + 1".
    std::string str() const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

// Polynomial in x whose coefficients live in Z[k]; ascending powers of x.
class PolyKX {
public:
    PolyKX() = default;
    explicit PolyKX(std::vector<PolyK> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static PolyKX x() { return PolyKX({PolyK(0), PolyK(1)}); }
    static PolyKX constant(PolyK c) { return PolyKX({std::move(c)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_k() const;
    const std::vector<PolyK>& coeffs() const { return coeffs_; }
    PolyK coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : PolyK();
    }

    // Specialize k, leaving an integer polynomial in x (ascending powers).
    std::vector<Int> eval_k(const Int& k) const;
    // Full evaluation at rational (x, k); used to cross-check determinants.
    Rat eval(const Rat& x, const Rat& k) const;

    PolyKX operator-() const;
    PolyKX operator+(const PolyKX& o) const;
    PolyKX operator-(const PolyKX& o) const;
    PolyKX operator*(const PolyKX& o) const;
    bool operator==(const PolyKX& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PolyKX& o) const { return !(*this == o); }

    // Canonical ASCII form, descending powers of x, k-coefficients
    // parenthesized when they have more than one term:
    // "x^4 - (2*k + 7)*x^3 + (10*k + 15)*x^2 - (14*k + 9)*x + 4*k".
    std::string str() const;

private:
    void normalize();
    std::vector<PolyK> coeffs_;
};

// Convenience constructor from descending x-coefficients, matching the way
// polynomials are written out.
PolyKX poly_from_descending(std::vector<PolyK> descending);

// Square matrix over Z[k]; row-major.
struct KMatrix {
    std::vector<std::vector<PolyK>> rows;
    int dim() const { return static_cast<int>(rows.size()); }
};

// det(xI - M) computed by fraction-free minor expansion memoized on column
// subsets; exact over Z[k][x].  Dimension capped at 8.
PolyKX charpoly(const KMatrix& m);

// Exact determinant of a rational matrix (cross-check helper for charpoly).
Rat det_rat(std::vector<std::vector<Rat>> m);

}  // namespace qsl
