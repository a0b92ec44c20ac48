#include "qsl/polyk.hpp"

#include <map>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl {

void PolyK::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int PolyK::eval(const Int& k) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

Rat PolyK::eval(const Rat& k) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + Rat(*it);
    return acc;
}

PolyK PolyK::operator-() const {
    std::vector<Int> out(coeffs_);
    for (auto& c : out) c = -c;
    return PolyK(std::move(out));
}

PolyK PolyK::operator+(const PolyK& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return PolyK(std::move(out));
}

PolyK PolyK::operator-(const PolyK& o) const { return *this + (-o); }

PolyK PolyK::operator*(const PolyK& o) const {
    if (is_zero() || o.is_zero()) return PolyK();
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return PolyK(std::move(out));
}

namespace {

std::string monomial(const Int& coeff_abs, const std::string& var, int power, bool lead_term) {
    std::ostringstream os;
    bool unit = coeff_abs == 1 && power > 0;
    if (!unit) os << coeff_abs;
    (void)lead_term;
    if (power > 0) {
        if (!unit) os << "*";
        os << var;
        if (power > 1) os << "^" << power;
    }
    return os.str();
}

}  // namespace

std::string PolyK::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << monomial(abs(c), "k", i, false);
    }
    return os.str();
}

void PolyKX::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int PolyKX::degree_k() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

std::vector<Int> PolyKX::eval_k(const Int& k) const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(k));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Rat PolyKX::eval(const Rat& x, const Rat& k) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->eval(k);
    return acc;
}

PolyKX PolyKX::operator-() const {
    std::vector<PolyK> out(coeffs_);
    for (auto& c : out) c = -c;
    return PolyKX(std::move(out));
}

PolyKX PolyKX::operator+(const PolyKX& o) const {
    std::vector<PolyK> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
    return PolyKX(std::move(out));
}

PolyKX PolyKX::operator-(const PolyKX& o) const { return *this + (-o); }

PolyKX PolyKX::operator*(const PolyKX& o) const {
    if (is_zero() || o.is_zero()) return PolyKX();
    std::vector<PolyK> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
    return PolyKX(std::move(out));
}

std::string PolyKX::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree_x(); i >= 0; --i) {
        PolyK c = coeffs_[i];
        if (c.is_zero()) continue;
        // Pull the sign of the leading k-coefficient out front so nested
        // coefficients always print with a positive head: "- (16*k - 8)".
        bool negative = c.coeffs().back() < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        int terms = 0;
        for (const auto& t : c.coeffs())
            if (t != 0) ++terms;
        bool scalar_one = terms == 1 && c.degree() == 0 && c.coeff(0) == 1;
        if (i == 0) {
            os << (terms > 1 ? "(" + c.str() + ")" : c.str());
            continue;
        }
        if (terms > 1)
            os << "(" << c.str() << ")*";
        else if (!scalar_one)
            os << c.str() << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

PolyKX poly_from_descending(std::vector<PolyK> descending) {
    std::vector<PolyK> asc(descending.rbegin(), descending.rend());
    return PolyKX(std::move(asc));
}

namespace {

// Minor expansion over the rows still unprocessed, memoized on the mask of
// available columns.  Row index is implied by the popcount of the mask.
PolyKX minor_det(const std::vector<std::vector<PolyKX>>& m, unsigned mask,
                 std::map<unsigned, PolyKX>& memo) {
    int dim = static_cast<int>(m.size());
    int row = dim - __builtin_popcount(mask);
    if (row == dim) return PolyKX::constant(PolyK(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    PolyKX det;
    int sign = 1;
    for (int col = 0; col < dim; ++col) {
        if (!(mask & (1u << col))) continue;
        if (!m[row][col].is_zero()) {
            PolyKX sub = minor_det(m, mask & ~(1u << col), memo);
            PolyKX term = m[row][col] * sub;
            det = sign > 0 ? det + term : det - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, det);
    return det;
}

}  // namespace

PolyKX charpoly(const KMatrix& m) {
    int dim = m.dim();
    if (dim < 1 || dim > 8) throw domain_error("charpoly dimension must be between 1 and 8");
    for (const auto& row : m.rows)
        if (static_cast<int>(row.size()) != dim) throw domain_error("charpoly needs a square matrix");
    // xI - M with entries in Z[k][x]
    std::vector<std::vector<PolyKX>> a(dim, std::vector<PolyKX>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            PolyKX e = PolyKX::constant(-m.rows[i][j]);
            if (i == j) e = e + PolyKX::x();
            a[i][j] = e;
        }
    std::map<unsigned, PolyKX> memo;
    return minor_det(a, (1u << dim) - 1, memo);
}

Rat det_rat(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace qsl
