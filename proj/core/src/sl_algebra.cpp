#include "regdec/sl_algebra.hpp"

#include <algorithm>

#include "regdec/errors.hpp"

namespace regdec {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty rational");
    std::string s(text);
    for (char ch : s)
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw InvalidArgument("cannot parse rational '" + s + "'");
    if (s.front() == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw InvalidArgument("rational '" + std::string(text) + "' has zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

Rational RatMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::is_diagonal() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (o.dim_ != dim_) throw InvalidArgument("matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (o.dim_ != dim_) throw InvalidArgument("matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.dim_ != b.dim_) throw InvalidArgument("matrix size mismatch");
    RatMatrix c(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < a.dim_; ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) {
    if (a.dim() != b.dim())
        throw InvalidArgument("bracket of a " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                              " and a " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()) + " matrix");
    return a * b - b * a;
}

// ---------------------------------------------------------------------------

void RationalSpan::reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = v[pivots_[r]];
        if (f == 0) continue;
        const auto& row = rows_[r];
        for (std::size_t c = pivots_[r]; c < dim_; ++c)
            if (row[c] != 0) v[c] -= f * row[c];
    }
}

bool RationalSpan::add(std::vector<Rational> v) {
    if (v.size() != dim_) throw InvalidArgument("vector length does not match span dimension");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = v[p];
    for (std::size_t c = p; c < dim_; ++c) v[c] /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RationalSpan::contains(std::vector<Rational> v) const {
    if (v.size() != dim_) throw InvalidArgument("vector length does not match span dimension");
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<Rational>> RationalSpan::reduced_basis() const {
    auto rows = rows_;
    auto pivots = pivots_;
    // Sort by pivot, then clear every pivot column above and below.
    std::vector<std::size_t> idx(rows.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<std::vector<Rational>> out;
    std::vector<std::size_t> piv;
    for (auto i : idx) {
        out.push_back(rows[i]);
        piv.push_back(pivots[i]);
    }
    for (std::size_t r = 0; r < out.size(); ++r)
        for (std::size_t s = 0; s < out.size(); ++s) {
            if (s == r) continue;
            const Rational f = out[s][piv[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < dim_; ++c) out[s][c] -= f * out[r][c];
        }
    return out;
}

// ---------------------------------------------------------------------------

SlBasis::SlBasis(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("sl(n+1) requires n >= 1");
}

RatMatrix SlBasis::unit(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ + 1 || j > n_ + 1)
        throw InvalidArgument("unit matrix index outside [1.." + std::to_string(n_ + 1) + "]");
    RatMatrix m(n_ + 1);
    m(i - 1, j - 1) = 1;
    return m;
}

RatMatrix SlBasis::h(int i) const {
    if (i < 0 || i > n_) throw InvalidArgument("H index outside [0.." + std::to_string(n_) + "]");
    RatMatrix m(n_ + 1);
    if (i == 0) return m;
    m(0, 0) = 1;
    m(i, i) = -1;
    return m;
}

RatMatrix SlBasis::cartan_element(const CartanVector& c) const {
    if (static_cast<int>(c.size()) != n_)
        throw InvalidArgument("Cartan vector has length " + std::to_string(c.size()) + ", expected " +
                              std::to_string(n_));
    RatMatrix m(n_ + 1);
    for (int i = 1; i <= n_; ++i) {
        m(0, 0) += c[static_cast<std::size_t>(i - 1)];
        m(i, i) -= c[static_cast<std::size_t>(i - 1)];
    }
    return m;
}

CartanVector SlBasis::cartan_coords(const RatMatrix& diag) const {
    if (diag.dim() != n_ + 1 || !diag.is_diagonal() || diag.trace() != 0)
        throw InvalidArgument("expected a traceless diagonal matrix");
    CartanVector c(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) c[static_cast<std::size_t>(i - 1)] = -diag(i, i);
    return c;
}

void SlBasis::check(const RootSystem& rs) const {
    if (rs.type().family != Family::A || rs.rank() != n_)
        throw InvalidArgument("matrix model of sl(" + std::to_string(n_ + 1) + ") needs root system A" +
                              std::to_string(n_) + ", got " + to_string(rs.type()));
}

std::pair<int, int> SlBasis::position(const RootSystem& rs, RootIndex r) const {
    check(rs);
    const auto d = beta_difference(rs, r);
    return {d.i + 1, d.j + 1};
}

RootIndex SlBasis::root_at(const RootSystem& rs, int row, int col) const {
    check(rs);
    return beta_difference_index(rs, {row - 1, col - 1});
}

RatMatrix SlBasis::root_vector(const RootSystem& rs, RootIndex r) const {
    const auto [i, j] = position(rs, r);
    return unit(i, j);
}

namespace {

void append_term(std::string& s, const Rational& c, const std::string& name) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (s.empty()) {
        if (c < 0) s += "-";
    } else {
        s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += name;
}

}  // namespace

std::string SlBasis::describe(const RatMatrix& x) const {
    std::string s;
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j)
            if (i != j) append_term(s, x(i, j), "E_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
    RatMatrix d(n_ + 1);
    for (int i = 0; i <= n_; ++i) d(i, i) = x(i, i);
    if (d.trace() == 0) {
        const auto c = cartan_coords(d);
        for (int i = 1; i <= n_; ++i) append_term(s, c[static_cast<std::size_t>(i - 1)], "H_" + std::to_string(i));
    } else {
        for (int i = 0; i <= n_; ++i)
            append_term(s, d(i, i), "E_{" + std::to_string(i + 1) + "," + std::to_string(i + 1) + "}");
    }
    return s.empty() ? "0" : s;
}

std::vector<Rational> flatten(const RatMatrix& m) { return m.entries(); }

CartanVector cartan_of_root(const RootSystem& rs, RootIndex r) {
    CartanVector c(static_cast<std::size_t>(rs.rank()));
    if (rs.type().family == Family::A) {
        // H_{beta_j - beta_i} = H_j - H_i, H_0 = 0
        const auto d = beta_difference(rs, r);
        if (d.j > 0) c[static_cast<std::size_t>(d.j - 1)] += 1;
        if (d.i > 0) c[static_cast<std::size_t>(d.i - 1)] -= 1;
        return c;
    }
    const auto& coeffs = rs.root(r).coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k];
    return c;
}

std::string describe_cartan(const RootSystem& rs, const CartanVector& c) {
    std::string s;
    const bool type_a = rs.type().family == Family::A;
    for (std::size_t i = 0; i < c.size(); ++i)
        append_term(s, c[i], type_a ? "H_" + std::to_string(i + 1) : "H(alpha_" + std::to_string(i + 1) + ")");
    return s.empty() ? "0" : s;
}

}  // namespace regdec
