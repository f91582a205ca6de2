#include "nodal/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nodal {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q(text);
            q.canonicalize();
            return q;
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den <= 0) throw InputError("rational: denominator must be positive in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("rational: cannot parse '" + text + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool exponent_divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool degrevlex_greater(const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool DegRevLexGreater::operator()(const Exponent& a, const Exponent& b) const {
    return degrevlex_greater(a, b);
}

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(int nvars, Exponent e, Rational c) {
    if (static_cast<int>(e.size()) != nvars) throw InputError("monomial: exponent length mismatch");
    for (int x : e)
        if (x < 0) throw InputError("monomial: negative exponent");
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

Poly Poly::constant(int nvars, Rational c) { return monomial(nvars, Exponent(nvars, 0), std::move(c)); }

int Poly::degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal total degree under degrevlex.
    return total_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

const Exponent& Poly::lead_exponent() const {
    if (terms_.empty()) throw InternalError("lead_exponent of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::lead_coeff() const {
    if (terms_.empty()) throw InternalError("lead_coeff of zero polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (nvars_ != rhs.nvars_) throw InputError("poly +: variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (nvars_ != rhs.nvars_) throw InputError("poly -: variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw InputError("poly *: variable count mismatch");
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw InputError("derivative: variable index out of range");
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent de = e;
        de[var] -= 1;
        r.add_term(de, c * e[var]);
    }
    return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluate: point length mismatch");
    // Power cache per variable up to the largest exponent used.
    std::vector<std::vector<Rational>> pows(nvars_);
    for (int k = 0; k < nvars_; ++k) pows[k].push_back(Rational(1));
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int k = 0; k < nvars_; ++k) {
            while (static_cast<int>(pows[k].size()) <= e[k]) pows[k].push_back(pows[k].back() * point[k]);
            term *= pows[k][e[k]];
        }
        acc += term;
    }
    return acc;
}

Poly Poly::substitute_linear(const RationalMatrix& g) const {
    if (g.size() != nvars_) throw InputError("substitute_linear: matrix size mismatch");
    std::vector<Poly> image;
    image.reserve(nvars_);
    for (int k = 0; k < nvars_; ++k) {
        Poly row(nvars_);
        for (int j = 0; j < nvars_; ++j) {
            Exponent e(nvars_, 0);
            e[j] = 1;
            row.add_term(e, g.at(k, j));
        }
        image.push_back(std::move(row));
    }
    // pows[k][m] = image[k]^m, built lazily.
    std::vector<std::vector<Poly>> pows(nvars_);
    for (int k = 0; k < nvars_; ++k) pows[k].push_back(Poly::constant(nvars_, Rational(1)));
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(nvars_, c);
        for (int k = 0; k < nvars_; ++k) {
            while (static_cast<int>(pows[k].size()) <= e[k]) pows[k].push_back(pows[k].back() * image[k]);
            if (e[k] > 0) term = term * pows[k][e[k]];
        }
        r += term;
    }
    return r;
}

Poly Poly::primitive_integer_form() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm(1);
    for (const auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class content(0);
    for (const auto& [e, c] : terms_) {
        mpz_class num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(den_lcm, content);
    scale.canonicalize();
    if (lead_coeff() < 0) scale = -scale;
    Poly r = *this;
    r *= scale;
    return r;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    Poly r = *this;
    r *= Rational(1) / lead_coeff();
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool constant_term = total_degree(e) == 0;
        bool unit = (a == 1);
        if (!unit || constant_term) out << a.get_str();
        bool need_star = !unit && !constant_term;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (need_star) out << "*";
            out << "z" << k;
            if (e[k] > 1) out << "^" << e[k];
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- matrices

RationalMatrix::RationalMatrix(int size) : size_(size), a_(static_cast<std::size_t>(size) * size, Rational(0)) {
    if (size < 1) throw InputError("RationalMatrix: size must be positive");
}

RationalMatrix RationalMatrix::identity(int size) {
    RationalMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::permutation(const std::vector<int>& sigma) {
    if (!is_permutation(sigma)) throw InputError("permutation: not a permutation of 0..n");
    RationalMatrix m(static_cast<int>(sigma.size()));
    for (int k = 0; k < m.size(); ++k) m.at(k, sigma[k]) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (size_ != rhs.size_) throw InputError("matrix *: size mismatch");
    RationalMatrix r(size_);
    for (int i = 0; i < size_; ++i)
        for (int k = 0; k < size_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < size_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

Rational RationalMatrix::determinant() const {
    RationalMatrix m = *this;
    Rational det(1);
    for (int col = 0; col < size_; ++col) {
        int pivot = -1;
        for (int row = col; row < size_; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < size_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int row = col + 1; row < size_; ++row) {
            if (m.at(row, col) == 0) continue;
            Rational factor = m.at(row, col) * inv;
            for (int j = col; j < size_; ++j) m.at(row, j) -= factor * m.at(col, j);
        }
    }
    return det;
}

bool RationalMatrix::is_invertible() const { return determinant() != 0; }

RationalMatrix RationalMatrix::inverse() const {
    RationalMatrix m = *this;
    RationalMatrix inv = identity(size_);
    for (int col = 0; col < size_; ++col) {
        int pivot = -1;
        for (int row = col; row < size_; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw InputError("inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < size_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational scale = Rational(1) / m.at(col, col);
        for (int j = 0; j < size_; ++j) {
            m.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (int row = 0; row < size_; ++row) {
            if (row == col || m.at(row, col) == 0) continue;
            Rational factor = m.at(row, col);
            for (int j = 0; j < size_; ++j) {
                m.at(row, j) -= factor * m.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][col];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rational factor = rows[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

int RationalMatrix::rank() const {
    std::vector<std::vector<Rational>> rows(size_);
    for (int i = 0; i < size_; ++i) {
        rows[i].resize(size_);
        for (int j = 0; j < size_; ++j) rows[i][j] = at(i, j);
    }
    return matrix_rank(std::move(rows));
}

bool is_permutation(const std::vector<int>& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    for (int v : sigma) {
        if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return !sigma.empty();
}

int permutation_sign(const std::vector<int>& sigma) {
    std::vector<bool> visited(sigma.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (visited[i]) continue;
        std::size_t j = i, len = 0;
        while (!visited[j]) {
            visited[j] = true;
            j = static_cast<std::size_t>(sigma[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// ---------------------------------------------------------------- Form

Form::Form(int n, int d, Poly p) : n_(n), d_(d), poly_(std::move(p)) {
    if (n_ < 1) throw InputError("Form: ambient dimension must be >= 1");
    if (d_ < 0) throw InputError("Form: degree must be non-negative");
    if (poly_.nvars() != n_ + 1) throw InputError("Form: polynomial has wrong variable count");
    for (const auto& [e, c] : poly_.terms())
        if (total_degree(e) != d_)
            throw InputError("Form: term of degree " + std::to_string(total_degree(e)) +
                             " in a form of declared degree " + std::to_string(d_));
}

Rational Form::evaluate(std::span<const Rational> point) const { return poly_.evaluate(point); }

std::vector<Form> Form::gradient() const {
    std::vector<Form> g;
    g.reserve(n_ + 1);
    int dd = std::max(d_ - 1, 0);
    for (int k = 0; k <= n_; ++k) g.emplace_back(n_, dd, poly_.derivative(k));
    return g;
}

std::vector<std::vector<Form>> Form::hessian() const {
    int dd = std::max(d_ - 2, 0);
    std::vector<std::vector<Form>> h;
    h.reserve(n_ + 1);
    for (int j = 0; j <= n_; ++j) {
        std::vector<Form> row;
        row.reserve(n_ + 1);
        Poly dj = poly_.derivative(j);
        for (int k = 0; k <= n_; ++k) row.emplace_back(n_, dd, dj.derivative(k));
        h.push_back(std::move(row));
    }
    return h;
}

RationalMatrix Form::hessian_at(std::span<const Rational> point) const {
    auto h = hessian();
    RationalMatrix m(n_ + 1);
    for (int j = 0; j <= n_; ++j)
        for (int k = 0; k <= n_; ++k) m.at(j, k) = h[j][k].evaluate(point);
    return m;
}

Form Form::operator+(const Form& rhs) const {
    if (n_ != rhs.n_ || d_ != rhs.d_) throw InputError("form +: shape mismatch");
    return Form(n_, d_, poly_ + rhs.poly_);
}

Form Form::operator-(const Form& rhs) const {
    if (n_ != rhs.n_ || d_ != rhs.d_) throw InputError("form -: shape mismatch");
    return Form(n_, d_, poly_ - rhs.poly_);
}

Form Form::operator*(const Rational& c) const { return Form(n_, d_, poly_ * c); }

Form act(const RationalMatrix& g, const Form& f) {
    if (g.size() != f.n() + 1) throw InputError("act: matrix size mismatch");
    if (!g.is_invertible()) throw InputError("act: singular change of variables");
    return Form(f.n(), f.d(), f.poly().substitute_linear(g));
}

Form permute_variables(const Form& f, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != f.n() + 1 || !is_permutation(sigma))
        throw InputError("permute_variables: bad permutation");
    Poly r(f.n() + 1);
    for (const auto& [e, c] : f.poly().terms()) {
        Exponent img(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) img[static_cast<std::size_t>(sigma[k])] = e[k];
        r.add_term(img, c);
    }
    return Form(f.n(), f.d(), std::move(r));
}

// ---------------------------------------------------------------- parser

namespace {

class FormParser {
public:
    FormParser(const std::string& text, int n) : text_(text), n_(n) {}

    // Returns term list (exponent, coefficient); degree checks happen later.
    std::vector<std::pair<Exponent, Rational>> parse() {
        std::vector<std::pair<Exponent, Rational>> terms;
        skip_ws();
        bool negate = consume('-');
        terms.push_back(parse_term(negate));
        skip_ws();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            terms.push_back(parse_term(op == '-'));
            skip_ws();
        }
        return terms;
    }

private:
    std::pair<Exponent, Rational> parse_term(bool negate) {
        Rational coeff(1);
        Exponent e(n_ + 1, 0);
        bool saw_factor = false;
        if (at_end()) fail("unexpected end of input");
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                parse_factors(e);
                saw_factor = true;
            }
        } else {
            parse_factors(e);
            saw_factor = true;
        }
        (void)saw_factor;
        if (negate) coeff = -coeff;
        return {std::move(e), std::move(coeff)};
    }

    void parse_factors(Exponent& e) {
        parse_factor(e);
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            parse_factor(e);
            skip_ws();
        }
    }

    void parse_factor(Exponent& e) {
        if (at_end() || peek() != 'z') fail("expected variable 'z<index>'");
        ++pos_;
        long idx = parse_uint("variable index");
        if (idx > n_) fail("variable index " + std::to_string(idx) + " exceeds n = " + std::to_string(n_));
        int exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            exp = static_cast<int>(parse_uint("exponent"));
        }
        e[static_cast<std::size_t>(idx)] += exp;
    }

    Rational parse_coefficient() {
        bool neg = consume('-');
        std::string num = parse_digits("coefficient");
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::string den = parse_digits("denominator");
            mpz_class den_z(den);
            if (den_z == 0) fail("zero denominator");
            Rational q{mpz_class(num), den_z};
            q.canonicalize();
            return neg ? Rational(-q) : q;
        }
        Rational q{mpz_class(num)};
        return neg ? Rational(-q) : q;
    }

    long parse_uint(const std::string& what) {
        std::string digits = parse_digits(what);
        if (digits.size() > 9) fail(what + " too large");
        return std::stol(digits);
    }

    std::string parse_digits(const std::string& what) {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected " + what);
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool consume(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(const std::string& text, int n, int d) {
    if (n < 1) throw InputError("parse_form: n must be >= 1");
    if (d < 1) throw InputError("parse_form: d must be >= 1");
    std::string trimmed = text;
    if (trimmed.find_first_not_of(" \t\r\n") == std::string::npos)
        throw InputError("parse_form: empty polynomial");
    FormParser parser(text, n);
    Poly p(n + 1);
    for (auto& [e, c] : parser.parse()) {
        if (c == 0) continue;  // zero terms are pruned before the degree check
        if (total_degree(e) != d)
            throw InputError("parse_form: term of degree " + std::to_string(total_degree(e)) +
                             ", expected " + std::to_string(d));
        p.add_term(e, c);
    }
    if (p.is_zero()) throw InputError("parse_form: polynomial is zero");
    return Form(n, d, std::move(p));
}

}  // namespace nodal
