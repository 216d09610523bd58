#include "qeuler/qpoly.hpp"

#include <cctype>
#include <ostream>

namespace qeuler {

QXPoly QXPoly::monomial(Int c, int q_exp, int x_exp) {
    QXPoly p;
    p.add_term(q_exp, x_exp, c);
    return p;
}

Int QXPoly::coeff(int q_exp, int x_exp) const {
    auto it = terms_.find(Monomial{q_exp, x_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

int QXPoly::max_q_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.q_exp);
    return d;
}

int QXPoly::max_x_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.x_exp;
}

void QXPoly::add_term(int q_exp, int x_exp, const Int& c) {
    if (c == 0) return;
    if (q_exp < 0 || x_exp < 0) throw std::invalid_argument("negative exponent");
    Monomial key{q_exp, x_exp};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QXPoly& QXPoly::operator+=(const QXPoly& r) {
    for (const auto& [m, c] : r.terms_) add_term(m.q_exp, m.x_exp, c);
    return *this;
}

QXPoly& QXPoly::operator-=(const QXPoly& r) {
    for (const auto& [m, c] : r.terms_) add_term(m.q_exp, m.x_exp, -c);
    return *this;
}

QXPoly operator*(const QXPoly& a, const QXPoly& b) {
    QXPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma.q_exp + mb.q_exp, ma.x_exp + mb.x_exp, ca * cb);
    return out;
}

QXPoly& QXPoly::operator*=(const QXPoly& r) {
    *this = *this * r;
    return *this;
}

QXPoly QXPoly::operator-() const {
    QXPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

QXPoly QXPoly::times_scalar(const Int& c) const {
    QXPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

QXPoly QXPoly::times_monomial(int q_exp, int x_exp, const Int& c) const {
    QXPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_)
        out.add_term(m.q_exp + q_exp, m.x_exp + x_exp, k * c);
    return out;
}

namespace {

Int int_pow(const Int& base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

Int QXPoly::eval(const Int& q_val, const Int& x_val) const {
    Int sum = 0;
    for (const auto& [m, c] : terms_)
        sum += c * int_pow(q_val, m.q_exp) * int_pow(x_val, m.x_exp);
    return sum;
}

QXPoly QXPoly::substitute_x(const Int& x_val) const {
    QXPoly out;
    for (const auto& [m, c] : terms_)
        out.add_term(m.q_exp, 0, c * int_pow(x_val, m.x_exp));
    return out;
}

std::vector<Int> QXPoly::q_coefficients() const {
    std::vector<Int> coeffs(static_cast<std::size_t>(max_q_degree()) + 1, Int(0));
    for (const auto& [m, c] : terms_) {
        if (m.x_exp != 0) throw std::logic_error("q_coefficients: polynomial involves x");
        coeffs[static_cast<std::size_t>(m.q_exp)] = c;
    }
    return coeffs;
}

bool QXPoly::has_negative_coeff() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return true;
    return false;
}

std::string QXPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? "-" : "+";
        }
        std::vector<std::string> parts;
        if (mag != 1 || (m.q_exp == 0 && m.x_exp == 0)) parts.push_back(mag.str());
        if (m.q_exp > 0) parts.push_back(m.q_exp == 1 ? "q" : "q^" + std::to_string(m.q_exp));
        if (m.x_exp > 0) parts.push_back(m.x_exp == 1 ? "x" : "x^" + std::to_string(m.x_exp));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    return out;
}

namespace {

// One factor of a term: an integer literal, or q/x with an optional exponent.
void parse_factor(const std::string& tok, Int& coeff, int& q_exp, int& x_exp) {
    if (tok.empty()) throw ParseError("polynomial: empty factor");
    if (tok[0] == 'q' || tok[0] == 'x') {
        int exp = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw ParseError("polynomial: expected '^' in " + tok);
            Int parsed;
            try {
                parsed = parse_int_decimal(tok.substr(2));
            } catch (const ParseError&) {
                throw ParseError("polynomial: bad exponent in " + tok);
            }
            if (parsed < 0 || parsed > 1'000'000)
                throw ParseError("polynomial: exponent out of range in " + tok);
            exp = parsed.convert_to<int>();
        }
        (tok[0] == 'q' ? q_exp : x_exp) += exp;
        return;
    }
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("polynomial: bad factor " + tok);
    coeff *= parse_int_decimal(tok);
}

}  // namespace

QXPoly QXPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("polynomial: empty input");

    QXPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        if (j == i) throw ParseError("polynomial: dangling sign in " + text);
        std::string term = s.substr(i, j - i);
        Int coeff = sign;
        int q_exp = 0, x_exp = 0;
        std::size_t start = 0;
        while (start <= term.size()) {
            std::size_t star = term.find('*', start);
            std::string tok =
                term.substr(start, star == std::string::npos ? std::string::npos : star - start);
            parse_factor(tok, coeff, q_exp, x_exp);
            if (star == std::string::npos) break;
            start = star + 1;
        }
        out.add_term(q_exp, x_exp, coeff);
        i = j;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QXPoly& p) { return os << p.to_string(); }

QXPoly q_integer(int n, int step) {
    if (n < 1 || step < 1) throw std::invalid_argument("q_integer: n and step must be positive");
    QXPoly out;
    for (int e = 0; e < n * step; ++e) out.add_term(e, 0, 1);
    return out;
}

QXPoly q_binomial(int n, int k, int base_exponent) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: requires 0 <= k <= n");
    if (base_exponent < 1) throw std::invalid_argument("q_binomial: base exponent must be positive");
    // Pascal row by row: [i,j] = [i-1,j-1] + q^{ell*j} [i-1,j].
    std::vector<QXPoly> row{QXPoly(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<QXPoly> next(static_cast<std::size_t>(std::min(i, k)) + 1);
        next[0] = QXPoly(1);
        for (int j = 1; j <= std::min(i, k); ++j) {
            QXPoly val = j <= i - 1 ? row[static_cast<std::size_t>(j)].times_monomial(base_exponent * j, 0)
                                    : QXPoly();
            if (j - 1 < static_cast<int>(row.size())) val += row[static_cast<std::size_t>(j - 1)];
            next[static_cast<std::size_t>(j)] = std::move(val);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

QXPoly rising_flag_product(int a, int b, int ell) {
    if (a > b) throw std::invalid_argument("rising_flag_product: requires a <= b");
    if (ell < 1) throw std::invalid_argument("rising_flag_product: ell must be positive");
    QXPoly out(1);
    for (int j = a + 1; j <= b; ++j) out *= q_integer(j, ell);
    return out;
}

}  // namespace qeuler
