#include "confalg/poly.hpp"

#include <cctype>
#include <sstream>

namespace confalg {

Poly Poly::rename_lvars(const std::map<int, int>& mapping) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial m2;
        m2.dpow = m.dpow;
        for (size_t i = 0; i < m.lpows.size(); ++i) {
            if (m.lpows[i] == 0) continue;
            int src = static_cast<int>(i) + 1;
            auto it = mapping.find(src);
            int dst = it != mapping.end() ? it->second : src;
            if (dst < 1) throw std::invalid_argument("rename: bad L index");
            if (m2.lpows.size() < static_cast<size_t>(dst))
                m2.lpows.resize(dst, 0);
            if (m2.lpows[dst - 1] != 0)
                throw std::invalid_argument("rename: mapping not injective");
            m2.lpows[dst - 1] = m.lpows[i];
        }
        m2.normalize();
        r.add_term(m2, c);
    }
    return r;
}

namespace {

void print_rational(std::ostream& os, const Rational& c) {
    os << numerator(c).str();
    if (denominator(c) != 1) os << "/" << denominator(c).str();
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest-order terms first reads better and keeps output deterministic.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = m.total_degree() > 0;
        bool printed = false;
        if (a != 1 || !has_var) {
            print_rational(os, a);
            printed = true;
        }
        auto emit = [&](const std::string& name, int e) {
            if (e == 0) return;
            if (printed) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            printed = true;
        };
        emit("D", m.dpow);
        for (size_t i = 0; i < m.lpows.size(); ++i)
            emit("L" + std::to_string(i + 1), m.lpows[i]);
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly run() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("poly parse error at offset " +
                                    std::to_string(pos_) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly parse_sum() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = parse_product();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                p += parse_product();
            } else if (eat('-')) {
                p -= parse_product();
            } else {
                return p;
            }
        }
    }

    Poly parse_product() {
        Poly p = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                p *= parse_power();
                continue;
            }
            // Implicit multiplication: "2D", "(D+L1)(D+L2)", "3 L1".
            char c = peek();
            if (c == '(' || c == 'D' || c == 'L' ||
                std::isdigit(static_cast<unsigned char>(c)) ||
                (pos_ < s_.size() && (s_[pos_] & 0x80))) {
                p *= parse_power();
                continue;
            }
            return p;
        }
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (eat('^')) {
            int e = parse_int();
            if (e < 0) fail("negative exponent");
            return base.pow(e);
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            Poly p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (eat('-')) return -parse_power();
        char c = s_[pos_];
        if (c == 'D') {
            ++pos_;
            return Poly::D();
        }
        // "λ" is U+03BB, 0xCE 0xBB in UTF-8; accept it as an alias for L.
        if (c == 'L' || (pos_ + 1 < s_.size() &&
                         static_cast<unsigned char>(c) == 0xCE &&
                         static_cast<unsigned char>(s_[pos_ + 1]) == 0xBB)) {
            pos_ += (c == 'L') ? 1 : 2;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected index after L");
            int i = parse_int();
            if (i < 1) fail("L index must be positive");
            return Poly::L(i);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num(parse_bigint());
            if (eat('/')) {
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator");
                boost::multiprecision::cpp_int den = parse_bigint();
                if (den == 0) fail("zero denominator");
                num /= den;
            }
            return Poly(num);
        }
        fail("unexpected character");
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    boost::multiprecision::cpp_int parse_bigint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        return boost::multiprecision::cpp_int(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text) { return Parser(text).run(); }

}  // namespace confalg
