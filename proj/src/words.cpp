#include "matring/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace matring {

std::vector<Word> enumerate_words(int m, bool unital) {
    if (m < 0) throw std::invalid_argument("negative length bound");
    std::vector<Word> out;
    if (unital) out.push_back("");
    Word w;
    std::function<void()> dfs = [&]() {
        for (char c : {'x', 'y'}) {
            w.push_back(c);
            out.push_back(w);
            if ((int)w.size() < m) dfs();
            w.pop_back();
        }
    };
    if (m >= 1) dfs();
    return out;
}

NcPoly NcPoly::word(const Word& w, const Int& coeff, bool unital) {
    NcPoly p(unital || w.empty());
    p.add_term(w, coeff);
    return p;
}

NcPoly NcPoly::constant(const Int& c) {
    NcPoly p(true);
    p.add_term("", c);
    return p;
}

int NcPoly::degree() const {
    int d = -1;
    for (auto& [w, v] : c_) d = std::max<int>(d, (int)w.size());
    return d;
}

void NcPoly::add_term(const Word& w, const Int& coeff) {
    if (coeff == 0) return;
    if (w.empty() && !unital_) unital_ = true;
    Int& slot = c_[w];
    slot += coeff;
    if (slot == 0) c_.erase(w);
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    r.unital_ = unital_ || o.unital_;
    for (auto& [w, v] : o.c_) r.add_term(w, v);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator-() const {
    NcPoly r(unital_);
    for (auto& [w, v] : c_) r.c_[w] = -v;
    return r;
}

NcPoly NcPoly::scaled(const Int& s) const {
    NcPoly r(unital_);
    if (s == 0) return r;
    for (auto& [w, v] : c_) r.c_[w] = v * s;
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r(unital_ || o.unital_);
    for (auto& [w1, v1] : c_)
        for (auto& [w2, v2] : o.c_) r.add_term(w1 + w2, v1 * v2);
    return r;
}

NcPoly NcPoly::shift_y(const Int& m) const {
    // y -> m*x + y, applied letterwise and multiplied out.
    NcPoly result(unital_);
    for (auto& [w, coeff] : c_) {
        NcPoly term = NcPoly::constant(coeff);
        for (char ch : w) {
            NcPoly letter(false);
            if (ch == 'x') {
                letter.add_term("x", 1);
            } else {
                letter.add_term("x", m);
                letter.add_term("y", 1);
            }
            term = term * letter;
        }
        result = result + term;
    }
    result.unital_ = result.unital_ || unital_;
    return result;
}

NcPoly NcPoly::swap_xy() const {
    NcPoly r(unital_);
    for (auto& [w, v] : c_) {
        Word sw = w;
        for (auto& ch : sw) ch = (ch == 'x') ? 'y' : 'x';
        r.add_term(sw, v);
    }
    return r;
}

std::string NcPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, v] : c_) {
        Int a = v;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        // render runs as powers: xxy -> x^2*y
        std::string body;
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!body.empty()) body += "*";
            body += w[i];
            if (j - i > 1) body += "^" + std::to_string(j - i);
            i = j;
        }
        if (body.empty()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << body;
        }
    }
    return os.str();
}

NcPoly NcPoly::parse(const std::string& text, bool unital) {
    NcPoly result(unital);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    bool first_term = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
        } else if (!first_term) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first_term = false;
        skip_ws();
        Int coeff = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            std::string num;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
            coeff = Int(num);
            saw_digits = true;
        }
        Word w;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= text.size() || (text[i] != 'x' && text[i] != 'y')) break;
            char letter = text[i++];
            long exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string num;
                while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
                if (num.empty()) throw std::invalid_argument("missing exponent");
                exp = std::stol(num);
                if (exp < 0) throw std::invalid_argument("negative exponent");
            }
            w.append((std::size_t)exp, letter);
        }
        if (w.empty() && !saw_digits)
            throw std::invalid_argument("empty term in polynomial");
        if (w.empty() && !unital)
            throw std::invalid_argument("constant term requires a unital polynomial");
        result.add_term(w, sign > 0 ? coeff : -coeff);
        skip_ws();
    }
    return result;
}

NcPoly relator_r1(int n) {
    NcPoly p(true);
    p.add_term(Word((std::size_t)n, 'x'), 1);
    p.add_term("", -1);
    return p;
}

NcPoly relator_r2(int n) {
    NcPoly p(true);
    for (int i = 0; i < n; ++i) {
        Word w = Word((std::size_t)(n - i), 'x') + "y" + Word((std::size_t)i, 'x');
        p.add_term(w, 1);
    }
    p.add_term("", -1);
    return p;
}

NcPoly relator_s0() {
    NcPoly p(false);
    p.add_term("yy", 1);
    p.add_term("y", -1);
    return p;
}

NcPoly relator_sj(int j) {
    if (j < 1) throw std::invalid_argument("s_j needs j >= 1");
    NcPoly p(false);
    p.add_term("y" + Word((std::size_t)j, 'x') + "y", 1);
    return p;
}

}  // namespace matring
