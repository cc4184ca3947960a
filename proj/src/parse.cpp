#include "svlab/parse.hpp"

#include <cctype>

#include "svlab/errors.hpp"

namespace svlab {

namespace {

class PolyParser {
public:
    // nvars < 0 selects univariate mode (single variable "z")
    PolyParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    // returns accumulated (exponent, coefficient) terms
    std::vector<std::pair<ExpVec, GaussRat>> run() {
        std::vector<std::pair<ExpVec, GaussRat>> terms;
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", 0);
        GaussRat sign(1);
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sign = GaussRat(-1);
        }
        terms.push_back(parse_term(sign));
        skip_ws();
        while (!eof()) {
            char op = take();
            if (op != '+' && op != '-')
                throw ParseError("expected '+' or '-' between terms", pos_ - 1);
            terms.push_back(parse_term(GaussRat(op == '-' ? -1 : 1)));
            skip_ws();
        }
        return terms;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (eof() || peek() != c)
            throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    int arity() const { return nvars_ < 0 ? 1 : nvars_; }

    unsigned long parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected a natural number", start);
        if (pos_ - start > 6) throw ParseError("number too large", start);
        return std::stoul(s_.substr(start, pos_ - start));
    }

    Rat parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a rational literal", pos_);
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!eof() && peek() == '/') {
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected digits after '/'", pos_);
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return rat_parse(s_.substr(start, pos_ - start), start);
    }

    GaussRat parse_coeff() {
        skip_ws();
        if (eof()) throw ParseError("expected a coefficient", pos_);
        if (peek() == 'i') {
            ++pos_;
            return gauss_i();
        }
        if (peek() != '(') return GaussRat(parse_rational());
        ++pos_;
        Rat re = parse_rational();
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            Rat s(take() == '-' ? -1 : 1);
            skip_ws();
            Rat mag(1);
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
                mag = parse_rational();
            skip_ws();
            if (eof() || peek() != 'i')
                throw ParseError("expected 'i' in complex coefficient", pos_);
            ++pos_;
            expect(')', "')'");
            return GaussRat(re, s * mag);
        }
        expect(')', "')'");
        return GaussRat(re);
    }

    void parse_factor(ExpVec& exps) {
        skip_ws();
        if (eof()) throw ParseError("expected a variable", pos_);
        std::size_t at = pos_;
        int idx;
        if (nvars_ < 0) {
            if (peek() != 'z') throw ParseError("expected variable 'z'", at);
            ++pos_;
            idx = 0;
        } else {
            if (peek() != 'x') throw ParseError("expected a variable 'x<k>'", at);
            ++pos_;
            idx = static_cast<int>(parse_nat());
            if (idx >= nvars_)
                throw ParseError("variable index out of range (have " +
                                     std::to_string(nvars_) + " variables)",
                                 at);
        }
        int e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            e = static_cast<int>(parse_nat());
        }
        exps[static_cast<std::size_t>(idx)] += e;
    }

    std::pair<ExpVec, GaussRat> parse_term(const GaussRat& sign) {
        skip_ws();
        if (eof()) throw ParseError("expected a term", pos_);
        ExpVec exps(static_cast<std::size_t>(arity()), 0);
        GaussRat coeff(1);
        char c = peek();
        bool var_start = (nvars_ < 0) ? (c == 'z') : (c == 'x');
        if (var_start) {
            parse_factor(exps);
        } else {
            coeff = parse_coeff();
        }
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            parse_factor(exps);
            skip_ws();
        }
        return {exps, sign * coeff};
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

// sign-aware body used by both printers; factors is "" for constant terms
struct TermText {
    bool negative;
    std::string body;
};

TermText term_text(const GaussRat& c, const std::string& factors) {
    if (c.is_real()) {
        Rat mag = abs(c.re);
        std::string m = rat_str(mag);
        if (factors.empty()) return {c.re < 0, m};
        return {c.re < 0, mag == 1 ? factors : m + "*" + factors};
    }
    if (c.re == 0 && abs(c.im) == 1)
        return {c.im < 0, factors.empty() ? std::string("i") : "i*" + factors};
    return {false, factors.empty() ? c.str() : c.str() + "*" + factors};
}

std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (j == 0)
            out += terms[j].negative ? "-" : "";
        else
            out += terms[j].negative ? " - " : " + ";
        out += terms[j].body;
    }
    return out;
}

} // namespace

MultiPoly parse_multi(const std::string& text, int nvars) {
    if (nvars <= 0) throw std::invalid_argument("parse_multi: nvars must be positive");
    MultiPoly p(nvars);
    for (auto& [e, c] : PolyParser(text, nvars).run()) p.add_term(e, c);
    return p;
}

UniPoly parse_uni(const std::string& text) {
    std::vector<GaussRat> coeffs;
    for (auto& [e, c] : PolyParser(text, -1).run()) {
        std::size_t d = static_cast<std::size_t>(e[0]);
        if (coeffs.size() <= d) coeffs.resize(d + 1);
        coeffs[d] += c;
    }
    return UniPoly(std::move(coeffs));
}

std::string poly_str(const MultiPoly& p) {
    std::vector<TermText> parts;
    for (const auto& [e, c] : p.terms()) {
        std::string factors;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(j);
            if (e[j] > 1) factors += "^" + std::to_string(e[j]);
        }
        parts.push_back(term_text(c, factors));
    }
    return join_terms(parts);
}

std::string poly_str(const UniPoly& p) {
    std::vector<TermText> parts;
    for (int d = p.degree(); d >= 0; --d) {
        const GaussRat& c = p.coeff(d);
        if (c.is_zero()) continue;
        std::string factors;
        if (d == 1)
            factors = "z";
        else if (d > 1)
            factors = "z^" + std::to_string(d);
        parts.push_back(term_text(c, factors));
    }
    return join_terms(parts);
}

} // namespace svlab
