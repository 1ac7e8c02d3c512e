#include "borelreg/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace borelreg {

namespace {

/// Column-tracking scanner over a single line. Columns are 1-based.
class LineScanner {
public:
    LineScanner(const std::string& text, int line) : text_(text), line_(line) {}

    int line() const { return line_; }
    int column() const { return static_cast<int>(pos_) + 1; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!eat(c))
            throw ParseError("expected " + what, line_, column());
    }

    bool eat_word(const char* word) {
        skip_space();
        std::size_t len = 0;
        while (word[len] != '\0')
            ++len;
        if (text_.compare(pos_, len, word) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    Int read_number(const std::string& what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected " + what, line_, column());
        return Int(text_.substr(start, pos_ - start));
    }

private:
    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;
};

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Monomial parse_monomial(LineScanner& sc, const RingContext& ring) {
    std::vector<Int> exps(static_cast<std::size_t>(ring.num_vars), Int(0));
    for (;;) {
        const int factor_col = (sc.skip_space(), sc.column());
        if (sc.eat('1')) {
            if (std::isdigit(static_cast<unsigned char>(sc.raw_peek())))
                throw ParseError("a monomial factor is x<idx> or 1", sc.line(), factor_col);
        } else if (sc.eat('x')) {
            const int idx_col = sc.column();
            const Int idx = sc.read_number("variable index after x");
            if (idx < 1 || idx > ring.num_vars)
                throw ParseError("variable index x" + idx.str() + " out of range 1..." +
                                     std::to_string(ring.num_vars),
                                 sc.line(), idx_col);
            Int exp = 1;
            if (sc.eat('^')) {
                const int exp_col = sc.column();
                exp = sc.read_number("exponent after ^");
                if (exp <= 0)
                    throw ParseError("exponent must be positive", sc.line(), exp_col);
            }
            exps[static_cast<std::size_t>(idx.convert_to<int>() - 1)] += exp;
        } else {
            throw ParseError("expected a monomial factor", sc.line(), sc.column());
        }
        if (!sc.eat('*'))
            break;
    }
    return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        lines.push_back(current);

    std::size_t k = 0;
    while (k < lines.size() && blank(lines[k]))
        ++k;
    if (k == lines.size())
        throw ParseError("missing ring header line", static_cast<int>(lines.size()) + 1, 1);

    LineScanner header(lines[k], static_cast<int>(k) + 1);
    if (!header.eat_word("ring"))
        throw ParseError("expected ring header `ring n=<int>`", header.line(), header.column());
    if (!header.eat_word("n"))
        throw ParseError("expected `n` in ring header", header.line(), header.column());
    header.expect('=', "`=` in ring header");
    const int count_col = header.column();
    const Int n = header.read_number("variable count");
    if (n < 1 || n > 100000)
        throw ParseError("variable count out of range 1...100000", header.line(), count_col);
    if (!header.at_end())
        throw ParseError("unexpected content after ring header", header.line(), header.column());
    const RingContext ring(n.convert_to<int>());

    ++k;
    while (k < lines.size() && blank(lines[k]))
        ++k;
    if (k == lines.size())
        throw ParseError("missing ideal line `I = ...`", static_cast<int>(lines.size()) + 1, 1);

    LineScanner body(lines[k], static_cast<int>(k) + 1);
    if (!body.eat('I'))
        throw ParseError("expected ideal line `I = ...`", body.line(), body.column());
    body.expect('=', "`=` after I");
    std::vector<Monomial> gens;
    if (!body.at_end()) {
        gens.push_back(parse_monomial(body, ring));
        while (body.eat(','))
            gens.push_back(parse_monomial(body, ring));
        if (!body.at_end())
            throw ParseError("unexpected content after generator list", body.line(),
                             body.column());
    }

    for (++k; k < lines.size(); ++k)
        if (!blank(lines[k]))
            throw ParseError("unexpected extra line", static_cast<int>(k) + 1, 1);

    return minimalize(ring, std::move(gens));
}

std::string format_monomial(const Monomial& u) {
    if (u.is_unit())
        return "1";
    std::string out;
    for (int v = 1; v <= u.vars(); ++v) {
        const Int& e = u.exponent(v);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x';
        out += std::to_string(v);
        if (e != 1)
            out += '^' + e.str();
    }
    return out;
}

std::string format_ideal(const MonomialIdeal& I) {
    if (I.is_zero())
        return "(0)";
    std::string out = "(";
    bool first = true;
    for (const Monomial& g : I.generators()) {
        if (!first)
            out += ", ";
        out += format_monomial(g);
        first = false;
    }
    return out + ")";
}

std::string serialize_ideal(const MonomialIdeal& I) {
    std::string out = "ring n=" + std::to_string(I.vars()) + "\nI =";
    bool first = true;
    for (const Monomial& g : I.generators()) {
        out += first ? " " : ", ";
        out += format_monomial(g);
        first = false;
    }
    out += '\n';
    return out;
}

}  // namespace borelreg
