#include "alexdef/words.hpp"

#include "alexdef/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace alexdef {

FreeWord FreeWord::reduce(std::span<const Letter> raw) {
    FreeWord w;
    for (const Letter& l : raw) {
        if (l.exp == 0) continue;
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
            w.letters_.back().exp += l.exp;
            if (w.letters_.back().exp == 0) w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

FreeWord FreeWord::generator(int gen, long exp) {
    Letter l{gen, exp};
    return reduce({&l, 1});
}

long FreeWord::length() const {
    long n = 0;
    for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    std::vector<Letter> cat;
    cat.reserve(letters_.size() + rhs.letters_.size());
    cat.insert(cat.end(), letters_.begin(), letters_.end());
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce(cat);
}

Int FreeWord::exponent_sum(int gen) const {
    Int s = 0;
    for (const Letter& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

std::vector<Int> FreeWord::exponent_vector(int ngens) const {
    std::vector<Int> v(static_cast<std::size_t>(ngens), Int(0));
    for (const Letter& l : letters_) v.at(static_cast<std::size_t>(l.gen)) += l.exp;
    return v;
}

std::string Presentation::word_to_string(const FreeWord& w) const {
    if (w.is_identity()) return "1";
    std::string s;
    for (const Letter& l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += generator_names.at(static_cast<std::size_t>(l.gen));
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

IntGroupRing fox_derivative(const FreeWord& w, int gen) {
    IntGroupRing d;
    FreeWord prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen == gen) {
            if (l.exp > 0) {
                // d(S^k) = 1 + S + ... + S^(k-1)
                for (long j = 0; j < l.exp; ++j)
                    d.add_term(prefix * FreeWord::generator(gen, j), Int(1));
            } else {
                // d(S^-k) = -(S^-1 + ... + S^-k)
                for (long j = 1; j <= -l.exp; ++j)
                    d.add_term(prefix * FreeWord::generator(gen, -j), Int(-1));
            }
        }
        prefix = prefix * FreeWord::generator(l.gen, l.exp);
    }
    return d;
}

IntGroupRing fox_derivative(const IntGroupRing& e, int gen) {
    IntGroupRing d;
    for (const auto& [w, c] : e.terms()) {
        IntGroupRing dw = fox_derivative(w, gen);
        for (const auto& [u, n] : dw.terms()) d.add_term(u, c * n);
    }
    return d;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Tok {
    std::string s;
    int line, col;
};

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<Tok> line_tokens(const std::string& line, int lineno) {
    std::vector<Tok> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        toks.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    return toks;
}

Letter parse_word_token(const Tok& tok, const Presentation& p) {
    const std::string& s = tok.s;
    std::size_t i = 0;
    if (i >= s.size() || !is_name_start(s[i]))
        throw parse_error(tok.line, tok.col, "expected generator name, got '" + s + "'");
    while (i < s.size() && is_name_char(s[i])) ++i;
    std::string name = s.substr(0, i);
    long exp = 1;
    if (i < s.size()) {
        if (s[i] != '^')
            throw parse_error(tok.line, tok.col + static_cast<int>(i),
                              "expected '^' after generator name in '" + s + "'");
        ++i;
        std::size_t digits = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i != s.size() || i == digits)
            throw parse_error(tok.line, tok.col + static_cast<int>(digits),
                              "malformed exponent in '" + s + "'");
        try {
            exp = std::stol(s.substr(digits));
        } catch (const std::exception&) {
            throw parse_error(tok.line, tok.col + static_cast<int>(digits),
                              "exponent out of range in '" + s + "'");
        }
    }
    for (int g = 0; g < p.ngens(); ++g)
        if (p.generator_names[static_cast<std::size_t>(g)] == name) return {g, exp};
    throw parse_error(tok.line, tok.col, "undeclared generator '" + name + "'");
}

FreeWord parse_word(const std::vector<Tok>& toks, std::size_t from, const Presentation& p) {
    std::vector<Letter> raw;
    for (std::size_t i = from; i < toks.size(); ++i) raw.push_back(parse_word_token(toks[i], p));
    return FreeWord::reduce(raw);
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int state = 0; // 0: want gens, 1: want rels, 2: reading relators
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Tok> toks = line_tokens(line, lineno);
        if (toks.empty()) continue;
        if (state == 0) {
            if (toks[0].s != "gens:")
                throw parse_error(toks[0].line, toks[0].col, "expected 'gens:'");
            if (toks.size() == 1)
                throw parse_error(toks[0].line, toks[0].col, "presentation declares no generators");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const std::string& name = toks[i].s;
                if (!is_name_start(name[0]))
                    throw parse_error(toks[i].line, toks[i].col,
                                      "invalid generator name '" + name + "'");
                for (char c : name)
                    if (!is_name_char(c))
                        throw parse_error(toks[i].line, toks[i].col,
                                          "invalid generator name '" + name + "'");
                for (const std::string& seen : p.generator_names)
                    if (seen == name)
                        throw parse_error(toks[i].line, toks[i].col,
                                          "duplicate generator '" + name + "'");
                p.generator_names.push_back(name);
            }
            state = 1;
        } else if (state == 1) {
            if (toks[0].s != "rels:")
                throw parse_error(toks[0].line, toks[0].col, "expected 'rels:'");
            if (toks.size() > 1) p.relators.push_back(parse_word(toks, 1, p));
            state = 2;
        } else {
            p.relators.push_back(parse_word(toks, 0, p));
        }
    }
    if (state == 0) throw parse_error(lineno + 1, 1, "missing 'gens:' line");
    if (state == 1) throw parse_error(lineno + 1, 1, "missing 'rels:' line");
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot read presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

} // namespace alexdef
