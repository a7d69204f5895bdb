#include "talex/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace talex {

namespace {

int var_index(char c) {
    for (int v = 0; v < kNumVars; ++v)
        if (kVarNames[static_cast<std::size_t>(v)] == c) return v;
    return -1;
}

class PolyParser {
  public:
    PolyParser(std::string_view text, VarSet vars, bool infer) : text_(text), vars_(vars), infer_(infer) {}

    LaurentPoly parse() {
        skip_space();
        LaurentPoly p = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, line_, col_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    mpz_class parse_integer_digits() {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(advance());
        return mpz_class(digits, 10);
    }

    long parse_signed_exponent() {
        skip_space();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = advance() == '-';
        mpz_class mag = parse_integer_digits();
        if (!mag.fits_slong_p() || mag > 1'000'000) fail("exponent out of range");
        long e = mag.get_si();
        return neg ? -e : e;
    }

    LaurentPoly parse_expr() {
        bool negate = accept('-');
        LaurentPoly p = parse_term();
        if (negate) p = -p;
        while (true) {
            skip_space();
            if (peek() == '+') {
                advance();
                p += parse_term();
            } else if (peek() == '-') {
                advance();
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    LaurentPoly parse_term() {
        LaurentPoly p = parse_factor();
        while (accept('*')) p *= parse_factor();
        return p;
    }

    LaurentPoly parse_factor() {
        int at_line = line_, at_col = col_;
        LaurentPoly base = parse_primary();
        skip_space();
        if (peek() != '^') return base;
        advance();
        long e = parse_signed_exponent();
        if (base.term_count() == 1 && base.terms().front().coeff == 1) {
            // A plain monomial: exponents scale directly, negative included.
            Monomial m = base.terms().front().mono;
            for (auto& x : m.exp) x = static_cast<std::int32_t>(x * e);
            return LaurentPoly::term(base.vars(), 1, m);
        }
        LaurentPoly p = pow(base, static_cast<unsigned>(e < 0 ? -e : e));
        if (e >= 0) return p;
        if (!is_unit(p)) throw parse_error("negative power of a non-unit", at_line, at_col);
        const auto& t = p.terms().front();
        return LaurentPoly::term(p.vars(), t.coeff, t.mono.inverse());
    }

    LaurentPoly parse_primary() {
        skip_space();
        char c = peek();
        if (c == '(') {
            advance();
            LaurentPoly p = parse_expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(vars_, parse_integer_digits());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int v = var_index(c);
            if (v < 0) fail(std::string("unknown variable '") + c + "'");
            if (!vars_.contains(v)) {
                if (!infer_) fail(std::string("variable '") + c + "' is not in the declared variable set");
                fail(std::string("variable '") + c + "' unexpected here");
            }
            advance();
            return LaurentPoly::variable(vars_, v);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    VarSet vars_;
    bool infer_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

VarSet infer_vars(std::string_view text) {
    VarSet vars;
    for (char c : text) {
        int v = var_index(c);
        if (v >= 0) vars = vars.united(VarSet::of({v}));
    }
    return vars;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text, infer_vars(text), true).parse(); }

LaurentPoly parse_poly(std::string_view text, VarSet vars) { return PolyParser(text, vars, false).parse(); }

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) tokens.push_back(std::exchange(current, {}));
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(current);
    return tokens;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generator_names, int line) {
    std::vector<Letter> letters;
    int col = 1;
    for (const std::string& token : split_tokens(text)) {
        std::string name = token;
        int exponent = 1;
        if (auto caret = token.find('^'); caret != std::string::npos) {
            name = token.substr(0, caret);
            std::string e = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                exponent = std::stoi(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                throw parse_error("malformed exponent '" + e + "' in word letter", line, col);
            }
        }
        int gen = -1;
        for (std::size_t i = 0; i < generator_names.size(); ++i)
            if (generator_names[i] == name) gen = static_cast<int>(i);
        if (gen < 0) throw parse_error("undeclared generator '" + name + "'", line, col);
        for (int r = 0; r < (exponent < 0 ? -exponent : exponent); ++r)
            letters.push_back(Letter{gen, exponent < 0 ? -1 : 1});
        ++col;
    }
    return Word::from_letters(letters);
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> logical_lines(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string trimmed;
        std::size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = raw.find_last_not_of(" \t\r");
        trimmed = raw.substr(begin, end - begin + 1);
        lines.push_back(Line{number, trimmed});
    }
    return lines;
}

std::pair<std::string, std::string> split_directive(const Line& line) {
    auto space = line.text.find_first_of(" \t");
    if (space == std::string::npos) return {line.text, ""};
    auto rest = line.text.find_first_not_of(" \t", space);
    return {line.text.substr(0, space), rest == std::string::npos ? "" : line.text.substr(rest)};
}

}  // namespace

Presentation parse_presentation(std::string_view text, std::string_view source_label) {
    std::string name{source_label};
    std::vector<std::string> gens;
    std::vector<std::string> relator_texts;
    std::vector<int> relator_lines;
    std::vector<int> abel;
    bool saw_abel = false;

    for (const Line& line : logical_lines(text)) {
        auto [directive, rest] = split_directive(line);
        if (directive == "group") {
            name = rest;
        } else if (directive == "gens") {
            gens = split_tokens(rest);
            if (gens.empty()) throw parse_error("gens directive lists no generators", line.number, 1);
        } else if (directive == "rel") {
            relator_texts.push_back(rest);
            relator_lines.push_back(line.number);
        } else if (directive == "abel") {
            if (gens.empty()) throw parse_error("abel directive before gens", line.number, 1);
            abel.assign(gens.size(), 0);
            std::vector<bool> assigned(gens.size(), false);
            for (const std::string& item : split_tokens(rest)) {
                auto eq = item.find('=');
                if (eq == std::string::npos) throw parse_error("expected <name>=<int> in abel directive", line.number, 1);
                std::string gname = item.substr(0, eq);
                int gen = -1;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (gens[i] == gname) gen = static_cast<int>(i);
                if (gen < 0) throw parse_error("abel names unknown generator '" + gname + "'", line.number, 1);
                try {
                    abel[static_cast<std::size_t>(gen)] = std::stoi(item.substr(eq + 1));
                } catch (const std::exception&) {
                    throw parse_error("malformed integer in abel directive", line.number, 1);
                }
                assigned[static_cast<std::size_t>(gen)] = true;
            }
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (!assigned[i])
                    throw parse_error("abel directive does not assign generator '" + gens[i] + "'", line.number, 1);
            saw_abel = true;
        } else {
            throw parse_error("unknown directive '" + directive + "'", line.number, 1);
        }
    }
    if (gens.empty()) throw parse_error("presentation has no gens directive", 1, 1);
    if (!saw_abel) throw parse_error("presentation has no abel directive", 1, 1);

    std::vector<Word> relators;
    for (std::size_t i = 0; i < relator_texts.size(); ++i)
        relators.push_back(parse_word(relator_texts[i], gens, relator_lines[i]));
    return Presentation(name, std::move(gens), std::move(relators), std::move(abel));
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Splits "[[a, b], [c, d]]" into entry strings, row major.
std::vector<std::vector<std::string>> split_matrix_entries(const std::string& text, int line_number) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string entry;
    int depth = 0;
    bool in_row = false;
    for (char c : text) {
        if (c == '[') {
            ++depth;
            if (depth == 2) {
                in_row = true;
                row.clear();
                entry.clear();
            } else if (depth > 2) {
                throw parse_error("unexpected '[' inside a matrix entry", line_number, 1);
            }
        } else if (c == ']') {
            if (depth == 2 && in_row) {
                row.push_back(entry);
                rows.push_back(row);
                in_row = false;
            }
            --depth;
            if (depth < 0) throw parse_error("unbalanced ']' in matrix", line_number, 1);
        } else if (c == ',' && depth == 2) {
            row.push_back(entry);
            entry.clear();
        } else if (depth == 2) {
            entry.push_back(c);
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
            throw parse_error("unexpected character between matrix rows", line_number, 1);
        }
    }
    if (depth != 0) throw parse_error("unbalanced brackets in matrix", line_number, 1);
    return rows;
}

}  // namespace

MatrixRep parse_rep(std::string_view text, const Presentation& p, std::string_view source_label) {
    std::string name{source_label};
    int dim = -1;
    std::optional<VarSet> vars;
    std::vector<std::optional<PolyMatrix>> mats(static_cast<std::size_t>(p.generator_count()));

    std::vector<Line> lines = logical_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto [directive, rest] = split_directive(lines[li]);
        if (directive == "rep") {
            name = rest;
        } else if (directive == "dim") {
            try {
                dim = std::stoi(rest);
            } catch (const std::exception&) {
                throw parse_error("malformed dimension", lines[li].number, 1);
            }
        } else if (directive == "vars") {
            VarSet vs;
            for (const std::string& token : split_tokens(rest)) {
                if (token.size() != 1 || var_index(token[0]) < 0)
                    throw parse_error("unknown variable '" + token + "'", lines[li].number, 1);
                vs = vs.united(VarSet::of({var_index(token[0])}));
            }
            vars = vs;
        } else if (directive == "mat") {
            if (dim <= 0 || !vars) throw parse_error("mat directive before dim/vars", lines[li].number, 1);
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw parse_error("expected 'mat <gen> = [[...]]'", lines[li].number, 1);
            std::string gname = rest.substr(0, eq);
            gname.erase(gname.find_last_not_of(" \t") + 1);
            auto gen = p.generator_index(gname);
            if (!gen) throw parse_error("mat names unknown generator '" + gname + "'", lines[li].number, 1);
            std::string body = rest.substr(eq + 1);
            // A matrix may continue on following lines until brackets balance.
            auto balance = [](const std::string& s) {
                int d = 0;
                for (char c : s) d += c == '[' ? 1 : c == ']' ? -1 : 0;
                return d;
            };
            int mat_line = lines[li].number;
            while (balance(body) != 0 && li + 1 < lines.size()) {
                ++li;
                body += ' ';
                body += lines[li].text;
            }
            auto entries = split_matrix_entries(body, mat_line);
            if (static_cast<int>(entries.size()) != dim)
                throw parse_error("matrix for '" + gname + "' has wrong row count", mat_line, 1);
            PolyMatrix m(dim, dim, *vars);
            for (int r = 0; r < dim; ++r) {
                if (static_cast<int>(entries[static_cast<std::size_t>(r)].size()) != dim)
                    throw parse_error("matrix for '" + gname + "' has wrong column count", mat_line, 1);
                for (int c = 0; c < dim; ++c)
                    m.at(r, c) = parse_poly(entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], *vars);
            }
            mats[static_cast<std::size_t>(*gen)] = std::move(m);
        } else {
            throw parse_error("unknown directive '" + directive + "'", lines[li].number, 1);
        }
    }
    if (dim <= 0) throw parse_error("representation file has no dim directive", 1, 1);
    if (!vars) throw parse_error("representation file has no vars directive", 1, 1);
    std::vector<PolyMatrix> final_mats;
    for (int g = 0; g < p.generator_count(); ++g) {
        if (!mats[static_cast<std::size_t>(g)])
            throw parse_error("no matrix given for generator '" + p.generator_names()[static_cast<std::size_t>(g)] + "'",
                              1, 1);
        final_mats.push_back(std::move(*mats[static_cast<std::size_t>(g)]));
    }
    return MatrixRep(name, *vars, dim, std::move(final_mats));
}

Presentation load_presentation(const std::filesystem::path& path) {
    return parse_presentation(read_file(path), path.filename().string());
}

MatrixRep load_rep(const std::filesystem::path& path, const Presentation& p) {
    return parse_rep(read_file(path), p, path.filename().string());
}

std::string render(const LaurentPoly& p) { return p.str(); }

std::string render(const PolyMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (int r = 0; r < m.rows(); ++r) {
        if (r > 0) out << ", ";
        out << '[';
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ", ";
            out << m.at(r, c).str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

std::string render_rows(const PolyMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.rows(); ++r) {
        out << '[';
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ", ";
            out << m.at(r, c).str();
        }
        out << "]\n";
    }
    return out.str();
}

std::string render_word(const Word& w, std::span<const std::string> generator_names) {
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) out << ' ';
        first = false;
        out << generator_names[static_cast<std::size_t>(l.gen)];
        if (l.sign < 0) out << "^-1";
    }
    return out.str();
}

}  // namespace talex
