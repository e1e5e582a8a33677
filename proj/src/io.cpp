#include "roughmat/io.hpp"

#include <cctype>
#include <istream>
#include <utility>
#include <vector>

namespace roughmat {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Reads lines until a data line (non-blank, not a '#' comment) or EOF.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<Token>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line.front() == '#') continue;
            tokens = tokenize(line);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::size_t parse_count(const Token& tok, std::size_t line, const char* what) {
    std::size_t value = 0;
    if (tok.text.empty()) throw ParseError(line, tok.column, std::string("expected ") + what);
    for (char ch : tok.text) {
        if (ch < '0' || ch > '9') {
            throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" + tok.text + "'");
        }
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        if (value > 1'000'000) throw ParseError(line, tok.column, std::string(what) + " is too large");
    }
    if (value == 0) throw ParseError(line, tok.column, std::string(what) + " must be positive");
    return value;
}

}  // namespace

BoolMatrix parse_matrix(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> tokens;
    if (!reader.next(tokens)) {
        throw ParseError(reader.line() + 1, 1, "expected header line \"rows cols\"");
    }
    if (tokens.size() != 2) {
        const std::size_t col = tokens.size() > 2 ? tokens[2].column : tokens[0].column;
        throw ParseError(reader.line(), col, "header line must be exactly \"rows cols\"");
    }
    const std::size_t rows = parse_count(tokens[0], reader.line(), "row count");
    const std::size_t cols = parse_count(tokens[1], reader.line(), "column count");

    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!reader.next(tokens)) {
            throw ParseError(reader.line() + 1, 1,
                             "expected matrix row " + std::to_string(i + 1) + " of " + std::to_string(rows));
        }
        if (tokens.size() != cols) {
            const std::size_t col = tokens.size() > cols ? tokens[cols].column : 1;
            throw ParseError(reader.line(), col,
                             "expected " + std::to_string(cols) + " entries, got " + std::to_string(tokens.size()));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (tokens[j].text == "1") {
                m.set(i, j);
            } else if (tokens[j].text != "0") {
                throw ParseError(reader.line(), tokens[j].column, "expected 0 or 1, got '" + tokens[j].text + "'");
            }
        }
    }
    if (reader.next(tokens)) {
        throw ParseError(reader.line(), tokens[0].column, "unexpected content after the last matrix row");
    }
    return m;
}

std::string print_matrix(const BoolMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += m.test(i, j) ? '1' : '0';
            out += (j + 1 == m.cols()) ? '\n' : ' ';
        }
    }
    return out;
}

SetFamily parse_covering(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> tokens;
    if (!reader.next(tokens)) {
        throw ParseError(reader.line() + 1, 1, "expected universe line of element names");
    }
    std::vector<std::string> names;
    names.reserve(tokens.size());
    for (const Token& tok : tokens) {
        for (const std::string& seen : names) {
            if (seen == tok.text) {
                throw ParseError(reader.line(), tok.column, "duplicate element name '" + tok.text + "'");
            }
        }
        names.push_back(tok.text);
    }
    Universe universe(std::move(names));

    std::vector<SetVec> blocks;
    while (reader.next(tokens)) {
        SetVec block(universe.size());
        for (const Token& tok : tokens) {
            const auto idx = universe.find(tok.text);
            if (!idx) {
                throw ParseError(reader.line(), tok.column,
                                 "element '" + tok.text + "' does not appear in the universe line");
            }
            block.set(*idx);
        }
        blocks.push_back(std::move(block));
    }
    if (blocks.empty()) {
        throw ParseError(reader.line() + 1, 1, "expected at least one block line");
    }
    return SetFamily(std::move(universe), std::move(blocks));
}

std::string print_covering(const SetFamily& family) {
    const Universe& u = family.universe();
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out += u.name(i);
        out += (i + 1 == u.size()) ? '\n' : ' ';
    }
    for (const SetVec& block : family.blocks()) {
        bool first = true;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!block.test(i)) continue;
            if (!first) out += ' ';
            out += u.name(i);
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string print_covering(const Covering& covering) {
    return print_covering(covering.family());
}

}  // namespace roughmat
