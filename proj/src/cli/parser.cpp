#include "knotshake/cli.hpp"
#include "knotshake/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace knotshake {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : DomainError("syntax error at byte " + std::to_string(offset) + ": " + what), offset_(offset)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    KnotExprPtr parse()
    {
        KnotExprPtr e = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(pos_, std::string("expected '") + c + "'");
    }

    std::string word()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    long integer()
    {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits)
            throw ParseError(start, "expected an integer");
        try {
            return std::stol(std::string(s_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError(start, "integer out of range");
        }
    }

    KnotExprPtr expr()
    {
        skip();
        const std::size_t start = pos_;
        const std::string w = word();
        if (w == "U")
            return make_unknot();
        if (w == "T") {
            expect('(');
            const long p = integer();
            expect(',');
            const long q = integer();
            expect(')');
            return make_torus(p, q);
        }
        if (w == "twist") {
            expect('(');
            const long m = integer();
            expect(')');
            return make_twist(m);
        }
        if (w == "mirror") {
            expect('(');
            KnotExprPtr inner = expr();
            expect(')');
            return make_mirror(std::move(inner));
        }
        if (w == "sum") {
            expect('(');
            std::vector<KnotExprPtr> terms{expr()};
            while (accept(','))
                terms.push_back(expr());
            expect(')');
            return make_sum(std::move(terms));
        }
        if (w == "cable") {
            expect('(');
            const long m = integer();
            expect(',');
            const long r = integer();
            expect(';');
            KnotExprPtr companion = expr();
            expect(')');
            return make_cable(m, r, std::move(companion));
        }
        if (w == "seifert") {
            expect('(');
            return seifert();
        }
        if (w.empty())
            throw ParseError(start, "expected a knot expression");
        throw ParseError(start, "unknown constructor '" + w + "'");
    }

    KnotExprPtr seifert()
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '[') {
            const std::size_t start = pos_;
            int depth = 0;
            for (; pos_ < s_.size(); ++pos_) {
                if (s_[pos_] == '[')
                    ++depth;
                else if (s_[pos_] == ']' && --depth == 0) {
                    ++pos_;
                    break;
                }
            }
            if (depth != 0)
                throw ParseError(start, "unterminated matrix literal");
            json j;
            try {
                j = json::parse(s_.substr(start, pos_ - start));
            } catch (const json::parse_error& e) {
                throw ParseError(start + (e.byte > 0 ? e.byte - 1 : 0), "malformed matrix literal");
            }
            expect(')');
            return make_literal(SeifertMatrix::infer(int_matrix_from_json(j)));
        }
        const std::size_t start = pos_;
        const std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos)
            throw ParseError(s_.size(), "expected ')'");
        std::string path(s_.substr(start, close - start));
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
            path.pop_back();
        if (path.empty())
            throw ParseError(start, "expected a matrix literal or file path");
        pos_ = close + 1;
        std::ifstream in(path);
        if (!in)
            throw DomainError("cannot open Seifert matrix file: " + path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error&) {
            throw DomainError("malformed Seifert matrix file: " + path);
        }
        if (!j.is_object() || !j.contains("matrix"))
            throw DomainError("Seifert matrix file needs a \"matrix\" field: " + path);
        return make_literal(SeifertMatrix::infer(int_matrix_from_json(j["matrix"])));
    }
};

} // namespace

KnotExprPtr parse_knot_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace knotshake
