#include "planar/term.hpp"

#include <unordered_map>
#include <unordered_set>

namespace planar {

std::string_view to_string(Dir d)
{
    switch (d) {
    case Dir::fun: return "fun";
    case Dir::arg: return "arg";
    case Dir::body: return "body";
    }
    return "?";
}

std::string format_path(const Path& path)
{
    if (path.empty()) {
        return "root";
    }
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) {
            out += '/';
        }
        out += to_string(path[i]);
    }
    return out;
}

Term Term::var(std::string name)
{
    return Term(std::make_shared<const Node>(Node{Kind::var, std::move(name), Term{}, Term{}, 1}));
}

Term Term::lam(std::string binder, Term body)
{
    const std::size_t size = body.size() + 1;
    return Term(std::make_shared<const Node>(Node{Kind::lam, std::move(binder), std::move(body), Term{}, size}));
}

Term Term::app(Term fun, Term arg)
{
    const std::size_t size = fun.size() + arg.size() + 1;
    return Term(std::make_shared<const Node>(Node{Kind::app, {}, std::move(fun), std::move(arg), size}));
}

const Term& Term::at(const Path& path) const
{
    const Term* cur = this;
    for (Dir d : path) {
        switch (d) {
        case Dir::fun:
        case Dir::arg:
            if (!cur->is_app()) {
                throw std::out_of_range("path selects fun/arg of a non-application");
            }
            cur = d == Dir::fun ? &cur->fun() : &cur->arg();
            break;
        case Dir::body:
            if (!cur->is_lam()) {
                throw std::out_of_range("path selects body of a non-abstraction");
            }
            cur = &cur->body();
            break;
        }
    }
    return *cur;
}

Term apps(Term head, std::initializer_list<Term> args)
{
    for (const Term& a : args) {
        head = Term::app(std::move(head), a);
    }
    return head;
}

Term apps(Term head, const std::vector<Term>& args)
{
    for (const Term& a : args) {
        head = Term::app(std::move(head), a);
    }
    return head;
}

Term lams(const std::vector<std::string>& binders, Term body)
{
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        body = Term::lam(*it, std::move(body));
    }
    return body;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_into(const Term& t, std::string& out);

void print_operand(const Term& t, std::string& out)
{
    if (t.is_var()) {
        out += t.name();
    } else {
        out += '(';
        print_into(t, out);
        out += ')';
    }
}

void print_into(const Term& t, std::string& out)
{
    switch (t.kind()) {
    case Kind::var:
        out += t.name();
        break;
    case Kind::lam:
        out += '\\';
        out += t.name();
        out += ". ";
        print_into(t.body(), out);
        break;
    case Kind::app:
        if (t.fun().is_lam()) {
            print_operand(t.fun(), out);
        } else {
            print_into(t.fun(), out);
        }
        out += ' ';
        print_operand(t.arg(), out);
        break;
    }
}

}  // namespace

std::string print_term(const Term& t)
{
    std::string out;
    out.reserve(t.size() * 3);
    print_into(t, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

bool ident_start(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool ident_continue(char c)
{
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

enum class Tok { lambda, dot, lparen, rparen, ident, constant, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next()
    {
        skip_trivia();
        const std::size_t line = line_;
        const std::size_t col = col_;
        if (pos_ >= src_.size()) {
            return {Tok::end, {}, line, col};
        }
        const char c = src_[pos_];
        if (c == '\\') {
            advance(1);
            return {Tok::lambda, "\\", line, col};
        }
        if (src_.substr(pos_, 2) == "\xCE\xBB") {
            advance(2);
            return {Tok::lambda, "\\", line, col};
        }
        if (c == '.') {
            advance(1);
            return {Tok::dot, ".", line, col};
        }
        if (c == '(') {
            advance(1);
            return {Tok::lparen, "(", line, col};
        }
        if (c == ')') {
            advance(1);
            return {Tok::rparen, ")", line, col};
        }
        if (c == '@') {
            advance(1);
            if (pos_ >= src_.size() || !ident_start(src_[pos_])) {
                throw ParseError("expected constant name after '@'", line, col);
            }
            return {Tok::constant, read_ident(), line, col};
        }
        if (ident_start(c)) {
            return {Tok::ident, read_ident(), line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance(std::size_t n)
    {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_trivia()
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance(1);
            } else if (src_.substr(pos_, 2) == "--") {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance(1);
                }
            } else {
                break;
            }
        }
    }

    std::string read_ident()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && ident_continue(src_[pos_])) {
            advance(1);
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, const ConstantResolver& constants)
        : lexer_(src), constants_(constants), tok_(lexer_.next())
    {
    }

    Term parse_all()
    {
        if (tok_.kind == Tok::end) {
            throw ParseError("empty input", tok_.line, tok_.column);
        }
        Term t = parse_term();
        if (tok_.kind == Tok::rparen) {
            throw ParseError("unbalanced ')'", tok_.line, tok_.column);
        }
        if (tok_.kind != Tok::end) {
            throw ParseError("unexpected '" + tok_.text + "'", tok_.line, tok_.column);
        }
        return t;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    Term parse_term()
    {
        if (tok_.kind == Tok::lambda) {
            return parse_lambda();
        }
        return parse_app();
    }

    Term parse_lambda()
    {
        shift();
        if (tok_.kind != Tok::ident) {
            throw ParseError("expected binder after lambda", tok_.line, tok_.column);
        }
        std::string binder = tok_.text;
        shift();
        if (tok_.kind != Tok::dot) {
            throw ParseError("expected '.' after binder", tok_.line, tok_.column);
        }
        shift();
        return Term::lam(std::move(binder), parse_term());
    }

    bool at_atom() const
    {
        return tok_.kind == Tok::ident || tok_.kind == Tok::constant || tok_.kind == Tok::lparen;
    }

    Term parse_app()
    {
        if (!at_atom()) {
            throw ParseError(tok_.kind == Tok::end ? "unexpected end of input" : "expected a term",
                             tok_.line, tok_.column);
        }
        Term head = parse_atom();
        while (true) {
            if (at_atom()) {
                head = Term::app(std::move(head), parse_atom());
            } else if (tok_.kind == Tok::lambda) {
                // A trailing abstraction extends to the end of the enclosing term.
                head = Term::app(std::move(head), parse_lambda());
                return head;
            } else {
                return head;
            }
        }
    }

    Term parse_atom()
    {
        switch (tok_.kind) {
        case Tok::ident: {
            Term v = Term::var(tok_.text);
            shift();
            return v;
        }
        case Tok::constant: {
            std::optional<Term> value;
            if (constants_) {
                value = constants_(tok_.text);
            }
            if (!value) {
                throw ParseError("unknown constant '@" + tok_.text + "'", tok_.line, tok_.column);
            }
            shift();
            return *value;
        }
        case Tok::lparen: {
            const std::size_t line = tok_.line;
            const std::size_t col = tok_.column;
            shift();
            if (tok_.kind == Tok::end) {
                throw ParseError("unbalanced '('", line, col);
            }
            Term inner = parse_term();
            if (tok_.kind != Tok::rparen) {
                throw ParseError("unbalanced '('", line, col);
            }
            shift();
            return inner;
        }
        default:
            throw ParseError("expected a term", tok_.line, tok_.column);
        }
    }

    Lexer lexer_;
    const ConstantResolver& constants_;
    Token tok_;
};

}  // namespace

Term parse_term(std::string_view text, const ConstantResolver& constants)
{
    return Parser(text, constants).parse_all();
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !ident_start(s.front())) {
        return false;
    }
    for (char c : s) {
        if (!ident_continue(c)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Structural queries

namespace {

using Scope = std::unordered_map<std::string, std::vector<std::size_t>>;

bool alpha_eq_rec(const Term& t, const Term& u, Scope& st, Scope& su, std::size_t depth)
{
    if (t.kind() != u.kind() || t.size() != u.size()) {
        return false;
    }
    switch (t.kind()) {
    case Kind::var: {
        auto it = st.find(t.name());
        auto iu = su.find(u.name());
        const bool bt = it != st.end() && !it->second.empty();
        const bool bu = iu != su.end() && !iu->second.empty();
        if (bt != bu) {
            return false;
        }
        if (!bt) {
            return t.name() == u.name();
        }
        return it->second.back() == iu->second.back();
    }
    case Kind::lam: {
        st[t.name()].push_back(depth);
        su[u.name()].push_back(depth);
        const bool eq = alpha_eq_rec(t.body(), u.body(), st, su, depth + 1);
        st[t.name()].pop_back();
        su[u.name()].pop_back();
        return eq;
    }
    case Kind::app:
        return alpha_eq_rec(t.fun(), u.fun(), st, su, depth) && alpha_eq_rec(t.arg(), u.arg(), st, su, depth);
    }
    return false;
}

void free_occ_rec(const Term& t, std::unordered_map<std::string, int>& bound, Path& path,
                  std::vector<Occurrence>& out)
{
    switch (t.kind()) {
    case Kind::var:
        if (bound[t.name()] == 0) {
            out.push_back({t.name(), path});
        }
        break;
    case Kind::lam:
        ++bound[t.name()];
        path.push_back(Dir::body);
        free_occ_rec(t.body(), bound, path, out);
        path.pop_back();
        --bound[t.name()];
        break;
    case Kind::app:
        path.push_back(Dir::fun);
        free_occ_rec(t.fun(), bound, path, out);
        path.back() = Dir::arg;
        free_occ_rec(t.arg(), bound, path, out);
        path.pop_back();
        break;
    }
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u)
{
    if (t.same_node(u)) {
        return true;
    }
    Scope st;
    Scope su;
    return alpha_eq_rec(t, u, st, su, 0);
}

std::vector<Occurrence> free_occurrences(const Term& t)
{
    std::unordered_map<std::string, int> bound;
    Path path;
    std::vector<Occurrence> out;
    free_occ_rec(t, bound, path, out);
    return out;
}

std::vector<std::string> free_variables(const Term& t)
{
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    for (auto& occ : free_occurrences(t)) {
        if (seen.insert(occ.name).second) {
            names.push_back(std::move(occ.name));
        }
    }
    return names;
}

}  // namespace planar
