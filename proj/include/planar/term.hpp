#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planar {

enum class Kind : std::uint8_t { var, lam, app };

// Child selector used to address subterms from the root.
enum class Dir : std::uint8_t { fun, arg, body };

using Path = std::vector<Dir>;

std::string_view to_string(Dir d);
// "fun/arg/body" form; the empty path prints as "root".
std::string format_path(const Path& path);

// Immutable untyped lambda term. Copies share structure.
class Term {
public:
    static Term var(std::string name);
    static Term lam(std::string binder, Term body);
    static Term app(Term fun, Term arg);

    Kind kind() const;
    bool is_var() const { return kind() == Kind::var; }
    bool is_lam() const { return kind() == Kind::lam; }
    bool is_app() const { return kind() == Kind::app; }

    // Variable name for Var, binder name for Lam.
    const std::string& name() const;
    const Term& body() const;
    const Term& fun() const;
    const Term& arg() const;

    // Number of AST nodes, cached at construction.
    std::size_t size() const;

    // Subterm reached by following `path`; throws std::out_of_range if the
    // path leaves the tree.
    const Term& at(const Path& path) const;

    // Pointer identity, not alpha-equivalence.
    bool same_node(const Term& other) const { return node_ == other.node_; }

private:
    struct Node;
    Term() = default;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    Kind kind;
    std::string name;
    Term left;
    Term right;
    std::size_t size;
};

inline Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline const Term& Term::body() const { return node_->left; }
inline const Term& Term::fun() const { return node_->left; }
inline const Term& Term::arg() const { return node_->right; }
inline std::size_t Term::size() const { return node_->size; }

// f a1 ... an, left-associated.
Term apps(Term head, std::initializer_list<Term> args);
Term apps(Term head, const std::vector<Term>& args);
// \x1. ... \xn. body
Term lams(const std::vector<std::string>& binders, Term body);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Resolves "@name" tokens to closed terms. Returning nullopt is a parse error.
using ConstantResolver = std::function<std::optional<Term>(std::string_view)>;

Term parse_term(std::string_view text, const ConstantResolver& constants = {});
std::string print_term(const Term& t);

bool is_identifier(std::string_view s);

bool alpha_eq(const Term& t, const Term& u);

inline std::size_t term_size(const Term& t) { return t.size(); }

struct Occurrence {
    std::string name;
    Path path;

    bool operator==(const Occurrence&) const = default;
};

// Free variable occurrences in left-to-right order.
std::vector<Occurrence> free_occurrences(const Term& t);

// Distinct free variable names, first-occurrence order.
std::vector<std::string> free_variables(const Term& t);

}  // namespace planar
