#pragma once

// Linearity and planarity of untyped terms.
//
// A term is linear when `FV(t) |- t` is derivable from the var/app/lam rules
// together with exchange. Without weakening or contraction every derivation
// uses each hypothesis exactly once, and exchange lets the context be put in
// any order, so derivability with exchange is the same thing as: every
// binder's variable occurs exactly once in its body and every free variable
// occurs exactly once. check_linear decides that counting condition.
//
// A linear term is planar when some ordered context derives it without
// exchange. The rules leave no freedom: `app` must give the left premise the
// prefix of the context holding the left subterm's free variables, and `lam`
// adds its binder at the right end. Hence the context, when it exists, is the
// sequence of free occurrences in left-to-right order, and each abstraction's
// variable must be the rightmost free occurrence in its body.

#include "planar/term.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace planar {

// Ordered context of distinct names.
class Context {
public:
    Context() = default;
    // Throws std::invalid_argument on duplicate names.
    explicit Context(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    bool operator==(const Context&) const = default;

private:
    std::vector<std::string> names_;
};

std::string format_context(const Context& ctx);

enum class Linearity { linear, not_linear };

struct LinearityWitness {
    std::string name;
    std::size_t occurrences;
    // Bound witnesses carry the path of their binder; free ones an empty path.
    bool bound;
    Path binder;
};

struct LinearityReport {
    Linearity verdict = Linearity::linear;
    std::vector<LinearityWitness> witnesses;

    bool linear() const { return verdict == Linearity::linear; }
};

std::string format_witness(const LinearityWitness& w);

LinearityReport check_linear(const Term& t);
inline bool is_linear(const Term& t) { return check_linear(t).linear(); }

struct PlanarFailure {
    // Leftmost-outermost abstraction whose variable is not the rightmost free
    // occurrence of its body; root for non-linear input.
    Path at;
    std::string reason;
    std::optional<LinearityReport> linearity;
};

class PlanarVerdict {
public:
    static PlanarVerdict success(Context ctx) { return PlanarVerdict(std::move(ctx)); }
    static PlanarVerdict failure(PlanarFailure f) { return PlanarVerdict(std::move(f)); }

    bool ok() const { return context_.has_value(); }
    explicit operator bool() const { return ok(); }
    const Context& context() const { return context_.value(); }
    const PlanarFailure& failure() const { return failure_.value(); }

private:
    explicit PlanarVerdict(Context ctx) : context_(std::move(ctx)) {}
    explicit PlanarVerdict(PlanarFailure f) : failure_(std::move(f)) {}

    std::optional<Context> context_;
    std::optional<PlanarFailure> failure_;
};

PlanarVerdict infer_planar_context(const Term& t);
bool check_planar(const Term& t);

// Largest size accepted by the enumerator.
inline constexpr std::size_t max_enumeration_size = 16;

// Visits every closed planar term of size <= max_size exactly once up to
// alpha-equivalence, in increasing size. Binders are named v1, v2, ... by
// depth. Throws std::invalid_argument above max_enumeration_size.
void for_each_planar(std::size_t max_size, const std::function<void(const Term&)>& visit);
std::vector<Term> enumerate_planar(std::size_t max_size);

}  // namespace planar
