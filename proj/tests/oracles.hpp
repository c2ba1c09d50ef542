#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library beyond the Term data type.

#include "planar/circuit.hpp"
#include "planar/encodings.hpp"
#include "planar/reduction.hpp"
#include "planar/term.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using planar::Term;

inline std::string level_name(std::size_t level)
{
    return "v" + std::to_string(level);
}

// Every term of exactly `size` nodes whose free variables are among the
// binders v1..v_depth (closed when depth = 0). Binders are named by depth.
inline std::vector<Term> raw_terms(std::size_t size, std::size_t depth)
{
    std::vector<Term> out;
    if (size == 0) {
        return out;
    }
    if (size == 1) {
        for (std::size_t l = 1; l <= depth; ++l) {
            out.push_back(Term::var(level_name(l)));
        }
        return out;
    }
    for (Term& b : raw_terms(size - 1, depth + 1)) {
        out.push_back(Term::lam(level_name(depth + 1), std::move(b)));
    }
    for (std::size_t ls = 1; ls + 2 <= size; ++ls) {
        auto funs = raw_terms(ls, depth);
        auto args = raw_terms(size - 1 - ls, depth);
        for (const auto& f : funs) {
            for (const auto& a : args) {
                out.push_back(Term::app(f, a));
            }
        }
    }
    return out;
}

// Derivability of ctx |- t from var/app/lam without exchange, trying every
// split of the context.
inline bool derivable_ordered(const std::vector<std::string>& ctx, const Term& t)
{
    switch (t.kind()) {
    case planar::Kind::var:
        return ctx.size() == 1 && ctx[0] == t.name();
    case planar::Kind::lam: {
        auto inner = ctx;
        inner.push_back(t.name());
        return derivable_ordered(inner, t.body());
    }
    case planar::Kind::app:
        for (std::size_t k = 0; k <= ctx.size(); ++k) {
            std::vector<std::string> left(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<std::string> right(ctx.begin() + static_cast<std::ptrdiff_t>(k), ctx.end());
            if (derivable_ordered(left, t.fun()) && derivable_ordered(right, t.arg())) {
                return true;
            }
        }
        return false;
    }
    return false;
}

// Same with exchange: the context is a multiset, app splits it into any two
// sub-multisets.
inline bool derivable_with_exchange(const std::vector<std::string>& ctx, const Term& t)
{
    switch (t.kind()) {
    case planar::Kind::var:
        return ctx.size() == 1 && ctx[0] == t.name();
    case planar::Kind::lam: {
        // A shadowed hypothesis can never be used again.
        if (std::find(ctx.begin(), ctx.end(), t.name()) != ctx.end()) {
            return false;
        }
        auto inner = ctx;
        inner.push_back(t.name());
        return derivable_with_exchange(inner, t.body());
    }
    case planar::Kind::app: {
        const std::size_t m = ctx.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            std::vector<std::string> left;
            std::vector<std::string> right;
            for (std::size_t k = 0; k < m; ++k) {
                ((mask >> k) & 1U ? left : right).push_back(ctx[k]);
            }
            if (derivable_with_exchange(left, t.fun()) && derivable_with_exchange(right, t.arg())) {
                return true;
            }
        }
        return false;
    }
    }
    return false;
}

// All linear terms of exactly `size` nodes using each name of `ctx` exactly
// once (in any order). Binders named by depth.
inline std::vector<Term> linear_terms(std::size_t size, const std::vector<std::string>& ctx, std::size_t depth)
{
    std::vector<Term> out;
    const std::size_t m = ctx.size();
    if (size == 1) {
        if (m == 1) {
            out.push_back(Term::var(ctx[0]));
        }
        return out;
    }
    if (size == 0 || size < m) {
        return out;
    }
    {
        auto inner = ctx;
        inner.push_back(level_name(depth + 1));
        for (Term& b : linear_terms(size - 1, inner, depth + 1)) {
            out.push_back(Term::lam(level_name(depth + 1), std::move(b)));
        }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::string> left;
        std::vector<std::string> right;
        for (std::size_t k = 0; k < m; ++k) {
            ((mask >> k) & 1U ? left : right).push_back(ctx[k]);
        }
        for (std::size_t ls = 1; ls + 2 <= size; ++ls) {
            auto funs = linear_terms(ls, left, depth);
            if (funs.empty()) {
                continue;
            }
            auto args = linear_terms(size - 1 - ls, right, depth);
            for (const auto& f : funs) {
                for (const auto& a : args) {
                    out.push_back(Term::app(f, a));
                }
            }
        }
    }
    return out;
}

// Iterates the named single-step reducer.
struct NaiveRun {
    std::vector<planar::TraceStep> steps;
    Term final;
};

inline NaiveRun naive_normalize(const Term& t, std::size_t max_steps = 100000)
{
    NaiveRun run{{}, t};
    while (run.steps.size() < max_steps) {
        auto next = planar::reduce_step(run.final);
        if (!next) {
            break;
        }
        run.steps.push_back({next->redex, run.final.size()});
        run.final = next->term;
    }
    return run;
}

// Bit-level meaning of each vector op.
inline planar::BitVector apply_bits(const planar::VectorOp& op, const planar::BitVector& in)
{
    using namespace planar;
    BitVector out = in;
    if (const auto* f = std::get_if<Fetch>(&op)) {
        out.push_back(in[f->index - 1]);
    } else if (const auto* na = std::get_if<NotAppend>(&op)) {
        out.push_back(to_bit(!to_bool(in[na->index - 1])));
    } else if (std::get_if<AndInPlace>(&op)) {
        const Bit y = out.back();
        out.pop_back();
        const Bit x = out.back();
        out.pop_back();
        out.push_back(to_bit(to_bool(x) && to_bool(y)));
    } else if (std::get_if<NotInPlace>(&op)) {
        out.back() = to_bit(!to_bool(out.back()));
    } else if (const auto* c = std::get_if<AppendConst>(&op)) {
        out.push_back(c->bit);
    } else if (std::get_if<Last>(&op)) {
        out = {in.back()};
    }
    return out;
}

inline std::vector<planar::BitVector> all_vectors(std::size_t n)
{
    std::vector<planar::BitVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        planar::BitVector v;
        for (std::size_t k = 0; k < n; ++k) {
            v.push_back(planar::to_bit(((mask >> k) & 1U) != 0));
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Second circuit evaluator: demand-driven recursion over wire indices.
inline planar::Bit eval_wire(const planar::Circuit& c, std::size_t index, std::map<std::size_t, bool>& memo)
{
    using namespace planar;
    if (auto it = memo.find(index); it != memo.end()) {
        return to_bit(it->second);
    }
    const Gate& g = c.gates[index - 1];
    auto at = [&](const std::string& w) { return to_bool(eval_wire(c, *c.index_of(w), memo)); };
    bool v = false;
    if (const auto* k = std::get_if<ConstGate>(&g.rhs)) {
        v = to_bool(k->value);
    } else if (const auto* n = std::get_if<NotGate>(&g.rhs)) {
        v = !at(n->src);
    } else if (const auto* a = std::get_if<AndGate>(&g.rhs)) {
        const bool l = at(a->lhs);
        const bool r = at(a->rhs);
        v = l && r;
    } else if (const auto* o = std::get_if<OrGate>(&g.rhs)) {
        const bool l = at(o->lhs);
        const bool r = at(o->rhs);
        v = l || r;
    }
    memo[index] = v;
    return to_bit(v);
}

inline planar::Bit truth_table_value(const planar::Circuit& c)
{
    std::map<std::size_t, bool> memo;
    return eval_wire(c, c.gates.size(), memo);
}

}  // namespace oracle
