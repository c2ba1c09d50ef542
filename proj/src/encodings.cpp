#include "planar/encodings.hpp"

#include "planar/reduction.hpp"

#include <unordered_set>

namespace planar {

namespace {

Term V(const std::string& name)
{
    return Term::var(name);
}

std::string indexed(std::string_view base, std::size_t i)
{
    return std::string(base) + std::to_string(i);
}

std::vector<std::string> indexed_names(std::string_view base, std::size_t count)
{
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        out.push_back(indexed(base, i));
    }
    return out;
}

std::vector<Term> vars(const std::vector<std::string>& names)
{
    std::vector<Term> out;
    out.reserve(names.size());
    for (const auto& n : names) {
        out.push_back(V(n));
    }
    return out;
}

// \x. outer (inner x), with x fresh for both.
Term compose2(const Term& outer, const Term& inner)
{
    std::unordered_set<std::string> taken;
    for (const Term* t : {&outer, &inner}) {
        for (auto& occ : free_occurrences(*t)) {
            taken.insert(std::move(occ.name));
        }
    }
    std::string x = "x";
    while (taken.count(x) != 0) {
        x += '\'';
    }
    return Term::lam(x, Term::app(outer, Term::app(inner, V(x))));
}

Term identity()
{
    return Term::lam("x", V("x"));
}

Term cstt_term()
{
    return lams({"b", "k", "f"},
                apps(V("b"), {lams({"g", "h"}, apps(V("k"), {identity(), compose2(V("g"), V("h"))})), V("f")}));
}

Term cstf_term()
{
    return lams({"b", "k", "f"},
                apps(V("b"), {lams({"g", "h"}, apps(V("k"), {compose2(V("g"), V("h")), identity()})), V("f")}));
}

// b passes (g, h) = (id, cstt) when true and (cstt, id) when false. g acts
// last, so the outer constant must be cstf for the result to flip.
Term not_term()
{
    return Term::lam("b", apps(V("b"), {lams({"g", "h"}, Term::app(V("g"), Term::app(cstf_term(),
                                                                                    Term::app(V("h"), mk_bool(Bit::one))))),
                                        cstt_term()}));
}

Term and_term()
{
    Term inner = lams({"f2", "f3"}, apps(V("k"), {compose2(V("f1"), V("f2")), V("f3")}));
    return lams({"b1", "b2", "k"}, Term::app(V("b1"), Term::lam("f1", Term::app(V("b2"), inner))));
}

// De Morgan: \b1. \b2. not (and (not b1) (not b2)).
Term or_term()
{
    Term conj = apps(and_term(), {Term::app(not_term(), V("b1")), Term::app(not_term(), V("b2"))});
    return lams({"b1", "b2"}, Term::app(not_term(), conj));
}

Term compose_term()
{
    return lams({"f", "g"}, compose2(V("f"), V("g")));
}

// Vector transformer \v. \k. v (\b1 ... b_width. k b1 ... b_width) with the
// listed slots wrapped in the given connective.
struct SlotUpdate {
    std::size_t slot;
    Connective with;
};

Term vector_update(std::size_t width, const std::vector<SlotUpdate>& updates)
{
    const auto names = indexed_names("b", width);
    std::vector<Term> args = vars(names);
    for (const auto& u : updates) {
        args[u.slot - 1] = Term::app(mk_connective(u.with), args[u.slot - 1]);
    }
    return lams({"v", "k"}, Term::app(V("v"), lams(names, apps(V("k"), args))));
}

Connective opposite(Connective c)
{
    return c == Connective::cstt ? Connective::cstf : Connective::cstt;
}

// Shared body of fetch and its negating variant. Each x_j selects between
// c_j = \g. \h. g . T_j . h and f_j = F_j, where T_j / F_j rewrite slot j
// with cstt / cstf. For j = i, slot n+1 is rewritten too, with `last_true`
// under T_i and its opposite under F_i. The rewrites run on a zero vector
// of length n+1.
Term fetch_like(std::size_t i, std::size_t n, Connective last_true)
{
    const std::size_t width = n + 1;
    Term acc = encode_bitvec(BitVector(width, Bit::zero));
    for (std::size_t j = n; j >= 1; --j) {
        std::vector<SlotUpdate> on_true{{j, Connective::cstt}};
        std::vector<SlotUpdate> on_false{{j, Connective::cstf}};
        if (j == i) {
            on_true.push_back({width, last_true});
            on_false.push_back({width, opposite(last_true)});
        }
        Term c = lams({"g", "h", "x"},
                      Term::app(V("g"), Term::app(vector_update(width, on_true), Term::app(V("h"), V("x")))));
        Term f = vector_update(width, on_false);
        acc = apps(V(indexed("x", j)), {c, f, acc});
    }
    return Term::lam("v", Term::app(V("v"), lams(indexed_names("x", n), acc)));
}

// \v. \k. v (\x1 ... x_width. k x1 ... x_keep tail), tail built from the
// remaining variables.
template <typename Tail>
Term rebuild(std::size_t width, std::size_t keep, Tail tail)
{
    const auto names = indexed_names("x", width);
    std::vector<Term> all = vars(names);
    std::vector<Term> args(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
    std::vector<Term> rest(all.begin() + static_cast<std::ptrdiff_t>(keep), all.end());
    args.push_back(tail(rest));
    return lams({"v", "k"}, Term::app(V("v"), lams(names, apps(V("k"), args))));
}

Term last_term(std::size_t n)
{
    const auto names = indexed_names("x", n);
    Term compose_pair = lams({"g", "h"}, compose2(V("g"), V("h")));
    Term acc = V(names.back());
    for (std::size_t j = n - 1; j >= 1; --j) {
        acc = apps(V(names[j - 1]), {compose_pair, identity(), acc});
    }
    return Term::lam("v", Term::app(V("v"), lams(names, acc)));
}

void require_index(std::size_t i, std::size_t n, const char* what)
{
    if (i < 1 || i > n) {
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n));
    }
}

}  // namespace

std::string format_bits(const BitVector& v)
{
    std::string out = "<";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_char(v[i]);
    }
    return out + ">";
}

Term mk_bool(Bit b)
{
    if (b == Bit::one) {
        return lams({"k", "f"}, apps(V("k"), {identity(), V("f")}));
    }
    return lams({"k", "f"}, apps(V("k"), {V("f"), identity()}));
}

Term mk_connective(Connective which)
{
    switch (which) {
    case Connective::cstt: return cstt_term();
    case Connective::cstf: return cstf_term();
    case Connective::not_: return not_term();
    case Connective::and_: return and_term();
    case Connective::or_: return or_term();
    case Connective::id: return identity();
    case Connective::compose: return compose_term();
    }
    throw std::invalid_argument("unknown connective");
}

std::optional<Term> named_constant(std::string_view name)
{
    if (name == "true") return mk_bool(Bit::one);
    if (name == "false") return mk_bool(Bit::zero);
    if (name == "cstt") return mk_connective(Connective::cstt);
    if (name == "cstf") return mk_connective(Connective::cstf);
    if (name == "not") return mk_connective(Connective::not_);
    if (name == "and") return mk_connective(Connective::and_);
    if (name == "or") return mk_connective(Connective::or_);
    if (name == "id") return mk_connective(Connective::id);
    if (name == "compose") return mk_connective(Connective::compose);
    return std::nullopt;
}

ConstantResolver constant_resolver()
{
    return [](std::string_view name) { return named_constant(name); };
}

Term encode_bitvec(const BitVector& v)
{
    std::vector<Term> args;
    args.reserve(v.size());
    for (Bit b : v) {
        args.push_back(mk_bool(b));
    }
    return Term::lam("k", apps(V("k"), args));
}

std::size_t source_length(const VectorOp& op)
{
    return std::visit(
        [](const auto& o) -> std::size_t {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, AndInPlace>) {
                return o.arity + 2;
            } else if constexpr (std::is_same_v<T, NotInPlace>) {
                return o.arity + 1;
            } else {
                return o.arity;
            }
        },
        op);
}

std::size_t target_length(const VectorOp& op)
{
    if (std::holds_alternative<Last>(op)) {
        return 1;
    }
    return std::visit([](const auto& o) -> std::size_t { return o.arity + 1; }, op);
}

std::string describe(const VectorOp& op)
{
    return std::visit(
        [](const auto& o) -> std::string {
            using T = std::decay_t<decltype(o)>;
            const std::string n = std::to_string(o.arity);
            if constexpr (std::is_same_v<T, Fetch>) {
                return "fetch_{" + std::to_string(o.index) + "," + n + "}";
            } else if constexpr (std::is_same_v<T, NotAppend>) {
                return "not_{" + std::to_string(o.index) + "," + n + "}";
            } else if constexpr (std::is_same_v<T, AndInPlace>) {
                return "and'_" + n;
            } else if constexpr (std::is_same_v<T, NotInPlace>) {
                return "not'_" + n;
            } else if constexpr (std::is_same_v<T, AppendConst>) {
                return std::string(o.bit == Bit::one ? "true_" : "false_") + n;
            } else {
                return "last_" + n;
            }
        },
        op);
}

void validate(const VectorOp& op)
{
    if (const auto* f = std::get_if<Fetch>(&op)) {
        require_index(f->index, f->arity, "fetch");
    } else if (const auto* na = std::get_if<NotAppend>(&op)) {
        require_index(na->index, na->arity, "not");
    } else if (const auto* l = std::get_if<Last>(&op)) {
        if (l->arity == 0) {
            throw std::out_of_range("last: vector must be nonempty");
        }
    }
}

Term mk_vector_op(const VectorOp& op)
{
    validate(op);
    return std::visit(
        [](const auto& o) -> Term {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Fetch>) {
                return fetch_like(o.index, o.arity, Connective::cstt);
            } else if constexpr (std::is_same_v<T, NotAppend>) {
                return fetch_like(o.index, o.arity, Connective::cstf);
            } else if constexpr (std::is_same_v<T, AndInPlace>) {
                return rebuild(o.arity + 2, o.arity, [](const std::vector<Term>& rest) {
                    return apps(and_term(), {rest[0], rest[1]});
                });
            } else if constexpr (std::is_same_v<T, NotInPlace>) {
                return rebuild(o.arity + 1, o.arity,
                               [](const std::vector<Term>& rest) { return Term::app(not_term(), rest[0]); });
            } else if constexpr (std::is_same_v<T, AppendConst>) {
                const Bit bit = o.bit;
                return rebuild(o.arity, o.arity, [bit](const std::vector<Term>&) { return mk_bool(bit); });
            } else {
                return last_term(o.arity);
            }
        },
        op);
}

std::vector<VectorOp> gate_and_ops(std::size_t i, std::size_t j, std::size_t n)
{
    require_index(i, n, "and");
    require_index(j, n, "and");
    return {Fetch{j, n}, Fetch{i, n + 1}, AndInPlace{n}};
}

std::vector<VectorOp> gate_or_ops(std::size_t i, std::size_t j, std::size_t n)
{
    require_index(i, n, "or");
    require_index(j, n, "or");
    return {Fetch{i, n}, NotInPlace{n}, Fetch{j, n + 1}, NotInPlace{n + 1}, AndInPlace{n}, NotInPlace{n}};
}

Term compose_chain(const std::vector<Term>& in_application_order)
{
    Term body = V("y");
    for (const Term& t : in_application_order) {
        body = Term::app(t, std::move(body));
    }
    return Term::lam("y", std::move(body));
}

namespace {

Term compose_ops(const std::vector<VectorOp>& ops)
{
    std::vector<Term> terms;
    terms.reserve(ops.size());
    for (const auto& op : ops) {
        terms.push_back(mk_vector_op(op));
    }
    return compose_chain(terms);
}

}  // namespace

Term mk_gate_and(std::size_t i, std::size_t j, std::size_t n)
{
    return compose_ops(gate_and_ops(i, j, n));
}

Term mk_gate_or(std::size_t i, std::size_t j, std::size_t n)
{
    return compose_ops(gate_or_ops(i, j, n));
}

namespace {

NormalizeOptions decode_options(std::optional<std::size_t> fuel)
{
    NormalizeOptions o;
    o.fuel = fuel;
    o.detail = TraceDetail::none;
    return o;
}

}  // namespace

Bit decode_bool(const Term& t, std::optional<std::size_t> fuel)
{
    static const Term zero = eta_reduce(mk_bool(Bit::zero));
    static const Term one = eta_reduce(mk_bool(Bit::one));
    const Term nf = eta_reduce(normalize(t, decode_options(fuel)).final);
    if (alpha_eq(nf, one)) {
        return Bit::one;
    }
    if (alpha_eq(nf, zero)) {
        return Bit::zero;
    }
    throw DecodeError("not a boolean: " + print_term(nf));
}

BitVector decode_bitvec(const Term& t, std::size_t n, std::optional<std::size_t> fuel)
{
    const Term nf = normalize(t, decode_options(fuel)).final;

    // The tuple must have the shape \k. k a1 ... an.
    bool shaped = nf.is_lam();
    if (shaped) {
        const Term* head = &nf.body();
        std::size_t count = 0;
        while (head->is_app()) {
            head = &head->fun();
            ++count;
        }
        shaped = head->is_var() && head->name() == nf.name() && count == n;
    }
    if (!shaped) {
        throw DecodeError("arity mismatch: expected a " + std::to_string(n) + "-tuple, got " + print_term(nf));
    }

    const auto names = indexed_names("p", n);
    BitVector out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        Term probe = lams(names, V(names[m]));
        try {
            out.push_back(decode_bool(Term::app(nf, probe), fuel));
        } catch (const DecodeError& e) {
            throw DecodeError("coordinate " + std::to_string(m + 1) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace planar
