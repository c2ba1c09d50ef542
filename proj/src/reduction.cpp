#include "planar/reduction.hpp"

#include "graph.hpp"

#include <limits>
#include <unordered_set>

namespace planar {

namespace {

void collect_free(const Term& t, std::unordered_set<std::string>& out)
{
    for (auto& occ : free_occurrences(t)) {
        out.insert(std::move(occ.name));
    }
}

bool occurs_free(const Term& t, const std::string& name)
{
    for (const auto& occ : free_occurrences(t)) {
        if (occ.name == name) {
            return true;
        }
    }
    return false;
}

}  // namespace

Term substitute(const Term& body, const std::string& name, const Term& arg)
{
    switch (body.kind()) {
    case Kind::var:
        return body.name() == name ? arg : body;
    case Kind::app:
        return Term::app(substitute(body.fun(), name, arg), substitute(body.arg(), name, arg));
    case Kind::lam: {
        if (body.name() == name || !occurs_free(body.body(), name)) {
            return body;
        }
        if (!occurs_free(arg, body.name())) {
            return Term::lam(body.name(), substitute(body.body(), name, arg));
        }
        std::unordered_set<std::string> avoid;
        collect_free(arg, avoid);
        collect_free(body.body(), avoid);
        avoid.insert(name);
        std::string fresh = body.name();
        while (avoid.count(fresh) != 0) {
            fresh += '\'';
        }
        Term renamed = substitute(body.body(), body.name(), Term::var(fresh));
        return Term::lam(fresh, substitute(renamed, name, arg));
    }
    }
    return body;
}

namespace {

std::optional<Term> step_at(const Term& t, Path& path)
{
    switch (t.kind()) {
    case Kind::var:
        return std::nullopt;
    case Kind::lam: {
        path.push_back(Dir::body);
        if (auto b = step_at(t.body(), path)) {
            return Term::lam(t.name(), std::move(*b));
        }
        path.pop_back();
        return std::nullopt;
    }
    case Kind::app: {
        if (t.fun().is_lam()) {
            return substitute(t.fun().body(), t.fun().name(), t.arg());
        }
        path.push_back(Dir::fun);
        if (auto f = step_at(t.fun(), path)) {
            return Term::app(std::move(*f), t.arg());
        }
        path.back() = Dir::arg;
        if (auto a = step_at(t.arg(), path)) {
            return Term::app(t.fun(), std::move(*a));
        }
        path.pop_back();
        return std::nullopt;
    }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Reduced> reduce_step(const Term& t)
{
    Path path;
    if (auto next = step_at(t, path)) {
        return Reduced{std::move(*next), std::move(path)};
    }
    return std::nullopt;
}

bool is_beta_normal(const Term& t)
{
    switch (t.kind()) {
    case Kind::var:
        return true;
    case Kind::lam:
        return is_beta_normal(t.body());
    case Kind::app:
        return !t.fun().is_lam() && is_beta_normal(t.fun()) && is_beta_normal(t.arg());
    }
    return true;
}

std::string format_trace_line(std::size_t k, const TraceStep& step)
{
    return "step " + std::to_string(k) + ": size=" + std::to_string(step.size_before) +
           " redex=" + format_path(step.redex);
}

std::size_t default_fuel(const Term& t)
{
    return 10 * t.size() + 1000;
}

FuelExhausted::FuelExhausted(Term last, std::size_t steps)
    : std::runtime_error("fuel exhausted after " + std::to_string(steps) + " steps"),
      last_(std::move(last)),
      steps_(steps)
{
}

NormalizationTrace normalize(const Term& t, const NormalizeOptions& options)
{
    const bool linear = is_linear(t);
    const std::size_t limit =
        linear ? std::numeric_limits<std::size_t>::max() : options.fuel.value_or(default_fuel(t));

    detail::Graph graph(t);
    std::vector<TraceStep> steps;
    std::size_t peak = graph.size();

    auto before = [&](detail::Graph::Id redex) {
        if (options.detail == TraceDetail::none) {
            return;
        }
        TraceStep s{{}, graph.size()};
        if (options.detail == TraceDetail::full) {
            s.redex = graph.path_to(redex);
        }
        steps.push_back(std::move(s));
    };
    auto after = [&] {
        peak = std::max(peak, graph.size());
        if (options.on_step) {
            options.on_step(graph.to_term());
        }
    };

    if (!graph.normalize(limit, before, after)) {
        throw FuelExhausted(graph.to_term(), graph.steps());
    }
    return NormalizationTrace{std::move(steps), graph.to_term(), graph.steps(), t.size(), peak};
}

NormalizationTrace normalize(const Term& t, std::size_t fuel)
{
    if (fuel == 0) {
        throw std::invalid_argument("fuel must be positive");
    }
    NormalizeOptions options;
    options.fuel = fuel;
    return normalize(t, options);
}

Term eta_reduce(const Term& t)
{
    switch (t.kind()) {
    case Kind::var:
        return t;
    case Kind::app:
        return Term::app(eta_reduce(t.fun()), eta_reduce(t.arg()));
    case Kind::lam: {
        Term body = eta_reduce(t.body());
        if (body.is_app() && body.arg().is_var() && body.arg().name() == t.name() &&
            !occurs_free(body.fun(), t.name())) {
            return body.fun();
        }
        return Term::lam(t.name(), std::move(body));
    }
    }
    return t;
}

NotLinearError::NotLinearError(const std::string& what, LinearityReport report)
    : std::invalid_argument(what), report_(std::move(report))
{
}

bool beta_convertible(const Term& t, const Term& u, Conversion mode)
{
    for (const Term* side : {&t, &u}) {
        LinearityReport report = check_linear(*side);
        if (!report.linear()) {
            std::string message = "input is not linear: " + format_witness(report.witnesses.front());
            throw NotLinearError(message, std::move(report));
        }
    }
    NormalizeOptions quiet;
    quiet.detail = TraceDetail::none;
    Term nt = normalize(t, quiet).final;
    Term nu = normalize(u, quiet).final;
    if (mode == Conversion::beta_eta) {
        nt = eta_reduce(nt);
        nu = eta_reduce(nu);
    }
    return alpha_eq(nt, nu);
}

}  // namespace planar
