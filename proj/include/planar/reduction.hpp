#pragma once

#include "planar/term.hpp"
#include "planar/typing.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planar {

// Capture-avoiding substitution body[arg/name]. Binders that would capture a
// free variable of arg are renamed by appending primes.
Term substitute(const Term& body, const std::string& name, const Term& arg);

struct Reduced {
    Term term;
    Path redex;
};

// Contracts the leftmost-outermost redex; nullopt when t is beta-normal.
std::optional<Reduced> reduce_step(const Term& t);

bool is_beta_normal(const Term& t);

struct TraceStep {
    Path redex;
    std::size_t size_before;
};

struct NormalizationTrace {
    std::vector<TraceStep> steps;
    Term final;
    std::size_t step_count = 0;
    std::size_t initial_size = 0;
    std::size_t peak_size = 0;
};

// `step <k>: size=<n> redex=<path>`, k counted from 1.
std::string format_trace_line(std::size_t k, const TraceStep& step);

enum class TraceDetail {
    none,   // step_count only
    sizes,  // steps carry sizes, paths left empty
    full,
};

struct NormalizeOptions {
    // Step budget for non-linear input; default_fuel(t) when unset. Linear
    // input is never cut off.
    std::optional<std::size_t> fuel;
    TraceDetail detail = TraceDetail::full;
    // Called with every intermediate term, after each contraction.
    std::function<void(const Term&)> on_step;
};

std::size_t default_fuel(const Term& t);

class FuelExhausted : public std::runtime_error {
public:
    FuelExhausted(Term last, std::size_t steps);
    const Term& last() const { return last_; }
    std::size_t steps() const { return steps_; }

private:
    Term last_;
    std::size_t steps_;
};

// Leftmost-outermost normalization. Throws FuelExhausted.
NormalizationTrace normalize(const Term& t, const NormalizeOptions& options = {});
NormalizationTrace normalize(const Term& t, std::size_t fuel);

// Repeated eta contraction \x. M x -> M (x not free in M).
Term eta_reduce(const Term& t);

class NotLinearError : public std::invalid_argument {
public:
    NotLinearError(const std::string& what, LinearityReport report);
    const LinearityReport& report() const { return report_; }

private:
    LinearityReport report_;
};

enum class Conversion { beta, beta_eta };

// Decides convertibility of two linear terms by comparing normal forms up to
// alpha (and eta, by default). Throws NotLinearError.
bool beta_convertible(const Term& t, const Term& u, Conversion mode = Conversion::beta_eta);

}  // namespace planar
