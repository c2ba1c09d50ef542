#include "planar/typing.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace planar {

Context::Context(std::vector<std::string> names) : names_(std::move(names))
{
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) {
            throw std::invalid_argument("context entry '" + n + "' is not distinct");
        }
    }
}

std::string format_context(const Context& ctx)
{
    std::string out = "[";
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += ctx.names()[i];
    }
    return out + "]";
}

std::string format_witness(const LinearityWitness& w)
{
    std::string out = w.name + " occurs " + std::to_string(w.occurrences) +
                      (w.occurrences == 1 ? " time" : " times");
    if (w.bound) {
        out += " (bound at " + format_path(w.binder) + ")";
    } else {
        out += " (free)";
    }
    return out;
}

namespace {

struct BinderCount {
    std::string name;
    Path path;
    std::size_t count = 0;
};

class LinearityCounter {
public:
    void run(const Term& t)
    {
        switch (t.kind()) {
        case Kind::var: {
            auto it = scope_.find(t.name());
            if (it != scope_.end() && !it->second.empty()) {
                ++binders_[it->second.back()].count;
            } else {
                auto [fit, inserted] = free_index_.try_emplace(t.name(), free_.size());
                if (inserted) {
                    free_.push_back({t.name(), {}, 0});
                }
                ++free_[fit->second].count;
            }
            break;
        }
        case Kind::lam: {
            binders_.push_back({t.name(), path_, 0});
            scope_[t.name()].push_back(binders_.size() - 1);
            path_.push_back(Dir::body);
            run(t.body());
            path_.pop_back();
            scope_[t.name()].pop_back();
            break;
        }
        case Kind::app:
            path_.push_back(Dir::fun);
            run(t.fun());
            path_.back() = Dir::arg;
            run(t.arg());
            path_.pop_back();
            break;
        }
    }

    LinearityReport report() const
    {
        LinearityReport r;
        for (const auto& b : binders_) {
            if (b.count != 1) {
                r.witnesses.push_back({b.name, b.count, true, b.path});
            }
        }
        for (const auto& f : free_) {
            if (f.count != 1) {
                r.witnesses.push_back({f.name, f.count, false, {}});
            }
        }
        r.verdict = r.witnesses.empty() ? Linearity::linear : Linearity::not_linear;
        return r;
    }

private:
    std::unordered_map<std::string, std::vector<std::size_t>> scope_;
    std::vector<BinderCount> binders_;
    std::vector<BinderCount> free_;
    std::unordered_map<std::string, std::size_t> free_index_;
    Path path_;
};

// Computes the left-to-right free occurrence sequence bottom-up, checking at
// each abstraction that its variable closes the sequence of its body.
// Assumes a linear term.
class PlanarScan {
public:
    void run(const Term& t)
    {
        switch (t.kind()) {
        case Kind::var:
            seq_.push_back(t.name());
            break;
        case Kind::lam: {
            const std::size_t order = preorder_++;
            const std::size_t start = seq_.size();
            path_.push_back(Dir::body);
            run(t.body());
            path_.pop_back();
            // Linear: exactly one occurrence in the body's segment, and inner
            // binders of the same name have already removed theirs.
            std::size_t pos = seq_.size();
            for (std::size_t k = seq_.size(); k > start; --k) {
                if (seq_[k - 1] == t.name()) {
                    pos = k - 1;
                    break;
                }
            }
            if (pos != seq_.size() - 1 && (!violation_ || order < violation_->order)) {
                violation_ = Violation{order, path_, t.name()};
            }
            if (pos < seq_.size()) {
                seq_.erase(seq_.begin() + static_cast<std::ptrdiff_t>(pos));
            }
            break;
        }
        case Kind::app:
            ++preorder_;
            path_.push_back(Dir::fun);
            run(t.fun());
            path_.back() = Dir::arg;
            run(t.arg());
            path_.pop_back();
            break;
        }
    }

    struct Violation {
        std::size_t order;
        Path path;
        std::string binder;
    };

    std::vector<std::string> seq_;
    std::optional<Violation> violation_;

private:
    std::size_t preorder_ = 0;
    Path path_;
};

}  // namespace

LinearityReport check_linear(const Term& t)
{
    LinearityCounter counter;
    counter.run(t);
    return counter.report();
}

PlanarVerdict infer_planar_context(const Term& t)
{
    LinearityReport lin = check_linear(t);
    if (!lin.linear()) {
        const auto& w = lin.witnesses.front();
        Path at = w.bound ? w.binder : Path{};
        std::string reason = "not linear: " + format_witness(w);
        return PlanarVerdict::failure({std::move(at), std::move(reason), std::move(lin)});
    }
    PlanarScan scan;
    scan.run(t);
    if (scan.violation_) {
        auto& v = *scan.violation_;
        std::string reason = "variable " + v.binder + " is not the rightmost free occurrence of its body";
        return PlanarVerdict::failure({std::move(v.path), std::move(reason), std::nullopt});
    }
    return PlanarVerdict::success(Context(std::move(scan.seq_)));
}

bool check_planar(const Term& t)
{
    return infer_planar_context(t).ok();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Planar terms of exactly `size` nodes whose ordered context is `ctx`.
std::vector<Term> planar_with_context(std::size_t size, const std::vector<std::string>& ctx, std::size_t depth)
{
    // A linear term with L binders and m free variables has 3L + 2m - 1 nodes.
    const std::size_t m = ctx.size();
    if (size + 1 < 2 * m || (size + 1 - 2 * m) % 3 != 0) {
        return {};
    }
    std::vector<Term> out;
    if (size == 1) {
        if (m == 1) {
            out.push_back(Term::var(ctx.front()));
        }
        return out;
    }
    {
        std::vector<std::string> inner = ctx;
        std::string binder = "v" + std::to_string(depth + 1);
        inner.push_back(binder);
        for (Term& body : planar_with_context(size - 1, inner, depth + 1)) {
            out.push_back(Term::lam(binder, std::move(body)));
        }
    }
    for (std::size_t split = 0; split <= m; ++split) {
        std::vector<std::string> left(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<std::string> right(ctx.begin() + static_cast<std::ptrdiff_t>(split), ctx.end());
        for (std::size_t ls = 1; ls + 2 <= size; ++ls) {
            const std::size_t rs = size - 1 - ls;
            auto funs = planar_with_context(ls, left, depth);
            if (funs.empty()) {
                continue;
            }
            auto args = planar_with_context(rs, right, depth);
            for (const Term& f : funs) {
                for (const Term& a : args) {
                    out.push_back(Term::app(f, a));
                }
            }
        }
    }
    return out;
}

}  // namespace

void for_each_planar(std::size_t max_size, const std::function<void(const Term&)>& visit)
{
    if (max_size > max_enumeration_size) {
        throw std::invalid_argument("enumeration bound " + std::to_string(max_size) + " exceeds " +
                                    std::to_string(max_enumeration_size));
    }
    for (std::size_t size = 1; size <= max_size; ++size) {
        for (const Term& t : planar_with_context(size, {}, 0)) {
            visit(t);
        }
    }
}

std::vector<Term> enumerate_planar(std::size_t max_size)
{
    std::vector<Term> out;
    for_each_planar(max_size, [&](const Term& t) { out.push_back(t); });
    return out;
}

}  // namespace planar
