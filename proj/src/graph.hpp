#pragma once

// Mutable term graph used by normalize(). Variables point at their binder
// node and every abstraction keeps the list of its occurrences, so a linear
// beta step is a constant number of pointer updates and no renaming is ever
// needed. Names are reassigned only when a graph is read back as a Term.

#include "planar/term.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace planar::detail {

class Graph {
public:
    using Id = std::int32_t;
    static constexpr Id none = -1;

    explicit Graph(const Term& t);

    Term to_term() const;
    std::size_t size() const { return size_; }
    Path path_to(Id node) const;

    // Normal-order reduction. `before` sees each redex before it is
    // contracted; `after` runs once the graph reflects the step. Stops and
    // returns false once `max_steps` contractions have happened and a redex
    // is still pending.
    bool normalize(std::size_t max_steps, const std::function<void(Id)>& before,
                   const std::function<void()>& after);

    std::size_t steps() const { return steps_; }

private:
    struct Node {
        Kind kind;
        Dir slot = Dir::fun;
        Id a = none;  // app: fun, lam: body, var: binder
        Id b = none;  // app: arg
        Id parent = none;
        std::int32_t sym = -1;
        std::int32_t occ_pos = -1;
    };

    struct Pos {
        Id parent;
        Dir slot;
    };

    Id new_node(Kind kind);
    std::int32_t intern(const std::string& name);
    Id build(const Term& t, std::unordered_map<std::string, std::vector<Id>>& scope);
    void add_occurrence(Id binder, Id var);
    void remove_occurrence(Id var);
    Id child(Id parent, Dir slot) const;
    Id at(Pos p) const { return p.parent == none ? root_ : child(p.parent, p.slot); }
    void set_child(Id parent, Dir slot, Id c);
    std::size_t release(Id n);
    std::size_t subtree_size(Id n) const;
    Id copy(Id n, std::unordered_map<Id, Id>& binders);
    void contract(Id redex);

    std::vector<Node> nodes_;
    std::vector<std::vector<Id>> occs_;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::int32_t> symbol_index_;
    Id root_ = none;
    std::size_t size_ = 0;
    std::size_t steps_ = 0;
};

}  // namespace planar::detail
