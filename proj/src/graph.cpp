#include "graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace planar::detail {

Graph::Graph(const Term& t)
{
    nodes_.reserve(t.size());
    occs_.reserve(t.size());
    std::unordered_map<std::string, std::vector<Id>> scope;
    root_ = build(t, scope);
    nodes_[root_].parent = none;
    size_ = t.size();
}

Graph::Id Graph::new_node(Kind kind)
{
    nodes_.push_back(Node{kind});
    occs_.emplace_back();
    return static_cast<Id>(nodes_.size() - 1);
}

std::int32_t Graph::intern(const std::string& name)
{
    auto [it, inserted] = symbol_index_.try_emplace(name, static_cast<std::int32_t>(symbols_.size()));
    if (inserted) {
        symbols_.push_back(name);
    }
    return it->second;
}

Graph::Id Graph::build(const Term& t, std::unordered_map<std::string, std::vector<Id>>& scope)
{
    switch (t.kind()) {
    case Kind::var: {
        const Id v = new_node(Kind::var);
        nodes_[v].sym = intern(t.name());
        auto it = scope.find(t.name());
        if (it != scope.end() && !it->second.empty()) {
            add_occurrence(it->second.back(), v);
        }
        return v;
    }
    case Kind::lam: {
        const Id l = new_node(Kind::lam);
        nodes_[l].sym = intern(t.name());
        scope[t.name()].push_back(l);
        const Id body = build(t.body(), scope);
        scope[t.name()].pop_back();
        set_child(l, Dir::body, body);
        return l;
    }
    case Kind::app: {
        const Id a = new_node(Kind::app);
        const Id f = build(t.fun(), scope);
        const Id x = build(t.arg(), scope);
        set_child(a, Dir::fun, f);
        set_child(a, Dir::arg, x);
        return a;
    }
    }
    return none;
}

void Graph::add_occurrence(Id binder, Id var)
{
    nodes_[var].a = binder;
    nodes_[var].occ_pos = static_cast<std::int32_t>(occs_[binder].size());
    occs_[binder].push_back(var);
}

void Graph::remove_occurrence(Id var)
{
    const Id binder = nodes_[var].a;
    if (binder == none) {
        return;
    }
    auto& list = occs_[binder];
    const auto pos = static_cast<std::size_t>(nodes_[var].occ_pos);
    if (pos >= list.size() || list[pos] != var) {
        return;  // binder already consumed
    }
    const Id moved = list.back();
    list[pos] = moved;
    nodes_[moved].occ_pos = static_cast<std::int32_t>(pos);
    list.pop_back();
}

Graph::Id Graph::child(Id parent, Dir slot) const
{
    return slot == Dir::arg ? nodes_[parent].b : nodes_[parent].a;
}

void Graph::set_child(Id parent, Dir slot, Id c)
{
    if (parent == none) {
        root_ = c;
    } else if (slot == Dir::arg) {
        nodes_[parent].b = c;
    } else {
        nodes_[parent].a = c;
    }
    nodes_[c].parent = parent;
    nodes_[c].slot = slot;
}

std::size_t Graph::release(Id n)
{
    std::size_t count = 0;
    std::vector<Id> stack{n};
    while (!stack.empty()) {
        const Id cur = stack.back();
        stack.pop_back();
        ++count;
        switch (nodes_[cur].kind) {
        case Kind::var:
            remove_occurrence(cur);
            break;
        case Kind::lam:
            occs_[cur].clear();
            stack.push_back(nodes_[cur].a);
            break;
        case Kind::app:
            stack.push_back(nodes_[cur].a);
            stack.push_back(nodes_[cur].b);
            break;
        }
    }
    return count;
}

std::size_t Graph::subtree_size(Id n) const
{
    std::size_t count = 0;
    std::vector<Id> stack{n};
    while (!stack.empty()) {
        const Id cur = stack.back();
        stack.pop_back();
        ++count;
        if (nodes_[cur].kind == Kind::lam) {
            stack.push_back(nodes_[cur].a);
        } else if (nodes_[cur].kind == Kind::app) {
            stack.push_back(nodes_[cur].a);
            stack.push_back(nodes_[cur].b);
        }
    }
    return count;
}

Graph::Id Graph::copy(Id n, std::unordered_map<Id, Id>& binders)
{
    const Kind kind = nodes_[n].kind;
    const Id c = new_node(kind);
    nodes_[c].sym = nodes_[n].sym;
    switch (kind) {
    case Kind::var: {
        const Id binder = nodes_[n].a;
        if (binder != none) {
            auto it = binders.find(binder);
            add_occurrence(it == binders.end() ? binder : it->second, c);
        }
        break;
    }
    case Kind::lam: {
        binders[n] = c;
        const Id body = copy(nodes_[n].a, binders);
        set_child(c, Dir::body, body);
        break;
    }
    case Kind::app: {
        const Id f = copy(nodes_[n].a, binders);
        const Id x = copy(nodes_[n].b, binders);
        set_child(c, Dir::fun, f);
        set_child(c, Dir::arg, x);
        break;
    }
    }
    return c;
}

void Graph::contract(Id redex)
{
    const Id lam = nodes_[redex].a;
    const Id arg = nodes_[redex].b;
    std::vector<Id> occ = std::move(occs_[lam]);
    occs_[lam].clear();

    const std::size_t k = occ.size();
    if (k == 0) {
        size_ -= 2 + release(arg);
    } else if (k == 1) {
        size_ -= 3;
        set_child(nodes_[occ[0]].parent, nodes_[occ[0]].slot, arg);
    } else {
        const std::size_t arg_size = subtree_size(arg);
        for (std::size_t i = 1; i < k; ++i) {
            std::unordered_map<Id, Id> binders;
            const Id c = copy(arg, binders);
            set_child(nodes_[occ[i]].parent, nodes_[occ[i]].slot, c);
        }
        set_child(nodes_[occ[0]].parent, nodes_[occ[0]].slot, arg);
        size_ = size_ - 2 - k + (k - 1) * arg_size;
    }
    const Id result = nodes_[lam].a;
    set_child(nodes_[redex].parent, nodes_[redex].slot, result);
}

bool Graph::normalize(std::size_t max_steps, const std::function<void(Id)>& before,
                      const std::function<void()>& after)
{
    std::vector<Pos> work{{none, Dir::fun}};
    std::vector<Id> spine;
    while (!work.empty()) {
        Pos p = work.back();
        work.pop_back();
        spine.clear();
        Id h = at(p);
        while (true) {
            while (nodes_[h].kind == Kind::app) {
                spine.push_back(h);
                h = nodes_[h].a;
            }
            if (nodes_[h].kind == Kind::lam) {
                if (spine.empty()) {
                    p = {h, Dir::body};
                    h = nodes_[h].a;
                    continue;
                }
                // The innermost spine application has an abstraction in
                // function position: the leftmost-outermost redex.
                if (steps_ >= max_steps) {
                    return false;
                }
                const Id r = spine.back();
                spine.pop_back();
                if (before) {
                    before(r);
                }
                contract(r);
                ++steps_;
                if (after) {
                    after();
                }
                h = spine.empty() ? at(p) : nodes_[spine.back()].a;
                continue;
            }
            // Rigid head: arguments are normalized left to right.
            for (Id s : spine) {
                work.push_back({s, Dir::arg});
            }
            break;
        }
    }
    return true;
}

Path Graph::path_to(Id node) const
{
    Path path;
    for (Id cur = node; nodes_[cur].parent != none; cur = nodes_[cur].parent) {
        path.push_back(nodes_[cur].slot);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

struct Exporter {
    std::unordered_set<std::string> free_names;
    std::unordered_map<std::string, int> in_scope;
    std::unordered_map<std::int32_t, std::string> printed;
};

}  // namespace

Term Graph::to_term() const
{
    Exporter ex;
    {
        std::vector<Id> stack{root_};
        while (!stack.empty()) {
            const Id cur = stack.back();
            stack.pop_back();
            const Node& n = nodes_[cur];
            if (n.kind == Kind::var && n.a == none) {
                ex.free_names.insert(symbols_[n.sym]);
            } else if (n.kind == Kind::lam) {
                stack.push_back(n.a);
            } else if (n.kind == Kind::app) {
                stack.push_back(n.a);
                stack.push_back(n.b);
            }
        }
    }
    std::function<Term(Id)> go = [&](Id id) -> Term {
        const Node& n = nodes_[id];
        switch (n.kind) {
        case Kind::var:
            return Term::var(n.a == none ? symbols_[n.sym] : ex.printed.at(n.a));
        case Kind::lam: {
            std::string name = symbols_[n.sym];
            while (ex.in_scope[name] > 0 || ex.free_names.count(name) != 0) {
                name += '\'';
            }
            ex.printed[id] = name;
            ++ex.in_scope[name];
            Term body = go(n.a);
            --ex.in_scope[name];
            return Term::lam(std::move(name), std::move(body));
        }
        case Kind::app: {
            Term f = go(n.a);
            Term x = go(n.b);
            return Term::app(std::move(f), std::move(x));
        }
        }
        return Term::var("?");
    };
    return go(root_);
}

}  // namespace planar::detail
