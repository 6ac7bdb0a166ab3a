#include "evl/event_logic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "evl/text.hpp"

namespace evl {

RelationSet RelationSet::of(std::initializer_list<AllenRelation> rels) {
    RelationSet s;
    for (AllenRelation r : rels) s.add(r);
    return s;
}

RelationSet RelationSet::all() {
    RelationSet s;
    for (AllenRelation r : kAllRelations) s.add(r);
    return s;
}

RelationSet RelationSet::equal_only() { return of({AllenRelation::Equals}); }

RelationSet RelationSet::meets_only() { return of({AllenRelation::Meets}); }

RelationSet RelationSet::overlap_set() {
    return of({AllenRelation::Equals, AllenRelation::Overlaps, AllenRelation::OverlappedBy,
               AllenRelation::Starts, AllenRelation::StartedBy, AllenRelation::Finishes,
               AllenRelation::FinishedBy, AllenRelation::During, AllenRelation::Contains});
}

std::size_t RelationSet::count() const {
    std::size_t n = 0;
    for (AllenRelation r : kAllRelations)
        if (contains(r)) ++n;
    return n;
}

std::vector<AllenRelation> RelationSet::relations() const {
    std::vector<AllenRelation> out;
    for (AllenRelation r : kAllRelations)
        if (contains(r)) out.push_back(r);
    return out;
}

std::string RelationSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (AllenRelation r : relations()) {
        if (!first) out += ',';
        out += relation_code(r);
        first = false;
    }
    return out + "}";
}

ExprPtr make_prim(std::string name, std::vector<std::string> args) {
    auto e = std::make_shared<EventExpr>();
    e->kind = EventExpr::Kind::Prim;
    e->name = std::move(name);
    e->args = std::move(args);
    return e;
}

ExprPtr make_not(ExprPtr sub) {
    auto e = std::make_shared<EventExpr>();
    e->kind = EventExpr::Kind::Not;
    e->lhs = std::move(sub);
    return e;
}

ExprPtr make_or(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<EventExpr>();
    e->kind = EventExpr::Kind::Or;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr make_and(ExprPtr a, ExprPtr b, RelationSet rels) {
    auto e = std::make_shared<EventExpr>();
    e->kind = EventExpr::Kind::And;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    e->rels = rels;
    return e;
}

ExprPtr make_diamond(ExprPtr sub, RelationSet rels) {
    auto e = std::make_shared<EventExpr>();
    e->kind = EventExpr::Kind::Diamond;
    e->lhs = std::move(sub);
    e->rels = rels;
    return e;
}

std::string render_expr(const EventExpr& e) {
    switch (e.kind) {
        case EventExpr::Kind::Prim: {
            std::string out = e.name;
            if (!e.args.empty()) {
                out += '(';
                for (std::size_t i = 0; i < e.args.size(); ++i) {
                    if (i) out += ',';
                    out += e.args[i];
                }
                out += ')';
            }
            return out;
        }
        case EventExpr::Kind::Not:
            return "!" + render_expr(*e.lhs);
        case EventExpr::Kind::Or:
            return "(" + render_expr(*e.lhs) + " | " + render_expr(*e.rhs) + ")";
        case EventExpr::Kind::And:
            return "(" + render_expr(*e.lhs) + " &" + e.rels.to_string() + " " +
                   render_expr(*e.rhs) + ")";
        case EventExpr::Kind::Diamond:
            return "<>" + e.rels.to_string() + render_expr(*e.lhs);
    }
    throw std::logic_error("bad expr kind");
}

bool expr_equal(const EventExpr& a, const EventExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case EventExpr::Kind::Prim:
            return a.name == b.name && a.args == b.args;
        case EventExpr::Kind::Not:
            return expr_equal(*a.lhs, *b.lhs);
        case EventExpr::Kind::Or:
            return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
        case EventExpr::Kind::And:
            return a.rels == b.rels && expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
        case EventExpr::Kind::Diamond:
            return a.rels == b.rels && expr_equal(*a.lhs, *b.lhs);
    }
    return false;
}

void Model::add(const GroundAtom& atom, const SpanningSet& set) {
    auto [it, inserted] = entries_.try_emplace(atom, set);
    if (!inserted) it->second = set_union(it->second, set);
}

const SpanningSet& Model::lookup(const GroundAtom& atom) const {
    static const SpanningSet kEmpty;
    auto it = entries_.find(atom);
    return it == entries_.end() ? kEmpty : it->second;
}

std::vector<std::string> Model::constants() const {
    std::set<std::string> seen;
    for (const auto& [atom, set] : entries_)
        for (const auto& arg : atom.args) seen.insert(arg);
    return {seen.begin(), seen.end()};
}

void Lexicon::define(const std::string& name, std::vector<std::string> params, ExprPtr body) {
    if (defs_.count(name)) throw LexiconError("redefinition of " + name);
    defs_.emplace(name, Definition{std::move(params), std::move(body)});
    order_.push_back(name);
}

const Lexicon::Definition& Lexicon::at(const std::string& name) const {
    auto it = defs_.find(name);
    if (it == defs_.end()) throw LexiconError("undefined event type: " + name);
    return it->second;
}

void Lexicon::validate() const {
    // 0 unvisited, 1 on stack, 2 done
    std::map<std::string, int> color;
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
        color[name] = 1;
        std::function<void(const EventExpr&)> walk = [&](const EventExpr& e) {
            if (e.kind == EventExpr::Kind::Prim) {
                if (!defs_.count(e.name)) return;
                int c = color.count(e.name) ? color[e.name] : 0;
                if (c == 1) throw LexiconError("cyclic definition involving " + e.name);
                if (c == 0) visit(e.name);
                return;
            }
            if (e.lhs) walk(*e.lhs);
            if (e.rhs) walk(*e.rhs);
        };
        walk(*defs_.at(name).body);
        color[name] = 2;
    };
    for (const auto& name : order_)
        if ((color.count(name) ? color[name] : 0) == 0) visit(name);
}

ExprPtr Lexicon::expand(const std::string& name, const std::vector<std::string>& args) const {
    std::vector<std::string> stack;
    return expand_rec(make_prim(name, args), stack);
}

ExprPtr Lexicon::expand_expr(const ExprPtr& e) const {
    std::vector<std::string> stack;
    return expand_rec(e, stack);
}

ExprPtr Lexicon::expand_rec(const ExprPtr& e, std::vector<std::string>& stack) const {
    switch (e->kind) {
        case EventExpr::Kind::Prim: {
            auto it = defs_.find(e->name);
            if (it == defs_.end()) return e;  // genuine primitive
            const Definition& def = it->second;
            if (def.params.size() != e->args.size())
                throw LexiconError(e->name + " expects " + std::to_string(def.params.size()) +
                                   " arguments, got " + std::to_string(e->args.size()));
            if (std::find(stack.begin(), stack.end(), e->name) != stack.end())
                throw LexiconError("cyclic definition involving " + e->name);
            stack.push_back(e->name);
            std::map<std::string, std::string> subst;
            for (std::size_t i = 0; i < def.params.size(); ++i)
                subst[def.params[i]] = e->args[i];
            std::function<ExprPtr(const ExprPtr&)> apply = [&](const ExprPtr& n) -> ExprPtr {
                switch (n->kind) {
                    case EventExpr::Kind::Prim: {
                        std::vector<std::string> args;
                        args.reserve(n->args.size());
                        for (const auto& a : n->args) {
                            auto s = subst.find(a);
                            args.push_back(s == subst.end() ? a : s->second);
                        }
                        return expand_rec(make_prim(n->name, std::move(args)), stack);
                    }
                    case EventExpr::Kind::Not:
                        return make_not(apply(n->lhs));
                    case EventExpr::Kind::Or:
                        return make_or(apply(n->lhs), apply(n->rhs));
                    case EventExpr::Kind::And:
                        return make_and(apply(n->lhs), apply(n->rhs), n->rels);
                    case EventExpr::Kind::Diamond:
                        return make_diamond(apply(n->lhs), n->rels);
                }
                throw std::logic_error("bad expr kind");
            };
            ExprPtr out = apply(def.body);
            stack.pop_back();
            return out;
        }
        case EventExpr::Kind::Not:
            return make_not(expand_rec(e->lhs, stack));
        case EventExpr::Kind::Or:
            return make_or(expand_rec(e->lhs, stack), expand_rec(e->rhs, stack));
        case EventExpr::Kind::And:
            return make_and(expand_rec(e->lhs, stack), expand_rec(e->rhs, stack), e->rels);
        case EventExpr::Kind::Diamond:
            return make_diamond(expand_rec(e->lhs, stack), e->rels);
    }
    throw std::logic_error("bad expr kind");
}

const SpanningSet& universal() {
    static const SpanningSet u = [] {
        std::vector<SpanningInterval> members;
        for (bool a : {true, false}) {
            for (bool b : {true, false}) {
                RawSpanningInterval r;
                r.lo_lo = Endpoint::neg_inf();
                r.lo_hi = Endpoint::pos_inf();
                r.hi_lo = Endpoint::neg_inf();
                r.hi_hi = Endpoint::pos_inf();
                r.lo_lo_closed = r.lo_hi_closed = r.hi_lo_closed = r.hi_hi_closed = true;
                r.iv_lo_closed = a;
                r.iv_hi_closed = b;
                auto n = SpanningInterval::normalized(r);
                members.push_back(*n);
            }
        }
        return SpanningSet::of(std::move(members));
    }();
    return u;
}

namespace {

// Plain structural induction with a per-call memo; expansion duplicates
// subexpressions heavily (the same guard conjuncts appear in several
// subevents and definitions), so ground subresults are shared by their
// rendered form.
class Evaluator {
  public:
    explicit Evaluator(const Model& m) : model_(m) {}

    SpanningSet eval(const EventExpr& e) {
        const std::string key = render_expr(e);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        SpanningSet result = compute(e);
        cache_.emplace(key, result);
        return result;
    }

  private:
    SpanningSet compute(const EventExpr& e) {
        switch (e.kind) {
            case EventExpr::Kind::Prim: {
                if (e.name == "=") {
                    for (std::size_t i = 1; i < e.args.size(); ++i)
                        if (e.args[i] != e.args[0]) return {};
                    return universal();
                }
                return model_.lookup(GroundAtom{e.name, e.args});
            }
            case EventExpr::Kind::Or:
                return set_union(eval(*e.lhs), eval(*e.rhs));
            case EventExpr::Kind::Not: {
                const SpanningSet sub = eval(*e.lhs);
                SpanningSet acc = universal();
                for (const auto& member : sub.members()) {
                    acc = set_intersect(acc, set_complement(member));
                    if (acc.empty()) break;
                }
                return acc;
            }
            case EventExpr::Kind::And: {
                const SpanningSet lhs = eval(*e.lhs);
                if (lhs.empty()) return {};
                const SpanningSet rhs = eval(*e.rhs);
                if (rhs.empty()) return {};
                std::vector<SpanningSet> parts;
                for (const auto& i : lhs.members())
                    for (const auto& j : rhs.members())
                        for (AllenRelation r : e.rels.relations())
                            parts.push_back(i_map(i, r, j));
                return canonical_union(parts);
            }
            case EventExpr::Kind::Diamond: {
                const SpanningSet sub = eval(*e.lhs);
                std::vector<SpanningSet> parts;
                for (const auto& i : sub.members())
                    for (AllenRelation r : e.rels.relations()) parts.push_back(d_map(r, i));
                return canonical_union(parts);
            }
        }
        throw std::logic_error("bad expr kind");
    }

    const Model& model_;
    std::unordered_map<std::string, SpanningSet> cache_;
};

void ordered_tuples(const std::vector<std::string>& objects, std::size_t arity,
                    std::vector<std::string>& current, std::vector<bool>& used,
                    const std::function<void(const std::vector<std::string>&)>& emit) {
    if (current.size() == arity) {
        emit(current);
        return;
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        current.push_back(objects[i]);
        ordered_tuples(objects, arity, current, used, emit);
        current.pop_back();
        used[i] = false;
    }
}

}  // namespace

SpanningSet eval(const Model& m, const EventExpr& expr) {
    Evaluator ev(m);
    return ev.eval(expr);
}

std::vector<Occurrence> classify(const Model& m, const Lexicon& lex,
                                 const std::vector<std::string>& event_names,
                                 const std::vector<std::string>& objects) {
    std::vector<std::string> objs = objects;
    std::sort(objs.begin(), objs.end());
    objs.erase(std::unique(objs.begin(), objs.end()), objs.end());

    Evaluator ev(m);
    std::vector<Occurrence> out;
    for (const auto& name : event_names) {
        const auto& def = lex.at(name);
        // Same-constant tuples always evaluate empty under the stock
        // definitions' inequality guards; only distinct tuples are tried.
        if (def.params.size() > objs.size()) continue;
        std::vector<std::string> current;
        std::vector<bool> used(objs.size(), false);
        ordered_tuples(objs, def.params.size(), current, used,
                       [&](const std::vector<std::string>& tuple) {
                           ExprPtr ground = lex.expand(name, tuple);
                           SpanningSet result = ev.eval(*ground);
                           if (!result.empty()) out.push_back({name, tuple, result});
                       });
    }
    std::sort(out.begin(), out.end(), [](const Occurrence& a, const Occurrence& b) {
        if (a.event != b.event) return a.event < b.event;
        return a.args < b.args;
    });
    return out;
}

const char* builtin_lexicon_text() {
    return R"LEX(# Stock event definitions.
#
# The stream vocabulary uses ?-suffixed atom names; the aliases below bind
# them to the names the definitions are written with. ATTACHED and CONTACTS
# are symmetric, so the aliases admit both argument orders.

DEFINE SUPPORTED(x) = SUPPORTED?(x)
DEFINE SUPPORTS(x, y) = SUPPORTS?(x, y)
DEFINE CONTACTS(x, y) = CONTACTS?(x, y) | CONTACTS?(y, x)
DEFINE ATTACHED(x, y) = ATTACHED?(x, y) | ATTACHED?(y, x)

DEFINE PICK-UP(x, y, z) =
    !<>x=y & !<>z=x & !<>z=y &
    SUPPORTED(y) & !<>ATTACHED(x, z) &
    [ [ !<>ATTACHED(x, y) & !<>SUPPORTS(x, y) &
        SUPPORTS(z, y) &
        !<>SUPPORTED(x) & !<>ATTACHED(y, z) &
        !<>SUPPORTS(y, x) & !<>SUPPORTS(y, z) &
        !<>SUPPORTS(x, z) & !<>SUPPORTS(z, x) ] ;
      [ ATTACHED(x, y) | ATTACHED(y, z) ] ;
      [ ATTACHED(x, y) & SUPPORTS(x, y) &
        !<>SUPPORTS(z, y) &
        !<>SUPPORTED(x) & !<>ATTACHED(y, z) &
        !<>SUPPORTS(y, x) & !<>SUPPORTS(y, z) &
        !<>SUPPORTS(x, z) & !<>SUPPORTS(z, x) ] ]

DEFINE PUT-DOWN(x, y, z) =
    !<>x=y & !<>z=x & !<>z=y &
    SUPPORTED(y) & !<>ATTACHED(x, z) &
    [ [ ATTACHED(x, y) & SUPPORTS(x, y) &
        !<>SUPPORTS(z, y) &
        !<>SUPPORTED(x) & !<>ATTACHED(y, z) &
        !<>SUPPORTS(y, x) & !<>SUPPORTS(y, z) &
        !<>SUPPORTS(x, z) & !<>SUPPORTS(z, x) ] ;
      [ ATTACHED(x, y) | ATTACHED(y, z) ] ;
      [ !<>ATTACHED(x, y) & !<>SUPPORTS(x, y) &
        SUPPORTS(z, y) &
        !<>SUPPORTED(x) & !<>ATTACHED(y, z) &
        !<>SUPPORTS(y, x) & !<>SUPPORTS(y, z) &
        !<>SUPPORTS(x, z) & !<>SUPPORTS(z, x) ] ]

DEFINE STACK(w, x, y, z) =
    !<>z=w & !<>z=x & !<>z=y &
    PUT-DOWN(w, x, y) & SUPPORTS(z, y) & !ATTACHED(z, y)

DEFINE UNSTACK(w, x, y, z) =
    !<>z=w & !<>z=x & !<>z=y &
    PICK-UP(w, x, y) & SUPPORTS(z, y) & !ATTACHED(z, y)

DEFINE MOVE(w, x, y, z) =
    !<>y=z & [ PICK-UP(w, x, y) ; PUT-DOWN(w, x, z) ]

DEFINE ASSEMBLE(w, x, y, z) =
    PUT-DOWN(w, y, z) &{<} STACK(w, x, y, z)

# The second conjunct reads "w later picks y up off of z"; see README.
DEFINE DISASSEMBLE(w, x, y, z) =
    UNSTACK(w, x, y, z) &{<} PICK-UP(w, y, z)
)LEX";
}

const Lexicon& builtin_lexicon() {
    static const Lexicon lex = [] {
        Lexicon l = parse_lexicon(builtin_lexicon_text());
        l.validate();
        return l;
    }();
    return lex;
}

const std::vector<std::string>& builtin_event_names() {
    static const std::vector<std::string> names = {"PICK-UP", "PUT-DOWN", "STACK", "UNSTACK",
                                                   "MOVE",    "ASSEMBLE", "DISASSEMBLE"};
    return names;
}

}  // namespace evl
