#ifndef EVL_EVENT_LOGIC_HPP
#define EVL_EVENT_LOGIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "evl/relation_maps.hpp"
#include "evl/spanning.hpp"

namespace evl {

// A nonempty subset of the thirteen Allen relations, as used by the
// subscripted connectives.
class RelationSet {
  public:
    RelationSet() = default;
    static RelationSet of(std::initializer_list<AllenRelation> rels);
    static RelationSet all();
    static RelationSet equal_only();    // the bare "and"
    static RelationSet meets_only();    // the ";" sequence operator
    static RelationSet overlap_set();   // the bare diamond: =,o,oi,s,si,f,fi,d,di

    void add(AllenRelation r) { bits_ |= bit(r); }
    bool contains(AllenRelation r) const { return bits_ & bit(r); }
    bool empty() const { return bits_ == 0; }
    std::size_t count() const;
    std::vector<AllenRelation> relations() const;  // in kAllRelations order
    std::string to_string() const;                 // "{m,<}"

    friend bool operator==(const RelationSet& a, const RelationSet& b) = default;

  private:
    static std::uint16_t bit(AllenRelation r) {
        return static_cast<std::uint16_t>(1u << static_cast<int>(r));
    }
    std::uint16_t bits_ = 0;
};

struct EventExpr;
using ExprPtr = std::shared_ptr<const EventExpr>;

// Event-logic abstract syntax: a primitive atom, !e, e | e, e &R e, or
// <>R e. The atom name "=" is the equality primitive over constants.
struct EventExpr {
    enum class Kind { Prim, Not, Or, And, Diamond };
    Kind kind = Kind::Prim;
    std::string name;               // Prim
    std::vector<std::string> args;  // Prim
    ExprPtr lhs;
    ExprPtr rhs;      // Or/And only
    RelationSet rels; // And/Diamond only
};

ExprPtr make_prim(std::string name, std::vector<std::string> args);
ExprPtr make_not(ExprPtr e);
ExprPtr make_or(ExprPtr a, ExprPtr b);
ExprPtr make_and(ExprPtr a, ExprPtr b, RelationSet rels);
ExprPtr make_diamond(ExprPtr e, RelationSet rels);

// Canonical textual form; parseable by parse_expression and usable as a
// structural identity key.
std::string render_expr(const EventExpr& e);
bool expr_equal(const EventExpr& a, const EventExpr& b);

struct GroundAtom {
    std::string name;
    std::vector<std::string> args;
    friend bool operator==(const GroundAtom& a, const GroundAtom& b) = default;
    friend auto operator<=>(const GroundAtom& a, const GroundAtom& b) = default;
};

// Map from ground primitive atoms to the sets of intervals over which they
// hold. Absent atoms denote the empty set; duplicate additions merge.
class Model {
  public:
    void add(const GroundAtom& atom, const SpanningSet& set);
    const SpanningSet& lookup(const GroundAtom& atom) const;
    const std::map<GroundAtom, SpanningSet>& entries() const { return entries_; }
    std::vector<std::string> constants() const;  // sorted, unique

    friend bool operator==(const Model& a, const Model& b) = default;

  private:
    std::map<GroundAtom, SpanningSet> entries_;
};

struct LexiconError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named compound event definitions with macro expansion. The reference
// graph must be acyclic; validate() reports a cycle if not.
class Lexicon {
  public:
    struct Definition {
        std::vector<std::string> params;
        ExprPtr body;
    };

    void define(const std::string& name, std::vector<std::string> params, ExprPtr body);
    bool has(const std::string& name) const { return defs_.count(name) != 0; }
    const Definition& at(const std::string& name) const;
    const std::vector<std::string>& names() const { return order_; }  // file order
    void validate() const;  // throws LexiconError on cyclic references

    // Body of `name` with arguments substituted and referenced definitions
    // inlined recursively; the result contains only primitive atoms.
    ExprPtr expand(const std::string& name, const std::vector<std::string>& args) const;
    // Same expansion applied to an arbitrary expression.
    ExprPtr expand_expr(const ExprPtr& e) const;

  private:
    ExprPtr expand_rec(const ExprPtr& e, std::vector<std::string>& stack) const;
    std::map<std::string, Definition> defs_;
    std::vector<std::string> order_;
};

// The four-member set covering every interval, one member per openness
// combination.
const SpanningSet& universal();

// E(M, expr): the set of intervals the expression coincidentally occurs
// over, by structural induction. Pure; safe to call concurrently on a
// shared model.
SpanningSet eval(const Model& m, const EventExpr& expr);

struct Occurrence {
    std::string event;
    std::vector<std::string> args;
    SpanningSet when;  // nonempty
};

// Expands and evaluates each named event type over every ordered tuple of
// distinct objects, reporting the nonempty results sorted by event name
// then argument tuple.
std::vector<Occurrence> classify(const Model& m, const Lexicon& lex,
                                 const std::vector<std::string>& event_names,
                                 const std::vector<std::string>& objects);

// The seven stock definitions plus the stream-name aliases.
const Lexicon& builtin_lexicon();
const char* builtin_lexicon_text();
const std::vector<std::string>& builtin_event_names();

}  // namespace evl

#endif
