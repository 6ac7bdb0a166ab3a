#ifndef EVL_TEXT_HPP
#define EVL_TEXT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evl/event_logic.hpp"

namespace evl {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};

// Model files: records of the form
//   (NAME ARG*)@{si, si, ...}
// with ';' comments. A spanning interval is either the run shorthand
// [[a:b]], denoting the intervals [q,r) with a <= q < r <= b (the
// frame-time reading of a stream that holds over frames a..b), or the
// six-bracket form [[i,j],[k,l]] whose bracket shapes give the six
// openness flags literally. Entries that normalize to nothing are skipped
// with a warning; duplicate atoms merge.
struct ModelParseResult {
    Model model;
    std::vector<std::string> warnings;
};
ModelParseResult parse_model(std::string_view text);

// Round-trip-faithful file form of a model.
std::string render_model(const Model& m);

// Display form used by the classifier: endpoint values only, square
// brackets, shorthand [[i:l]] when both ranges coincide.
std::string render_spanning_paper(const SpanningInterval& s);
std::string render_set_paper(const SpanningSet& s);  // "{a, b}"

// File form of one spanning interval: run shorthand when the member is an
// ingested run, all-square six-bracket form when all flags are closed,
// exact bracket form otherwise.
std::string render_spanning_file(const SpanningInterval& s);

// "(NAME A B)@{...}" in paper display form.
std::string render_occurrence(const Occurrence& o);

// Expression / lexicon surface syntax:
//   !e NOT e        negation
//   e | e, e OR e   disjunction
//   e & e, e AND e  conjunction over {=}; e &{m,<} e with explicit set
//   e ; e           conjunction over {m}
//   <>e, <>{<}e     diamond (default set: =,o,oi,s,si,f,fi,d,di)
//   a=b             equality atom over two constants
// Unary operators bind tightest, then the &/; family (left-associative),
// then |. Both () and [] group. '#' starts a comment.
ExprPtr parse_expression(std::string_view text);

// Lexicon files: DEFINE NAME(p1, ...) = body, one or more.
Lexicon parse_lexicon(std::string_view text);

// One raw per-frame boolean stream: NAME ARG* START BITS.
struct RawPredicateStream {
    std::string name;
    std::vector<std::string> args;
    std::int64_t start = 0;
    std::vector<bool> bits;
};
std::vector<RawPredicateStream> parse_raw_streams(std::string_view text);

// Majority vote of the five-frame window centered on each frame, clipped
// at the stream edges, ties keeping the original bit.
std::vector<bool> majority_filter_bits(const std::vector<bool>& bits);

// Filters every stream and merges the resulting true-run entries into a
// model: a maximal run over frames a..b becomes the run shorthand [[a:b]].
Model majority_filter(const std::vector<RawPredicateStream>& streams,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace evl

#endif
