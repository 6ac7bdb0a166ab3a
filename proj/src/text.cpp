#include "evl/text.hpp"

#include <algorithm>
#include <cctype>

namespace evl {

namespace {

bool symbol_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '?';
}
bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '?' || c == '-' ||
           c == '.';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

// Character cursor with line/column tracking shared by the parsers.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    char comment_char;

    explicit Cursor(std::string_view t, char comment) : text(t), comment_char(comment) {}

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char peek2() const { return pos + 1 < text.size() ? text[pos + 1] : '\0'; }

    char take() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!done()) {
            char c = peek();
            if (c == comment_char) {
                while (!done() && peek() != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        take();
        return true;
    }

    std::string symbol() {
        skip_ws();
        if (!symbol_start(peek())) fail("expected a name");
        std::string out;
        while (!done() && symbol_char(peek())) out += take();
        return out;
    }

    // Symbol, number or quoted-nothing: used for atom arguments.
    std::string token() {
        skip_ws();
        if (symbol_start(peek())) return symbol();
        if (digit(peek()) || (peek() == '-' && digit(peek2()))) {
            std::string out;
            if (peek() == '-') out += take();
            while (!done() && (digit(peek()) || peek() == '.')) out += take();
            return out;
        }
        fail("expected a token");
    }

    Endpoint endpoint() {
        skip_ws();
        std::string out;
        if (peek() == '-' || peek() == '+') out += take();
        while (!done() && (digit(peek()) || peek() == '.' ||
                           std::isalpha(static_cast<unsigned char>(peek()))))
            out += take();
        if (out == "inf" || out == "+inf") return Endpoint::pos_inf();
        if (out == "-inf") return Endpoint::neg_inf();
        try {
            return Endpoint(Rational::parse(out));
        } catch (const std::invalid_argument&) {
            fail("bad number '" + out + "'");
        }
    }
};

RawSpanningInterval run_raw(const Endpoint& a, const Endpoint& b) {
    RawSpanningInterval r;
    r.lo_lo = a;
    r.lo_hi = b;
    r.hi_lo = a;
    r.hi_hi = b;
    r.lo_lo_closed = r.lo_hi_closed = r.hi_lo_closed = r.hi_hi_closed = true;
    r.iv_lo_closed = true;
    r.iv_hi_closed = false;
    return r;
}

// One spanning interval in either written form. Returns nullopt when the
// denotation is empty; sets *text_out to the consumed text for warnings.
std::optional<SpanningInterval> parse_si(Cursor& c, std::string* text_out) {
    c.skip_ws();
    const std::size_t start_pos = c.pos;
    auto open_bracket = [&c]() -> bool {
        c.skip_ws();
        if (c.peek() == '[') {
            c.take();
            return true;
        }
        if (c.peek() == '(') {
            c.take();
            return true;
        }
        c.fail("expected '[' or '('");
    };
    auto open_closed = [&c]() -> bool {
        c.skip_ws();
        if (c.peek() == '[') {
            c.take();
            return true;
        }
        if (c.peek() == '(') {
            c.take();
            return false;
        }
        c.fail("expected '[' or '('");
    };
    auto close_closed = [&c]() -> bool {
        c.skip_ws();
        if (c.peek() == ']') {
            c.take();
            return true;
        }
        if (c.peek() == ')') {
            c.take();
            return false;
        }
        c.fail("expected ']' or ')'");
    };

    const bool alpha = open_closed();
    const bool gamma = open_closed();
    const Endpoint first = c.endpoint();
    c.skip_ws();
    std::optional<SpanningInterval> result;
    if (c.peek() == ':') {
        // Run shorthand [[a:b]]: the intervals [q,r) with both endpoints
        // drawn from [a,b].
        if (!alpha || !gamma) c.fail("run shorthand uses '[['");
        c.take();
        const Endpoint second = c.endpoint();
        if (!c.accept(']') || !c.accept(']')) c.fail("expected ']]'");
        result = SpanningInterval::normalized(run_raw(first, second));
    } else {
        RawSpanningInterval raw;
        raw.iv_lo_closed = alpha;
        raw.lo_lo = first;
        raw.lo_lo_closed = gamma;
        c.expect(',');
        raw.lo_hi = c.endpoint();
        raw.lo_hi_closed = close_closed();
        c.expect(',');
        raw.hi_lo_closed = open_closed();
        raw.hi_lo = c.endpoint();
        c.expect(',');
        raw.hi_hi = c.endpoint();
        raw.hi_hi_closed = close_closed();
        raw.iv_hi_closed = close_closed();
        result = SpanningInterval::normalized(raw);
    }
    if (text_out) {
        std::string_view consumed = c.text.substr(start_pos, c.pos - start_pos);
        text_out->assign(consumed.begin(), consumed.end());
    }
    return result;
}

}  // namespace

ModelParseResult parse_model(std::string_view text) {
    Cursor c(text, ';');
    ModelParseResult out;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        c.expect('(');
        GroundAtom atom;
        atom.name = c.symbol();
        c.skip_ws();
        while (c.peek() != ')') {
            atom.args.push_back(c.token());
            c.skip_ws();
        }
        c.expect(')');
        c.expect('@');
        c.expect('{');
        std::vector<SpanningInterval> members;
        while (true) {
            std::string si_text;
            auto si = parse_si(c, &si_text);
            if (si) {
                members.push_back(*si);
            } else {
                std::string rendered = "(" + atom.name;
                for (const auto& a : atom.args) rendered += " " + a;
                rendered += ")";
                out.warnings.push_back("skipped empty spanning interval " + si_text + " for " +
                                       rendered);
            }
            c.skip_ws();
            if (c.peek() == ',') {
                c.take();
                continue;
            }
            break;
        }
        c.expect('}');
        if (!members.empty()) out.model.add(atom, SpanningSet::of(std::move(members)));
    }
    return out;
}

std::string render_spanning_paper(const SpanningInterval& s) {
    std::string out;
    if (s.lo_lo() == s.hi_lo() && s.lo_hi() == s.hi_hi()) {
        out = "[[" + s.lo_lo().to_string() + ":" + s.lo_hi().to_string() + "]]";
    } else {
        out = "[[" + s.lo_lo().to_string() + "," + s.lo_hi().to_string() + "],[" +
              s.hi_lo().to_string() + "," + s.hi_hi().to_string() + "]]";
    }
    return out;
}

std::string render_set_paper(const SpanningSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& m : s.members()) {
        if (!first) out += ", ";
        out += render_spanning_paper(m);
        first = false;
    }
    return out + "}";
}

std::string render_spanning_file(const SpanningInterval& s) {
    if (s.iv_lo_closed() && !s.iv_hi_closed() && s.lo_lo() == s.hi_lo() &&
        s.lo_hi() == s.hi_hi() && s.lo_lo().is_finite() && s.lo_hi().is_finite()) {
        auto run = SpanningInterval::normalized(run_raw(s.lo_lo(), s.lo_hi()));
        if (run && *run == s)
            return "[[" + s.lo_lo().to_string() + ":" + s.lo_hi().to_string() + "]]";
    }
    return s.to_string();
}

std::string render_model(const Model& m) {
    std::string out;
    for (const auto& [atom, set] : m.entries()) {
        out += "(" + atom.name;
        for (const auto& a : atom.args) out += " " + a;
        out += ")@{";
        bool first = true;
        for (const auto& member : set.members()) {
            if (!first) out += ", ";
            out += render_spanning_file(member);
            first = false;
        }
        out += "}\n";
    }
    return out;
}

std::string render_occurrence(const Occurrence& o) {
    std::string out = "(" + o.event;
    for (const auto& a : o.args) out += " " + a;
    return out + ")@" + render_set_paper(o.when);
}

namespace {

RelationSet parse_relation_set(Cursor& c) {
    c.expect('{');
    RelationSet rels;
    while (true) {
        c.skip_ws();
        std::string code;
        if (c.peek() == '=' || c.peek() == '<' || c.peek() == '>') {
            code += c.take();
        } else {
            if (!symbol_start(c.peek())) c.fail("expected a relation");
            while (symbol_char(c.peek())) code += c.take();
        }
        auto r = relation_from_code(code);
        if (!r) c.fail("unknown relation '" + code + "'");
        rels.add(*r);
        c.skip_ws();
        if (c.peek() == ',') {
            c.take();
            continue;
        }
        break;
    }
    c.expect('}');
    if (rels.empty()) c.fail("empty relation set");
    return rels;
}

ExprPtr parse_or_level(Cursor& c);

ExprPtr parse_primary(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '!') {
        c.take();
        return make_not(parse_primary(c));
    }
    if (c.peek() == '<' && c.peek2() == '>') {
        c.take();
        c.take();
        c.skip_ws();
        RelationSet rels =
            c.peek() == '{' ? parse_relation_set(c) : RelationSet::overlap_set();
        return make_diamond(parse_primary(c), rels);
    }
    if (c.peek() == '(') {
        c.take();
        ExprPtr e = parse_or_level(c);
        c.expect(')');
        return e;
    }
    if (c.peek() == '[') {
        c.take();
        ExprPtr e = parse_or_level(c);
        c.expect(']');
        return e;
    }
    if (!symbol_start(c.peek())) c.fail("expected an expression");
    std::string name = c.symbol();
    if (name == "NOT") return make_not(parse_primary(c));
    c.skip_ws();
    if (c.peek() == '(') {
        c.take();
        std::vector<std::string> args;
        c.skip_ws();
        if (c.peek() != ')') {
            while (true) {
                args.push_back(c.token());
                c.skip_ws();
                if (c.peek() == ',') {
                    c.take();
                    continue;
                }
                break;
            }
        }
        c.expect(')');
        return make_prim(std::move(name), std::move(args));
    }
    if (c.peek() == '=') {
        c.take();
        std::string rhs = c.token();
        return make_prim("=", {std::move(name), std::move(rhs)});
    }
    return make_prim(std::move(name), {});
}

// The &/; level; left-associative, mixed operators allowed.
ExprPtr parse_and_level(Cursor& c) {
    ExprPtr lhs = parse_primary(c);
    while (true) {
        c.skip_ws();
        if (c.peek() == '&') {
            c.take();
            c.skip_ws();
            RelationSet rels =
                c.peek() == '{' ? parse_relation_set(c) : RelationSet::equal_only();
            lhs = make_and(lhs, parse_primary(c), rels);
            continue;
        }
        if (c.peek() == ';') {
            c.take();
            lhs = make_and(lhs, parse_primary(c), RelationSet::meets_only());
            continue;
        }
        if (symbol_start(c.peek())) {
            // Peek a keyword without consuming an atom.
            const std::size_t save_pos = c.pos;
            const int save_line = c.line, save_col = c.col;
            std::string word = c.symbol();
            if (word == "AND") {
                c.skip_ws();
                RelationSet rels =
                    c.peek() == '{' ? parse_relation_set(c) : RelationSet::equal_only();
                lhs = make_and(lhs, parse_primary(c), rels);
                continue;
            }
            c.pos = save_pos;
            c.line = save_line;
            c.col = save_col;
        }
        break;
    }
    return lhs;
}

ExprPtr parse_or_level(Cursor& c) {
    ExprPtr lhs = parse_and_level(c);
    while (true) {
        c.skip_ws();
        if (c.peek() == '|') {
            c.take();
            lhs = make_or(lhs, parse_and_level(c));
            continue;
        }
        if (symbol_start(c.peek())) {
            const std::size_t save_pos = c.pos;
            const int save_line = c.line, save_col = c.col;
            std::string word = c.symbol();
            if (word == "OR") {
                lhs = make_or(lhs, parse_and_level(c));
                continue;
            }
            c.pos = save_pos;
            c.line = save_line;
            c.col = save_col;
        }
        break;
    }
    return lhs;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) {
    Cursor c(text, '#');
    ExprPtr e = parse_or_level(c);
    c.skip_ws();
    if (!c.done()) c.fail("unexpected trailing input");
    return e;
}

Lexicon parse_lexicon(std::string_view text) {
    Cursor c(text, '#');
    Lexicon lex;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        std::string keyword = c.symbol();
        if (keyword != "DEFINE") c.fail("expected DEFINE");
        std::string name = c.symbol();
        c.expect('(');
        std::vector<std::string> params;
        c.skip_ws();
        if (c.peek() != ')') {
            while (true) {
                params.push_back(c.symbol());
                c.skip_ws();
                if (c.peek() == ',') {
                    c.take();
                    continue;
                }
                break;
            }
        }
        c.expect(')');
        c.expect('=');
        ExprPtr body = parse_or_level(c);
        try {
            lex.define(name, std::move(params), std::move(body));
        } catch (const LexiconError& err) {
            c.fail(err.what());
        }
    }
    lex.validate();
    return lex;
}

std::vector<RawPredicateStream> parse_raw_streams(std::string_view text) {
    std::vector<RawPredicateStream> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto sc = line.find(';'); sc != std::string_view::npos) line = line.substr(0, sc);
        std::vector<std::string> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            fields.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (fields.empty()) continue;
        if (fields.size() < 3)
            throw ParseError("raw stream record needs NAME, START and BITS", line_no, 1);
        RawPredicateStream s;
        s.name = fields.front();
        const std::string& bits = fields.back();
        const std::string& start = fields[fields.size() - 2];
        s.args.assign(fields.begin() + 1, fields.end() - 2);
        try {
            Rational r = Rational::parse(start);
            if (!r.is_integer()) throw std::invalid_argument("frame index");
            s.start = r.num();
        } catch (const std::invalid_argument&) {
            throw ParseError("bad start frame '" + start + "'", line_no, 1);
        }
        for (char b : bits) {
            if (b != '0' && b != '1')
                throw ParseError("bit string must be over {0,1}", line_no, 1);
            s.bits.push_back(b == '1');
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<bool> majority_filter_bits(const std::vector<bool>& bits) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(bits.size());
    std::vector<bool> out(bits.size());
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, t - 2);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, t + 2);
        int ones = 0;
        for (std::ptrdiff_t i = lo; i <= hi; ++i) ones += bits[i] ? 1 : 0;
        const int len = static_cast<int>(hi - lo + 1);
        if (2 * ones > len)
            out[t] = true;
        else if (2 * ones < len)
            out[t] = false;
        else
            out[t] = bits[t];  // tie keeps the original sample
    }
    return out;
}

Model majority_filter(const std::vector<RawPredicateStream>& streams,
                      std::vector<std::string>* warnings) {
    Model m;
    for (const auto& s : streams) {
        const std::vector<bool> filtered = majority_filter_bits(s.bits);
        std::vector<SpanningInterval> members;
        std::size_t i = 0;
        while (i < filtered.size()) {
            if (!filtered[i]) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 < filtered.size() && filtered[j + 1]) ++j;
            const Endpoint a(Rational(s.start + static_cast<std::int64_t>(i)));
            const Endpoint b(Rational(s.start + static_cast<std::int64_t>(j)));
            if (auto si = SpanningInterval::normalized(run_raw(a, b))) {
                members.push_back(*si);
            } else if (warnings) {
                warnings->push_back("dropped single-frame run at " + a.to_string() + " for " +
                                    s.name);
            }
            i = j + 1;
        }
        if (!members.empty())
            m.add(GroundAtom{s.name, s.args}, SpanningSet::of(std::move(members)));
    }
    return m;
}

}  // namespace evl
