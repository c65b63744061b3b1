#include "hyperext/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "hyperext/rigidity.hpp"

namespace hyperext {

ScriptError::ScriptError(SourcePos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

const std::vector<std::string>& command_verbs() {
    static const std::vector<std::string> verbs{"resolve", "ext",   "tor",     "grade",      "pdim",  "theta",   "chi",
                                                "xibar",   "emodule", "hilbert", "depth", "invariants", "check", "campaign"};
    return verbs;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"ext_rigidity", "self_ext",    "tor_rigidity",   "ext_tor",     "grade_drop",
                                                "xi_chi",       "ext_tensor", "chi_positivity", "xi_ext_bound"};
    return names;
}

namespace {

struct VerbShape {
    int operands;
    std::vector<std::string> keywords;
};

const std::map<std::string, VerbShape>& verb_shapes() {
    static const std::map<std::string, VerbShape> shapes{
        {"resolve", {1, {"length"}}}, {"ext", {2, {"max"}}},         {"tor", {2, {"max"}}},
        {"grade", {1, {}}},           {"pdim", {1, {}}},             {"theta", {2, {}}},
        {"chi", {2, {"at"}}},         {"xibar", {2, {"at"}}},        {"emodule", {1, {}}},
        {"hilbert", {1, {"from", "to"}}}, {"depth", {1, {}}},        {"invariants", {2, {}}},
    };
    return shapes;
}

const std::map<std::string, VerbShape>& check_shapes() {
    static const std::map<std::string, VerbShape> shapes{
        {"ext_rigidity", {2, {}}},   {"self_ext", {1, {}}},      {"tor_rigidity", {2, {}}},
        {"ext_tor", {2, {}}},        {"grade_drop", {1, {}}},    {"xi_chi", {2, {"at"}}},
        {"ext_tensor", {2, {"at"}}}, {"chi_positivity", {2, {}}}, {"xi_ext_bound", {2, {"at"}}},
    };
    return shapes;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view text, const ComputeLimits& limits) : text_(text), limits_(limits) {}

    SessionScript run() {
        SessionScript out;
        while (true) {
            skip();
            if (at_end()) break;
            SourcePos start = pos();
            std::string word = identifier("statement");
            if (word == "ring")
                out.statements.emplace_back(ring_statement(start));
            else if (word == "module")
                out.statements.emplace_back(module_statement(start));
            else if (std::find(command_verbs().begin(), command_verbs().end(), word) != command_verbs().end())
                out.statements.emplace_back(command_statement(word, start));
            else
                throw ScriptError(start, "unknown statement '" + word + "'");
        }
        return out;
    }

private:
    struct Binding {
        bool is_ring;
        RingPtr ring;
        std::optional<PresentedModule> module;
    };

    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[i_]; }

    SourcePos pos_at(std::size_t offset) const {
        SourcePos p;
        for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++p.line;
                p.column = 1;
            } else {
                ++p.column;
            }
        }
        return p;
    }
    SourcePos pos() const { return pos_at(i_); }

    void skip() {
        while (!at_end()) {
            char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') ++i_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ScriptError(pos(), msg); }

    std::string describe_here() const {
        if (at_end()) return "end of input";
        return std::string("'") + peek() + "'";
    }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "' but found " + describe_here());
        ++i_;
    }

    bool accept(char c) {
        skip();
        if (peek() != c) return false;
        ++i_;
        return true;
    }

    std::string identifier(const char* what) {
        skip();
        char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            fail(std::string("expected ") + what + " but found " + describe_here());
        std::size_t b = i_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++i_;
        return std::string(text_.substr(b, i_ - b));
    }

    bool next_is_identifier() {
        skip();
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    void keyword(const std::string& kw) {
        SourcePos at = (skip(), pos());
        std::string w = identifier(("'" + kw + "'").c_str());
        if (w != kw) throw ScriptError(at, "expected '" + kw + "' but found '" + w + "'");
    }

    long long integer(const char* what) {
        skip();
        std::size_t b = i_;
        if (peek() == '-') ++i_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            i_ = b;
            fail(std::string("expected ") + what + " but found " + describe_here());
        }
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + b, text_.data() + i_, v);
        if (ec != std::errc()) throw ScriptError(pos_at(b), std::string(what) + " out of range");
        return v;
    }

    void declare(const std::string& name, SourcePos at, Binding b) {
        if (bindings_.count(name)) throw ScriptError(at, "name '" + name + "' is already declared");
        bindings_.emplace(name, std::move(b));
    }

    const Binding& lookup(const std::string& name, SourcePos at) const {
        auto it = bindings_.find(name);
        if (it == bindings_.end()) throw ScriptError(at, "undeclared name '" + name + "'");
        return it->second;
    }

    RingStatement ring_statement(SourcePos start) {
        SourcePos name_pos = (skip(), pos());
        std::string name = identifier("ring name");
        expect('=');
        SourcePos rhs = (skip(), pos());
        std::string head = identifier("'poly' or a ring name");
        RingPtr ring;
        if (head == "poly") {
            ring = poly_ring();
        } else {
            const Binding& base = lookup(head, rhs);
            if (!base.is_ring) throw ScriptError(rhs, "'" + head + "' is a module, not a ring");
            if (base.ring->is_hypersurface()) throw ScriptError(rhs, "quotients are taken of polynomial rings only");
            expect('/');
            expect('(');
            auto [text, at] = raw_polynomial();
            Polynomial f = polynomial(*base.ring, text, at);
            expect(')');
            try {
                ring = make_hypersurface(base.ring, f);
            } catch (const std::invalid_argument& e) {
                throw ScriptError(pos_at(at), e.what());
            }
        }
        expect(';');
        declare(name, name_pos, Binding{true, ring, std::nullopt});
        return RingStatement{name, start, ring};
    }

    RingPtr poly_ring() {
        expect('(');
        std::optional<long long> p;
        std::vector<std::string> vars;
        MonomialOrder order = MonomialOrder::DegRevLex;
        bool have_vars = false, have_order = false;
        do {
            SourcePos at = (skip(), pos());
            std::string key = identifier("'p', 'vars' or 'order'");
            expect('=');
            if (key == "p") {
                if (p) throw ScriptError(at, "duplicate 'p'");
                SourcePos vat = (skip(), pos());
                p = integer("prime");
                if (*p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(std::max(0LL, *p))))
                    throw ScriptError(vat, "p must be a prime below 2^31");
            } else if (key == "vars") {
                if (have_vars) throw ScriptError(at, "duplicate 'vars'");
                have_vars = true;
                expect('[');
                std::set<std::string> seen;
                do {
                    SourcePos vat = (skip(), pos());
                    std::string v = identifier("variable name");
                    if (!seen.insert(v).second) throw ScriptError(vat, "duplicate variable '" + v + "'");
                    vars.push_back(v);
                } while (accept(','));
                expect(']');
                if (vars.size() > 8) throw ScriptError(at, "at most 8 variables are supported");
            } else if (key == "order") {
                if (have_order) throw ScriptError(at, "duplicate 'order'");
                have_order = true;
                SourcePos oat = (skip(), pos());
                std::string o = identifier("monomial order");
                auto parsed = parse_monomial_order(o);
                if (!parsed) throw ScriptError(oat, "unknown monomial order '" + o + "' (degrevlex, lex or deglex)");
                order = *parsed;
            } else {
                throw ScriptError(at, "unknown ring parameter '" + key + "'");
            }
        } while (accept(','));
        expect(')');
        if (!p) fail("ring needs 'p'");
        if (!have_vars) fail("ring needs 'vars'");
        return make_ring(static_cast<std::uint32_t>(*p), vars, order, limits_);
    }

    /// Text up to the next ',', ']', ')' or ';' outside parentheses.
    std::pair<std::string, std::size_t> raw_polynomial() {
        skip();
        std::size_t b = i_;
        int depth = 0;
        while (!at_end()) {
            char c = peek();
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && (c == ',' || c == ']' || c == ';' || c == '#')) break;
            if (c == '\n' && depth == 0) break;
            ++i_;
        }
        std::size_t e = i_;
        while (e > b && std::isspace(static_cast<unsigned char>(text_[e - 1]))) --e;
        if (e == b) throw ScriptError(pos_at(b), "expected polynomial but found " + describe_here());
        return {std::string(text_.substr(b, e - b)), b};
    }

    Polynomial polynomial(const RingContext& ring, const std::string& text, std::size_t at) {
        try {
            return ring.polys().parse(text);
        } catch (const PolynomialParseError& e) {
            throw ScriptError(pos_at(at + e.offset()), e.what());
        }
    }

    ModuleStatement module_statement(SourcePos start) {
        SourcePos name_pos = (skip(), pos());
        std::string name = identifier("module name");
        keyword("over");
        SourcePos rat = (skip(), pos());
        std::string ring_name = identifier("ring name");
        const Binding& rb = lookup(ring_name, rat);
        if (!rb.is_ring) throw ScriptError(rat, "'" + ring_name + "' is a module, not a ring");
        RingPtr ring = rb.ring;
        expect('=');
        keyword("coker");
        expect('[');
        std::vector<std::vector<Polynomial>> rows;
        std::vector<std::vector<std::size_t>> offsets;
        if (!accept(']')) {
            do {
                SourcePos row_at = (skip(), pos());
                expect('[');
                rows.emplace_back();
                offsets.emplace_back();
                if (!accept(']')) {
                    do {
                        auto [text, at] = raw_polynomial();
                        rows.back().push_back(polynomial(*ring, text, at));
                        offsets.back().push_back(at);
                    } while (accept(','));
                    expect(']');
                }
                if (rows.size() > 1 && rows.back().size() != rows.front().size())
                    throw ScriptError(row_at, "row " + std::to_string(rows.size()) + " has " +
                                                  std::to_string(rows.back().size()) + " entries, expected " +
                                                  std::to_string(rows.front().size()));
            } while (accept(','));
            expect(']');
        }
        std::vector<int> degrees(rows.size(), 0);
        skip();
        if (next_is_identifier()) {
            keyword("degrees");
            SourcePos dat = (skip(), pos());
            expect('[');
            std::vector<int> given;
            if (!accept(']')) {
                do given.push_back(static_cast<int>(integer("degree")));
                while (accept(','));
                expect(']');
            }
            if (given.size() != rows.size())
                throw ScriptError(dat, std::to_string(given.size()) + " degrees for " + std::to_string(rows.size()) +
                                           " generators");
            degrees = given;
        }
        expect(';');
        check_homogeneous(*ring, rows, offsets, degrees);
        PresentedModule M(matrix_with_inferred_sources(ring, degrees, rows));
        declare(name, name_pos, Binding{false, ring, M});
        return ModuleStatement{name, ring_name, start, M};
    }

    void check_homogeneous(const RingContext& ring, const std::vector<std::vector<Polynomial>>& rows,
                           const std::vector<std::vector<std::size_t>>& offsets, const std::vector<int>& degrees) {
        std::size_t ncols = rows.empty() ? 0 : rows.front().size();
        for (std::size_t j = 0; j < ncols; ++j) {
            std::optional<int> column;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                Polynomial e = ring.reduce(rows[i][j]);
                if (e.is_zero()) continue;
                auto d = e.homogeneous_degree();
                if (!d) throw ScriptError(pos_at(offsets[i][j]), "entry not homogeneous");
                int cd = degrees[i] + *d;
                if (column && *column != cd)
                    throw ScriptError(pos_at(offsets[i][j]),
                                      "entry has degree " + std::to_string(cd) + " in its column, expected " +
                                          std::to_string(*column));
                column = cd;
            }
        }
    }

    CommandStatement command_statement(const std::string& verb, SourcePos start) {
        CommandStatement c;
        c.verb = verb;
        c.pos = start;
        c.text = verb;
        const VerbShape* shape = nullptr;
        if (verb == "campaign") {
            SourcePos at = (skip(), pos());
            c.target = identifier("campaign name");
            auto names = campaign_names();
            if (std::find(names.begin(), names.end(), c.target) == names.end())
                throw ScriptError(at, "unknown campaign '" + c.target + "'");
            c.text += " " + c.target;
            static const VerbShape campaign_shape{0, {"trials", "seed"}};
            shape = &campaign_shape;
        } else if (verb == "check") {
            SourcePos at = (skip(), pos());
            c.target = identifier("check name");
            auto it = check_shapes().find(c.target);
            if (it == check_shapes().end()) throw ScriptError(at, "unknown check '" + c.target + "'");
            c.text += " " + c.target;
            shape = &it->second;
        } else {
            shape = &verb_shapes().at(verb);
        }
        RingPtr ring;
        for (int k = 0; k < shape->operands; ++k) {
            SourcePos at = (skip(), pos());
            std::string name = identifier("module or ring name");
            const Binding& b = lookup(name, at);
            PresentedModule M = b.is_ring ? PresentedModule::free(b.ring, {0}) : *b.module;
            if (ring && ring != b.ring && !ring->same_ring(*b.ring))
                throw ScriptError(at, "'" + name + "' lives over a different ring");
            if (!ring) ring = b.ring;
            c.operand_names.push_back(name);
            c.operands.push_back(std::move(M));
            c.text += " " + name;
        }
        while (true) {
            skip();
            if (peek() == ';') break;
            SourcePos at = pos();
            bool keywords = !shape->keywords.empty() || verb == "campaign";
            std::string kw = identifier(keywords ? "';' or a keyword" : "';'");
            if (verb == "campaign" && kw == "over") {
                if (c.over) throw ScriptError(at, "duplicate 'over'");
                SourcePos rat = (skip(), pos());
                std::string rn = identifier("ring name");
                const Binding& b = lookup(rn, rat);
                if (!b.is_ring) throw ScriptError(rat, "'" + rn + "' is a module, not a ring");
                c.over = rn;
                c.over_ring = b.ring;
                c.text += " over " + rn;
                continue;
            }
            if (std::find(shape->keywords.begin(), shape->keywords.end(), kw) == shape->keywords.end())
                throw ScriptError(at, "unexpected '" + kw + "' in " + verb);
            if (c.options.count(kw)) throw ScriptError(at, "duplicate '" + kw + "'");
            SourcePos vat = (skip(), pos());
            long long v = integer("integer");
            if (kw != "from" && kw != "to" && v < 0) throw ScriptError(vat, "'" + kw + "' must be non-negative");
            c.options[kw] = v;
            c.text += " " + kw + " " + std::to_string(v);
        }
        expect(';');
        return c;
    }

    std::string_view text_;
    ComputeLimits limits_;
    std::size_t i_ = 0;
    std::map<std::string, Binding> bindings_;
};

}  // namespace

SessionScript parse_script(std::string_view text, const ComputeLimits& limits) { return Parser(text, limits).run(); }

}  // namespace hyperext
