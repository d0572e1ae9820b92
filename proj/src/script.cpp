//-----------------------------------------------------------------------------
// .geo parser and canonical serializer. The tokenizer tracks line/column for
// every token so each diagnostic points at the offending text.
//-----------------------------------------------------------------------------
#include "zirkel/script.hpp"

#include <cctype>
#include <map>
#include <set>

namespace zirkel {

namespace {

enum class Tok { Ident, Number, Punct, Comment, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string &text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= text_.size()) {
            return t;
        }
        char c = text_[pos_];
        if (c == '#') {
            t.kind = Tok::Comment;
            while (pos_ < text_.size() && text_[pos_] != '\n') {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        bool neg_number = c == '-' && pos_ + 1 < text_.size() &&
                          std::isdigit(static_cast<unsigned char>(
                              text_[pos_ + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || neg_number) {
            t.kind = Tok::Number;
            t.text += c;
            advance();
            bool seen_dot = false, seen_slash = false;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d)) ||
                    (d == '.' && !seen_dot && !seen_slash) ||
                    (d == '/' && !seen_dot && !seen_slash)) {
                    seen_dot = seen_dot || d == '.';
                    seen_slash = seen_slash || d == '/';
                    t.text += d;
                    advance();
                } else {
                    break;
                }
            }
            return t;
        }
        if (c == '(' || c == ')' || c == ',' || c == '=' || c == '.') {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }

    int line() const { return line_; }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string &text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::string trimmed(const std::string &s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

class Parser {
  public:
    explicit Parser(const std::string &text) : lex_(text) { shift(); }

    ConstructionScript run() {
        ConstructionScript script;
        for (;;) {
            while (cur_.kind == Tok::Comment) {
                // `# rusty` on its own marks the fixed-compass claim.
                if (trimmed(cur_.text.substr(1)) == "rusty") {
                    script.rusty = true;
                }
                shift();
            }
            if (cur_.kind == Tok::End) {
                break;
            }
            script.steps.push_back(statement());
        }
        return script;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, cur_.line, cur_.column);
    }

    void shift() { cur_ = lex_.next(); }

    Token expect(Tok kind, const std::string &what) {
        if (cur_.kind != kind) {
            fail("expected " + what + ", found '" + show(cur_) + "'");
        }
        Token t = cur_;
        shift();
        return t;
    }

    void expect_punct(char c) {
        if (cur_.kind != Tok::Punct || cur_.text[0] != c) {
            fail(std::string("expected '") + c + "', found '" + show(cur_) +
                 "'");
        }
        shift();
    }

    static std::string show(const Token &t) {
        return t.kind == Tok::End ? "end of input" : t.text;
    }

    std::string keyword() {
        if (cur_.kind == Tok::Ident) {
            return cur_.text;
        }
        fail("expected a statement keyword (given/point/line/circle), found '" +
             show(cur_) + "'");
    }

    std::string fresh_name() {
        Token t = expect(Tok::Ident, "a name");
        if (defined_.count(t.text)) {
            throw ParseError("duplicate name '" + t.text + "'", t.line,
                             t.column);
        }
        return t.text;
    }

    std::string known_name() {
        if (cur_.kind == Tok::Number) {
            fail("bare number '" + cur_.text +
                 "' where a point name is required (lengths must be "
                 "distances between named points)");
        }
        Token t = expect(Tok::Ident, "a name");
        if (!defined_.count(t.text)) {
            throw ParseError("undefined name '" + t.text + "'", t.line,
                             t.column);
        }
        return t.text;
    }

    std::string number() {
        Token t = expect(Tok::Number, "a number");
        try {
            parse_real(t.text);
        } catch (const Error &e) {
            throw ParseError(e.what(), t.line, t.column);
        }
        return t.text;
    }

    Selector selector() {
        Token t = expect(Tok::Ident, "a selector");
        const std::map<std::string, SelectorMode> modes = {
            {"upper", SelectorMode::Upper}, {"lower", SelectorMode::Lower},
            {"left", SelectorMode::Left},   {"right", SelectorMode::Right},
            {"near", SelectorMode::Near},   {"far", SelectorMode::Far},
            {"first", SelectorMode::First}, {"second", SelectorMode::Second},
        };
        auto it = modes.find(t.text);
        if (it == modes.end()) {
            throw ParseError("unknown selector '" + t.text + "'", t.line,
                             t.column);
        }
        Selector sel;
        sel.mode = it->second;
        if (sel.mode == SelectorMode::Near || sel.mode == SelectorMode::Far) {
            sel.ref = known_name();
        }
        return sel;
    }

    ConstructionStep statement() {
        Token kw = cur_;
        std::string k = keyword();
        shift();

        ConstructionStep s;
        s.line = kw.line;
        s.column = kw.column;
        s.output = fresh_name();
        expect_punct('=');

        if (k == "given") {
            s.kind = StepKind::Given;
            expect_punct('(');
            s.x_text = number();
            expect_punct(',');
            s.y_text = number();
            expect_punct(')');
        } else if (k == "line") {
            s.kind = StepKind::LineThrough;
            Token fn = expect(Tok::Ident, "'line'");
            if (fn.text != "line") {
                throw ParseError("expected 'line(...)', found '" + fn.text +
                                 "'", fn.line, fn.column);
            }
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            s.inputs.push_back(known_name());
            expect_punct(')');
        } else if (k == "circle") {
            Token fn = expect(Tok::Ident, "'circle'");
            if (fn.text != "circle") {
                throw ParseError("expected 'circle(...)', found '" + fn.text +
                                 "'", fn.line, fn.column);
            }
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            if (cur_.kind == Tok::Ident && cur_.text == "dist") {
                shift();
                s.kind = StepKind::CircleRadius;
                expect_punct('(');
                s.inputs.push_back(known_name());
                expect_punct(',');
                s.inputs.push_back(known_name());
                expect_punct(')');
            } else {
                s.kind = StepKind::CircleThrough;
                s.inputs.push_back(known_name());
            }
            expect_punct(')');
        } else if (k == "point") {
            point_expr(s);
        } else {
            throw ParseError("unknown statement keyword '" + k + "'", kw.line,
                             kw.column);
        }

        // A trailing comment on the same line may carry macro provenance.
        if (cur_.kind == Tok::Comment && cur_.line == s.line) {
            std::string body = trimmed(cur_.text.substr(1));
            const std::string tag = "from macro ";
            if (body.rfind(tag, 0) == 0) {
                s.provenance = trimmed(body.substr(tag.size()));
            }
            shift();
        }

        defined_.insert(s.output);
        return s;
    }

    void point_expr(ConstructionStep &s) {
        Token fn = expect(Tok::Ident, "a point expression");
        if (fn.text == "intersect") {
            s.kind = StepKind::Intersect;
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            s.inputs.push_back(known_name());
            expect_punct(')');
            Token pk = expect(Tok::Ident, "'pick'");
            if (pk.text != "pick") {
                throw ParseError("intersection needs an explicit 'pick "
                                 "<selector>' branch choice",
                                 pk.line, pk.column);
            }
            s.selector = selector();
        } else if (fn.text == "midpoint") {
            s.kind = StepKind::Midpoint;
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            s.inputs.push_back(known_name());
            expect_punct(')');
        } else if (fn.text == "trisect3") {
            s.kind = StepKind::Trisect3;
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            s.inputs.push_back(known_name());
            expect_punct(')');
            expect_punct('.');
            Token b = expect(Tok::Number, "'1' or '2'");
            if (b.text != "1" && b.text != "2") {
                throw ParseError("trisect3 branch must be .1 or .2", b.line,
                                 b.column);
            }
            s.branch = b.text == "1" ? 1 : 2;
        } else if (fn.text == "perp_foot") {
            s.kind = StepKind::PerpFoot;
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            s.inputs.push_back(known_name());
            expect_punct(')');
        } else if (fn.text == "rotate") {
            s.kind = StepKind::Rotate;
            expect_punct('(');
            s.inputs.push_back(known_name());
            expect_punct(',');
            s.angle_text = number();
            expect_punct(',');
            s.inputs.push_back(known_name());
            expect_punct(')');
        } else {
            throw ParseError("unknown point expression '" + fn.text + "'",
                             fn.line, fn.column);
        }
    }

    Lexer lex_;
    Token cur_;
    std::set<std::string> defined_;
};

} // namespace

ConstructionScript parse(const std::string &text) {
    ConstructionScript script = Parser(text).run();
    validate(script); // structural checks the grammar alone cannot express
    return script;
}

std::string serialize(const ConstructionScript &script) {
    std::string out;
    if (script.rusty) {
        out += "# rusty\n";
    }
    for (const ConstructionStep &s : script.steps) {
        switch (s.kind) {
        case StepKind::Given:
            out += "given " + s.output + " = (" + s.x_text + ", " + s.y_text +
                   ")";
            break;
        case StepKind::LineThrough:
            out += "line " + s.output + " = line(" + s.inputs[0] + ", " +
                   s.inputs[1] + ")";
            break;
        case StepKind::CircleThrough:
            out += "circle " + s.output + " = circle(" + s.inputs[0] + ", " +
                   s.inputs[1] + ")";
            break;
        case StepKind::CircleRadius:
            out += "circle " + s.output + " = circle(" + s.inputs[0] +
                   ", dist(" + s.inputs[1] + ", " + s.inputs[2] + "))";
            break;
        case StepKind::Intersect:
            out += "point " + s.output + " = intersect(" + s.inputs[0] + ", " +
                   s.inputs[1] + ") pick ";
            switch (s.selector.mode) {
            case SelectorMode::Upper:
                out += "upper";
                break;
            case SelectorMode::Lower:
                out += "lower";
                break;
            case SelectorMode::Left:
                out += "left";
                break;
            case SelectorMode::Right:
                out += "right";
                break;
            case SelectorMode::Near:
                out += "near " + s.selector.ref;
                break;
            case SelectorMode::Far:
                out += "far " + s.selector.ref;
                break;
            case SelectorMode::First:
                out += "first";
                break;
            case SelectorMode::Second:
                out += "second";
                break;
            }
            break;
        case StepKind::Midpoint:
            out += "point " + s.output + " = midpoint(" + s.inputs[0] + ", " +
                   s.inputs[1] + ")";
            break;
        case StepKind::Trisect3:
            out += "point " + s.output + " = trisect3(" + s.inputs[0] + ", " +
                   s.inputs[1] + ")." + std::to_string(s.branch);
            break;
        case StepKind::PerpFoot:
            out += "point " + s.output + " = perp_foot(" + s.inputs[0] + ", " +
                   s.inputs[1] + ")";
            break;
        case StepKind::Rotate:
            out += "point " + s.output + " = rotate(" + s.inputs[0] + ", " +
                   s.angle_text + ", " + s.inputs[1] + ")";
            break;
        }
        if (!s.provenance.empty()) {
            out += " # from macro " + s.provenance;
        }
        out += "\n";
    }
    return out;
}

} // namespace zirkel
