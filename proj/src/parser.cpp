#include "llsem/parser.hpp"

#include <cctype>

namespace llsem {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Cursor {
public:
    explicit Cursor(std::string_view text, bool comments = true) : text_(text), comments_(comments) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';' && comments_) {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool peek_str(std::string_view s) {
        skip_space();
        return text_.substr(pos_, s.size()) == s;
    }

    bool accept(std::string_view s) {
        if (!peek_str(s)) return false;
        pos_ += s.size();
        return true;
    }

    void expect(std::string_view s) {
        if (!accept(s)) error("expected '" + std::string(s) + "'");
    }

    std::string ident() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) error("expected identifier");
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // Next run of non-delimiter characters, used for keywords and numbers.
    std::string word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' || c == ']' ||
                c == ',' || c == ';') {
                break;
            }
            ++pos_;
        }
        if (start == pos_) error("unexpected character");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t index() {
        skip_space();
        std::size_t start = pos_;
        std::string w = word();
        for (char c : w) {
            if (!std::isdigit(static_cast<unsigned char>(c))) error_at("expected a context index", start, pos_);
        }
        return std::stoul(w);
    }

    std::size_t pos() {
        skip_space();
        return pos_;
    }
    std::size_t raw_pos() const { return pos_; }

    [[noreturn]] void error(const std::string& msg) {
        std::size_t end = pos_ < text_.size() ? pos_ + 1 : pos_;
        throw ParseError(msg, {pos_, end});
    }
    [[noreturn]] void error_at(const std::string& msg, std::size_t start, std::size_t end) {
        throw ParseError(msg, {start, std::min(end, text_.size())});
    }

private:
    std::string_view text_;
    bool comments_;
    std::size_t pos_ = 0;
};

Formula formula(Cursor& c);

bool keyword_ahead(Cursor& c, std::string_view kw) {
    if (!c.peek_str(kw)) return false;
    // make sure the keyword is not a prefix of a longer identifier
    Cursor probe = c;
    std::string w = probe.ident();
    return w == kw;
}

Formula unary(Cursor& c) {
    if (c.accept("!")) return Formula::bang(unary(c));
    if (c.accept("(")) {
        Formula f = formula(c);
        c.expect(")");
        return f;
    }
    if (c.peek() == '1') {
        c.accept("1");
        return Formula::one();
    }
    if (keyword_ahead(c, "all")) c.error("'all' must be parenthesised here");
    return Formula::var(c.ident());
}

Formula tensor(Cursor& c) {
    Formula f = unary(c);
    while (c.accept("*")) f = Formula::tensor(f, unary(c));
    return f;
}

Formula formula(Cursor& c) {
    if (keyword_ahead(c, "all")) {
        c.ident();
        std::string x = c.ident();
        c.expect(".");
        return Formula::forall(x, formula(c));
    }
    Formula f = tensor(c);
    if (c.accept("-o")) return Formula::lolli(f, formula(c));
    return f;
}

Proof proof(Cursor& c) {
    std::size_t start = c.pos();
    c.expect("(");
    std::size_t kw_start = c.pos();
    std::string kw = c.word();
    auto rule = rule_from_keyword(kw);
    if (!rule) c.error_at("unknown rule '" + kw + "'", kw_start, c.raw_pos());

    RuleTag tag{.rule = *rule};
    switch (*rule) {
        case Rule::Axiom: tag.formula = unary(c); break;
        case Rule::Exchange:
        case Rule::Cut:
        case Rule::TensorL:
        case Rule::LolliL:
        case Rule::Dereliction:
        case Rule::Contraction:
        case Rule::OneL: tag.at = c.index(); break;
        case Rule::Weakening:
            tag.at = c.index();
            tag.formula = unary(c);
            break;
        case Rule::ForallR: tag.binder = c.ident(); break;
        case Rule::ForallL:
            tag.at = c.index();
            tag.formula = unary(c);
            tag.witness = unary(c);
            break;
        default: break;
    }
    std::vector<Proof> premises;
    for (std::size_t i = 0; i < arity(*rule); ++i) premises.push_back(proof(c));
    c.expect(")");
    try {
        return Proof::make(std::move(tag), std::move(premises));
    } catch (const KernelError& e) {
        c.error_at(e.what(), start, c.raw_pos());
    }
}

void print_node(const Proof& p, int indent, std::string& out) {
    const auto& t = p.tag();
    out += "(";
    out += keyword(t.rule);
    switch (t.rule) {
        case Rule::Axiom: out += " " + to_string(*t.formula, true); break;
        case Rule::Weakening: out += " " + std::to_string(t.at) + " " + to_string(*t.formula, true); break;
        case Rule::ForallR: out += " " + t.binder; break;
        case Rule::ForallL:
            out += " " + std::to_string(t.at) + " " + to_string(*t.formula, true) + " " +
                   to_string(*t.witness, true);
            break;
        case Rule::Exchange:
        case Rule::Cut:
        case Rule::TensorL:
        case Rule::LolliL:
        case Rule::Dereliction:
        case Rule::Contraction:
        case Rule::OneL: out += " " + std::to_string(t.at); break;
        default: break;
    }
    for (const auto& q : p.premises()) {
        out += "\n";
        out.append(static_cast<std::size_t>(indent + 2), ' ');
        print_node(q, indent + 2, out);
    }
    out += ")";
}

void coords(Cursor& c, std::vector<Rational>& out) {
    if (c.accept("[")) {
        if (c.accept("]")) return;
        do {
            coords(c, out);
        } while (c.accept(","));
        c.expect("]");
        return;
    }
    std::size_t start = c.pos();
    std::string w = c.word();
    try {
        out.push_back(parse_rational(w));
    } catch (const std::invalid_argument& e) {
        c.error_at(e.what(), start, c.raw_pos());
    }
}

std::vector<Rational> coord_list(Cursor& c) {
    if (c.peek() != '[') c.error("expected '['");
    std::vector<Rational> out;
    coords(c, out);
    return out;
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Cursor c(text);
    Formula f = formula(c);
    if (!c.at_end()) c.error("trailing input after formula");
    return f;
}

Proof parse_proof(std::string_view text) {
    Cursor c(text);
    Proof p = proof(c);
    if (!c.at_end()) c.error("trailing input after proof");
    return p;
}

std::string print_proof(const Proof& p) {
    std::string out;
    print_node(p, 0, out);
    out += "\n";
    return out;
}

std::vector<Rational> parse_coords(std::string_view text) {
    Cursor c(text, false);
    auto out = coord_list(c);
    if (!c.at_end()) c.error("trailing input after coordinates");
    return out;
}

std::vector<KetLiteral> parse_ket_expr(std::string_view text) {
    Cursor c(text, false);
    std::vector<KetLiteral> terms;
    bool negate = c.accept("-");
    do {
        KetLiteral term{Rational(negate ? -1 : 1), {}, {}};
        negate = false;
        if (!c.peek_str("ket")) {
            std::size_t start = c.pos();
            std::string w = c.word();
            try {
                term.coeff *= parse_rational(w);
            } catch (const std::invalid_argument& e) {
                c.error_at(e.what(), start, c.raw_pos());
            }
            c.expect("*");
        }
        c.expect("ket");
        c.expect("(");
        term.base = coord_list(c);
        if (c.accept(";")) {
            do {
                term.args.push_back(coord_list(c));
            } while (c.accept(","));
        }
        c.expect(")");
        terms.push_back(std::move(term));
        if (c.accept("-")) {
            negate = true;
            continue;
        }
        if (!c.accept("+")) break;
    } while (true);
    if (!c.at_end()) c.error("trailing input after ket expression");
    return terms;
}

}  // namespace llsem
