// Parser for the presentation format.  Total: every input produces
// either a document or one positioned diagnostic, never a crash.
// Comments run from '#' to end of line.

#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "findim/presentation.hpp"

namespace findim {

struct Diagnostic {
    std::size_t line = 0, col = 0;  // 1-based
    std::string message;

    std::string str() const {
        return "line " + std::to_string(line) + ", col " + std::to_string(col) +
               ": " + message;
    }
};

struct ParseResult {
    std::optional<Document> doc;
    std::optional<Diagnostic> error;
    bool ok() const { return doc.has_value(); }
};

namespace detail {

enum class Tok { Word, LBrace, RBrace, LBracket, RBracket, Semi, Comma,
                 Colon, Arrow, Equals, Star, Plus, Minus, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : s_(src) {}

    // returns false on a bad character, filling diag
    bool run(std::vector<Token>& out, Diagnostic& diag) {
        while (pos_ < s_.size()) {
            char ch = s_[pos_];
            if (ch == '\n') { advance(); continue; }
            if (std::isspace((unsigned char)ch)) { advance(); continue; }
            if (ch == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
                continue;
            }
            std::size_t ln = line_, cl = col_;
            if (std::isalnum((unsigned char)ch) || ch == '_') {
                std::string w;
                while (pos_ < s_.size() &&
                       (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
                    w += s_[pos_];
                    advance();
                }
                out.push_back({Tok::Word, w, ln, cl});
                continue;
            }
            if (ch == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
                advance(); advance();
                out.push_back({Tok::Arrow, "->", ln, cl});
                continue;
            }
            Tok k;
            switch (ch) {
                case '{': k = Tok::LBrace; break;
                case '}': k = Tok::RBrace; break;
                case '[': k = Tok::LBracket; break;
                case ']': k = Tok::RBracket; break;
                case ';': k = Tok::Semi; break;
                case ',': k = Tok::Comma; break;
                case ':': k = Tok::Colon; break;
                case '=': k = Tok::Equals; break;
                case '*': k = Tok::Star; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                default:
                    diag = {ln, cl, std::string("unexpected character '") + ch + "'"};
                    return false;
            }
            advance();
            out.push_back({k, std::string(1, ch), ln, cl});
        }
        out.push_back({Tok::End, "", line_, col_});
        return true;
    }

  private:
    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

struct ParseFail {};  // unwinding token; diagnostic already recorded

class Parser {
  public:
    Parser(std::vector<Token> toks, const Document* env)
        : toks_(std::move(toks)), env_(env) {}

    ParseResult run() {
        ParseResult res;
        try {
            Document doc;
            while (!at(Tok::End)) parse_item(doc);
            res.doc = std::move(doc);
        } catch (ParseFail&) {
            res.error = diag_;
        }
        return res;
    }

  private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        diag_ = {t.line, t.col, msg};
        throw ParseFail{};
    }
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(const std::string& w) const {
        return at(Tok::Word) && peek().text == w;
    }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail(peek(), "expected " + what + ", found '" + peek().text + "'");
        return take();
    }
    Token expect_word(const std::string& w) {
        if (!at_word(w)) fail(peek(), "expected '" + w + "', found '" + peek().text + "'");
        return take();
    }
    long long expect_int() {
        bool negative = false;
        if (at(Tok::Minus)) { take(); negative = true; }
        Token t = expect(Tok::Word, "an integer");
        long long v = 0;
        for (char ch : t.text) {
            if (!std::isdigit((unsigned char)ch)) fail(t, "expected an integer, found '" + t.text + "'");
            if (v > (1LL << 60)) fail(t, "integer literal too large");
            v = v * 10 + (ch - '0');
        }
        return negative ? -v : v;
    }
    bool word_is_number(const Token& t) const {
        if (t.kind != Tok::Word || t.text.empty()) return false;
        for (char ch : t.text)
            if (!std::isdigit((unsigned char)ch)) return false;
        return true;
    }

    const QuiverPresentation* lookup_algebra(const Document& doc, const std::string& n) {
        if (auto* q = doc.find_algebra(n)) return q;
        if (env_) return env_->find_algebra(n);
        return nullptr;
    }
    bool known_name(const Document& doc, const std::string& n) {
        if (doc.find_algebra(n) || doc.find_glue(n)) return true;
        if (env_ && (env_->find_algebra(n) || env_->find_glue(n))) return true;
        return false;
    }

    void parse_item(Document& doc) {
        Token t = peek();
        if (t.kind != Tok::Word)
            fail(t, "expected 'algebra', 'module', 'glue', 'list' or 'chain'");
        if (t.text == "algebra") parse_algebra(doc);
        else if (t.text == "module") parse_module(doc);
        else if (t.text == "glue") parse_glue(doc);
        else if (t.text == "list") parse_list(doc);
        else if (t.text == "chain") parse_chain(doc);
        else fail(t, "unknown block '" + t.text + "'");
    }

    void parse_algebra(Document& doc) {
        expect_word("algebra");
        QuiverPresentation q;
        Token nameTok = expect(Tok::Word, "an algebra name");
        q.name = nameTok.text;
        expect(Tok::LBrace, "'{'");

        Token fieldTok = expect_word("field");
        long long p = expect_int();
        if (p < 2 || p >= 65536 || !is_prime_u32((std::uint32_t)p))
            fail(fieldTok, "field must be a prime below 65536, got " + std::to_string(p));
        q.p = (fp::Elt)p;
        expect(Tok::Semi, "';'");

        expect_word("vertices");
        while (at(Tok::Word)) {
            Token v = take();
            if (q.vertex_index(v.text) >= 0) fail(v, "duplicate vertex '" + v.text + "'");
            q.vertices.push_back(v.text);
        }
        if (q.vertices.empty()) fail(peek(), "an algebra needs at least one vertex");
        expect(Tok::Semi, "';'");

        expect_word("arrows");
        while (at(Tok::Word)) {
            QuiverPresentation::Arrow a;
            Token an = take();
            a.name = an.text;
            if (q.arrow_index(a.name) >= 0) fail(an, "duplicate arrow '" + a.name + "'");
            expect(Tok::Colon, "':'");
            Token sv = expect(Tok::Word, "a source vertex");
            a.src = q.vertex_index(sv.text);
            if (a.src < 0) fail(sv, "unknown vertex '" + sv.text + "'");
            expect(Tok::Arrow, "'->'");
            Token tv = expect(Tok::Word, "a target vertex");
            a.tgt = q.vertex_index(tv.text);
            if (a.tgt < 0) fail(tv, "unknown vertex '" + tv.text + "'");
            q.arrows.push_back(a);
            if (at(Tok::Comma)) take(); else break;
        }
        expect(Tok::Semi, "';'");

        expect_word("relations");
        while (!at(Tok::Semi)) {
            q.relations.push_back(parse_relation(q));
            if (at(Tok::Comma)) take(); else break;
        }
        expect(Tok::Semi, "';'");

        Token nil = expect_word("nilpotency");
        long long m = expect_int();
        if (m < 2) fail(nil, "nilpotency bound must be at least 2");
        q.nilpotency = (int)m;
        expect(Tok::RBrace, "'}'");
        doc.algebras.push_back(std::move(q));
        doc.order.push_back({Document::Kind::Algebra, doc.algebras.size() - 1});
    }

    Path parse_path(const QuiverPresentation& q, int& src, int& tgt) {
        Path pth;
        Token first = expect(Tok::Word, "an arrow name");
        int idx = q.arrow_index(first.text);
        if (idx < 0) fail(first, "unknown arrow '" + first.text + "'");
        pth.push_back(idx);
        while (at(Tok::Star)) {
            take();
            Token nxt = expect(Tok::Word, "an arrow name");
            int j = q.arrow_index(nxt.text);
            if (j < 0) fail(nxt, "unknown arrow '" + nxt.text + "'");
            // right-to-left composition: previous arrow is applied after
            if (q.arrows[(std::size_t)j].tgt != q.arrows[(std::size_t)pth.back()].src)
                fail(nxt, "path break: target of '" + nxt.text + "' is not source of '" +
                              q.arrows[(std::size_t)pth.back()].name + "'");
            pth.push_back(j);
        }
        if (pth.size() < 2)
            fail(first, "relation paths must have length at least 2 (admissibility)");
        src = q.path_source(pth);
        tgt = q.path_target(pth);
        return pth;
    }

    void parse_lincomb(const QuiverPresentation& q, QuiverPresentation::Relation& rel,
                       bool negate_all, int& src, int& tgt) {
        bool first = true;
        while (true) {
            bool neg = negate_all;
            if (at(Tok::Minus)) { take(); neg = !neg; }
            else if (!first && at(Tok::Plus)) take();
            fp::Elt coeff = 1;
            Token look = peek();
            if (word_is_number(look) && peek(1).kind == Tok::Word) {
                take();
                long long c = 0;
                for (char ch : look.text) c = (c * 10 + (ch - '0')) % q.p;
                coeff = (fp::Elt)c;
            }
            int s = 0, t = 0;
            Token where = peek();
            Path pth = parse_path(q, s, t);
            if (first && src < 0) { src = s; tgt = t; }
            else if (s != src || t != tgt)
                fail(where, "relation terms must be parallel paths (same source and target)");
            if (neg) coeff = fp::neg(coeff, q.p);
            fp::Elt& slot = rel[pth];
            slot = fp::add(slot, coeff, q.p);
            if (slot == 0) rel.erase(pth);
            first = false;
            if (at(Tok::Plus) || at(Tok::Minus)) continue;
            break;
        }
    }

    QuiverPresentation::Relation parse_relation(const QuiverPresentation& q) {
        QuiverPresentation::Relation rel;
        int src = -1, tgt = -1;
        Token start = peek();
        parse_lincomb(q, rel, false, src, tgt);
        if (at(Tok::Equals)) {
            take();
            parse_lincomb(q, rel, true, src, tgt);
        }
        if (rel.empty()) fail(start, "relation is identically zero");
        return rel;
    }

    void parse_module(Document& doc) {
        expect_word("module");
        ModulePresentation m;
        m.name = expect(Tok::Word, "a module name").text;
        expect_word("over");
        Token at_ = expect(Tok::Word, "an algebra name");
        m.algebra = at_.text;
        const QuiverPresentation* q = lookup_algebra(doc, m.algebra);
        if (!q) fail(at_, "unknown algebra '" + m.algebra + "'");
        expect(Tok::LBrace, "'{'");

        expect_word("dims");
        m.dims.assign(q->vertices.size(), 0);
        while (at(Tok::Word)) {
            Token v = take();
            int vi = q->vertex_index(v.text);
            if (vi < 0) fail(v, "unknown vertex '" + v.text + "'");
            expect(Tok::Equals, "'='");
            long long d = expect_int();
            if (d < 0 || d > 4096) fail(v, "unreasonable dimension");
            m.dims[(std::size_t)vi] = d;
        }
        expect(Tok::Semi, "';'");

        while (at_word("arrow")) {
            take();
            Token an = expect(Tok::Word, "an arrow name");
            int ai = q->arrow_index(an.text);
            if (ai < 0) fail(an, "unknown arrow '" + an.text + "'");
            expect(Tok::Equals, "'='");
            auto a = q->arrows[(std::size_t)ai];
            std::size_t rows = (std::size_t)m.dims[(std::size_t)a.tgt];
            std::size_t cols = (std::size_t)m.dims[(std::size_t)a.src];
            fp::Mat mat(q->p, rows, cols);
            Token lb = expect(Tok::LBracket, "'['");
            std::size_t r = 0;
            if (!at(Tok::RBracket)) {
                while (true) {
                    expect(Tok::LBracket, "'['");
                    std::size_t c = 0;
                    if (!at(Tok::RBracket)) {
                        while (true) {
                            Token et = peek();
                            long long v = expect_int();
                            if (r >= rows || c >= cols)
                                fail(et, "matrix larger than " + std::to_string(rows) +
                                             "x" + std::to_string(cols) + " for arrow '" +
                                             an.text + "'");
                            mat.at(r, c) = fp::reduce_int(v, q->p);
                            ++c;
                            if (at(Tok::Comma)) { take(); continue; }
                            break;
                        }
                    }
                    expect(Tok::RBracket, "']'");
                    if (c != cols) fail(lb, "matrix row has " + std::to_string(c) +
                                                " entries, expected " + std::to_string(cols));
                    ++r;
                    if (at(Tok::Comma)) { take(); continue; }
                    break;
                }
            }
            expect(Tok::RBracket, "']'");
            if (r != rows) fail(lb, "matrix has " + std::to_string(r) + " rows, expected " +
                                        std::to_string(rows));
            expect(Tok::Semi, "';'");
            // canonical form: absent means zero, so zero matrices are dropped
            if (rows > 0 && cols > 0 && !mat.is_zero()) m.matrices[ai] = std::move(mat);
        }
        expect(Tok::RBrace, "'}'");
        doc.modules.push_back(std::move(m));
        doc.order.push_back({Document::Kind::Module, doc.modules.size() - 1});
    }

    void parse_glue(Document& doc) {
        expect_word("glue");
        GluePresentation g;
        g.name = expect(Tok::Word, "a glue name").text;
        expect_word("from");
        Token at_ = expect(Tok::Word, "an algebra name");
        g.algebra = at_.text;
        const QuiverPresentation* q = lookup_algebra(doc, g.algebra);
        if (!q) fail(at_, "unknown algebra '" + g.algebra + "'");
        expect(Tok::LBrace, "'{'");
        Token bt = expect_word("blocks");
        std::vector<char> seen(q->vertices.size(), 0);
        while (at(Tok::LBrace)) {
            take();
            std::vector<int> blk;
            while (at(Tok::Word)) {
                Token v = take();
                int vi = q->vertex_index(v.text);
                if (vi < 0) fail(v, "unknown vertex '" + v.text + "'");
                if (seen[(std::size_t)vi]) fail(v, "vertex '" + v.text + "' in two blocks");
                seen[(std::size_t)vi] = 1;
                blk.push_back(vi);
            }
            expect(Tok::RBrace, "'}'");
            if (blk.empty()) fail(bt, "empty block");
            std::sort(blk.begin(), blk.end());
            g.blocks.push_back(std::move(blk));
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) fail(bt, "vertex '" + q->vertices[i] + "' not covered by blocks");
        std::sort(g.blocks.begin(), g.blocks.end());
        expect(Tok::Semi, "';'");
        expect(Tok::RBrace, "'}'");
        doc.glues.push_back(std::move(g));
        doc.order.push_back({Document::Kind::Glue, doc.glues.size() - 1});
    }

    void parse_list(Document& doc) {
        expect_word("list");
        ListPresentation l;
        l.name = expect(Tok::Word, "a list name").text;
        expect_word("over");
        Token at_ = expect(Tok::Word, "an algebra name");
        l.algebra = at_.text;
        if (!lookup_algebra(doc, l.algebra)) fail(at_, "unknown algebra '" + l.algebra + "'");
        expect(Tok::LBrace, "'{'");
        while (at(Tok::Word)) {
            Token mt = take();
            if (!doc.find_module(mt.text))
                fail(mt, "unknown module '" + mt.text + "'");
            l.modules.push_back(mt.text);
        }
        expect(Tok::RBrace, "'}'");
        doc.lists.push_back(std::move(l));
        doc.order.push_back({Document::Kind::List, doc.lists.size() - 1});
    }

    void parse_chain(Document& doc) {
        expect_word("chain");
        ChainPresentation c;
        c.name = expect(Tok::Word, "a chain name").text;
        expect(Tok::LBrace, "'{'");
        while (at(Tok::Word)) {
            Token et = take();
            if (!known_name(doc, et.text))
                fail(et, "unknown algebra or glue '" + et.text + "'");
            c.entries.push_back(et.text);
            if (at_word("in")) { take(); continue; }
            break;
        }
        if (c.entries.size() < 2) fail(peek(), "a chain needs at least two entries");
        expect(Tok::RBrace, "'}'");
        doc.chains.push_back(std::move(c));
        doc.order.push_back({Document::Kind::Chain, doc.chains.size() - 1});
    }

    std::vector<Token> toks_;
    const Document* env_;
    std::size_t pos_ = 0;
    Diagnostic diag_;
};

}  // namespace detail

// env supplies algebra/glue names visible from outside the document
// (fixtures, previously loaded files)
inline ParseResult parse_document(const std::string& text, const Document* env = nullptr) {
    std::vector<detail::Token> toks;
    Diagnostic diag;
    detail::Lexer lex(text);
    if (!lex.run(toks, diag)) return {std::nullopt, diag};
    detail::Parser parser(std::move(toks), env);
    return parser.run();
}

// fixtures are themselves parsed from text; memoized per prime
inline const Document& fixture_document(fp::Elt p) {
    static std::map<fp::Elt, Document> cache;
    auto it = cache.find(p);
    if (it == cache.end()) {
        ParseResult r = parse_document(fixture_text(p));
        check(r.ok(), "fixture text failed to parse: " +
                          (r.error ? r.error->str() : std::string("?")));
        it = cache.emplace(p, std::move(*r.doc)).first;
    }
    return it->second;
}

}  // namespace findim
