#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "binhopf/error.hpp"
#include "binhopf/linear.hpp"
#include "binhopf/tree.hpp"

namespace binhopf {

// Grammar:
//   tree    := label | "(" tree SP tree ")"
//   label   := [A-Za-z0-9_]+ | "*"
//   forest  := tree { "," SP? tree } | "1"
//   lincomb := "0" | term { (" + " | " - ") term }
//   term    := ["-"] rational SP forest
// Runs of spaces are accepted wherever a single space is printed.

namespace detail {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::size_t pos() const noexcept { return pos_; }
    bool done() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return done() ? '\0' : text_[pos_]; }
    char peek_at(std::size_t ahead) const noexcept
    {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void skip_spaces()
    {
        while (!done() && text_[pos_] == ' ')
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string label()
    {
        if (peek() == '*') {
            ++pos_;
            return std::string(unlabelled);
        }
        const std::size_t start = pos_;
        while (!done() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            fail("expected a label or '('");
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Parenthesized description with any arity; arity is checked by canonicalize.
    RawTree raw_tree()
    {
        if (peek() != '(')
            return RawTree::leaf(label());
        const std::size_t open = pos_;
        ++pos_;
        std::vector<RawTree> children;
        skip_spaces();
        while (peek() != ')') {
            if (done())
                throw ParseError("unbalanced '('", open);
            if (!children.empty() && text_[pos_ - 1] != ' ')
                fail("expected a space between subtrees");
            children.push_back(raw_tree());
            skip_spaces();
        }
        ++pos_;
        return RawTree::node(std::move(children));
    }

    Tree tree()
    {
        const std::size_t start = pos_;
        RawTree raw = raw_tree();
        try {
            return canonicalize(raw);
        } catch (const MalformedTree& e) {
            throw ParseError(e.what(), start);
        } catch (const BadLabel& e) {
            throw ParseError(e.what(), start);
        }
    }

    /// Stops before anything that cannot continue the forest.
    Forest forest()
    {
        std::vector<Tree> trees;
        trees.push_back(tree());
        while (peek() == ',') {
            ++pos_;
            skip_spaces();
            trees.push_back(tree());
        }
        if (trees.size() == 1 && trees.front().is_leaf() && trees.front().label() == "1")
            return Forest{};
        return Forest(std::move(trees));
    }

    std::string rational_token()
    {
        const std::size_t start = pos_;
        if (peek() == '-')
            ++pos_;
        while (!done() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (pos_ == start)
            fail("expected a coefficient");
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void expect_end(Reader& r)
{
    r.skip_spaces();
    if (!r.done())
        r.fail("unexpected trailing input");
}

} // namespace detail

inline Tree parse_tree(std::string_view text)
{
    detail::Reader r(text);
    r.skip_spaces();
    Tree t = r.tree();
    detail::expect_end(r);
    return t;
}

inline Forest parse_forest(std::string_view text)
{
    detail::Reader r(text);
    r.skip_spaces();
    Forest f = r.forest();
    detail::expect_end(r);
    return f;
}

inline LinComb parse_lincomb(std::string_view text)
{
    detail::Reader r(text);
    r.skip_spaces();
    LinComb out;
    if (r.peek() == '0' && (r.peek_at(1) == '\0' || r.peek_at(1) == ' ')) {
        r.expect('0');
        detail::expect_end(r);
        return out;
    }
    bool negate = false;
    while (true) {
        const std::size_t at = r.pos();
        Rational c;
        try {
            c = parse_rational(r.rational_token());
        } catch (const ParseError& e) {
            throw ParseError("malformed coefficient", at);
        }
        if (r.peek() != ' ')
            r.fail("expected a space after the coefficient");
        r.skip_spaces();
        out.add(r.forest(), negate ? Rational(-c) : c);
        r.skip_spaces();
        if (r.done())
            break;
        if (r.peek() != '+' && r.peek() != '-')
            r.fail("expected '+' or '-'");
        negate = r.peek() == '-';
        r.expect(r.peek());
        r.skip_spaces();
    }
    return out;
}

} // namespace binhopf
