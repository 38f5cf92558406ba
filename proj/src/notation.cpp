#include "snortcgt/notation.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

namespace cgt {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

namespace {

int kind_rank(GameKind::Tag t) {
    switch (t) {
        case GameKind::Integer: return 0;
        case GameKind::IntegerPlusStar: return 1;
        case GameKind::Number: return 2;
        case GameKind::NumberPlusStar: return 3;
        case GameKind::General: return 4;
    }
    return 4;
}

class Formatter {
public:
    std::string format(Game g) {
        auto it = memo_.find(g.id());
        if (it != memo_.end()) return it->second;
        std::string s = build(g);
        memo_.emplace(g.id(), s);
        return s;
    }

    std::mutex mutex;

private:
    std::string build(Game g) {
        GameKind k = kind(g);
        switch (k.tag) {
            case GameKind::Integer:
            case GameKind::Number:
                return k.value.str();
            case GameKind::IntegerPlusStar:
            case GameKind::NumberPlusStar:
                if (k.value.is_zero()) return "*";
                return k.value.str() + "*";
            case GameKind::General:
                break;
        }
        std::vector<Game> l = left_options(g);
        std::vector<Game> r = right_options(g);
        auto order = [this](Game a, Game b) {
            GameKind ka = kind(a), kb = kind(b);
            int ra = kind_rank(ka.tag), rb = kind_rank(kb.tag);
            if (ra != rb) return ra < rb;
            if (ra < 4) {
                int c = ka.value.compare(kb.value);
                if (c != 0) return c < 0;
            }
            return format(a) < format(b);
        };
        std::sort(l.begin(), l.end(), order);
        std::sort(r.begin(), r.end(), order);
        // ±-form: right options are exactly the negated left options.
        std::vector<Game> neg;
        neg.reserve(l.size());
        for (Game x : l) neg.push_back(negate(x));
        std::sort(neg.begin(), neg.end());
        std::vector<Game> rs = r;
        std::sort(rs.begin(), rs.end());
        if (neg == rs) {
            if (l.size() == 1) return "±" + format(l[0]);
            std::string out = "±{";
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (i) out += ", ";
                out += format(l[i]);
            }
            out += "}";
            return out;
        }
        std::string out = "{";
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (i) out += ", ";
            out += format(l[i]);
        }
        out += "|";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += ", ";
            out += format(r[i]);
        }
        out += "}";
        return out;
    }

    std::unordered_map<std::uint32_t, std::string> memo_;
};

Formatter& formatter() {
    static Formatter f;
    return f;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Game run() {
        Game g = parse_game_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return g;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool consume_pm() {
        // UTF-8 "±" or ASCII "+-".
        if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xC2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0xB1) {
            pos_ += 2;
            return true;
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '+' && text_[pos_ + 1] == '-') {
            pos_ += 2;
            return true;
        }
        return false;
    }

    Game parse_game_expr() {
        skip_ws();
        if (consume_pm()) return parse_pm_body();
        if (peek() == '{') return parse_braces();
        return parse_literal();
    }

    Game make_pm(const std::vector<Game>& opts) {
        std::vector<Game> r;
        r.reserve(opts.size());
        for (Game g : opts) r.push_back(negate(g));
        return make_game(opts, r);
    }

    Game parse_pm_body() {
        skip_ws();
        if (peek() == '{') {
            if (brace_group_has_top_level_pipe()) {
                return make_pm({parse_braces()});
            }
            expect('{');
            std::vector<Game> opts = parse_list('}');
            expect('}');
            if (opts.empty()) fail("empty option list after sign");
            return make_pm(opts);
        }
        return make_pm({parse_game_expr()});
    }

    bool brace_group_has_top_level_pipe() const {
        int depth = 0;
        for (std::size_t i = pos_; i < text_.size(); ++i) {
            char c = text_[i];
            if (c == '{') ++depth;
            else if (c == '}') {
                --depth;
                if (depth == 0) return false;
            } else if (c == '|' && depth == 1) {
                return true;
            }
        }
        return false;
    }

    Game parse_braces() {
        expect('{');
        std::vector<Game> l = parse_list('|');
        expect('|');
        std::vector<Game> r = parse_list('}');
        expect('}');
        return make_game(l, r);
    }

    std::vector<Game> parse_list(char terminator) {
        std::vector<Game> out;
        skip_ws();
        if (peek() == terminator) return out;
        out.push_back(parse_game_expr());
        skip_ws();
        while (consume(',')) {
            out.push_back(parse_game_expr());
            skip_ws();
        }
        return out;
    }

    Game parse_literal() {
        skip_ws();
        if (consume('*')) return star();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
            ++pos_;
        }
        if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) {
            pos_ = start;
            fail("expected a game");
        }
        auto d = Dyadic::parse(text_.substr(start, pos_ - start));
        if (!d) {
            pos_ = start;
            fail("malformed number");
        }
        Game n = number(*d);
        if (consume('*')) return make_game({n}, {n});  // n* binds as n + *
        return n;
    }
};

}  // namespace

std::string format_game(Game g) {
    Formatter& f = formatter();
    std::lock_guard<std::mutex> lock(f.mutex);
    return f.format(g);
}

Game parse_game(std::string_view text) {
    return Parser(text).run();
}

}  // namespace cgt
