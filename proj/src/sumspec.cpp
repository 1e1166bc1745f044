#include "eulersum/sumspec.hpp"

#include <cctype>
#include <map>

namespace eulersum::sumspec {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void expect(char c) {
        if (peek() != c) throw ParseError(pos, std::string("expected '") + c + "'");
        ++pos;
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long integer() {
        const std::size_t start = pos;
        bool neg = consume('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos, "expected an integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text[pos++] - '0');
        (void)start;
        return neg ? -v : v;
    }

    std::string ident() {
        std::string out;
        while (std::isalpha(static_cast<unsigned char>(peek()))) out += text[pos++];
        if (out.empty()) throw ParseError(pos, "expected a name");
        return out;
    }
};

// comma list of base^exp factors; a lone "0" means the empty index set
void parse_pi(Cursor& c, std::vector<oracle::Factor>& out, bool alternating_family) {
    if (c.peek() == '0') {
        ++c.pos;
        return;
    }
    while (true) {
        const std::size_t at = c.pos;
        const long base = c.integer();
        if (base < 1) throw ParseError(at, "harmonic order must be >= 1");
        long exp = 1;
        if (c.consume('^')) {
            exp = c.integer();
            if (exp < 1) throw ParseError(at, "exponent must be >= 1");
        }
        out.push_back(alternating_family ? oracle::lf(static_cast<int>(base), static_cast<int>(exp))
                                         : oracle::zf(static_cast<int>(base), static_cast<int>(exp)));
        if (!c.consume(',')) break;
    }
}

std::map<std::string, long> parse_kv(Cursor& c, std::map<std::string, std::string>* strings = nullptr) {
    std::map<std::string, long> out;
    while (true) {
        const std::string name = c.ident();
        c.expect('=');
        if (strings && !std::isdigit(static_cast<unsigned char>(c.peek())) && c.peek() != '-') {
            (*strings)[name] = c.ident();
        } else {
            out[name] = c.integer();
        }
        if (!c.consume(',')) break;
    }
    return out;
}

long need(const std::map<std::string, long>& kv, const std::string& name, std::size_t pos) {
    auto it = kv.find(name);
    if (it == kv.end()) throw ParseError(pos, "missing field " + name);
    return it->second;
}

}  // namespace

ParsedSum parse(const std::string& text) {
    Cursor c{text};
    ParsedSum out;
    const std::string head = c.ident();

    if (head == "S" || head == "Sbar") {
        c.expect('[');
        std::vector<oracle::Factor> factors;
        parse_pi(c, factors, false);
        c.expect(';');
        parse_pi(c, factors, true);
        c.expect(';');
        if (c.ident() != "p") throw ParseError(c.pos, "expected p=<int>");
        c.expect('=');
        const long p = c.integer();
        if (p < 1) throw ParseError(c.pos, "outer power must be >= 1");
        c.expect(']');
        out.descriptor = oracle::S(std::move(factors), p, head == "Sbar");
    } else if (head == "K") {
        c.expect('[');
        std::map<std::string, std::string> strs;
        const std::size_t at = c.pos;
        const auto kv = parse_kv(c, &strs);
        c.expect(']');
        const long m = need(kv, "m", at), k = need(kv, "k", at);
        const long r = kv.count("r") ? kv.at("r") : 0;
        if (m < 1) throw ParseError(at, "requires m >= 1");
        if (!(0 <= r && r < k)) throw ParseError(at, "requires 0 <= r < k");
        auto it = strs.find("type");
        const std::string type = it == strs.end() ? "zeta" : it->second;
        if (type != "zeta" && type != "L") throw ParseError(at, "type must be zeta or L");
        out.descriptor = oracle::K({type == "zeta" ? oracle::zf(static_cast<int>(m)) : oracle::lf(static_cast<int>(m))},
                                   r, k);
    } else if (head == "ST") {
        c.expect('[');
        const std::size_t at = c.pos;
        const auto kv = parse_kv(c);
        c.expect(']');
        const long p = need(kv, "p", at), k = need(kv, "k", at);
        if (p < 2) throw ParseError(at, "requires p >= 2");
        if (k < 1) throw ParseError(at, "requires k >= 1");
        out.descriptor = oracle::K({oracle::wf(static_cast<int>(p))}, 0, k);
        out.prefactor = Rational(factorial(p - 1));
    } else {
        throw ParseError(0, "unknown sum form '" + head + "' (expected S, Sbar, K or ST)");
    }

    if (!c.done()) throw ParseError(c.pos, "trailing characters");
    if (!out.descriptor.convergent()) throw ParseError(0, "divergent");
    out.canonical = out.descriptor.key();
    return out;
}

}  // namespace eulersum::sumspec
