#include "finring/specparse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/io.hpp"

namespace finring {

namespace {

// Family builds carry their member matrices forward so quot(...) can find the
// strictly upper triangular ones.
struct ParseResult {
    FiniteRing ring;
    std::vector<std::vector<Elem>> matrices;
    int mat_n = 0;
};

struct Parser {
    const std::string& s;
    const Limits& limits;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        raise("SpecParseError",
              msg + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stol(s.substr(start, pos - start));
    }

    std::string parse_word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a name");
        return s.substr(start, pos - start);
    }

    ParseResult parse_spec() {
        skip_ws();
        if (pos >= s.size()) fail("empty spec");
        if (s[pos] == '@') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && s[pos] != ',' && s[pos] != ')') ++pos;
            std::string path = s.substr(start, pos - start);
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
                path.pop_back();
            if (path.empty()) fail("expected a file path after '@'");
            return {load_ring_file(path), {}, 0};
        }
        std::string word = parse_word();
        if (word == "Z") {
            long n = parse_int();
            if (n < 1) fail("Z<n> needs n >= 1");
            return {cyclic_ring(static_cast<std::size_t>(n)), {}, 0};
        }
        if (word == "GF") {
            expect('(');
            long q = parse_int();
            expect(')');
            return {finite_field(static_cast<std::size_t>(q)), {}, 0};
        }
        if (word == "M") {
            long n = parse_int();
            expect('(');
            ParseResult base = parse_spec();
            expect(')');
            return {matrix_ring(base.ring, static_cast<int>(n), limits), {}, 0};
        }
        if (word == "prod") {
            expect('(');
            ParseResult a = parse_spec();
            expect(',');
            ParseResult b = parse_spec();
            expect(')');
            return {direct_product(a.ring, b.ring, limits), {}, 0};
        }
        if (word == "quot") {
            expect('(');
            ParseResult base = parse_spec();
            expect(',');
            std::string kind = parse_word();
            expect(')');
            if (kind != "strictupper") fail("unknown quotient kind '" + kind + "'");
            if (base.matrices.empty())
                fail("quot(...,strictupper) needs a matrix family build as its base");
            std::vector<Elem> members;
            for (std::size_t x = 0; x < base.matrices.size(); ++x) {
                bool strict = true;
                const auto& m = base.matrices[x];
                for (int i = 0; i < base.mat_n && strict; ++i)
                    strict = (m[static_cast<std::size_t>(i) * base.mat_n + i] == 0);
                if (strict) members.push_back(static_cast<Elem>(x));
            }
            Subset ideal = make_subset(base.ring, std::move(members));
            return {quotient_ring(base.ring, ideal).ring, {}, 0};
        }
        if (auto fam = family_from_name(word)) {
            expect('(');
            ParseResult base = parse_spec();
            expect(',');
            long n = parse_int();
            expect(')');
            BuildOutcome b = build_matrix_subring(*fam, base.ring, static_cast<int>(n), limits);
            if (!b.closed) {
                std::ostringstream os;
                os << word << " over this base is not closed";
                if (!b.trace.empty()) os << "; " << b.trace.back();
                raise("ConstructionNotARing", os.str());
            }
            return {std::move(*b.ring), std::move(b.matrices), static_cast<int>(n)};
        }
        fail("unknown spec head '" + word + "'");
    }
};

}  // namespace

FiniteRing parse_ring_spec(const std::string& spec, const Limits& limits) {
    Parser p{spec, limits};
    ParseResult res = p.parse_spec();
    p.skip_ws();
    if (p.pos != spec.size()) p.fail("trailing input");
    return std::move(res.ring);
}

}  // namespace finring
