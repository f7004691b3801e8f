#include "sharp/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>

namespace sharp {

using nlohmann::json;

json to_json(const TriPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"a", m.a},
                         {"b", m.b},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return {{"degree", p.degree()}, {"terms", std::move(terms)}};
}

namespace {

Integer parse_integer(const json& v, const char* field) {
    if (!v.is_string()) throw ParseError(std::string("field '") + field + "' must be a decimal string");
    const auto& s = v.get_ref<const std::string&>();
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
        throw ParseError(std::string("field '") + field + "' is not a decimal integer: " + s);
    }
    return Integer(s, 10);
}

int parse_exponent(const json& v, const char* field) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 100000) {
        throw ParseError(std::string("field '") + field + "' must be a nonnegative integer");
    }
    return v.get<int>();
}

}  // namespace

TriPoly poly_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("polynomial document must be a JSON object");
    if (!doc.contains("terms") || !doc["terms"].is_array()) throw ParseError("missing 'terms' array");

    TriPoly p;
    bool have_prev = false;
    Monomial prev;
    for (const auto& t : doc["terms"]) {
        if (!t.is_object() || !t.contains("a") || !t.contains("b") || !t.contains("num") || !t.contains("den")) {
            throw ParseError("each term needs a, b, num, den");
        }
        Monomial m{parse_exponent(t["a"], "a"), parse_exponent(t["b"], "b")};
        Integer num = parse_integer(t["num"], "num");
        Integer den = parse_integer(t["den"], "den");
        if (den <= 0) throw ParseError("denominator must be positive at " + to_string(m));
        if (num == 0) throw ParseError("zero coefficient stored at " + to_string(m));
        if (gcd(num, den) != 1) throw ParseError("coefficient not in lowest terms at " + to_string(m));
        if (have_prev && !(prev < m)) throw ParseError("terms not sorted by monomial order at " + to_string(m));
        prev = m;
        have_prev = true;
        p.add_term(m, Rational(num, den));
    }
    if (doc.contains("degree")) {
        if (!doc["degree"].is_number_integer()) throw ParseError("'degree' must be an integer");
        if (doc["degree"].get<int>() != p.degree()) {
            throw ParseError("'degree' field " + doc["degree"].dump() + " does not match terms (" +
                             std::to_string(p.degree()) + ")");
        }
    }
    return p;
}

std::vector<json> read_json_documents(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<json> docs;
    json whole = json::parse(all, nullptr, false);
    if (!whole.is_discarded()) {
        docs.push_back(std::move(whole));
        return docs;
    }
    std::istringstream lines(all);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); })) continue;
        json doc = json::parse(line, nullptr, false);
        if (doc.is_discarded()) throw ParseError("malformed JSON on line " + std::to_string(lineno));
        docs.push_back(std::move(doc));
    }
    if (docs.empty()) throw ParseError("no JSON documents in input");
    return docs;
}

namespace {

std::string power(const char* var, int e, bool braces) {
    if (e == 1) return var;
    if (braces) return std::string("{") + var + "}^{" + std::to_string(e) + "}";
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_text(const TriPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (out.empty()) out += sgn(c) < 0 ? "-" : "";
        else out += sgn(c) < 0 ? " - " : " + ";
        std::vector<std::string> factors;
        if (mag != 1 || m.degree() == 0) factors.push_back(mag.get_str());
        if (m.a > 0) factors.push_back(power("x", m.a, false));
        if (m.b > 0) factors.push_back(power("y", m.b, false));
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out;
}

std::string to_latex(const TriPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        if (l.first.a != r.first.a) return l.first.a > r.first.a;
        return l.first.b < r.first.b;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (sgn(c) < 0) out += "-";
        else if (!first) out += "+";
        first = false;

        Integer num = abs(c.get_num());
        std::vector<std::string> factors;
        if (num != 1 || m.degree() == 0) factors.push_back(num.get_str());
        if (m.b > 0) factors.push_back(power("y", m.b, true));
        if (m.a > 0) factors.push_back(power("x", m.a, true));
        std::string body;
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "\\," : "") + factors[i];

        if (c.get_den() == 1) out += body;
        else out += "\\frac{" + body + "}{" + c.get_den().get_str() + "}";
    }
    return out;
}

namespace {

class LatexParser {
  public:
    explicit LatexParser(std::string_view src) : src_(src) {}

    TriPoly parse() {
        TriPoly p;
        skip();
        if (at_end()) throw error("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = term();
            p.add_term(m, sign < 0 ? Rational(-c) : c);
            skip();
        }
        return p;
    }

  private:
    std::pair<Monomial, Rational> term() {
        if (consume("\\frac")) {
            expect('{');
            auto [m, num] = product();
            expect('}');
            expect('{');
            Integer den = integer();
            expect('}');
            if (den == 0) throw error("zero denominator");
            return {m, Rational(num) / Rational(den)};
        }
        return product();
    }

    // factors joined by \, or whitespace: integers and x/y powers
    std::pair<Monomial, Rational> product() {
        Monomial m;
        Rational c = 1;
        bool any = false;
        for (;;) {
            skip();
            if (at_end()) break;
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                c *= Rational(integer());
            } else if (ch == 'x' || ch == 'y' || (ch == '{' && pos_ + 1 < src_.size() &&
                                                  (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'y'))) {
                bool braced = ch == '{';
                if (braced) ++pos_;
                char var = src_[pos_++];
                if (braced) expect('}');
                int e = 1;
                skip();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip();
                    if (!at_end() && peek() == '{') {
                        ++pos_;
                        e = static_cast<int>(integer().get_si());
                        expect('}');
                    } else {
                        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw error("bad exponent");
                        e = peek() - '0';
                        ++pos_;
                    }
                }
                (var == 'x' ? m.a : m.b) += e;
            } else {
                break;
            }
            any = true;
        }
        if (!any) throw error("expected a term");
        return {m, c};
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected integer");
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    void skip() {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                ++pos_;
            } else if (src_.substr(pos_, 2) == "\\," || src_.substr(pos_, 2) == "\\\\" ||
                       src_.substr(pos_, 2) == "\\ " || src_.substr(pos_, 2) == "\\;") {
                pos_ += 2;
            } else {
                break;
            }
        }
    }

    bool consume(std::string_view tok) {
        skip();
        if (src_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(char ch) {
        skip();
        if (at_end() || peek() != ch) throw error(std::string("expected '") + ch + "'");
        ++pos_;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    ParseError error(const std::string& what) const {
        return ParseError("latex: " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

TriPoly parse_latex(std::string_view src) { return LatexParser(src).parse(); }

}  // namespace sharp
