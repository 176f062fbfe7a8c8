#include "qlp/json_io.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qlp {

json to_json(const LinkPattern &w) {
    json links = json::array();
    for (const Link &l : w.links()) links.push_back({l.a, l.b, l.mult});
    json defects = json::object();
    for (const auto &[i, c] : w.defects()) defects[std::to_string(i)] = c;
    return {{"p", w.p()}, {"valences", w.valences()}, {"links", links}, {"defects", defects}};
}

LinkPattern pattern_from_json(const json &j) {
    auto vals = j.at("valences").get<std::vector<int>>();
    if (j.contains("p") && j.at("p").get<int>() != static_cast<int>(vals.size()))
        throw std::invalid_argument("pattern: p does not match valences");
    std::vector<Link> links;
    for (const auto &l : j.value("links", json::array())) {
        if (!l.is_array() || l.size() != 3) throw std::invalid_argument("pattern: link must be [a, b, mult]");
        links.push_back({l[0].get<int>(), l[1].get<int>(), l[2].get<int>()});
    }
    std::map<int, int> defects;
    const json d = j.value("defects", json::object());
    for (const auto &[k, c] : d.items()) defects[std::stoi(k)] = c.get<int>();
    return LinkPattern(std::move(vals), links, std::move(defects));
}

namespace {

class TextReader {
public:
    explicit TextReader(std::string_view s) : s_(s) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int number() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return std::stoi(std::string(s_.substr(start, i_ - start)));
    }
    bool done() {
        skip();
        return i_ == s_.size();
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw std::invalid_argument("pattern text: " + what + " at offset " + std::to_string(i_));
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

LinkPattern parse_pattern(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return pattern_from_json(json::parse(text));

    TextReader r(text);
    std::vector<int> vals;
    r.expect('(');
    if (!r.peek(')')) do vals.push_back(r.number());
        while (r.accept(','));
    r.expect(')');
    std::vector<Link> links;
    r.expect('[');
    while (!r.peek(']')) {
        Link l;
        l.a = r.number();
        r.expect('-');
        l.b = r.number();
        l.mult = r.accept('x') ? r.number() : 1;
        links.push_back(l);
        r.accept(',');
    }
    r.expect(']');
    std::map<int, int> defects;
    if (r.accept('{')) {
        while (!r.peek('}')) {
            int i = r.number();
            r.expect(':');
            defects[i] += r.number();
            r.accept(',');
        }
        r.expect('}');
    }
    if (!r.done()) r.fail("trailing characters");
    return LinkPattern(std::move(vals), links, std::move(defects));
}

json to_json(const TensorVector &v) {
    json coeffs = json::array();
    for (const auto &[idx, c] : v.coeffs()) coeffs.push_back({{"index", idx}, {"value", c.str()}});
    return {{"shape", v.dims()}, {"coeffs", coeffs}};
}

TensorVector vector_from_json(const json &j) {
    TensorVector v(j.at("shape").get<std::vector<int>>());
    for (const auto &c : j.at("coeffs"))
        v.add(c.at("index").get<MultiIndex>(), ExactScalar::parse(c.at("value").get<std::string>()));
    return v;
}

json to_json(const CoulombExpr &f) {
    json exps = json::array(), den = json::array(), num = json::array();
    for (int i = 1; i <= f.p(); ++i)
        for (int j = i + 1; j <= f.p(); ++j) {
            const Exponent &e = f.exponent(i, j);
            if (e.a != 0 || e.b != 0) exps.push_back({{"pair", {i, j}}, {"value", e.str()}});
            if (int k = f.denominator_power(i, j)) den.push_back({{"pair", {i, j}}, {"power", k}});
        }
    for (const auto &[m, c] : f.numerator().terms()) num.push_back({{"monomial", m}, {"value", c.str()}});
    return {{"p", f.p()}, {"exponents", exps}, {"denominator", den}, {"numerator", num}};
}

} // namespace qlp
