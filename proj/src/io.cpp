#include "affq/io.hpp"

#include <algorithm>
#include <sstream>

namespace affq {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// sort key used by every printer: (length, Z word, shortlex affine word)
struct ElemKey {
    int len;
    std::vector<int> zword;
    std::vector<int> word;
    bool operator<(const ElemKey& o) const {
        if (len != o.len) return len < o.len;
        if (zword != o.zword) return zword < o.zword;
        return word < o.word;
    }
};

ElemKey key_of(const ExtendedAffineElement& x) {
    auto [tau, hat] = x.root_system()->affine().decompose_z(x);
    return {x.length(), tau->tau_word, hat.reduced_word()};
}

}  // namespace

WeylElement parse_weyl_word(const RootSystem* rs, const std::string& s) {
    WeylElement w = WeylElement::identity(rs);
    size_t pos = 0;
    for (const auto& tok : split_ws(s)) {
        pos = s.find(tok, pos);
        if (tok == "e") continue;
        if (tok.size() < 2 || tok[0] != 's')
            throw parse_error("expected generator 's<k>' or 'e', got '" + tok + "'", pos);
        int idx;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (...) {
            throw parse_error("bad generator index in '" + tok + "'", pos);
        }
        if (idx < 1 || idx > rs->rank())
            throw parse_error("generator index out of range in '" + tok + "'", pos);
        w = w * WeylElement::simple(rs, idx);
    }
    return w;
}

ExtendedAffineElement parse_extended(const RootSystem* rs, const std::string& s) {
    ExtendedAffineElement x = ExtendedAffineElement::identity(rs);
    size_t pos = 0;
    for (const auto& tok : split_ws(s)) {
        pos = s.find(tok, pos);
        if (tok == "e") continue;
        if (tok[0] == 's') {
            int idx;
            try {
                idx = std::stoi(tok.substr(1));
            } catch (...) {
                throw parse_error("bad generator index in '" + tok + "'", pos);
            }
            if (idx < 0 || idx > rs->rank())
                throw parse_error("generator index out of range in '" + tok + "'", pos);
            x = x * ExtendedAffineElement::simple(rs, idx);
        } else if (tok.rfind("tau", 0) == 0) {
            int idx;
            try {
                idx = std::stoi(tok.substr(3));
            } catch (...) {
                throw parse_error("bad tau index in '" + tok + "'", pos);
            }
            if (!rs->minuscule_nodes().count(idx))
                throw parse_error("tau index is not a minuscule node in '" + tok + "'", pos);
            x = x * rs->affine().z().tau_of_node(idx).elem;
        } else if (tok[0] == 't' && tok.size() > 1 && tok[1] == '[') {
            if (tok.back() != ']') throw parse_error("unterminated translation token", pos);
            std::string inner = tok.substr(2, tok.size() - 3);
            std::istringstream is(inner);
            IntVec coords;
            std::string piece;
            while (std::getline(is, piece, ',')) {
                try {
                    coords.push_back(std::stoll(piece));
                } catch (...) {
                    throw parse_error("bad coordinate '" + piece + "'", pos);
                }
            }
            if (static_cast<int>(coords.size()) != rs->rank())
                throw parse_error("translation needs " + std::to_string(rs->rank()) + " coordinates",
                                  pos);
            x = x * ExtendedAffineElement::translation(rs, Coweight{coords});
        } else {
            throw parse_error("unknown token '" + tok + "'", pos);
        }
    }
    return x;
}

// ---- scalar expression parser (recursive descent) ----
namespace {
class ScalarParser {
  public:
    ScalarParser(const RootSystem* rs, const std::string& s) : rs_(rs), s_(s) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("trailing input", pos_);
        return v;
    }

  private:
    const RootSystem* rs_;
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                v = v / factor();
            } else {
                // implicit multiplication: "2a1", "a1(a1+a2)"
                skip_ws();
                if (pos_ < s_.size() &&
                    (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                    v *= factor();
                } else {
                    return v;
                }
            }
        }
    }

    RationalFunction factor() {
        RationalFunction v = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            long long e = integer();
            if (e < 0) throw parse_error("negative exponent", start);
            RationalFunction out = RationalFunction::one(rs_->rank());
            for (long long k = 0; k < e; ++k) out *= v;
            return out;
        }
        return v;
    }

    long long integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expected integer", start);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            return RationalFunction(rs_, Polynomial::constant(rs_->rank(), Rational(v)), Rational(1), {});
        }
        if (c == 'a' || c == 'w') {
            size_t start = pos_;
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error("expected variable index", start);
            int idx = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                idx = idx * 10 + (s_[pos_++] - '0');
            if (idx < 1 || idx > rs_->rank()) throw parse_error("variable index out of range", start);
            Polynomial p = c == 'a' ? Polynomial::from_root(*rs_, rs_->simple_root(idx))
                                    : Polynomial::variable(rs_->rank(), idx);
            return RationalFunction(rs_, std::move(p), Rational(1), {});
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }
};
}  // namespace

RationalFunction parse_scalar(const RootSystem* rs, const std::string& s) {
    return ScalarParser(rs, s).parse();
}

Polynomial parse_poly(const RootSystem* rs, const std::string& s) {
    RationalFunction f = parse_scalar(rs, s);
    if (!f.is_polynomial()) throw std::invalid_argument("expected a polynomial, got a fraction: " + s);
    return f.as_polynomial();
}

std::set<int> parse_node_set(const RootSystem* rs, const std::string& s) {
    std::set<int> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        int v;
        try {
            v = std::stoi(piece);
        } catch (...) {
            throw std::invalid_argument("bad node '" + piece + "'");
        }
        if (v < 1 || v > rs->rank()) throw std::invalid_argument("node out of range: " + piece);
        out.insert(v);
    }
    return out;
}

Coweight parse_coweight(const RootSystem* rs, const std::string& s) {
    IntVec coords;
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            coords.push_back(std::stoll(piece));
        } catch (...) {
            throw std::invalid_argument("bad coweight coordinate '" + piece + "'");
        }
    }
    if (static_cast<int>(coords.size()) != rs->rank())
        throw std::invalid_argument("coweight needs " + std::to_string(rs->rank()) + " coordinates");
    return Coweight{coords};
}

// ---- printers ----

std::string format_weyl_word(const WeylElement& w) {
    auto word = w.reduced_word();
    if (word.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += "s" + std::to_string(word[i]);
    }
    return out;
}

std::string format_extended(const ExtendedAffineElement& x) {
    auto [tau, hat] = x.root_system()->affine().decompose_z(x);
    std::string out;
    for (int i : tau->tau_word) out += (out.empty() ? "" : " ") + ("tau" + std::to_string(i));
    for (int i : hat.reduced_word()) out += (out.empty() ? "" : " ") + ("s" + std::to_string(i));
    return out.empty() ? "e" : out;
}

namespace {
template <typename Terms, typename CoeffFmt>
std::string format_sum(const Terms& terms, const char* symbol, CoeffFmt&& coeff_str) {
    if (terms.empty()) return "0";
    std::vector<std::pair<ElemKey, std::string>> items;
    for (const auto& [x, c] : terms) {
        std::string cs = coeff_str(c);
        std::string body = std::string(symbol) + "[" + format_extended(x) + "]";
        std::string term = cs == "1" ? body : "(" + cs + ")*" + body;
        items.emplace_back(key_of(x), term);
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += " + ";
        out += items[i].second;
    }
    return out;
}
}  // namespace

std::string format_nilhecke(const NilHeckeElement& a) {
    const RootSystem* rs = a.root_system();
    return format_sum(a.terms(), "A", [&](const Polynomial& c) { return c.to_string(rs); });
}

std::string format_delta(const DeltaElement& d) {
    const RootSystem* rs = d.root_system();
    return format_sum(d.terms(), "delta",
                      [&](const RationalFunction& c) { return c.normalized().to_string(rs); });
}

std::string format_homology(const HomologyElement& m) {
    const RootSystem* rs = m.root_system();
    return format_sum(m.terms(), "xi", [&](const Polynomial& c) { return c.to_string(rs); });
}

std::string format_quantum(const QuantumClass& c) {
    if (c.is_zero()) return "0";
    const RootSystem* rs = c.root_system();
    std::vector<std::pair<std::tuple<int, std::vector<int>, IntVec>, std::string>> items;
    for (const auto& [key, coeff] : c.terms()) {
        const auto& [qexp, w] = key;
        std::string body;
        bool qzero = std::all_of(qexp.begin(), qexp.end(), [](long long v) { return v == 0; });
        if (!qzero) {
            body += "q[";
            for (size_t i = 0; i < qexp.size(); ++i) {
                if (i) body += ",";
                body += std::to_string(qexp[i]);
            }
            body += "]";
        }
        std::string sword = "S[" + format_weyl_word(w) + "]";
        body = body.empty() ? sword : body + "*" + sword;
        std::string cs = coeff.to_string(rs);
        std::string term = cs == "1" ? body : "(" + cs + ")*" + body;
        items.emplace_back(std::make_tuple(w.length(), w.reduced_word(), qexp), term);
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += " + ";
        out += items[i].second;
    }
    return out;
}

// ---- JSON ----

namespace {
template <typename Terms, typename CoeffFmt>
nlohmann::json json_terms(const Terms& terms, CoeffFmt&& coeff_str) {
    std::vector<std::pair<ElemKey, nlohmann::json>> items;
    for (const auto& [x, c] : terms) {
        nlohmann::json t;
        t["coeff"] = coeff_str(c);
        t["elem"] = format_extended(x);
        items.emplace_back(key_of(x), std::move(t));
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, t] : items) arr.push_back(std::move(t));
    return arr;
}
}  // namespace

nlohmann::json nilhecke_to_json(const NilHeckeElement& a) {
    const RootSystem* rs = a.root_system();
    nlohmann::json j;
    j["basis"] = "A";
    j["terms"] = json_terms(a.terms(), [&](const Polynomial& c) { return c.to_string(rs); });
    return j;
}

nlohmann::json delta_to_json(const DeltaElement& d) {
    const RootSystem* rs = d.root_system();
    nlohmann::json j;
    j["basis"] = "delta";
    j["terms"] =
        json_terms(d.terms(), [&](const RationalFunction& c) { return c.normalized().to_string(rs); });
    return j;
}

nlohmann::json homology_to_json(const HomologyElement& m) {
    const RootSystem* rs = m.root_system();
    nlohmann::json j;
    j["basis"] = "xi";
    j["terms"] = json_terms(m.terms(), [&](const Polynomial& c) { return c.to_string(rs); });
    return j;
}

nlohmann::json quantum_to_json(const QuantumClass& c) {
    const RootSystem* rs = c.root_system();
    nlohmann::json arr = nlohmann::json::array();
    std::vector<std::pair<std::tuple<int, std::vector<int>, IntVec>, nlohmann::json>> items;
    for (const auto& [key, coeff] : c.terms()) {
        nlohmann::json t;
        t["q"] = key.first;
        t["w"] = format_weyl_word(key.second);
        t["coeff"] = coeff.to_string(rs);
        items.emplace_back(std::make_tuple(key.second.length(), key.second.reduced_word(), key.first),
                           std::move(t));
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, t] : items) arr.push_back(std::move(t));
    nlohmann::json j;
    j["terms"] = arr;
    return j;
}

NilHeckeElement nilhecke_from_json(const RootSystem* rs, const nlohmann::json& j) {
    std::string basis = j.value("basis", "A");
    if (basis == "A") {
        NilHeckeElement out(rs);
        for (const auto& t : j.at("terms"))
            out.add_term(parse_extended(rs, t.at("elem").get<std::string>()),
                         parse_poly(rs, t.at("coeff").get<std::string>()));
        return out;
    }
    if (basis == "delta") {
        DeltaElement d(rs);
        for (const auto& t : j.at("terms"))
            d.add_term(parse_extended(rs, t.at("elem").get<std::string>()),
                       parse_scalar(rs, t.at("coeff").get<std::string>()));
        return from_delta_oracle(d);
    }
    throw std::invalid_argument("unknown basis '" + basis + "'");
}

HomologyElement homology_from_json(const RootSystem* rs, const nlohmann::json& j) {
    HomologyElement out(rs);
    for (const auto& t : j.at("terms"))
        out.add_term(parse_extended(rs, t.at("elem").get<std::string>()),
                     parse_poly(rs, t.at("coeff").get<std::string>()));
    return out;
}

NilHeckeElement parse_nilhecke_arg(const RootSystem* rs, const std::string& s) {
    std::string t = s;
    size_t first = t.find_first_not_of(" \t\n");
    if (first != std::string::npos && t[first] == '{')
        return nilhecke_from_json(rs, nlohmann::json::parse(t));
    return NilHeckeElement::basis(parse_extended(rs, s));
}

HomologyElement parse_homology_arg(const RootSystem* rs, const std::string& s) {
    std::string t = s;
    size_t first = t.find_first_not_of(" \t\n");
    if (first != std::string::npos && t[first] == '{')
        return homology_from_json(rs, nlohmann::json::parse(t));
    return HomologyElement::basis(parse_extended(rs, s));
}

}  // namespace affq
