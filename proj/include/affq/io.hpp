#pragma once

#include <json.hpp>

#include "affq/delta_oracle.hpp"
#include "affq/homology.hpp"
#include "affq/peterson.hpp"

namespace affq {

// parse error with the offending position in the input string
class parse_error : public std::invalid_argument {
  public:
    parse_error(const std::string& msg, size_t pos)
        : std::invalid_argument("at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    size_t position() const { return pos_; }

  private:
    size_t pos_;
};

// ---- grammars ----
// finite word: "e" | "s1 s2 s1"
WeylElement parse_weyl_word(const RootSystem* rs, const std::string& s);
// extended element: product of "s0".."sr" | "tauK" | "t[c1,...,cr]" | "e"
ExtendedAffineElement parse_extended(const RootSystem* rs, const std::string& s);
// scalar: rationals, variables a1..ar / w1..wr, + - * / ^ ( )
RationalFunction parse_scalar(const RootSystem* rs, const std::string& s);
Polynomial parse_poly(const RootSystem* rs, const std::string& s);  // rejects fractions
// parabolic node list: "" | "2" | "1,3"
std::set<int> parse_node_set(const RootSystem* rs, const std::string& s);
// coweight in fundamental-coweight coordinates: "-1,0"
Coweight parse_coweight(const RootSystem* rs, const std::string& s);

// ---- printing (deterministic: length, then shortlex word, then monomials) ----
std::string format_weyl_word(const WeylElement& w);
std::string format_extended(const ExtendedAffineElement& x);
std::string format_nilhecke(const NilHeckeElement& a);
std::string format_delta(const DeltaElement& d);
std::string format_homology(const HomologyElement& m);
std::string format_quantum(const QuantumClass& c);

// ---- JSON ----
nlohmann::json nilhecke_to_json(const NilHeckeElement& a);
nlohmann::json delta_to_json(const DeltaElement& d);
nlohmann::json homology_to_json(const HomologyElement& m);
nlohmann::json quantum_to_json(const QuantumClass& c);
// accepts {"basis":"A"|"delta", "terms":[{"coeff":..., "elem":...}]}; a
// delta-basis element is converted through the oracle and must lie in the
// A~ span
NilHeckeElement nilhecke_from_json(const RootSystem* rs, const nlohmann::json& j);
HomologyElement homology_from_json(const RootSystem* rs, const nlohmann::json& j);

// convenience: positional CLI argument that is either a JSON object or a
// basis-element grammar string
NilHeckeElement parse_nilhecke_arg(const RootSystem* rs, const std::string& s);
HomologyElement parse_homology_arg(const RootSystem* rs, const std::string& s);

}  // namespace affq
