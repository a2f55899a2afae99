#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strata/actions.hpp"
#include "strata/bounds.hpp"
#include "strata/group.hpp"
#include "strata/jacobian.hpp"
#include "strata/signature.hpp"

namespace strata {

class ParseError : public std::invalid_argument {
 public:
  ParseError(size_t position, const std::string& message)
      : std::invalid_argument("at position " + std::to_string(position) + ": " +
                              message),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Grammar: '(' INT ';' ( '-' | INT (',' INT)* ) ')', whitespace-insensitive;
// periods must be >= 2.
Signature parse_signature(const std::string& text);

// Grammar: 'G2:n=' INT | 'Gp:p=' INT ',n=' INT
//        | 'perm:[' cycles (';' cycles)* ']', cycles like "(1 2 3)(4 5)".
FiniteGroup parse_group_spec(const std::string& text,
                             int cap = FiniteGroup::kDefaultCap);

// One permutation in cycle notation -> one-line images (1-based).
std::vector<int> parse_cycles(const std::string& text);

// Words over the named generators: "e" | part ('*' part)*, part = NAME
// ('^' INT)?.
int eval_word(const FiniteGroup& g, const std::string& word);

// --- JSON (stable layouts: keys sorted, no timestamps) ------------------------

using Json = nlohmann::json;

Json to_json(const Signature& sig);
Json to_json(const EquivalenceClassReport& report);
Json to_json(const DecompositionReport& report);
Json to_json(const BoundResult& result);

EquivalenceClassReport equivalence_report_from_json(const Json& j);
DecompositionReport decomposition_report_from_json(const Json& j);

}  // namespace strata
