// serialization.hpp -- canonical JSON automaton format, instance files and
// DOT export.
//
// Automaton format:
//   {"states": [...], "alphabet": [...],
//    "transitions": [{"from": s, "in": a, "out": b, "to": t}, ...]}
// with transitions sorted by (from, in); serializing a parsed file
// reproduces it byte-identically when it was canonical.
//
// Instance format:
//   {"lambda": ["x", "y"], "tiles": [{"phi": "x", "psi": "x"}, ...],
//    "lambda_sharp": optional, "lambda_r": optional, "padding": optional}
// Tile components are strings of single-character symbols or arrays of
// symbols.  A "padding" key marks a pre-padded uniform-length instance.

#ifndef SAUTO_SERIALIZATION_HPP
#define SAUTO_SERIALIZATION_HPP

#include <variant>

#include "sauto/reduction_monoid.hpp"
#include "sauto/reduction_semigroup.hpp"
#include "sauto/transducer.hpp"

namespace sauto {

/// Thrown on malformed documents; messages carry the offending field.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string serialize_automaton(const Transducer& t);
TransducerSpec parse_automaton_spec(const std::string& text); // structure only
Transducer parse_automaton(const std::string& text);          // parses and validates

using AnyInstance = std::variant<PcpInstance, EpcpInstance>;

std::string serialize_instance(const PcpInstance& instance);
std::string serialize_instance(const EpcpInstance& instance);
/// Dispatches on the presence of "padding"; validates the result.
AnyInstance parse_instance(const std::string& text);

/// One node per state, one edge per transition labeled "in/out".
std::string export_dot(const Transducer& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace sauto

#endif
