#ifndef SR_IO_HPP
#define SR_IO_HPP

#include <string>

#include "sr/model.hpp"
#include "sr/reductions.hpp"

namespace sr {

/// Line-oriented instance format:
///
///   # comment
///   agents ann ben cal dee
///   prefs ann: ben (cal dee)
///   prefs ben: ann cal
///   ...
///
/// An entry is a bare name (singleton group) or a parenthesized tie group;
/// groups are listed best first. Parse errors carry the line number and the
/// offending name.
Profile parse_instance(const std::string& text);

/// Canonical form: one agents line, one prefs line per agent in id order,
/// ties as "(a b)" with members in id order. parse(serialize(p)) == p.
std::string serialize_instance(const Profile& profile);

/// Colored graph format:
///
///   classes 2
///   class 1 v w x
///   class 2 p q r
///   edge v p
ColoredGraph parse_colored_graph(const std::string& text);

/// DIMACS CNF restricted to three literals per clause.
CnfFormula parse_dimacs_cnf(const std::string& text);

}  // namespace sr

#endif
