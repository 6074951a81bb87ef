#pragma once

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere (DIMACS also skips 'c' lines). Serializers emit the
// canonical form, so serialize(parse(s)) == s for canonical s.
//
//   relation q=<q> r=<r>          explicit relation, one tuple per line
//   nur d=<d> l=<l> q=<q>         shorthand for NUR_{d,l}^q
//
//   graph n=<n> m=<m>             then m lines "e u v"
//   hgraph n=<n> m=<m>            then m lines "he s v1 ... vs"
//   urfc q=<q>                    graph block, then one
//                                 "block d=<d> l=<l> count=<c>" with c lines of
//                                 d*l ids, set by set
//   gurfc q=<q>                   graph block, then any number of blocks
//   rcc                           graph block, "rel <spec>", then
//                                 "constraints count=<c>" and c lines of r ids
//   rclc                          as rcc, with "list v: c1 c2 ..." for every
//                                 vertex between "rel" and "constraints"
//   cliquekv                      graph block, then "modulator k=<k> x1 ... xk"
//
// A relation spec after "rel" is one of "nur d=.. l=.. q=..",
// "relation q=.. r=.. count=<c>" followed by c tuple lines, or "file <path>".

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ccker/instances.hpp"

namespace ccker {

Relation parse_relation(std::istream& in, const Limits& limits = {});
std::string serialize_relation(const Relation& rel);

Graph parse_graph(std::istream& in);
std::string serialize_graph(const Graph& g);

Hypergraph parse_hypergraph(std::istream& in);
std::string serialize_hypergraph(const Hypergraph& h);

UrfcInstance parse_urfc(std::istream& in);
std::string serialize_urfc(const UrfcInstance& inst);

GurfcInstance parse_gurfc(std::istream& in);
std::string serialize_gurfc(const GurfcInstance& inst);

/// `rel file <path>` is resolved against `base_dir`. If `rel_spec` is given it
/// receives the text after "rel" so a caller can write the same reference back.
RccInstance parse_rcc(std::istream& in, const std::filesystem::path& base_dir = {}, const Limits& limits = {},
                      std::string* rel_spec = nullptr);
/// An empty `rel_spec` writes the relation inline.
std::string serialize_rcc(const RccInstance& inst, const std::string& rel_spec = {});

RclcInstance parse_rclc(std::istream& in, const std::filesystem::path& base_dir = {}, const Limits& limits = {},
                        std::string* rel_spec = nullptr);
std::string serialize_rclc(const RclcInstance& inst, const std::string& rel_spec = {});

CliqueKvInstance parse_cliquekv(std::istream& in);
std::string serialize_cliquekv(const CliqueKvInstance& inst);

CnfFormula parse_dimacs(std::istream& in);
std::string serialize_dimacs(const CnfFormula& f);

/// "# key=value" lines; parsers skip them as comments.
std::string metadata_header(const std::vector<std::pair<std::string, std::string>>& entries);

/// First keyword of the first non-comment line ("graph", "urfc", "p", ...).
std::string sniff_kind(std::istream& in);

} // namespace ccker
