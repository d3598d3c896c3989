#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "raagpath/certify.hpp"
#include "raagpath/cover.hpp"
#include "raagpath/hom.hpp"
#include "raagpath/paths.hpp"

namespace raagpath {

using Json = nlohmann::ordered_json;

/// One line per vertex, `name: neighbor neighbor ...`. Blank lines and text
/// after '#' are ignored. Every neighbor must have its own line and list the
/// vertex back. Throws ParseError.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(Graph const &g);

/// `{"vertices": [...], "edges": [[a, b], ...]}`. Throws ParseError.
Graph graph_from_json(Json const &j);
Json graph_to_json(Graph const &g);

std::string to_dot(Graph const &g, std::string_view name = "G");

/// Parses JSON text, converting syntax errors to ParseError with line and
/// column.
Json parse_json(std::string_view text);

/// Reads a whole file; throws ParseError (line 0) when it cannot be opened.
std::string read_file(std::filesystem::path const &path);

/// JSON when the first non-blank character is '{', adjacency text otherwise.
Graph load_graph(std::filesystem::path const &path);
Graph parse_graph(std::string_view text);

/// A map file: `domain` and `codomain` are inline graphs or file names
/// (relative to `dir`), `assignment` is an object from domain to codomain
/// names, `domain_order` an optional list of domain names.
OrderedMap map_from_json(Json const &j, std::filesystem::path const &dir = {});
Json map_to_json(OrderedMap const &om);
OrderedMap load_map(std::filesystem::path const &path);

/// `{"base": name, "walk": [name, ...]}`; `walk` lists the steps after the
/// base. Throws ParseError.
Walk walk_from_json(Graph const &g, Json const &j);
Json walk_to_json(Graph const &g, Walk const &w);

Json path_to_json(Graph const &g, Path const &p);
Json lift_report_to_json(GraphMap const &f, LiftReport const &r);

Json certificate_to_json(Certificate const &c);
Json synthesized_tree_to_json(SynthesizedTree const &t);
Json cdk_decision_to_json(CdkDecision const &d);
Json lowerbound_to_json(LowerBoundCount const &c);

} // namespace raagpath
