#ifndef COEDIT_IO_HPP
#define COEDIT_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coedit/cotree.hpp"
#include "coedit/edit_set.hpp"
#include "coedit/graph.hpp"
#include "coedit/heuristic.hpp"
#include "coedit/merge.hpp"
#include "coedit/modular_decomposition.hpp"

namespace coedit {

using Json = nlohmann::ordered_json;

/// Edge list: header `n m`, then m lines `u v`. Blank lines and lines
/// starting with '#' are skipped. Throws ParseError with the offending line.
Graph read_edge_list(std::istream& is);
/// Reads stdin when path is "-".
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& os, const Graph& g);

/// Lines `+ u v` (addition) or `- u v` (deletion). The sign is checked
/// against g; ids must be below g.order().
EditSet read_edit_set(std::istream& is, const Graph& g);
EditSet read_edit_set_file(const std::string& path, const Graph& g);
void write_edit_set(std::ostream& os, const Graph& g, const EditSet& f);

Json to_json(const Cotree& t);
Json to_json(const MDTree& t);
/// Inverse of to_json; throws InputError on malformed trees.
Cotree cotree_from_json(const Json& j);
MDTree mdtree_from_json(const Json& j);

Json to_json(const MergeTrace& trace, const std::vector<SpiderStep>& spider_steps = {});

} // namespace coedit

#endif
