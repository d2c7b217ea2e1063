#pragma once

#include <vector>

namespace topoclique {

/// A maximum clique of the graph given by a dense adjacency matrix, as a
/// sorted list of indices. Bron-Kerbosch with pivoting; among cliques of
/// maximum size the first one met in the search is returned, so the result
/// depends only on the input.
std::vector<int> maximum_clique(const std::vector<std::vector<char>>& adj);

}  // namespace topoclique
