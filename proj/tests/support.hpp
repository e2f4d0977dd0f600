#pragma once

#include <bdom/incidence_graph.hpp>

#include <initializer_list>
#include <vector>

namespace testing
{
    /// A vertex set from 1-based points and 1-based block indices.
    inline auto vset(const bdom::IncidenceGraph & g, std::initializer_list<int> points,
        std::initializer_list<int> blocks) -> bdom::VertexSet
    {
        std::vector<int> ids;
        for (int p : points)
            ids.push_back(p - 1);
        for (int b : blocks)
            ids.push_back(g.block_vertex(b - 1));
        return bdom::VertexSet::from_vertices(g, ids);
    }

    inline auto one_based(std::vector<std::vector<int>> rows) -> std::vector<std::vector<int>>
    {
        for (auto & r : rows)
            for (int & x : r)
                --x;
        return rows;
    }
}
