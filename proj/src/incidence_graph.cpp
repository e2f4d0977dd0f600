#include <bdom/errors.hpp>
#include <bdom/incidence_graph.hpp>

#include <algorithm>

using std::vector;

namespace bdom
{
    using std::to_string;

    IncidenceGraph::IncidenceGraph(const Design & d) :
        _v(d.v()),
        _b(d.b()),
        _k(d.k()),
        _r(d.r()),
        _lambda(d.lambda()),
        _block_masks(d.blocks()),
        _point_masks(d.v(), PointSet(d.b())),
        _blocks_through(d.v())
    {
        for (int j = 0; j < _b; ++j)
            for (int p : d.block_points(j)) {
                _point_masks[p].set(j);
                _blocks_through[p].push_back(j);
            }
    }

    auto IncidenceGraph::neighbours(int u) const -> vector<int>
    {
        vector<int> out;
        if (is_point_vertex(u)) {
            for (int j : _blocks_through.at(u))
                out.push_back(_v + j);
        }
        else {
            const auto & m = _block_masks.at(u - _v);
            for (auto p = m.find_first(); p != PointSet::npos; p = m.find_next(p))
                out.push_back(static_cast<int>(p));
        }
        return out;
    }

    auto build_graph(const Design & d) -> IncidenceGraph
    {
        return IncidenceGraph(d);
    }

    auto VertexSet::empty(const IncidenceGraph & g) -> VertexSet
    {
        return VertexSet{PointSet(g.point_count()), PointSet(g.block_count())};
    }

    auto VertexSet::all(const IncidenceGraph & g) -> VertexSet
    {
        auto s = empty(g);
        s.points.set();
        s.blocks.set();
        return s;
    }

    auto VertexSet::from_vertices(const IncidenceGraph & g, const vector<int> & ids) -> VertexSet
    {
        auto s = empty(g);
        for (int u : ids) {
            if (u < 0 || u >= g.vertex_count())
                throw Error(ErrorKind::invalid_input, "vertex id out of range");
            if (g.is_point_vertex(u))
                s.points.set(u);
            else
                s.blocks.set(u - g.point_count());
        }
        return s;
    }

    auto VertexSet::contains_vertex(int u) const -> bool
    {
        auto v = static_cast<int>(points.size());
        return u < v ? points.test(u) : blocks.test(u - v);
    }

    auto VertexSet::point_list() const -> vector<int>
    {
        vector<int> out;
        for (auto p = points.find_first(); p != PointSet::npos; p = points.find_next(p))
            out.push_back(static_cast<int>(p));
        return out;
    }

    auto VertexSet::block_list() const -> vector<int>
    {
        vector<int> out;
        for (auto j = blocks.find_first(); j != PointSet::npos; j = blocks.find_next(j))
            out.push_back(static_cast<int>(j));
        return out;
    }

    auto VertexSet::vertices() const -> vector<int>
    {
        auto out = point_list();
        auto v = static_cast<int>(points.size());
        for (int j : block_list())
            out.push_back(v + j);
        return out;
    }

    auto canonical_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.vertices() < b.vertices();
    }

    auto is_dominating(const IncidenceGraph & g, const VertexSet & s) -> bool
    {
        for (int p = 0; p < g.point_count(); ++p)
            if (! s.points.test(p) && ! g.blocks_through_mask(p).intersects(s.blocks))
                return false;
        for (int j = 0; j < g.block_count(); ++j)
            if (! s.blocks.test(j) && ! g.block_mask(j).intersects(s.points))
                return false;
        return true;
    }

    auto is_independent(const IncidenceGraph & g, const VertexSet & s) -> bool
    {
        for (auto j = s.blocks.find_first(); j != PointSet::npos; j = s.blocks.find_next(j))
            if (g.block_mask(static_cast<int>(j)).intersects(s.points))
                return false;
        return true;
    }

    auto girth_at_least_6(const IncidenceGraph & g) -> bool
    {
        for (int i = 0; i < g.block_count(); ++i)
            for (int j = i + 1; j < g.block_count(); ++j)
                if ((g.block_mask(i) & g.block_mask(j)).count() >= 2)
                    return false;
        return true;
    }
}
