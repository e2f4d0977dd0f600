#include <bdom/errors.hpp>
#include <bdom/neatness.hpp>

#include <algorithm>

using std::optional;
using std::vector;

namespace bdom
{
    using std::to_string;

    auto project(const VertexSet & s) -> PointSet
    {
        return s.points;
    }

    auto split_blocks(const Design & d, const PointSet & points) -> PointProjection
    {
        if (static_cast<int>(points.size()) != d.v())
            throw Error(ErrorKind::invalid_input, "point set has the wrong width");
        PointProjection proj{points, {}, {}};
        for (int j = 0; j < d.b(); ++j)
            (d.block(j).intersects(points) ? proj.meeting : proj.disjoint).push_back(j);
        return proj;
    }

    auto neat_closure(const Design & d, const PointSet & points) -> VertexSet
    {
        auto proj = split_blocks(d, points);
        VertexSet s{points, PointSet(d.b())};
        for (int j : proj.disjoint)
            s.blocks.set(j);
        return s;
    }

    auto is_neat_set(const Design & d, const VertexSet & s) -> bool
    {
        return neat_closure(d, project(s)) == s;
    }

    auto hat_contained(const Design & d, const VertexSet & s) -> bool
    {
        for (int j : split_blocks(d, s.points).disjoint)
            if (! s.blocks.test(j))
                return false;
        return true;
    }

    auto punctured_block_sets(const Design & d) -> vector<VertexSet>
    {
        if (d.lambda() != 1)
            throw Error(ErrorKind::not_steiner, "punctured-block closures need lambda=1");
        IncidenceGraph g(d);
        vector<VertexSet> out;
        for (int j = 0; j < d.b(); ++j)
            for (int x : d.block_points(j)) {
                auto punctured = d.block(j);
                punctured.reset(x);
                auto s = neat_closure(d, punctured);
                if (! is_dominating(g, s))
                    throw std::logic_error("punctured-block closure fails to dominate");
                out.push_back(std::move(s));
            }
        return out;
    }

    auto punctured_pencil_partitions(const Design & d, int point) -> bool
    {
        PointSet seen(d.v());
        for (int j = 0; j < d.b(); ++j) {
            if (! d.contains(j, point))
                continue;
            auto rest = d.block(j);
            rest.reset(point);
            if (rest.intersects(seen))
                return false;
            seen |= rest;
        }
        seen.set(point);
        return seen.all();
    }

    auto classify_neatness(const Design & d, const EnumerationResult & minimum, int idom,
        const EnumerationResult * minimal) -> NeatnessReport
    {
        if (! minimum.complete)
            throw Error(ErrorKind::incomplete_enumeration, "minimum dominating set enumeration is incomplete");
        NeatnessReport rep;
        rep.gamma = minimum.target_size;
        rep.idom = idom;
        rep.minimum_sets = minimum.sets.size();
        for (const auto & s : minimum.sets) {
            if (is_neat_set(d, s)) {
                ++rep.neat_minimum_sets;
                ++rep.neat_by_points[static_cast<int>(s.points.count())];
                if (! rep.neat_witness)
                    rep.neat_witness = s;
            }
            else if (! rep.non_neat_witness)
                rep.non_neat_witness = s;
        }
        rep.is_neat = rep.neat_minimum_sets > 0;
        rep.all_minimum_neat = rep.neat_minimum_sets == rep.minimum_sets;
        if (rep.is_neat != (rep.gamma == rep.idom))
            throw std::logic_error("neat verdict disagrees with gamma = i");

        if (minimal && minimal->complete) {
            rep.minimal_sets = minimal->sets.size();
            bool all_neat = true;
            for (const auto & s : minimal->sets)
                if (! is_neat_set(d, s)) {
                    all_neat = false;
                    rep.non_neat_minimal_witness = s;
                    break;
                }
            rep.is_super_neat = all_neat;
            if (all_neat && ! rep.is_neat)
                throw std::logic_error("super-neat design that is not neat");
        }
        return rep;
    }

    auto pasch_from_blocks(const Design & d, std::array<int, 4> blocks) -> optional<PaschConfiguration>
    {
        if (d.k() != 3)
            return std::nullopt;
        for (int i = 0; i < 4; ++i) {
            if (blocks[i] < 0 || blocks[i] >= d.b())
                return std::nullopt;
            for (int j = i + 1; j < 4; ++j)
                if (blocks[i] == blocks[j])
                    return std::nullopt;
        }
        // Pairwise intersections are single points, all six distinct.
        std::array<int, 6> pts{};
        int at = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                auto common = d.block(blocks[i]) & d.block(blocks[j]);
                if (common.count() != 1)
                    return std::nullopt;
                pts[at++] = static_cast<int>(common.find_first());
            }
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return std::nullopt;
        // Intersections in order (01, 02, 03, 12, 13, 23) are a, b, c, d, e, f.
        return PaschConfiguration{pts, blocks};
    }

    auto find_pasch(const Design & d, std::size_t limit) -> vector<PaschConfiguration>
    {
        if (d.k() != 3 || d.lambda() != 1)
            throw Error(ErrorKind::not_sts, "Pasch configurations are defined for STS");
        vector<PaschConfiguration> out;
        int b = d.b();
        auto meet_once = [&](int x, int y) { return (d.block(x) & d.block(y)).count() == 1; };
        for (int i = 0; i < b; ++i)
            for (int j = i + 1; j < b; ++j) {
                if (! meet_once(i, j))
                    continue;
                for (int k = j + 1; k < b; ++k) {
                    if (! meet_once(i, k) || ! meet_once(j, k))
                        continue;
                    for (int l = k + 1; l < b; ++l) {
                        if (auto c = pasch_from_blocks(d, {i, j, k, l})) {
                            out.push_back(*c);
                            if (limit && out.size() >= limit)
                                return out;
                        }
                    }
                }
            }
        return out;
    }

    auto pasch_trade(const Design & d, const PaschConfiguration & c) -> Design
    {
        auto check = pasch_from_blocks(d, c.blocks);
        if (! check || check->points != c.points)
            throw Error(ErrorKind::invalid_configuration, "blocks do not form the stated Pasch configuration");
        auto [a, b, cc, dd, e, f] = c.points;
        auto lists = d.block_lists();
        vector<vector<int>> replacement{{a, b, dd}, {a, cc, e}, {b, cc, f}, {dd, e, f}};
        for (int i = 0; i < 4; ++i) {
            std::sort(replacement[i].begin(), replacement[i].end());
            lists[c.blocks[i]] = replacement[i];
        }
        return validate_design(d.v(), lists, 3, d.lambda());
    }
}
