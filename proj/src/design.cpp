#include <bdom/design.hpp>
#include <bdom/errors.hpp>

#include <algorithm>
#include <string>

using std::string;
using std::vector;

namespace bdom
{
    using std::to_string;

    namespace
    {
        auto to_lists(const vector<PointSet> & blocks) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            result.reserve(blocks.size());
            for (const auto & blk : blocks) {
                vector<int> pts;
                for (auto p = blk.find_first(); p != PointSet::npos; p = blk.find_next(p))
                    pts.push_back(static_cast<int>(p));
                result.push_back(std::move(pts));
            }
            return result;
        }

        void require_symmetric(const Design & d)
        {
            if (d.b() != d.v())
                throw Error(ErrorKind::not_symmetric,
                    "design is not symmetric (b=" + to_string(d.b()) + ", v=" + to_string(d.v()) + ")");
        }

        void require_block_index(const Design & d, int block_index)
        {
            if (block_index < 0 || block_index >= d.b())
                throw Error(ErrorKind::invalid_input, "block index " + to_string(block_index) + " out of range");
        }
    }

    auto DesignParams::from(int v, int k, int lambda) -> DesignParams
    {
        if (v < 2 || k < 1 || lambda < 1)
            throw Error(ErrorKind::invalid_input, "design parameters must satisfy v >= 2, k >= 1, lambda >= 1");
        if (k >= v)
            throw Error(ErrorKind::trivial_design, "trivial design: k=" + to_string(k) + " >= v=" + to_string(v));
        if (k == 1 || (lambda * (v - 1)) % (k - 1) != 0)
            throw Error(ErrorKind::invalid_input, "replication number lambda(v-1)/(k-1) is not integral");
        int r = lambda * (v - 1) / (k - 1);
        if ((v * r) % k != 0)
            throw Error(ErrorKind::invalid_input, "block count v*r/k is not integral");
        return DesignParams{v, k, lambda, v * r / k, r};
    }

    auto Design::block_points(int i) const -> vector<int>
    {
        const auto & blk = _blocks.at(i);
        vector<int> pts;
        for (auto p = blk.find_first(); p != PointSet::npos; p = blk.find_next(p))
            pts.push_back(static_cast<int>(p));
        return pts;
    }

    auto Design::block_lists() const -> vector<vector<int>>
    {
        return to_lists(_blocks);
    }

    auto validate_design(int v, const vector<vector<int>> & blocks, int k, int lambda) -> Design
    {
        if (v < 2)
            throw ValidationError(ErrorKind::invalid_input, "point count must be at least 2");
        if (lambda < 1)
            throw ValidationError(ErrorKind::invalid_input, "lambda must be positive");
        if (k < 1)
            throw ValidationError(ErrorKind::invalid_input, "block size must be positive");
        if (k >= v)
            throw ValidationError(ErrorKind::trivial_design,
                "trivial design: k=" + to_string(k) + " >= v=" + to_string(v));
        if (blocks.empty())
            throw ValidationError(ErrorKind::invalid_input, "design has no blocks");

        Design d;
        d._blocks.reserve(blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            PointSet mask(v);
            for (int p : blocks[i]) {
                if (p < 0 || p >= v)
                    throw ValidationError(ErrorKind::invalid_input,
                        "block " + to_string(i + 1) + " has point " + to_string(p + 1) + " out of range");
                if (mask.test(p))
                    throw ValidationError(ErrorKind::invalid_input,
                        "block " + to_string(i + 1) + " repeats point " + to_string(p + 1));
                mask.set(p);
            }
            if (static_cast<int>(mask.count()) != k)
                throw ValidationError(ErrorKind::block_size_violation,
                    "block " + to_string(i + 1) + " has " + to_string(mask.count()) + " points, expected " + to_string(k));
            d._blocks.push_back(std::move(mask));
        }

        vector<int> pair_count(static_cast<std::size_t>(v) * v, 0);
        for (const auto & blk : blocks)
            for (std::size_t a = 0; a < blk.size(); ++a)
                for (std::size_t c = a + 1; c < blk.size(); ++c) {
                    auto [x, y] = std::minmax(blk[a], blk[c]);
                    ++pair_count[static_cast<std::size_t>(x) * v + y];
                }

        for (int x = 0; x < v; ++x)
            for (int y = x + 1; y < v; ++y) {
                int c = pair_count[static_cast<std::size_t>(x) * v + y];
                if (c != lambda)
                    throw ValidationError(ErrorKind::pair_coverage_violation,
                        "pair {" + to_string(x + 1) + "," + to_string(y + 1) + "} lies in " + to_string(c)
                            + " blocks, expected " + to_string(lambda),
                        std::pair{x, y}, c);
            }

        // Constant pair coverage forces constant replication; check it anyway.
        if ((lambda * (v - 1)) % (k - 1) != 0)
            throw ValidationError(ErrorKind::invalid_input, "replication number is not integral");
        int r = lambda * (v - 1) / (k - 1);
        int b = static_cast<int>(blocks.size());
        vector<int> replication(v, 0);
        for (const auto & blk : blocks)
            for (int p : blk)
                ++replication[p];
        for (int p = 0; p < v; ++p)
            if (replication[p] != r)
                throw ValidationError(ErrorKind::invalid_input,
                    "point " + to_string(p + 1) + " lies in " + to_string(replication[p]) + " blocks, expected r=" + to_string(r));
        if (b * k != v * r)
            throw ValidationError(ErrorKind::invalid_input, "counting identity b*k = v*r fails");

        d._params = DesignParams{v, k, lambda, b, r};
        return d;
    }

    auto classify(const Design & d) -> DesignClass
    {
        DesignClass c;
        auto sorted = d.blocks();
        std::sort(sorted.begin(), sorted.end());
        c.is_simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        c.is_steiner = d.lambda() == 1;
        c.is_symmetric = d.b() == d.v();
        c.is_sts = c.is_steiner && d.k() == 3;
        if (c.is_steiner && ! c.is_simple)
            throw std::logic_error("Steiner design with a repeated block");
        if (c.is_symmetric != (d.r() == d.k()))
            throw std::logic_error("b=v and r=k disagree");
        return c;
    }

    auto same_block_multiset(const Design & a, const Design & b) -> bool
    {
        if (a.params() != b.params())
            return false;
        auto x = a.blocks(), y = b.blocks();
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

    auto double_design(const Design & d) -> Design
    {
        auto lists = d.block_lists();
        auto copy = lists;
        lists.insert(lists.end(), copy.begin(), copy.end());
        return validate_design(d.v(), lists, d.k(), 2 * d.lambda());
    }

    auto complement(const Design & d) -> Design
    {
        if (d.v() - d.k() < 2)
            throw Error(ErrorKind::trivial_design, "complement would have blocks of size " + to_string(d.v() - d.k()));
        int lambda = d.b() - 2 * d.r() + d.lambda();
        if (lambda < 1)
            throw Error(ErrorKind::invalid_input, "complement has lambda=" + to_string(lambda));
        vector<vector<int>> lists;
        for (const auto & blk : d.blocks()) {
            vector<int> pts;
            for (int p = 0; p < d.v(); ++p)
                if (! blk.test(p))
                    pts.push_back(p);
            lists.push_back(std::move(pts));
        }
        return validate_design(d.v(), lists, d.v() - d.k(), lambda);
    }

    auto dual(const Design & d) -> Design
    {
        require_symmetric(d);
        vector<vector<int>> lists(d.v());
        for (int p = 0; p < d.v(); ++p)
            for (int j = 0; j < d.b(); ++j)
                if (d.contains(j, p))
                    lists[p].push_back(j);
        return validate_design(d.b(), lists, d.r(), d.lambda());
    }

    auto residual(const Design & d, int block_index) -> Design
    {
        require_symmetric(d);
        require_block_index(d, block_index);
        if (d.k() - d.lambda() < 2)
            throw Error(ErrorKind::degenerate_residual,
                "residual blocks would have size k-lambda=" + to_string(d.k() - d.lambda()));
        const auto & removed = d.block(block_index);
        vector<int> relabel(d.v(), -1);
        int next = 0;
        for (int p = 0; p < d.v(); ++p)
            if (! removed.test(p))
                relabel[p] = next++;
        vector<vector<int>> lists;
        for (int j = 0; j < d.b(); ++j) {
            if (j == block_index)
                continue;
            vector<int> pts;
            for (int p : d.block_points(j))
                if (relabel[p] >= 0)
                    pts.push_back(relabel[p]);
            lists.push_back(std::move(pts));
        }
        return validate_design(d.v() - d.k(), lists, d.k() - d.lambda(), d.lambda());
    }

    auto derived(const Design & d, int block_index) -> Design
    {
        require_symmetric(d);
        require_block_index(d, block_index);
        if (d.lambda() < 2)
            throw Error(ErrorKind::degenerate_derived, "derived design needs lambda >= 2");
        const auto & kept = d.block(block_index);
        vector<int> relabel(d.v(), -1);
        int next = 0;
        for (int p = 0; p < d.v(); ++p)
            if (kept.test(p))
                relabel[p] = next++;
        vector<vector<int>> lists;
        for (int j = 0; j < d.b(); ++j) {
            if (j == block_index)
                continue;
            vector<int> pts;
            for (int p : d.block_points(j))
                if (relabel[p] >= 0)
                    pts.push_back(relabel[p]);
            lists.push_back(std::move(pts));
        }
        return validate_design(d.k(), lists, d.lambda(), d.lambda() - 1);
    }
}
