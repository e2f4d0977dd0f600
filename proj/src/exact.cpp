#include "bits.hpp"

#include <bdom/bounds.hpp>
#include <bdom/errors.hpp>
#include <bdom/exact.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

using std::optional;
using std::string;
using std::vector;

namespace bdom
{
    using std::to_string;

    auto to_string(InvariantKind kind) -> std::string_view
    {
        switch (kind) {
            case InvariantKind::gamma: return "gamma";
            case InvariantKind::tau: return "tau";
            case InvariantKind::beta: return "beta";
            case InvariantKind::idom: return "idom";
        }
        return "unknown";
    }

    auto to_string(ProofStatus status) -> std::string_view
    {
        switch (status) {
            case ProofStatus::optimal: return "optimal";
            case ProofStatus::lower_only_timeout: return "lower-only-timeout";
        }
        return "unknown";
    }

    auto is_transversal(const Design & d, const PointSet & points) -> bool
    {
        for (const auto & blk : d.blocks())
            if (! blk.intersects(points))
                return false;
        return true;
    }

    auto is_independent_point_set(const Design & d, const PointSet & points) -> bool
    {
        for (const auto & blk : d.blocks())
            if (blk.is_subset_of(points))
                return false;
        return true;
    }

    namespace
    {
        using detail::Bits;
        using detail::dispatch_width;
        using clock = std::chrono::steady_clock;

        class Budget
        {
        public:
            Budget(double seconds, std::uint64_t max_nodes) :
                _max_nodes(max_nodes)
            {
                if (seconds > 0)
                    _deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                                   std::chrono::duration<double>(seconds));
            }

            /// Counts a node; false once the budget is spent.
            auto tick() -> bool
            {
                if (_exhausted)
                    return false;
                ++_nodes;
                if (_max_nodes && _nodes > _max_nodes)
                    _exhausted = true;
                else if (_deadline && (_nodes & 1023) == 0 && clock::now() > *_deadline)
                    _exhausted = true;
                return ! _exhausted;
            }

            [[nodiscard]] auto exhausted() const -> bool { return _exhausted; }
            [[nodiscard]] auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            std::uint64_t _max_nodes;
            optional<clock::time_point> _deadline;
            std::uint64_t _nodes = 0;
            bool _exhausted = false;
        };

        template <std::size_t W>
        auto closed_neighbourhoods(const IncidenceGraph & g) -> vector<Bits<W>>
        {
            vector<Bits<W>> nb(g.vertex_count());
            for (int u = 0; u < g.vertex_count(); ++u) {
                nb[u].set(u);
                for (int w : g.neighbours(u))
                    nb[u].set(w);
            }
            return nb;
        }

        // Fewest vertices from `available` whose closed neighbourhoods could
        // cover `undominated`, assuming every pick covers as much as possible.
        // Returns -1 when even all of them cannot cover it.
        template <std::size_t W>
        auto coverage_bound(const vector<Bits<W>> & nb, const Bits<W> & undominated, const Bits<W> & available,
            int max_gain) -> int
        {
            int need = undominated.count();
            if (need == 0)
                return 0;
            thread_local vector<int> buckets;
            buckets.assign(max_gain + 2, 0);
            available.for_each([&](int w) {
                int gain = nb[w].count_and(undominated);
                if (gain > 0)
                    ++buckets[gain];
            });
            int picks = 0;
            for (int gain = max_gain + 1; gain >= 1; --gain) {
                int c = buckets[gain];
                if (c == 0)
                    continue;
                int use = std::min(c, (need + gain - 1) / gain);
                picks += use;
                need -= use * gain;
                if (need <= 0)
                    return picks;
            }
            return -1;
        }

        // Decides whether a dominating set of at most `limit` vertices exists
        // (optionally also independent). Candidates are branched in ascending
        // order, and earlier siblings are forbidden in later branches.
        template <std::size_t W>
        class DominationSearch
        {
        public:
            DominationSearch(const IncidenceGraph & g, bool independent, Budget & budget) :
                _nb(closed_neighbourhoods<W>(g)),
                _all(Bits<W>::prefix(g.vertex_count())),
                _independent(independent),
                _budget(budget),
                _v(g.point_count()),
                _k(g.block_degree()),
                _max_gain(g.max_degree() + 1)
            {
            }

            /// A set of size <= limit, or nullopt when none exists or the
            /// budget ran out (check budget.exhausted()).
            auto find(int limit) -> optional<vector<int>>
            {
                _limit = limit;
                _found.reset();
                _chosen.clear();
                recurse(Bits<W>{}, _all, 0);
                return _found;
            }

            [[nodiscard]] auto neighbourhoods() const -> const vector<Bits<W>> & { return _nb; }

        private:
            void recurse(const Bits<W> & dominated, Bits<W> available, int points_chosen)
            {
                if (_found || ! _budget.tick())
                    return;
                auto undominated = minus(_all, dominated);
                if (undominated.none()) {
                    _found = _chosen;
                    return;
                }
                int size = static_cast<int>(_chosen.size());
                if (size >= _limit)
                    return;
                // Points outside the final point set need covering blocks of k points each.
                int struc = (_v + points_chosen * (_k - 1) + _k - 1) / _k;
                if (struc > _limit)
                    return;
                int extra = coverage_bound(_nb, undominated, available, _max_gain);
                if (extra < 0 || size + extra > _limit)
                    return;

                int branch_vertex = -1, fewest = 0;
                undominated.for_each([&](int u) {
                    int options = _nb[u].count_and(available);
                    if (branch_vertex < 0 || options < fewest) {
                        branch_vertex = u;
                        fewest = options;
                    }
                });
                if (fewest == 0)
                    return;

                auto candidates = _nb[branch_vertex] & available;
                candidates.for_each([&](int c) {
                    if (_found)
                        return;
                    available.reset(c);
                    auto next_available = available;
                    if (_independent)
                        next_available.subtract(_nb[c]);
                    _chosen.push_back(c);
                    recurse(dominated | _nb[c], next_available, points_chosen + (c < _v ? 1 : 0));
                    _chosen.pop_back();
                });
            }

            vector<Bits<W>> _nb;
            Bits<W> _all;
            bool _independent;
            Budget & _budget;
            int _v, _k, _max_gain;
            int _limit = 0;
            vector<int> _chosen;
            optional<vector<int>> _found;
        };

        template <std::size_t W>
        auto greedy_dominating(const vector<Bits<W>> & nb, int n, bool independent) -> vector<int>
        {
            auto all = Bits<W>::prefix(n);
            Bits<W> dominated;
            auto available = all;
            vector<int> chosen;
            while (! (dominated == all)) {
                auto undominated = minus(all, dominated);
                int best = -1, best_gain = -1;
                available.for_each([&](int w) {
                    int gain = nb[w].count_and(undominated);
                    if (gain > best_gain) {
                        best = w;
                        best_gain = gain;
                    }
                });
                if (best < 0 || best_gain == 0)
                    throw std::logic_error("greedy domination stalled");
                chosen.push_back(best);
                dominated |= nb[best];
                available.reset(best);
                if (independent)
                    available.subtract(nb[best]);
            }
            return chosen;
        }

        // Smallest punctured-block closure of a Steiner design, as vertex ids.
        auto best_punctured_closure(const Design & d) -> vector<int>
        {
            vector<int> best;
            for (int j = 0; j < d.b(); ++j)
                for (int x : d.block_points(j)) {
                    auto punctured = d.block(j);
                    punctured.reset(x);
                    vector<int> ids;
                    for (auto p = punctured.find_first(); p != PointSet::npos; p = punctured.find_next(p))
                        ids.push_back(static_cast<int>(p));
                    for (int c = 0; c < d.b(); ++c)
                        if (! d.block(c).intersects(punctured))
                            ids.push_back(d.v() + c);
                    if (best.empty() || ids.size() < best.size())
                        best = std::move(ids);
                }
            return best;
        }

        auto all_points(const Design & d) -> vector<int>
        {
            vector<int> ids(d.v());
            std::iota(ids.begin(), ids.end(), 0);
            return ids;
        }

        template <std::size_t W>
        auto solve_domination(const IncidenceGraph & g, const Design & d, SearchLimits limits, bool independent)
            -> SolveResult
        {
            Budget budget(limits.seconds, limits.max_nodes);
            DominationSearch<W> search(g, independent, budget);

            vector<int> incumbent = greedy_dominating<W>(search.neighbourhoods(), g.vertex_count(), independent);
            auto consider = [&](vector<int> ids) {
                if (ids.size() < incumbent.size())
                    incumbent = std::move(ids);
            };
            if (d.lambda() == 1)
                consider(best_punctured_closure(d));
            if (independent)
                consider(all_points(d));

            auto report = full_report(d);
            int lower = report.best_lower;

            SolveResult result;
            result.invariant = independent ? InvariantKind::idom : InvariantKind::gamma;
            while (lower < static_cast<int>(incumbent.size())) {
                auto found = search.find(lower);
                if (budget.exhausted())
                    break;
                if (found) {
                    incumbent = *found;
                    break;
                }
                ++lower;
            }

            result.value = static_cast<int>(incumbent.size());
            result.upper_bound = result.value;
            result.witness = VertexSet::from_vertices(g, incumbent);
            result.nodes = budget.nodes();
            if (budget.exhausted()) {
                result.status = ProofStatus::lower_only_timeout;
                result.lower_bound = lower;
            }
            else {
                result.status = ProofStatus::optimal;
                result.lower_bound = result.value;
            }

            if (! is_dominating(g, result.witness))
                throw std::logic_error("solver witness does not dominate");
            if (independent && ! is_independent(g, result.witness))
                throw std::logic_error("solver witness is not independent");
            if (! independent && result.optimal()) {
                if (result.value < report.best_lower || (report.best_upper && result.value > *report.best_upper))
                    throw std::logic_error("gamma outside the bound ladder");
            }
            return result;
        }

        // ---- transversals and independent point sets ----

        template <std::size_t W>
        class TransversalSearch
        {
        public:
            TransversalSearch(const Design & d, Budget & budget) :
                _v(d.v()),
                _budget(budget)
            {
                for (const auto & blk : d.blocks()) {
                    Bits<W> m;
                    for (auto p = blk.find_first(); p != PointSet::npos; p = blk.find_next(p))
                        m.set(static_cast<int>(p));
                    _blocks.push_back(m);
                }
            }

            auto greedy() const -> vector<int>
            {
                Bits<W> hit;
                vector<int> chosen;
                vector<bool> covered(_blocks.size(), false);
                for (;;) {
                    vector<int> score(_v, 0);
                    bool any = false;
                    for (std::size_t j = 0; j < _blocks.size(); ++j)
                        if (! covered[j]) {
                            any = true;
                            _blocks[j].for_each([&](int p) { ++score[p]; });
                        }
                    if (! any)
                        return chosen;
                    int best = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
                    chosen.push_back(best);
                    hit.set(best);
                    for (std::size_t j = 0; j < _blocks.size(); ++j)
                        if (_blocks[j].test(best))
                            covered[j] = true;
                }
            }

            /// Greedy packing of uncovered blocks pairwise disjoint on the
            /// available points; -1 if some uncovered block has no option.
            auto packing_bound(const Bits<W> & hit, const Bits<W> & available) const -> int
            {
                Bits<W> used;
                int packed = 0;
                for (const auto & blk : _blocks) {
                    if (blk.intersects(hit))
                        continue;
                    auto opts = blk & available;
                    if (opts.none())
                        return -1;
                    if (! opts.intersects(used)) {
                        used |= opts;
                        ++packed;
                    }
                }
                return packed;
            }

            auto solve(vector<int> incumbent) -> vector<int>
            {
                _best = std::move(incumbent);
                _chosen.clear();
                recurse(Bits<W>{}, Bits<W>::prefix(_v));
                return _best;
            }

            [[nodiscard]] auto root_bound() const -> int
            {
                return std::max(0, packing_bound(Bits<W>{}, Bits<W>::prefix(_v)));
            }

        private:
            void recurse(const Bits<W> & hit, Bits<W> available)
            {
                if (! _budget.tick())
                    return;
                int branch = -1, fewest = 0;
                for (std::size_t j = 0; j < _blocks.size(); ++j) {
                    if (_blocks[j].intersects(hit))
                        continue;
                    int opts = _blocks[j].count_and(available);
                    if (branch < 0 || opts < fewest) {
                        branch = static_cast<int>(j);
                        fewest = opts;
                    }
                }
                if (branch < 0) {
                    if (_chosen.size() < _best.size())
                        _best = _chosen;
                    return;
                }
                int lb = packing_bound(hit, available);
                if (lb < 0 || static_cast<int>(_chosen.size()) + lb >= static_cast<int>(_best.size()))
                    return;
                auto candidates = _blocks[branch] & available;
                candidates.for_each([&](int p) {
                    if (_budget.exhausted())
                        return;
                    available.reset(p);
                    auto next_hit = hit;
                    next_hit.set(p);
                    _chosen.push_back(p);
                    recurse(next_hit, available);
                    _chosen.pop_back();
                });
            }

            int _v;
            Budget & _budget;
            vector<Bits<W>> _blocks;
            vector<int> _chosen;
            vector<int> _best;
        };

        template <std::size_t W>
        class IndependentSetSearch
        {
        public:
            IndependentSetSearch(const Design & d, Budget & budget) :
                _v(d.v()),
                _budget(budget),
                _through(d.v())
            {
                for (int j = 0; j < d.b(); ++j) {
                    Bits<W> m;
                    for (int p : d.block_points(j)) {
                        m.set(p);
                        _through[p].push_back(j);
                    }
                    _blocks.push_back(m);
                }
            }

            auto solve(vector<int> incumbent) -> vector<int>
            {
                _best = std::move(incumbent);
                _chosen.clear();
                recurse(0, Bits<W>{});
                return _best;
            }

            /// Upper bound on any independent set extending `included` with
            /// points from `idx` onwards.
            [[nodiscard]] auto bound(int idx, const Bits<W> & included) const -> int
            {
                Bits<W> open;
                for (int p = idx; p < _v; ++p)
                    open.set(p);
                auto reachable = included | open;
                Bits<W> used;
                int forced_out = 0;
                for (const auto & blk : _blocks) {
                    if (! blk.subset_of(reachable))
                        continue;
                    auto undecided = blk & open;
                    if (! undecided.intersects(used)) {
                        used |= undecided;
                        ++forced_out;
                    }
                }
                return included.count() + (_v - idx) - forced_out;
            }

        private:
            void recurse(int idx, Bits<W> included)
            {
                if (! _budget.tick())
                    return;
                if (idx == _v) {
                    if (_chosen.size() > _best.size())
                        _best = _chosen;
                    return;
                }
                if (bound(idx, included) <= static_cast<int>(_best.size()))
                    return;
                auto with = included;
                with.set(idx);
                bool ok = true;
                for (int j : _through[idx])
                    if (_blocks[j].subset_of(with)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    _chosen.push_back(idx);
                    recurse(idx + 1, with);
                    _chosen.pop_back();
                }
                recurse(idx + 1, included);
            }

            int _v;
            Budget & _budget;
            vector<Bits<W>> _blocks;
            vector<vector<int>> _through;
            vector<int> _chosen;
            vector<int> _best;
        };

        auto points_only(const Design & d, const vector<int> & pts) -> VertexSet
        {
            VertexSet s{PointSet(d.v()), PointSet(d.b())};
            for (int p : pts)
                s.points.set(p);
            return s;
        }

        // Canonical minimum-size dominating set enumeration.
        template <std::size_t W>
        class MinimumEnumerator
        {
        public:
            MinimumEnumerator(const IncidenceGraph & g, int size, Budget & budget) :
                _nb(closed_neighbourhoods<W>(g)),
                _all(Bits<W>::prefix(g.vertex_count())),
                _size(size),
                _budget(budget),
                _max_gain(g.max_degree() + 1)
            {
            }

            auto run() -> vector<vector<int>>
            {
                recurse(Bits<W>{}, _all);
                return std::move(_out);
            }

        private:
            void fill(const Bits<W> & available)
            {
                // Every completion by (size - |chosen|) available vertices dominates.
                vector<int> pool;
                available.for_each([&](int w) { pool.push_back(w); });
                int need = _size - static_cast<int>(_chosen.size());
                if (need > static_cast<int>(pool.size()))
                    return;
                vector<int> idx(need);
                std::iota(idx.begin(), idx.end(), 0);
                for (;;) {
                    if (! _budget.tick())
                        return;
                    auto set = _chosen;
                    for (int i : idx)
                        set.push_back(pool[i]);
                    std::sort(set.begin(), set.end());
                    _out.push_back(std::move(set));
                    int i = need - 1;
                    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - need + i)
                        --i;
                    if (i < 0)
                        return;
                    ++idx[i];
                    for (int j = i + 1; j < need; ++j)
                        idx[j] = idx[j - 1] + 1;
                }
            }

            void recurse(const Bits<W> & dominated, Bits<W> available)
            {
                if (! _budget.tick())
                    return;
                auto undominated = minus(_all, dominated);
                if (undominated.none()) {
                    fill(available);
                    return;
                }
                int size = static_cast<int>(_chosen.size());
                if (size >= _size)
                    return;
                int extra = coverage_bound(_nb, undominated, available, _max_gain);
                if (extra < 0 || size + extra > _size)
                    return;
                int branch_vertex = -1, fewest = 0;
                undominated.for_each([&](int u) {
                    int options = _nb[u].count_and(available);
                    if (branch_vertex < 0 || options < fewest) {
                        branch_vertex = u;
                        fewest = options;
                    }
                });
                auto candidates = _nb[branch_vertex] & available;
                candidates.for_each([&](int c) {
                    if (_budget.exhausted())
                        return;
                    available.reset(c);
                    _chosen.push_back(c);
                    recurse(dominated | _nb[c], available);
                    _chosen.pop_back();
                });
            }

            vector<Bits<W>> _nb;
            Bits<W> _all;
            int _size;
            Budget & _budget;
            int _max_gain;
            vector<int> _chosen;
            vector<vector<int>> _out;
        };

        // Include/exclude over vertices in index order, pruning on vertices
        // whose whole closed neighbourhood is decided and undominated, and on
        // chosen vertices that already lost every possible private neighbour.
        template <std::size_t W>
        class MinimalEnumerator
        {
        public:
            MinimalEnumerator(const IncidenceGraph & g, Budget & budget) :
                _n(g.vertex_count()),
                _nb(closed_neighbourhoods<W>(g)),
                _closing(g.vertex_count()),
                _budget(budget)
            {
                for (int u = 0; u < _n; ++u) {
                    int last = u;
                    _nb[u].for_each([&](int w) { last = std::max(last, w); });
                    _closing[last].push_back(u);
                }
            }

            auto run() -> vector<vector<int>>
            {
                recurse(0, Bits<W>{});
                return std::move(_out);
            }

        private:
            [[nodiscard]] auto irredundant(const Bits<W> & s) const -> bool
            {
                bool ok = true;
                s.for_each([&](int x) {
                    if (! ok)
                        return;
                    bool has_private = false;
                    _nb[x].for_each([&](int u) {
                        if (! has_private && _nb[u].count_and(s) == 1)
                            has_private = true;
                    });
                    if (! has_private)
                        ok = false;
                });
                return ok;
            }

            [[nodiscard]] auto closes_ok(int idx, const Bits<W> & s) const -> bool
            {
                for (int u : _closing[idx])
                    if (! _nb[u].intersects(s))
                        return false;
                return true;
            }

            void recurse(int idx, const Bits<W> & s)
            {
                if (! _budget.tick())
                    return;
                if (idx == _n) {
                    vector<int> ids;
                    s.for_each([&](int u) { ids.push_back(u); });
                    _out.push_back(std::move(ids));
                    return;
                }
                auto with = s;
                with.set(idx);
                if (closes_ok(idx, with) && irredundant(with))
                    recurse(idx + 1, with);
                if (closes_ok(idx, s))
                    recurse(idx + 1, s);
            }

            int _n;
            vector<Bits<W>> _nb;
            vector<vector<int>> _closing;
            Budget & _budget;
            vector<vector<int>> _out;
        };

        auto finish_enumeration(const IncidenceGraph & g, vector<vector<int>> raw, int target, const Budget & budget)
            -> EnumerationResult
        {
            std::sort(raw.begin(), raw.end());
            EnumerationResult result;
            result.target_size = target;
            result.complete = ! budget.exhausted();
            result.nodes = budget.nodes();
            result.sets.reserve(raw.size());
            for (const auto & ids : raw)
                result.sets.push_back(VertexSet::from_vertices(g, ids));
            return result;
        }
    }

    auto gamma_bruteforce(const IncidenceGraph & g, int vertex_cap) -> SolveResult
    {
        int n = g.vertex_count();
        if (n > vertex_cap)
            throw Error(ErrorKind::instance_too_large,
                "brute force limited to " + to_string(vertex_cap) + " vertices, graph has " + to_string(n));
        vector<vector<int>> adj(n);
        for (int u = 0; u < n; ++u)
            adj[u] = g.neighbours(u);

        SolveResult result;
        result.invariant = InvariantKind::gamma;
        vector<char> in(n, 0);
        for (int size = 1; size <= n; ++size) {
            vector<int> idx(size);
            std::iota(idx.begin(), idx.end(), 0);
            for (;;) {
                ++result.nodes;
                std::fill(in.begin(), in.end(), 0);
                for (int i : idx)
                    in[i] = 1;
                bool dominating = true;
                for (int u = 0; u < n && dominating; ++u) {
                    if (in[u])
                        continue;
                    bool seen = false;
                    for (int w : adj[u])
                        if (in[w]) {
                            seen = true;
                            break;
                        }
                    dominating = seen;
                }
                if (dominating) {
                    result.value = result.lower_bound = result.upper_bound = size;
                    result.witness = VertexSet::from_vertices(g, idx);
                    return result;
                }
                int i = size - 1;
                while (i >= 0 && idx[i] == n - size + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }
        throw std::logic_error("no dominating set found");
    }

    auto gamma_bnb(const IncidenceGraph & g, const Design & d, SearchLimits limits) -> SolveResult
    {
        return dispatch_width(g.vertex_count(),
            [&](auto w) { return solve_domination<decltype(w)::value>(g, d, limits, false); });
    }

    auto idom_exact(const IncidenceGraph & g, const Design & d, SearchLimits limits) -> SolveResult
    {
        return dispatch_width(g.vertex_count(),
            [&](auto w) { return solve_domination<decltype(w)::value>(g, d, limits, true); });
    }

    auto tau_exact(const Design & d, SearchLimits limits) -> SolveResult
    {
        return dispatch_width(d.v(), [&](auto w) {
            constexpr std::size_t W = decltype(w)::value;
            Budget budget(limits.seconds, limits.max_nodes);
            TransversalSearch<W> search(d, budget);
            auto best = search.solve(search.greedy());
            SolveResult result;
            result.invariant = InvariantKind::tau;
            result.value = result.upper_bound = static_cast<int>(best.size());
            result.witness = points_only(d, best);
            result.nodes = budget.nodes();
            if (budget.exhausted()) {
                result.status = ProofStatus::lower_only_timeout;
                result.lower_bound = std::min(result.value, search.root_bound());
            }
            else
                result.lower_bound = result.value;
            if (! is_transversal(d, result.witness.points))
                throw std::logic_error("tau witness misses a block");
            return result;
        });
    }

    auto beta_exact(const Design & d, SearchLimits limits) -> SolveResult
    {
        auto tau = tau_exact(d, limits);
        auto result = dispatch_width(d.v(), [&](auto w) {
            constexpr std::size_t W = decltype(w)::value;
            Budget budget(limits.seconds, limits.max_nodes);
            IndependentSetSearch<W> search(d, budget);
            vector<int> start;
            for (int p = 0; p < d.v(); ++p)
                if (! tau.witness.points.test(p))
                    start.push_back(p);
            auto best = search.solve(start);
            SolveResult r;
            r.invariant = InvariantKind::beta;
            r.value = r.lower_bound = static_cast<int>(best.size());
            r.witness = points_only(d, best);
            r.nodes = budget.nodes();
            if (budget.exhausted()) {
                r.status = ProofStatus::lower_only_timeout;
                r.upper_bound = std::max(r.value, d.v() - tau.lower_bound);
            }
            else
                r.upper_bound = r.value;
            return r;
        });
        if (! is_independent_point_set(d, result.witness.points))
            throw std::logic_error("beta witness contains a block");
        if (result.optimal() && tau.optimal() && result.value != d.v() - tau.value)
            throw std::logic_error("beta + tau != v");
        return result;
    }

    auto enumerate_min_dominating(const IncidenceGraph & g, int size, EnumerationBudget budget) -> EnumerationResult
    {
        if (budget.max_vertices > 0 && g.vertex_count() > budget.max_vertices)
            throw Error(ErrorKind::budget_exceeded,
                "enumeration limited to " + to_string(budget.max_vertices) + " vertices");
        if (size < 0 || size > g.vertex_count())
            throw Error(ErrorKind::invalid_input, "set size out of range");
        Budget counter(budget.seconds, budget.max_nodes);
        auto raw = dispatch_width(g.vertex_count(), [&](auto w) {
            MinimumEnumerator<decltype(w)::value> e(g, size, counter);
            return e.run();
        });
        return finish_enumeration(g, std::move(raw), size, counter);
    }

    auto enumerate_minimal_dominating(const IncidenceGraph & g, EnumerationBudget budget) -> EnumerationResult
    {
        if (budget.max_vertices > 0 && g.vertex_count() > budget.max_vertices)
            throw Error(ErrorKind::budget_exceeded,
                "minimal enumeration limited to " + to_string(budget.max_vertices) + " vertices, graph has "
                    + to_string(g.vertex_count()));
        Budget counter(budget.seconds, budget.max_nodes);
        auto raw = dispatch_width(g.vertex_count(), [&](auto w) {
            MinimalEnumerator<decltype(w)::value> e(g, counter);
            return e.run();
        });
        return finish_enumeration(g, std::move(raw), 0, counter);
    }

    auto has_epn_property(const IncidenceGraph & g, const VertexSet & s) -> bool
    {
        for (int x : s.vertices()) {
            bool found = false;
            for (int u : g.neighbours(x)) {
                if (s.contains_vertex(u))
                    continue;
                int in_s = 0;
                for (int w : g.neighbours(u))
                    in_s += s.contains_vertex(w) ? 1 : 0;
                if (in_s == 1) {
                    found = true;
                    break;
                }
            }
            if (! found)
                return false;
        }
        return true;
    }

    auto epn_certificate(const IncidenceGraph & g, const EnumerationResult & sets) -> bool
    {
        for (const auto & s : sets.sets)
            if (has_epn_property(g, s))
                return true;
        if (! sets.complete)
            throw Error(ErrorKind::incomplete_enumeration, "EPN certificate needs a complete enumeration");
        return false;
    }
}
