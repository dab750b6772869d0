#include "core/bipartite.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

#include "core/errors.hpp"

namespace pe {

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size)
    : right_size_(right_size), rows_(left_size, Bitset(right_size))
{
}

std::size_t BipartiteGraph::edge_count() const
{
    std::size_t m = 0;
    for (const auto& row : rows_)
        m += row.count();
    return m;
}

void BipartiteGraph::add_edge(std::size_t l, std::size_t r)
{
    if (l >= left_size() || r >= right_size_)
        throw InputError("bipartite edge endpoint out of range");
    rows_[l].set(r);
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<long long> read_numbers(std::string_view line, std::size_t line_no)
{
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
            throw ParseError("expected integers", line_no);
        i = static_cast<std::size_t>(ptr - line.data());
        out.push_back(value);
    }
    return out;
}

}  // namespace

BipartiteGraph BipartiteGraph::parse(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t line_no = 0;
    std::vector<long long> header;
    while (line_no < lines.size() && header.empty()) {
        header = read_numbers(lines[line_no], line_no + 1);
        ++line_no;
    }
    if (header.size() != 3)
        throw ParseError("expected header \"L R m\"", line_no);
    if (header[0] < 0 || header[1] < 0 || header[2] < 0)
        throw ParseError("negative size in header", line_no);
    BipartiteGraph h(static_cast<std::size_t>(header[0]), static_cast<std::size_t>(header[1]));
    std::size_t seen = 0;
    for (; line_no < lines.size(); ++line_no) {
        auto numbers = read_numbers(lines[line_no], line_no + 1);
        if (numbers.empty())
            continue;
        if (numbers.size() != 2)
            throw ParseError("expected \"l r\"", line_no + 1);
        if (numbers[0] < 0 || numbers[0] >= header[0] || numbers[1] < 0 || numbers[1] >= header[1])
            throw ParseError("edge endpoint out of range", line_no + 1);
        const auto l = static_cast<std::size_t>(numbers[0]);
        const auto r = static_cast<std::size_t>(numbers[1]);
        if (h.has_edge(l, r))
            throw ParseError("duplicate edge", line_no + 1);
        h.add_edge(l, r);
        ++seen;
    }
    if (seen != static_cast<std::size_t>(header[2]))
        throw ParseError("header announces " + std::to_string(header[2]) + " edges, found " + std::to_string(seen));
    return h;
}

std::string BipartiteGraph::to_text() const
{
    std::ostringstream out;
    out << left_size() << ' ' << right_size_ << ' ' << edge_count() << '\n';
    for (std::size_t l = 0; l < left_size(); ++l)
        for (std::size_t r = rows_[l].find_first(); r != Bitset::npos; r = rows_[l].find_next(r))
            out << l << ' ' << r << '\n';
    return out.str();
}

BipartiteGraph make_comatching_pattern(std::size_t n)
{
    BipartiteGraph h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                h.add_edge(i, j);
    return h;
}

BipartiteGraph make_ladder_pattern(std::size_t n)
{
    BipartiteGraph h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            h.add_edge(i, j);
    return h;
}

const char* to_string(ObstructionKind kind)
{
    switch (kind) {
    case ObstructionKind::Comatching:
        return "comatching";
    case ObstructionKind::Ladder:
        return "ladder";
    case ObstructionKind::Semiladder:
        return "semiladder";
    }
    return "?";
}

bool is_valid_obstruction(const BipartiteGraph& h, const Obstruction& obs)
{
    const std::size_t n = obs.a_seq.size();
    if (obs.b_seq.size() != n)
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (obs.a_seq[i] >= h.left_size() || obs.b_seq[i] >= h.right_size())
            return false;
        for (std::size_t j = 0; j < n; ++j) {
            const bool edge = h.has_edge(obs.a_seq[i], obs.b_seq[j]);
            switch (obs.kind) {
            case ObstructionKind::Comatching:
                if (edge != (i != j))
                    return false;
                break;
            case ObstructionKind::Ladder:
                if (edge != (i > j))
                    return false;
                break;
            case ObstructionKind::Semiladder:
                if ((i > j && !edge) || (i == j && edge))
                    return false;
                break;
            }
        }
    }
    return true;
}

namespace {

// Pairs are appended one at a time. The state is the set C of left vertices
// still usable as the next a (adjacent to every b so far) and the set X of
// right vertices usable as the next b. Identical left rows are merged first:
// two copies can never occur in the same obstruction.
class IndexSearch {
public:
    IndexSearch(const BipartiteGraph& h, ObstructionKind kind, std::size_t budget) : kind_(kind), budget_(budget)
    {
        std::map<std::vector<std::uint64_t>, std::size_t> seen;
        for (std::size_t l = 0; l < h.left_size(); ++l) {
            std::vector<std::uint64_t> blocks;
            boost::to_block_range(h.row(l), std::back_inserter(blocks));
            if (seen.try_emplace(blocks, rows_.size()).second) {
                rows_.push_back(h.row(l));
                original_.push_back(l);
            }
        }
        right_ = h.right_size();
        cols_.assign(right_, Bitset(rows_.size()));
        for (std::size_t a = 0; a < rows_.size(); ++a)
            for (std::size_t b = rows_[a].find_first(); b != Bitset::npos; b = rows_[a].find_next(b))
                cols_[b].set(a);
    }

    IndexResult run()
    {
        Bitset c(rows_.size());
        c.set();
        Bitset x(right_);
        x.set();
        IndexResult result;
        result.index = solve(c, x);
        result.witness.kind = kind_;
        for (std::size_t step = 0; step < result.index; ++step) {
            const Memo& m = memo_.at(key(c, x));
            result.witness.a_seq.push_back(original_[m.a]);
            result.witness.b_seq.push_back(m.b);
            advance(c, x, m.a, m.b);
        }
        result.states = memo_.size();
        return result;
    }

private:
    struct Memo {
        std::size_t value;
        std::size_t a;
        std::size_t b;
    };

    Bitset key(const Bitset& c, const Bitset& x) const
    {
        Bitset k = c;
        if (kind_ == ObstructionKind::Semiladder)
            return k;
        k.resize(rows_.size() + right_);
        for (std::size_t b = x.find_first(); b != Bitset::npos; b = x.find_next(b))
            k.set(rows_.size() + b);
        return k;
    }

    void advance(Bitset& c, Bitset& x, std::size_t a, std::size_t b) const
    {
        c &= cols_[b];
        switch (kind_) {
        case ObstructionKind::Semiladder:
            break;
        case ObstructionKind::Ladder:
            x -= rows_[a];
            x.reset(b);
            break;
        case ObstructionKind::Comatching:
            x &= rows_[a];
            break;
        }
    }

    std::size_t solve(const Bitset& c, const Bitset& x)
    {
        Bitset k = key(c, x);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second.value;
        if (memo_.size() >= budget_)
            throw ResourceError("obstruction search exceeded its state budget");

        std::size_t bound = c.count();
        if (kind_ != ObstructionKind::Semiladder)
            bound = std::min(bound, x.count());
        Memo best{0, 0, 0};
        for (std::size_t a = c.find_first(); a != Bitset::npos && best.value < bound; a = c.find_next(a)) {
            Bitset options = x - rows_[a];
            for (std::size_t b = options.find_first(); b != Bitset::npos && best.value < bound;
                 b = options.find_next(b)) {
                Bitset c2 = c;
                Bitset x2 = x;
                advance(c2, x2, a, b);
                const std::size_t value = 1 + solve(c2, x2);
                if (value > best.value)
                    best = Memo{value, a, b};
            }
        }
        memo_.emplace(std::move(k), best);
        return best.value;
    }

    ObstructionKind kind_;
    std::size_t budget_;
    std::size_t right_ = 0;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::vector<std::size_t> original_;
    std::unordered_map<Bitset, Memo, std::hash<Bitset>> memo_;
};

constexpr std::size_t kMaxHellyRight = 20;

// For every S subset of R (as a mask), the left vertices adjacent to all of S.
std::vector<Bitset> support_table(const BipartiteGraph& h)
{
    const std::size_t r = h.right_size();
    std::vector<Bitset> cols(r, Bitset(h.left_size()));
    for (std::size_t l = 0; l < h.left_size(); ++l)
        for (std::size_t b = h.row(l).find_first(); b != Bitset::npos; b = h.row(l).find_next(b))
            cols[b].set(l);
    std::vector<Bitset> sup(std::size_t{1} << r);
    sup[0] = Bitset(h.left_size());
    sup[0].set();
    for (std::size_t mask = 1; mask < sup.size(); ++mask) {
        const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
        sup[mask] = sup[mask & (mask - 1)] & cols[low];
    }
    return sup;
}

std::vector<std::size_t> mask_members(std::uint64_t mask)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1)
            out.push_back(i);
    return out;
}

// Does some subset of `b_mask` of size exactly p avoid being covered by `a`?
bool has_uncovered_subset(const std::vector<Bitset>& sup, std::uint64_t b_mask, std::size_t p, const Bitset& a)
{
    auto members = mask_members(b_mask);
    if (p > members.size())
        return false;
    std::vector<std::size_t> pick(p);
    for (std::size_t i = 0; i < p; ++i)
        pick[i] = i;
    while (true) {
        std::uint64_t s = 0;
        for (std::size_t i : pick)
            s |= std::uint64_t{1} << members[i];
        if (!sup[s].intersects(a))
            return true;
        std::size_t i = p;
        while (i > 0 && pick[i - 1] == members.size() - p + i - 1)
            --i;
        if (i == 0)
            return false;
        ++pick[i - 1];
        for (std::size_t j = i; j < p; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

// p-Helly for a single (A, B). Uncovered sets are closed upwards, so it is
// enough to look at subsets of size exactly min(p, |B|).
bool helly_pair_holds(const std::vector<Bitset>& sup, const Bitset& a, std::uint64_t b_mask, std::size_t p)
{
    if (sup[b_mask].intersects(a))
        return true;
    const auto size = static_cast<std::size_t>(__builtin_popcountll(b_mask));
    if (size <= p)
        return true;
    return has_uncovered_subset(sup, b_mask, p, a);
}

std::vector<std::size_t> bitset_members(const Bitset& bits)
{
    std::vector<std::size_t> out;
    for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
        out.push_back(i);
    return out;
}

}  // namespace

IndexResult index_of(const BipartiteGraph& h, ObstructionKind kind, std::size_t state_budget)
{
    return IndexSearch(h, kind, state_budget).run();
}

HellyResult check_p_helly(const BipartiteGraph& h, std::size_t p, HellyVariant variant)
{
    if (h.right_size() > kMaxHellyRight)
        throw ResourceError("Helly check limited to " + std::to_string(kMaxHellyRight) + " right vertices");
    const auto sup = support_table(h);
    Bitset all_left(h.left_size());
    all_left.set();
    const std::uint64_t full = (std::uint64_t{1} << h.right_size()) - 1;

    HellyResult result;
    auto fail = [&](const Bitset& a, std::uint64_t b_mask) {
        result.holds = false;
        result.a_set = bitset_members(a);
        result.b_set = mask_members(b_mask);
        return result;
    };

    switch (variant) {
    case HellyVariant::Weak:
        if (!helly_pair_holds(sup, all_left, full, p))
            return fail(all_left, full);
        break;
    case HellyVariant::Full:
        for (std::uint64_t b = 0; b <= full; ++b)
            if (!helly_pair_holds(sup, all_left, b, p))
                return fail(all_left, b);
        break;
    case HellyVariant::Strong:
        // Coverage is monotone in A, so the hardest A for a given B is the
        // largest one not covering B: every a missing some vertex of B.
        for (std::uint64_t b = 0; b <= full; ++b) {
            Bitset a = all_left - sup[b];
            if (!helly_pair_holds(sup, a, b, p))
                return fail(a, b);
        }
        break;
    }
    return result;
}

std::size_t min_weak_helly(const BipartiteGraph& h)
{
    for (std::size_t p = 0;; ++p)
        if (check_p_helly(h, p, HellyVariant::Weak).holds)
            return p;
}

std::optional<std::size_t> coverage_bruteforce(const BipartiteGraph& h)
{
    for (std::size_t l = 0; l < h.left_size(); ++l)
        if (h.row(l).all())
            return l;
    return std::nullopt;
}

BigInt ramsey_bound(unsigned c, unsigned l)
{
    if (c < 2)
        throw InputError("ramsey_bound needs at least two colours");
    if (l < 1)
        throw InputError("ramsey_bound needs l >= 1");
    return boost::multiprecision::pow(BigInt(c), c * l - 1);
}

EdgeColoring::EdgeColoring(std::size_t n, unsigned colors) : n_(n), colors_(colors), cells_(n * n, 0)
{
    if (colors < 1 || colors > 255)
        throw InputError("colour count must be in 1..255");
}

void EdgeColoring::set_color(std::size_t u, std::size_t v, unsigned color)
{
    if (u >= n_ || v >= n_ || u == v)
        throw InputError("colouring endpoints must be distinct vertices of K_n");
    if (color >= colors_)
        throw InputError("colour out of range");
    cells_[u * n_ + v] = static_cast<std::uint8_t>(color);
    cells_[v * n_ + u] = static_cast<std::uint8_t>(color);
}

std::optional<std::vector<std::size_t>> find_monochromatic(const EdgeColoring& coloring, unsigned l)
{
    if (l < 1)
        throw InputError("find_monochromatic needs l >= 1");
    const std::size_t n = coloring.vertex_count();
    if (n < l)
        return std::nullopt;
    if (l == 1)
        return std::vector<std::size_t>{0};

    // u_1, u_2, ... with every later vertex joined to u_i in the same colour.
    std::vector<std::size_t> sequence;
    std::vector<unsigned> back_color;
    std::vector<std::size_t> remaining(n);
    for (std::size_t v = 0; v < n; ++v)
        remaining[v] = v;
    while (!remaining.empty()) {
        const std::size_t u = remaining.front();
        sequence.push_back(u);
        std::vector<std::vector<std::size_t>> classes(coloring.colors());
        for (std::size_t i = 1; i < remaining.size(); ++i)
            classes[coloring.color(u, remaining[i])].push_back(remaining[i]);
        std::size_t pick = 0;
        for (std::size_t c = 1; c < classes.size(); ++c)
            if (classes[c].size() > classes[pick].size())
                pick = c;
        back_color.push_back(static_cast<unsigned>(pick));
        remaining = std::move(classes[pick]);
    }

    // The last vertex has no constraint and joins any colour group.
    const std::size_t last = sequence.back();
    std::vector<std::vector<std::size_t>> groups(coloring.colors());
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
        groups[back_color[i]].push_back(sequence[i]);
    std::size_t best = 0;
    for (std::size_t c = 1; c < groups.size(); ++c)
        if (groups[c].size() > groups[best].size())
            best = c;
    auto clique = groups[best];
    clique.push_back(last);
    if (clique.size() < l) {
        if (BigInt(n) >= ramsey_bound(std::max(coloring.colors(), 2u), l))
            throw InvariantError("monochromatic extraction failed above the Ramsey bound");
        return std::nullopt;
    }
    clique.resize(l);
    std::sort(clique.begin(), clique.end());

    const unsigned color = coloring.color(clique[0], clique[1]);
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (coloring.color(clique[i], clique[j]) != color)
                throw InvariantError("extracted vertex set is not monochromatic");
    return clique;
}

std::size_t encode_tuple(std::span<const Vertex> tuple, std::size_t n)
{
    std::size_t index = 0;
    for (Vertex v : tuple)
        index = index * n + v;
    return index;
}

std::vector<Vertex> decode_tuple(std::size_t index, std::size_t arity, std::size_t n)
{
    std::vector<Vertex> tuple(arity);
    for (std::size_t i = arity; i > 0; --i) {
        tuple[i - 1] = static_cast<Vertex>(index % n);
        index /= n;
    }
    return tuple;
}

BipartiteGraph materialize(const Graph& g, const DistanceFormula& f, std::size_t pair_budget)
{
    const std::size_t n = g.vertex_count();
    const unsigned c = f.candidate_arity();
    const unsigned d = f.witness_arity();
    std::size_t left = 1;
    std::size_t right = 1;
    for (unsigned i = 0; i < c; ++i) {
        left *= n;
        if (left > pair_budget)
            throw ResourceError("materialization exceeds the pair budget");
    }
    for (unsigned j = 0; j < d; ++j) {
        right *= n;
        if (right > pair_budget)
            throw ResourceError("materialization exceeds the pair budget");
    }
    if (left != 0 && right > pair_budget / left)
        throw ResourceError("materialization exceeds the pair budget");

    const auto dist = all_pairs_capped(g, f.radius());
    BipartiteGraph h(left, right);
    for (std::size_t li = 0; li < left; ++li) {
        const auto a = decode_tuple(li, c, n);
        for (std::size_t ri = 0; ri < right; ++ri) {
            const auto b = decode_tuple(ri, d, n);
            auto cell = [&](unsigned i, unsigned j) { return static_cast<long>(dist[a[i] * n + b[j]]); };
            if (f.evaluate_with(cell) == Truth::True)
                h.add_edge(li, ri);
        }
    }
    return h;
}

}  // namespace pe
