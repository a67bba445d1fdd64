#include "spinlab/spin_core.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <thread>

namespace spinlab {

// ---------------------------------------------------------------------------
// SymmetricFunction

SymmetricFunction::SymmetricFunction(int arity, std::vector<Rat> weights)
    : k(arity), w(std::move(weights)) {
    if (k < 1) throw PreconditionViolated("arity must be positive");
    if ((int)w.size() != k + 1)
        throw PreconditionViolated("weight vector must have k+1 entries");
    for (const Rat& x : w)
        if (x < 0) throw PreconditionViolated("weights must be nonnegative");
}

bool SymmetricFunction::is_boolean() const {
    return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0 || x == 1; });
}

bool SymmetricFunction::is_self_dual() const {
    for (int l = 0; l <= k; ++l)
        if (w[l] != w[k - l]) return false;
    return true;
}

bool SymmetricFunction::is_constant() const {
    return std::all_of(w.begin(), w.end(), [&](const Rat& x) { return x == w[0]; });
}

static SymmetricFunction from_bits(int k, auto pred) {
    std::vector<Rat> w(k + 1);
    for (int l = 0; l <= k; ++l) w[l] = pred(l) ? 1 : 0;
    return SymmetricFunction(k, std::move(w));
}

SymmetricFunction fn_nae(int k) { return from_bits(k, [&](int l) { return l > 0 && l < k; }); }
SymmetricFunction fn_weak_is(int k) { return from_bits(k, [&](int l) { return l < k; }); }
SymmetricFunction fn_strong_is(int k) { return from_bits(k, [](int l) { return l <= 1; }); }
SymmetricFunction fn_zero(int k) { return from_bits(k, [](int) { return false; }); }
SymmetricFunction fn_one(int k) { return from_bits(k, [](int) { return true; }); }
SymmetricFunction fn_all_zero(int k) { return from_bits(k, [](int l) { return l == 0; }); }
SymmetricFunction fn_all_one(int k) { return from_bits(k, [&](int l) { return l == k; }); }
SymmetricFunction fn_eq(int k) { return from_bits(k, [&](int l) { return l == 0 || l == k; }); }
SymmetricFunction fn_even(int k) { return from_bits(k, [](int l) { return l % 2 == 0; }); }
SymmetricFunction fn_odd(int k) { return from_bits(k, [](int l) { return l % 2 == 1; }); }

// ---------------------------------------------------------------------------
// Hypergraph

void Hypergraph::add_edge(std::vector<int> e) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw PreconditionViolated("edge has repeated vertices");
    if (e.empty() || e.front() < 0 || e.back() >= n)
        throw PreconditionViolated("edge vertex out of range");
    if (!edges.empty() && (int)e.size() != (int)edges.front().size())
        throw ArityMismatch("mixed edge sizes in hypergraph");
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;  // set semantics
    edges.insert(it, std::move(e));
}

bool Hypergraph::has_edge(const std::vector<int>& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

void Hypergraph::remove_edge(const std::vector<int>& e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) edges.erase(it);
}

int Hypergraph::arity() const { return edges.empty() ? 0 : (int)edges.front().size(); }

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    return d;
}

int Hypergraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, degree(v));
    return best;
}

Hypergraph complete_hypergraph(int n, int k) {
    Hypergraph H(n);
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i;
    while (true) {
        H.add_edge(e);
        int i = k - 1;
        while (i >= 0 && e[i] == n - k + i) --i;
        if (i < 0) break;
        ++e[i];
        for (int j = i + 1; j < k; ++j) e[j] = e[j - 1] + 1;
    }
    return H;
}

// ---------------------------------------------------------------------------
// AdmissibleCollection

void AdmissibleCollection::validate(int n) const {
    std::vector<char> seen(n, 0);
    auto mark = [&](const std::vector<int>& vs) {
        for (int v : vs) {
            if (v < 0 || v >= n) throw PreconditionViolated("conditioned vertex out of range");
            if (seen[v]) throw PreconditionViolated("conditioning sets are not disjoint");
            seen[v] = 1;
        }
    };
    mark(pin0);
    mark(pin1);
    for (const auto& b : eq_blocks) {
        if (b.size() < 2)
            throw PreconditionViolated("equality block with fewer than 2 vertices is vacuous");
        mark(b);
    }
}

// ---------------------------------------------------------------------------
// Enumeration engine
//
// Pinned vertices are fixed; each equality block collapses to one toggle
// group; each remaining free vertex is its own group.  The group space is
// walked in Gray-code order so each step flips exactly one group and the
// per-edge one-counts are updated incrementally.

Rat weight(const SymmetricFunction& f, const Hypergraph& H, Config sigma) {
    if (H.arity() != 0 && H.arity() != f.k)
        throw ArityMismatch("hypergraph arity does not match function arity");
    Rat acc = 1;
    for (const auto& e : H.edges) {
        int ones = 0;
        for (int v : e) ones += (sigma >> v) & 1;
        if (f.w[ones] == 0) return Rat(0);
        acc *= f.w[ones];
    }
    return acc;
}

namespace {

struct ShardResult {
    std::vector<Rat> sums;
};

// One contiguous Gray-code range [lo, hi) of the group space.
void run_shard(const SymmetricFunction& f, const Hypergraph& H, Config fixed1,
               const std::vector<Config>& group_masks,
               const std::vector<std::vector<std::pair<int, int>>>& group_edges,
               const std::vector<int>& base_count, const std::vector<int>& s_kind,
               bool boolean_fast, std::uint64_t lo, std::uint64_t hi, ShardResult& out) {
    const int m = (int)H.edges.size();
    const int nt = (int)out.sums.size();
    std::vector<Int> counts_int;
    if (boolean_fast) counts_int.assign(nt, 0);

    std::uint64_t gray = lo ^ (lo >> 1);
    std::vector<int> cnt = base_count;
    Config sigma = fixed1;
    for (size_t g = 0; g < group_masks.size(); ++g) {
        if ((gray >> g) & 1) {
            sigma |= group_masks[g];
            for (auto [e, c] : group_edges[g]) cnt[e] += c;
        }
    }
    int zero_edges = 0;
    for (int e = 0; e < m; ++e) zero_edges += f.w[cnt[e]] == 0;

    for (std::uint64_t i = lo; i < hi; ++i) {
        if (zero_edges == 0) {
            unsigned tau = 0;
            for (int j = 0; j < (int)s_kind.size(); ++j) {
                int kind = s_kind[j];
                int bit = kind == -1 ? 0 : kind == -2 ? 1 : (int)((gray >> kind) & 1);
                tau |= (unsigned)bit << j;
            }
            if (boolean_fast) {
                ++counts_int[tau];
            } else {
                Rat prod = 1;
                for (int e = 0; e < m; ++e) prod *= f.w[cnt[e]];
                out.sums[tau] += prod;
            }
        }
        if (i + 1 == hi) break;
        int g = std::countr_zero(i + 1);
        bool was_on = (gray >> g) & 1;
        gray ^= std::uint64_t(1) << g;
        sigma ^= group_masks[g];
        for (auto [e, c] : group_edges[g]) {
            zero_edges -= f.w[cnt[e]] == 0;
            cnt[e] += was_on ? -c : c;
            zero_edges += f.w[cnt[e]] == 0;
        }
    }
    if (boolean_fast)
        for (int t = 0; t < nt; ++t) out.sums[t] = Rat(counts_int[t]);
}

}  // namespace

std::vector<Rat> conditional_sums(const SymmetricFunction& f, const Hypergraph& H,
                                  const AdmissibleCollection& cond, const std::vector<int>& S,
                                  const EnumOptions& opts) {
    if (H.arity() != 0 && H.arity() != f.k)
        throw ArityMismatch("hypergraph arity does not match function arity");
    cond.validate(H.n);
    for (int v : S)
        if (v < 0 || v >= H.n) throw PreconditionViolated("subject vertex out of range");

    // Vertex roles: -1 pin0, -2 pin1, >=0 toggle-group index.
    std::vector<int> role(H.n, INT_MIN);
    for (int v : cond.pin0) role[v] = -1;
    for (int v : cond.pin1) role[v] = -2;
    std::vector<Config> group_masks;
    for (const auto& b : cond.eq_blocks) {
        Config mask = 0;
        for (int v : b) {
            role[v] = (int)group_masks.size();
            mask |= Config(1) << v;
        }
        group_masks.push_back(mask);
    }
    for (int v = 0; v < H.n; ++v) {
        if (role[v] != INT_MIN) continue;
        role[v] = (int)group_masks.size();
        group_masks.push_back(Config(1) << v);
    }

    int groups = (int)group_masks.size();
    if (groups > opts.cap || groups > 62) throw CapExceeded(groups, std::min(opts.cap, 62));

    Config fixed1 = 0;
    for (int v : cond.pin1) fixed1 |= Config(1) << v;

    const int m = (int)H.edges.size();
    std::vector<int> base_count(m, 0);
    std::vector<std::vector<std::pair<int, int>>> group_edges(groups);
    for (int e = 0; e < m; ++e) {
        std::vector<int> per_group(groups, 0);
        for (int v : H.edges[e]) {
            if (role[v] == -2)
                ++base_count[e];
            else if (role[v] >= 0)
                ++per_group[role[v]];
        }
        for (int g = 0; g < groups; ++g)
            if (per_group[g]) group_edges[g].push_back({e, per_group[g]});
    }

    std::vector<int> s_kind(S.size());
    for (size_t j = 0; j < S.size(); ++j) s_kind[j] = role[S[j]];

    const std::uint64_t total = std::uint64_t(1) << groups;
    int shards = std::max(1, opts.shards);
    if ((std::uint64_t)shards > total) shards = (int)total;

    std::vector<ShardResult> parts(shards);
    for (auto& p : parts) p.sums.assign(std::size_t(1) << S.size(), Rat(0));
    auto work = [&](int s) {
        std::uint64_t lo = total / shards * s + std::min<std::uint64_t>(s, total % shards);
        std::uint64_t hi = lo + total / shards + (std::uint64_t(s) < total % shards ? 1 : 0);
        run_shard(f, H, fixed1, group_masks, group_edges, base_count, s_kind, f.is_boolean(),
                  lo, hi, parts[s]);
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < shards; ++s) pool.emplace_back(work, s);
        for (auto& t : pool) t.join();
    }

    std::vector<Rat> sums(std::size_t(1) << S.size(), Rat(0));
    for (const auto& p : parts)
        for (size_t t = 0; t < sums.size(); ++t) sums[t] += p.sums[t];
    return sums;
}

Rat partition_function(const SymmetricFunction& f, const Hypergraph& H, const EnumOptions& opts) {
    return conditional_sums(f, H, {}, {}, opts)[0];
}

MarginalTable marginal(const SymmetricFunction& f, const Hypergraph& H, const std::vector<int>& S,
                       const AdmissibleCollection& cond, const EnumOptions& opts) {
    std::vector<int> subject = S;
    std::sort(subject.begin(), subject.end());
    if (std::adjacent_find(subject.begin(), subject.end()) != subject.end())
        throw PreconditionViolated("subject set has repeated vertices");
    auto sums = conditional_sums(f, H, cond, subject, opts);
    Rat z = 0;
    for (const Rat& s : sums) z += s;
    if (z == 0) throw NotAdmissible();
    MarginalTable t;
    t.subject = std::move(subject);
    t.prob.resize(sums.size());
    for (size_t i = 0; i < sums.size(); ++i) t.prob[i] = sums[i] / z;
    return t;
}

bool is_admissible(const SymmetricFunction& f, const Hypergraph& H,
                   const AdmissibleCollection& cond, const EnumOptions& opts) {
    return conditional_sums(f, H, cond, {}, opts)[0] > 0;
}

// ---------------------------------------------------------------------------
// Polynomial-time Z for the seven easy patterns

namespace {

Rat pow2(int e) { return Rat(Int(1) << e); }

// Rank of a GF(2) system (rows are bitmasks over n variables); rhs is the
// shared right-hand side of every equation.  Returns nullopt if inconsistent.
std::optional<int> gf2_rank(int n, const std::vector<std::vector<int>>& eqs, int rhs) {
    int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> rb;
    for (const auto& e : eqs) {
        std::vector<std::uint64_t> r(words, 0);
        for (int v : e) r[v / 64] |= std::uint64_t(1) << (v % 64);
        rows.push_back(std::move(r));
        rb.push_back(rhs);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if ((rows[r][col / 64] >> (col % 64)) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        std::swap(rb[rank], rb[piv]);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || !((rows[r][col / 64] >> (col % 64)) & 1)) continue;
            for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
            rb[r] ^= rb[rank];
        }
        ++rank;
    }
    for (int r = rank; r < (int)rows.size(); ++r)
        if (rb[r]) return std::nullopt;  // 0 = 1 row
    return rank;
}

}  // namespace

Rat easy_partition(const SymmetricFunction& f, const Hypergraph& H) {
    if (H.arity() != 0 && H.arity() != f.k)
        throw ArityMismatch("hypergraph arity does not match function arity");
    const int k = f.k, n = H.n;
    auto same = [&](const SymmetricFunction& g) { return f.w == g.w; };

    if (same(fn_zero(k))) return H.edges.empty() ? pow2(n) : Rat(0);
    if (same(fn_one(k))) return pow2(n);
    if (same(fn_all_zero(k)) || same(fn_all_one(k))) {
        int isolated = 0;
        for (int v = 0; v < n; ++v) isolated += H.degree(v) == 0;
        return pow2(isolated);
    }
    if (same(fn_eq(k))) {
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& e : H.edges)
            for (size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
        int comps = 0;
        for (int v = 0; v < n; ++v) comps += find(v) == v;
        return pow2(comps);
    }
    if (same(fn_even(k)) || same(fn_odd(k))) {
        int rhs = same(fn_odd(k)) ? 1 : 0;
        auto rank = gf2_rank(n, H.edges, rhs);
        if (!rank) return Rat(0);
        return pow2(n - *rank);
    }
    throw NotEasy();
}

}  // namespace spinlab
