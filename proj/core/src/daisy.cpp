#include "daisy/daisy.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace daisy {

void DaisyShape::validate() const {
    if (s < 1 || t < s || s > r)
        throw std::invalid_argument("daisy shape needs 1 <= s <= t and s <= r");
}

bool witness_valid(const UniformFamily& f, const DaisyShape& shape,
                   const DaisyWitness& w) {
    if (static_cast<int>(w.stem.size()) != shape.r - shape.s) return false;
    if (static_cast<int>(w.petals.size()) != shape.t) return false;
    if (!is_strictly_increasing(w.stem, f.n()) ||
        !is_strictly_increasing(w.petals, f.n()))
        return false;
    for (int v : w.stem)
        if (std::binary_search(w.petals.begin(), w.petals.end(), v)) return false;

    std::vector<int> idx(static_cast<std::size_t>(shape.s));
    for (int i = 0; i < shape.s; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> x(static_cast<std::size_t>(shape.s));
    std::vector<int> edge(static_cast<std::size_t>(shape.r));
    do {
        for (int i = 0; i < shape.s; ++i)
            x[static_cast<std::size_t>(i)] =
                w.petals[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]) - 1];
        std::merge(w.stem.begin(), w.stem.end(), x.begin(), x.end(), edge.begin());
        if (!f.contains_rank(colex_rank(edge))) return false;
    } while (next_subset_colex(idx, shape.t));
    return true;
}

namespace {

// Petal-candidate link of one stem: the s-subsets completing member edges.
struct StemLink {
    Bitset sub_ranks; // over colex ranks of s-subsets of [n]
    Bitset verts;     // 0-based vertex presence
};

std::uint64_t pair_rank(int a, int b) { // a < b, 1-based
    return static_cast<std::uint64_t>(b - 1) * (b - 2) / 2 +
           static_cast<std::uint64_t>(a - 1);
}

int greedy_color_count(const std::vector<Bitset>& adj, const Bitset& cand) {
    std::vector<Bitset> classes;
    for (std::size_t v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
        bool placed = false;
        for (Bitset& cls : classes) {
            if (!cls.intersects(adj[v])) {
                cls.set(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.emplace_back(cand.size());
            classes.back().set(v);
        }
    }
    return static_cast<int>(classes.size());
}

bool clique_extend(const std::vector<Bitset>& adj, int t, Bitset cand,
                   std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == t) return true;
    const int need = t - static_cast<int>(chosen.size());
    if (static_cast<int>(cand.count()) < need) return false;
    if (greedy_color_count(adj, cand) < need) return false;
    for (std::size_t v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
        cand.reset(v);
        chosen.push_back(static_cast<int>(v));
        if (clique_extend(adj, t, cand & adj[v], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

// t-clique in the stem link viewed as a graph; petals returned as labels.
std::optional<std::vector<int>> search_stem_pairs(const StemLink& link, int t) {
    std::vector<int> labels; // ascending
    for (std::size_t v = link.verts.find_first(); v != Bitset::npos;
         v = link.verts.find_next(v))
        labels.push_back(static_cast<int>(v) + 1);
    const int count = static_cast<int>(labels.size());
    if (count < t) return std::nullopt;

    std::vector<Bitset> adj(static_cast<std::size_t>(count),
                            Bitset(static_cast<std::size_t>(count)));
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (link.sub_ranks.test(pair_rank(labels[static_cast<std::size_t>(i)],
                                              labels[static_cast<std::size_t>(j)]))) {
                adj[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                adj[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
            }

    Bitset cand(static_cast<std::size_t>(count));
    cand.set();
    std::vector<int> chosen;
    if (!clique_extend(adj, t, cand, chosen)) return std::nullopt;
    std::vector<int> petals;
    petals.reserve(chosen.size());
    for (int c : chosen) petals.push_back(labels[static_cast<std::size_t>(c)]);
    std::sort(petals.begin(), petals.end());
    return petals;
}

struct GeneralStemSearch {
    const StemLink& link;
    int s;
    int t;
    std::vector<int> labels;
    std::vector<int> chosen;

    bool feasible(int v) const {
        // every s-subset of chosen+{v} containing v must be a link member
        const int have = static_cast<int>(chosen.size());
        if (have < s - 1) return true;
        std::vector<int> idx(static_cast<std::size_t>(s - 1));
        for (int i = 0; i < s - 1; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        std::vector<int> edge(static_cast<std::size_t>(s));
        do {
            for (int i = 0; i < s - 1; ++i)
                edge[static_cast<std::size_t>(i)] =
                    chosen[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]) - 1];
            edge[static_cast<std::size_t>(s) - 1] = v; // v exceeds all chosen
            if (!link.sub_ranks.test(colex_rank(edge))) return false;
        } while (next_subset_colex(idx, have));
        return true;
    }

    bool extend(std::size_t from) {
        if (static_cast<int>(chosen.size()) == t) return true;
        const int need = t - static_cast<int>(chosen.size());
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= labels.size();
             ++i) {
            int v = labels[i];
            if (!feasible(v)) continue;
            chosen.push_back(v);
            if (extend(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

std::optional<std::vector<int>> search_stem_general(const StemLink& link, int s, int t) {
    GeneralStemSearch search{link, s, t, {}, {}};
    for (std::size_t v = link.verts.find_first(); v != Bitset::npos;
         v = link.verts.find_next(v))
        search.labels.push_back(static_cast<int>(v) + 1);
    if (static_cast<int>(search.labels.size()) < t) return std::nullopt;
    if (!search.extend(0)) return std::nullopt;
    return search.chosen;
}

std::optional<std::vector<int>> search_stem(const StemLink& link, int s, int t) {
    return s == 2 ? search_stem_pairs(link, t) : search_stem_general(link, s, t);
}

} // namespace

std::optional<DaisyWitness> find_daisy(const UniformFamily& f, DaisyShape shape,
                                       int workers) {
    shape.validate();
    if (shape.r != f.r())
        throw std::invalid_argument("shape uniformity differs from the family's");
    if (!shape.fits(f.n()) || f.size() == 0) return std::nullopt;

    const int n = f.n();
    const int r = shape.r;
    const int s = shape.s;
    const std::uint64_t sub_rank_count = binom(n, s);

    // Edge pass: each member contributes one petal candidate per stem.
    std::map<std::uint64_t, StemLink> stems;
    {
        std::vector<int> edge, idx(static_cast<std::size_t>(s)), x, st;
        f.for_each_rank([&](std::uint64_t rank) {
            colex_unrank_into(rank, r, edge);
            for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
            do {
                x.clear();
                st.clear();
                std::size_t xi = 0;
                for (int i = 1; i <= r; ++i) {
                    if (xi < idx.size() && idx[xi] == i) {
                        x.push_back(edge[static_cast<std::size_t>(i) - 1]);
                        ++xi;
                    } else {
                        st.push_back(edge[static_cast<std::size_t>(i) - 1]);
                    }
                }
                StemLink& link = stems[colex_rank(st)];
                if (link.sub_ranks.empty()) {
                    link.sub_ranks.resize(sub_rank_count);
                    link.verts.resize(static_cast<std::size_t>(n));
                }
                link.sub_ranks.set(colex_rank(x));
                for (int v : x) link.verts.set(static_cast<std::size_t>(v) - 1);
            } while (next_subset_colex(idx, r));
        });
    }

    std::vector<std::pair<std::uint64_t, const StemLink*>> order;
    order.reserve(stems.size());
    for (const auto& [rank, link] : stems) order.emplace_back(rank, &link);

    auto make_witness = [&](std::size_t i,
                            std::vector<int> petals) -> DaisyWitness {
        DaisyWitness w;
        w.stem = colex_unrank(order[i].first, r - s);
        w.petals = std::move(petals);
        return w;
    };

    const int thread_count =
        std::min<std::size_t>(std::max(workers, 1), order.size());
    if (thread_count <= 1) {
        for (std::size_t i = 0; i < order.size(); ++i)
            if (auto petals = search_stem(*order[i].second, s, shape.t))
                return make_witness(i, std::move(*petals));
        return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{SIZE_MAX};
    std::vector<std::optional<std::vector<int>>> found(order.size());
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= order.size()) return;
            if (i > best.load()) continue;
            if (auto petals = search_stem(*order[i].second, s, shape.t)) {
                found[i] = std::move(*petals);
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();

    std::size_t win = best.load();
    if (win == SIZE_MAX) return std::nullopt;
    return make_witness(win, std::move(*found[win]));
}

} // namespace daisy
