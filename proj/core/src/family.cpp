#include "daisy/family.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace daisy {

UniformFamily::UniformFamily(int n, int r, std::uint64_t max_ranks) : n_(n), r_(r) {
    if (n < 0 || r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
    std::uint64_t ranks = binom(n, r);
    if (ranks >= kBinomCap || ranks > max_ranks)
        throw std::overflow_error("binom(n, r) exceeds the rank cap");
    members_.resize(ranks);
}

bool UniformFamily::contains(std::span<const int> edge) const {
    if (static_cast<int>(edge.size()) != r_ || !is_strictly_increasing(edge, n_))
        throw std::invalid_argument("malformed edge");
    return members_.test(colex_rank(edge));
}

void UniformFamily::insert_rank(std::uint64_t rank) {
    if (rank >= members_.size()) throw std::out_of_range("edge rank out of range");
    if (!members_.test(rank)) {
        members_.set(rank);
        ++count_;
    }
}

void UniformFamily::insert(std::span<const int> edge) {
    if (static_cast<int>(edge.size()) != r_ || !is_strictly_increasing(edge, n_))
        throw std::invalid_argument("malformed edge");
    insert_rank(colex_rank(edge));
}

void UniformFamily::erase_rank(std::uint64_t rank) {
    if (rank >= members_.size()) throw std::out_of_range("edge rank out of range");
    if (members_.test(rank)) {
        members_.reset(rank);
        --count_;
    }
}

void UniformFamily::for_each_rank(const std::function<void(std::uint64_t)>& fn) const {
    for (std::size_t i = members_.find_first(); i != Bitset::npos;
         i = members_.find_next(i))
        fn(i);
}

std::vector<std::vector<int>> UniformFamily::edges() const {
    std::vector<std::vector<int>> out;
    out.reserve(count_);
    for_each_rank([&](std::uint64_t rank) { out.push_back(colex_unrank(rank, r_)); });
    return out;
}

UniformFamily UniformFamily::complete(int n, int r) {
    UniformFamily f(n, r);
    f.members_.set();
    f.count_ = f.members_.size();
    return f;
}

UniformFamily UniformFamily::complement() const {
    UniformFamily out(n_, r_);
    out.members_ = ~members_;
    out.count_ = members_.size() - count_;
    return out;
}

Rational density(const UniformFamily& f) {
    BigInt total = binom_big(static_cast<std::uint64_t>(f.n()),
                             static_cast<std::uint64_t>(f.r()));
    if (total == 0) return Rational(0);
    return Rational(BigInt(f.size()), total);
}

void write_family(std::ostream& out, const UniformFamily& f) {
    out << "daisy-family v1\n";
    out << "n=" << f.n() << " r=" << f.r() << "\n";
    std::vector<int> edge;
    f.for_each_rank([&](std::uint64_t rank) {
        colex_unrank_into(rank, f.r(), edge);
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) out << ' ';
            out << edge[i];
        }
        out << '\n';
    });
}

namespace {

int parse_int(const std::string& tok, const char* what) {
    if (tok.empty() || tok.size() > 9 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw FormatError(std::string("bad ") + what + ": '" + tok + "'");
    return std::stoi(tok);
}

} // namespace

UniformFamily read_family(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "daisy-family v1")
        throw FormatError("missing 'daisy-family v1' header");
    if (!std::getline(in, line)) throw FormatError("missing size header");
    int n = 0, r = 0;
    {
        std::istringstream hs(line);
        std::string ntok, rtok;
        if (!(hs >> ntok >> rtok) || ntok.rfind("n=", 0) != 0 || rtok.rfind("r=", 0) != 0)
            throw FormatError("size header must be 'n=<n> r=<r>'");
        std::string rest;
        if (hs >> rest) throw FormatError("trailing tokens in size header");
        n = parse_int(ntok.substr(2), "n");
        r = parse_int(rtok.substr(2), "r");
    }
    if (r > n) throw FormatError("r exceeds n");
    UniformFamily f(n, r);

    std::vector<int> edge;
    std::uint64_t prev_rank = 0;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) throw FormatError("blank member line");
        std::istringstream ls(line);
        edge.clear();
        std::string tok;
        while (ls >> tok) edge.push_back(parse_int(tok, "vertex"));
        if (static_cast<int>(edge.size()) != r) throw FormatError("member arity != r");
        if (!is_strictly_increasing(edge, n))
            throw FormatError("member vertices must be strictly increasing in [1, n]");
        std::uint64_t rank = colex_rank(edge);
        if (!first && rank <= prev_rank)
            throw FormatError("members must be sorted by colex rank");
        first = false;
        prev_rank = rank;
        f.insert_rank(rank);
    }
    return f;
}

void write_family_file(const std::string& path, const UniformFamily& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_family(out, f);
}

UniformFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_family(in);
}

LinkResult link(const UniformFamily& f, std::span<const int> s) {
    if (static_cast<int>(s.size()) >= f.r())
        throw std::invalid_argument("|S| must be smaller than r");
    if (!is_strictly_increasing(s, f.n()))
        throw std::invalid_argument("S must be a strictly increasing vertex set");

    std::vector<int> old_labels;
    std::vector<int> new_of_old(static_cast<std::size_t>(f.n()) + 1, 0);
    {
        std::size_t si = 0;
        for (int v = 1; v <= f.n(); ++v) {
            if (si < s.size() && s[si] == v) {
                ++si;
                continue;
            }
            old_labels.push_back(v);
            new_of_old[static_cast<std::size_t>(v)] =
                static_cast<int>(old_labels.size());
        }
    }

    const int link_r = f.r() - static_cast<int>(s.size());
    LinkResult out{UniformFamily(f.n() - static_cast<int>(s.size()), link_r), old_labels};

    std::vector<int> x(static_cast<std::size_t>(link_r));
    for (int i = 0; i < link_r; ++i) x[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> full(static_cast<std::size_t>(f.r()));
    std::vector<int> mapped(static_cast<std::size_t>(link_r));
    do {
        for (int i = 0; i < link_r; ++i)
            mapped[static_cast<std::size_t>(i)] =
                old_labels[static_cast<std::size_t>(x[static_cast<std::size_t>(i)]) - 1];
        std::merge(mapped.begin(), mapped.end(), s.begin(), s.end(), full.begin());
        if (f.contains_rank(colex_rank(full))) out.family.insert(x);
    } while (next_subset_colex(x, out.family.n()));
    return out;
}

UniformFamily blow_up(const UniformFamily& f, int factor, std::uint64_t max_ranks) {
    if (factor < 1) throw std::invalid_argument("factor must be positive");
    UniformFamily out(f.n() * factor, f.r(), max_ranks);
    const int r = f.r();
    std::vector<int> base;
    std::vector<int> lifted(static_cast<std::size_t>(r));
    std::vector<int> pick(static_cast<std::size_t>(r), 0);
    f.for_each_rank([&](std::uint64_t rank) {
        colex_unrank_into(rank, r, base);
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            for (int i = 0; i < r; ++i)
                lifted[static_cast<std::size_t>(i)] =
                    (base[static_cast<std::size_t>(i)] - 1) * factor +
                    pick[static_cast<std::size_t>(i)] + 1;
            out.insert(lifted);
            int i = 0;
            while (i < r && ++pick[static_cast<std::size_t>(i)] == factor) {
                pick[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == r) break;
        }
    });
    return out;
}

} // namespace daisy
