#include "fibnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace fibnet {

DegreeReport degree_report(const LabeledGraph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("degree_report: empty graph");
    DegreeReport r;
    for (int v = 0; v < g.vertex_count(); ++v) r.histogram[g.degree(v)]++;
    r.classes = classes_from_histogram(r.histogram);
    r.average_degree = make_rational(2 * BigInt(g.edge_count()), BigInt(g.vertex_count()));

    BigInt n(g.vertex_count());
    BigInt tail = 0;
    std::vector<std::pair<long, Rational>> cum;
    for (auto it = r.histogram.rbegin(); it != r.histogram.rend(); ++it) {
        tail += it->second;
        cum.emplace_back(it->first, make_rational(tail, n));
    }
    std::reverse(cum.begin(), cum.end());
    r.cumulative = std::move(cum);
    return r;
}

std::vector<DegreeClassRow> classes_from_histogram(const std::map<long, long>& histogram) {
    std::vector<DegreeClassRow> rows;
    int rank = 1;
    for (auto it = histogram.rbegin(); it != histogram.rend(); ++it)
        rows.push_back({rank++, BigInt(it->first), BigInt(it->second)});
    return rows;
}

namespace {

struct LeastSquares {
    double slope = 0.0, intercept = 0.0, rms = 0.0;
};

LeastSquares fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    LeastSquares out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    double se = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (out.intercept + out.slope * xs[i]);
        se += e * e;
    }
    out.rms = std::sqrt(se / n);
    return out;
}

}  // namespace

PowerlawFit powerlaw_fit(std::span<const DegreeClassRow> classes) {
    if (classes.size() < 3)
        throw std::invalid_argument("powerlaw_fit: need at least 3 distinct degrees");
    BigInt total = 0;
    for (const auto& c : classes) total += c.count;
    std::vector<double> xs, ys;
    BigInt prefix = 0;
    for (const auto& c : classes) {  // classes in decreasing degree order
        prefix += c.count;
        xs.push_back(std::log(c.degree.get_d()));
        ys.push_back(std::log(prefix.get_d() / total.get_d()));
    }
    auto ls = fit_line(xs, ys);
    return {ls.slope, ls.intercept, ls.rms, static_cast<int>(classes.size())};
}

namespace {

ZipfReport zipf_from_classes(std::span<const DegreeClassRow> classes, const BigInt& two_e,
                             double lambda) {
    if (classes.empty()) throw std::invalid_argument("zipf_report: no degree classes");
    if (!(lambda > 0)) throw std::invalid_argument("zipf_report: lambda must be positive");
    BigInt total_vertices = 0;
    for (const auto& c : classes) total_vertices += c.count;

    ZipfReport r;
    r.lambda = lambda;
    // walk ascending degrees; the count of vertices with degree >= k shrinks with rank
    std::vector<std::pair<BigInt, BigInt>> tails;  // (degree, count with degree >= it)
    BigInt geq = total_vertices;
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
        tails.emplace_back(it->degree, geq);
        geq -= it->count;
    }

    std::vector<double> lf, lp, lk;
    int rank = 1;
    for (auto& [deg, cnt] : tails) {
        ZipfReport::Entry e;
        e.rank = rank++;
        e.degree = deg;
        e.frequency = make_rational(cnt, two_e);
        e.cumulative = make_rational(cnt, total_vertices);
        e.ratio = std::pow(e.frequency.get_d(), lambda) / e.cumulative.get_d();
        lf.push_back(std::log(e.frequency.get_d()));
        lp.push_back(std::log(e.cumulative.get_d()));
        lk.push_back(std::log(e.degree.get_d()));
        r.entries.push_back(std::move(e));
    }
    if (r.entries.size() >= 2) {
        r.slope_freq_vs_cumulative = fit_line(lp, lf).slope;
        r.slope_freq_vs_degree = fit_line(lk, lf).slope;
    }
    return r;
}

}  // namespace

ZipfReport zipf_report(std::span<const DegreeClassRow> classes, double lambda) {
    BigInt two_e = 0;
    for (const auto& c : classes) two_e += c.count * c.degree;
    return zipf_from_classes(classes, two_e, lambda);
}

ZipfReport zipf_report(const LabeledGraph& g, double lambda) {
    auto rep = degree_report(g);
    return zipf_from_classes(rep.classes, 2 * BigInt(g.edge_count()), lambda);
}

ClusteringReport clustering_report(const LabeledGraph& g) {
    ClusteringReport r;
    r.per_vertex.resize(g.vertex_count(), Rational(0));
    std::vector<char> mark(g.vertex_count(), 0);
    Rational sum(0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        long k = g.degree(v);
        if (k < 2) continue;  // c = 0 by convention
        for (auto a : g.neighbors(v)) mark[a.vertex] = 1;
        long links = 0;
        for (auto a : g.neighbors(v))
            for (auto b : g.neighbors(a.vertex))
                if (b.vertex != v && mark[b.vertex]) ++links;
        for (auto a : g.neighbors(v)) mark[a.vertex] = 0;
        // every neighbor-neighbor edge was seen from both sides
        r.per_vertex[v] = make_rational(BigInt(links / 2), BigInt(k * (k - 1) / 2));
        sum += r.per_vertex[v];
    }
    r.average = sum / Rational(g.vertex_count());
    return r;
}

namespace {

/// BFS from src; returns eccentricity and accumulates the distance sum.
int bfs_row(const LabeledGraph& g, int src, std::vector<int>& dist, unsigned long long& sum) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::deque<int> q{src};
    int ecc = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        ecc = std::max(ecc, dist[u]);
        for (auto a : g.neighbors(u))
            if (dist[a.vertex] < 0) {
                dist[a.vertex] = dist[u] + 1;
                q.push_back(a.vertex);
            }
    }
    for (int d : dist) {
        if (d < 0) throw std::invalid_argument("distance report requires a connected graph");
        sum += static_cast<unsigned long long>(d);
    }
    return ecc;
}

}  // namespace

DistanceReport distance_report_exact(const LabeledGraph& g) {
    const int n = g.vertex_count();
    DistanceReport r;
    r.exact = true;
    r.sources = n;
    if (n < 2) {
        r.apl = Rational(0);
        return r;
    }
    std::vector<int> dist(n);
    unsigned long long sum = 0;
    for (int s = 0; s < n; ++s) r.diameter = std::max(r.diameter, bfs_row(g, s, dist, sum));
    // sum counted each unordered pair twice
    r.apl = make_rational(BigInt(static_cast<unsigned long>(sum / 2)),
                          BigInt(n) * (n - 1) / 2);
    return r;
}

DistanceReport distance_report_sampled(const LabeledGraph& g, int n_sources) {
    if (n_sources < 2) throw std::invalid_argument("sampled distance report needs >= 2 sources");
    const int n = g.vertex_count();
    DistanceReport r;
    r.exact = false;
    if (n < 2) {
        r.apl = Rational(0);
        r.sources = 0;
        return r;
    }
    int stride = (n + n_sources - 1) / n_sources;
    std::vector<int> dist(n);
    unsigned long long sum = 0;
    int used = 0;
    for (int s = 0; s < n; s += stride) {
        r.diameter = std::max(r.diameter, bfs_row(g, s, dist, sum));
        ++used;
    }
    r.sources = used;
    r.apl = make_rational(BigInt(static_cast<unsigned long>(sum)),
                          BigInt(used) * (n - 1));
    return r;
}

}  // namespace fibnet
