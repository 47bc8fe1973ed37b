#include "fibnet/closed_forms.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fibnet {

std::vector<BigInt> fibonacci(const FibSpec& spec, int n) {
    if (spec.tau < 2) throw std::invalid_argument("fibonacci: tau must be >= 2");
    if (static_cast<int>(spec.seeds.size()) != spec.tau)
        throw std::invalid_argument("fibonacci: seed count must equal tau");
    if (n < 1) throw std::invalid_argument("fibonacci: n must be positive");
    std::vector<BigInt> out;
    out.reserve(n);
    for (int i = 0; i < n && i < spec.tau; ++i) out.push_back(spec.seeds[i]);
    BigInt window = 0;
    for (const auto& s : out) window += s;
    while (static_cast<int>(out.size()) < n) {
        out.push_back(window);
        window += out.back();
        window -= out[out.size() - 1 - spec.tau];
    }
    return out;
}

AlphaBeta alpha_beta(int t, bool adjusted) {
    if (t < 1) throw std::invalid_argument("alpha_beta: t must be positive");
    AlphaBeta ab;
    ab.alpha.resize(t);
    ab.beta.resize(t);
    ab.alpha[0] = 1;
    ab.beta[0] = adjusted ? 1 : 0;
    BigInt beta_sum = ab.beta[0];
    for (int i = 2; i <= t; ++i) {
        ab.alpha[i - 1] = beta_sum;
        ab.beta[i - 1] = ab.alpha[i - 2];
        beta_sum += ab.beta[i - 1];
    }
    return ab;
}

BigInt pendant_edges_formula(int t) {
    if (t <= 0) return 0;
    if (t == 1) return 4;
    return (pow_int(4, t) - 4) / 3;
}

namespace {

BigInt order_formula(int t) {
    static const long hand[] = {4, 10, 28};
    if (t <= 2) return hand[t];
    return (17 * pow_int(4, t - 1) - pow_int(3, t) - 11) / 3;
}

BigInt size_formula(int t) {
    static const long hand[] = {4, 12, 40};
    if (t <= 2) return hand[t];
    return (28 * pow_int(4, t - 1) - 6 * pow_int(3, t - 1) - 22) / 3;
}

}  // namespace

CountPrediction predict_counts(int t) {
    if (t < 0) throw std::invalid_argument("predict_counts: t must be nonnegative");
    CountPrediction p;
    p.t = t;
    p.vertices = order_formula(t);
    p.edges = size_formula(t);
    p.pendant_edges = pendant_edges_formula(t);
    p.delta_general = t >= 1 ? (t == 1 ? BigInt(2) : 2 * pendant_edges_formula(t - 1)) : BigInt(0);
    p.theta_general = t >= 2 ? pendant_edges_formula(t - 1) : BigInt(0);
    // the incremental table prints its own small-t values
    if (t >= 1 && t <= 4) {
        static const long delta_rows[] = {2, 0, 8, 8};
        static const long theta_rows[] = {0, 4, 4, 12};
        p.delta_literal = delta_rows[t - 1];
        p.theta_literal = theta_rows[t - 1];
        p.variant_conflict =
            *p.delta_literal != p.delta_general || *p.theta_literal != p.theta_general;
    }
    return p;
}

std::pair<BigInt, BigInt> predict_n1(int t) {
    if (t < 1) throw std::invalid_argument("predict_n1: t must be positive");
    BigInt e = pow_int(3, t);
    return {(e + 3) / 2, e};
}

DegreeTablePrediction predict_degree_table(int t) {
    if (t < 3) throw std::invalid_argument("predict_degree_table: defined for t >= 3");
    DegreeTablePrediction out;
    out.rows.push_back({1, pow_int(2, t + 1), 4});
    out.rows.push_back({2, pow_int(2, t), 2});
    out.rows.push_back({3, pow_int(2, t - 1), 18});
    for (int r = 4; r <= t + 1; ++r) {
        BigInt count = order_formula(r - 1) - order_formula(r - 2) - pendant_edges_formula(r - 1) +
                       2 * pendant_edges_formula(r - 2);
        out.rows.push_back({r, pow_int(2, t + 2 - r), count});
    }
    out.rows.push_back({t + 2, 1, pendant_edges_formula(t)});
    for (const auto& row : out.rows) {
        out.degree_mass += row.degree * row.count;
        out.vertex_sum += row.count;
    }
    return out;
}

namespace {

// sum of 2^j for j in [lo, hi]; empty ranges are zero
BigInt pow2_range(int lo, int hi) {
    if (hi < lo) return 0;
    return pow_int(2, hi + 1) - pow_int(2, std::max(lo, 0));
}

}  // namespace

ClusteringPrediction predict_clustering(int t) {
    if (t < 1) throw std::invalid_argument("predict_clustering: t must be positive");
    ClusteringPrediction out;
    out.degenerate = t < 5;

    // triangle-grown vertices: one geometric layer per cluster generation
    Rational c1(0);
    {
        Rational inner(0);
        for (int i = 0; i <= t - 1; ++i)
            inner += make_rational(pow_int(3, i) * pow_int(2, i), pow_int(2, t - 1));
        c1 += 2 * inner;
        for (int j = 3; j <= t; ++j) {
            Rational in_j(0);
            for (int i = 0; i <= t - j; ++i)
                in_j += make_rational(pow_int(3, i) * pow_int(2, i), pow_int(2, t - j));
            c1 += Rational(2 * pendant_edges_formula(j - 1)) * in_j;
        }
    }
    out.triangle_sum = c1;

    // rectangle-located vertices: four fixed terms plus the mid-age sum
    auto ab = alpha_beta(std::max(t, 2), true);
    auto alpha = [&](int i) { return ab.alpha[i - 1]; };
    Rational c2(0);
    {
        BigInt a = pow2_range(0, t - 1);
        BigInt b = 0;
        for (int i = 1; i <= t - 2; ++i) b += alpha(i) * pow2_range(i - 1, t - 3);
        c2 += make_rational(4 * (a + b), pow_int(2, t) * (pow_int(2, t + 1) - 1));

        a = pow2_range(0, t - 3);
        b = 0;
        for (int i = 1; i <= t - 4; ++i) b += alpha(i) * pow2_range(i - 1, t - 5);
        c2 += make_rational(12 * (a + b), pow_int(2, t - 1) * (pow_int(2, t) - 1));

        for (int s = 2; s <= t - 4; ++s) {
            a = pow2_range(0, t - s - 2);
            b = 0;
            for (int i = 1; i <= t - s - 3; ++i) b += alpha(i) * pow2_range(i - 1, t - s - 4);
            c2 += make_rational((pow_int(4, s) - 4) * (a + b),
                                pow_int(2, t - s - 1) * (pow_int(2, t - s) - 1));
        }
        // trailing age-count terms; their counts 4^x-4 need x >= 1
        if (t - 3 >= 1) c2 += make_rational(3 * (pow_int(4, t - 3) - 4), 28);
        if (t - 2 >= 1) c2 += make_rational(pow_int(4, t - 2) - 4, 6);
    }
    out.rectangle_sum = c2;
    out.average = (c1 + c2) / Rational(order_formula(t));
    return out;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    BigInt num = v.get_num(), den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return make_rational(rn, rd);
    }
    return std::nullopt;
}

Rational pow_rational_int(const Rational& base, int e) {
    if (e >= 0) return pow_rational(base, static_cast<unsigned long>(e));
    Rational inv = make_rational(base.get_den(), base.get_num());
    return pow_rational(inv, static_cast<unsigned long>(-e));
}

}  // namespace

Rational iterate_moebius(const MobiusRecurrence& rec, int n) {
    if (n < 1) throw std::invalid_argument("iterate_moebius: n must be positive");
    Rational a = rec.a1;
    for (int i = 1; i < n; ++i) {
        Rational den = rec.r * a + rec.s;
        if (sgn(den) == 0) throw std::domain_error("moebius orbit hit the pole -s/r");
        a = (rec.p * a + rec.q) / den;
    }
    return a;
}

MobiusResult solve_moebius(const MobiusRecurrence& rec, int n) {
    if (n < 1) throw std::invalid_argument("solve_moebius: n must be positive");
    if (sgn(rec.r) == 0) throw std::invalid_argument("solve_moebius: requires r != 0");
    if (sgn(rec.p * rec.s - rec.q * rec.r) == 0)
        throw std::invalid_argument("solve_moebius: requires ps - qr != 0");

    MobiusResult out;
    if (n == 1) {
        out.exact = rec.a1;
        out.value = rec.a1.get_d();
        return out;
    }

    // fixed points: r x^2 + (s - p) x - q = 0
    Rational disc = (rec.s - rec.p) * (rec.s - rec.p) + 4 * rec.r * rec.q;
    auto sqrt_disc = rational_sqrt(disc);

    if (sqrt_disc) {
        Rational two_r = 2 * rec.r;
        Rational lambda = (rec.p - rec.s + *sqrt_disc) / two_r;
        Rational mu = (rec.p - rec.s - *sqrt_disc) / two_r;
        if (lambda == mu) {
            out.repeated_root = true;
            if (rec.a1 == lambda) {
                out.exact = lambda;
                out.value = lambda.get_d();
                return out;
            }
            Rational ps = rec.p + rec.s;
            if (sgn(ps) == 0) throw std::domain_error("solve_moebius: degenerate repeated root");
            Rational c = 2 * rec.r / ps;
            Rational den = 1 + (n - 1) * c * (rec.a1 - lambda);
            if (sgn(den) == 0) throw std::domain_error("solve_moebius: orbit hits the pole");
            out.exact = lambda + (rec.a1 - lambda) / den;
            out.value = out.exact->get_d();
            return out;
        }
        if (rec.a1 == lambda) {  // fixed point: constant orbit
            out.exact = lambda;
            out.value = lambda.get_d();
            return out;
        }
        if (rec.a1 == mu)
            throw std::domain_error("solve_moebius: a1 equals the second fixed point");
        Rational ratio_den = rec.p - mu * rec.r;
        // p - mu r = 0 would force mu to be a pole fixed point; preconditions bar it
        Rational k = (rec.p - lambda * rec.r) / ratio_den;
        Rational kn = pow_rational_int(k, n - 1);
        Rational num = lambda * (rec.a1 - mu) - mu * (rec.a1 - lambda) * kn;
        Rational den = (rec.a1 - mu) - (rec.a1 - lambda) * kn;
        if (sgn(den) == 0) throw std::domain_error("solve_moebius: orbit hits the pole");
        out.exact = num / den;
        out.value = out.exact->get_d();
        return out;
    }

    // irrational or complex fixed points: evaluate in complex arithmetic
    using C = std::complex<double>;
    double p = rec.p.get_d(), q = rec.q.get_d(), r = rec.r.get_d(), s = rec.s.get_d();
    double a1 = rec.a1.get_d();
    C d = std::sqrt(C(disc.get_d(), 0.0));
    C lambda = (C(p - s) + d) / C(2 * r);
    C mu = (C(p - s) - d) / C(2 * r);
    C k = (C(p) - lambda * C(r)) / (C(p) - mu * C(r));
    C kn = std::pow(k, n - 1);
    C num = lambda * (C(a1) - mu) - mu * (C(a1) - lambda) * kn;
    C den = (C(a1) - mu) - (C(a1) - lambda) * kn;
    if (std::abs(den) == 0.0) throw std::domain_error("solve_moebius: orbit hits the pole");
    C an = num / den;
    out.value = an.real();
    return out;
}

namespace {

struct RationalPowerProduct {
    Rational exact{1};
    double log2 = 0.0;
    bool keep_exact = true;
    long bit_bound;

    explicit RationalPowerProduct(long bound) : bit_bound(bound) {}

    void mul_pow(const Rational& base, long e) {
        log2 += static_cast<double>(e) *
                (log2_of(base.get_num()) - log2_of(base.get_den()));
        if (!keep_exact) return;
        if (log2 > static_cast<double>(bit_bound)) {
            keep_exact = false;
            return;
        }
        if (e >= 0)
            exact *= pow_rational(base, static_cast<unsigned long>(e));
        else {
            Rational inv = make_rational(base.get_den(), base.get_num());
            exact *= pow_rational(inv, static_cast<unsigned long>(-e));
        }
    }

    void mul(const Rational& v) {
        log2 += log2_of(v.get_num()) - log2_of(v.get_den());
        if (keep_exact) exact *= v;
    }

    SpanningValue finish() const {
        SpanningValue sv;
        sv.in_domain = true;
        sv.log2_value = log2;
        if (keep_exact) {
            if (exact.get_den() != 1)
                throw std::logic_error("spanning display did not reduce to an integer");
            sv.exact = exact.get_num();
        }
        return sv;
    }
};

long theta_value(int t, ThetaConvention conv) {
    if (t < 1) return 0;
    if (conv == ThetaConvention::row_literal && t <= 4) {
        static const long rows[] = {0, 4, 4, 12};
        return rows[t - 1];
    }
    if (t == 1) return 0;
    return pendant_edges_formula(t - 1).get_si();
}

SpanningValue eval_per_triangle_cluster(int t, long bound) {
    RationalPowerProduct acc(bound);
    acc.mul_pow(Rational(2), pow_int(3, t - 1).get_si());
    acc.mul_pow(make_rational(3, 2), t);
    for (int i = 0; i <= t - 2; ++i) {
        long p3 = pow_int(3, i).get_si();
        acc.mul_pow(Rational(2), p3);
        acc.mul_pow(make_rational(3, 2), p3 * (t - i - 1));
    }
    return acc.finish();
}

SpanningValue eval_per_rectangle_assembly(int t, long bound) {
    RationalPowerProduct acc(bound);
    long sum_a = 0;
    for (int i = 0; i <= t - 1; ++i) sum_a += pow_int(3, i).get_si();
    long sum_b = 0;
    for (int i = 0; i <= t - 2; ++i) sum_b += pow_int(3, i).get_si() * (t - 1 - i);
    acc.mul_pow(Rational(2), 1 + 2 * sum_a);
    acc.mul_pow(make_rational(3, 2), 2 * sum_b);
    Rational tail = pow_rational(make_rational(3, 2), t) + pow_rational(make_rational(3, 2), 2 * t);
    acc.mul(tail);
    return acc.finish();
}

SpanningValue eval_spanning_total(int t, ThetaConvention conv, long bound) {
    if (t < 3) return {};
    auto q_of = [&](int i) { return eval_per_rectangle_assembly(i, bound); };
    RationalPowerProduct acc(bound);
    acc.mul_pow(Rational(4), theta_value(t, conv));
    auto mul_value_pow = [&](const SpanningValue& v, long e) {
        acc.log2 += v.log2_value * static_cast<double>(e);
        if (!acc.keep_exact) return;
        if (acc.log2 > static_cast<double>(acc.bit_bound) || !v.exact) {
            acc.keep_exact = false;
            return;
        }
        acc.exact *= pow_rational(Rational(*v.exact), static_cast<unsigned long>(e));
    };
    mul_value_pow(q_of(t), 1);
    mul_value_pow(q_of(t - 2), 4);
    for (int i = 1; i <= t - 3; ++i) mul_value_pow(q_of(i), theta_value(t - i, conv));
    return acc.finish();
}

BigInt mls_leaf_sum_exponent(int t) {
    BigInt e = 0;
    for (int i = 3; i <= t - 1; ++i)
        e += pow_int(3, t - 1 - i) * (2 * (pow_int(4, i - 1) - 4) / 3);
    return e;
}

}  // namespace

SpanningPredictions predict_spanning(int t, ThetaConvention theta, long bit_bound) {
    if (t < 1) throw std::invalid_argument("predict_spanning: t must be positive");
    SpanningPredictions out;
    out.t = t;
    out.theta = theta;
    out.per_triangle_cluster = eval_per_triangle_cluster(t, bit_bound);
    out.per_rectangle_assembly = eval_per_rectangle_assembly(t, bit_bound);
    out.spanning_total = eval_spanning_total(t, theta, bit_bound);

    if (t >= 3) {
        SpanningValue psi;
        psi.in_domain = true;
        BigInt v = 17 * pow_int(4, t - 2) + mls_leaf_sum_exponent(t);
        psi.exact = v;
        psi.log2_value = log2_of(v);
        out.mls_leaf_count = psi;
    }
    if (t >= 5) {
        RationalPowerProduct acc(bit_bound);
        acc.mul_pow(Rational(3), pendant_edges_formula(t - 1).get_si());
        acc.mul_pow(Rational(2), mls_leaf_sum_exponent(t).get_si());
        auto inner = eval_spanning_total(t - 2, theta, bit_bound);
        acc.log2 += inner.log2_value;
        if (acc.keep_exact && inner.exact && acc.log2 <= static_cast<double>(bit_bound))
            acc.exact *= Rational(*inner.exact);
        else
            acc.keep_exact = false;
        out.mls_tree_count = acc.finish();
    }
    return out;
}

}  // namespace fibnet
