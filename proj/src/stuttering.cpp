#include "blockshift/stuttering.hpp"

#include <algorithm>
#include <numeric>

namespace blockshift {

namespace {

long long norm2(const std::vector<int>& v) {
    long long sum = 0;
    for (int x : v) sum += static_cast<long long>(x) * x;
    return sum;
}

long long prefix_sum(const std::vector<int>& v, int upto) {
    long long sum = 0;
    for (int t = 0; t < upto; ++t) sum += v[static_cast<std::size_t>(t)];
    return sum;
}

std::vector<int> scale_by(const std::vector<int>& v, int factor) {
    std::vector<int> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) out[t] = v[t] * factor;
    return out;
}

std::vector<std::vector<int>> core_params(const Multipartition& cores, int e) {
    std::vector<std::vector<int>> xs(cores.size());
    for (std::size_t k = 0; k < cores.size(); ++k) {
        require(is_e_core(cores[k], e), "multipartition is not an e-multicore");
        xs[k] = params_of_core(cores[k], e);
    }
    return xs;
}

bool sigma_stable(const ResidueVector& alpha, const LevelConfig& config) {
    return shift_alpha(alpha, config) == alpha;
}

}  // namespace

Objective::Objective(const Multicharge& kappa, const LevelConfig& config)
    : config_(config), kappa_(kappa) {
    require(is_compatible(kappa_, config_), "multicharge is not compatible with (d, eta, p)");
    const int e = config_.e();
    ltilde_indices_.resize(static_cast<std::size_t>(config_.d));
    for (int l = 0; l < config_.d; ++l)
        for (int j0 = 0; j0 < config_.p; ++j0)
            ltilde_indices_[static_cast<std::size_t>(l)].push_back(
                mod(-kappa_[static_cast<std::size_t>(l)] + j0 * config_.eta, e));
}

long long Objective::g_scaled(const std::vector<int>& y_times_p, int l) const {
    long long lsum = 0;
    for (int idx : ltilde_indices_[static_cast<std::size_t>(l)]) lsum += prefix_sum(y_times_p, idx);
    return norm2(y_times_p) - 2 * lsum;
}

long long Objective::f_scaled(const std::vector<std::vector<int>>& xs) const {
    require(static_cast<int>(xs.size()) == config_.r(), "expected r parameter vectors");
    long long value = 0;
    for (int l = 0; l < config_.d; ++l)
        for (int j = 0; j < config_.p; ++j)
            value += g_scaled(scale_by(xs[static_cast<std::size_t>(l + j * config_.d)], config_.p), l);
    return value;
}

long long Objective::fp_scaled_int(const std::vector<std::vector<int>>& zs) const {
    require(static_cast<int>(zs.size()) == config_.d, "expected d parameter vectors");
    long long value = 0;
    for (int l = 0; l < config_.d; ++l)
        value += g_scaled(scale_by(zs[static_cast<std::size_t>(l)], config_.p), l);
    return value;
}

long long Objective::fp_scaled_frac(const std::vector<std::vector<int>>& ys_times_p) const {
    require(static_cast<int>(ys_times_p.size()) == config_.d, "expected d parameter vectors");
    long long value = 0;
    for (int l = 0; l < config_.d; ++l) value += g_scaled(ys_times_p[static_cast<std::size_t>(l)], l);
    return value;
}

DeltaVector compute_delta(const Multipartition& cores, const Multicharge& kappa,
                          const LevelConfig& config) {
    const int e = config.e();
    require(is_compatible(kappa, config), "multicharge is not compatible with (d, eta, p)");
    require(static_cast<int>(cores.size()) == config.r(), "multipartition length must equal r");
    const auto xs = core_params(cores, e);
    const ResidueVector alpha = alpha_kappa(cores, kappa, e);
    require(sigma_stable(alpha, config), "alpha not sigma-stable");

    DeltaVector delta(static_cast<std::size_t>(config.eta));
    for (int i = 0; i < config.eta; ++i)
        delta[static_cast<std::size_t>(i)] =
            alpha[static_cast<std::size_t>(i)] - alpha[static_cast<std::size_t>(mod(i + 1, e))];

    // abacus identity, independent of j0
    for (int j0 = 0; j0 < config.p; ++j0)
        for (int i = 0; i < config.eta; ++i) {
            long long sum = 0;
            for (int k = 0; k < config.r(); ++k)
                sum += xs[static_cast<std::size_t>(k)][static_cast<std::size_t>(mod(
                    i + j0 * config.eta - kappa[static_cast<std::size_t>(k)], e))];
            ensure(sum == delta[static_cast<std::size_t>(i)],
                   "delta disagrees with the abacus parameter sum");
        }
    return delta;
}

std::vector<std::vector<int>> naive_average(const Multipartition& cores, const Multicharge& kappa,
                                            const LevelConfig& config) {
    const int e = config.e();
    const auto xs = core_params(cores, e);
    std::vector<std::vector<int>> ys(static_cast<std::size_t>(config.d),
                                     std::vector<int>(static_cast<std::size_t>(e), 0));
    for (int l = 0; l < config.d; ++l)
        for (int j = 0; j < config.p; ++j)
            for (int i = 0; i < e; ++i)
                ys[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] +=
                    xs[static_cast<std::size_t>(l + j * config.d)][static_cast<std::size_t>(i)];

    for (const auto& y : ys)
        ensure(std::accumulate(y.begin(), y.end(), 0) == 0, "averages must sum to zero");

    // exact identity: p*f<p>(ztilde) = f(x) - (1/2) sum ||x - ztilde||^2,
    // both sides scaled by 2p^2
    const Objective objective(kappa, config);
    long long spread = 0;
    for (int l = 0; l < config.d; ++l)
        for (int j = 0; j < config.p; ++j) {
            std::vector<int> diff = scale_by(xs[static_cast<std::size_t>(l + j * config.d)], config.p);
            for (int i = 0; i < e; ++i) diff[static_cast<std::size_t>(i)] -= ys[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
            spread += norm2(diff);
        }
    ensure(config.p * objective.fp_scaled_frac(ys) == objective.f_scaled(xs) - spread,
           "strong-convexity identity failed");
    return ys;
}

std::vector<std::vector<int>> rectify_parameters(const std::vector<std::vector<int>>& ztilde_times_p,
                                                 const DeltaVector& delta, const Multicharge& kappa,
                                                 const LevelConfig& config) {
    const int e = config.e();
    const int d = config.d;
    const int p = config.p;
    const int eta = config.eta;
    require(static_cast<int>(ztilde_times_p.size()) == d, "expected d average vectors");
    require(static_cast<int>(delta.size()) == eta, "delta must have length eta");
    const Objective objective(kappa, config);

    // relabel through pi_l(j + ip) = i - j*eta - kappa_l and split into
    // integer part m and numerator w of the fractional part
    std::vector<std::vector<int>> m(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(e)));
    std::vector<std::vector<int>> w(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(e)));
    std::vector<std::vector<int>> position(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(e)));
    for (int l = 0; l < d; ++l)
        for (int i = 0; i < eta; ++i)
            for (int j = 0; j < p; ++j) {
                const int t = j + i * p;
                const int pos = mod(i - j * eta - kappa[static_cast<std::size_t>(l)], e);
                position[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] = pos;
                const int y = ztilde_times_p[static_cast<std::size_t>(l)][static_cast<std::size_t>(pos)];
                m[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] = floor_div(y, p);
                w[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] = y - p * floor_div(y, p);
            }

    // integrality of |v^(l)| and of the block sums |V^[i]|
    for (int l = 0; l < d; ++l) {
        long long wsum = std::accumulate(w[static_cast<std::size_t>(l)].begin(), w[static_cast<std::size_t>(l)].end(), 0LL);
        ensure(wsum % p == 0, "|v^(l)| is not an integer");
    }
    std::vector<int> targets(static_cast<std::size_t>(eta));
    for (int i = 0; i < eta; ++i) {
        long long block = 0;
        long long mblock = 0;
        for (int l = 0; l < d; ++l)
            for (int j = 0; j < p; ++j) {
                block += w[static_cast<std::size_t>(l)][static_cast<std::size_t>(j + i * p)];
                mblock += m[static_cast<std::size_t>(l)][static_cast<std::size_t>(j + i * p)];
            }
        ensure(block % p == 0, "|V^[i]| is not an integer");
        targets[static_cast<std::size_t>(i)] = static_cast<int>(block / p);
        ensure(targets[static_cast<std::size_t>(i)] == delta[static_cast<std::size_t>(i)] - mblock,
               "block mass disagrees with delta");
    }

    // binary decomposition of the fractional parts, then block-sum repair
    std::vector<BinaryMatrix> es;
    es.reserve(static_cast<std::size_t>(p));
    std::vector<std::vector<std::vector<int>>> eps(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) eps[static_cast<std::size_t>(l)] = gale_ryser_vectors(w[static_cast<std::size_t>(l)], p);
    for (int j = 0; j < p; ++j) {
        BinaryMatrix ej(d, e);
        for (int l = 0; l < d; ++l)
            for (int t = 0; t < e; ++t)
                ej.set(l, t, eps[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
        es.push_back(ej);
    }
    RectifyResult rectified = rectify_block_sums(std::move(es), p, targets);

    // j0 = argmin over the p rounding candidates, smallest index on ties
    auto candidate = [&](int j) {
        std::vector<std::vector<int>> z(static_cast<std::size_t>(d),
                                        std::vector<int>(static_cast<std::size_t>(e)));
        for (int l = 0; l < d; ++l)
            for (int t = 0; t < e; ++t)
                z[static_cast<std::size_t>(l)][static_cast<std::size_t>(position[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)])] =
                    m[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] + rectified.matrices[static_cast<std::size_t>(j)].at(l, t);
        return z;
    };
    int best_j = 0;
    long long best_value = 0;
    for (int j = 0; j < p; ++j) {
        const long long value = objective.fp_scaled_int(candidate(j));
        if (j == 0 || value < best_value) {
            best_j = j;
            best_value = value;
        }
    }
    std::vector<std::vector<int>> z = candidate(best_j);

    for (const auto& zl : z)
        ensure(std::accumulate(zl.begin(), zl.end(), 0) == 0, "z parameters must sum to zero");
    for (int i = 0; i < eta; ++i) {
        long long sum = 0;
        for (int l = 0; l < d; ++l)
            for (int j = 0; j < p; ++j)
                sum += z[static_cast<std::size_t>(l)][static_cast<std::size_t>(mod(
                    i - j * eta - kappa[static_cast<std::size_t>(l)], e))];
        ensure(sum == delta[static_cast<std::size_t>(i)], "delta constraint violated by z");
    }
    // f<p>(z) <= f<p>(ztilde) + (|V| - ||V||^2)/2, scaled by 2p^2
    long long wtotal = 0;
    long long w2total = 0;
    for (int l = 0; l < d; ++l)
        for (int t = 0; t < e; ++t) {
            wtotal += w[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)];
            w2total += static_cast<long long>(w[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)]) *
                       w[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)];
        }
    ensure(objective.fp_scaled_int(z) <=
               objective.fp_scaled_frac(ztilde_times_p) + p * wtotal - w2total,
           "rounding bound violated");
    return z;
}

Multipartition assemble_stuttering(const std::vector<std::vector<int>>& zs,
                                   const ResidueVector& target_alpha, const Multicharge& kappa,
                                   const LevelConfig& config) {
    const int e = config.e();
    const int d = config.d;
    require(is_compatible(kappa, config), "multicharge is not compatible with (d, eta, p)");
    require(static_cast<int>(zs.size()) == d, "expected d parameter vectors");
    require(static_cast<int>(target_alpha.size()) == e, "alpha length must equal e");
    require(sigma_stable(target_alpha, config), "alpha not sigma-stable");

    std::vector<Partition> blocks(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) blocks[static_cast<std::size_t>(l)] = core_from_params(zs[static_cast<std::size_t>(l)]);
    Multipartition bar(static_cast<std::size_t>(config.r()));
    for (int j = 0; j < config.p; ++j)
        for (int l = 0; l < d; ++l) bar[static_cast<std::size_t>(l + j * d)] = blocks[static_cast<std::size_t>(l)];

    const ResidueVector m_alpha = alpha_kappa(bar, kappa, e);
    const int n0 = target_alpha[0];
    const int m0 = m_alpha[0];
    ensure(m0 <= n0, "core witness has too many 0-nodes");
    for (int i = 0; i < e; ++i)
        ensure(m0 - m_alpha[static_cast<std::size_t>(i)] == n0 - target_alpha[static_cast<std::size_t>(i)],
               "core witness violates the delta constraint");

    Partition head = blocks[0];
    for (int h = 0; h < n0 - m0; ++h) head = add_rim_hook_by_beta(head, config.eta);
    Multipartition mu = bar;
    for (int j = 0; j < config.p; ++j) mu[static_cast<std::size_t>(j * d)] = head;

    ensure(alpha_kappa(mu, kappa, e) == target_alpha, "assembled witness has the wrong alpha");
    ensure(shift_multipartition(mu, config) == mu, "assembled witness is not stuttering");
    return mu;
}

Multipartition find_stuttering(const Multipartition& lambda, const Multicharge& kappa,
                               const LevelConfig& config) {
    const int e = config.e();
    require(is_compatible(kappa, config), "multicharge is not compatible with (d, eta, p)");
    require(static_cast<int>(lambda.size()) == config.r(), "multipartition length must equal r");
    const ResidueVector alpha = alpha_kappa(lambda, kappa, e);
    require(sigma_stable(alpha, config), "alpha not sigma-stable");
    if (config.p == 1) return lambda;

    auto [cores, weight] = multicore(lambda, e);
    (void)weight;  // folded into the eta-hook count through target_alpha
    const DeltaVector delta = compute_delta(cores, kappa, config);
    const auto averages = naive_average(cores, kappa, config);
    const auto zs = rectify_parameters(averages, delta, kappa, config);

    // key inequality p*f<p>(z) <= f(x), and the objective-consistency identity
    const Objective objective(kappa, config);
    const auto xs = core_params(cores, e);
    const long long f_value = objective.f_scaled(xs);
    ensure(static_cast<long long>(config.p) * objective.fp_scaled_int(zs) <= f_value,
           "key inequality p*f<p>(z) <= f(x) violated");
    const long long scale = 2LL * config.p * config.p;
    ensure(f_value == scale * alpha_kappa(cores, kappa, e)[0],
           "objective disagrees with the 0-node count");

    return assemble_stuttering(zs, alpha, kappa, config);
}

Multipartition find_minimal_orbit(const Multipartition& lambda, const Multicharge& kappa,
                                  const LevelConfig& config) {
    require(is_compatible(kappa, config), "multicharge is not compatible with (d, eta, p)");
    require(static_cast<int>(lambda.size()) == config.r(), "multipartition length must equal r");
    const ResidueVector alpha = alpha_kappa(lambda, kappa, config.e());
    const int stable_power = orbit_size_alpha(alpha, config);
    const LevelConfig derived(config.d * stable_power, config.eta * stable_power,
                              config.p / stable_power);
    const Multipartition mu = find_stuttering(lambda, kappa, derived);
    ensure(alpha_kappa(mu, kappa, config.e()) == alpha, "witness left the block");
    ensure(orbit_size_multipartition(mu, config) == stable_power,
           "witness orbit is not minimal");
    return mu;
}

}  // namespace blockshift
