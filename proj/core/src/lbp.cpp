#include "netlabel/lbp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace netlabel {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_seed(const Graph &g, const Labeling &seed) {
    if (seed.node_count() != g.node_count())
        throw InferenceError("seed labeling does not match the graph");
    if (seed.known_count() == 0)
        throw InferenceError("LBP needs at least one known label");
}

// exp(x - max(x)) normalized to sum 1; entries stay strictly positive
// unless x itself holds -inf.
void normalize_from_log(std::span<const double> logs, std::span<double> out) {
    double hi = kNegInf;
    for (double v : logs)
        hi = std::max(hi, v);
    double z = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        out[i] = std::exp(logs[i] - hi);
        z += out[i];
    }
    for (double &v : out)
        v /= z;
}

void floor_and_normalize(std::span<double> p) {
    double z = 0.0;
    for (double &v : p) {
        v = std::max(v, std::numeric_limits<double>::min());
        z += v;
    }
    for (double &v : p)
        v /= z;
}

double safe_log(double v) {
    return v > 0.0 ? std::log(v) : kNegInf;
}

std::size_t argmax(std::span<const double> p) {
    std::size_t best = 0;
    for (std::size_t l = 1; l < p.size(); ++l)
        if (p[l] > p[best])
            best = l;
    return best;
}

} // namespace

std::vector<double> class_prior(const Labeling &seed, double laplace) {
    if (!(laplace > 0.0))
        throw InferenceError("laplace smoothing must be positive");
    std::vector<double> prior(seed.label_count(), laplace);
    for (LabelIndex l : seed.assignment())
        if (l != kUnlabelled)
            prior[static_cast<std::size_t>(l)] += 1.0;
    double z = 0.0;
    for (double v : prior)
        z += v;
    for (double &v : prior)
        v /= z;
    return prior;
}

Potentials absorb_evidence(const Graph &g, const Labeling &seed, std::vector<double> pairwise,
                           std::vector<double> prior) {
    const std::size_t L = seed.label_count();
    if (pairwise.size() != L * L || prior.size() != L)
        throw InferenceError("potential dimensions do not match the label set");
    if (std::any_of(pairwise.begin(), pairwise.end(), [](double v) { return !(v > 0.0); }) ||
        std::any_of(prior.begin(), prior.end(), [](double v) { return !(v > 0.0); }))
        throw InferenceError("potentials must be strictly positive");

    Potentials pot{L, std::move(pairwise), std::move(prior), std::vector<std::vector<double>>(g.node_count())};
    std::vector<double> logs(L);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        if (seed.is_known(v))
            continue;
        for (std::size_t l = 0; l < L; ++l)
            logs[l] = std::log(pot.prior[l]);
        for (NodeIndex k : g.neighbours(v, NeighbourMode::all)) {
            const LabelIndex lk = seed.at(k);
            if (lk == kUnlabelled)
                continue;
            for (std::size_t l = 0; l < L; ++l)
                logs[l] += std::log(pot.psi(static_cast<std::size_t>(lk), l));
        }
        auto &phi = pot.node[v];
        phi.resize(L);
        normalize_from_log(logs, phi);
        floor_and_normalize(phi);
    }
    return pot;
}

Potentials estimate_potentials(const Graph &g, const Labeling &seed, double laplace) {
    require_seed(g, seed);
    if (!(laplace > 0.0))
        throw InferenceError("laplace smoothing must be positive");
    const std::size_t L = seed.label_count();
    std::vector<double> counts(L * L, 0.0);
    for (const auto &e : g.edges()) {
        const LabelIndex a = seed.at(e.src);
        const LabelIndex b = seed.at(e.dst);
        if (a == kUnlabelled || b == kUnlabelled)
            continue;
        const auto ia = static_cast<std::size_t>(a);
        const auto ib = static_cast<std::size_t>(b);
        counts[ia * L + ib] += 1.0;
        if (ia != ib)
            counts[ib * L + ia] += 1.0;
    }
    for (std::size_t a = 0; a < L; ++a) {
        double row = 0.0;
        for (std::size_t b = 0; b < L; ++b) {
            counts[a * L + b] += laplace;
            row += counts[a * L + b];
        }
        for (std::size_t b = 0; b < L; ++b)
            counts[a * L + b] /= row;
    }
    return absorb_evidence(g, seed, std::move(counts), class_prior(seed, laplace));
}

LbpResult lbp_run(const Graph &g, const Labeling &seed, const Potentials &pot, const LbpConfig &cfg) {
    require_seed(g, seed);
    const std::size_t L = seed.label_count();
    if (pot.label_count != L || pot.node.size() != g.node_count())
        throw InferenceError("potentials do not match the problem");

    LbpResult result;
    result.labels = seed;
    result.beliefs.assign(g.node_count(), {});
    result.messages.label_count = L;

    const auto unknown = seed.unknown();
    if (unknown.empty()) {
        result.converged = true;
        return result;
    }

    // Message graph over unknown nodes in CSR form. Message ids follow
    // (sender, receiver) order, so message_offset[i] + p is the message from
    // unknown[i] to its p-th unknown neighbour.
    const std::size_t nu = unknown.size();
    std::vector<std::size_t> local(g.node_count(), nu);
    for (std::size_t i = 0; i < nu; ++i)
        local[unknown[i]] = i;
    std::vector<std::size_t> offset(nu + 1, 0);
    std::vector<std::size_t> target;
    std::vector<char> has_evidence(nu, 0);
    for (std::size_t i = 0; i < nu; ++i) {
        for (NodeIndex w : g.neighbours(unknown[i], NeighbourMode::all)) {
            if (local[w] < nu)
                target.push_back(local[w]);
            else
                has_evidence[i] = 1;
        }
        offset[i + 1] = target.size();
    }
    const std::size_t nm = target.size();
    std::vector<std::size_t> reverse(nm);
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t m = offset[i]; m < offset[i + 1]; ++m) {
            const std::size_t j = target[m];
            const auto first = target.begin() + static_cast<std::ptrdiff_t>(offset[j]);
            const auto last = target.begin() + static_cast<std::ptrdiff_t>(offset[j + 1]);
            reverse[m] = static_cast<std::size_t>(std::lower_bound(first, last, i) - target.begin());
        }
    }

    // Groups of unknown nodes without any known neighbour stay uniform.
    std::vector<char> active(nu, 0);
    {
        std::vector<char> seen(nu, 0);
        std::deque<std::size_t> queue;
        std::vector<std::size_t> members;
        for (std::size_t s = 0; s < nu; ++s) {
            if (seen[s])
                continue;
            members.clear();
            bool evidence = false;
            seen[s] = 1;
            queue.push_back(s);
            while (!queue.empty()) {
                const auto v = queue.front();
                queue.pop_front();
                members.push_back(v);
                evidence = evidence || has_evidence[v];
                for (std::size_t m = offset[v]; m < offset[v + 1]; ++m)
                    if (!seen[target[m]]) {
                        seen[target[m]] = 1;
                        queue.push_back(target[m]);
                    }
            }
            if (evidence)
                for (auto v : members)
                    active[v] = 1;
        }
    }

    auto &state = result.messages;
    state.pairs.resize(nm);
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t m = offset[i]; m < offset[i + 1]; ++m)
            state.pairs[m] = {unknown[i], unknown[target[m]]};
    state.values.assign(nm * L, 1.0 / static_cast<double>(L));
    if (cfg.on_round)
        cfg.on_round(0, state);

    std::vector<std::vector<double>> log_phi(nu, std::vector<double>(L));
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t l = 0; l < L; ++l)
            log_phi[i][l] = safe_log(pot.node[unknown[i]][l]);

    auto beliefs_into = [&](const std::vector<double> &msgs, std::size_t i, std::span<double> out) {
        std::vector<double> logs = log_phi[i];
        for (std::size_t m = offset[i]; m < offset[i + 1]; ++m) {
            const std::size_t in = reverse[m];
            for (std::size_t l = 0; l < L; ++l)
                logs[l] += safe_log(msgs[in * L + l]);
        }
        normalize_from_log(logs, out);
    };

    std::vector<std::size_t> last_argmax(nu);
    {
        std::vector<double> b(L);
        for (std::size_t i = 0; i < nu; ++i) {
            beliefs_into(state.values, i, b);
            last_argmax[i] = argmax(b);
        }
    }

    std::vector<double> next = state.values;
    std::vector<double> prefix;
    std::vector<double> suffix;
    std::vector<double> h(L);
    std::vector<double> w(L);
    std::vector<double> b(L);
    for (int round = 1; round <= cfg.max_iter; ++round) {
        double max_change = 0.0;
        for (std::size_t i = 0; i < nu; ++i) {
            if (!active[i])
                continue;
            const std::size_t deg = offset[i + 1] - offset[i];
            // Leave-one-out products of incoming messages, in log space.
            prefix.assign((deg + 1) * L, 0.0);
            suffix.assign((deg + 1) * L, 0.0);
            for (std::size_t p = 0; p < deg; ++p) {
                const std::size_t in = reverse[offset[i] + p];
                for (std::size_t l = 0; l < L; ++l)
                    prefix[(p + 1) * L + l] = prefix[p * L + l] + safe_log(state.values[in * L + l]);
            }
            for (std::size_t p = deg; p-- > 0;) {
                const std::size_t in = reverse[offset[i] + p];
                for (std::size_t l = 0; l < L; ++l)
                    suffix[p * L + l] = suffix[(p + 1) * L + l] + safe_log(state.values[in * L + l]);
            }
            for (std::size_t p = 0; p < deg; ++p) {
                const std::size_t m = offset[i] + p;
                for (std::size_t l = 0; l < L; ++l)
                    h[l] = log_phi[i][l] + prefix[p * L + l] + suffix[(p + 1) * L + l];
                normalize_from_log(h, w);
                double z = 0.0;
                for (std::size_t lj = 0; lj < L; ++lj) {
                    double s = 0.0;
                    for (std::size_t li = 0; li < L; ++li)
                        s += pot.psi(li, lj) * w[li];
                    next[m * L + lj] = s;
                    z += s;
                }
                for (std::size_t lj = 0; lj < L; ++lj) {
                    const double nv = next[m * L + lj] / z;
                    next[m * L + lj] = nv;
                    const double old = state.values[m * L + lj];
                    double change = 0.0;
                    if (old > 0.0)
                        change = std::abs(nv - old) / old;
                    else if (nv > 0.0)
                        change = std::numeric_limits<double>::infinity();
                    max_change = std::max(max_change, change);
                }
            }
        }
        state.values.swap(next);
        result.iterations = round;
        if (cfg.on_round)
            cfg.on_round(round, state);

        bool moved = false;
        for (std::size_t i = 0; i < nu; ++i) {
            if (!active[i])
                continue;
            beliefs_into(state.values, i, b);
            const auto a = argmax(b);
            moved = moved || a != last_argmax[i];
            last_argmax[i] = a;
        }
        result.argmax_stable_rounds = moved ? 0 : result.argmax_stable_rounds + 1;

        if (max_change < cfg.rel_tol) {
            result.converged = true;
            break;
        }
        next = state.values;
    }

    for (std::size_t i = 0; i < nu; ++i) {
        auto &belief = result.beliefs[unknown[i]];
        belief.resize(L);
        beliefs_into(state.values, i, belief);
        result.labels.assign(unknown[i], static_cast<LabelIndex>(argmax(belief)));
    }
    return result;
}

LbpResult lbp_run(const Graph &g, const Labeling &seed, const LbpConfig &cfg, double laplace) {
    return lbp_run(g, seed, estimate_potentials(g, seed, laplace), cfg);
}

} // namespace netlabel
