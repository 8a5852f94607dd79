#include "hyperlab/shift.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hyperlab/error.hpp"
#include "hyperlab/parallel.hpp"
#include "log_sum.hpp"

namespace hyperlab {

namespace {

constexpr double kLogTol = 1e-9;

double to_log10(double ln) noexcept {
    return ln / std::numbers::ln10;
}

void require_weight(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InputError(std::string(what) + " must be a finite positive real");
    }
}

long floor_mod(long j, long n) noexcept {
    const long r = j % n;
    return r < 0 ? r + n : r;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

WeightSequence::WeightSequence(Axis axis, Rule rule) : axis_(axis), rule_(std::move(rule)) {
    std::visit(overloaded{
                   [&](const Constant& r) {
                       require_weight(r.value, "constant weight");
                       bound_ = r.value;
                   },
                   [&](const Periodic& r) {
                       if (r.values.empty()) {
                           throw InputError("periodic weights need at least one value");
                       }
                       for (double v : r.values) {
                           require_weight(v, "periodic weight");
                           bound_ = std::max(bound_, v);
                       }
                   },
                   [&](const Piecewise& r) {
                       require_weight(r.neg_value, "piecewise weight");
                       require_weight(r.pos_value, "piecewise weight");
                       bound_ = std::max(r.neg_value, r.pos_value);
                   },
                   [&](const Explicit& r) {
                       require_weight(r.tail, "explicit tail weight");
                       bound_ = r.tail;
                       for (const auto& [j, v] : r.values) {
                           if (axis_ == Axis::Natural && j < 1) {
                               throw InputError("explicit weight index " + std::to_string(j) +
                                                " is not on the natural axis");
                           }
                           require_weight(v, "explicit weight");
                           bound_ = std::max(bound_, v);
                       }
                   },
               },
               rule_);
}

double WeightSequence::operator()(long j) const {
    if (axis_ == Axis::Natural && j < 1) {
        throw InputError("weight w_" + std::to_string(j) + " is undefined on the natural axis");
    }
    return std::visit(overloaded{
                          [](const Constant& r) { return r.value; },
                          [&](const Periodic& r) {
                              return r.values[static_cast<std::size_t>(floor_mod(j, static_cast<long>(r.values.size())))];
                          },
                          [&](const Piecewise& r) { return j <= r.breakpoint ? r.neg_value : r.pos_value; },
                          [&](const Explicit& r) {
                              const auto it = r.values.find(j);
                              return it == r.values.end() ? r.tail : it->second;
                          },
                      },
                      rule_);
}

double WeightSequence::log_weight(long j) const {
    return std::log((*this)(j));
}

namespace {

void require_axis(const BackwardShift& t, const WindowVector& x) {
    if (t.axis() != x.axis()) {
        throw InputError("vector axis does not match the shift axis");
    }
}

}  // namespace

WindowVector apply(const BackwardShift& t, const WindowVector& x) {
    return apply_power(t, x, 1);
}

WindowVector apply_power(const BackwardShift& t, const WindowVector& x, std::size_t n) {
    require_axis(t, x);
    if (n == 0) {
        return x;
    }
    const long shift = static_cast<long>(n);
    const IndexWindow& in = x.window();
    IndexWindow out{in.lo - shift, in.hi - shift, in.axis};
    if (t.unilateral()) {
        out.lo = std::max(out.lo, 1L);
        out.hi = std::max(out.hi, 1L);
    }
    std::vector<Complex> coeffs(out.size());
    const WeightSequence& w = t.weights();
    for (long j = in.lo; j <= in.hi; ++j) {
        const long target = j - shift;
        if (!out.contains(target) || (t.unilateral() && target < 1)) {
            continue;
        }
        double product = 1.0;
        for (long i = j; i > target; --i) {
            product *= w(i);
        }
        coeffs[static_cast<std::size_t>(target - out.lo)] = product * x[j];
    }
    return WindowVector(out, std::move(coeffs), x.p());
}

WindowVector right_inverse_power(const BackwardShift& t, const WindowVector& z, std::size_t k) {
    require_axis(t, z);
    if (k == 0) {
        return z;
    }
    const long shift = static_cast<long>(k);
    const IndexWindow& in = z.window();
    const IndexWindow out{in.lo + shift, in.hi + shift, in.axis};
    std::vector<Complex> coeffs(out.size());
    const WeightSequence& w = t.weights();
    for (long j = in.lo; j <= in.hi; ++j) {
        double product = 1.0;
        for (long i = j + 1; i <= j + shift; ++i) {
            product *= w(i);
        }
        if (!std::isfinite(product) || product < DBL_MIN) {
            throw NumericError("weight product w_" + std::to_string(j + 1) + " ... w_" + std::to_string(j + shift) +
                               " leaves the double range while inverting at index " + std::to_string(j));
        }
        coeffs[static_cast<std::size_t>(j - in.lo)] = z[j] / product;
    }
    return WindowVector(out, std::move(coeffs), z.p());
}

SalasUnilateralReport salas_unilateral(const WeightSequence& w, std::size_t horizon, double threshold) {
    if (w.axis() != Axis::Natural) {
        throw InputError("unilateral Salas test needs weights on the natural axis");
    }
    if (horizon == 0) {
        throw InputError("horizon must be >= 1");
    }
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw InputError("threshold must be a finite positive real");
    }
    SalasUnilateralReport report;
    report.horizon = horizon;
    report.threshold = threshold;

    const double log_threshold = std::log(threshold);
    detail::CompensatedSum acc;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= horizon; ++n) {
        acc.add(w.log_weight(static_cast<long>(n)));
        const double v = acc.value();
        if (v > best) {
            best = v;
            report.argmax_n = n;
        }
        if (!report.first_crossing && v >= log_threshold) {
            report.first_crossing = n;
        }
    }
    report.max_log10_product = to_log10(best);
    report.verdict = report.first_crossing ? Verdict::EvidenceHypercyclic : Verdict::UndeterminedAtHorizon;
    return report;
}

SalasBilateralReport salas_bilateral(const WeightSequence& w, const SalasQuery& query, unsigned threads) {
    if (w.axis() != Axis::Integers) {
        throw InputError("bilateral Salas test needs weights on the integer axis");
    }
    if (!(query.epsilon > 0.0) || !std::isfinite(query.epsilon)) {
        throw InputError("epsilon must be a finite positive real");
    }
    if (query.q < 1) {
        throw InputError("q must be a positive integer");
    }
    if (query.horizon == 0) {
        throw InputError("horizon must be >= 1");
    }

    const long reach = query.q - 1;
    const long h = static_cast<long>(query.horizon);
    const detail::LogPrefix prefix(-reach - h, reach + h, [&](long i) { return w.log_weight(i); });

    struct Extremes {
        double min_forward;
        double max_backward;
    };
    auto extremes = [&](std::size_t n) {
        const long len = static_cast<long>(n);
        Extremes e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
        for (long j = -reach; j <= reach; ++j) {
            e.min_forward = std::min(e.min_forward, prefix.range(j, j + len));
            e.max_backward = std::max(e.max_backward, prefix.range(j - len, j));
        }
        return e;
    };

    const double upper = std::log(1.0 / query.epsilon);
    const double lower = std::log(query.epsilon);
    const auto found = first_index(1, query.horizon + 1, threads, [&](std::size_t n) {
        const Extremes e = extremes(n);
        return e.min_forward > upper && e.max_backward < lower;
    });

    SalasBilateralReport report;
    report.query = query;
    report.n = found;
    report.verdict = found ? Verdict::EvidenceHypercyclic : Verdict::UndeterminedAtHorizon;
    const Extremes e = extremes(found.value_or(query.horizon));
    report.min_forward_log10 = to_log10(e.min_forward);
    report.max_backward_log10 = to_log10(e.max_backward);
    return report;
}

RefutationCertificate refute_conjecture(const WeightSequence& w, std::span<const std::size_t> nk, std::uint64_t n_max,
                                        long j_range, unsigned threads) {
    if (w.axis() != Axis::Integers) {
        throw InputError("the conjecture concerns bilateral shifts; weights must be on the integer axis");
    }
    if (nk.empty()) {
        throw InputError("refutation needs a nonempty n_k sequence");
    }
    for (std::size_t i = 0; i < nk.size(); ++i) {
        if (nk[i] == 0 || (i > 0 && nk[i] <= nk[i - 1])) {
            throw InputError("n_k must be strictly increasing positive integers");
        }
    }
    if (n_max == 0) {
        throw InputError("N_max must be >= 1");
    }
    const long top_n = static_cast<long>(nk.back());
    if (j_range < top_n) {
        throw InputError("j_range must be >= max(n_k) so the reversed products w_{n_k}...w_1 are sampled");
    }

    RefutationCertificate cert;
    cert.j_range = j_range;
    cert.n_max = n_max;
    cert.w0 = w(0);
    cert.note =
        "sup over j truncated to |j| <= j_range; N read as 'for every N some n_k works'; "
        "verdicts describe the sampled data only";

    const detail::LogPrefix prefix(-j_range - top_n - 1, j_range + top_n, [&](long i) { return w.log_weight(i); });

    struct BackwardSup {
        double value;
        long j;
    };
    const auto sups = parallel_map<BackwardSup>(nk.size(), threads, [&](std::size_t k) {
        const long len = static_cast<long>(nk[k]);
        BackwardSup best{-std::numeric_limits<double>::infinity(), 0};
        for (long j = -j_range; j <= j_range; ++j) {
            const double v = prefix.range(j - len, j);
            if (v > best.value) {
                best = {v, j};
            }
        }
        return best;
    });

    const std::size_t count = nk.size();
    double alpha = -std::numeric_limits<double>::infinity();
    std::vector<double> forward(count);
    for (std::size_t k = 0; k < count; ++k) {
        cert.sup_backward_log10.push_back(to_log10(sups[k].value));
        if (sups[k].value > alpha) {
            alpha = sups[k].value;
            cert.alpha_k = k + 1;
            cert.alpha_j = sups[k].j;
        }
        forward[k] = prefix.range(-1, static_cast<long>(nk[k]));
        cert.forward_at_zero_log10.push_back(to_log10(forward[k]));
    }
    cert.alpha_log10 = to_log10(alpha);

    // Condition (1): the backward sup has grown past every scale N <= N_max.
    const double log_n_max = std::log(static_cast<double>(n_max));
    for (std::size_t k = 1; k < count; ++k) {
        if (sups[k].value - sups[0].value > log_n_max + kLogTol) {
            cert.violated = ConjectureCondition::Cond1;
            cert.alpha_unbounded = true;
            cert.witness = {k + 1, sups[k].j, to_log10(sups[k].value), static_cast<double>(n_max)};
            cert.reference_log10 = to_log10(sups[0].value + log_n_max);
            return cert;
        }
    }

    // Still climbing at the last sample: cannot tell whether alpha is finite.
    if (count >= 2) {
        double earlier = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < count; ++k) {
            earlier = std::max(earlier, sups[k].value);
        }
        if (sups[count - 1].value > earlier + kLogTol) {
            // Forward products that have stopped growing break condition (2)
            // whatever alpha turns out to be.
            double best_forward = -std::numeric_limits<double>::infinity();
            std::size_t best_forward_k = 0;
            for (std::size_t k = 0; k + 1 < count; ++k) {
                if (forward[k] > best_forward) {
                    best_forward = forward[k];
                    best_forward_k = k;
                }
            }
            if (forward[count - 1] <= best_forward + kLogTol) {
                cert.violated = ConjectureCondition::Cond2;
                cert.witness = {count, 0, to_log10(forward[count - 1]), 0.0};
                cert.reference_log10 = to_log10(best_forward);
                cert.note += "; forward product at the last n_k does not exceed the one at k = " +
                             std::to_string(best_forward_k + 1);
                return cert;
            }
            cert.note += "; backward sup still increasing at the last n_k";
            return cert;
        }
    }

    // The chain: a k with w_0...w_{n_k} > alpha N and w_{n_k}...w_1 <= alpha
    // forces w_0 > N. Since j_range >= n_k every reversed product is covered by
    // alpha, so the chain fires exactly while N < max_k (w_0...w_{n_k}) / alpha.
    double ratio = -std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const double reversed = prefix.range(0, static_cast<long>(nk[k]));
        if (reversed <= alpha + kLogTol && forward[k] - alpha > ratio) {
            ratio = forward[k] - alpha;
            best_k = k;
        }
    }

    const double cut = ratio - kLogTol;
    if (cut > std::log(static_cast<double>(n_max)) + kLogTol) {
        cert.chain_last_n = n_max;
        cert.note += "; chain forced w_0 > N for every N <= N_max";
        return cert;
    }
    std::uint64_t n_stop = 1;
    if (cut > 0.0) {
        n_stop = static_cast<std::uint64_t>(std::floor(std::exp(cut)));
        while (n_stop > 1 && std::log(static_cast<double>(n_stop - 1)) >= cut) {
            --n_stop;
        }
        while (std::log(static_cast<double>(n_stop)) < cut) {
            ++n_stop;
        }
    }
    if (n_stop > n_max) {
        cert.chain_last_n = n_max;
        cert.note += "; chain forced w_0 > N for every N <= N_max";
        return cert;
    }

    cert.chain_last_n = n_stop - 1;
    if (!(cert.w0 > static_cast<double>(cert.chain_last_n))) {
        throw NumericError("refutation chain derived w_0 > " + std::to_string(cert.chain_last_n) +
                           " but w_0 = " + std::to_string(cert.w0));
    }
    cert.violated = ConjectureCondition::Cond2;
    cert.witness = {best_k + 1, 0, to_log10(forward[best_k]), static_cast<double>(n_stop)};
    cert.reference_log10 = to_log10(alpha + std::log(static_cast<double>(n_stop)));
    return cert;
}

std::string_view to_string(ConjectureCondition c) noexcept {
    switch (c) {
        case ConjectureCondition::Cond1:
            return "COND1";
        case ConjectureCondition::Cond2:
            return "COND2";
        case ConjectureCondition::Undetermined:
            return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

ConjectureCondition condition_from_string(std::string_view s) {
    for (auto c : {ConjectureCondition::Cond1, ConjectureCondition::Cond2, ConjectureCondition::Undetermined}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw InputError("unknown condition '" + std::string(s) + "'");
}

}  // namespace hyperlab
