#include "bes/niceness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <random>
#include <thread>

namespace bes {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Nice: return "Nice";
    case Verdict::NotNice: return "NotNice";
    case Verdict::SampledNoViolation: return "SampledNoViolation";
    }
    return "?";
}

std::string condition_name(Condition c) {
    switch (c) {
    case Condition::Independence: return "Independence";
    case Condition::Cond1: return "Cond1";
    case Condition::Cond2: return "Cond2";
    case Condition::Item1: return "Item1";
    case Condition::Item2: return "Item2";
    case Condition::Item3: return "Item3";
    }
    return "?";
}

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t popcount_words(std::span<const std::uint64_t> w) {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

std::size_t and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

bool subset_of(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

Words to_words(const VertexMask& m, std::size_t words) {
    Words w(words, 0);
    auto src = m.words();
    std::copy(src.begin(), src.end(), w.begin());
    return w;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    // Unbiased draw in [0, n) by rejection; n > 0.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

// Evaluates the niceness rules on one subset given as raw words.
class NiceEvaluator {
public:
    NiceEvaluator(const Hypergraph& f, const VertexSubset& a)
        : kernel_(f), a_(to_words(a.mask(), kernel_.words())), a_size_(a.size()),
          k_(f.delta()) {}

    std::size_t words() const { return kernel_.words(); }

    SubsetVerdict evaluate(std::span<const std::uint64_t> u) const {
        SubsetVerdict out;
        const long size = static_cast<long>(popcount_words(u));
        out.delta = size - static_cast<long>(kernel_.induced_edges(u));
        const long in_a = static_cast<long>(and_count(u, a_));
        const bool a_inside = static_cast<std::size_t>(in_a) == a_size_;
        const long bound1 = in_a - (a_inside ? 1 : 0);
        if (out.delta < bound1) {
            out.violated = Condition::Cond1;
            out.bound = bound1;
            return out;
        }
        if (in_a <= k_ - 1 && size > in_a && out.delta < in_a + 1) {
            out.violated = Condition::Cond2;
            out.bound = in_a + 1;
        }
        return out;
    }

private:
    MaskKernel kernel_;
    Words a_;
    std::size_t a_size_;
    long k_;
};

std::vector<std::string> labels_of_words(const Hypergraph& h, std::span<const std::uint64_t> w) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if ((w[v >> 6] >> (v & 63)) & 1u) out.push_back(h.label(static_cast<VertexId>(v)));
    return out;
}

void check_witness_shape(const Hypergraph& f, const VertexSubset& a) {
    if (!a.belongs_to(f)) throw Error("witness does not belong to this hypergraph");
    if (static_cast<long>(a.size()) != f.delta() + 1)
        throw Error("witness has size " + std::to_string(a.size()) + " but Delta(F) + 1 = " +
                    std::to_string(f.delta() + 1));
}

std::optional<NicenessReport> independence_failure(const Hypergraph& f, const VertexSubset& a) {
    if (is_independent(f, a)) return std::nullopt;
    NicenessReport r;
    r.verdict = Verdict::NotNice;
    auto d = difference(f, a);
    r.counterexample = Counterexample{a.labels(f), Condition::Independence, d.delta,
                                      static_cast<long>(a.size())};
    return r;
}

// Runs `visit(index)` over [0, total) split into contiguous chunks and
// returns the smallest index for which it reported a violation.
template <class Visit>
std::optional<std::uint64_t> first_violation(std::uint64_t total, unsigned workers, Visit visit) {
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{none};
    workers = std::max(1u, std::min<unsigned>(workers, 64));
    if (total < 4096) workers = 1;
    auto run = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            if ((i & 1023) == 0 && i > best.load(std::memory_order_relaxed)) return;
            if (visit(i)) {
                auto cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };
    if (workers == 1) {
        run(0, total);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
            if (lo < hi) pool.emplace_back(run, lo, hi);
        }
    }
    if (best.load() == none) return std::nullopt;
    return best.load();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) return std::numeric_limits<std::uint64_t>::max();
        r = r * (n - k + i) / i;
    }
    return r;
}

// Advances a sorted combination of `pool_size` elements; false when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t pool_size) {
    const std::size_t s = c.size();
    for (std::size_t i = s; i-- > 0;) {
        if (c[i] < pool_size - s + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Shared driver for the sampled checks. `pool` lists the vertices that may
// vary, `forced` is OR-ed into every subset, `biased` are pool positions
// favoured by the stratified pass.
class SubsetSampler {
public:
    SubsetSampler(std::size_t words, std::vector<VertexId> pool, Words forced,
                  std::vector<std::size_t> biased, const SamplingOptions& opt)
        : words_(words), pool_(std::move(pool)), forced_(std::move(forced)),
          biased_(std::move(biased)), opt_(opt), rng_(opt.seed) {
        std::vector<bool> is_biased(pool_.size(), false);
        for (auto b : biased_) is_biased[b] = true;
        for (std::size_t i = 0; i < pool_.size(); ++i)
            if (!is_biased[i]) unbiased_.push_back(i);
    }

    // Calls check(words) for every drawn subset until it returns true.
    // Returns the number of subsets checked, including the failing one.
    template <class Check>
    std::pair<std::uint64_t, bool> run(Check check) {
        std::uint64_t checked = 0;
        Words u(words_);
        auto emit = [&](auto fill) {
            u = forced_;
            fill();
            ++checked;
            return check(std::span<const std::uint64_t>(u));
        };
        auto set = [&](std::size_t pos) { u[pool_[pos] >> 6] |= std::uint64_t{1} << (pool_[pos] & 63); };

        for (std::uint64_t s = 0; s < opt_.samples; ++s) {
            if (emit([&] {
                    std::uint64_t bits = 0;
                    for (std::size_t i = 0; i < pool_.size(); ++i) {
                        if ((i & 63) == 0) bits = rng_();
                        if (bits & 1u) set(i);
                        bits >>= 1;
                    }
                }))
                return {checked, true};
        }

        for (std::size_t size = 1; size <= std::min(opt_.max_stratum_size, pool_.size()); ++size) {
            const auto total = binomial(pool_.size(), size);
            if (total <= opt_.per_stratum) {
                std::vector<std::size_t> comb(size);
                for (std::size_t i = 0; i < size; ++i) comb[i] = i;
                do {
                    if (emit([&] {
                            for (auto p : comb) set(p);
                        }))
                        return {checked, true};
                } while (next_combination(comb, pool_.size()));
                continue;
            }
            for (std::uint64_t d = 0; d < opt_.per_stratum; ++d) {
                const bool use_bias = (d & 1u) && !biased_.empty();
                if (emit([&] {
                        if (!use_bias) {
                            draw(pool_positions(), size, set);
                            return;
                        }
                        std::size_t from_bias = below(rng_, std::min(size, biased_.size()) + 1);
                        std::size_t rest = size - from_bias;
                        if (rest > unbiased_.size()) {
                            rest = unbiased_.size();
                            from_bias = size - rest;
                        }
                        draw(biased_, from_bias, set);
                        draw(unbiased_, rest, set);
                    }))
                    return {checked, true};
            }
        }
        return {checked, false};
    }

private:
    const std::vector<std::size_t>& pool_positions() {
        if (all_.size() != pool_.size()) {
            all_.resize(pool_.size());
            for (std::size_t i = 0; i < all_.size(); ++i) all_[i] = i;
        }
        return all_;
    }

    // Partial Fisher-Yates: marks `count` distinct positions from `from`.
    template <class Set>
    void draw(const std::vector<std::size_t>& from, std::size_t count, Set set) {
        tmp_ = from;
        for (std::size_t i = 0; i < count && i < tmp_.size(); ++i) {
            std::size_t j = i + below(rng_, tmp_.size() - i);
            std::swap(tmp_[i], tmp_[j]);
            set(tmp_[i]);
        }
    }

    std::size_t words_;
    std::vector<VertexId> pool_;
    Words forced_;
    std::vector<std::size_t> biased_, unbiased_, all_, tmp_;
    SamplingOptions opt_;
    std::mt19937_64 rng_;
};

} // namespace

SubsetVerdict check_nice_conditions(const Hypergraph& f, const VertexSubset& a, const VertexSubset& u) {
    if (!u.belongs_to(f)) throw Error("subset does not belong to this hypergraph");
    check_witness_shape(f, a);
    NiceEvaluator ev(f, a);
    auto w = to_words(u.mask(), ev.words());
    return ev.evaluate(w);
}

NicenessReport verify_nice(const Hypergraph& f, const VertexSubset& a, const ExhaustiveOptions& opt) {
    check_witness_shape(f, a);
    if (f.vertex_count() > kMaxExhaustiveVertices)
        throw Error("exhaustive niceness check limited to " + std::to_string(kMaxExhaustiveVertices) +
                    " vertices; use sampling");
    if (auto r = independence_failure(f, a)) return *r;

    NiceEvaluator ev(f, a);
    const std::uint64_t total = std::uint64_t{1} << f.vertex_count();
    auto hit = first_violation(total, opt.workers, [&](std::uint64_t mask) {
        const std::uint64_t w[1] = {mask};
        return ev.evaluate(w).violated.has_value();
    });

    NicenessReport r;
    if (!hit) {
        r.verdict = Verdict::Nice;
        r.checked_subsets = total;
        return r;
    }
    const std::uint64_t w[1] = {*hit};
    auto v = ev.evaluate(w);
    r.verdict = Verdict::NotNice;
    r.checked_subsets = *hit + 1;
    r.counterexample = Counterexample{labels_of_words(f, w), *v.violated, v.delta, v.bound};
    return r;
}

NicenessReport verify_nice(const LabeledConfiguration& f, const std::vector<std::string>& a,
                           const ExhaustiveOptions& opt) {
    return verify_nice(f.graph, f.graph.subset(a), opt);
}

NicenessReport sample_nice(const Hypergraph& f, const VertexSubset& a, const SamplingOptions& opt) {
    check_witness_shape(f, a);
    if (opt.samples == 0) throw Error("sampling needs at least one sample");
    if (auto r = independence_failure(f, a)) {
        r->seed = opt.seed;
        return *r;
    }
    NiceEvaluator ev(f, a);
    std::vector<VertexId> pool(f.vertex_count());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<VertexId>(i);
    std::vector<std::size_t> biased;
    for (auto i : a.mask().indices()) biased.push_back(i);
    SubsetSampler sampler(ev.words(), pool, Words(ev.words(), 0), biased, opt);

    Words failing;
    SubsetVerdict fv;
    auto [checked, failed] = sampler.run([&](std::span<const std::uint64_t> u) {
        auto v = ev.evaluate(u);
        if (!v.violated) return false;
        failing.assign(u.begin(), u.end());
        fv = v;
        return true;
    });

    NicenessReport r;
    r.seed = opt.seed;
    r.checked_subsets = checked;
    if (!failed) {
        r.verdict = Verdict::SampledNoViolation;
        return r;
    }
    r.verdict = Verdict::NotNice;
    r.counterexample = Counterexample{labels_of_words(f, failing), *fv.violated, fv.delta, fv.bound};
    return r;
}

WitnessSearch find_witness(const Hypergraph& f) {
    if (f.vertex_count() > kMaxWitnessSearchVertices)
        throw Error("witness search limited to " + std::to_string(kMaxWitnessSearchVertices) + " vertices");
    WitnessSearch out;
    const long k = f.delta();
    if (k + 1 < 1 || static_cast<std::size_t>(k + 1) > f.vertex_count()) return out;
    const std::size_t s = static_cast<std::size_t>(k + 1);
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    do {
        ++out.candidates_checked;
        std::vector<VertexId> ids(comb.begin(), comb.end());
        auto a = f.subset_of_ids(ids);
        if (!is_independent(f, a)) continue;
        if (verify_nice(f, a).verdict == Verdict::Nice) {
            out.witness = a.labels(f);
            return out;
        }
    } while (next_combination(comb, f.vertex_count()));
    return out;
}

CycleBoundsReport verify_cycle_bounds(const LabeledConfiguration& cycle) {
    if (cycle.family.kind != FamilyKind::LinearCycle)
        throw Error("cycle bounds check expects the linear 3-cycle, got family '" +
                    family_name(cycle.family.kind) + "'");
    const auto& g = cycle.graph;
    VertexId v[7];
    for (int i = 1; i <= 6; ++i) v[i] = g.index_of(cycle.role_vertex("v" + std::to_string(i)));
    const std::uint64_t a = (1ULL << v[1]) | (1ULL << v[2]) | (1ULL << v[3]) | (1ULL << v[4]);
    const std::uint64_t v23 = (1ULL << v[2]) | (1ULL << v[3]);

    CycleBoundsReport r;
    r.holds = true;
    const std::uint64_t total = 1ULL << g.vertex_count();
    for (std::uint64_t u = 0; u < total; ++u) {
        ++r.checked_subsets;
        const long delta = std::popcount(u) - static_cast<long>(induced_edge_count(g, VertexMask::from_bits(g.vertex_count(), u)));
        const long in_a = std::popcount(u & a);
        const bool a_inside = (a & ~u) == 0;
        std::string failed;
        if (delta < in_a - (a_inside ? 1 : 0)) {
            failed = "main";
        } else if ((u & ~a) != 0 && (!((u >> v[1]) & 1u) || (u & v23) == 0) && delta < in_a + 1) {
            failed = "moreover";
        }
        if (!failed.empty()) {
            r.holds = false;
            r.failing_part = failed;
            r.failing_subset = g.subset_from_mask(VertexMask::from_bits(g.vertex_count(), u)).labels(g);
            return r;
        }
    }
    return r;
}

namespace {

struct GlLayout {
    int k = 0;
    int ell = 0;
};

GlLayout gl_layout(const LabeledConfiguration& gl) {
    GlLayout l;
    while (gl.has_role("x" + std::to_string(l.k + 1))) ++l.k;
    int ys = 0;
    while (gl.has_role("y" + std::to_string(ys))) ++ys;
    if (l.k < 2 || ys < 1 || !gl.has_role("A_ell"))
        throw Error("G_ell properties need roles x1..xk (k >= 2), y0..y_ell and A_ell");
    l.ell = ys - 1;
    return l;
}

} // namespace

NicenessReport verify_gl_niceness_properties(const LabeledConfiguration& gl, const GlMode& mode) {
    const auto layout = gl_layout(gl);
    const int k = layout.k, ell = layout.ell;
    const auto& g = gl.graph;
    const MaskKernel kernel(g);
    const std::size_t words = kernel.words();

    Words x(words, 0), a_ell(words, 0), xy(words, 0), copy(words, 0), forced(words, 0);
    auto put = [](Words& w, VertexId v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); };
    for (int i = 1; i <= k; ++i) {
        auto v = g.index_of(gl.role_vertex("x" + std::to_string(i)));
        put(x, v);
        put(xy, v);
    }
    put(xy, g.index_of(gl.role_vertex("y" + std::to_string(ell))));
    for (const auto& l : gl.role("A_ell")) put(a_ell, g.index_of(l));
    for (int j = 0; j < ell; ++j) put(forced, g.index_of(gl.role_vertex("y" + std::to_string(j))));
    if (ell == 0) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) put(copy, v);
    } else {
        for (auto v : gl.subcopy(g_base_copy_name(ell)).image) put(copy, v);
    }

    Words scratch(words);
    auto evaluate = [&](std::span<const std::uint64_t> u) -> SubsetVerdict {
        SubsetVerdict out;
        const long size = static_cast<long>(popcount_words(u));
        out.delta = size - static_cast<long>(kernel.induced_edges(u));
        const long in_a = static_cast<long>(and_count(u, a_ell));
        const long in_x = static_cast<long>(and_count(u, x));
        const long b1 = in_a - (subset_of(xy, u) ? 1 : 0);
        if (out.delta < b1) {
            out.violated = Condition::Item1;
            out.bound = b1;
            return out;
        }
        if (in_x <= k - 2 && size > in_a && out.delta < in_a + 1) {
            out.violated = Condition::Item2;
            out.bound = in_a + 1;
            return out;
        }
        if (in_x >= k - 1) {
            for (std::size_t i = 0; i < words; ++i) scratch[i] = u[i] & copy[i];
            if (!subset_of(scratch, x) && out.delta < k + ell) {
                out.violated = Condition::Item3;
                out.bound = k + ell;
            }
        }
        return out;
    };

    std::vector<VertexId> pool;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!((forced[v >> 6] >> (v & 63)) & 1u)) pool.push_back(v);

    NicenessReport r;
    Words failing;
    SubsetVerdict fv;
    bool failed = false;

    if (mode.exhaustive) {
        if (pool.size() > kMaxExhaustiveVertices)
            throw Error("exhaustive G_ell check limited to " + std::to_string(kMaxExhaustiveVertices) +
                        " free vertices; use sampling");
        const std::uint64_t total = std::uint64_t{1} << pool.size();
        Words u(words);
        for (std::uint64_t m = 0; m < total; ++m) {
            u = forced;
            for (std::uint64_t bits = m; bits; bits &= bits - 1) put(u, pool[std::countr_zero(bits)]);
            ++r.checked_subsets;
            auto v = evaluate(u);
            if (v.violated) {
                failing = u;
                fv = v;
                failed = true;
                break;
            }
        }
        r.verdict = failed ? Verdict::NotNice : Verdict::Nice;
    } else {
        if (mode.sampling.samples == 0) throw Error("sampling needs at least one sample");
        std::vector<std::size_t> biased;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if ((a_ell[pool[i] >> 6] >> (pool[i] & 63)) & 1u) biased.push_back(i);
        SubsetSampler sampler(words, pool, forced, biased, mode.sampling);
        auto [checked, hit] = sampler.run([&](std::span<const std::uint64_t> u) {
            auto v = evaluate(u);
            if (!v.violated) return false;
            failing.assign(u.begin(), u.end());
            fv = v;
            return true;
        });
        r.checked_subsets = checked;
        r.seed = mode.sampling.seed;
        failed = hit;
        r.verdict = failed ? Verdict::NotNice : Verdict::SampledNoViolation;
    }
    if (failed)
        r.counterexample = Counterexample{labels_of_words(g, failing), *fv.violated, fv.delta, fv.bound};
    return r;
}

} // namespace bes
