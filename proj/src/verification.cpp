#include "vtrust/verification.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

namespace vtrust {

namespace {

constexpr std::size_t kMaxSamples = 5;

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs job(i) for i in [0, count) on `threads` workers. Each job writes only
/// its own output slot, so results are independent of scheduling.
template <typename Job>
void parallel_for(std::size_t count, unsigned threads, Job job) {
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) job(i);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

template <typename Describe>
void record(LawTally& tally, bool ok, const Describe& describe) {
    ++tally.checked;
    if (ok) return;
    ++tally.counterexamples;
    if (tally.samples.size() < kMaxSamples) tally.samples.push_back(describe());
}

void merge_into(PropositionReport& into, const PropositionReport& from) {
    for (const auto& [name, tally] : from.laws) {
        auto& dst = into.laws[name];
        dst.checked += tally.checked;
        dst.counterexamples += tally.counterexamples;
        for (const auto& s : tally.samples) {
            if (dst.samples.size() < kMaxSamples) dst.samples.push_back(s);
        }
    }
}

struct RelationJob {
    std::size_t n;
    std::uint64_t relation;
};

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
}

ValueUniverse enumerated_universe(std::size_t n, std::uint64_t relation) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    auto slots = index_pairs(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if ((relation >> k) & 1U) pairs.emplace_back(names[slots[k].first], names[slots[k].second]);
    }
    return ValueUniverse(names, pairs);
}

std::string describe_relation(const ValueUniverse& u) {
    std::string out = "n=" + std::to_string(u.size()) + " oppositions={";
    bool first = true;
    for (auto [a, b] : u.opposition_pairs()) {
        if (!first) out += ", ";
        out += u.name(a) + "~" + u.name(b);
        first = false;
    }
    return out + "}";
}

PropositionReport check_relation(std::size_t n, std::uint64_t relation) {
    PropositionReport r;
    const ValueUniverse u = enumerated_universe(n, relation);
    const std::size_t subsets = std::size_t{1} << n;

    std::vector<ValueSet> sets(subsets);
    std::vector<bool> consistent(subsets);
    for (std::size_t m = 0; m < subsets; ++m) {
        sets[m] = ValueSet::from_mask(m);
        consistent[m] = is_consistent(u, sets[m]);
    }
    auto fmt = [&](std::initializer_list<std::pair<const char*, std::size_t>> named) {
        std::string out = describe_relation(u);
        for (auto [label, m] : named) out += std::string(" ") + label + "=" + u.format(sets[m]);
        return out;
    };
    auto shares_opposed_value = [&](const ValueSet& v, const ValueSet& w) {
        for (ValueId x : v & w) {
            if (u.opposing(x).intersects(v) && u.opposing(x).intersects(w)) return true;
        }
        return false;
    };

    auto& p1 = r.laws["intersection_consistent"];
    auto& p2 = r.laws["conflict_consistent"];
    auto& p3 = r.laws["conflict_inconsistent_iff"];
    auto& signs = r.laws["independent_sign_laws"];
    for (std::size_t a = 0; a < subsets; ++a) {
        for (std::size_t b = 0; b < subsets; ++b) {
            const ValueSet& v = sets[a];
            const ValueSet& w = sets[b];
            auto describe = [&] { return fmt({{"V", a}, {"W", b}}); };
            ValueSet conflict = conflict_set(u, v, w);
            bool conflict_ok = is_consistent(u, conflict);
            if (consistent[a] || consistent[b]) {
                record(p1, is_consistent(u, v & w), describe);
                record(p2, conflict_ok, describe);
            }
            bool predicted_inconsistent = !consistent[a] && !consistent[b] && shares_opposed_value(v, w);
            record(p3, predicted_inconsistent == !conflict_ok, describe);

            if (consistent[a] && consistent[b]) {
                auto score = trust_independent(u, v, w).value;
                bool ok = true;
                if (conflict.empty()) ok = ok && score >= 0;
                if ((v & w).empty()) ok = ok && score <= 0;
                if (conflict.empty() && (v & w).empty()) ok = ok && score == 0;
                record(signs, ok, describe);
            }
        }
    }

    auto& p41 = r.laws["conflict_distributes_intersection"];
    auto& p42 = r.laws["conflict_distributes_union"];
    auto& p5 = r.laws["bold_ge_cautious"];
    auto& p6 = r.laws["semi_independent_ge_cautious"];
    auto& p7 = r.laws["conflict_free_ordering"];
    for (std::size_t a = 0; a < subsets; ++a) {
        for (std::size_t b = 0; b < subsets; ++b) {
            for (std::size_t c = 0; c < subsets; ++c) {
                const ValueSet& va = sets[a];
                const ValueSet& vb = sets[b];
                const ValueSet& vc = sets[c];
                auto describe = [&] { return fmt({{"V", a}, {"W", b}, {"U", c}}); };
                ValueSet left = conflict_set(u, va, vc);
                ValueSet right = conflict_set(u, vb, vc);
                record(p41, conflict_set(u, va & vb, vc) == (left & right), describe);
                record(p42, conflict_set(u, va | vb, vc) == (left | right), describe);

                if (!(consistent[a] && consistent[b] && consistent[c])) continue;
                auto cautious = trust_cautious(u, va, vb, vc).value;
                auto bold = trust_bold(u, va, vb, vc).value;
                auto semi = trust_semi_independent(u, vb, vc).value;
                record(p5, bold >= cautious, describe);
                record(p6, semi >= cautious, describe);
                bool conflict_free = conflict_set(u, va, vb).empty() && left.empty() && right.empty();
                if (conflict_free) record(p7, cautious <= semi && semi <= bold, describe);
            }
        }
    }
    return r;
}

/// Name-level copy of a scenario that is easy to edit and rebuild.
struct Draft {
    struct AgentDraft {
        std::string id;
        std::set<std::string> core;
        std::map<std::string, std::set<std::string>> action_values;
        std::set<std::string> capabilities;
    };
    std::vector<std::string> values;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<AgentDraft> agents;
    std::string initiator;
    std::vector<std::string> chain;
    TrustMode mode;
    std::optional<Weights> weights;

    static Draft from(const Scenario& s) {
        const auto& u = s.universe();
        Draft d{u.names(), {}, {}, s.initiator().str(), {}, s.mode(), s.weights()};
        for (auto [a, b] : u.opposition_pairs()) d.pairs.emplace_back(u.name(a), u.name(b));
        for (const auto& [id, agent] : s.agents()) {
            AgentDraft ad{id.str(), {}, {}, {}};
            for (auto& n : u.names_of(agent.core_values())) ad.core.insert(n);
            for (const auto& [action, vs] : agent.action_values()) {
                auto& dst = ad.action_values[action.str()];
                for (auto& n : u.names_of(vs)) dst.insert(n);
            }
            for (const auto& c : agent.capabilities()) ad.capabilities.insert(c.str());
            d.agents.push_back(std::move(ad));
        }
        for (const auto& a : s.action_chain()) d.chain.push_back(a.str());
        return d;
    }

    [[nodiscard]] Scenario build() const {
        ValueUniverse u(values, pairs);
        std::vector<Agent> built;
        for (const auto& ad : agents) {
            std::map<ActionId, ValueSet> av;
            for (const auto& [action, vs] : ad.action_values) av.emplace(ActionId(action), u.make_set_from(vs));
            std::set<ActionId> caps;
            for (const auto& c : ad.capabilities) caps.emplace(c);
            built.emplace_back(u, AgentId(ad.id), u.make_set_from(ad.core), std::move(av), std::move(caps));
        }
        std::vector<ActionId> ch;
        for (const auto& a : chain) ch.emplace_back(a);
        return Scenario(std::move(u), std::move(built), AgentId(initiator), std::move(ch), mode, weights);
    }

    void drop_value(const std::string& name) {
        std::erase(values, name);
        std::erase_if(pairs, [&](const auto& p) { return p.first == name || p.second == name; });
        for (auto& ad : agents) drop_agent_value(ad, name);
    }

    static void drop_agent_value(AgentDraft& ad, const std::string& name) {
        ad.core.erase(name);
        for (auto& [_, vs] : ad.action_values) vs.erase(name);
    }
};

std::vector<Draft> shrink_candidates(const Draft& d) {
    std::vector<Draft> out;
    for (std::size_t i = 0; i < d.agents.size(); ++i) {
        if (d.agents[i].id == d.initiator) continue;
        Draft c = d;
        c.agents.erase(c.agents.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(c));
    }
    if (d.chain.size() > 1) {
        for (std::size_t i = d.chain.size(); i-- > 0;) {
            Draft c = d;
            c.chain.erase(c.chain.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(std::move(c));
        }
    }
    for (const auto& v : d.values) {
        Draft c = d;
        c.drop_value(v);
        out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        Draft c = d;
        c.pairs.erase(c.pairs.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < d.agents.size(); ++i) {
        for (const auto& cap : d.agents[i].capabilities) {
            Draft c = d;
            c.agents[i].capabilities.erase(cap);
            out.push_back(std::move(c));
        }
        for (const auto& v : d.agents[i].core) {
            Draft c = d;
            Draft::drop_agent_value(c.agents[i], v);
            out.push_back(std::move(c));
        }
        for (const auto& [action, _] : d.agents[i].action_values) {
            if (std::find(d.chain.begin(), d.chain.end(), action) != d.chain.end()) continue;
            Draft c = d;
            c.agents[i].action_values.erase(action);
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(RelationClass relations) {
    return relations == RelationClass::all ? "all" : "single_opposite";
}

RelationClass parse_relation_class(std::string_view name) {
    if (name == "all") return RelationClass::all;
    if (name == "single_opposite") return RelationClass::single_opposite;
    throw DomainError("unknown relation class '" + std::string(name) + "'");
}

std::uint64_t PropositionReport::total_counterexamples() const {
    std::uint64_t total = 0;
    for (const auto& [_, tally] : laws) total += tally.counterexamples;
    return total;
}

PropositionReport check_propositions(const PropositionConfig& config) {
    if (config.max_universe > 6) {
        throw SizeLimitError("proposition enumeration beyond 6 values is intractable");
    }
    std::vector<RelationJob> jobs;
    for (std::size_t n = 0; n <= config.max_universe; ++n) {
        std::uint64_t relations = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
        auto slots = index_pairs(n);
        for (std::uint64_t r = 0; r < relations; ++r) {
            if (config.relations == RelationClass::single_opposite) {
                std::vector<int> degree(n, 0);
                bool single = true;
                for (std::size_t k = 0; k < slots.size(); ++k) {
                    if ((r >> k) & 1U) {
                        single = single && ++degree[slots[k].first] <= 1 && ++degree[slots[k].second] <= 1;
                    }
                }
                if (!single) continue;
            }
            jobs.push_back({n, r});
        }
    }
    std::vector<PropositionReport> partial(jobs.size());
    parallel_for(jobs.size(), resolve_threads(config.threads),
                 [&](std::size_t i) { partial[i] = check_relation(jobs[i].n, jobs[i].relation); });

    PropositionReport report;
    report.max_universe = config.max_universe;
    report.relations = config.relations;
    report.relations_checked = jobs.size();
    for (const auto& p : partial) merge_into(report, p);
    return report;
}

GeneratorConfig fuzz_trial_config(const FuzzConfig& config, std::size_t trial) {
    const std::uint64_t trial_seed = mix_seed(mix_seed(config.seed) + trial);
    std::mt19937_64 rng(trial_seed);
    auto in_range = [&](std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    };
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    GeneratorConfig g;
    g.seed = mix_seed(trial_seed);
    g.n_agents = in_range(2, std::max<std::size_t>(2, config.max_agents));
    g.chain_length = in_range(1, std::max<std::size_t>(1, config.max_chain));
    g.n_values = in_range(1, std::max<std::size_t>(1, config.max_values));
    g.opposition_density = 0.5 * unit();
    g.value_density = 0.2 + 0.8 * unit();
    g.capability_density = 0.3 + 0.7 * unit();
    return g;
}

bool greedy_bold_loses(const Scenario& scenario) {
    try {
        auto bold = aggregate_trust(build_sequence(scenario.with_mode(TrustMode::bold)));
        auto cautious = aggregate_trust(build_sequence(scenario.with_mode(TrustMode::cautious)));
        return bold < cautious;
    } catch (const NoCandidateError&) {
        return false;
    }
}

Scenario minimize_scenario(const Scenario& scenario,
                           const std::function<bool(const Scenario&)>& still_fails) {
    Draft current = Draft::from(scenario);
    Scenario best = scenario;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& candidate : shrink_candidates(current)) {
            std::optional<Scenario> built;
            try {
                built = candidate.build();
            } catch (const DomainError&) {
                continue;
            }
            bool fails = false;
            try {
                fails = still_fails(*built);
            } catch (const std::exception&) {
                fails = false;
            }
            if (fails) {
                current = candidate;
                best = std::move(*built);
                progress = true;
                break;
            }
        }
    }
    return best;
}

FuzzReport fuzz_theorem(const FuzzConfig& config) {
    struct TrialResult {
        bool generated = false;
        std::optional<TheoremReport> report;
        std::optional<GreedyViolation> violation;
    };
    std::vector<TrialResult> results(config.trials);

    parallel_for(config.trials, resolve_threads(config.threads), [&](std::size_t trial) {
        GeneratorConfig g = fuzz_trial_config(config, trial);
        std::optional<Scenario> scenario;
        try {
            scenario = generate_population(g).scenario;
        } catch (const GenerationError&) {
            return;
        }
        auto& out = results[trial];
        out.generated = true;
        out.report = theorem_check(*scenario);
        if (out.report->comparable && !out.report->holds) {
            Scenario small = minimize_scenario(*scenario, greedy_bold_loses);
            out.violation = GreedyViolation{trial, g.seed, *scenario, small, theorem_check(small)};
        }
    });

    FuzzReport report;
    report.trials = config.trials;
    for (std::size_t trial = 0; trial < results.size(); ++trial) {
        auto& r = results[trial];
        if (!r.generated) {
            ++report.generation_failures;
            continue;
        }
        const auto& t = *r.report;
        if (t.first_choice_agrees) ++report.first_choice_agreements;
        if (t.comparable) {
            ++report.greedy_comparable;
            if (!t.holds) ++report.greedy_violations;
        }
        if (t.oracle_comparable) {
            ++report.oracle_comparable;
            if (!t.oracle_holds) {
                ++report.oracle_violations;
                report.oracle_failures.push_back(trial);
            }
        }
        if (r.violation) report.violations.push_back(std::move(*r.violation));
    }
    return report;
}

}  // namespace vtrust
