#include "sharp/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "sharp/checkpoint.hpp"
#include "sharp/poly_io.hpp"
#include "sharp/ratmat.hpp"

namespace sharp {

using nlohmann::json;

void validate(const ClassifyConfig& config) {
    if (config.degree < 1) throw std::invalid_argument("degree must be positive");
    if (config.degree % 2 == 0) throw std::invalid_argument("degree must be odd");
    if (config.degree > 63) throw std::invalid_argument("degree must be at most 63");
    validate_prime(config.prime, config.degree);
}

json to_json(const SharpRecord& r) {
    json doc = to_json(r.poly);
    json support = json::array();
    for (auto m : r.support) support.push_back({m.a, m.b});
    doc["support"] = std::move(support);
    doc["symmetric"] = r.symmetric;
    doc["canonical"] = r.canonical;
    doc["affine_anomaly"] = r.affine_anomaly;
    doc["status"] = r.affine_anomaly ? "affine-anomaly" : "sharp";
    return doc;
}

RunStats& RunStats::operator+=(const RunStats& o) {
    supports_enumerated += o.supports_enumerated;
    rejected_mod2 += o.rejected_mod2;
    rejected_modp += o.rejected_modp;
    rejected_exact += o.rejected_exact;
    rejected_positivity += o.rejected_positivity;
    found += o.found;
    return *this;
}

double RunStats::mod2_share() const {
    const auto modular = rejected_mod2 + rejected_modp;
    return modular == 0 ? 0.0 : static_cast<double>(rejected_mod2) / static_cast<double>(modular);
}

namespace {

json counters_json(const RunStats& s) {
    return {{"supports_enumerated", s.supports_enumerated},
            {"rejected_mod2", s.rejected_mod2},
            {"rejected_modp", s.rejected_modp},
            {"rejected_exact", s.rejected_exact},
            {"rejected_positivity", s.rejected_positivity},
            {"found", s.found}};
}

RunStats counters_from_json(const json& j) {
    RunStats s;
    auto get = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_unsigned()) {
            throw CheckpointError(std::string("checkpoint chunk lacks counter '") + key + "'");
        }
        return j[key].get<std::uint64_t>();
    };
    s.supports_enumerated = get("supports_enumerated");
    s.rejected_mod2 = get("rejected_mod2");
    s.rejected_modp = get("rejected_modp");
    s.rejected_exact = get("rejected_exact");
    s.rejected_positivity = get("rejected_positivity");
    s.found = get("found");
    if (!s.counters_consistent()) throw CheckpointError("checkpoint chunk counters do not add up");
    return s;
}

}  // namespace

json to_json(const RunStats& s) {
    json j = counters_json(s);
    j["chunks_total"] = s.chunks_total;
    j["chunks_resumed"] = s.chunks_resumed;
    j["mod2_share"] = s.mod2_share();
    j["wall_seconds"] = s.wall_seconds;
    return j;
}

namespace {

using Found = std::pair<TriPoly, bool>;  // polynomial, affine anomaly

std::vector<Monomial> interior_support(const TriPoly& p, int d) {
    std::vector<Monomial> out;
    for (const auto& [m, c] : p.terms()) {
        if (m != Monomial{d, 0} && m != Monomial{0, d}) out.push_back(m);
    }
    return out;
}

// Runs the staged decision for one support at a time. Bases for the
// augmented matrix are kept per prefix length, so consecutive supports that
// share a prefix only pay for the columns that changed.
class SupportEvaluator {
  public:
    enum class Outcome { RejectedMod2, RejectedModP, RejectedExact, RejectedPositivity, Found };

    SupportEvaluator(const Universe& u, const ClassifyConfig& cfg)
        : u_(u),
          d_(u.degree),
          k_(u.support_size()),
          stages_(cfg.stages),
          target_(target_vector(u.degree)),
          gp_(cfg.prime, u.degree + 1),
          ind2_(k_ + 1),
          size2_(k_ + 1),
          indp_(k_ + 1),
          sizep_(k_ + 1),
          scratch_(static_cast<std::size_t>(u.degree) + 1) {
        for (auto m : u.monomials) {
            exact_.push_back(homogenize_column(m.a, m.b, d_));
            bits_.push_back(pack_mod2(exact_.back()));
            res_.push_back(residues(exact_.back(), cfg.prime));
        }
        ind2_[0] = g2_.push(pack_mod2(target_));
        size2_[0] = g2_.size();
        indp_[0] = gp_.push(residues(target_, cfg.prime));
        sizep_[0] = gp_.size();
    }

    Outcome evaluate(std::span<const int> support, std::size_t first_changed, std::optional<Found>& found) {
        found.reset();
        sync(support, first_changed);

        if (stages_.mod2) {
            bool full;
            if (k_ == 0) {
                full = ind2_[0];
            } else {
                g2_.truncate(size2_[k_ - 1]);
                full = ind2_[k_ - 1] && g2_.reduce(bits_[static_cast<std::size_t>(support[k_ - 1])]) != 0;
            }
            if (full) return Outcome::RejectedMod2;
        }
        if (stages_.modp) {
            bool full;
            if (k_ == 0) {
                full = indp_[0];
            } else {
                gp_.truncate(sizep_[k_ - 1]);
                const auto& r = res_[static_cast<std::size_t>(support[k_ - 1])];
                scratch_.assign(r.begin(), r.end());
                full = indp_[k_ - 1] && gp_.reduce(scratch_);
            }
            if (full) return Outcome::RejectedModP;
        }

        std::vector<ColumnVector> cols;
        cols.reserve(k_);
        for (int i : support) cols.push_back(exact_[static_cast<std::size_t>(i)]);
        const SolutionSet sol = solve_exact(cols, target_);
        if (!sol.consistent()) return Outcome::RejectedExact;
        const auto point = positive_solution(sol);
        if (!point) return Outcome::RejectedPositivity;

        TriPoly p = assemble(d_, support_monomials(u_, support), *point);
        if (!verify_constant_on_line(p).sharp) {
            throw std::logic_error("exact stage accepted a polynomial that is not sharp: " + to_text(p));
        }
        found.emplace(std::move(p), sol.status == SolutionStatus::Affine);
        return Outcome::Found;
    }

  private:
    // Prefix states 0..valid_ are current; state l covers t plus the first l
    // support columns.
    void sync(std::span<const int> support, std::size_t first_changed) {
        valid_ = std::min(valid_, first_changed);
        if (k_ == 0) return;
        for (std::size_t l = valid_ + 1; l <= k_ - 1; ++l) {
            const auto col = static_cast<std::size_t>(support[l - 1]);
            if (stages_.mod2) {
                g2_.truncate(size2_[l - 1]);
                ind2_[l] = ind2_[l - 1] && g2_.push(bits_[col]);
                size2_[l] = g2_.size();
            }
            if (stages_.modp) {
                gp_.truncate(sizep_[l - 1]);
                indp_[l] = indp_[l - 1] && gp_.push(res_[col]);
                sizep_[l] = gp_.size();
            }
        }
        valid_ = k_ - 1;
    }

    const Universe& u_;
    int d_;
    std::size_t k_;
    ModularStages stages_;
    ColumnVector target_;
    std::vector<ColumnVector> exact_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<std::uint32_t>> res_;

    Gf2Basis g2_;
    GfpBasis gp_;
    std::vector<bool> ind2_;
    std::vector<std::size_t> size2_;
    std::vector<bool> indp_;
    std::vector<std::size_t> sizep_;
    std::vector<std::uint32_t> scratch_;
    std::size_t valid_ = 0;
};

void count(RunStats& s, SupportEvaluator::Outcome o) {
    ++s.supports_enumerated;
    switch (o) {
        case SupportEvaluator::Outcome::RejectedMod2: ++s.rejected_mod2; break;
        case SupportEvaluator::Outcome::RejectedModP: ++s.rejected_modp; break;
        case SupportEvaluator::Outcome::RejectedExact: ++s.rejected_exact; break;
        case SupportEvaluator::Outcome::RejectedPositivity: ++s.rejected_positivity; break;
        case SupportEvaluator::Outcome::Found: ++s.found; break;
    }
}

json checkpoint_header(const ClassifyConfig& c) {
    return {{"checkpoint", "sharp-classify"},
            {"version", 1},
            {"degree", c.degree},
            {"prime", c.prime},
            {"filters",
             {{"adjacency", c.filters.adjacency},
              {"symmetry", c.filters.symmetry},
              {"row_coverage", c.filters.row_coverage}}},
            {"stages", {{"mod2", c.stages.mod2}, {"modp", c.stages.modp}}}};
}

struct ChunkOutput {
    RunStats stats;
    std::vector<Found> found;
};

json chunk_payload(const ChunkOutput& out) {
    json found = json::array();
    for (const auto& [p, affine] : out.found) found.push_back({{"poly", to_json(p)}, {"affine", affine}});
    return {{"stats", counters_json(out.stats)}, {"found", std::move(found)}};
}

ChunkOutput chunk_from_payload(const json& j, int d) {
    ChunkOutput out;
    if (!j.contains("stats") || !j.contains("found") || !j["found"].is_array()) {
        throw CheckpointError("checkpoint chunk lacks stats or found");
    }
    out.stats = counters_from_json(j["stats"]);
    for (const auto& f : j["found"]) {
        if (!f.is_object() || !f.contains("poly") || !f.contains("affine") || !f["affine"].is_boolean()) {
            throw CheckpointError("checkpoint chunk has a malformed found entry");
        }
        TriPoly p;
        try {
            p = poly_from_json(f["poly"]);
        } catch (const ParseError& e) {
            throw CheckpointError(std::string("checkpoint polynomial: ") + e.what());
        }
        if (p.degree() != d || !verify_constant_on_line(p).sharp) {
            throw CheckpointError("checkpoint holds a polynomial that is not sharp of degree " + std::to_string(d));
        }
        out.found.emplace_back(std::move(p), f["affine"].get<bool>());
    }
    if (out.found.size() != out.stats.found) throw CheckpointError("checkpoint chunk found count mismatch");
    return out;
}

}  // namespace

std::vector<SharpRecord> finalize_records(int d, const std::vector<Found>& found, bool canonical_only) {
    std::vector<Found> all;
    for (const auto& [p, affine] : found) {
        all.emplace_back(p, affine);
        all.emplace_back(swap_variables(p), affine);
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const Found& l, const Found& r) { return compare_terms(l.first, r.first) < 0; });
    std::vector<Found> unique;
    for (auto& f : all) {
        if (!unique.empty() && unique.back().first == f.first) {
            unique.back().second = unique.back().second || f.second;
        } else {
            unique.push_back(std::move(f));
        }
    }

    std::vector<SharpRecord> out;
    for (auto& [p, affine] : unique) {
        SharpRecord r;
        r.degree = d;
        r.symmetric = is_symmetric(p);
        r.canonical = compare_terms(p, swap_variables(p)) <= 0;
        r.affine_anomaly = affine;
        r.support = interior_support(p, d);
        r.poly = std::move(p);
        if (canonical_only && !r.canonical) continue;
        out.push_back(std::move(r));
    }
    return out;
}

ClassifyResult classify_degree(const ClassifyConfig& config) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const int d = config.degree;
    const Universe u = universe(d);
    const std::vector<Chunk> chunk_list = chunks(d);

    std::optional<CheckpointLog> log;
    std::vector<Found> found;
    RunStats total;
    total.chunks_total = chunk_list.size();
    if (config.checkpoint) {
        log.emplace(*config.checkpoint, checkpoint_header(config));
        for (const auto& [chunk, payload] : log->completed()) {
            if (!std::binary_search(chunk_list.begin(), chunk_list.end(), chunk)) {
                throw CheckpointError("checkpoint names a chunk outside this degree's chunk list");
            }
            ChunkOutput restored = chunk_from_payload(payload, d);
            total += restored.stats;
            for (auto& f : restored.found) found.push_back(std::move(f));
            ++total.chunks_resumed;
        }
    }

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunk_list.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stopped{false};
    std::mutex merge_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            SupportEvaluator eval(u, config);
            SupportCursor cursor(u, config.filters);
            RunStats local;
            std::vector<Found> local_found;
            std::optional<Found> hit;
            for (;;) {
                if (stopped.load() || (config.stop && config.stop())) {
                    stopped = true;
                    break;
                }
                const std::size_t i = next.fetch_add(1);
                if (i >= chunk_list.size()) break;
                const Chunk& chunk = chunk_list[i];
                if (log && log->completed().count(chunk)) continue;

                ChunkOutput out;
                cursor.restart(chunk);
                while (cursor.advance()) {
                    count(out.stats, eval.evaluate(cursor.support(), cursor.first_changed(), hit));
                    if (hit) out.found.push_back(std::move(*hit));
                }
                if (log) log->append(chunk, chunk_payload(out));
                local += out.stats;
                for (auto& f : out.found) local_found.push_back(std::move(f));
            }
            std::lock_guard lock(merge_mutex);
            total += local;
            for (auto& f : local_found) found.push_back(std::move(f));
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) failure = std::current_exception();
            stopped = true;
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    ClassifyResult result;
    result.records = finalize_records(d, found, config.canonical_only);
    result.stats = total;
    result.complete = !stopped.load();
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

std::vector<SharpRecord> oracle_classify(int d, bool force) {
    const Universe u = universe(d);
    if (d > 9 && !force) throw std::invalid_argument("oracle refuses degree above 9 without --force");

    const std::size_t k = u.support_size();
    const std::size_t n = u.monomials.size();
    const ColumnVector t = target_vector(d);
    std::vector<ColumnVector> exact;
    for (auto m : u.monomials) exact.push_back(homogenize_column(m.a, m.b, d));

    std::vector<Found> found;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    if (k > n) return {};
    for (;;) {
        std::vector<ColumnVector> cols;
        std::vector<Monomial> support;
        for (auto i : pick) {
            cols.push_back(exact[i]);
            support.push_back(u.monomials[i]);
        }
        const SolutionSet sol = solve_exact(cols, t);
        if (auto point = positive_solution(sol)) {
            TriPoly p = assemble(d, support, *point);
            if (!verify_constant_on_line(p).sharp) {
                throw std::logic_error("oracle produced a polynomial that is not sharp: " + to_text(p));
            }
            found.emplace_back(std::move(p), sol.status == SolutionStatus::Affine);
        }

        // next k-combination of n in lexicographic order
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return finalize_records(d, found, false);
}

namespace {

std::vector<SharpRecord> default_classifier(int d) {
    ClassifyConfig c;
    c.degree = d;
    return classify_degree(c).records;
}

void require_odd(int max_d) {
    if (max_d < 1 || max_d % 2 == 0) throw std::invalid_argument("maximum degree must be odd and positive");
}

}  // namespace

std::vector<std::uint64_t> sequence_terms(int max_d, const DegreeClassifier& classify) {
    require_odd(max_d);
    std::vector<std::uint64_t> out{0};
    for (int d = 1; d <= max_d; d += 2) out.push_back(classify(d).size());
    return out;
}

std::vector<std::uint64_t> sequence_terms(int max_d) { return sequence_terms(max_d, default_classifier); }

std::vector<int> uniqueness_degrees(int max_d, const DegreeClassifier& classify) {
    require_odd(max_d);
    std::vector<int> out;
    for (int d = 1; d <= max_d; d += 2) {
        const auto records = classify(d);
        std::vector<const SharpRecord*> canonical;
        for (const auto& r : records) {
            if (r.canonical) canonical.push_back(&r);
        }
        if (canonical.size() != 1) continue;
        const TriPoly g = group_invariant(d);
        if (canonical[0]->poly == g || swap_variables(canonical[0]->poly) == g) out.push_back(d);
    }
    return out;
}

std::vector<int> uniqueness_degrees(int max_d) { return uniqueness_degrees(max_d, default_classifier); }

FixtureReport verify_fixtures(const std::vector<TriPoly>& corpus) {
    FixtureReport report;
    std::map<int, std::vector<std::size_t>> sharp_by_degree;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const TriPoly& p = corpus[i];
        const auto v = verify_constant_on_line(p);
        report.by_degree[v.degree].degree = v.degree;
        ++report.by_degree[v.degree].listed;
        if (v.sharp) {
            sharp_by_degree[v.degree].push_back(i);
            continue;
        }
        std::string reason;
        if (!v.constant_on_line) reason = "not constant on the line x+y=1";
        else if (!v.nonnegative) reason = "negative coefficient";
        else reason = "degree " + std::to_string(v.degree) + " with " + std::to_string(v.term_count) +
                      " terms is not 2N-3";
        report.failures.push_back({i, to_text(p), reason});
    }

    for (auto& [d, idx] : sharp_by_degree) {
        FixtureSummary& s = report.by_degree[d];
        std::vector<TriPoly> classes;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const TriPoly& p = corpus[idx[a]];
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                const TriPoly& q = corpus[idx[b]];
                if (p == q || p == swap_variables(q)) s.swap_duplicates.emplace_back(idx[a], idx[b]);
            }
            TriPoly rep = compare_terms(p, swap_variables(p)) <= 0 ? p : swap_variables(p);
            if (std::find(classes.begin(), classes.end(), rep) == classes.end()) {
                if (is_symmetric(rep)) ++s.symmetric;
                classes.push_back(std::move(rep));
            }
        }
        s.distinct_classes = classes.size();
        s.raw_count = 2 * s.distinct_classes - s.symmetric;
    }
    return report;
}

std::vector<TriPoly> load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus " + path.string());
    std::vector<TriPoly> out;
    for (const auto& doc : read_json_documents(in)) out.push_back(poly_from_json(doc));
    return out;
}

}  // namespace sharp
