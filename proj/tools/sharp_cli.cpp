// Command-line front end: classify, verify, diagram, sequence, oracle.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input or
// configuration, 3 checkpoint corruption.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sharp/checkpoint.hpp"
#include "sharp/classify.hpp"
#include "sharp/diagram.hpp"
#include "sharp/poly_io.hpp"

namespace {

using nlohmann::json;
using namespace sharp;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;
constexpr int kCorrupt = 3;

enum class Format { Json, Text, Latex };

void write_record(std::ostream& out, const SharpRecord& r, Format f) {
    switch (f) {
        case Format::Json: out << to_json(r).dump() << '\n'; break;
        case Format::Text:
            out << to_text(r.poly);
            if (r.symmetric) out << "  [symmetric]";
            if (!r.canonical) out << "  [swap]";
            if (r.affine_anomaly) out << "  [affine-anomaly]";
            out << '\n';
            break;
        case Format::Latex: out << to_latex(r.poly) << '\n'; break;
    }
}

std::vector<json> read_input(const std::string& path) {
    if (path == "-") return read_json_documents(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_json_documents(in);
}

json report_json(const VerificationReport& v) {
    return {{"constant_on_line", v.constant_on_line},
            {"nonnegative", v.nonnegative},
            {"degree", v.degree},
            {"term_count", v.term_count},
            {"sharp", v.sharp}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classifier for sharp polynomials constant on the line x+y=1"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"text", Format::Text}, {"latex", Format::Latex}};

    // classify
    ClassifyConfig cfg;
    bool no_adjacent = false, no_symmetry = false, no_coverage = false, no_mod2 = false, no_modp = false;
    Format format = Format::Json;
    std::string checkpoint_path, output_path;
    auto* classify = app.add_subcommand("classify", "find every sharp polynomial of one odd degree");
    classify->add_option("--degree", cfg.degree, "odd target degree")->required();
    classify->add_option("--prime", cfg.prime, "prime for the modular stage")->capture_default_str();
    classify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
    classify->add_option("--checkpoint", checkpoint_path, "append-only checkpoint file; resumes if present");
    classify->add_flag("--no-prune-adjacent", no_adjacent, "do not skip supports with adjacent terms");
    classify->add_flag("--no-prune-symmetry", no_symmetry, "do not skip right side heavy supports");
    classify->add_flag("--no-row-coverage", no_coverage, "do not skip supports that miss a target row");
    classify->add_flag("--no-mod2", no_mod2, "disable the GF(2) rank stage");
    classify->add_flag("--no-modp", no_modp, "disable the GF(p) rank stage");
    classify->add_option("--format", format, "json, text or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    classify->add_flag("--canonical-only", cfg.canonical_only, "one record per swap pair");
    classify->add_option("--output", output_path, "results file (default: stdout)");

    // verify
    std::string verify_input;
    auto* verify = app.add_subcommand("verify", "check polynomials for sharpness");
    verify->add_option("input", verify_input, "polynomial JSON (single or line-delimited), - for stdin")->required();

    // diagram
    std::string diagram_input;
    auto* diagram = app.add_subcommand("diagram", "sign grid and sink/source report of (p-1)/(x+y-1)");
    diagram->add_option("input", diagram_input, "polynomial JSON (single or line-delimited), - for stdin")->required();

    // sequence
    int max_degree = 1;
    bool sequence_force = false;
    unsigned sequence_threads = 0;
    auto* sequence = app.add_subcommand("sequence", "counts per degree 2N-3 and uniqueness degrees");
    sequence->add_option("--max-degree", max_degree, "largest odd degree")->required();
    sequence->add_option("--threads", sequence_threads, "worker threads (0: all cores)");
    sequence->add_flag("--force", sequence_force, "allow degrees above 13 (long running)");

    // oracle
    int oracle_degree = 1;
    bool oracle_force = false;
    Format oracle_format = Format::Json;
    auto* oracle = app.add_subcommand("oracle", "brute-force classification without pruning");
    oracle->add_option("--degree", oracle_degree, "odd target degree")->required();
    oracle->add_flag("--force", oracle_force, "allow degrees above 9");
    oracle->add_option("--format", oracle_format, "json, text or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (*classify) {
            cfg.filters = {!no_adjacent, !no_symmetry, !no_coverage};
            cfg.stages = {!no_mod2, !no_modp};
            if (!checkpoint_path.empty()) cfg.checkpoint = checkpoint_path;
            try {
                validate(cfg);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kInvalid;
            }
            const ClassifyResult result = classify_degree(cfg);
            std::ofstream file;
            if (!output_path.empty()) {
                file.open(output_path);
                if (!file) {
                    std::cerr << "error: cannot write " << output_path << '\n';
                    return kInvalid;
                }
            }
            std::ostream& out = output_path.empty() ? std::cout : file;
            for (const auto& r : result.records) write_record(out, r, format);
            std::cerr << to_json(result.stats).dump() << '\n';
            return kOk;
        }

        if (*verify) {
            std::vector<TriPoly> polys;
            for (const auto& doc : read_input(verify_input)) polys.push_back(poly_from_json(doc));
            bool all = true;
            for (const auto& p : polys) {
                const auto v = verify_constant_on_line(p);
                all = all && v.sharp;
                std::cout << report_json(v).dump() << '\n';
            }
            return all ? kOk : kFailed;
        }

        if (*diagram) {
            std::vector<TriPoly> polys;
            for (const auto& doc : read_input(diagram_input)) polys.push_back(poly_from_json(doc));
            for (const auto& p : polys) {
                const DiagramReport r = sinks_sources(p);
                std::cout << render(sign_grid(divide_by_line(p)));
                std::cout << json{{"sinks", r.sinks},
                                  {"sources", r.sources},
                                  {"connected", r.connected},
                                  {"top_row_alternating", r.top_row_alternating}}
                                 .dump()
                          << '\n';
            }
            return kOk;
        }

        if (*sequence) {
            if (max_degree < 1 || max_degree % 2 == 0) {
                std::cerr << "error: degree must be odd\n";
                return kInvalid;
            }
            if (max_degree > 13 && !sequence_force) {
                std::cerr << "error: degrees above 13 take hours or more; pass --force\n";
                return kInvalid;
            }
            std::map<int, std::vector<SharpRecord>> cache;
            DegreeClassifier run = [&](int d) {
                auto it = cache.find(d);
                if (it != cache.end()) return it->second;
                ClassifyConfig c;
                c.degree = d;
                c.threads = sequence_threads;
                return cache[d] = classify_degree(c).records;
            };
            const auto counts = sequence_terms(max_degree, run);
            const auto unique = uniqueness_degrees(max_degree, run);
            for (std::size_t i = 0; i < counts.size(); ++i) std::cout << (i ? " " : "") << counts[i];
            std::cout << '\n';
            for (std::size_t i = 0; i < unique.size(); ++i) std::cout << (i ? " " : "") << unique[i];
            std::cout << '\n';
            return kOk;
        }

        if (*oracle) {
            if (oracle_degree < 1 || oracle_degree % 2 == 0) {
                std::cerr << "error: degree must be odd\n";
                return kInvalid;
            }
            if (oracle_degree > 9 && !oracle_force) {
                std::cerr << "error: oracle refuses degree above 9 (cost guard); pass --force\n";
                return kInvalid;
            }
            for (const auto& r : oracle_classify(oracle_degree, oracle_force)) write_record(std::cout, r, oracle_format);
            return kOk;
        }
    } catch (const CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << '\n';
        return kCorrupt;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInvalid;
    } catch (const NotDivisible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
