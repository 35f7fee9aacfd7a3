#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/error.hpp"
#include "strata/formats.hpp"
#include "strata/growth.hpp"
#include "strata/morphometrics.hpp"
#include "strata/rule.hpp"
#include "strata/scan.hpp"
#include "strata/version.hpp"

namespace {

using strata::Layer;
using strata::PlanDocument;
using strata::Tower;

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 6);
    if (ec != std::errc{}) throw strata::Error("number formatting failed");
    return std::string(buf, ptr);
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw strata::ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_bytes(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw strata::Error("cannot write '" + path + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw strata::Error("write to '" + path + "' failed");
    }
}

std::string fnv1a64_digest(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[hash & 0xF];
        hash >>= 4;
    }
    return "fnv1a64:" + std::string(buf, 16);
}

// Reproducibility sidecar: which command ran, on which input bytes, with
// which effective parameter values.
struct ManifestBuilder {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // path, digest
    std::map<std::string, std::string> parameters;

    void add_input(const std::string& path, std::string_view bytes) {
        inputs.emplace_back(path, fnv1a64_digest(bytes));
    }

    void write(const std::string& path) const {
        nlohmann::json doc;
        doc["command"] = command;
        doc["tool_version"] = strata::kVersion;
        doc["inputs"] = nlohmann::json::array();
        for (const auto& [input_path, digest] : inputs) {
            doc["inputs"].push_back({{"path", input_path}, {"digest", digest}});
        }
        doc["parameters"] = parameters;
        write_file_bytes(path, doc.dump(2) + "\n");
    }
};

// Writes the manifest next to the primary output, or wherever --manifest
// points; stdout-only runs get one only on request.
void emit_manifest(const ManifestBuilder& manifest, const std::string& explicit_path,
                   const std::string& primary_output) {
    if (!explicit_path.empty()) {
        manifest.write(explicit_path);
    } else if (!primary_output.empty()) {
        manifest.write(primary_output + ".manifest.json");
    }
}

bool has_extension(const std::string& path, const char* ext) {
    return std::filesystem::path(path).extension() == ext;
}

PlanDocument load_plan(const std::string& path, const std::string& bytes) {
    const std::string name = std::filesystem::path(path).filename().string();
    if (has_extension(path, ".pbm")) {
        return strata::parse_pbm(bytes, name);
    }
    return strata::parse_plan_text(bytes, name);
}

struct GrowOptions {
    std::string plan_path;
    int rule_code = 0;
    int max_layers = 64;
    std::string clip = "bbox";
    std::string out_path;
    std::string obj_path;
    std::string manifest_path;
};

int run_grow(const GrowOptions& opt) {
    const std::string plan_bytes = read_file_bytes(opt.plan_path);
    const PlanDocument plan = load_plan(opt.plan_path, plan_bytes);

    strata::GrowthConfig config;
    config.max_layers = opt.max_layers;
    config.clip_mode = opt.clip == "mask" ? strata::ClipMode::kFootprintMask
                                          : strata::ClipMode::kBoundingBox;
    const Tower tower = strata::grow_tower(plan.layer, strata::TotalisticRule::from_code(opt.rule_code),
                                           config);

    std::string out_path = opt.out_path;
    if (out_path.empty()) {
        out_path = std::filesystem::path(opt.plan_path).stem().string() + "_rule" +
                   std::to_string(opt.rule_code) + ".slices";
    }
    write_file_bytes(out_path, strata::export_slices(tower));
    if (!opt.obj_path.empty()) {
        write_file_bytes(opt.obj_path, strata::export_obj(tower));
    }

    ManifestBuilder manifest;
    manifest.command = "grow";
    manifest.add_input(opt.plan_path, plan_bytes);
    manifest.parameters = {{"rule", std::to_string(opt.rule_code)},
                           {"max_layers", std::to_string(opt.max_layers)},
                           {"clip", opt.clip},
                           {"out", out_path}};
    if (!opt.obj_path.empty()) manifest.parameters["obj"] = opt.obj_path;
    emit_manifest(manifest, opt.manifest_path, out_path);

    std::cout << "height=" << tower.height() << " termination=" << strata::to_string(tower.termination)
              << " population=" << tower.population() << "\n";
    return kExitSuccess;
}

struct ScanOptions {
    std::string plan_path;
    std::string target_path;
    std::string metric = "iou";
    int top = 10;
    int threads = 1;
    std::string out_path;
    std::string manifest_path;
};

int run_scan(const ScanOptions& opt) {
    const std::string plan_bytes = read_file_bytes(opt.plan_path);
    const PlanDocument plan = load_plan(opt.plan_path, plan_bytes);
    const std::string target_bytes = read_file_bytes(opt.target_path);
    const Tower target = strata::parse_slices(target_bytes);

    const strata::ScanMetric metric = opt.metric == "profile" ? strata::ScanMetric::kProfile
                                                              : strata::ScanMetric::kIoU;
    const std::vector<strata::ScanResult> results =
        strata::scan_rules(plan.layer, target, metric, strata::GrowthConfig{}, opt.top, opt.threads);

    std::string csv = "rank,rule_code,score,height,termination\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const strata::ScanResult& row = results[i];
        csv += std::to_string(i + 1) + "," + std::to_string(row.rule_code) + "," +
               format_real(row.score) + "," + std::to_string(row.height) + "," +
               strata::to_string(row.termination) + "\n";
    }

    if (!opt.out_path.empty()) {
        write_file_bytes(opt.out_path, csv);
    } else {
        std::cout << csv;
    }

    ManifestBuilder manifest;
    manifest.command = "scan";
    manifest.add_input(opt.plan_path, plan_bytes);
    manifest.add_input(opt.target_path, target_bytes);
    manifest.parameters = {{"metric", opt.metric},
                           {"top", std::to_string(opt.top)},
                           {"threads", std::to_string(opt.threads)}};
    if (!opt.out_path.empty()) manifest.parameters["out"] = opt.out_path;
    emit_manifest(manifest, opt.manifest_path, opt.out_path);
    return kExitSuccess;
}

struct AnalyzeOptions {
    std::string tower_path;
    std::string profile_kind;
    bool ratio = false;
    double tolerance = 0.0;
    bool boxdim = false;
    int max_exp = 5;
    std::string manifest_path;
};

int run_analyze(const AnalyzeOptions& opt) {
    const std::string tower_bytes = read_file_bytes(opt.tower_path);
    const Tower tower = strata::parse_slices(tower_bytes);

    std::string report;
    if (!opt.profile_kind.empty()) {
        const strata::ProfileKind kind = opt.profile_kind == "population"
                                             ? strata::ProfileKind::kPopulation
                                             : strata::ProfileKind::kExtent;
        const strata::Profile profile = strata::elevation_profile(tower, kind);
        report += "layer,value\n";
        for (std::size_t k = 0; k < profile.values.size(); ++k) {
            report += std::to_string(k) + "," + std::to_string(profile.values[k]) + "\n";
        }
    }
    if (opt.ratio) {
        const strata::Profile extent = strata::elevation_profile(tower, strata::ProfileKind::kExtent);
        const std::vector<strata::Segment> segments = strata::segment_profile(extent, 1);
        std::vector<int> lengths;
        for (const strata::Segment& segment : segments) lengths.push_back(segment.length);
        const auto signature = strata::ratio_signature(lengths, opt.tolerance);
        if (signature) {
            report += "ratio,";
            for (std::size_t i = 0; i < signature->terms.size(); ++i) {
                if (i > 0) report += ":";
                report += std::to_string(signature->terms[i]);
            }
            report += "\n";
        } else {
            report += "ratio,NO_RATIO\n";
        }
    }
    if (opt.boxdim) {
        const strata::DimensionEstimate estimate = strata::box_counting_dimension(tower, opt.max_exp);
        report += "boxdim," + format_real(estimate.slope) + "," + format_real(estimate.r_squared) +
                  "\n";
    }
    std::cout << report;

    ManifestBuilder manifest;
    manifest.command = "analyze";
    manifest.add_input(opt.tower_path, tower_bytes);
    if (!opt.profile_kind.empty()) manifest.parameters["profile"] = opt.profile_kind;
    if (opt.ratio) {
        manifest.parameters["ratio"] = "true";
        manifest.parameters["tolerance"] = format_real(opt.tolerance);
    }
    if (opt.boxdim) {
        manifest.parameters["boxdim"] = "true";
        manifest.parameters["max_exp"] = std::to_string(opt.max_exp);
    }
    emit_manifest(manifest, opt.manifest_path, "");
    return kExitSuccess;
}

struct ClassifyOptions {
    std::string plan_path;
    int rule_code = -1;
    bool all = false;
    int horizon = 256;
    std::string manifest_path;
};

int run_classify(const ClassifyOptions& opt) {
    const std::string plan_bytes = read_file_bytes(opt.plan_path);
    const PlanDocument plan = load_plan(opt.plan_path, plan_bytes);

    std::string report;
    const int first = opt.all ? 0 : opt.rule_code;
    const int last = opt.all ? strata::kRuleSpaceSize - 1 : opt.rule_code;
    for (int code = first; code <= last; ++code) {
        const strata::ClassReport result =
            strata::classify_rule(plan.layer, strata::TotalisticRule::from_code(code), opt.horizon);
        report += std::to_string(code) + "," + strata::to_string(result.behavior) + ",";
        if (result.behavior == strata::BehaviorClass::kUnresolvedWithinHorizon) {
            report += "-,-\n";
        } else {
            report += std::to_string(result.transient_length) + "," +
                      std::to_string(result.period.value_or(1)) + "\n";
        }
    }
    std::cout << report;

    ManifestBuilder manifest;
    manifest.command = "classify";
    manifest.add_input(opt.plan_path, plan_bytes);
    manifest.parameters["horizon"] = std::to_string(opt.horizon);
    if (opt.all) {
        manifest.parameters["all"] = "true";
    } else {
        manifest.parameters["rule"] = std::to_string(opt.rule_code);
    }
    emit_manifest(manifest, opt.manifest_path, "");
    return kExitSuccess;
}

struct ConvertOptions {
    std::string in_path;
    std::string out_path;
    std::string from_format;
    std::string to_format;
    std::string manifest_path;
};

std::string guess_format(const std::string& path) {
    if (has_extension(path, ".pbm")) return "pbm";
    if (has_extension(path, ".txt") || has_extension(path, ".plan")) return "plan";
    return "";
}

int run_convert(const ConvertOptions& opt) {
    const std::string from = opt.from_format.empty() ? guess_format(opt.in_path) : opt.from_format;
    const std::string to = opt.to_format.empty() ? guess_format(opt.out_path) : opt.to_format;
    if (from.empty() || to.empty()) {
        std::cerr << "strata: cannot infer format from extension; use --from/--to\n";
        return kExitUsage;
    }

    const std::string in_bytes = read_file_bytes(opt.in_path);
    const std::string name = std::filesystem::path(opt.in_path).filename().string();
    const PlanDocument plan = from == "pbm" ? strata::parse_pbm(in_bytes, name)
                                            : strata::parse_plan_text(in_bytes, name);
    const std::string out_bytes =
        to == "pbm" ? strata::render_pbm(plan.layer) : strata::render_plan_text(plan.layer);
    write_file_bytes(opt.out_path, out_bytes);

    ManifestBuilder manifest;
    manifest.command = "convert";
    manifest.add_input(opt.in_path, in_bytes);
    manifest.parameters = {{"from", from}, {"to", to}, {"out", opt.out_path}};
    emit_manifest(manifest, opt.manifest_path, opt.out_path);
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voxel towers from 2D plans via totalistic cellular automata"};
    app.require_subcommand(1);
    app.set_version_flag("--version", strata::kVersion);

    GrowOptions grow;
    CLI::App* grow_cmd = app.add_subcommand("grow", "Grow a tower from a ground plan");
    grow_cmd->add_option("--plan", grow.plan_path, "ground plan file")->required();
    grow_cmd->add_option("--rule", grow.rule_code, "rule code")
        ->required()
        ->check(CLI::Range(0, strata::kRuleSpaceSize - 1));
    grow_cmd->add_option("--max-layers", grow.max_layers, "layer cap")->check(CLI::Range(1, 100000));
    grow_cmd->add_option("--clip", grow.clip, "clip mode")->check(CLI::IsMember({"bbox", "mask"}));
    grow_cmd->add_option("--out", grow.out_path, "slice output path");
    grow_cmd->add_option("--obj", grow.obj_path, "mesh output path");
    grow_cmd->add_option("--manifest", grow.manifest_path, "manifest output path");

    ScanOptions scan;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Rank all rules against a target tower");
    scan_cmd->add_option("--plan", scan.plan_path, "ground plan file")->required();
    scan_cmd->add_option("--target", scan.target_path, "target slice file")->required();
    scan_cmd->add_option("--metric", scan.metric, "similarity metric")
        ->required()
        ->check(CLI::IsMember({"iou", "profile"}));
    scan_cmd->add_option("--top", scan.top, "rows to report")
        ->check(CLI::Range(1, strata::kRuleSpaceSize));
    scan_cmd->add_option("--threads", scan.threads, "worker threads")->check(CLI::Range(1, 512));
    scan_cmd->add_option("--out", scan.out_path, "CSV output path");
    scan_cmd->add_option("--manifest", scan.manifest_path, "manifest output path");

    AnalyzeOptions analyze;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Report tower measurements");
    analyze_cmd->add_option("--tower", analyze.tower_path, "slice file")->required();
    analyze_cmd->add_option("--profile", analyze.profile_kind, "elevation profile kind")
        ->check(CLI::IsMember({"extent", "population"}));
    analyze_cmd->add_flag("--ratio", analyze.ratio, "report plateau ratio signature");
    analyze_cmd->add_option("--tolerance", analyze.tolerance, "ratio tolerance")
        ->check(CLI::Validator(
            [](std::string& value) {
                try {
                    const double v = std::stod(value);
                    if (v >= 0.0 && v < 0.5) return std::string{};
                } catch (const std::exception&) {
                }
                return std::string("tolerance must be in [0, 0.5)");
            },
            "FLOAT in [0, 0.5)"));
    analyze_cmd->add_flag("--boxdim", analyze.boxdim, "report box-counting dimension");
    analyze_cmd->add_option("--max-exp", analyze.max_exp, "largest box size exponent")
        ->check(CLI::Range(2, 20));
    analyze_cmd->add_option("--manifest", analyze.manifest_path, "manifest output path");

    ClassifyOptions classify;
    CLI::App* classify_cmd = app.add_subcommand("classify", "Report rule behavior classes");
    classify_cmd->add_option("--plan", classify.plan_path, "ground plan file")->required();
    CLI::Option* classify_rule_opt =
        classify_cmd->add_option("--rule", classify.rule_code, "rule code")
            ->check(CLI::Range(0, strata::kRuleSpaceSize - 1));
    CLI::Option* classify_all_opt =
        classify_cmd->add_flag("--all", classify.all, "classify every rule");
    classify_rule_opt->excludes(classify_all_opt);
    classify_cmd->add_option("--horizon", classify.horizon, "iteration horizon")
        ->check(CLI::Range(1, 100000));
    classify_cmd->add_option("--manifest", classify.manifest_path, "manifest output path");

    ConvertOptions convert;
    CLI::App* convert_cmd = app.add_subcommand("convert", "Convert between plan formats");
    convert_cmd->add_option("--in", convert.in_path, "input plan file")->required();
    convert_cmd->add_option("--out", convert.out_path, "output plan file")->required();
    convert_cmd->add_option("--from", convert.from_format, "input format override")
        ->check(CLI::IsMember({"pbm", "plan"}));
    convert_cmd->add_option("--to", convert.to_format, "output format override")
        ->check(CLI::IsMember({"pbm", "plan"}));
    convert_cmd->add_option("--manifest", convert.manifest_path, "manifest output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (grow_cmd->parsed()) return run_grow(grow);
        if (scan_cmd->parsed()) return run_scan(scan);
        if (analyze_cmd->parsed()) {
            if (analyze.profile_kind.empty() && !analyze.ratio && !analyze.boxdim) {
                std::cerr << "strata: analyze needs at least one of --profile, --ratio, --boxdim\n";
                return kExitUsage;
            }
            return run_analyze(analyze);
        }
        if (classify_cmd->parsed()) {
            if (!classify.all && classify_rule_opt->count() == 0) {
                std::cerr << "strata: classify needs --rule <code> or --all\n";
                return kExitUsage;
            }
            return run_classify(classify);
        }
        if (convert_cmd->parsed()) return run_convert(convert);
        std::cerr << "strata: no subcommand\n";
        return kExitUsage;
    } catch (const strata::ParseError& e) {
        std::cerr << "strata: " << e.what() << "\n";
        return kExitInput;
    } catch (const strata::ValidationError& e) {
        std::cerr << "strata: " << e.what() << "\n";
        return kExitInput;
    } catch (const strata::DomainError& e) {
        std::cerr << "strata: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "strata: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
