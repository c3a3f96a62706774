// biblioscope — command-line front end for the citation-index analytics
// pipeline: ingest field-tagged exports into a corpus store, run the
// report suite against it, verify store integrity.
//
// Exit codes: 0 success, 1 usage, 2 input/parse failure, 3 config failure.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "biblioscope/biblioscope.hpp"

namespace {

namespace bs = biblioscope;

struct CliOptions {
    std::string config_path;

    // ingest
    std::string origin;
    std::vector<std::string> inputs;
    std::string store;
    unsigned jobs = 1;

    // report
    std::string report_name;
    std::string store2;
    std::string out_dir;
    bool all_countries = false;
    bool multiplicity = false;
    std::string scaling;
    int svg_labels = -1;

    // shared config overrides
    std::string countries_path;
    std::string regions_path;
    std::string rules_path;
    std::string basemap_path;
};

bs::RunConfig effective_config(const CliOptions& opt) {
    bs::RunConfig config =
        opt.config_path.empty() ? bs::load_env_config() : bs::load_run_config(opt.config_path);
    if (!opt.countries_path.empty()) config.countries_map = opt.countries_path;
    if (!opt.regions_path.empty()) config.regions_map = opt.regions_path;
    if (!opt.rules_path.empty()) config.publisher_rules = opt.rules_path;
    if (!opt.basemap_path.empty()) config.basemap = opt.basemap_path;
    if (opt.multiplicity) config.pair_counting = bs::PairCounting::ADDRESS_MULTIPLICITY;
    if (!opt.scaling.empty())
        config.scaling = bs::to_lower_ascii(opt.scaling) == "radius" ? bs::Scaling::RADIUS
                                                                     : bs::Scaling::AREA;
    if (opt.svg_labels >= 0) config.svg_labels = opt.svg_labels;
    return config;
}

int do_ingest(const CliOptions& opt) {
    const auto origin = bs::parse_origin(opt.origin);
    if (!origin) throw bs::UsageError("--origin must be wos or scielo");
    const auto config = bs::load_config(effective_config(opt));
    std::vector<std::filesystem::path> inputs(opt.inputs.begin(), opt.inputs.end());
    const auto summary = bs::run_ingest(inputs, *origin, opt.store, config, opt.jobs);
    std::cout << "ingested " << summary.n_documents << " documents from " << summary.n_records
              << " records into " << opt.store << " (" << summary.n_warnings << " warnings, "
              << summary.n_errors << " errors)\n";
    return 0;
}

int do_report(const CliOptions& opt) {
    const auto kind = bs::parse_report_name(opt.report_name);
    if (!kind)
        throw bs::UsageError("unknown report '" + opt.report_name
                             + "' (expected stats, countries, publishers, pairs, graph, overlay, "
                               "categories or crossrank)");
    const auto config = bs::load_config(effective_config(opt));
    bs::ReportRequest request;
    request.kind = *kind;
    request.store = opt.store;
    if (!opt.store2.empty()) request.store2 = opt.store2;
    request.out_dir = opt.out_dir;
    request.lac_only = !opt.all_countries;
    const auto written = bs::run_report(request, config);
    for (const auto& path : written) std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int do_verify(const CliOptions& opt) {
    const auto violations = bs::verify_store(opt.store);
    if (violations.empty()) {
        const auto manifest = bs::load_manifest(opt.store);
        std::cout << "store OK: " << manifest.n_documents << " documents, "
                  << manifest.n_authorships << " authorships, " << manifest.n_affiliations
                  << " affiliations, " << manifest.n_diagnostics << " diagnostics\n";
        return 0;
    }
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CliOptions opt;

    CLI::App app{"Citation-index analytics: parse WoS/SciELO field-tagged exports, build a "
                 "corpus store and compute indicator reports."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for all subcommands");
    app.add_option("--config", opt.config_path,
                   "run-config file (key=value); defaults to $BIBLIOSCOPE_CONFIG");

    auto* ingest = app.add_subcommand("ingest", "parse export files into a corpus store");
    ingest->add_option("--origin", opt.origin, "export origin: wos or scielo")->required();
    ingest->add_option("--in", opt.inputs, "input export files")->required()->expected(-1);
    ingest->add_option("--store", opt.store, "store directory to (re)write")->required();
    ingest->add_option("--jobs", opt.jobs, "parse this many files concurrently")
        ->check(CLI::Range(1u, 256u));
    ingest->add_option("--countries", opt.countries_path, "countries.map override");
    ingest->add_option("--regions", opt.regions_path, "regions.map override");

    auto* report = app.add_subcommand(
        "report",
        "run a report against a store. Reports: stats, countries, publishers, pairs, graph, "
        "overlay, categories, crossrank. Outputs are TSV/Pajek/SVG; means and shares print "
        "with 2 decimals, fractional credit with 4.");
    report->add_option("name", opt.report_name, "report name")->required();
    report->add_option("--store", opt.store, "corpus store directory")->required();
    report->add_option("--store2", opt.store2, "second store (crossrank)");
    report->add_option("--out", opt.out_dir, "output directory")->required();
    report->add_flag("--all-countries", opt.all_countries,
                     "countries report: include every country, not only the LAC region");
    report->add_flag("--multiplicity", opt.multiplicity,
                     "pairs report: count one pair per address pair instead of per distinct "
                     "country pair");
    report->add_option("--scaling", opt.scaling, "overlay node scaling: area (default) or radius")
        ->check(CLI::IsMember({"area", "radius"}, CLI::ignore_case));
    report->add_option("--svg-labels", opt.svg_labels, "label the top-N overlay nodes (default 20)");
    report->add_option("--countries", opt.countries_path, "countries.map override");
    report->add_option("--regions", opt.regions_path, "regions.map override");
    report->add_option("--rules", opt.rules_path, "publisher_rules.map override");
    report->add_option("--basemap", opt.basemap_path, "basemap TSV (required for overlay)");

    auto* verify = app.add_subcommand("verify", "check store integrity against its manifest");
    verify->add_option("--store", opt.store, "corpus store directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ingest->parsed()) return do_ingest(opt);
        if (report->parsed()) return do_report(opt);
        if (verify->parsed()) return do_verify(opt);
        return 1;
    } catch (const bs::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const bs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const bs::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
