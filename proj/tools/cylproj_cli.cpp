// Command-line front end. Links the C API only.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "cylproj/cylproj.h"

namespace {

struct Options {
    std::string model_path;
    std::string name;
    std::string dim;
    std::string format = "table";
    unsigned long max_n = 8;
    unsigned long bound = 5;
    bool strong = false;
    bool dual = false;
    bool lemma1 = false;
    bool thm4 = false;
    bool strict = false;
};

cylproj_format parse_format(const std::string& f) {
    if (f == "csv") return CYLPROJ_FORMAT_CSV;
    if (f == "json") return CYLPROJ_FORMAT_JSON;
    return CYLPROJ_FORMAT_TABLE;
}

void add_common(CLI::App* cmd, Options& opt, bool with_dim) {
    cmd->add_option("name", opt.name, "named set, dset or profile from the model")->required();
    cmd->add_option("-m,--model", opt.model_path, "model file")->required();
    cmd->add_option("--format", opt.format, "output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_flag("--strict", opt.strict, "exit 1 when a verdict fails");
    if (with_dim) cmd->add_option("--dim", opt.dim, "projection dimension name");
}

int finish(cylproj_status st, char* out, int verdict, bool strict) {
    if (st != CYLPROJ_OK) {
        std::fprintf(stderr, "error: %s\n", cylproj_last_error());
        return 2;
    }
    std::fputs(out, stdout);
    cylproj_string_free(out);
    if (strict && verdict == CYLPROJ_VERDICT_FAILS) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact measures and projections of finite-dimensional sets in infinite product spaces"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* measure = app.add_subcommand("measure", "exact measure of a named set");
    add_common(measure, opt, false);

    CLI::App* project = app.add_subcommand("project", "ordinary, dual or strong projection");
    add_common(project, opt, true);
    project->add_flag("--strong", opt.strong, "strong projection (positive-fiber cells)");
    project->add_flag("--dual", opt.dual, "dual (universal) variant");

    CLI::App* converge = app.add_subcommand(
        "converge", "union/intersection stage table with limits and continuity verdict");
    add_common(converge, opt, true);
    converge->add_option("--max-n", opt.max_n, "last stage to tabulate");

    CLI::App* check = app.add_subcommand("check-continuity",
                                         "does the ordinary projection measure equal the "
                                         "union-stage limit?");
    add_common(check, opt, true);

    CLI::App* audit = app.add_subcommand("audit", "run a lemma/theorem audit on a named set");
    add_common(audit, opt, true);
    audit->add_flag("--lemma1", opt.lemma1, "dual-equation equivalence audit");
    audit->add_flag("--thm4", opt.thm4, "majorant-cylinder sufficient-condition audit");

    CLI::App* odiff = app.add_subcommand(
        "oracle-diff", "closed-form stage measures vs. materialized stage measures");
    add_common(odiff, opt, true);
    odiff->add_option("--max-n", opt.max_n, "last stage to compare");
    odiff->add_option("--bound", opt.bound, "materialization stage cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cylproj_model* model = nullptr;
    if (cylproj_model_parse_file(opt.model_path.c_str(), &model) != CYLPROJ_OK) {
        std::fprintf(stderr, "error: %s\n", cylproj_last_error());
        return 2;
    }

    cylproj_format fmt = parse_format(opt.format);
    const char* dim = opt.dim.empty() ? nullptr : opt.dim.c_str();
    char* out = nullptr;
    int verdict = CYLPROJ_VERDICT_NOT_APPLICABLE;
    cylproj_status st = CYLPROJ_INTERNAL_ERROR;

    if (measure->parsed()) {
        st = cylproj_measure(model, opt.name.c_str(), fmt, &out);
    } else if (project->parsed()) {
        st = cylproj_project(model, opt.name.c_str(), dim, opt.strong ? 1 : 0, opt.dual ? 1 : 0,
                             fmt, &out);
    } else if (converge->parsed()) {
        st = cylproj_converge(model, opt.name.c_str(), dim, opt.max_n, fmt, &out, &verdict);
    } else if (check->parsed()) {
        st = cylproj_check_continuity(model, opt.name.c_str(), dim, fmt, &out, &verdict);
    } else if (audit->parsed()) {
        if (opt.lemma1 == opt.thm4) {
            std::fprintf(stderr, "error: pick exactly one of --lemma1, --thm4\n");
            cylproj_model_free(model);
            return 2;
        }
        st = cylproj_audit(model, opt.name.c_str(), opt.lemma1 ? "lemma1" : "thm4", dim, fmt,
                           &out, &verdict);
    } else if (odiff->parsed()) {
        st = cylproj_oracle_diff(model, opt.name.c_str(), dim, opt.max_n, opt.bound, fmt, &out,
                                 &verdict);
    }

    int code = finish(st, out, verdict, opt.strict);
    cylproj_model_free(model);
    return code;
}
