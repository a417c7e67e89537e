// Command-line front end; all of the mathematics sits behind the C API.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "confalg_c.h"

int main(int argc, char** argv) {
    CLI::App app{"exact checks and constructions for conformal algebras and "
                 "their homotopy analogues"};
    app.require_subcommand(1);

    struct Parsed {
        std::string manifest;
        std::string name;
        int up_to = 0;
        int arity = 0;
        int dmax = -1;
        int lmax = -1;
        bool binary = false;
        bool general = false;
        std::string out;
        unsigned seed = 0;
        bool has_seed = false;
    } p;

    std::string chosen;
    for (const char* const* c = confalg_commands(); *c; ++c) {
        CLI::App* sub = app.add_subcommand(*c);
        sub->add_option("manifest", p.manifest, "manifest file (JSON)")
            ->required();
        sub->add_option("--name", p.name, "structure to operate on");
        sub->add_option("--up-to", p.up_to,
                        "check the identities up to this arity");
        sub->add_option("--arity", p.arity, "cochain arity");
        sub->add_option("--dmax", p.dmax, "D-degree truncation");
        sub->add_option("--lmax", p.lmax, "lambda-degree truncation");
        auto* b = sub->add_flag("--binary", p.binary, "binary trees only");
        sub->add_flag("--general", p.general, "all planar trees")
            ->excludes(b);
        sub->add_option("--out", p.out, "write the resulting manifest here");
        sub->add_option("--seed", p.seed, "seed for random cochains")
            ->each([&](const std::string&) { p.has_seed = true; });
        sub->callback([&, name = std::string(*c)] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : CONFALG_INPUT_ERROR;
    }

    char* error = nullptr;
    confalg_manifest* m = confalg_manifest_open(p.manifest.c_str(), &error);
    if (!m) {
        std::fprintf(stderr, "error: %s\n", error ? error : "unknown");
        confalg_string_free(error);
        return CONFALG_INPUT_ERROR;
    }

    confalg_options opts{};
    opts.structure = p.name.empty() ? nullptr : p.name.c_str();
    opts.up_to = p.up_to;
    opts.arity = p.arity;
    opts.dmax = p.dmax;
    opts.lmax = p.lmax;
    opts.tree_mode = p.binary ? 1 : p.general ? 2 : 0;
    opts.out_path = p.out.empty() ? nullptr : p.out.c_str();
    opts.seed = p.seed;
    opts.has_seed = p.has_seed ? 1 : 0;

    char* report = nullptr;
    int code = confalg_run(m, chosen.c_str(), &opts, &report);
    if (report && *report) std::fputs(report, code == 0 ? stdout : stderr);
    confalg_string_free(report);
    confalg_manifest_free(m);
    return code;
}
