#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lclab/jobs.hpp"

using namespace lclab;

namespace {

void int_opt(CLI::App* app, JobSpec& spec, const std::string& flag, const std::string& key, const std::string& help)
{
    app->add_option_function<std::int64_t>(flag, [&spec, key](std::int64_t v) { spec.params[key] = v; }, help);
}

void ideal_opts(CLI::App* app, JobSpec& spec)
{
    auto* ideal = app->add_option("--ideal", spec.ideal_file, "ideal file ('ring: char=<p|0> vars=<n>' header)");
    auto* family = app->add_option("--family", spec.family, "family spec, e.g. \"generic m=2 n=3 t=2\"");
    ideal->excludes(family);
}

void stage_opts(CLI::App* app, JobSpec& spec)
{
    int_opt(app, spec, "--t-max", "t_max", "largest candidate stabilization stage (default 8)");
    int_opt(app, spec, "--window", "window", "consecutive isomorphisms required (default 2)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lclab: exact local cohomology and Frobenius computations"};
    app.require_subcommand(1);
    JobSpec spec;
    app.add_option("-o,--out", spec.output, "write the JSON report to this file");

    auto* frob = app.add_subcommand("frobenius", "Frobenius action on [H^j_m(R/I)]_0 over F_p");
    ideal_opts(frob, spec);
    int_opt(frob, spec, "--p", "p", "prime");
    int_opt(frob, spec, "--j", "j", "cohomological degree");
    stage_opts(frob, spec);

    auto* tors = app.add_subcommand("torsion", "p-torsion obstruction for an ideal over the integers");
    ideal_opts(tors, spec);
    int_opt(tors, spec, "--p", "p", "prime");
    int_opt(tors, spec, "--k", "k", "index k; the strand examined is j = n - k");
    stage_opts(tors, spec);

    auto* lcdim = app.add_subcommand("lcdim", "stabilized dimension of [H^j_m(R/I)]_s");
    ideal_opts(lcdim, spec);
    int_opt(lcdim, spec, "--j", "j", "cohomological degree");
    int_opt(lcdim, spec, "--s", "s", "internal degree");
    int_opt(lcdim, spec, "--p", "p", "reduce the ideal mod p first");
    stage_opts(lcdim, spec);

    auto* ainv = app.add_subcommand("ainv", "a-invariant of R/I");
    ideal_opts(ainv, spec);
    ainv->add_option("--method", spec.method, "strand (default) or hilbert")->check(CLI::IsMember({"strand", "hilbert"}));
    ainv->add_flag("--cm", spec.cm, "assert that R/I is Cohen-Macaulay");
    int_opt(ainv, spec, "--p", "p", "reduce the ideal mod p first");
    stage_opts(ainv, spec);

    auto* hoch = app.add_subcommand("hochster", "reduced cohomology of a complex via Hochster's formula");
    hoch->add_option("--sr", spec.complex, "complex, e.g. \"n=6; nonfaces=123,124\" or \"sr n=6 nonfaces=RP2\"");
    int_opt(hoch, spec, "--j", "j", "local cohomology degree");
    int_opt(hoch, spec, "--p", "p", "prime");
    hoch->add_flag("--crosscheck", spec.crosscheck, "also compute the Koszul strand");
    stage_opts(hoch, spec);

    auto* ff = app.add_subcommand("ffmod", "p-linear maps on F_q^r");
    ff->add_option("operation", spec.mode, "stable, nil, fixed or split")->required();
    ff->add_option("--matrix", spec.matrix_file, "matrix file (blocks M:, N:, proj: for split)")->required();
    ff->add_option("--field", spec.field, "GF(p), GF(p^k) or GF(p^k; modulus=...)")->required();
    int_opt(ff, spec, "--budget", "budget", "Artin-Schreier extension steps for split (default 3)");

    auto* ident = app.add_subcommand("identity2x3", "binomial identity for the 2 x 3 minors");
    int_opt(ident, spec, "--k", "k", "expand over Z at this k");
    int_opt(ident, spec, "--p", "p", "prime for the mod-p reduction");
    int_opt(ident, spec, "--e", "e", "exponent, k = p^e - 1");

    auto* cert = app.add_subcommand("cert", "radical certificates");
    cert->add_option("name", spec.mode, "barile or valla")->required();
    int_opt(cert, spec, "--bound", "bound", "degree bound D for membership solving");

    auto* pred = app.add_subcommand("predict", "closed-form invariants and vanishing prediction");
    pred->add_option("--family", spec.family, "generic, alternating or symmetric family spec")->required();
    int_opt(pred, spec, "--dim", "dim", "dimension of the ring A");
    int_opt(pred, spec, "--char", "char", "characteristic (symmetric family branches on it)");

    auto* loc = app.add_subcommand("localize", "certificates for the localization lemma");
    loc->add_option("--family", spec.family, "generic");
    for (const char* k : {"m", "n", "t", "N", "D"})
        int_opt(loc, spec, std::string("--") + k, k, "");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "lclab: " << e.what() << "\n";
        return 1;
    }
    spec.command = app.get_subcommands().front()->get_name();

    try {
        auto res = run_job(spec);
        auto text = render(res.report);
        if (spec.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(spec.output);
            if (!out) throw InvalidInput("cannot write '" + spec.output + "'");
            out << text;
        }
        if (res.exit_code == 2) std::cerr << "lclab: verdict withheld\n";
        return res.exit_code;
    } catch (const InvalidInput& e) {
        std::cerr << "lclab: invalid input: " << e.what() << "\n";
        return 1;
    } catch (const VerdictWithheld& e) {
        std::cerr << "lclab: verdict withheld: " << e.what() << "\n";
        return 2;
    }
}
