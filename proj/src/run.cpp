#include "semicm/run.hpp"

#include "semicm/closure.hpp"
#include "semicm/decomposition.hpp"
#include "semicm/errors.hpp"

#include <algorithm>
#include <random>

namespace semicm {

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::Decompose: return "decompose";
        case Command::CmCheck: return "cm-check";
        case Command::CmClosure: return "cm-closure";
        case Command::Saturate: return "saturate";
        case Command::Verify: return "verify";
        case Command::ProbeMinimality: return "probe-minimality";
    }
    return "?";
}

void fill_core(Report& report, const AffineSemigroup& S, const Decomposition& dec) {
    report.basis_indices = S.basis;
    report.basis_vectors = S.basis_vectors();
    report.f = dec.f;
    for (const AperyClass& cls : dec.classes)
        for (const RatVec& v : cls.elements) report.apery_lambda.push_back(v);
    std::sort(report.apery_lambda.begin(), report.apery_lambda.end());
    for (const RatVec& v : report.apery_lambda)
        report.apery_ambient.push_back(lambda_to_ambient(S, v));

    for (size_t j = 0; j < dec.classes.size(); ++j) {
        const AperyClass& cls = dec.classes[j];
        Report::ClassEntry entry;
        entry.shift_lambda = cls.shift;
        entry.shift_ambient = dec.shifts_ambient[j];
        entry.elements_lambda = cls.elements;
        for (const RatVec& v : cls.elements)
            entry.elements_ambient.push_back(lambda_to_ambient(S, v));
        entry.ideal_min_gens = cls.ideal.min_gens;
        for (const IntVec& g : cls.ideal.min_gens)
            entry.ideal_min_gens_ambient.push_back(lambda_to_ambient(S, to_rational(g)));
        entry.ideal_unit = cls.ideal.is_unit();
        entry.height = ideal_height(cls.ideal);
        report.classes.push_back(std::move(entry));
    }

    CmReport cm = is_cohen_macaulay(S);
    report.cm.is_cm = cm.is_cm;
    report.cm.witness_class = cm.witness_class;
    if (cm.witness_elements) {
        report.cm.witness_lambda = {cm.witness_elements->first, cm.witness_elements->second};
        report.cm.witness_ambient = {lambda_to_ambient(S, cm.witness_elements->first),
                                     lambda_to_ambient(S, cm.witness_elements->second)};
    }
    report.cm.shifts_ambient = cm.shifts_ambient;
}

Report::ProbeSection run_probe(const AffineSemigroup& S, long samples, unsigned long seed,
                               long box_bound) {
    Report::ProbeSection probe;
    probe.samples = samples;
    probe.seed = seed;
    probe.box_bound = box_bound;

    auto dpoints = fundamental_domain_points(S.group);
    std::mt19937_64 rng(seed);
    for (long i = 0; i < samples; ++i) {
        std::vector<IntVec> extras;
        long count = 1 + long(rng() % 3);
        for (long p = 0; p < count; ++p) {
            RatVec v = dpoints[rng() % dpoints.size()];
            for (Rat& q : v) q += long(rng() % (box_bound + 1));
            extras.push_back(lambda_to_ambient(S, v));
        }
        MinimalityCheck check = check_minimality(S, extras);
        if (check.cm) {
            ++probe.cm_probes;
            if (check.contains_closure != true) ++probe.violations;
        }
    }
    return probe;
}

} // namespace

int exit_code_for(const Report& report) {
    if (report.verification) {
        if (report.verification->decomposition_ok == false) return 3;
        if (report.verification->saturation_ok == false) return 3;
    }
    if (report.probe && report.probe->violations > 0) return 3;
    return 0;
}

RunResult run(const SemigroupSpec& spec, const Options& options) {
    RunResult result;
    result.report.command = command_name(options.command);
    result.report.input = spec;

    auto basis = options.basis_override ? options.basis_override : spec.basis;
    AffineSemigroup S;
    try {
        S = build_semigroup(spec.generators, basis);
    } catch (const NotSimplicial&) {
        result.exit_code = 2;
        return result;
    } catch (const Error&) {
        result.exit_code = 1;
        return result;
    }

    Decomposition dec = decompose(S);
    fill_core(result.report, S, dec);

    const bool want_closure = options.command == Command::CmClosure ||
                              options.command == Command::Verify ||
                              options.command == Command::ProbeMinimality;
    const bool want_saturation =
        options.command == Command::Saturate || options.command == Command::Verify;

    std::optional<ClosureResult> closure;
    std::optional<SaturationResult> saturation;
    if (want_closure) {
        closure = cm_closure(S);
        result.report.closure =
            Report::ClosureSection{closure->closure.generators, closure->shifts_used};
    }
    if (want_saturation) {
        saturation = saturate(S);
        result.report.saturation =
            Report::SaturationSection{saturation->saturation.generators};
    }
    if (closure && saturation)
        result.report.chain =
            Report::ChainSection{is_subsemigroup(S, closure->closure),
                                 is_subsemigroup(closure->closure, saturation->saturation)};

    long bound = options.bound ? *options.bound : default_verification_bound(dec);
    if (options.command == Command::Verify ||
        (options.command == Command::Decompose && options.verify)) {
        Report::VerificationSection verification;
        verification.bound = bound;
        verification.decomposition_ok = verify_decomposition(S, dec, bound);
        if (options.command == Command::Verify)
            verification.saturation_ok = verify_saturation(S, *saturation, bound);
        result.report.verification = verification;
    }
    if (options.command == Command::ProbeMinimality)
        result.report.probe = run_probe(S, options.samples, options.seed,
                                        options.bound ? *options.bound : 3);

    result.exit_code = exit_code_for(result.report);
    return result;
}

std::pair<std::string, int> run_text(const std::string& input, const Options& options) {
    SemigroupSpec spec;
    try {
        spec = parse_spec(input);
    } catch (const Error& e) {
        return {std::string("error: ") + e.what() + "\n", 1};
    }
    RunResult result = run(spec, options);
    if (result.exit_code == 1) return {"error: invalid semigroup specification\n", 1};
    if (result.exit_code == 2) return {"error: the generators do not span a simplicial cone\n", 2};
    std::string output = options.format == OutputFormat::Machine
                             ? render_machine(result.report)
                             : render_text(result.report);
    return {output, result.exit_code};
}

} // namespace semicm
