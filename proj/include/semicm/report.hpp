#pragma once

#include "semicm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semicm {

// Parsed input document: ambient dimension, generator list, optional basis
// selection (0-based indices into the generator list as the user wrote it;
// after duplicate removal they address the kept copies).
struct SemigroupSpec {
    int ambient_dim = 0;
    std::vector<IntVec> generators;
    std::optional<std::vector<int>> basis;
    std::vector<std::string> warnings;

    bool operator==(const SemigroupSpec&) const = default;
};

// Everything a pipeline run reports. Sections that a subcommand does not
// compute stay disengaged. Serializes losslessly in both directions.
struct Report {
    struct ClassEntry {
        RatVec shift_lambda;
        IntVec shift_ambient;
        std::vector<RatVec> elements_lambda;
        std::vector<IntVec> elements_ambient;
        std::vector<IntVec> ideal_min_gens;         // exponent vectors
        std::vector<IntVec> ideal_min_gens_ambient; // same, mapped through the basis
        bool ideal_unit = false;
        std::optional<int> height; // disengaged for the unit ideal

        bool operator==(const ClassEntry&) const = default;
    };
    struct CmSection {
        bool is_cm = false;
        std::optional<int> witness_class;
        std::vector<RatVec> witness_lambda;   // two elements when not CM
        std::vector<IntVec> witness_ambient;
        std::vector<IntVec> shifts_ambient;   // h_1..h_f when CM

        bool operator==(const CmSection&) const = default;
    };
    struct ClosureSection {
        std::vector<IntVec> generators;
        std::vector<IntVec> shifts;

        bool operator==(const ClosureSection&) const = default;
    };
    struct SaturationSection {
        std::vector<IntVec> generators;

        bool operator==(const SaturationSection&) const = default;
    };
    struct ChainSection {
        bool b_in_closure = false;
        bool closure_in_saturation = false;

        bool operator==(const ChainSection&) const = default;
    };
    struct VerificationSection {
        long bound = 0;
        std::optional<bool> decomposition_ok;
        std::optional<bool> saturation_ok;

        bool operator==(const VerificationSection&) const = default;
    };
    struct ProbeSection {
        long samples = 0;
        unsigned long seed = 0;
        long box_bound = 0;
        long cm_probes = 0;
        long violations = 0;

        bool operator==(const ProbeSection&) const = default;
    };

    std::string command;
    SemigroupSpec input;
    std::vector<int> basis_indices;
    std::vector<IntVec> basis_vectors;
    Int f = 0;
    std::vector<RatVec> apery_lambda;
    std::vector<IntVec> apery_ambient;
    std::vector<ClassEntry> classes;
    CmSection cm;
    std::optional<ClosureSection> closure;
    std::optional<SaturationSection> saturation;
    std::optional<ChainSection> chain;
    std::optional<VerificationSection> verification;
    std::optional<ProbeSection> probe;

    bool operator==(const Report&) const = default;
};

// Parses the JSON input document. Malformed documents raise ParseError;
// structurally valid documents with bad content (dimension mismatch, zero
// vector, bad basis index) raise ValidationError. Duplicate generators are
// dropped with a warning.
SemigroupSpec parse_spec(const std::string& text);

// Machine format: deterministic JSON, two-space indent, trailing newline.
std::string render_machine(const Report& report);

// Inverse of render_machine; throws ParseError on malformed documents.
Report report_from_machine(const std::string& text);

// Human-readable rendering of the same facts.
std::string render_text(const Report& report);

} // namespace semicm
