#pragma once

#include <json.hpp>

#include "homsys/filtration.hpp"

namespace homsys::io {

// Parse failure with a 1-based source line in the message.
struct parse_error : error {
    using error::error;
};

struct NamedFiltration {
    std::string name;
    std::string module_name;
    std::vector<Submodule> chain_tail;  // ascending, zero start implied
    std::vector<std::size_t> labels;

    bool operator==(const NamedFiltration&) const = default;
};

// Everything a description file carries. The family is indexed like
// omega.elements; named modules form a separate namespace that falls back to
// family element names on lookup.
struct InputFile {
    BoundQuiverAlgebra algebra;
    Preorder omega;
    std::vector<Representation> delta;
    std::vector<std::pair<std::string, Representation>> modules;
    std::vector<NamedFiltration> filtrations;
    std::string digest;  // fnv1a-64 of the raw bytes, 16 hex digits

    bool operator==(const InputFile&) const = default;
};

std::string fnv1a_hex(const std::string& bytes);

InputFile parse_string(const std::string& text, const std::string& what);
InputFile parse_file(const std::string& path);

// Canonical text form; parse_string(serialize(in)) reproduces `in` except
// for the digest, which is recomputed from the emitted bytes.
std::string serialize(const InputFile& in);

// Find a representation by name: named modules first, then family members.
const Representation& resolve_module(const InputFile& in, const std::string& name);

struct CommandResult {
    nlohmann::json report;
    int exit_code = 0;  // 0 ok, 1 negative verdict, 2 error, 3 unverified
};

// Dispatch one command ("check", "height", "hom", "ext", "verify",
// "normalize", "hfilt", "decompose") against a parsed file. Errors inside
// command execution are captured as exit code 2 reports, not exceptions.
CommandResult run_command(const InputFile& in, const std::string& command,
                          const std::vector<std::string>& args, std::uint64_t seed,
                          const SearchOptions& opts);

// Deterministic plain-text rendering of a report.
std::string render_human(const nlohmann::json& report);

}  // namespace homsys::io
