#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lclab/report.hpp"

namespace lclab {

/// An ideal as read from text: header `ring: char=<p|0> vars=<n>`, then one generator per line.
struct IdealText {
    std::uint64_t characteristic = 0;
    int nvars = 0;
    std::vector<std::string> generators;

    static IdealText parse(const std::string& text);
    static IdealText read_file(const std::string& path);
};

/// Named matrix blocks over a finite field: a bare block is `A`; `name:` lines open new blocks.
std::map<std::string, Matrix> parse_matrix_blocks(const std::string& text, const GaloisField& field);

struct JobSpec {
    std::string command;                  // frobenius, torsion, lcdim, ainv, hochster, ffmod, ...
    std::string mode;                     // ffmod operation or certificate name
    std::string family;                   // family spec text
    std::string ideal_file;
    std::optional<IdealText> ideal;       // filled from ideal_file by resolve()
    std::string complex;
    std::string field;
    std::string matrix_file;
    std::string matrix_text;              // filled from matrix_file by resolve()
    std::string method;
    bool cm = false;
    bool crosscheck = false;
    std::map<std::string, std::int64_t> params;
    std::string output;

    bool has(const std::string& key) const { return params.count(key) > 0; }
    std::int64_t get(const std::string& key) const;
    std::int64_t get(const std::string& key, std::int64_t fallback) const;

    /// Reads referenced files; throws InvalidInput on unreadable or malformed input.
    void resolve();
    /// Checks required parameters and ranges for the command.
    void validate() const;

    Json to_json() const;
    static JobSpec from_json(const Json& j);
};

struct JobResult {
    int exit_code = 0;      // 0 success, 2 verdict withheld
    Json report;
};

/// Resolves, validates and runs one job; InvalidInput escapes, VerdictWithheld becomes exit code 2.
JobResult run_job(JobSpec spec);

} // namespace lclab
