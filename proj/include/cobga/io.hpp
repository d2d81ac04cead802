#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "cobga/ga.hpp"
#include "cobga/gf2.hpp"
#include "cobga/problems.hpp"
#include "cobga/word.hpp"

namespace cobga {

// Malformed or unreadable data files; maps to exit code 3 in the CLI.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters or command usage; maps to exit code 2 in the CLI.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a fingerprint of a byte string, as 16 lowercase hex digits.
std::string content_digest(const std::string& bytes);

// Matrix files: {"n": int, "rows": ["010...", ...]}, row-major, one '0'/'1'
// string of length n per row.
json matrix_to_json(const BitMatrix& m);
BitMatrix matrix_from_json(const json& j);

// Word text format: header line "n=<dim>", then whitespace-separated tokens
// "S:i:j" / "A:i:j" with 1-based indices.
std::string op_token(const ElementaryOp& op);          // 1-based token
ElementaryOp op_from_token(const std::string& token, int n);
std::string word_tokens(const BasisWord& w);           // tokens only
BasisWord word_from_tokens(int n, const std::string& tokens);
std::string word_to_text(const BasisWord& w);          // header + tokens
BasisWord word_from_text(const std::string& text);

// Instance files. Variant-onemax: {"kind", "n", "word", "rows"}; NK:
// {"kind", "N", "K", "neighbors", "tables"}. The "kind" field dispatches.
struct InstanceFile {
    std::variant<VariantOnemaxInstance, NkInstance> payload;

    int length() const;
    std::string kind() const;  // "variant-onemax" or "nk"
    std::unique_ptr<FitnessProblem> make_problem() const;

    json to_json() const;
    static InstanceFile from_json(const json& j);
};

InstanceFile load_instance(const std::string& path);

json run_record_to_json(const RunRecord& rec, bool include_trace = true);

}  // namespace cobga
