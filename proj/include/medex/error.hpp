// Copyright 2026 The Medex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEDEX_ERROR_HPP
#define MEDEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace medex {

/// Error raised by pipeline operations. `code()` is a stable identifier
/// (e.g. "DuplicateId", "SchemaError") suitable for diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string path = {})
        : std::runtime_error(message), code_(std::move(code)), path_(std::move(path))
    {
    }

    const std::string& code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string code_;
    std::string path_;
};

struct Diagnostic {
    std::string code;
    std::string path;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

/// Result of a validation pass. An empty error list means the document is
/// valid; warnings never affect validity.
struct ValidationReport {
    std::vector<Diagnostic> errors;
    std::vector<Diagnostic> warnings;

    bool ok() const { return errors.empty(); }

    void error(std::string code, std::string path, std::string message)
    {
        errors.push_back({std::move(code), std::move(path), std::move(message)});
    }

    void warn(std::string code, std::string path, std::string message)
    {
        warnings.push_back({std::move(code), std::move(path), std::move(message)});
    }

    bool has_error(const std::string& code) const
    {
        for (const auto& d : errors) {
            if (d.code == code)
                return true;
        }
        return false;
    }

    void append(const ValidationReport& other)
    {
        errors.insert(errors.end(), other.errors.begin(), other.errors.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }
};

} // namespace medex

#endif // MEDEX_ERROR_HPP
