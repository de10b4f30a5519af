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

#include "medex/cli.hpp"

#include "medex/activation.hpp"
#include "medex/bundle.hpp"
#include "medex/intermediate.hpp"
#include "medex/png.hpp"
#include "medex/resolver.hpp"
#include "medex/smil_backend.hpp"
#include "medex/smil_importer.hpp"
#include "medex/source.hpp"
#include "medex/xhtml_backend.hpp"
#include "medex/xml.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace medex::cli {

namespace fs = std::filesystem;

namespace {

struct Loaded {
    intermediate::IntermediateDocument doc;
    ValidationReport report;
};

void print(std::ostream& err, std::string_view level, const Diagnostic& d)
{
    err << level << ' ' << d.code << ' ' << (d.path.empty() ? "-" : d.path) << ' ' << d.message << '\n';
}

void print(std::ostream& err, const ValidationReport& report)
{
    for (const auto& d : report.errors)
        print(err, "ERROR", d);
    for (const auto& d : report.warnings)
        print(err, "WARNING", d);
}

int exit_code_for(const std::string& code)
{
    if (code == "IoError" || code == "MissingAsset")
        return kExitIo;
    if (code == "UsageError")
        return kExitUsage;
    return kExitInvalid;
}

std::string read_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("IoError", "cannot read '" + path + "'", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << bytes;
        return;
    }
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".medex-tmp-" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        f.close();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("IoError", "cannot write '" + path + "'", path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("IoError", "cannot write '" + path + "'", path);
    }
}

/// Accepts either a source document or an intermediate document. Errors
/// are collected in the report rather than thrown.
Loaded load(const std::string& path)
{
    std::string bytes = read_input(path);
    auto root = xml::parse(bytes);
    Loaded loaded;
    if (root.name == "document" && root.ns == intermediate::kNamespace) {
        auto result = intermediate::read_intermediate(bytes);
        loaded.doc = std::move(result.doc);
        loaded.report = std::move(result.report);
        loaded.report.append(intermediate::validate_intermediate(loaded.doc));
        return loaded;
    }
    auto src = source::parse_source(bytes);
    loaded.report = source::validate_source(src);
    if (loaded.report.ok())
        loaded.doc = compile(src);
    return loaded;
}

std::size_t count_regions(const std::vector<intermediate::RegionNode>& regions)
{
    std::size_t n = 0;
    for (const auto& r : regions)
        n += 1 + count_regions(r.children);
    return n;
}

void walk_time(const intermediate::TimeNode& node, std::size_t& nodes, std::size_t& leaves,
               std::vector<std::string>& unresolved)
{
    ++nodes;
    if (node.kind == intermediate::TimeNode::Kind::leaf)
        ++leaves;
    if (node.begin.kind == Begin::Kind::unresolved || node.dur.kind == Duration::Kind::unresolved
        || node.dur.kind == Duration::Kind::media)
        unresolved.push_back(node.timeId);
    for (const auto& c : node.children)
        walk_time(c, nodes, leaves, unresolved);
}

void inspect(const intermediate::IntermediateDocument& doc, std::ostream& out)
{
    std::size_t nodes = 0;
    std::size_t leaves = 0;
    std::vector<std::string> unresolved;
    walk_time(doc.timing, nodes, leaves, unresolved);
    const auto* title = doc.head.find("title");
    out << "title=" << (title != nullptr ? *title : "") << '\n';
    out << "canvas=" << doc.canvasWidth << 'x' << doc.canvasHeight << '\n';
    out << "meta=" << doc.head.meta.size() << '\n';
    out << "regions=" << count_regions(doc.layout) << '\n';
    out << "timeNodes=" << nodes << '\n';
    out << "leaves=" << leaves << '\n';
    out << "references=" << doc.references.size() << '\n';
    out << "assets=" << doc.media.size() << '\n';
    out << "unresolved=" << unresolved.size() << '\n';
    std::string joined;
    for (const auto& id : unresolved)
        joined += (joined.empty() ? "" : ",") + id;
    out << "unresolvedIds=" << joined << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"medex: compile and export structured multimedia documents", "medex"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string outDir;
    std::string target;
    bool noCopy = false;

    auto* compileCmd = app.add_subcommand("compile", "Compile a source document to the intermediate format");
    compileCmd->add_option("input", input, "Source document")->required();
    compileCmd->add_option("-o,--output", output, "Output file (default: stdout)");

    auto* exportCmd = app.add_subcommand("export", "Export a SMIL or XHTML bundle");
    exportCmd->add_option("input", input, "Source or intermediate document")->required();
    exportCmd->add_option("--to", target, "Target format")->required()->check(CLI::IsMember({"smil", "xhtml"}));
    exportCmd->add_option("--out", outDir, "Output directory")->required();
    exportCmd->add_flag("--no-copy-assets", noCopy, "Reference media in place instead of copying");

    auto* importCmd = app.add_subcommand("import-smil", "Import a SMIL document into the intermediate format");
    importCmd->add_option("input", input, "SMIL document")->required();
    importCmd->add_option("-o,--output", output, "Output file (default: stdout)");

    auto* validateCmd = app.add_subcommand("validate", "Validate a source or intermediate document");
    validateCmd->add_option("input", input, "Document")->required();

    auto* inspectCmd = app.add_subcommand("inspect", "Summarize a source or intermediate document");
    inspectCmd->add_option("input", input, "Document")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e) {
        err << "ERROR UsageError - " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (importCmd->parsed()) {
            auto result = import_smil(read_input(input));
            print(err, result.report);
            write_output(output, intermediate::serialize_intermediate(result.doc), out);
            return kExitOk;
        }

        Loaded loaded = load(input);
        print(err, loaded.report);
        if (!loaded.report.ok())
            return kExitInvalid;

        if (compileCmd->parsed()) {
            write_output(output, intermediate::serialize_intermediate(loaded.doc), out);
        }
        else if (exportCmd->parsed()) {
            ExportOptions options;
            options.bundleMedia = !noCopy;
            BundleOutput bundle;
            if (target == "smil")
                bundle = smil_bundle_output(emit_smil(loaded.doc, DefaultRasterizer{}, options));
            else
                bundle = xhtml_bundle_output(emit_xhtml(loaded.doc, options), scheduler_script());
            write_bundle(outDir, bundle, media_base(loaded.doc, input));
        }
        else if (inspectCmd->parsed()) {
            inspect(loaded.doc, out);
        }
        return kExitOk;
    }
    catch (const Error& e) {
        print(err, "ERROR", Diagnostic{e.code(), e.path(), e.what()});
        return exit_code_for(e.code());
    }
    catch (const std::exception& e) {
        print(err, "ERROR", Diagnostic{"IoError", "", e.what()});
        return kExitIo;
    }
}

} // namespace medex::cli
