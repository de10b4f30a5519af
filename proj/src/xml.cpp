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

#include "medex/xml.hpp"

#include "medex/error.hpp"

#include <expat.h>

#include <algorithm>
#include <memory>

namespace medex::xml {

namespace {

constexpr char kSeparator = ' ';

void split_name(const char* raw, std::string& ns, std::string& local)
{
    std::string_view name(raw);
    auto pos = name.find(kSeparator);
    if (pos == std::string_view::npos) {
        ns.clear();
        local = std::string(name);
    }
    else {
        ns = std::string(name.substr(0, pos));
        local = std::string(name.substr(pos + 1));
    }
}

struct Builder {
    XML_Parser parser = nullptr;
    std::vector<Node> stack;
    std::optional<Node> root;

    static void on_start(void* data, const XML_Char* name, const XML_Char** atts)
    {
        auto* self = static_cast<Builder*>(data);
        Node node;
        split_name(name, node.ns, node.name);
        node.line = static_cast<int>(XML_GetCurrentLineNumber(self->parser));
        for (int i = 0; atts[i] != nullptr; i += 2) {
            Attribute a;
            split_name(atts[i], a.ns, a.name);
            a.value = atts[i + 1];
            node.attributes.push_back(std::move(a));
        }
        self->stack.push_back(std::move(node));
    }

    static void on_end(void* data, const XML_Char*)
    {
        auto* self = static_cast<Builder*>(data);
        Node node = std::move(self->stack.back());
        self->stack.pop_back();
        bool hasElementChild = std::any_of(node.children.begin(), node.children.end(),
                                           [](const Node& c) { return c.is_element(); });
        if (hasElementChild) {
            std::erase_if(node.children, [](const Node& c) {
                return c.is_text() && is_whitespace(c.text);
            });
        }
        if (self->stack.empty())
            self->root = std::move(node);
        else
            self->stack.back().children.push_back(std::move(node));
    }

    static void on_text(void* data, const XML_Char* s, int len)
    {
        auto* self = static_cast<Builder*>(data);
        if (self->stack.empty())
            return;
        auto& children = self->stack.back().children;
        if (!children.empty() && children.back().is_text())
            children.back().text.append(s, static_cast<std::size_t>(len));
        else
            children.push_back(Node::text_node(std::string(s, static_cast<std::size_t>(len))));
    }
};

struct ParserDeleter {
    void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

bool is_name_start(unsigned char c)
{
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c >= 0x80;
}

bool is_name_char(unsigned char c)
{
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

class Writer {
public:
    explicit Writer(const WriteOptions& options) : options_(options) {}

    std::string run(const Node& root)
    {
        if (options_.xml_declaration)
            out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        if (!options_.doctype.empty()) {
            out_ += options_.doctype;
            out_ += '\n';
        }
        write_element(root, "", 0, true);
        out_ += '\n';
        return std::move(out_);
    }

private:
    void indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 2, ' '); }

    void write_element(const Node& node, const std::string& inheritedNs, int depth, bool isRoot)
    {
        out_ += '<';
        out_ += node.name;

        if (isRoot ? !node.ns.empty() : node.ns != inheritedNs) {
            out_ += " xmlns=\"";
            out_ += escape_attribute(node.ns);
            out_ += '"';
        }

        struct Qualified {
            std::string qname;
            const Attribute* attr;
        };
        std::vector<Qualified> attrs;
        std::vector<std::string> declaredPrefixes;
        for (const auto& a : node.attributes) {
            std::string qname;
            if (a.ns.empty()) {
                qname = a.name;
            }
            else if (a.ns == kXmlNamespace) {
                qname = "xml:" + a.name;
            }
            else {
                std::string prefix = "a" + std::to_string(declaredPrefixes.size());
                out_ += " xmlns:" + prefix + "=\"" + escape_attribute(a.ns) + '"';
                declaredPrefixes.push_back(prefix);
                qname = prefix + ":" + a.name;
            }
            attrs.push_back({std::move(qname), &a});
        }
        std::stable_sort(attrs.begin(), attrs.end(), [](const Qualified& x, const Qualified& y) {
            bool xid = x.qname == "xml:id";
            bool yid = y.qname == "xml:id";
            if (xid != yid)
                return xid;
            return x.qname < y.qname;
        });
        for (const auto& q : attrs) {
            out_ += ' ';
            out_ += q.qname;
            out_ += "=\"";
            out_ += escape_attribute(q.attr->value);
            out_ += '"';
        }

        if (node.children.empty()) {
            if (options_.no_self_close.count(node.name) != 0) {
                out_ += "></";
                out_ += node.name;
                out_ += '>';
            }
            else {
                out_ += "/>";
            }
            return;
        }
        out_ += '>';

        bool anyElement = false;
        bool anyText = false;
        for (const auto& c : node.children) {
            if (c.is_element())
                anyElement = true;
            else if (!c.text.empty())
                anyText = true;
        }

        if (anyElement && !anyText) {
            for (const auto& c : node.children) {
                if (!c.is_element())
                    continue;
                out_ += '\n';
                indent(depth + 1);
                write_element(c, node.ns, depth + 1, false);
            }
            out_ += '\n';
            indent(depth);
        }
        else {
            // Text-only or mixed content is written inline.
            for (const auto& c : node.children) {
                if (c.is_element())
                    write_element(c, node.ns, depth + 1, false);
                else
                    out_ += escape_text(c.text);
            }
        }
        out_ += "</";
        out_ += node.name;
        out_ += '>';
    }

    const WriteOptions& options_;
    std::string out_;
};

} // namespace

const std::string* Node::attr(std::string_view local) const
{
    return attr("", local);
}

const std::string* Node::attr(std::string_view nsUri, std::string_view local) const
{
    for (const auto& a : attributes) {
        if (a.ns == nsUri && a.name == local)
            return &a.value;
    }
    return nullptr;
}

std::optional<std::string> Node::attr_or(std::string_view local) const
{
    if (const auto* v = attr(local))
        return *v;
    return std::nullopt;
}

Node& Node::set_attr(std::string local, std::string value)
{
    return set_attr("", std::move(local), std::move(value));
}

Node& Node::set_attr(std::string nsUri, std::string local, std::string value)
{
    for (auto& a : attributes) {
        if (a.ns == nsUri && a.name == local) {
            a.value = std::move(value);
            return *this;
        }
    }
    attributes.push_back({std::move(nsUri), std::move(local), std::move(value)});
    return *this;
}

Node& Node::append(Node child)
{
    children.push_back(std::move(child));
    return children.back();
}

Node& Node::append_text(std::string content)
{
    children.push_back(text_node(std::move(content)));
    return *this;
}

std::vector<const Node*> Node::element_children() const
{
    std::vector<const Node*> out;
    for (const auto& c : children) {
        if (c.is_element())
            out.push_back(&c);
    }
    return out;
}

std::string Node::direct_text() const
{
    std::string out;
    for (const auto& c : children) {
        if (c.is_text())
            out += c.text;
    }
    return out;
}

bool Node::has_significant_text() const
{
    for (const auto& c : children) {
        if (c.is_text() && !is_whitespace(c.text))
            return true;
    }
    return false;
}

Node parse(std::string_view bytes)
{
    std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreateNS("UTF-8", kSeparator));
    if (!parser)
        throw Error("XmlSyntaxError", "cannot allocate XML parser");

    Builder builder;
    builder.parser = parser.get();
    XML_SetUserData(parser.get(), &builder);
    XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
    XML_SetCharacterDataHandler(parser.get(), &Builder::on_text);

    if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) == XML_STATUS_ERROR) {
        auto line = XML_GetCurrentLineNumber(parser.get());
        throw Error("XmlSyntaxError",
                    std::string(XML_ErrorString(XML_GetErrorCode(parser.get()))) + " at line "
                        + std::to_string(line));
    }
    if (!builder.root)
        throw Error("XmlSyntaxError", "document has no root element");
    return std::move(*builder.root);
}

std::string write(const Node& root, const WriteOptions& options)
{
    return Writer(options).run(root);
}

std::string escape_text(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '\r': out += "&#13;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string escape_attribute(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\t': out += "&#9;"; break;
        case '\n': out += "&#10;"; break;
        case '\r': out += "&#13;"; break;
        default: out += c;
        }
    }
    return out;
}

bool is_xml_name(std::string_view s)
{
    if (s.empty() || !is_name_start(static_cast<unsigned char>(s.front())))
        return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [](char c) { return is_name_char(static_cast<unsigned char>(c)); });
}

bool is_whitespace(std::string_view s)
{
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

} // namespace medex::xml
