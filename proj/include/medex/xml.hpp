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

#ifndef MEDEX_XML_HPP
#define MEDEX_XML_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

// Minimal namespace-aware XML tree, built on expat, plus the canonical
// writer shared by every emitted format.

namespace medex::xml {

inline constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

struct Attribute {
    std::string ns;
    std::string name;
    std::string value;

    bool operator==(const Attribute&) const = default;
};

struct Node {
    enum class Kind { element, text };

    Kind kind = Kind::element;
    std::string ns;
    std::string name;
    std::vector<Attribute> attributes;
    std::vector<Node> children;
    std::string text;
    int line = 0;

    static Node element(std::string ns, std::string name)
    {
        Node n;
        n.ns = std::move(ns);
        n.name = std::move(name);
        return n;
    }

    static Node text_node(std::string content)
    {
        Node n;
        n.kind = Kind::text;
        n.text = std::move(content);
        return n;
    }

    bool is_element() const { return kind == Kind::element; }
    bool is_text() const { return kind == Kind::text; }

    // `line` is parse bookkeeping and does not participate in equality.
    bool operator==(const Node& other) const
    {
        return kind == other.kind && ns == other.ns && name == other.name
            && attributes == other.attributes && children == other.children
            && text == other.text;
    }

    /// Attribute in no namespace.
    const std::string* attr(std::string_view local) const;
    const std::string* attr(std::string_view nsUri, std::string_view local) const;
    std::optional<std::string> attr_or(std::string_view local) const;

    Node& set_attr(std::string local, std::string value);
    Node& set_attr(std::string nsUri, std::string local, std::string value);
    Node& append(Node child);
    Node& append_text(std::string content);

    std::vector<const Node*> element_children() const;
    /// Concatenation of the direct text children.
    std::string direct_text() const;
    bool has_significant_text() const;
};

/// Parses UTF-8 XML. Whitespace-only text nodes are dropped from elements
/// that have element children. Throws medex::Error("XmlSyntaxError").
Node parse(std::string_view bytes);

struct WriteOptions {
    bool xml_declaration = true;
    std::string doctype;
    /// Local names that are written with an explicit end tag even when empty.
    std::set<std::string> no_self_close;
};

/// Canonical form: UTF-8, LF line endings, 2-space indentation, namespace
/// declarations before attributes, xml:id first, remaining attributes ordered
/// by qualified name, trailing newline.
std::string write(const Node& root, const WriteOptions& options = {});

std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

bool is_xml_name(std::string_view s);
bool is_whitespace(std::string_view s);

} // namespace medex::xml

#endif // MEDEX_XML_HPP
