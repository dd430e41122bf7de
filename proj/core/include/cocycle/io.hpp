#pragma once

// File formats: multiplication-table group files, cocycle files and action
// files, plus catalog references of the form "catalog:<name>".

#include "cocycle/abelian.hpp"
#include "cocycle/cohomology.hpp"
#include "cocycle/group.hpp"

#include <iosfwd>
#include <string>

namespace cocycle::io {

/// line 1 "order n"; lines 2..n+1 table rows; optional "# label i name"
/// trailers; LF endings, no trailing whitespace.
std::string write_group_file(const FiniteGroup& g);
GroupPtr read_group_file(std::istream& in);
GroupPtr read_group_file_text(const std::string& text);

/// "catalog:<name>" or a path to a group file.
GroupPtr resolve_group(const std::string& ref);

/// "group <ref>", "modulus m", then n lines of n values.
std::string write_cocycle_file(const std::string& group_ref, const Cocycle& c);
Cocycle read_cocycle_file(std::istream& in);

/// "group <ref>" (K), "factors d1 d2 ...", then |K| permutation lines over
/// A's element indices.
std::string write_action_file(const std::string& k_ref, const KAction& act);
KActionPtr read_action_file(std::istream& in);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace cocycle::io
