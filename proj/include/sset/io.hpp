#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sset/core.hpp"
#include "sset/pro.hpp"
#include "sset/segal.hpp"
#include "sset/verifier.hpp"

namespace sset::io {

using Json = nlohmann::json;

/// Malformed input; the message names the position (byte offset or JSON path).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);
/// Compact JSON plus a trailing newline; object keys sorted.
std::string canonical(const Json& j);

// SSX: {"cap", "extension", "cells": [[id...]], "faces": [m][i][cell] = id,
// "degeneracies": [m][j][cell] = id}. Cells are listed in lexicographic id order.
Json ssxJson(const SSetPtr& x);
SSetPtr ssxFromJson(const Json& j, const std::string& path = "");
std::string serializeSSX(const SSetPtr& x);
SSetPtr parseSSX(const std::string& text);

/// Canonical ids of a simplicial set, per degree and cell index.
std::vector<std::vector<std::string>> canonicalIds(const SSetPtr& x);

// Maps: {"source": <ssx>, "target": <ssx>, "components": [m][cell] = id}.
Json mapJson(const SimplicialMap& f);
/// Components only, aligned with the canonical cell order of the source.
Json componentsJson(const SimplicialMap& f);
SimplicialMap componentsFromJson(const Json& j, const SSetPtr& source, const SSetPtr& target,
                                 const std::string& path = "");
SimplicialMap mapFromJson(const Json& j, const std::string& path = "");
std::string serializeMap(const SimplicialMap& f);
SimplicialMap parseMap(const std::string& text);

// PRX: {"index": {"elements", "order": [[a, b]...], "flavor": "poset"|"tower"},
// "levels": {elem: <ssx>}, "bonds": {"a<=b": components}}.
Json prxJson(const ProPtr& c);
ProPtr prxFromJson(const Json& j, const std::string& path = "");
std::string serializePRX(const ProPtr& c);
ProPtr parsePRX(const std::string& text);
/// Pro-maps: {"source": <prx>, "target": <prx>, "bottom": components}.
Json proMapJson(const ProMap& f);
ProMap proMapFromJson(const Json& j, const std::string& path = "");
ProMap parseProMap(const std::string& text);

// BSX: {"outerCap", "outerExtension", "rows": [<ssx>], "outerFaces": [t][i] =
// components, "outerDegeneracies": [t][j] = components}.
Json bsxJson(const BSetPtr& x);
BSetPtr bsxFromJson(const Json& j, const std::string& path = "");
std::string serializeBSX(const BSetPtr& x);
BSetPtr parseBSX(const std::string& text);
/// Bisimplicial maps: {"source": <bsx>, "target": <bsx>, "rows": [components]}.
Json bsxMapJson(const BisimplicialMap& f);
BisimplicialMap bsxMapFromJson(const Json& j, const std::string& path = "");

// FTP: {"flavor", "objects": {name: <ssx> | {"ref": file}}, "tests": [name],
// "ambient": [name], "fibrations": [{"source", "target", "components",
// "trivial"}], "generatorCap": int, "inherited": bool}.
struct FtpFile {
  Flavor flavor = Flavor::KQ;
  std::vector<std::string> ambientNames;
  int generatorCap = 2;
  FibTestPresentation presentation;
};
/// References are resolved relative to baseDir.
FtpFile parseFTP(const std::string& text, const std::string& baseDir = ".");
std::string serializeFTP(const FtpFile& f);

}  // namespace sset::io
