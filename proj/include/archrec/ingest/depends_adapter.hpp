#ifndef ARCHREC_INGEST_DEPENDS_ADAPTER_HPP
#define ARCHREC_INGEST_DEPENDS_ADAPTER_HPP

#include <filesystem>

#include "archrec/core/model.hpp"

namespace archrec {

// Adapter for the matrix output of the Depends extractor:
//   { "variables": ["a.c", "b.c"], "cells": [ {"src":0,"dest":1,"values":{"Call":2.0}} ] }
// Variables become File entities; each per-type cell value becomes one edge
// with that multiplicity. Unknown type names are an error, never dropped.
DependencyGraph adapt_depends_output(const std::filesystem::path& path);
DependencyGraph adapt_depends_output_text(const std::string& text, const std::string& origin);

} // namespace archrec

#endif
