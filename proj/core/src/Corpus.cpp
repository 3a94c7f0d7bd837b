//===- Corpus.cpp - Seed corpus loading -------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Corpus.h"

#include "treegraft/Parse.h"
#include "treegraft/Print.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace treegraft {

namespace {

bool isMarkerLine(std::string_view line) {
  size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos)
    return false;
  size_t end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1) == "// -----";
}

std::string readWholeFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool wholeWhitespaceOrComments(std::string_view chunk) {
  size_t i = 0;
  while (i < chunk.size()) {
    char c = chunk[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else if (c == '/' && i + 1 < chunk.size() && chunk[i + 1] == '/') {
      while (i < chunk.size() && chunk[i] != '\n')
        ++i;
    } else {
      return false;
    }
  }
  return true;
}

} // namespace

std::vector<std::string> splitAtMarkers(std::string_view text) {
  std::vector<std::string> chunks;
  std::string current;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
    if (isMarkerLine(line)) {
      chunks.push_back(std::move(current));
      current.clear();
    } else {
      current.append(line);
      current.push_back('\n');
    }
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
  }
  chunks.push_back(std::move(current));
  return chunks;
}

Corpus loadCorpus(const std::string &seedDir) {
  namespace fs = std::filesystem;
  Corpus corpus;

  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto &entry : fs::directory_iterator(seedDir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".mlir")
      files.push_back(entry.path());
  if (ec)
    throw EmptyCorpus("cannot read seed directory '" + seedDir +
                      "': " + ec.message());
  std::sort(files.begin(), files.end());
  corpus.fileCount = files.size();

  for (const fs::path &file : files) {
    std::string base = file.filename().string();
    size_t indexInFile = 0;
    for (const std::string &chunk : splitAtMarkers(readWholeFile(file))) {
      if (wholeWhitespaceOrComments(chunk))
        continue;
      SyntaxTree parsed;
      try {
        parsed = parse(chunk);
      } catch (const SyntaxError &err) {
        corpus.skipped.push_back(base + ": " + err.what());
        continue;
      }
      for (const auto &op : parsed.root->children) {
        if (op->kind != NodeKind::Operation)
          continue;
        // Reprint the single operation so each seed's source text and
        // byte spans describe exactly that seed.
        std::string source = print(*op);
        Seed seed;
        seed.tree = parse(source);
        seed.id = base + "#" + std::to_string(indexInFile++);
        corpus.seeds.push_back(std::move(seed));
      }
    }
  }

  if (corpus.seeds.empty())
    throw EmptyCorpus("no parseable seed found under '" + seedDir + "'");
  return corpus;
}

} // namespace treegraft
