#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "dstl/formula.hpp"

namespace dstl {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t at, const std::string& what)
      : std::runtime_error(what + " (at column " + std::to_string(at + 1) + ")"), pos(at) {}
};

// When `components` is given, every <name>/[name] must be declared in it.
FormulaPtr parse_dsl(const std::string& text,
                     const std::set<std::string>* components = nullptr);
TemporalFormula parse_temporal(const std::string& text,
                               const std::set<std::string>* components = nullptr);

std::string render(const FormulaPtr& f);
std::string render(const TemporalFormula& t, bool stable_sugar = false);

}  // namespace dstl
