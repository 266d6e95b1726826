#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ctxpath/rdf.h"

namespace ctxpath {

class NTriplesError : public std::runtime_error {
 public:
  NTriplesError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses an N-Triples document. Every blank label is prefixed with
// `blankPrefix`, which gives each parsed document its own label space.
RdfGraph parseNTriples(std::string_view text,
                       const std::string& blankPrefix = {});

std::string toNTriples(const RdfGraph& graph);

}  // namespace ctxpath
