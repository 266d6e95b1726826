#pragma once

#include <atomic>
#include <chrono>
#include <string>

#include "ctxpath/web.h"

namespace ctxpath {

struct HttpOptions {
  int maxRedirects = 5;
  std::chrono::seconds timeout{10};
  std::string accept = "application/n-triples, text/plain;q=0.5";
};

// Dereferences IRIs over HTTP(S). Only N-Triples responses count as
// documents; every other outcome short of a transport failure is treated as
// not retrievable.
class HttpSource : public DocumentSource {
 public:
  explicit HttpSource(HttpOptions options = {}) : options_(std::move(options)) {}
  DocumentPtr retrieve(const Iri& iri) override;

 private:
  HttpOptions options_;
  std::atomic<std::size_t> retrievals_{0};
};

}  // namespace ctxpath
