#include "ctxpath/http_source.h"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <algorithm>
#include <regex>
#include <vector>

#include "ctxpath/ntriples.h"

namespace ctxpath {

namespace {

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string target;  // path and query
};

std::optional<Url> splitUrl(const std::string& url) {
  static const std::regex kUrl(R"(^(https?://[^/?#]+)([^#]*))",
                               std::regex::icase);
  std::smatch m;
  if (!std::regex_search(url, m, kUrl)) return std::nullopt;
  Url u{m[1].str(), m[2].str()};
  if (u.target.empty() || u.target.front() != '/') u.target = "/" + u.target;
  return u;
}

// Drops "." and ".." segments from an absolute path.
std::string removeDotSegments(const std::string& path) {
  std::vector<std::string> out;
  std::size_t pos = 1;
  while (pos <= path.size()) {
    std::size_t next = path.find('/', pos);
    if (next == std::string::npos) next = path.size();
    std::string seg = path.substr(pos, next - pos);
    const bool last = next == path.size();
    if (seg == "..") {
      if (!out.empty()) out.pop_back();
      if (last) out.emplace_back();
    } else if (seg == ".") {
      if (last) out.emplace_back();
    } else {
      out.push_back(seg);
    }
    pos = next + 1;
  }
  std::string result;
  for (const auto& seg : out) result += "/" + seg;
  return result.empty() ? "/" : result;
}

std::string resolveLocation(const Url& base, const std::string& location) {
  if (location.rfind("http://", 0) == 0 || location.rfind("https://", 0) == 0) {
    return location;
  }
  if (location.rfind("//", 0) == 0) {
    return base.origin.substr(0, base.origin.find(':')) + ":" + location;
  }
  if (!location.empty() && location.front() == '/') {
    return base.origin + removeDotSegments(location);
  }
  std::string dir = base.target.substr(0, base.target.find_last_of('/') + 1);
  return base.origin + removeDotSegments(dir + location);
}

bool isNTriples(const std::string& contentType) {
  std::string mime = contentType.substr(0, contentType.find(';'));
  mime.erase(std::remove(mime.begin(), mime.end(), ' '), mime.end());
  std::transform(mime.begin(), mime.end(), mime.begin(), ::tolower);
  return mime == "application/n-triples" || mime == "text/plain";
}

bool isTimeout(httplib::Error e) {
  return e == httplib::Error::ConnectionTimeout || e == httplib::Error::Read ||
         e == httplib::Error::Write;
}

}  // namespace

DocumentPtr HttpSource::retrieve(const Iri& iri) {
  std::string url = iri.value;
  for (int hop = 0; hop <= options_.maxRedirects; ++hop) {
    auto parts = splitUrl(url);
    if (!parts) return nullptr;  // not an http(s) IRI
    httplib::Client client(parts->origin);
    client.set_follow_location(false);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    auto res = client.Get(parts->target, {{"Accept", options_.accept}});
    if (!res) {
      if (isTimeout(res.error())) return nullptr;
      throw LookupIoError("lookup of " + iri.value + " failed: " +
                          httplib::to_string(res.error()));
    }
    if (res->status >= 300 && res->status < 400) {
      if (!res->has_header("Location")) return nullptr;
      url = resolveLocation(*parts, res->get_header_value("Location"));
      continue;
    }
    if (res->status < 200 || res->status >= 300) return nullptr;
    if (!isNTriples(res->get_header_value("Content-Type"))) return nullptr;
    std::size_t n = retrievals_++;
    auto doc = std::make_shared<Document>();
    doc->id = url;
    try {
      doc->triples = parseNTriples(res->body, "r" + std::to_string(n) + "_");
    } catch (const NTriplesError&) {
      return nullptr;
    }
    return doc;
  }
  return nullptr;  // too many redirects
}

}  // namespace ctxpath
