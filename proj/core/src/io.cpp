// Copyright 2026 The trialoffer Authors
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

#include "trialoffer/io.hpp"

#include "json_util.hpp"
#include "trialoffer/csv.hpp"
#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {

using json_util::Json;
using json_util::Reader;

ContinuationSpec parse_continuation(const Reader& r) {
  const std::string kind = r.string("kind");
  try {
    if (kind == "none") return ContinuationSpec::none();
    if (kind == "polynomial") {
      return ContinuationSpec::polynomial(r.real("rho"), r.real("r"));
    }
    if (kind == "explicit") {
      return ContinuationSpec::explicit_values(r.reals("values"));
    }
  } catch (const DomainError& e) {
    r.fail(r.path(), e.what());
  }
  r.fail(r.path() + ".kind",
         "unknown continuation kind '" + kind +
             "' (expected none, polynomial or explicit)");
}

}  // namespace

Market parse_market(std::string_view text, const std::string& source) {
  const Json root = json_util::parse(text, source);
  const Reader r(root, "", source);
  std::vector<double> quality = r.reals("quality");
  std::vector<double> appeal = r.reals("appeal");
  std::vector<double> visibility = r.reals("visibility");
  if (r.has("n") &&
      r.integer("n") != static_cast<std::int64_t>(quality.size())) {
    r.fail("n", "declares " + std::to_string(r.integer("n")) +
                    " products but quality has " +
                    std::to_string(quality.size()));
  }
  const Market::Options options{
      .allow_unsorted_visibility =
          r.boolean_or("allow_unsorted_visibility", false)};
  const bool reduced = r.boolean_or("reduced", false);
  ContinuationSpec continuation;
  if (r.has("continuation")) {
    continuation = parse_continuation(r.child("continuation"));
  }
  try {
    if (reduced) {
      if (!continuation.is_none()) {
        r.fail("continuation", "a reduced market has no continuation");
      }
      return Market::reduced(std::move(quality), std::move(appeal),
                             std::move(visibility), options);
    }
    return Market(std::move(quality), std::move(appeal), std::move(visibility),
                  std::move(continuation), options);
  } catch (const DomainError& e) {
    throw ParseError(source, 0, std::string("invalid market: ") + e.what());
  }
}

Market load_market(const std::filesystem::path& path) {
  return parse_market(read_text_file(path), path.string());
}

std::string serialize_market(const Market& market) {
  Json root = Json::object();
  root["n"] = market.size();
  root["quality"] = market.quality();
  root["appeal"] = market.appeal();
  root["visibility"] = market.visibility();
  const ContinuationSpec& c = market.continuation();
  switch (c.kind()) {
    case ContinuationKind::kNone:
      root["continuation"] = {{"kind", "none"}};
      break;
    case ContinuationKind::kPolynomial:
      root["continuation"] = {
          {"kind", "polynomial"}, {"rho", c.rho()}, {"r", c.r()}};
      break;
    case ContinuationKind::kExplicit:
      root["continuation"] = {{"kind", "explicit"}, {"values", c.values()}};
      break;
  }
  if (market.allows_unsorted_visibility()) {
    root["allow_unsorted_visibility"] = true;
  }
  if (market.is_reduced()) root["reduced"] = true;
  return root.dump(2) + "\n";
}

void save_market(const Market& market, const std::filesystem::path& path) {
  write_text_file(path, serialize_market(market));
}

}  // namespace trialoffer
