// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mumeb/clique_search.hpp"
#include "mumeb/exact_matrix.hpp"
#include "mumeb/galois_ring.hpp"
#include "mumeb/meb.hpp"
#include "mumeb/sl2.hpp"

namespace mumeb {

using Json = nlohmann::ordered_json;

/// {"s": s, "poly": [c0..cs]}
Json to_json(const Field &field);
/// {"idx": k}
Json to_json(const FieldElem &x);
/// {"a": idx, "b": idx}
Json to_json(const RingElem &x);
/// {"re": re, "im": im, "k": k}
Json to_json(const ScaledGaussian &x);
/// [num, log2den]
Json to_json(const Dyadic &x);
/// {"n": n, "k": common exponent, "entries": [[re, im], ...]} row-major.
Json matrix_to_json(const ExactMatrix &m);
/// [[alpha, beta, gamma, delta], ...] canonical indices.
Json subset_to_json(const std::vector<Mat2F> &members);
Json report_to_json(const Field &field, const std::string &family, const VerificationReport &report);
Json search_to_json(const Field &field, const SearchResult &result);

ScaledGaussian scaled_gaussian_from_json(const Json &j);
ExactMatrix matrix_from_json(const Json &j);

/// Accepts a bare list of 4-index arrays or {"members": [...]}. Each entry is
/// validated as an SL(2, F) element (InvalidMatrix); excludedness is not checked.
std::vector<Mat2F> subset_from_json(const Field &field, const Json &j);

/// Polynomial for degree s from a table file {"s": [c0..cs], ...}; nullopt if absent.
std::optional<std::uint32_t> lookup_poly_table(const std::string &path, int s);

/// Renders "1/2 *" style blocks with +-1, +-i entries aligned in columns.
std::string pretty_matrix(const ExactMatrix &m);

}  // namespace mumeb
