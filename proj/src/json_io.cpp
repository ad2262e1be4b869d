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

#include "mumeb/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mumeb {

Json to_json(const Field &field) {
    return Json{{"s", field.degree()}, {"poly", field.polynomial_coefficients()}};
}

Json to_json(const FieldElem &x) {
    return Json{{"idx", x.index()}};
}

Json to_json(const RingElem &x) {
    return Json{{"a", x.a().value}, {"b", x.b().value}};
}

Json to_json(const ScaledGaussian &x) {
    return Json{{"re", x.re()}, {"im", x.im()}, {"k", x.k()}};
}

Json to_json(const Dyadic &x) {
    return Json::array({x.num(), x.log2den()});
}

Json matrix_to_json(const ExactMatrix &m) {
    const int k = common_exponent(m);
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto [re, im] = m(i, j).numerators_at(k);
            entries.push_back(Json::array({re, im}));
        }
    }
    return Json{{"n", m.rows()}, {"k", k}, {"entries", std::move(entries)}};
}

ScaledGaussian scaled_gaussian_from_json(const Json &j) {
    return {j.at("re").get<std::int64_t>(), j.at("im").get<std::int64_t>(), j.at("k").get<int>()};
}

ExactMatrix matrix_from_json(const Json &j) {
    const auto n = j.at("n").get<Eigen::Index>();
    const int k = j.at("k").get<int>();
    const Json &entries = j.at("entries");
    if (entries.size() != static_cast<std::size_t>(n * n)) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match n^2");
    }
    ExactMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const Json &e = entries[static_cast<std::size_t>(i * n + c)];
            m(i, c) = ScaledGaussian(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>(), k);
        }
    }
    return m;
}

Json subset_to_json(const std::vector<Mat2F> &members) {
    Json out = Json::array();
    for (const Mat2F &m : members) {
        const auto idx = m.indices();
        out.push_back(Json::array({idx[0], idx[1], idx[2], idx[3]}));
    }
    return out;
}

std::vector<Mat2F> subset_from_json(const Field &field, const Json &j) {
    const Json &list = j.is_object() ? j.at("members") : j;
    if (!list.is_array()) {
        throw Error(ErrorKind::InvalidConfig, "family file must hold a list of [alpha, beta, gamma, delta]");
    }
    std::vector<Mat2F> out;
    for (const Json &entry : list) {
        if (!entry.is_array() || entry.size() != 4) {
            throw Error(ErrorKind::InvalidConfig, "each member must be a 4-element index array");
        }
        std::array<std::size_t, 4> idx{};
        for (std::size_t k = 0; k < 4; ++k) {
            if (!entry[k].is_number_integer() || entry[k].get<long long>() < 0 ||
                entry[k].get<std::size_t>() >= field.size()) {
                throw Error(ErrorKind::InvalidConfig, "member index out of range: " + entry.dump());
            }
            idx[k] = entry[k].get<std::size_t>();
        }
        out.push_back(Mat2F::from_indices(field, idx));
    }
    return out;
}

namespace {

Json witness_json(const ShortcutWitness &w) {
    return Json{{"xi", w.xi}, {"eta", w.eta}, {"mod2", to_json(w.mod2)}};
}

Json witness_json(const BruteforceWitness &w) {
    return Json{{"state1", w.state1}, {"state2", w.state2}, {"mod2", to_json(w.mod2)}};
}

}  // namespace

Json report_to_json(const Field &field, const std::string &family, const VerificationReport &report) {
    Json pairs = Json::array();
    Json failures = Json::array();
    for (const PairOutcome &p : report.pairs) {
        Json entry{{"i", p.i}, {"j", p.j}};
        if (p.shortcut) {
            entry["shortcut"] = *p.shortcut;
        }
        if (p.bruteforce) {
            entry["bruteforce"] = *p.bruteforce;
        }
        entry["agree"] = p.agree();
        pairs.push_back(entry);
        if (!p.passed() || !p.agree()) {
            Json f{{"i", p.i}, {"j", p.j}};
            if (p.shortcut_witness) {
                f["shortcut_witness"] = witness_json(*p.shortcut_witness);
            }
            if (p.bruteforce_witness) {
                f["bruteforce_witness"] = witness_json(*p.bruteforce_witness);
            }
            failures.push_back(f);
        }
    }
    Json meb = Json::array();
    for (bool b : report.meb) {
        meb.push_back(b);
    }
    return Json{{"field", to_json(field)},
                {"family", family},
                {"size", report.members.size()},
                {"mode", verify_mode_name(report.mode)},
                {"members", subset_to_json(report.members)},
                {"meb_check", report.meb_check},
                {"meb", meb},
                {"pairs_total", report.pairs.size()},
                {"pairs_failed", report.failed_pairs()},
                {"pairs", pairs},
                {"failures", failures},
                {"ok", report.ok()}};
}

Json search_to_json(const Field &field, const SearchResult &result) {
    const SearchReport &r = result.report;
    return Json{{"field", to_json(field)},
                {"vertices", r.vertices},
                {"nodes", r.nodes},
                {"seed_size", r.seed_size},
                {"greedy_size", r.greedy_size},
                {"best_size", r.best_size},
                {"exact", r.exact},
                {"members", subset_to_json(result.best.members())}};
}

std::optional<std::uint32_t> lookup_poly_table(const std::string &path, int s) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidConfig, "cannot open polynomial table " + path);
    }
    Json table;
    try {
        table = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::InvalidConfig, std::string("polynomial table is not valid JSON: ") + e.what());
    }
    const std::string key = std::to_string(s);
    if (!table.is_object() || !table.contains(key)) {
        return std::nullopt;
    }
    const auto coeffs = table.at(key).get<std::vector<int>>();
    return polynomial_from_coefficients(coeffs);
}

std::string pretty_matrix(const ExactMatrix &m) {
    const int k = common_exponent(m);
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto [re, im] = m(i, j).numerators_at(k);
            cells.push_back(ScaledGaussian::gaussian_str(re, im));
            width = std::max(width, cells.back().size());
        }
    }
    std::ostringstream out;
    if (k > 0) {
        out << "1/";
        if (k / 2 > 0) {
            out << (std::int64_t{1} << (k / 2));
        }
        if (k % 2 == 1) {
            out << (k / 2 > 0 ? "*sqrt2" : "sqrt2");
        }
        out << " *\n";
    }
    std::size_t c = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const std::string &cell = cells[c++];
            out << " " << std::string(width - cell.size(), ' ') << cell;
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace mumeb
