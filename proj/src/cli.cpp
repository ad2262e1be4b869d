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

#include "mumeb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mumeb/json_io.hpp"
#include "mumeb/unitary.hpp"

namespace mumeb {

namespace {

struct Context {
    FieldPtr field;
    std::shared_ptr<const GaloisRing> ring;
};

Context make_context(const RunConfig &config) {
    std::optional<std::uint32_t> poly;
    std::optional<std::string> table = config.poly_table;
    if (!table) {
        if (const char *env = std::getenv("MUMEB_POLY_TABLE"); env != nullptr && *env != '\0') {
            table = env;
        }
    }
    if (table) {
        poly = lookup_poly_table(*table, config.s);
    }
    Context ctx;
    ctx.field = Field::create(config.s, poly);
    ctx.ring = GaloisRing::create(ctx.field);
    return ctx;
}

unsigned worker_count(const RunConfig &config) {
    if (config.threads != 0) {
        return config.threads;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

OutputFormat format_or(const RunConfig &config, OutputFormat fallback) {
    return config.format.value_or(fallback);
}

/// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig &config, std::ostream &out, const std::string &text) {
    if (!config.out) {
        out << text;
        return;
    }
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
        throw Error(ErrorKind::InvalidConfig, "cannot write " + *config.out);
    }
    file << text;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

std::string family_label(const RunConfig &config) {
    return config.custom ? "custom" : config.family;
}

/// Built-in families are excluded by construction; custom files are
/// re-validated here and reported through `violation`.
struct FamilyLoad {
    std::vector<Mat2F> members;
    std::optional<std::string> problem;
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

FamilyLoad load_family(const RunConfig &config, const Field &field) {
    FamilyLoad load;
    if (!config.custom) {
        if (config.family == "symmetric") {
            load.members = family_symmetric(field).members();
        } else {
            load.members = family_triple(field).members();
        }
        return load;
    }
    std::ifstream in(*config.custom);
    if (!in) {
        throw Error(ErrorKind::InvalidConfig, "cannot open family file " + *config.custom);
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception &e) {
        throw Error(ErrorKind::InvalidConfig, std::string("family file is not valid JSON: ") + e.what());
    }
    try {
        load.members = subset_from_json(field, j);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::InvalidMatrix) {
            throw;
        }
        load.problem = e.what();
        return load;
    }
    if (load.members.empty()) {
        load.problem = "family is empty";
        return load;
    }
    const ExclusionCheck check = is_trace_zero_excluded(load.members);
    if (!check.excluded) {
        load.violation = check.violation;
        const auto [i, j2] = *check.violation;
        load.problem = load.members[i] == load.members[j2] ? "duplicate member" : "relative trace is zero";
    }
    return load;
}

int report_bad_family(const RunConfig &config, const FamilyLoad &load, std::ostream &out, std::ostream &err) {
    err << "error: family is not trace-zero excluded: " << *load.problem << "\n";
    if (format_or(config, OutputFormat::Json) == OutputFormat::Pretty) {
        std::ostringstream text;
        text << "not excluded: " << *load.problem;
        if (load.violation) {
            text << " at members " << load.violation->first << " and " << load.violation->second;
        }
        text << "\n";
        emit(config, out, text.str());
    } else {
        Json j{{"ok", false}, {"excluded", false}, {"reason", *load.problem}};
        if (load.violation) {
            j["violation"] = Json::array({load.violation->first, load.violation->second});
        }
        emit(config, out, dump(j));
    }
    return kExitFailed;
}

std::string pretty_report(const VerificationReport &report) {
    std::ostringstream text;
    text << "bases: " << report.members.size() << "  mode: " << verify_mode_name(report.mode)
         << "  meb check: " << report.meb_check << "\n";
    for (std::size_t i = 0; i < report.members.size(); ++i) {
        text << "  [" << i << "] " << report.members[i].str() << (report.meb[i] ? "  meb" : "  NOT MEB") << "\n";
    }
    for (const PairOutcome &p : report.pairs) {
        if (p.passed() && p.agree()) {
            continue;
        }
        text << "  pair (" << p.i << ", " << p.j << ") failed";
        if (p.shortcut_witness) {
            const auto &w = *p.shortcut_witness;
            text << "  shortcut witness xi=" << w.xi << " eta=" << w.eta << " |sum|^2=" << w.mod2.str();
        }
        if (p.bruteforce_witness) {
            const auto &w = *p.bruteforce_witness;
            text << "  states " << w.state1 << "," << w.state2 << " |<.,.>|^2=" << w.mod2.str();
        }
        text << "\n";
    }
    text << "pairs: " << report.pairs.size() << "  failed: " << report.failed_pairs() << "\n";
    text << (report.ok() ? "OK" : "FAILED") << "\n";
    return text.str();
}

std::uint64_t parse_budget(std::string text) {
    std::erase(text, '_');
    std::erase(text, '\'');
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorKind::InvalidConfig, "budget must be a non-negative integer");
    }
    try {
        return std::stoull(text);
    } catch (const std::out_of_range &) {
        throw Error(ErrorKind::InvalidConfig, "budget out of range");
    }
}

}  // namespace

void validate(const RunConfig &config) {
    if (config.s < Field::kMinDegree || config.s > Field::kMaxDegree) {
        throw Error(ErrorKind::UnsupportedDegree, "s must lie in [" + std::to_string(Field::kMinDegree) + ", " +
                                                      std::to_string(Field::kMaxDegree) + "], got " +
                                                      std::to_string(config.s));
    }
    if (config.family != "symmetric" && config.family != "triple") {
        throw Error(ErrorKind::InvalidConfig, "unknown family " + config.family);
    }
    if (config.mode != VerifyMode::Shortcut && config.s > kMaxBruteforceDegree) {
        throw Error(ErrorKind::InvalidConfig,
                    "brute-force verification is limited to s <= " + std::to_string(kMaxBruteforceDegree));
    }
    if (config.states && config.s > kMaxBruteforceDegree) {
        throw Error(ErrorKind::InvalidConfig,
                    "state lists are limited to s <= " + std::to_string(kMaxBruteforceDegree));
    }
}

int cmd_build(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const Context ctx = make_context(config);
    const FamilyLoad load = load_family(config, *ctx.field);
    if (load.problem) {
        return report_bad_family(config, load, out, err);
    }
    if (format_or(config, OutputFormat::Json) == OutputFormat::Pretty) {
        std::ostringstream text;
        for (std::size_t i = 0; i < load.members.size(); ++i) {
            const ExactMatrix v = build_va(*ctx.ring, load.members[i]);
            text << "V[" << i << "] for A = " << load.members[i].str() << "\n" << pretty_matrix(v);
            if (config.states) {
                text << "states:\n" << pretty_matrix(MEBasis(*ctx.ring, v).states());
            }
            text << "\n";
        }
        emit(config, out, text.str());
        return kExitOk;
    }
    Json bases = Json::array();
    for (const Mat2F &m : load.members) {
        const ExactMatrix v = build_va(*ctx.ring, m);
        Json entry{{"member", subset_to_json({m})[0]}, {"unitary", matrix_to_json(v)}};
        if (config.states) {
            entry["states"] = matrix_to_json(MEBasis(*ctx.ring, v).states());
        }
        bases.push_back(std::move(entry));
    }
    emit(config, out,
         dump(Json{{"field", to_json(*ctx.field)},
                   {"family", family_label(config)},
                   {"size", load.members.size()},
                   {"bases", std::move(bases)}}));
    return kExitOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const Context ctx = make_context(config);
    const FamilyLoad load = load_family(config, *ctx.field);
    if (load.problem) {
        return report_bad_family(config, load, out, err);
    }
    const VerificationReport report = verify_mumeb_family(*ctx.ring, load.members, config.mode, worker_count(config));
    if (format_or(config, OutputFormat::Json) == OutputFormat::Pretty) {
        emit(config, out, pretty_report(report));
    } else {
        emit(config, out, dump(report_to_json(*ctx.field, family_label(config), report)));
    }
    if (!report.ok()) {
        err << "verification failed: " << report.failed_pairs() << " of " << report.pairs.size()
            << " pairs\n";
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_search(const RunConfig &config, std::ostream &out, std::ostream &err) {
    if (config.custom) {
        throw Error(ErrorKind::InvalidConfig, "search is always seeded with the triple family");
    }
    const Context ctx = make_context(config);
    if (ctx.field->size() > kMaxSearchQ) {
        throw Error(ErrorKind::EnumerationTooLarge,
                    "search is limited to q <= " + std::to_string(kMaxSearchQ));
    }
    const SearchResult result =
        search_excluded_subset(*ctx.field, config.budget, family_triple(*ctx.field).members());
    const VerificationReport report =
        verify_mumeb_family(*ctx.ring, result.best.members(), config.mode, worker_count(config));
    if (format_or(config, OutputFormat::Json) == OutputFormat::Pretty) {
        std::ostringstream text;
        const SearchReport &r = result.report;
        text << "vertices: " << r.vertices << "  nodes: " << r.nodes << "\n"
             << "seed: " << r.seed_size << "  greedy: " << r.greedy_size << "  best: " << r.best_size
             << "  exact: " << (r.exact ? "true" : "false") << "\n";
        for (const Mat2F &m : result.best.members()) {
            text << "  " << m.str() << "\n";
        }
        text << "verified: " << (report.ok() ? "OK" : "FAILED") << "\n";
        emit(config, out, text.str());
    } else {
        Json j = search_to_json(*ctx.field, result);
        j["verified"] = report.ok();
        j["pairs_total"] = report.pairs.size();
        j["pairs_failed"] = report.failed_pairs();
        emit(config, out, dump(j));
    }
    if (!report.ok()) {
        err << "search result failed re-verification\n";
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_tables(const RunConfig &config, std::ostream &out, std::ostream &err) {
    const Context ctx = make_context(config);
    const GaloisRing &ring = *ctx.ring;
    const std::size_t q = ring.teich_size();

    // Table versus orbit sums, and additivity against a stride of partners.
    bool orbit_ok = true;
    bool linear_ok = true;
    const std::size_t stride = std::max<std::size_t>(1, ring.size() / 64);
    for (std::size_t n = 0; n < ring.size(); ++n) {
        const RingElem x = ring.elem_at(n);
        orbit_ok = orbit_ok && ring.trace(x) == ring.trace_by_orbit(x);
        for (std::size_t m = n % stride; m < ring.size(); m += stride) {
            const RingElem y = ring.elem_at(m);
            linear_ok = linear_ok && ring.trace(x + y) == (ring.trace(x) + ring.trace(y)) % 4;
        }
    }

    // |Gamma(r)|^2 by class: r = 0, r in 2T \ {0}, r a unit.
    const Dyadic full(static_cast<std::int64_t>(q * q), 0);
    const Dyadic unit(static_cast<std::int64_t>(q), 0);
    const Dyadic none(0, 0);
    bool gamma_ok = true;
    std::size_t counts[3] = {0, 0, 0};
    for (std::size_t n = 0; n < ring.size(); ++n) {
        const RingElem r = ring.elem_at(n);
        const Dyadic m = ring.gamma(r).norm_sq();
        int cls = r.a().is_zero() ? (r.b().is_zero() ? 0 : 1) : 2;
        const Dyadic &expected = cls == 0 ? full : (cls == 1 ? none : unit);
        gamma_ok = gamma_ok && m == expected;
        ++counts[cls];
    }
    const bool ok = orbit_ok && linear_ok && gamma_ok;

    if (format_or(config, OutputFormat::Pretty) == OutputFormat::Pretty) {
        std::ostringstream text;
        text << "GR(4, 4^" << config.s << ") = Z4[x]/(";
        const auto &h = ring.lift_polynomial();
        bool first = true;
        for (std::size_t d = h.size(); d-- > 0;) {
            if (h[d] == 0) {
                continue;
            }
            if (!first) {
                text << "+";
            }
            first = false;
            if (h[d] != 1 || d == 0) {
                text << h[d];
            }
            if (d >= 1) {
                text << "x";
            }
            if (d >= 2) {
                text << "^" << d;
            }
        }
        text << ")\n\ntrace table\n";
        for (std::size_t b = 0; b < q; ++b) {
            for (std::size_t a = 0; a < q; ++a) {
                const RingElem x = ring.elem(TeichIndex(a), TeichIndex(b));
                text << (a == 0 ? "" : "  ") << "tr(" << ring.name(x) << ") = " << ring.trace(x);
            }
            text << "\n";
        }
        text << "\ncharacter sums\n"
             << "|Γ(0)|^2 = " << ring.gamma(ring.zero()).norm_sq().str() << "\n"
             << "|Γ(1)|^2 = " << ring.gamma(ring.one()).norm_sq().str() << "\n"
             << "|Γ(2)|^2 = " << ring.gamma(ring.from_int(2)).norm_sq().str() << "\n"
             << "r = 0: " << counts[0] << " element, |Γ|^2 = " << full.str() << "\n"
             << "r in 2T, r != 0: " << counts[1] << " elements, |Γ|^2 = 0\n"
             << "r a unit: " << counts[2] << " elements, |Γ|^2 = " << unit.str() << "\n"
             << "classification: " << (gamma_ok ? "ok" : "FAILED") << "\n"
             << "trace = orbit sum: " << (orbit_ok ? "ok" : "FAILED") << "\n"
             << "trace additivity: " << (linear_ok ? "ok" : "FAILED") << "\n";
        emit(config, out, text.str());
    } else {
        Json rows = Json::array();
        for (std::size_t b = 0; b < q; ++b) {
            Json row = Json::array();
            for (std::size_t a = 0; a < q; ++a) {
                row.push_back(ring.trace(ring.elem(TeichIndex(a), TeichIndex(b))));
            }
            rows.push_back(std::move(row));
        }
        emit(config, out,
             dump(Json{{"field", to_json(*ctx.field)},
                       {"lift", ring.lift_polynomial()},
                       {"trace", std::move(rows)},
                       {"gamma",
                        {{"zero", to_json(full)},
                         {"two_t", to_json(none)},
                         {"unit", to_json(unit)},
                         {"counts", Json::array({counts[0], counts[1], counts[2]})},
                         {"ok", gamma_ok}}},
                       {"trace_matches_orbit", orbit_ok},
                       {"trace_additive", linear_ok},
                       {"ok", ok}}));
    }
    if (!ok) {
        err << "table self-checks failed\n";
        return kExitFailed;
    }
    return kExitOk;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact MUMEB construction and verification over GR(4, 4^s)", "mumeb"};
    app.require_subcommand(1);

    RunConfig config;
    std::string mode = "shortcut";
    std::string budget = "10000000";
    std::string format;

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--s", config.s, "Field degree, q = 2^s")->capture_default_str();
        sub->add_option("--out", config.out, "Write output to PATH");
        sub->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
        sub->add_option("--poly", config.poly_table,
                        "Primitive-polynomial table (JSON {\"s\": [c0..cs]}); overrides MUMEB_POLY_TABLE");
    };
    const auto add_family = [&](CLI::App *sub) {
        sub->add_option("--family", config.family, "symmetric or triple")->capture_default_str();
        sub->add_option("--custom", config.custom, "Family file: list of [alpha, beta, gamma, delta] indices");
    };
    const auto add_verify = [&](CLI::App *sub) {
        sub->add_option("--mode", mode, "shortcut, bruteforce or both")->capture_default_str();
        sub->add_option("--threads", config.threads, "Worker cap (0: all cores)");
    };

    CLI::App *build = app.add_subcommand("build", "Emit the unitaries of a family");
    add_common(build);
    add_family(build);
    build->add_flag("--states", config.states, "Also emit every basis state (s <= 3)");

    CLI::App *verify = app.add_subcommand("verify", "Check a family is a set of MUMEBs");
    add_common(verify);
    add_family(verify);
    add_verify(verify);

    CLI::App *search = app.add_subcommand("search", "Look for larger excluded subsets");
    add_common(search);
    add_verify(search);
    search->add_option("--budget", budget, "Search node budget")->capture_default_str();

    CLI::App *tables = app.add_subcommand("tables", "Print the trace table and character sums");
    add_common(tables);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.mode = parse_verify_mode(mode);
        config.budget = parse_budget(budget);
        if (!format.empty()) {
            config.format = format == "pretty" ? OutputFormat::Pretty : OutputFormat::Json;
        }
        validate(config);
        if (config.command == "build") {
            return cmd_build(config, out, err);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out, err);
        }
        if (config.command == "search") {
            return cmd_search(config, out, err);
        }
        return cmd_tables(config, out, err);
    } catch (const Error &e) {
        err << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace mumeb
