#include "vtypes/cli.hpp"

#include "vtypes/classification.hpp"
#include "vtypes/enumeration.hpp"
#include "vtypes/error.hpp"
#include "vtypes/infinite_family.hpp"
#include "vtypes/membership.hpp"
#include "vtypes/semigroup.hpp"
#include "vtypes/type_system.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace vtypes {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return v.convert_to<long long>();
    }
    return v.str();
}

Json label_names(const TypeSystem& t, const std::vector<int>& labels) {
    Json out = Json::array();
    for (int l : labels) {
        out.push_back(t.name(l));
    }
    return out;
}

Json blocks_json(const LabelDiagram& d, const LabelPartition& p) {
    Json out = Json::array();
    for (const auto& block : p.blocks()) {
        Json b = Json::array();
        for (int l : block) {
            b.push_back(d.names[l]);
        }
        out.push_back(b);
    }
    return out;
}

Json element_json(const PrefixMap& g) {
    Json out = Json::array();
    for (const auto& p : g.pairs()) {
        out.push_back(p.domain.to_string() + "->" + p.range.to_string());
    }
    return out;
}

Json classification_json(const TypeSystem& t, const Classification& c) {
    Json r;
    r["kind"] = kind_name(c.kind);
    if (c.kind == Kind::Multinuclear) {
        r["nucleus_count"] = c.nuclei.size();
    }
    Json nuclei = Json::array();
    for (const auto& n : c.nuclei) {
        nuclei.push_back(label_names(t, n));
    }
    r["nuclei"] = nuclei;
    r["eventual"] = label_names(t, c.eventual);
    r["t"] = c.t;
    r["stable_depth"] = c.stable_depth ? Json(*c.stable_depth) : Json(nullptr);
    if (c.kind == Kind::QuasinuclearAtomic) {
        r["branching"] = c.branching;
        r["Q"] = label_names(t, c.q);
        r["R"] = label_names(t, c.r);
        r["Q_dagger"] = label_names(t, c.q_dagger);
    }
    Json points = Json::array();
    for (const auto& p : c.tail_points) {
        points.push_back(p.to_string());
    }
    r["tail_points"] = points;
    if (c.cycle_word) {
        r["cycle_word"] = c.cycle_word->bits();
    }
    if (c.tail_error) {
        r["tail_error"] = *c.tail_error;
    }
    return r;
}

Json semigroup_json(const TypeSystem& t, const SemigroupInfo& info) {
    Json r;
    r["nucleus"] = label_names(t, info.nucleus);
    Json factors = Json::array();
    for (const auto& f : info.invariant_factors) {
        factors.push_back(big(f));
    }
    r["invariant_factors"] = factors;
    r["free_rank"] = info.free_rank;
    r["h1_rank"] = info.h1_rank;
    r["det"] = big(info.det_i_minus_a);
    r["h0"] = info.h0_string();
    r["abelianization"] = info.abelianization_string();
    r["fix_simple"] = info.fix_simple;
    r["fix_virtually_simple"] = info.fix_virtually_simple;
    return r;
}

void render(const Json& report, bool as_json, std::ostream& out) {
    if (as_json) {
        out << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (key == "version") {
            continue;
        }
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

struct Loaded {
    TypeSystem system;
    std::vector<std::string> warnings;
};

Loaded load_system(const std::string& path) {
    std::vector<std::string> warnings;
    LabelDiagram d = parse_diagram(read_file(path), &warnings);
    return {TypeSystem::validate(std::move(d)), std::move(warnings)};
}

Json base_report(const std::string& command, const std::vector<std::string>& warnings = {}) {
    Json r;
    r["version"] = kVersion;
    r["command"] = command;
    if (!warnings.empty()) {
        r["diagnostics"] = warnings;
    }
    return r;
}

std::size_t sampled_reducedness_failures(const TypeSystem& t, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<int> bit(0, 1);
    auto random_address = [&] {
        std::string s(len(rng), '0');
        for (auto& ch : s) {
            ch = bit(rng) ? '1' : '0';
        }
        return Address::from_bits(s);
    };
    std::size_t failures = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Address a = random_address();
        const Address b = random_address();
        const bool same = t.type_of(a) == t.type_of(b);
        const bool kids_same = t.type_of(a.child(0)) == t.type_of(b.child(0)) &&
                               t.type_of(a.child(1)) == t.type_of(b.child(1));
        if (same != kids_same) {
            ++failures;
        }
    }
    return failures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Type systems on Cantor space and their stabilizers in Thompson's group V", "vtypes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t seed = 1;
    int max_carets = kDefaultBudget;
    app.add_flag("--json", as_json, "Emit a JSON report");
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_option("--max-carets", max_carets, "Caret budget for matched decompositions")->check(CLI::NonNegativeNumber);
    app.set_version_flag("--version", kVersion);

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Label diagram (.lts)")->required(); };

    auto* validate_cmd = app.add_subcommand("validate", "Check that a diagram is a reduced type system");
    add_file(validate_cmd);
    std::size_t samples = 0;
    validate_cmd->add_option("--samples", samples, "Random address pairs to spot-check");

    auto* reduce_cmd = app.add_subcommand("reduce", "Compute the canonical reduced quotient");
    add_file(reduce_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Classify the type system");
    add_file(classify_cmd);

    auto* simple_cmd = app.add_subcommand("simple", "Decide simplicity");
    add_file(simple_cmd);

    auto* semigroup_cmd = app.add_subcommand("semigroup", "Invariants of S(P) and Fix(V,P)");
    add_file(semigroup_cmd);

    auto* member_cmd = app.add_subcommand("member", "Membership of an element in Fix and Stab");
    add_file(member_cmd);
    std::string element_file;
    bool only_fix = false;
    bool only_stab = false;
    bool deep = false;
    member_cmd->add_option("--element", element_file, "Element of V (.vel)")->required();
    member_cmd->add_flag("--fix", only_fix, "Test Fix only");
    member_cmd->add_flag("--stab", only_stab, "Test Stab only");
    member_cmd->add_flag("--deep", deep, "Re-check Fix pointwise three levels deeper");

    auto* witness_cmd = app.add_subcommand("witness", "Build g in Fix with alpha->alpha2 and beta->beta2");
    add_file(witness_cmd);
    std::vector<std::string> witness_args;
    witness_cmd->add_option("addresses", witness_args, "ALPHA ALPHA2 BETA BETA2")->required()->expected(4);

    auto* type_cmd = app.add_subcommand("type", "Type of an address");
    add_file(type_cmd);
    std::string address;
    type_cmd->add_option("address", address, "Binary word, or e for the empty word")->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "Smallest quotient identifying two labels");
    add_file(quotient_cmd);
    std::vector<std::string> pair;
    quotient_cmd->add_option("labels", pair, "P Q")->required()->expected(2);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Census of small type systems");
    int max_labels = 3;
    bool simple_only = false;
    std::string csv_path;
    enumerate_cmd->add_option("--max-labels", max_labels, "Largest label count")->required()->check(CLI::Range(1, 7));
    enumerate_cmd->add_flag("--simple-only", simple_only, "Keep only simple systems in the census");
    enumerate_cmd->add_option("--csv", csv_path, "Write the census as CSV");

    auto* family_cmd = app.add_subcommand("family", "The family P(a) for an increasing sequence a");
    std::string seq_text;
    std::optional<std::uint64_t> tail_step;
    std::vector<std::string> family_action;
    family_cmd->add_option("--seq", seq_text, "Comma-separated prefix a_0,a_1,...")->required();
    family_cmd->add_option("--tail-step", tail_step, "Continue arithmetically with this step");
    family_cmd->add_option("action", family_action, "type ADDR | witness I J K | dot DEPTH")->required();

    auto* graph_cmd = app.add_subcommand("graph", "Type graph");
    add_file(graph_cmd);
    bool dot = false;
    bool nucleus_only = false;
    graph_cmd->add_flag("--dot", dot, "Print DOT to stdout");
    graph_cmd->add_flag("--nucleus", nucleus_only, "Restrict to the nucleus (nuclear systems)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        if (validate_cmd->parsed()) {
            std::vector<std::string> warnings;
            LabelDiagram d = parse_diagram(read_file(file), &warnings);
            Json r = base_report("validate", warnings);
            r["labels"] = d.size();
            try {
                TypeSystem t = TypeSystem::validate(d);
                r["reduced"] = true;
                r["canonical_form"] = canonical_form(t.diagram());
                if (samples > 0) {
                    r["sampled_pairs"] = samples;
                    r["sample_failures"] = sampled_reducedness_failures(t, samples, seed);
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ReducednessViolation) {
                    throw;
                }
                r["reduced"] = false;
                r["violation"] = e.what();
            }
            render(r, as_json, out);
        } else if (reduce_cmd->parsed()) {
            std::vector<std::string> warnings;
            LabelDiagram d = parse_diagram(read_file(file), &warnings);
            Quotient q = reduce(d);
            Json r = base_report("reduce", warnings);
            r["labels"] = q.system.size();
            r["merged"] = !q.partition.is_identity();
            r["blocks"] = blocks_json(d, q.partition);
            r["diagram"] = format_diagram(q.system.diagram());
            render(r, as_json, out);
        } else if (classify_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            Json r = base_report("classify", warnings);
            const Json body = classification_json(t, classify(t));
            for (const auto& [k, v] : body.items()) {
                r[k] = v;
            }
            render(r, as_json, out);
        } else if (simple_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            Simplicity s = is_simple(t);
            Json r = base_report("simple", warnings);
            r["simple"] = s.simple;
            if (s.witness) {
                r["witness_blocks"] = blocks_json(t.diagram(), s.witness->partition);
            }
            render(r, as_json, out);
        } else if (semigroup_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            const Classification c = classify(t);
            const auto infos = semigroup_info(t, c);
            Json r = base_report("semigroup", warnings);
            r["kind"] = kind_name(c.kind);
            if (c.kind == Kind::Nuclear) {
                const Json body = semigroup_json(t, infos.front());
                for (const auto& [k, v] : body.items()) {
                    r[k] = v;
                }
            } else {
                Json per = Json::array();
                for (const auto& info : infos) {
                    per.push_back(semigroup_json(t, info));
                }
                r["per_nucleus"] = per;
            }
            render(r, as_json, out);
        } else if (member_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            const PrefixMap g = normalize(parse_element(read_file(element_file)));
            Json r = base_report("member", warnings);
            r["element"] = element_json(g);
            const bool both = !only_fix && !only_stab;
            if (only_fix || both) {
                r["fix"] = in_fix(t, g);
                if (deep) {
                    r["fix_deep"] = in_fix_deep(t, g);
                }
            }
            if (only_stab || both) {
                const StabVerdict v = in_stab(t, g);
                r["stab"] = v.member;
                Json rel = Json::array();
                for (auto [a, b] : v.relation.pairs) {
                    rel.push_back(Json::array({t.name(a), t.name(b)}));
                }
                r["relation"] = rel;
                if (v.member) {
                    const auto image = induced_class_permutation(t, g);
                    Json perm = Json::object();
                    for (std::size_t l = 0; l < image.size(); ++l) {
                        if (image[l] >= 0) {
                            perm[t.name(static_cast<int>(l))] = t.name(image[l]);
                        }
                    }
                    r["class_permutation"] = perm;
                }
            }
            render(r, as_json, out);
        } else if (witness_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            const Classification c = classify(t);
            const PrefixMap g =
                witness_conjugator(t, c, Address::parse(witness_args[0]), Address::parse(witness_args[1]),
                                   Address::parse(witness_args[2]), Address::parse(witness_args[3]), max_carets);
            Json r = base_report("witness", warnings);
            r["element"] = element_json(g);
            r["in_fix"] = in_fix(t, g);
            render(r, as_json, out);
        } else if (type_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            Json r = base_report("type", warnings);
            r["address"] = Address::parse(address).to_string();
            r["type"] = t.name(t.type_of(Address::parse(address)));
            render(r, as_json, out);
        } else if (quotient_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            const int p = t.index_of(pair[0]);
            const int q = t.index_of(pair[1]);
            if (p == q) {
                throw Error(ErrorCode::PreconditionViolated, "the two labels must differ");
            }
            Quotient quo = quotient_by_pair(t, p, q);
            Json r = base_report("quotient", warnings);
            r["labels"] = quo.system.size();
            r["universal"] = quo.partition.block_count == 1;
            r["blocks"] = blocks_json(t.diagram(), quo.partition);
            r["diagram"] = format_diagram(quo.system.diagram());
            render(r, as_json, out);
        } else if (enumerate_cmd->parsed()) {
            const Census census = build_census(max_labels, simple_only);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) {
                    throw Error(ErrorCode::SyntaxError, "cannot write '" + csv_path + "'");
                }
                csv << census_csv(census);
            }
            const auto verdicts = verify_classification(census);
            const auto stable = verify_stable_subset_counts(census);
            Json r = base_report("enumerate");
            r["max_labels"] = max_labels;
            r["systems"] = census.rows.size();
            r["simple_systems"] = verdicts.simple_systems;
            r["classification"] = verdicts.counts;
            r["classification_violations"] = verdicts.violations;
            r["stable_subset_counts"] = stable.counts;
            r["stable_subset_violations"] = stable.violations;
            render(r, as_json, out);
        } else if (family_cmd->parsed()) {
            const IncreasingSeq a = IncreasingSeq::parse(seq_text, tail_step);
            const std::string& action = family_action.front();
            auto arity = [&](std::size_t n) {
                if (family_action.size() != n + 1) {
                    throw Error(ErrorCode::SyntaxError, "'" + action + "' takes " + std::to_string(n) + " argument(s)");
                }
            };
            auto number = [](const std::string& s) {
                try {
                    return static_cast<std::uint64_t>(std::stoull(s));
                } catch (const std::exception&) {
                    throw Error(ErrorCode::SyntaxError, "not a number: '" + s + "'");
                }
            };
            Json r = base_report("family");
            if (action == "type") {
                arity(1);
                r["address"] = Address::parse(family_action[1]).to_string();
                r["type"] = family_type_of(a, Address::parse(family_action[1]));
            } else if (action == "witness") {
                arity(3);
                const auto i = number(family_action[1]);
                const auto j = number(family_action[2]);
                const auto k = number(family_action[3]);
                const auto w = identification_witness(a, i, j, k);
                r["m"] = w.m;
                r["r"] = w.r;
                r["path"] = w.path().to_string();
                r["from_i"] = family_type_from(a, i, w.path());
                r["from_j"] = family_type_from(a, j, w.path());
                r["differences"] = w.differences;
            } else if (action == "dot") {
                arity(1);
                out << export_dot(truncated_diagram(a, number(family_action[1])));
                return kExitOk;
            } else {
                throw Error(ErrorCode::SyntaxError, "unknown family action '" + action + "'");
            }
            render(r, as_json, out);
        } else if (graph_cmd->parsed()) {
            auto [t, warnings] = load_system(file);
            const TypeGraph g = nucleus_only ? nucleus_graph(classify(t), t) : type_graph(t);
            if (dot) {
                out << export_dot(g);
                return kExitOk;
            }
            Json r = base_report("graph", warnings);
            r["vertices"] = g.names;
            r["edges"] = 2 * g.edges.size();
            Json adj = Json::array();
            for (const auto& row : adjacency_matrix(g)) {
                Json jr = Json::array();
                for (const auto& v : row) {
                    jr.push_back(big(v));
                }
                adj.push_back(jr);
            }
            r["adjacency"] = adj;
            render(r, as_json, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::SearchExhausted ? kExitSearchExhausted : kExitInputError;
    }
    return kExitOk;
}

}  // namespace vtypes
